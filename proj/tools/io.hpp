// Copyright 2026 The gpauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPAULI_TOOLS_IO_HPP
#define GPAULI_TOOLS_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpauli/elements.hpp"
#include "gpauli/gaussian.hpp"
#include "gpauli/signs.hpp"

namespace gpauli::io {

using json = nlohmann::json;

/// Complex numbers are [re, im]; a bare number is read as real.
json to_json(Complex z);
Complex complex_from_json(const json &j);

json matrix_to_json(const ComplexMatrix &M);
ComplexMatrix matrix_from_json(const json &j);
RealMatrix real_matrix_from_json(const json &j);

/// {"L", "kind", "M"} or {"L", "kind": "particle_conserving", "A"}.
json spec_to_json(const GaussianSpec &spec);
GaussianSpec spec_from_json(const json &j);

/// {"L", "p", "sigma", "sigma_prime"}; "p" is null when absent.
json pair_to_json(const SignPair &pair);
SignPair pair_from_json(const json &j);

struct Basis {
    std::vector<SiteAngles> bra;
    std::vector<SiteAngles> ket;
};

/// {"sites": [...], "ket_sites": [...]} where each site is
/// {"phi", "theta", "alpha"} or one of "x", "y", "z". Without "ket_sites"
/// the ket shares the bra basis.
Basis basis_from_json(const json &j, int sites);
/// A string of x/y/z letters, one per site, site 1 first.
Basis basis_from_letters(const std::string &letters, int sites);

/// '+' (up) / '-' (down) per site, site 1 leftmost. The Unicode minus sign
/// is accepted as well.
std::vector<int> parse_spins(const std::string &s);
std::string format_spins(const std::vector<int> &spins);
/// '1' = up, '0' = down, site 1 leftmost.
std::string binary_label(std::uint64_t mask, int sites);

json read_json_file(const std::string &path);
void write_text(const std::string &path, const std::string &text);

/// FNV-1a over the canonical JSON dump.
std::uint64_t fnv1a(const std::string &bytes);
std::string hex64(std::uint64_t v);
std::string spec_hash(const GaussianSpec &spec);
std::string pair_id(const SignPair &pair);

}  // namespace gpauli::io

#endif
