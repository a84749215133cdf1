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

#ifndef GPAULI_SIGNS_HPP
#define GPAULI_SIGNS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gpauli/diagnostics.hpp"
#include "gpauli/gaussian.hpp"

namespace gpauli {

using SignMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using SignVector = std::vector<int>;
using Matching = std::vector<std::pair<int, int>>;

/// (Sigma, Sigma') for L sites. Indices are 0-based; 0..L-1 label bra sites,
/// L..2L-1 label ket sites.
struct SignPair {
    int sites = 0;
    SignMatrix sigma;
    SignMatrix sigma_prime;
    /// Sigma_ij = p_i p_j for i < j, when Sigma has that form.
    std::optional<SignVector> p;

    bool operator==(const SignPair &other) const {
        return sites == other.sites && sigma == other.sigma && sigma_prime == other.sigma_prime;
    }
};

inline constexpr int kMaxEnumerationSites = 6;

/// +1 when L mod 4 is 0 or 1, -1 otherwise: the sign every perfect-matching
/// product of Sigma must take, and the required product of a p-vector.
int required_matching_sign(int sites);

/// Sigma from the L mod 4 rule, Sigma' from the superdiagonal recurrence.
SignPair canonical_pair(int sites);

/// Sigma' from Sigma through the three index-range relations.
SignMatrix sigma_prime_from_sigma(const SignMatrix &sigma, int sites);

/// Sigma' built by the first-superdiagonal rule and its recurrence.
SignMatrix sigma_prime_recurrence(int sites);

/// Throws ValidationError for wrong length, entries outside {+1,-1} or a
/// product of the wrong sign.
SignPair from_p_vector(const SignVector &p, int sites);

/// All distinct valid pairs reachable from the canonical pair by diagonal
/// conjugation plus the odd/even fixups, in order of the generating p-vector
/// (p_1 = +1, remaining bits little-endian). Throws GuardError above
/// kMaxEnumerationSites.
std::vector<SignPair> enumerate_pairs(int sites);

/// The same pair with every entry negated.
SignPair negated(const SignPair &pair);

/// Recovers p with p_1 = +1 when Sigma_ij = p_i p_j holds for all i < j.
std::optional<SignVector> recover_p_vector(const SignMatrix &sigma);

/// Calls `visit` once per perfect matching of {0..n-1}. n must be even.
void for_each_perfect_matching(int n, const std::function<void(const Matching &)> &visit);

/// Product of sigma(i, j) over the pairs (i < j) of a matching.
int matching_product(const SignMatrix &sigma, const Matching &matching);

struct PairValidationOptions {
    int trials = 64;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    /// Matchings checked at random above this many sites.
    int exhaustive_matching_sites = 6;
    int sampled_matchings = 2000;
};

/// Structural checks only: shape, antisymmetry, +-1 entries, Sigma'
/// relations, and the perfect-matching product sign.
Diagnostics structural_checks(const SignPair &pair, const PairValidationOptions &opt = {});

/// Structural checks plus the functional check: the sigma^z Pfaffian formula
/// with this pair against the computational-basis formula on `trials` random
/// spin configurations (all 4^L when trials >= 4^L). The first mismatching
/// configuration is recorded in Diagnostics::detail.
Diagnostics validate_pair(const SignPair &pair, const GaussianSpec &spec, const PairValidationOptions &opt = {});

}  // namespace gpauli

#endif
