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

#ifndef GPAULI_ELEMENTS_HPP
#define GPAULI_ELEMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gpauli/gaussian.hpp"
#include "gpauli/signs.hpp"

namespace gpauli {

/// Occupied modes of the bra (J1) and ket (I1), 0-based and ascending.
struct OccupationSets {
    int sites = 0;
    std::vector<int> bra_occupied;
    std::vector<int> ket_occupied;

    /// Bit l of a mask marks site l occupied.
    static OccupationSets from_masks(int sites, std::uint64_t bra_mask, std::uint64_t ket_mask);

    std::vector<int> bra_empty() const;
    std::vector<int> ket_empty() const;
};

/// Local basis angles. The z basis is (0,0,0); see axis_angles().
struct SiteAngles {
    double phi = 0.0;
    double theta = 0.0;
    double alpha = 0.0;
};

/// Spins are +1 (up, occupied) or -1 (down, empty), site 0 first.
///
/// Bra and ket may carry different local bases. With equal angles on both
/// sides this is the shared-basis element <S|U G U^dag|S'>; in general it is
/// <S|U_bra G U_ket^dag|S'>.
struct SpinConfiguration {
    int sites = 0;
    std::vector<int> bra;
    std::vector<int> ket;
    std::vector<SiteAngles> bra_angles;
    std::vector<SiteAngles> ket_angles;

    /// z basis; bit l set means spin up at site l.
    static SpinConfiguration from_masks(int sites, std::uint64_t bra_mask, std::uint64_t ket_mask);
    static SpinConfiguration shared(std::vector<int> bra, std::vector<int> ket, std::vector<SiteAngles> angles);

    std::uint64_t bra_mask() const;
    std::uint64_t ket_mask() const;
    /// Every theta is exactly 0, so the element obeys the parity selection rule.
    bool diagonal_basis() const;
    /// Throws ValidationError on size mismatch or spins outside {+1,-1}.
    void check() const;
};

enum class Axis { x, y, z };

Axis parse_axis(char c);
char axis_label(Axis a);
/// z -> (0,0,0), x -> (0, pi/2, 0), y -> (pi/2, pi/2, 0).
SiteAngles axis_angles(Axis a);

/// <J|G|I> in the occupation basis. Exactly 0 when |I1| + |J1| is odd.
Complex element_computational(const BlockDecomposition &bd, const OccupationSets &occ);

/// det of e^A restricted to rows J1 and columns I1 (i.e. with rows J0 and
/// columns I0 deleted); exactly 0 when |I1| != |J1|.
Complex element_particle_conserving(const ComplexMatrix &hopping, const OccupationSets &occ);

/// Kernel of the sigma^z formula. Requires a z-basis configuration.
ComplexMatrix kernel_sigma_z(const BlockDecomposition &bd, const SignPair &pair, const SpinConfiguration &cfg);
Complex element_sigma_z(const BlockDecomposition &bd, const SignPair &pair, const SpinConfiguration &cfg);

/// Kernel for arbitrary per-site Pauli bases, each index using its own
/// side's angles (phi enters with + on the bra side, - on the ket side).
ComplexMatrix kernel_pauli(const BlockDecomposition &bd, const SignPair &pair, const SpinConfiguration &cfg);

/// exp(-i(sum_{bra down} alpha - sum_{ket down} alpha)) *
/// exp(i(sum phi_ket - sum phi_bra)) * amplitude * pf(kernel_pauli).
/// The phi phase is 1 when bra and ket share their angles. Exactly 0 for
/// parity-forbidden entries of a diagonal basis.
Complex element_pauli(const BlockDecomposition &bd, const SignPair &pair, const SpinConfiguration &cfg);

/// Kernel for a homogeneous bra axis mu and ket axis nu, assembled from
/// the per-axis closed forms.
ComplexMatrix kernel_special(Axis bra_axis, Axis ket_axis, const BlockDecomposition &bd, const SignPair &pair,
                             const std::vector<int> &bra, const std::vector<int> &ket);

/// amplitude * pf(K(lambda)), K_mn = Sigma_mn A_mn + Sigma'_mn lambda_m lambda_n.
/// lambda_m for m < L weights an empty bra site m, lambda_{L+j} an empty ket
/// site j.
Complex generating_function(const BlockDecomposition &bd, const SignPair &pair, const ComplexVector &lambda);

/// det[(I - D G) / 2] with D = diag(-1 on occupied sites, +1 on empty ones).
/// config entries are +1 (occupied) or -1 (empty).
double diagonal_probability(const RealMatrix &G, const std::vector<int> &config);

}  // namespace gpauli

#endif
