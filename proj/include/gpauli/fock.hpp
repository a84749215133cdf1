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

#ifndef GPAULI_FOCK_HPP
#define GPAULI_FOCK_HPP

#include <cstdint>
#include <vector>

#include "gpauli/elements.hpp"
#include "gpauli/gaussian.hpp"

// Dense reference implementation on the 2^L-dimensional Fock space.
//
// Basis index: bit l is the occupation of site l (site 0 least significant).
// Occupied maps to spin up, so a spin configuration's index is its up-mask.

namespace gpauli {

inline constexpr int kMaxOracleSites = 10;
inline constexpr int kMaxOracleExpSites = 8;

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

struct DenseOperator {
    int sites = 0;
    ComplexMatrix matrix;
};

/// c_1..c_L with c_l = prod_{j<l}(-sigma^z_j) sigma^-_l, integer entries.
/// Throws GuardError for L > 10.
std::vector<IntMatrix> jw_operators(int sites);

/// exp(log_scale) * exp(1/2 (c^dag, c) M (c; c^dag)). Throws GuardError for
/// L > 8.
DenseOperator build_gaussian(const GaussianSpec &spec);

/// U(phi, theta, alpha) in the (up, down) ordering.
Eigen::Matrix2cd local_rotation(const SiteAngles &a);

/// Tensor product of local_rotation() over sites, in the Fock index order.
DenseOperator rotation(const std::vector<SiteAngles> &angles);

/// U_bra G U_ket^dag.
DenseOperator rotate(const DenseOperator &op, const std::vector<SiteAngles> &bra_angles,
                     const std::vector<SiteAngles> &ket_angles);

/// <S| U_bra G U_ket^dag |S'>.
Complex element_oracle(const DenseOperator &op, const SpinConfiguration &cfg);
Complex element_oracle(const GaussianSpec &spec, const SpinConfiguration &cfg);

/// G_jk = tr[rho (c_j^dag - c_j)(c_k^dag + c_k)] with rho = G / tr G.
ComplexMatrix correlation_oracle(const GaussianSpec &spec);

}  // namespace gpauli

#endif
