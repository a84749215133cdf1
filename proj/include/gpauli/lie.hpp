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

#ifndef GPAULI_LIE_HPP
#define GPAULI_LIE_HPP

#include <string>
#include <utility>
#include <vector>

#include "gpauli/diagnostics.hpp"
#include "gpauli/linalg.hpp"
#include "gpauli/signs.hpp"

// so(2L) checks on sign matrices. Indices in this module are 1-based, like
// the closed-form expressions they are compared against.

namespace gpauli {

/// (X_ab)_ts = delta_at delta_bs - delta_as delta_bt, a != b, 1-based.
RealMatrix generator(int a, int b, int n);

/// X_ab for all a < b, in row-major order of (a, b). L(2L-1) of them for n = 2L.
std::vector<RealMatrix> so_generators(int n);

RealMatrix to_real(const SignMatrix &s);

/// Dimension of the smallest commutator-closed subspace containing the
/// seeds. Throws ValidationError for non-antisymmetric or mismatched seeds.
int closure_dimension(const std::vector<RealMatrix> &seeds, double rel_tol = 1e-9);

struct OrthogonalFrame {
    int sites = 0;
    /// Columns phi^(1), psi^(1), ..., phi^(L), psi^(L).
    RealMatrix g0;
    /// diag(p).
    RealMatrix P;
    /// P * g0.
    RealMatrix g;
};

OrthogonalFrame orthogonal_frame(int sites, const SignVector &p);
/// Frame with P = I.
OrthogonalFrame orthogonal_frame(int sites);

/// omega_k = -cot((2k - 1) pi / 4L), k = 1..L.
std::vector<double> cartan_frequencies(int sites);

/// direct sum of [[0, w_k], [-w_k, 0]].
RealMatrix block_form(const std::vector<double> &omega);

/// Eigenvalues of sigma against {+-i omega_k} ("eigenvalue_dev"), pairwise
/// distinctness ("min_eigen_gap", lower bound) and, writing sigma as
/// eta * P Sigma_1 P with Sigma_1 the all-ones upper triangle and eta = +-1,
/// g^T (eta sigma) g against block_form ("block_dev"). Throws
/// ValidationError when sigma has no such form.
Diagnostics spectrum_check(const SignMatrix &sigma, int sites, double tol = 1e-10);

/// [sigma_tilde, X_{2i-1,2i}] = 0 for i = 1..L ("cartan_commutator"), and
/// the smallest commutator norm over every other generator ("min_other",
/// lower bound).
Diagnostics centralizer_check(const RealMatrix &sigma_tilde, int sites, double tol = 1e-12);

/// sgn(i, j) = (-1)^{f(i,j)} for i < j, antisymmetric, 1-based.
int overlap_sign(int i, int j, int sites);
RealMatrix overlap_sign_matrix(int sites);

/// <A, B> = sum_{p<q} conj(A_pq) B_pq.
Complex hs_inner(const ComplexMatrix &A, const ComplexMatrix &B);

/// Simple-root element E_{alpha_l}, l = 1..L.
ComplexMatrix simple_root(int l, int sites);

struct RootOverlap {
    int l = 0;
    Complex direct;       // <E_l, g0^T S g0>
    Complex fourier;      // the double Fourier sum over S
    Complex closed_form;  // trigonometric closed form
};

/// Throws ValidationError for L < 2.
std::vector<RootOverlap> root_overlaps(int sites);

/// Route agreement ("route_dev") and non-vanishing ("min_abs", lower bound).
Diagnostics overlap_checks(const std::vector<RootOverlap> &overlaps, double tol = 1e-10, double floor = 1e-8);

/// Sigma and Sigma' for L = 2 from their printed so(4) generator expansions.
std::pair<RealMatrix, RealMatrix> so4_expansion();

/// The closed L = 2 commutator table, with Sigma_3..Sigma_6 defined from
/// the pair. One check per relation, tolerance relative to the largest
/// entry of the left-hand side.
Diagnostics l2_commutator_table_check(const SignPair &pair, double tol = 1e-10);

}  // namespace gpauli

#endif
