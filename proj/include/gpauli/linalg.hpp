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

#ifndef GPAULI_LINALG_HPP
#define GPAULI_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gpauli {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kAntisymmetryTol = 1e-10;
inline constexpr double kBranchTol = 1e-8;

/// Largest entry magnitude; 0 for an empty matrix.
double max_abs(const ComplexMatrix &A);

/// max |A + A^T|.
double antisymmetry_residual(const ComplexMatrix &A);

/// Antisymmetric within tol * max(1, max|A|).
bool is_antisymmetric(const ComplexMatrix &A, double tol = kAntisymmetryTol);

/// Pfaffian by Parlett-Reid tridiagonalization with partial pivoting.
///
/// Empty matrix gives 1 and odd dimension gives 0. Throws ValidationError
/// for non-square input or when the antisymmetry residual exceeds
/// tol * max(1, max|A|).
Complex pfaffian(const ComplexMatrix &A, double tol = kAntisymmetryTol);

/// Throws NumericalError if the result is not finite.
ComplexMatrix matrix_exp(const ComplexMatrix &A);

/// Principal logarithm. Throws DecompositionError for (numerically) singular
/// input and BranchError when an eigenvalue lies within branch_tol (relative
/// to its modulus) of the closed negative real axis.
ComplexMatrix matrix_log_principal(const ComplexMatrix &A, double branch_tol = kBranchTol);

Complex determinant(const ComplexMatrix &A);

/// Rows and columns of A restricted to `keep` (0-based, strictly ascending).
ComplexMatrix submatrix_keep(const ComplexMatrix &A, const std::vector<int> &keep);

/// Rows `rows` and columns `cols` of A, both strictly ascending.
ComplexMatrix submatrix(const ComplexMatrix &A, const std::vector<int> &rows, const std::vector<int> &cols);

ComplexMatrix commutator(const ComplexMatrix &A, const ComplexMatrix &B);

/// 1 / (condition number in the 2-norm); 0 for singular input.
double reciprocal_condition(const ComplexMatrix &A);

}  // namespace gpauli

#endif
