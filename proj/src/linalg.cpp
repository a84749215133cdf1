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

#include "gpauli/linalg.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

void require_square(const ComplexMatrix &A, const char *op) {
    if (A.rows() != A.cols()) {
        std::ostringstream msg;
        msg << op << ": expected a square matrix, got " << A.rows() << "x" << A.cols();
        throw ValidationError(msg.str());
    }
}

void require_ascending(const std::vector<int> &idx, Eigen::Index bound, const char *what) {
    for (size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= bound) {
            std::ostringstream msg;
            msg << "submatrix: " << what << " index " << idx[k] << " out of range [0, " << bound << ")";
            throw ValidationError(msg.str());
        }
        if (k > 0 && idx[k] <= idx[k - 1]) {
            throw ValidationError(std::string("submatrix: ") + what + " indices must be strictly ascending");
        }
    }
}

}  // namespace

double max_abs(const ComplexMatrix &A) {
    return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

double antisymmetry_residual(const ComplexMatrix &A) {
    require_square(A, "antisymmetry_residual");
    return A.size() == 0 ? 0.0 : (A + A.transpose()).cwiseAbs().maxCoeff();
}

bool is_antisymmetric(const ComplexMatrix &A, double tol) {
    if (A.rows() != A.cols()) return false;
    return antisymmetry_residual(A) <= tol * std::max(1.0, max_abs(A));
}

Complex pfaffian(const ComplexMatrix &A_in, double tol) {
    require_square(A_in, "pfaffian");
    double residual = antisymmetry_residual(A_in);
    double scale = std::max(1.0, max_abs(A_in));
    if (residual > tol * scale) {
        std::ostringstream msg;
        msg << "pfaffian: matrix is not antisymmetric (max|A + A^T| = " << residual << ")";
        throw ValidationError(msg.str());
    }
    const Eigen::Index n = A_in.rows();
    if (n == 0) return 1.0;
    if (n % 2 == 1) return 0.0;

    ComplexMatrix A = A_in;
    Complex result = 1.0;
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index pivot;
        A.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&pivot);
        pivot += k + 1;
        if (pivot != k + 1) {
            A.row(k + 1).swap(A.row(pivot));
            A.col(k + 1).swap(A.col(pivot));
            result = -result;
        }
        if (A(k + 1, k) == Complex(0.0)) return 0.0;
        result *= A(k, k + 1);
        Eigen::Index rest = n - k - 2;
        if (rest > 0) {
            ComplexVector tau = A.row(k).tail(rest).transpose() / A(k, k + 1);
            ComplexVector v = A.col(k + 1).tail(rest);
            A.bottomRightCorner(rest, rest) += tau * v.transpose() - v * tau.transpose();
        }
    }
    return result;
}

ComplexMatrix matrix_exp(const ComplexMatrix &A) {
    require_square(A, "matrix_exp");
    if (!A.allFinite()) throw NumericalError("matrix_exp: input has non-finite entries");
    ComplexMatrix result = A.exp();
    if (!result.allFinite()) {
        std::ostringstream msg;
        msg << "matrix_exp: overflow (input max|A| = " << max_abs(A) << ")";
        throw NumericalError(msg.str());
    }
    return result;
}

ComplexMatrix matrix_log_principal(const ComplexMatrix &A, double branch_tol) {
    require_square(A, "matrix_log_principal");
    if (A.size() == 0) return A;
    Eigen::ComplexEigenSolver<ComplexMatrix> eig(A, false);
    if (eig.info() != Eigen::Success) throw DecompositionError("matrix_log_principal: eigensolver failed");
    double scale = std::max(1.0, max_abs(A));
    for (const Complex &lambda : eig.eigenvalues()) {
        double r = std::abs(lambda);
        if (r <= 1e-14 * scale) {
            throw DecompositionError("matrix_log_principal: matrix is singular");
        }
        if (lambda.real() < 0.0 && std::abs(lambda.imag()) <= branch_tol * r) {
            std::ostringstream msg;
            msg << "matrix_log_principal: eigenvalue " << lambda.real() << (lambda.imag() < 0 ? "" : "+")
                << lambda.imag() << "i lies on the branch cut";
            throw BranchError(msg.str());
        }
    }
    ComplexMatrix result = A.log();
    if (!result.allFinite()) throw NumericalError("matrix_log_principal: non-finite result");
    return result;
}

Complex determinant(const ComplexMatrix &A) {
    require_square(A, "determinant");
    if (A.size() == 0) return 1.0;
    return A.partialPivLu().determinant();
}

ComplexMatrix submatrix_keep(const ComplexMatrix &A, const std::vector<int> &keep) {
    require_square(A, "submatrix_keep");
    return submatrix(A, keep, keep);
}

ComplexMatrix submatrix(const ComplexMatrix &A, const std::vector<int> &rows, const std::vector<int> &cols) {
    require_ascending(rows, A.rows(), "row");
    require_ascending(cols, A.cols(), "column");
    ComplexMatrix out(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < cols.size(); ++j) out(i, j) = A(rows[i], cols[j]);
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &A, const ComplexMatrix &B) {
    require_square(A, "commutator");
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw ValidationError("commutator: shape mismatch");
    }
    return A * B - B * A;
}

double reciprocal_condition(const ComplexMatrix &A) {
    require_square(A, "reciprocal_condition");
    if (A.size() == 0) return 1.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(A);
    const auto &s = svd.singularValues();
    double smax = s(0);
    if (smax == 0.0) return 0.0;
    return s(s.size() - 1) / smax;
}

}  // namespace gpauli
