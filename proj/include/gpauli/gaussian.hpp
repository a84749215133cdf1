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

#ifndef GPAULI_GAUSSIAN_HPP
#define GPAULI_GAUSSIAN_HPP

#include <optional>
#include <string>

#include "gpauli/diagnostics.hpp"
#include "gpauli/linalg.hpp"

namespace gpauli {

enum class OperatorKind { generic, mixed_hermitian, particle_conserving };

std::string to_string(OperatorKind kind);
OperatorKind parse_operator_kind(const std::string &name);

/// G = exp(log_scale) * exp(1/2 (c^dag, c) M (c; c^dag)) on L modes.
///
/// `log_scale` is zero except for particle-conserving specs, where it is
/// tr(A)/2 so that G equals exp(c^dag A c) exactly.
struct GaussianSpec {
    int sites = 0;
    ComplexMatrix M;
    OperatorKind kind = OperatorKind::generic;
    std::optional<ComplexMatrix> hopping;
    Complex log_scale = 0.0;

    static GaussianSpec generic(ComplexMatrix M);
    static GaussianSpec mixed(ComplexMatrix M);
    /// Embeds exp(c^dag A c) as M = diag(A, -A^T).
    static GaussianSpec particle_conserving(ComplexMatrix A);
};

/// Xi = [[0, I], [I, 0]] of size 2L.
ComplexMatrix xi_matrix(int sites);

/// Residual checks "xi_antisymmetry" (and "hermiticity" for mixed specs,
/// "hopping_embedding" for particle-conserving ones). Thresholds are
/// tol * max(1, max|M|). Throws ValidationError on shape mismatch.
Diagnostics validate(const GaussianSpec &spec, double tol = kAntisymmetryTol);

/// Throws ValidationError carrying the diagnostics if validate() fails.
void require_valid(const GaussianSpec &spec, double tol = kAntisymmetryTol);

struct BlockDecomposition {
    int sites = 0;
    ComplexMatrix T11, T12, T21, T22;
    ComplexMatrix X, Y, Z;
    ComplexMatrix exp_Y;
    /// det(T22)^{1/2} on the branch continued from M = 0 along e^{tM}, i.e.
    /// the vacuum amplitude <0|G|0> / weight. Equals exp(-tr Y / 2) unless
    /// the eigenvalues of T22 wind around the origin along that path.
    Complex prefactor = 1.0;
    /// exp(log_scale) of the originating spec.
    Complex weight = 1.0;
    /// [[X, e^Y], [-e^{Y^T}, Z]].
    ComplexMatrix kernel;

    /// weight * prefactor: the scalar in front of every Pfaffian.
    Complex amplitude() const { return weight * prefactor; }
};

inline constexpr double kMaxT22Condition = 1e12;

/// Throws ValidationError (invalid spec), DecompositionError (T22 singular
/// or cond(T22) > 1e12) or BranchError (T22^T has an eigenvalue on the
/// negative real axis).
BlockDecomposition decompose(const GaussianSpec &spec, double tol = kAntisymmetryTol);

/// Residuals of the BlockDecomposition invariants, relative to the scale of
/// the blocks.
Diagnostics decomposition_checks(const BlockDecomposition &bd, double tol = 1e-9);

/// tr G = exp(log_scale) * det(I + e^M)^{1/2}, the root continued from
/// 2^L at M = 0 along e^{tM}.
Complex normalization(const GaussianSpec &spec);

/// [[F_a, F_s], [-F_s, -F_a]] with F = (I + G)(I - G)^{-1}.
ComplexMatrix kernel_real_case(const ComplexMatrix &G);

/// "x_minus_z_dagger" = max|X - Z^dag| and "y_hermiticity" = max|Y - Y^dag|.
Diagnostics mixed_state_checks(const BlockDecomposition &bd, double tol = 1e-9);

}  // namespace gpauli

#endif
