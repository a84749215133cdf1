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

#include "gpauli/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <sstream>

#include "gpauli/errors.hpp"

namespace gpauli {

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::generic:
            return "generic";
        case OperatorKind::mixed_hermitian:
            return "mixed_hermitian";
        case OperatorKind::particle_conserving:
            return "particle_conserving";
    }
    return "generic";
}

OperatorKind parse_operator_kind(const std::string &name) {
    if (name == "generic") return OperatorKind::generic;
    if (name == "mixed_hermitian" || name == "mixed") return OperatorKind::mixed_hermitian;
    if (name == "particle_conserving") return OperatorKind::particle_conserving;
    throw ValidationError("unknown operator kind '" + name + "'");
}

GaussianSpec GaussianSpec::generic(ComplexMatrix M) {
    GaussianSpec s;
    s.sites = static_cast<int>(M.rows() / 2);
    s.M = std::move(M);
    return s;
}

GaussianSpec GaussianSpec::mixed(ComplexMatrix M) {
    GaussianSpec s = generic(std::move(M));
    s.kind = OperatorKind::mixed_hermitian;
    return s;
}

GaussianSpec GaussianSpec::particle_conserving(ComplexMatrix A) {
    if (A.rows() != A.cols()) throw ValidationError("particle_conserving: hopping matrix must be square");
    const Eigen::Index L = A.rows();
    GaussianSpec s;
    s.sites = static_cast<int>(L);
    s.kind = OperatorKind::particle_conserving;
    s.M = ComplexMatrix::Zero(2 * L, 2 * L);
    s.M.topLeftCorner(L, L) = A;
    s.M.bottomRightCorner(L, L) = -A.transpose();
    s.log_scale = A.trace() / 2.0;
    s.hopping = std::move(A);
    return s;
}

ComplexMatrix xi_matrix(int sites) {
    ComplexMatrix xi = ComplexMatrix::Zero(2 * sites, 2 * sites);
    xi.topRightCorner(sites, sites).setIdentity();
    xi.bottomLeftCorner(sites, sites).setIdentity();
    return xi;
}

Diagnostics validate(const GaussianSpec &spec, double tol) {
    if (spec.sites < 0 || spec.M.rows() != 2 * spec.sites || spec.M.cols() != 2 * spec.sites) {
        std::ostringstream msg;
        msg << "validate: M must be " << 2 * spec.sites << "x" << 2 * spec.sites << ", got " << spec.M.rows() << "x"
            << spec.M.cols();
        throw ValidationError(msg.str());
    }
    Diagnostics d;
    double threshold = tol * std::max(1.0, max_abs(spec.M));
    ComplexMatrix xm = xi_matrix(spec.sites) * spec.M;
    d.add("xi_antisymmetry", antisymmetry_residual(xm), threshold);
    if (!spec.M.allFinite()) d.add("finite", 1.0, 0.0);
    if (spec.kind == OperatorKind::mixed_hermitian) {
        d.add("hermiticity", spec.M.size() ? (spec.M - spec.M.adjoint()).cwiseAbs().maxCoeff() : 0.0, threshold);
    }
    if (spec.kind == OperatorKind::particle_conserving) {
        if (!spec.hopping || spec.hopping->rows() != spec.sites || spec.hopping->cols() != spec.sites) {
            throw ValidationError("validate: particle-conserving spec needs an LxL hopping matrix");
        }
        const int L = spec.sites;
        ComplexMatrix expect = ComplexMatrix::Zero(2 * L, 2 * L);
        expect.topLeftCorner(L, L) = *spec.hopping;
        expect.bottomRightCorner(L, L) = -spec.hopping->transpose();
        d.add("hopping_embedding", max_abs(spec.M - expect), threshold);
    }
    return d;
}

void require_valid(const GaussianSpec &spec, double tol) {
    Diagnostics d = validate(spec, tol);
    if (!d.passed()) {
        std::ostringstream msg;
        msg << "invalid Gaussian spec:\n" << d;
        throw ValidationError(msg.str());
    }
}

namespace {

// sqrt(det(block(e^{tM}))) continued in t from 0, where it equals
// sqrt(det0) > 0, to t = 1. The principal root of the final determinant is
// returned with the sign of the continued one; the principal logarithm alone
// picks the wrong sign once the eigenvalues wind around the origin.
template <class Block>
Complex continued_sqrt_det(const ComplexMatrix &M, double det0, Block block, const char *what) {
    const Eigen::Index n = M.rows();
    for (int steps = 32; steps <= (1 << 14); steps *= 2) {
        const ComplexMatrix step = matrix_exp(M / double(steps));
        ComplexMatrix T = ComplexMatrix::Identity(n, n);
        Complex prev = det0;
        double phase = 0.0;
        bool resolved = true;
        for (int k = 1; k <= steps; ++k) {
            T = T * step;
            const Complex d = determinant(block(T));
            if (!(std::abs(d) > 1e-300) || !std::isfinite(std::abs(d))) {
                throw BranchError(std::string(what) + ": determinant vanishes along e^{tM}; square-root branch undefined");
            }
            const double dphi = std::arg(d / prev);
            if (std::abs(dphi) > std::numbers::pi / 4) {
                resolved = false;
                break;
            }
            phase += dphi;
            prev = d;
        }
        if (!resolved) continue;
        const Complex tracked = std::polar(std::sqrt(std::abs(prev)), phase / 2.0);
        // Recompute the endpoint from e^M itself so the path's rounding does
        // not leak into the value; the path only chooses the sign.
        const Complex root = std::sqrt(determinant(block(matrix_exp(M))));
        return std::abs(root - tracked) <= std::abs(root + tracked) ? root : -root;
    }
    throw BranchError(std::string(what) + ": could not continue the square-root branch");
}

}  // namespace

BlockDecomposition decompose(const GaussianSpec &spec, double tol) {
    require_valid(spec, tol);
    const int L = spec.sites;
    BlockDecomposition bd;
    bd.sites = L;
    bd.weight = std::exp(spec.log_scale);
    ComplexMatrix T = matrix_exp(spec.M);
    bd.T11 = T.topLeftCorner(L, L);
    bd.T12 = T.topRightCorner(L, L);
    bd.T21 = T.bottomLeftCorner(L, L);
    bd.T22 = T.bottomRightCorner(L, L);
    if (L == 0) {
        bd.X = bd.Y = bd.Z = bd.exp_Y = bd.kernel = ComplexMatrix(0, 0);
        return bd;
    }
    double rcond = reciprocal_condition(bd.T22);
    if (!(rcond * kMaxT22Condition >= 1.0)) {
        std::ostringstream msg;
        msg << "decompose: T22 is singular or ill-conditioned (cond = " << (rcond > 0 ? 1.0 / rcond : INFINITY)
            << "); the operator has no Balian-Brezin form";
        throw DecompositionError(msg.str());
    }
    auto lu = bd.T22.partialPivLu();
    ComplexMatrix T22_inv = lu.inverse();
    bd.X = bd.T12 * T22_inv;
    bd.Z = T22_inv * bd.T21;
    bd.Y = -matrix_log_principal(bd.T22.transpose());
    // e^Y = (T22^T)^{-1}; taking it from the inverse avoids a second exponential.
    bd.exp_Y = T22_inv.transpose();
    bd.prefactor = continued_sqrt_det(
        spec.M, 1.0, [L](const ComplexMatrix &t) { return ComplexMatrix(t.bottomRightCorner(L, L)); }, "decompose");
    bd.kernel.resize(2 * L, 2 * L);
    bd.kernel << bd.X, bd.exp_Y, -bd.exp_Y.transpose(), bd.Z;
    return bd;
}

Diagnostics decomposition_checks(const BlockDecomposition &bd, double tol) {
    Diagnostics d;
    const int L = bd.sites;
    if (L == 0) return d;
    double scale = std::max({1.0, max_abs(bd.X), max_abs(bd.Z), max_abs(bd.exp_Y)});
    d.add("x_antisymmetry", antisymmetry_residual(bd.X), tol * scale);
    d.add("z_antisymmetry", antisymmetry_residual(bd.Z), tol * scale);
    ComplexMatrix eyT = matrix_exp(-bd.Y) - bd.T22.transpose();
    d.add("exp_minus_y", max_abs(eyT), tol * std::max(1.0, max_abs(bd.T22)));
    d.add("kernel_antisymmetry", antisymmetry_residual(bd.kernel), tol * scale);
    Complex det = determinant(bd.T22);
    d.add("prefactor_squared", std::abs(bd.prefactor * bd.prefactor - det), tol * std::max(1.0, std::abs(det)));
    return d;
}

Complex normalization(const GaussianSpec &spec) {
    require_valid(spec);
    const Eigen::Index n = spec.M.rows();
    ComplexMatrix B = ComplexMatrix::Identity(n, n) + matrix_exp(spec.M);
    if (reciprocal_condition(B) < 1e-14) throw DecompositionError("normalization: I + e^M is singular");
    const Complex root = continued_sqrt_det(
        spec.M, std::pow(2.0, double(n)),
        [n](const ComplexMatrix &t) { return ComplexMatrix(ComplexMatrix::Identity(n, n) + t); }, "normalization");
    return std::exp(spec.log_scale) * root;
}

ComplexMatrix kernel_real_case(const ComplexMatrix &G) {
    if (G.rows() != G.cols()) throw ValidationError("kernel_real_case: G must be square");
    const Eigen::Index L = G.rows();
    ComplexMatrix I = ComplexMatrix::Identity(L, L);
    ComplexMatrix IminusG = I - G;
    if (L > 0 && reciprocal_condition(IminusG) < 1e-14) {
        throw DecompositionError("kernel_real_case: I - G is singular");
    }
    ComplexMatrix F = (I + G) * IminusG.partialPivLu().inverse();
    ComplexMatrix Fs = (F + F.transpose()) / 2.0;
    ComplexMatrix Fa = (F - F.transpose()) / 2.0;
    ComplexMatrix K(2 * L, 2 * L);
    K << Fa, Fs, -Fs, -Fa;
    return K;
}

Diagnostics mixed_state_checks(const BlockDecomposition &bd, double tol) {
    Diagnostics d;
    double scale = std::max({1.0, max_abs(bd.X), max_abs(bd.Z), max_abs(bd.Y)});
    d.add("x_minus_z_dagger", bd.sites ? max_abs(bd.X - bd.Z.adjoint()) : 0.0, tol * scale);
    d.add("y_hermiticity", bd.sites ? max_abs(bd.Y - bd.Y.adjoint()) : 0.0, tol * scale);
    return d;
}

}  // namespace gpauli
