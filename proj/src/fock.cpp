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

#include "gpauli/fock.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

void guard(int sites, int limit, const char *op) {
    if (sites < 0 || sites > limit) {
        std::ostringstream msg;
        msg << op << ": L = " << sites << " exceeds the dense-oracle guard L <= " << limit;
        throw GuardError(msg.str());
    }
}

// Jordan-Wigner string sign for acting on site l of basis state x.
int string_sign(std::uint32_t x, int l) {
    return (std::popcount(x & ((1u << l) - 1u)) % 2 == 0) ? 1 : -1;
}

// Applies c_l (create = false) or c_l^dag (create = true) to |x>.
// Returns 0 when the result vanishes, otherwise the sign; x is updated.
int apply(bool create, int l, std::uint32_t &x) {
    bool occupied = (x >> l) & 1u;
    if (occupied == create) return 0;
    int s = string_sign(x, l);
    x ^= 1u << l;
    return s;
}

}  // namespace

std::vector<IntMatrix> jw_operators(int sites) {
    guard(sites, kMaxOracleSites, "jw_operators");
    const std::uint32_t dim = 1u << sites;
    std::vector<IntMatrix> ops;
    for (int l = 0; l < sites; ++l) {
        IntMatrix c = IntMatrix::Zero(dim, dim);
        for (std::uint32_t x = 0; x < dim; ++x) {
            std::uint32_t y = x;
            int s = apply(false, l, y);
            if (s != 0) c(y, x) = s;
        }
        ops.push_back(std::move(c));
    }
    return ops;
}

DenseOperator build_gaussian(const GaussianSpec &spec) {
    guard(spec.sites, kMaxOracleExpSites, "build_gaussian");
    require_valid(spec);
    const int L = spec.sites;
    const std::uint32_t dim = 1u << L;
    // Quadratic form: left vector (c^dag, c), right vector (c, c^dag).
    ComplexMatrix H = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < 2 * L; ++i) {
        const bool left_create = i < L;
        const int li = i % L;
        for (int j = 0; j < 2 * L; ++j) {
            const Complex mij = spec.M(i, j);
            if (mij == Complex(0.0)) continue;
            const bool right_create = j >= L;
            const int lj = j % L;
            for (std::uint32_t x = 0; x < dim; ++x) {
                std::uint32_t y = x;
                int s1 = apply(right_create, lj, y);
                if (s1 == 0) continue;
                int s2 = apply(left_create, li, y);
                if (s2 == 0) continue;
                H(y, x) += 0.5 * mij * double(s1 * s2);
            }
        }
    }
    DenseOperator out;
    out.sites = L;
    out.matrix = std::exp(spec.log_scale) * matrix_exp(H);
    return out;
}

Eigen::Matrix2cd local_rotation(const SiteAngles &a) {
    const double c = std::cos(a.theta / 2);
    const double s = std::sin(a.theta / 2);
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd u;
    u << c, s * std::exp(-i * a.phi), s * std::exp(-i * a.alpha), -c * std::exp(-i * (a.alpha + a.phi));
    return u;
}

DenseOperator rotation(const std::vector<SiteAngles> &angles) {
    const int L = static_cast<int>(angles.size());
    guard(L, kMaxOracleSites, "rotation");
    // Fock order is (empty, occupied) = (down, up): the reverse of (up, down).
    std::vector<Eigen::Matrix2cd> local;
    for (const auto &a : angles) {
        Eigen::Matrix2cd u = local_rotation(a);
        Eigen::Matrix2cd f;
        f << u(1, 1), u(1, 0), u(0, 1), u(0, 0);
        local.push_back(f);
    }
    const std::uint32_t dim = 1u << L;
    DenseOperator out;
    out.sites = L;
    out.matrix.resize(dim, dim);
    for (std::uint32_t r = 0; r < dim; ++r) {
        for (std::uint32_t c = 0; c < dim; ++c) {
            Complex v = 1.0;
            for (int l = 0; l < L && v != Complex(0.0); ++l) v *= local[l]((r >> l) & 1u, (c >> l) & 1u);
            out.matrix(r, c) = v;
        }
    }
    return out;
}

DenseOperator rotate(const DenseOperator &op, const std::vector<SiteAngles> &bra_angles,
                     const std::vector<SiteAngles> &ket_angles) {
    if (static_cast<int>(bra_angles.size()) != op.sites || static_cast<int>(ket_angles.size()) != op.sites) {
        throw ValidationError("rotate: angle lists must have length L");
    }
    DenseOperator out;
    out.sites = op.sites;
    out.matrix = rotation(bra_angles).matrix * op.matrix * rotation(ket_angles).matrix.adjoint();
    return out;
}

Complex element_oracle(const DenseOperator &op, const SpinConfiguration &cfg) {
    cfg.check();
    if (cfg.sites != op.sites) throw ValidationError("element_oracle: configuration has the wrong L");
    const ComplexMatrix Ub = rotation(cfg.bra_angles).matrix;
    const ComplexMatrix Uk = rotation(cfg.ket_angles).matrix;
    ComplexVector left = Ub.row(cfg.bra_mask()).transpose();
    ComplexVector right = Uk.row(cfg.ket_mask()).adjoint();
    return (left.transpose() * op.matrix * right)(0, 0);
}

Complex element_oracle(const GaussianSpec &spec, const SpinConfiguration &cfg) {
    return element_oracle(build_gaussian(spec), cfg);
}

ComplexMatrix correlation_oracle(const GaussianSpec &spec) {
    DenseOperator g = build_gaussian(spec);
    const int L = spec.sites;
    Complex tr = g.matrix.trace();
    if (std::abs(tr) == 0.0) throw DecompositionError("correlation_oracle: operator has zero trace");
    ComplexMatrix rho = g.matrix / tr;
    std::vector<IntMatrix> c = jw_operators(L);
    ComplexMatrix G(L, L);
    for (int j = 0; j < L; ++j) {
        ComplexMatrix a = (c[j].transpose() - c[j]).cast<Complex>();
        for (int k = 0; k < L; ++k) {
            ComplexMatrix b = (c[k].transpose() + c[k]).cast<Complex>();
            G(j, k) = (rho * a * b).trace();
        }
    }
    return G;
}

}  // namespace gpauli
