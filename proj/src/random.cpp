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

#include "gpauli/random.hpp"

#include <numbers>

#include "gpauli/errors.hpp"

namespace gpauli {

ComplexMatrix random_antisymmetric(int n, Rng &rng) {
    std::normal_distribution<double> N(0.0, 1.0);
    ComplexMatrix W = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double re = N(rng);
            double im = N(rng);
            W(i, j) = Complex(re, im);
            W(j, i) = -W(i, j);
        }
    }
    return W;
}

GaussianSpec random_spec(int sites, Rng &rng, const RandomSpecOptions &opt) {
    if (sites < 0) throw ValidationError("random_spec: L must be >= 0");
    std::normal_distribution<double> N(0.0, 1.0);
    if (opt.kind == OperatorKind::particle_conserving) {
        ComplexMatrix A(sites, sites);
        for (int i = 0; i < sites; ++i) {
            for (int j = 0; j < sites; ++j) {
                double re = N(rng);
                double im = opt.real ? 0.0 : N(rng);
                A(i, j) = opt.scale * Complex(re, im);
            }
        }
        return GaussianSpec::particle_conserving(std::move(A));
    }
    ComplexMatrix W = random_antisymmetric(2 * sites, rng) * opt.scale;
    if (opt.real) W = W.real().cast<Complex>();
    ComplexMatrix M = xi_matrix(sites) * W;
    if (opt.kind == OperatorKind::mixed_hermitian) {
        M = ((M + M.adjoint()) / 2.0).eval();
        return GaussianSpec::mixed(std::move(M));
    }
    return GaussianSpec::generic(std::move(M));
}

GaussianSpec random_decomposable_spec(int sites, Rng &rng, const RandomSpecOptions &opt) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        GaussianSpec spec = random_spec(sites, rng, opt);
        try {
            decompose(spec);
            return spec;
        } catch (const DecompositionError &) {
        } catch (const BranchError &) {
        }
    }
    throw DecompositionError("random_decomposable_spec: no decomposable draw in 100 attempts");
}

std::vector<SiteAngles> random_angles(int sites, Rng &rng) {
    std::uniform_real_distribution<double> U(0.0, 2.0 * std::numbers::pi);
    std::vector<SiteAngles> out(sites);
    for (auto &a : out) {
        a.phi = U(rng);
        a.theta = U(rng);
        a.alpha = U(rng);
    }
    return out;
}

}  // namespace gpauli
