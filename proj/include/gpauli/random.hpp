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

#ifndef GPAULI_RANDOM_HPP
#define GPAULI_RANDOM_HPP

#include <random>
#include <vector>

#include "gpauli/elements.hpp"
#include "gpauli/gaussian.hpp"

namespace gpauli {

using Rng = std::mt19937_64;

struct RandomSpecOptions {
    OperatorKind kind = OperatorKind::generic;
    /// Real generator (only meaningful for generic and mixed kinds).
    bool real = false;
    /// Entry scale of the antisymmetric parameter matrix.
    double scale = 0.8;
};

/// M = Xi W with W antisymmetric Gaussian; the mixed kind additionally takes
/// the Hermitian part (which stays on the constraint surface). The
/// particle-conserving kind draws a random hopping matrix instead.
GaussianSpec random_spec(int sites, Rng &rng, const RandomSpecOptions &opt = {});

/// random_spec redrawn until decompose() succeeds (at most 100 draws).
GaussianSpec random_decomposable_spec(int sites, Rng &rng, const RandomSpecOptions &opt = {});

/// Independent uniform angles in [0, 2 pi).
std::vector<SiteAngles> random_angles(int sites, Rng &rng);

/// Random antisymmetric complex matrix with standard normal entries.
ComplexMatrix random_antisymmetric(int n, Rng &rng);

}  // namespace gpauli

#endif
