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

#include "gpauli/elements.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gpauli/errors.hpp"
#include "gpauli/fock.hpp"
#include "gpauli/random.hpp"
#include "gpauli/signs.hpp"

namespace gpauli {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
const Complex kI(0.0, 1.0);

double rel_err(Complex got, Complex ref) { return std::abs(got - ref) / std::max(1.0, std::abs(ref)); }

std::vector<int> spins_from_mask(std::uint64_t mask, int L) {
    std::vector<int> s(L);
    for (int l = 0; l < L; ++l) s[l] = (mask >> l) & 1 ? 1 : -1;
    return s;
}

TEST(Computational, ZeroGeneratorSingleMode) {
    BlockDecomposition bd = decompose(GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    EXPECT_LT(std::abs(element_computational(bd, OccupationSets::from_masks(1, 1, 1)) - 1.0), 1e-15);
    EXPECT_LT(std::abs(element_computational(bd, OccupationSets::from_masks(1, 0, 0)) - 1.0), 1e-15);
    EXPECT_EQ(element_computational(bd, OccupationSets::from_masks(1, 1, 0)), Complex(0.0));
}

TEST(Computational, MatchesOracleOnAllEntries) {
    Rng rng(31);
    for (int L = 1; L <= 4; ++L) {
        GaussianSpec s = random_decomposable_spec(L, rng);
        BlockDecomposition bd = decompose(s);
        DenseOperator g = build_gaussian(s);
        for (std::uint64_t b = 0; b < (1u << L); ++b) {
            for (std::uint64_t k = 0; k < (1u << L); ++k) {
                Complex got = element_computational(bd, OccupationSets::from_masks(L, b, k));
                EXPECT_LT(rel_err(got, g.matrix(b, k)), 1e-9) << "L=" << L << " b=" << b << " k=" << k;
            }
        }
    }
}

TEST(Computational, OddParityIsExactlyZero) {
    Rng rng(37);
    BlockDecomposition bd = decompose(random_decomposable_spec(3, rng));
    EXPECT_EQ(element_computational(bd, OccupationSets::from_masks(3, 0b011, 0b001)), Complex(0.0));
    EXPECT_EQ(element_computational(bd, OccupationSets::from_masks(3, 0b111, 0b000)), Complex(0.0));
}

TEST(ParticleConserving, ZeroHoppingIsDelta) {
    ComplexMatrix A = ComplexMatrix::Zero(2, 2);
    EXPECT_EQ(element_particle_conserving(A, OccupationSets::from_masks(2, 0b10, 0b10)), Complex(1.0));
    EXPECT_EQ(element_particle_conserving(A, OccupationSets::from_masks(2, 0b10, 0b01)), Complex(0.0));
}

TEST(ParticleConserving, SingleMode) {
    ComplexMatrix A(1, 1);
    A << 0.4;
    EXPECT_LT(std::abs(element_particle_conserving(A, OccupationSets::from_masks(1, 1, 1)) - std::exp(0.4)), 1e-15);
}

TEST(ParticleConserving, MatchesOracleAndPfaffianRoute) {
    Rng rng(41);
    RandomSpecOptions opt;
    opt.kind = OperatorKind::particle_conserving;
    for (int L = 1; L <= 4; ++L) {
        GaussianSpec s = random_decomposable_spec(L, rng, opt);
        BlockDecomposition bd = decompose(s);
        DenseOperator g = build_gaussian(s);
        for (std::uint64_t b = 0; b < (1u << L); ++b) {
            for (std::uint64_t k = 0; k < (1u << L); ++k) {
                OccupationSets occ = OccupationSets::from_masks(L, b, k);
                Complex det_route = element_particle_conserving(*s.hopping, occ);
                EXPECT_LT(rel_err(det_route, g.matrix(b, k)), 1e-9);
                EXPECT_LT(rel_err(det_route, element_computational(bd, occ)), 1e-9);
            }
        }
    }
}

TEST(SigmaZ, ZeroGeneratorSingleMode) {
    BlockDecomposition bd = decompose(GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    SignPair pair = canonical_pair(1);
    auto el = [&](int b, int k) {
        return element_sigma_z(bd, pair, SpinConfiguration::shared({b}, {k}, {SiteAngles{}}));
    };
    EXPECT_LT(std::abs(el(1, 1) - 1.0), 1e-15);
    EXPECT_LT(std::abs(el(-1, -1) - 1.0), 1e-15);
    EXPECT_EQ(el(1, -1), Complex(0.0));
}

TEST(SigmaZ, AgreesWithComputationalOnEveryEntry) {
    Rng rng(43);
    for (int L = 1; L <= 4; ++L) {
        SignPair pair = canonical_pair(L);
        BlockDecomposition bd = decompose(random_decomposable_spec(L, rng));
        for (std::uint64_t b = 0; b < (1u << L); ++b) {
            for (std::uint64_t k = 0; k < (1u << L); ++k) {
                Complex ref = element_computational(bd, OccupationSets::from_masks(L, b, k));
                Complex got = element_sigma_z(bd, pair, SpinConfiguration::from_masks(L, b, k));
                EXPECT_LT(rel_err(got, ref), 1e-12);
            }
        }
    }
}

TEST(SigmaZ, RequiresDiagonalBasis) {
    BlockDecomposition bd = decompose(GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    SpinConfiguration c = SpinConfiguration::shared({1}, {1}, {axis_angles(Axis::x)});
    EXPECT_THROW(kernel_sigma_z(bd, canonical_pair(1), c), ValidationError);
}

TEST(Pauli, ZeroAnglesReduceToSigmaZ) {
    Rng rng(47);
    const int L = 3;
    SignPair pair = canonical_pair(L);
    BlockDecomposition bd = decompose(random_decomposable_spec(L, rng));
    for (std::uint64_t b = 0; b < 8; ++b) {
        for (std::uint64_t k = 0; k < 8; ++k) {
            SpinConfiguration c = SpinConfiguration::from_masks(L, b, k);
            EXPECT_LT(rel_err(element_pauli(bd, pair, c), element_sigma_z(bd, pair, c)), 1e-12);
        }
    }
}

TEST(Pauli, ZeroGeneratorXBasis) {
    BlockDecomposition bd = decompose(GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    SignPair pair = canonical_pair(1);
    auto el = [&](int b, int k) {
        return element_pauli(bd, pair, SpinConfiguration::shared({b}, {k}, {axis_angles(Axis::x)}));
    };
    EXPECT_LT(std::abs(el(1, 1) - 1.0), 1e-15);
    EXPECT_LT(std::abs(el(1, -1)), 1e-15);
}

TEST(Pauli, SingleModeXBasisNumberOperator) {
    const double a = 0.6;
    ComplexMatrix A(1, 1);
    A << a;
    BlockDecomposition bd = decompose(GaussianSpec::particle_conserving(A));
    SignPair pair = canonical_pair(1);
    auto el = [&](int b, int k) {
        return element_pauli(bd, pair, SpinConfiguration::shared({b}, {k}, {axis_angles(Axis::x)}));
    };
    EXPECT_LT(std::abs(el(1, 1) - (1 + std::exp(a)) / 2), 1e-14);
    EXPECT_LT(std::abs(el(1, -1) - (std::exp(a) - 1) / 2), 1e-14);
}

TEST(Pauli, SharedRandomBasesMatchOracle) {
    Rng rng(53);
    for (int L = 1; L <= 4; ++L) {
        SignPair pair = canonical_pair(L);
        for (int trial = 0; trial < 3; ++trial) {
            GaussianSpec s = random_decomposable_spec(L, rng);
            BlockDecomposition bd = decompose(s);
            std::vector<SiteAngles> angles = random_angles(L, rng);
            DenseOperator r = rotate(build_gaussian(s), angles, angles);
            for (std::uint64_t b = 0; b < (1u << L); ++b) {
                for (std::uint64_t k = 0; k < (1u << L); ++k) {
                    SpinConfiguration c = SpinConfiguration::from_masks(L, b, k);
                    c.bra_angles = c.ket_angles = angles;
                    EXPECT_LT(rel_err(element_pauli(bd, pair, c), r.matrix(b, k)), 1e-8) << "L=" << L;
                }
            }
        }
    }
}

TEST(Pauli, SplitBasesMatchOracle) {
    Rng rng(59);
    for (int L = 1; L <= 3; ++L) {
        SignPair pair = canonical_pair(L);
        GaussianSpec s = random_decomposable_spec(L, rng);
        BlockDecomposition bd = decompose(s);
        std::vector<SiteAngles> bra = random_angles(L, rng);
        std::vector<SiteAngles> ket = random_angles(L, rng);
        DenseOperator r = rotate(build_gaussian(s), bra, ket);
        for (std::uint64_t b = 0; b < (1u << L); ++b) {
            for (std::uint64_t k = 0; k < (1u << L); ++k) {
                SpinConfiguration c = SpinConfiguration::from_masks(L, b, k);
                c.bra_angles = bra;
                c.ket_angles = ket;
                EXPECT_LT(rel_err(element_pauli(bd, pair, c), r.matrix(b, k)), 1e-8);
            }
        }
    }
}

TEST(Pauli, AnyValidPairGivesTheSameElements) {
    Rng rng(61);
    const int L = 2;
    GaussianSpec s = random_decomposable_spec(L, rng);
    BlockDecomposition bd = decompose(s);
    std::vector<SiteAngles> angles = random_angles(L, rng);
    DenseOperator r = rotate(build_gaussian(s), angles, angles);
    for (const SignPair &pair : enumerate_pairs(L)) {
        for (std::uint64_t b = 0; b < 4; ++b) {
            for (std::uint64_t k = 0; k < 4; ++k) {
                SpinConfiguration c = SpinConfiguration::from_masks(L, b, k);
                c.bra_angles = c.ket_angles = angles;
                EXPECT_LT(rel_err(element_pauli(bd, pair, c), r.matrix(b, k)), 1e-8);
            }
        }
    }
}

TEST(Pauli, HermitianSpecGivesHermitianTable) {
    Rng rng(67);
    RandomSpecOptions opt;
    opt.kind = OperatorKind::mixed_hermitian;
    const int L = 3;
    SignPair pair = canonical_pair(L);
    BlockDecomposition bd = decompose(random_decomposable_spec(L, rng, opt));
    std::vector<SiteAngles> angles = random_angles(L, rng);
    for (std::uint64_t b = 0; b < 8; ++b) {
        for (std::uint64_t k = 0; k < 8; ++k) {
            SpinConfiguration c = SpinConfiguration::from_masks(L, b, k);
            SpinConfiguration t = SpinConfiguration::from_masks(L, k, b);
            c.bra_angles = c.ket_angles = t.bra_angles = t.ket_angles = angles;
            Complex e = element_pauli(bd, pair, c);
            EXPECT_LT(std::abs(e - std::conj(element_pauli(bd, pair, t))), 1e-9 * std::max(1.0, std::abs(e)));
        }
    }
}

TEST(Pauli, TraceIsBasisIndependent) {
    Rng rng(71);
    RandomSpecOptions opt;
    opt.kind = OperatorKind::mixed_hermitian;
    const int L = 3;
    SignPair pair = canonical_pair(L);
    GaussianSpec s = random_decomposable_spec(L, rng, opt);
    BlockDecomposition bd = decompose(s);
    std::vector<SiteAngles> angles = random_angles(L, rng);
    Complex trace = 0.0;
    for (std::uint64_t b = 0; b < 8; ++b) {
        SpinConfiguration c = SpinConfiguration::from_masks(L, b, b);
        c.bra_angles = c.ket_angles = angles;
        trace += element_pauli(bd, pair, c);
    }
    EXPECT_LT(std::abs(trace - normalization(s)), 1e-9 * std::abs(trace));
}

TEST(Special, MatchesGeneralKernelOnEveryAxisPair) {
    Rng rng(73);
    const int L = 3;
    SignPair pair = canonical_pair(L);
    BlockDecomposition bd = decompose(random_decomposable_spec(L, rng));
    for (Axis mu : {Axis::x, Axis::y, Axis::z}) {
        for (Axis nu : {Axis::x, Axis::y, Axis::z}) {
            for (std::uint64_t b = 0; b < 8; ++b) {
                for (std::uint64_t k = 0; k < 8; ++k) {
                    SpinConfiguration c = SpinConfiguration::from_masks(L, b, k);
                    c.bra_angles.assign(L, axis_angles(mu));
                    c.ket_angles.assign(L, axis_angles(nu));
                    ComplexMatrix special = kernel_special(mu, nu, bd, pair, c.bra, c.ket);
                    EXPECT_LT(max_abs(special - kernel_pauli(bd, pair, c)), 1e-15 * std::max(1.0, max_abs(bd.kernel)))
                        << axis_label(mu) << axis_label(nu);
                }
            }
        }
    }
}

TEST(Special, ZZIsTheSigmaZKernelEmbedded) {
    const int L = 2;
    BlockDecomposition bd = decompose(GaussianSpec::generic(ComplexMatrix::Zero(4, 4)));
    SignPair pair = canonical_pair(L);
    ComplexMatrix k = kernel_special(Axis::z, Axis::z, bd, pair, {1, 1}, {1, 1});
    // All spins up: every index is kept, so the special kernel is the full
    // Sigma o A taken from the upper triangle.
    ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
    for (int m = 0; m < 4; ++m) {
        for (int n = m + 1; n < 4; ++n) {
            expect(m, n) = double(pair.sigma(m, n)) * bd.kernel(m, n);
            expect(n, m) = -expect(m, n);
        }
    }
    EXPECT_LT(max_abs(k - expect), 1e-15);
    EXPECT_LT(max_abs(kernel_sigma_z(bd, pair, SpinConfiguration::from_masks(L, 3, 3)) - expect), 1e-15);
}

TEST(Special, XYCrossEntriesWithKetPhiMinusHalfPi) {
    // With the ket y axis taken at phi = -pi/2 the cross entries are
    // (i Sigma A + s s Sigma') / 2. The y dictionary entry (phi = +pi/2)
    // gives the conjugate phase -i instead.
    Rng rng(79);
    const int L = 2;
    SignPair pair = canonical_pair(L);
    BlockDecomposition bd = decompose(random_decomposable_spec(L, rng));
    SpinConfiguration c = SpinConfiguration::from_masks(L, 0b01, 0b10);
    c.bra_angles.assign(L, axis_angles(Axis::x));
    c.ket_angles.assign(L, SiteAngles{-kHalfPi, kHalfPi, 0.0});
    ComplexMatrix K = kernel_pauli(bd, pair, c);
    ComplexMatrix y = kernel_special(Axis::x, Axis::y, bd, pair, c.bra, c.ket);
    for (int m = 0; m < L; ++m) {
        for (int j = 0; j < L; ++j) {
            const int n = L + j;
            const double ss = c.bra[m] * c.ket[j];
            Complex printed = 0.5 * (kI * double(pair.sigma(m, n)) * bd.kernel(m, n) + ss * double(pair.sigma_prime(m, n)));
            Complex dictionary = 0.5 * (-kI * double(pair.sigma(m, n)) * bd.kernel(m, n) + ss * double(pair.sigma_prime(m, n)));
            EXPECT_LT(std::abs(K(m, n) - printed), 1e-15);
            EXPECT_LT(std::abs(y(m, n) - dictionary), 1e-15);
        }
    }
}

TEST(GeneratingFunction, ZeroLambdaIsAllUpElement) {
    Rng rng(83);
    for (int L = 1; L <= 4; ++L) {
        SignPair pair = canonical_pair(L);
        BlockDecomposition bd = decompose(random_decomposable_spec(L, rng));
        const std::uint64_t full = (1u << L) - 1;
        Complex ref = element_computational(bd, OccupationSets::from_masks(L, full, full));
        EXPECT_LT(rel_err(generating_function(bd, pair, ComplexVector::Zero(2 * L)), ref), 1e-12);
    }
}

TEST(GeneratingFunction, SingleModeZeroGenerator) {
    BlockDecomposition bd = decompose(GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    SignPair pair = canonical_pair(1);
    ComplexVector lambda(2);
    lambda << 0.3, -1.7;
    Complex expect = 1.0 + double(pair.sigma_prime(0, 1)) * 0.3 * -1.7;
    EXPECT_LT(std::abs(generating_function(bd, pair, lambda) - expect), 1e-15);
}

TEST(GeneratingFunction, TanCotWeightsReproduceThetaOnlyElements) {
    Rng rng(89);
    std::uniform_real_distribution<double> angle(0.2, std::numbers::pi - 0.2);
    for (int L = 1; L <= 3; ++L) {
        SignPair pair = canonical_pair(L);
        GaussianSpec s = random_decomposable_spec(L, rng);
        BlockDecomposition bd = decompose(s);
        std::vector<SiteAngles> angles(L);
        for (auto &a : angles) a.theta = angle(rng);
        DenseOperator r = rotate(build_gaussian(s), angles, angles);
        for (std::uint64_t b = 0; b < (1u << L); ++b) {
            for (std::uint64_t k = 0; k < (1u << L); ++k) {
                std::vector<int> bra = spins_from_mask(b, L), ket = spins_from_mask(k, L);
                ComplexVector lambda(2 * L);
                Complex weight = 1.0;
                for (int m = 0; m < 2 * L; ++m) {
                    const int spin = m < L ? bra[m] : ket[m - L];
                    const double half = angles[m % L].theta / 2;
                    lambda(m) = spin == 1 ? std::tan(half) : -1.0 / std::tan(half);
                    weight *= spin == 1 ? std::cos(half) : std::sin(half);
                }
                EXPECT_LT(rel_err(weight * generating_function(bd, pair, lambda), r.matrix(b, k)), 1e-8);
            }
        }
    }
}

// g(lambda) expanded over every bra/ket occupation pair: each empty site
// contributes its lambda.
TEST(GeneratingFunction, MatchesOccupationExpansion) {
    Rng rng(97);
    std::normal_distribution<double> normal;
    for (int L = 1; L <= 3; ++L) {
        SignPair pair = canonical_pair(L);
        GaussianSpec s = random_decomposable_spec(L, rng);
        BlockDecomposition bd = decompose(s);
        ComplexMatrix ref = build_gaussian(s).matrix;
        for (int t = 0; t < 5; ++t) {
            ComplexVector lambda(2 * L);
            for (int m = 0; m < 2 * L; ++m) lambda(m) = Complex(normal(rng), normal(rng));
            Complex sum = 0.0;
            for (std::uint64_t b = 0; b < (1u << L); ++b) {
                for (std::uint64_t k = 0; k < (1u << L); ++k) {
                    Complex w = 1.0;
                    for (int l = 0; l < L; ++l) {
                        if (!((b >> l) & 1)) w *= lambda(l);
                        if (!((k >> l) & 1)) w *= lambda(L + l);
                    }
                    sum += w * ref(b, k);
                }
            }
            EXPECT_LT(rel_err(generating_function(bd, pair, lambda), sum), 1e-10) << "L=" << L;
        }
    }
}

TEST(DiagonalProbability, InfiniteTemperatureIsUniform) {
    RealMatrix G = RealMatrix::Zero(3, 3);
    EXPECT_NEAR(diagonal_probability(G, {1, -1, 1}), 0.125, 1e-15);
}

TEST(DiagonalProbability, IdentityCorrelationIsFullyOccupied) {
    RealMatrix G = RealMatrix::Identity(2, 2);
    EXPECT_NEAR(diagonal_probability(G, {1, 1}), 1.0, 1e-15);
    EXPECT_NEAR(diagonal_probability(G, {1, -1}), 0.0, 1e-15);
    EXPECT_NEAR(diagonal_probability(G, {-1, -1}), 0.0, 1e-15);
}

TEST(DiagonalProbability, MatchesOracleAndSumsToOne) {
    Rng rng(97);
    RandomSpecOptions opt;
    opt.kind = OperatorKind::mixed_hermitian;
    opt.real = true;
    const int L = 4;
    for (int trial = 0; trial < 3; ++trial) {
        GaussianSpec s = random_spec(L, rng, opt);
        RealMatrix G = correlation_oracle(s).real();
        ComplexMatrix rho = build_gaussian(s).matrix;
        rho /= rho.trace();
        double total = 0.0;
        for (std::uint64_t c = 0; c < 16; ++c) {
            double p = diagonal_probability(G, spins_from_mask(c, L));
            EXPECT_NEAR(p, rho(c, c).real(), 1e-10);
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(DiagonalProbability, RejectsBadConfig) {
    EXPECT_THROW(diagonal_probability(RealMatrix::Zero(2, 2), {1, 0}), ValidationError);
    EXPECT_THROW(diagonal_probability(RealMatrix::Zero(2, 2), {1}), ValidationError);
}

TEST(SpinConfiguration, RejectsBadSpins) {
    SpinConfiguration c = SpinConfiguration::from_masks(2, 0, 0);
    c.bra[0] = 0;
    EXPECT_THROW(c.check(), ValidationError);
}

}  // namespace
}  // namespace gpauli
