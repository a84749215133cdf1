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

#include "gpauli/lie.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Eigen::VectorXd upper_vector(const RealMatrix &M) {
    const Eigen::Index n = M.rows();
    Eigen::VectorXd v(n * (n - 1) / 2);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) v(k++) = M(i, j);
    }
    return v;
}

RealMatrix from_upper_vector(const Eigen::VectorXd &v, Eigen::Index n) {
    RealMatrix M = RealMatrix::Zero(n, n);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            M(i, j) = v(k);
            M(j, i) = -v(k);
            ++k;
        }
    }
    return M;
}

double max_abs_real(const RealMatrix &M) { return M.size() ? M.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

RealMatrix generator(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw ValidationError("generator: indices out of range");
    RealMatrix X = RealMatrix::Zero(n, n);
    X(a - 1, b - 1) = 1.0;
    X(b - 1, a - 1) = -1.0;
    return X;
}

std::vector<RealMatrix> so_generators(int n) {
    std::vector<RealMatrix> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) out.push_back(generator(a, b, n));
    }
    return out;
}

RealMatrix to_real(const SignMatrix &s) { return s.cast<double>(); }

int closure_dimension(const std::vector<RealMatrix> &seeds, double rel_tol) {
    if (seeds.empty()) return 0;
    const Eigen::Index n = seeds.front().rows();
    for (const auto &s : seeds) {
        if (s.rows() != n || s.cols() != n) throw ValidationError("closure_dimension: seeds must share one square shape");
        if ((s + s.transpose()).cwiseAbs().maxCoeff() > kAntisymmetryTol * std::max(1.0, max_abs_real(s))) {
            throw ValidationError("closure_dimension: seeds must be antisymmetric");
        }
    }
    const Eigen::Index full = n * (n - 1) / 2;
    // Orthonormal basis of the span, kept both as vectors and as matrices.
    std::vector<Eigen::VectorXd> basis;
    std::vector<RealMatrix> mats;
    auto add = [&](const RealMatrix &M) {
        Eigen::VectorXd v = upper_vector(M);
        const double norm0 = v.norm();
        if (norm0 == 0.0) return;
        // Two Gram-Schmidt passes keep the basis orthogonal to working precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &b : basis) v -= b.dot(v) * b;
        }
        const double norm = v.norm();
        if (norm <= rel_tol * norm0) return;
        v /= norm;
        basis.push_back(v);
        mats.push_back(from_upper_vector(v, n));
    };
    for (const auto &s : seeds) add(s);
    for (size_t i = 0; i < mats.size() && static_cast<Eigen::Index>(basis.size()) < full; ++i) {
        for (size_t j = 0; j < i && static_cast<Eigen::Index>(basis.size()) < full; ++j) {
            add(mats[j] * mats[i] - mats[i] * mats[j]);
        }
    }
    return static_cast<int>(basis.size());
}

OrthogonalFrame orthogonal_frame(int sites, const SignVector &p) {
    if (sites < 1) throw ValidationError("orthogonal_frame: L must be >= 1");
    const int n = 2 * sites;
    if (static_cast<int>(p.size()) != n) throw ValidationError("orthogonal_frame: p must have length 2L");
    OrthogonalFrame f;
    f.sites = sites;
    f.g0.resize(n, n);
    const double norm = std::sqrt(1.0 / sites);
    for (int k = 1; k <= sites; ++k) {
        for (int j = 1; j <= n; ++j) {
            const double arg = (j - 1) * (2 * k - 1) * kPi / (2 * sites);
            f.g0(j - 1, 2 * k - 2) = norm * std::sin(arg);
            f.g0(j - 1, 2 * k - 1) = norm * std::cos(arg);
        }
    }
    f.P = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) f.P(i, i) = p[i];
    f.g = f.P * f.g0;
    return f;
}

OrthogonalFrame orthogonal_frame(int sites) { return orthogonal_frame(sites, SignVector(2 * sites, 1)); }

std::vector<double> cartan_frequencies(int sites) {
    std::vector<double> w;
    for (int k = 1; k <= sites; ++k) w.push_back(-1.0 / std::tan((2 * k - 1) * kPi / (4.0 * sites)));
    return w;
}

RealMatrix block_form(const std::vector<double> &omega) {
    const int n = 2 * static_cast<int>(omega.size());
    RealMatrix B = RealMatrix::Zero(n, n);
    for (size_t k = 0; k < omega.size(); ++k) {
        B(2 * k, 2 * k + 1) = omega[k];
        B(2 * k + 1, 2 * k) = -omega[k];
    }
    return B;
}

Diagnostics spectrum_check(const SignMatrix &sigma, int sites, double tol) {
    const int n = 2 * sites;
    if (sites < 1 || sigma.rows() != n || sigma.cols() != n) throw ValidationError("spectrum_check: sigma must be 2L x 2L");
    int eta = 1;
    std::optional<SignVector> p = recover_p_vector(sigma);
    if (!p) {
        eta = -1;
        p = recover_p_vector(-sigma);
    }
    if (!p) throw ValidationError("spectrum_check: sigma is not of the form +-P Sigma_1 P");

    Diagnostics d;
    const std::vector<double> omega = cartan_frequencies(sites);
    RealMatrix S = to_real(sigma);
    Eigen::EigenSolver<RealMatrix> es(S, false);
    std::vector<double> got;
    double max_real = 0.0;
    for (const auto &ev : es.eigenvalues()) {
        got.push_back(ev.imag());
        max_real = std::max(max_real, std::abs(ev.real()));
    }
    std::vector<double> want;
    for (double w : omega) {
        want.push_back(w);
        want.push_back(-w);
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    double dev = max_real;
    for (size_t i = 0; i < got.size(); ++i) dev = std::max(dev, std::abs(got[i] - want[i]));
    d.add("eigenvalue_dev", dev, tol);
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < got.size(); ++i) gap = std::min(gap, got[i] - got[i - 1]);
    if (got.size() < 2) gap = 1.0;
    d.add_nonzero("min_eigen_gap", gap, 1e-8);

    OrthogonalFrame f = orthogonal_frame(sites, *p);
    RealMatrix St = f.g.transpose() * (eta * S) * f.g;
    d.add("block_dev", max_abs_real(St - block_form(omega)), tol);
    std::ostringstream detail;
    detail << "eta = " << eta;
    d.detail = detail.str();
    return d;
}

Diagnostics centralizer_check(const RealMatrix &sigma_tilde, int sites, double tol) {
    const int n = 2 * sites;
    if (sigma_tilde.rows() != n || sigma_tilde.cols() != n) throw ValidationError("centralizer_check: shape mismatch");
    Diagnostics d;
    double cartan = 0.0;
    double min_other = std::numeric_limits<double>::infinity();
    const double scale = std::max(1.0, max_abs_real(sigma_tilde));
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            RealMatrix X = generator(a, b, n);
            double c = max_abs_real(sigma_tilde * X - X * sigma_tilde);
            if (a % 2 == 1 && b == a + 1) {
                cartan = std::max(cartan, c);
            } else {
                min_other = std::min(min_other, c);
            }
        }
    }
    if (sites == 1) min_other = 1.0;
    d.add("cartan_commutator", cartan, tol * scale);
    d.add_nonzero("min_other", min_other, 1e-8);
    return d;
}

int overlap_sign(int i, int j, int sites) {
    if (i == j) return 0;
    if (i > j) return -overlap_sign(j, i, sites);
    int f;
    if (sites % 2 == 1) {
        f = (i > sites && j > sites) ? i + j + 2 : i + j + 1;
    } else {
        f = (i <= sites && j <= sites) ? i + j + 1 : i + j + 2;
    }
    return f % 2 == 0 ? 1 : -1;
}

RealMatrix overlap_sign_matrix(int sites) {
    const int n = 2 * sites;
    RealMatrix S(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) S(i - 1, j - 1) = overlap_sign(i, j, sites);
    }
    return S;
}

Complex hs_inner(const ComplexMatrix &A, const ComplexMatrix &B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw ValidationError("hs_inner: shape mismatch");
    Complex sum = 0.0;
    for (Eigen::Index p = 0; p < A.rows(); ++p) {
        for (Eigen::Index q = p + 1; q < A.cols(); ++q) sum += std::conj(A(p, q)) * B(p, q);
    }
    return sum;
}

ComplexMatrix simple_root(int l, int sites) {
    if (sites < 2 || l < 1 || l > sites) throw ValidationError("simple_root: need L >= 2 and 1 <= l <= L");
    const int n = 2 * sites;
    auto X = [n](int a, int b) -> ComplexMatrix { return generator(a, b, n).cast<Complex>(); };
    if (l < sites) {
        return 0.5 * (X(2 * l - 1, 2 * l + 1) + X(2 * l, 2 * l + 2) - kI * X(2 * l - 1, 2 * l + 2) +
                      kI * X(2 * l, 2 * l + 1));
    }
    const int L = sites;
    return 0.5 * (-X(2 * L - 3, 2 * L - 1) + X(2 * L - 2, 2 * L) - kI * X(2 * L - 3, 2 * L) - kI * X(2 * L - 2, 2 * L - 1));
}

std::vector<RootOverlap> root_overlaps(int sites) {
    if (sites < 2) throw ValidationError("root_overlaps: L must be >= 2");
    const int L = sites;
    const int n = 2 * L;
    const RealMatrix S = overlap_sign_matrix(L);
    const OrthogonalFrame f = orthogonal_frame(L);
    const ComplexMatrix St = (f.g0.transpose() * S * f.g0).cast<Complex>();
    std::vector<RootOverlap> out;
    for (int l = 1; l <= L; ++l) {
        RootOverlap o;
        o.l = l;
        o.direct = hs_inner(simple_root(l, L), St);
        Complex sum = 0.0;
        if (l < L) {
            for (int r = 0; r < n; ++r) {
                for (int s = 0; s < n; ++s) {
                    sum += std::exp(-kI * double(s * (2 * l + 1)) * kPi / (2.0 * L)) * S(r, s) *
                           std::exp(kI * double(r * (2 * l - 1)) * kPi / (2.0 * L));
                }
            }
            const Complex e1 = std::exp(kI * kPi / double(L));
            o.closed_form = -std::exp(-kI * double(l - 1) * kPi / double(L)) *
                            (-1.0 + std::exp(2.0 * kI * double(l) * kPi / double(L))) /
                            ((-1.0 + e1) * double(L) * (std::cos(kPi / (2.0 * L)) + std::cos(l * kPi / L)));
        } else {
            for (int r = 0; r < n; ++r) {
                for (int s = 0; s < n; ++s) {
                    sum += std::exp(kI * double(s * (2 * L - 1)) * kPi / (2.0 * L)) * S(r, s) *
                           std::exp(kI * double(r * (2 * L - 3)) * kPi / (2.0 * L));
                }
            }
            const double csc = 1.0 / std::sin(kPi / (4.0 * L));
            const double sign = L % 2 == 0 ? 1.0 : -1.0;
            o.closed_form = kI * sign * std::exp(kI * kPi / double(L)) * csc * csc /
                            (2.0 * L * (2.0 * std::cos(kPi / (2.0 * L)) + 1.0));
        }
        o.fourier = sum / (2.0 * L);
        out.push_back(o);
    }
    return out;
}

Diagnostics overlap_checks(const std::vector<RootOverlap> &overlaps, double tol, double floor) {
    Diagnostics d;
    double dev = 0.0;
    double min_abs = std::numeric_limits<double>::infinity();
    for (const auto &o : overlaps) {
        dev = std::max({dev, std::abs(o.direct - o.fourier), std::abs(o.direct - o.closed_form)});
        min_abs = std::min(min_abs, std::abs(o.direct));
    }
    d.add("route_dev", dev, tol);
    d.add_nonzero("min_abs", min_abs, floor);
    return d;
}

std::pair<RealMatrix, RealMatrix> so4_expansion() {
    auto X = [](int a, int b) { return generator(a, b, 4); };
    RealMatrix s = X(1, 2) + X(1, 3) + X(1, 4) - X(2, 3) - X(2, 4) - X(3, 4);
    RealMatrix sp = X(1, 2) + X(1, 3) - X(1, 4) + X(2, 3) - X(2, 4) + X(3, 4);
    return {s, sp};
}

Diagnostics l2_commutator_table_check(const SignPair &pair, double tol) {
    if (pair.sites != 2) throw ValidationError("l2_commutator_table_check: needs an L = 2 pair");
    auto br = [](const RealMatrix &a, const RealMatrix &b) -> RealMatrix { return a * b - b * a; };
    std::map<std::string, RealMatrix> B;
    B["S"] = to_real(pair.sigma);
    B["S'"] = to_real(pair.sigma_prime);
    B["S3"] = br(B["S"], B["S'"]);
    B["S4"] = br(B["S"], B["S3"]);
    B["S5"] = br(B["S'"], B["S3"]);
    B["S6"] = br(B["S"], B["S4"]);

    struct Relation {
        const char *a;
        const char *b;
        std::vector<std::pair<const char *, double>> rhs;
    };
    const std::vector<Relation> table = {
        {"S'", "S4", {{"S3", -12}, {"S6", -2}}},
        {"S3", "S4", {{"S", 16}}},
        {"S", "S5", {{"S3", -12}, {"S6", -2}}},
        {"S'", "S5", {{"S3", -12}, {"S6", -1}}},
        {"S3", "S5", {{"S'", 16}}},
        {"S4", "S5", {{"S3", 16}}},
        {"S", "S6", {{"S", -32.0 / 5}, {"S'", -16.0 / 5}, {"S4", -36.0 / 5}, {"S5", 12.0 / 5}}},
        {"S'", "S6", {{"S", -16.0 / 5}, {"S'", 32.0 / 5}, {"S4", 12.0 / 5}, {"S5", -24.0 / 5}}},
        {"S3", "S6", {}},
        {"S4", "S6", {{"S", 576.0 / 5}, {"S'", -192.0 / 5}, {"S4", -32.0 / 5}, {"S5", -16.0 / 5}}},
        {"S5", "S6", {{"S", -192.0 / 5}, {"S'", 384.0 / 5}, {"S4", -16.0 / 5}, {"S5", 32.0 / 5}}},
    };
    Diagnostics d;
    for (const auto &rel : table) {
        RealMatrix lhs = br(B[rel.a], B[rel.b]);
        RealMatrix rhs = RealMatrix::Zero(4, 4);
        for (const auto &[name, c] : rel.rhs) rhs += c * B[name];
        std::ostringstream name;
        name << "[" << rel.a << "," << rel.b << "]";
        d.add(name.str(), max_abs_real(lhs - rhs), tol * std::max(1.0, max_abs_real(lhs)));
    }
    return d;
}

}  // namespace gpauli
