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
#include <sstream>

#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<int> mask_to_sites(int sites, std::uint64_t mask) {
    std::vector<int> out;
    for (int l = 0; l < sites; ++l) {
        if ((mask >> l) & 1) out.push_back(l);
    }
    return out;
}

std::vector<int> complement(int sites, const std::vector<int> &set) {
    std::vector<int> out;
    size_t k = 0;
    for (int l = 0; l < sites; ++l) {
        if (k < set.size() && set[k] == l) {
            ++k;
        } else {
            out.push_back(l);
        }
    }
    return out;
}

void check_pair_shape(const BlockDecomposition &bd, const SignPair &pair) {
    if (pair.sites != bd.sites || pair.sigma.rows() != 2 * bd.sites || pair.sigma_prime.rows() != 2 * bd.sites) {
        throw ValidationError("sign pair size does not match the decomposition");
    }
}

int up_count(const std::vector<int> &spins) {
    int n = 0;
    for (int s : spins) n += s == 1;
    return n;
}

// Integer exponent (1 + s) / 2 in {0, 1}.
int up_bit(int s) { return (1 + s) / 2; }

}  // namespace

OccupationSets OccupationSets::from_masks(int sites, std::uint64_t bra_mask, std::uint64_t ket_mask) {
    if (sites < 0 || sites > 63) throw ValidationError("OccupationSets: L out of range");
    std::uint64_t limit = std::uint64_t{1} << sites;
    if (bra_mask >= limit || ket_mask >= limit) throw ValidationError("OccupationSets: mask has bits beyond L");
    OccupationSets occ;
    occ.sites = sites;
    occ.bra_occupied = mask_to_sites(sites, bra_mask);
    occ.ket_occupied = mask_to_sites(sites, ket_mask);
    return occ;
}

std::vector<int> OccupationSets::bra_empty() const { return complement(sites, bra_occupied); }
std::vector<int> OccupationSets::ket_empty() const { return complement(sites, ket_occupied); }

SpinConfiguration SpinConfiguration::from_masks(int sites, std::uint64_t bra_mask, std::uint64_t ket_mask) {
    SpinConfiguration cfg;
    cfg.sites = sites;
    cfg.bra.resize(sites);
    cfg.ket.resize(sites);
    for (int l = 0; l < sites; ++l) {
        cfg.bra[l] = ((bra_mask >> l) & 1) ? 1 : -1;
        cfg.ket[l] = ((ket_mask >> l) & 1) ? 1 : -1;
    }
    cfg.bra_angles.assign(sites, SiteAngles{});
    cfg.ket_angles.assign(sites, SiteAngles{});
    return cfg;
}

SpinConfiguration SpinConfiguration::shared(std::vector<int> bra, std::vector<int> ket, std::vector<SiteAngles> angles) {
    SpinConfiguration cfg;
    cfg.sites = static_cast<int>(bra.size());
    cfg.bra = std::move(bra);
    cfg.ket = std::move(ket);
    cfg.bra_angles = angles;
    cfg.ket_angles = std::move(angles);
    cfg.check();
    return cfg;
}

std::uint64_t SpinConfiguration::bra_mask() const {
    std::uint64_t m = 0;
    for (int l = 0; l < sites; ++l) m |= std::uint64_t(bra[l] == 1) << l;
    return m;
}

std::uint64_t SpinConfiguration::ket_mask() const {
    std::uint64_t m = 0;
    for (int l = 0; l < sites; ++l) m |= std::uint64_t(ket[l] == 1) << l;
    return m;
}

bool SpinConfiguration::diagonal_basis() const {
    for (const auto &a : bra_angles) {
        if (a.theta != 0.0) return false;
    }
    for (const auto &a : ket_angles) {
        if (a.theta != 0.0) return false;
    }
    return true;
}

void SpinConfiguration::check() const {
    if (sites < 0 || static_cast<int>(bra.size()) != sites || static_cast<int>(ket.size()) != sites ||
        static_cast<int>(bra_angles.size()) != sites || static_cast<int>(ket_angles.size()) != sites) {
        throw ValidationError("SpinConfiguration: spins and angles must have length L");
    }
    for (int l = 0; l < sites; ++l) {
        if ((bra[l] != 1 && bra[l] != -1) || (ket[l] != 1 && ket[l] != -1)) {
            throw ValidationError("SpinConfiguration: spins must be +1 or -1");
        }
        for (const SiteAngles *a : {&bra_angles[l], &ket_angles[l]}) {
            if (!std::isfinite(a->phi) || !std::isfinite(a->theta) || !std::isfinite(a->alpha)) {
                throw ValidationError("SpinConfiguration: angles must be finite");
            }
        }
    }
}

Axis parse_axis(char c) {
    switch (c) {
        case 'x':
        case 'X':
            return Axis::x;
        case 'y':
        case 'Y':
            return Axis::y;
        case 'z':
        case 'Z':
            return Axis::z;
    }
    throw ValidationError(std::string("unsupported basis label '") + c + "'");
}

char axis_label(Axis a) {
    switch (a) {
        case Axis::x:
            return 'x';
        case Axis::y:
            return 'y';
        case Axis::z:
            return 'z';
    }
    return 'z';
}

SiteAngles axis_angles(Axis a) {
    constexpr double half_pi = std::numbers::pi / 2;
    switch (a) {
        case Axis::x:
            return {0.0, half_pi, 0.0};
        case Axis::y:
            return {half_pi, half_pi, 0.0};
        case Axis::z:
            return {0.0, 0.0, 0.0};
    }
    return {};
}

Complex element_computational(const BlockDecomposition &bd, const OccupationSets &occ) {
    const int L = bd.sites;
    if (occ.sites != L) throw ValidationError("element_computational: occupation sets have the wrong L");
    const long ni = static_cast<long>(occ.ket_occupied.size());
    const long nj = static_cast<long>(occ.bra_occupied.size());
    if ((ni + nj) % 2 != 0) return 0.0;
    std::vector<int> keep = occ.bra_occupied;
    for (int i : occ.ket_occupied) keep.push_back(L + i);
    long exponent = ni * (ni + 2 * nj + 1) / 2;
    double sign = exponent % 2 == 0 ? 1.0 : -1.0;
    return sign * bd.amplitude() * pfaffian(submatrix_keep(bd.kernel, keep));
}

Complex element_particle_conserving(const ComplexMatrix &hopping, const OccupationSets &occ) {
    if (hopping.rows() != hopping.cols() || hopping.rows() != occ.sites) {
        throw ValidationError("element_particle_conserving: hopping matrix must be L x L");
    }
    if (occ.ket_occupied.size() != occ.bra_occupied.size()) return 0.0;
    ComplexMatrix T = matrix_exp(hopping);
    return determinant(submatrix(T, occ.bra_occupied, occ.ket_occupied));
}

ComplexMatrix kernel_sigma_z(const BlockDecomposition &bd, const SignPair &pair, const SpinConfiguration &cfg) {
    check_pair_shape(bd, pair);
    cfg.check();
    if (cfg.sites != bd.sites) throw ValidationError("kernel_sigma_z: configuration has the wrong L");
    for (int l = 0; l < cfg.sites; ++l) {
        const SiteAngles &b = cfg.bra_angles[l];
        const SiteAngles &k = cfg.ket_angles[l];
        if (b.phi != 0 || b.theta != 0 || b.alpha != 0 || k.phi != 0 || k.theta != 0 || k.alpha != 0) {
            throw ValidationError("kernel_sigma_z: all basis angles must be zero");
        }
    }
    const int L = bd.sites;
    const int n = 2 * L;
    std::vector<int> s(cfg.bra);
    s.insert(s.end(), cfg.ket.begin(), cfg.ket.end());
    ComplexMatrix K = ComplexMatrix::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        for (int k = m + 1; k < n; ++k) {
            Complex v = 0.0;
            if (s[m] == 1 && s[k] == 1) v = double(pair.sigma(m, k)) * bd.kernel(m, k);
            if (s[m] == -1 && s[k] == -1) v = double(pair.sigma_prime(m, k));
            K(m, k) = v;
            K(k, m) = -v;
        }
    }
    return K;
}

Complex element_sigma_z(const BlockDecomposition &bd, const SignPair &pair, const SpinConfiguration &cfg) {
    ComplexMatrix K = kernel_sigma_z(bd, pair, cfg);
    if ((up_count(cfg.bra) + up_count(cfg.ket)) % 2 != 0) return 0.0;
    return bd.amplitude() * pfaffian(K);
}

ComplexMatrix kernel_pauli(const BlockDecomposition &bd, const SignPair &pair, const SpinConfiguration &cfg) {
    check_pair_shape(bd, pair);
    cfg.check();
    if (cfg.sites != bd.sites) throw ValidationError("kernel_pauli: configuration has the wrong L");
    const int L = bd.sites;
    const int n = 2 * L;
    std::vector<int> s(n);
    // u carries the Sigma*A channel, v the Sigma' channel.
    std::vector<Complex> u(n);
    std::vector<double> v(n);
    for (int m = 0; m < n; ++m) {
        const bool bra_side = m < L;
        const SiteAngles &a = bra_side ? cfg.bra_angles[m] : cfg.ket_angles[m - L];
        s[m] = bra_side ? cfg.bra[m] : cfg.ket[m - L];
        const double phi_bar = bra_side ? a.phi : -a.phi;
        const double c = std::cos(a.theta / 2);
        const double sn = std::sin(a.theta / 2);
        // Exponents (1 +- s)/2 are exact 0/1, so 0^0 never reaches pow().
        const bool up = up_bit(s[m]) == 1;
        u[m] = std::exp(kI * phi_bar) * (up ? c : sn);
        v[m] = up ? sn : c;
    }
    ComplexMatrix K = ComplexMatrix::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        for (int k = m + 1; k < n; ++k) {
            const double sg = s[m] == s[k] ? 1.0 : -1.0;
            Complex val = double(pair.sigma(m, k)) * bd.kernel(m, k) * u[m] * u[k] +
                          sg * double(pair.sigma_prime(m, k)) * v[m] * v[k];
            K(m, k) = val;
            K(k, m) = -val;
        }
    }
    return K;
}

Complex element_pauli(const BlockDecomposition &bd, const SignPair &pair, const SpinConfiguration &cfg) {
    ComplexMatrix K = kernel_pauli(bd, pair, cfg);
    if (cfg.diagonal_basis() && (up_count(cfg.bra) + up_count(cfg.ket)) % 2 != 0) return 0.0;
    double alpha_sum = 0.0;
    double phi_sum = 0.0;
    for (int l = 0; l < cfg.sites; ++l) {
        if (cfg.bra[l] == -1) alpha_sum += cfg.bra_angles[l].alpha;
        if (cfg.ket[l] == -1) alpha_sum -= cfg.ket_angles[l].alpha;
        phi_sum += cfg.ket_angles[l].phi - cfg.bra_angles[l].phi;
    }
    return std::exp(kI * (phi_sum - alpha_sum)) * bd.amplitude() * pfaffian(K);
}

ComplexMatrix kernel_special(Axis bra_axis, Axis ket_axis, const BlockDecomposition &bd, const SignPair &pair,
                             const std::vector<int> &bra, const std::vector<int> &ket) {
    check_pair_shape(bd, pair);
    const int L = bd.sites;
    const int n = 2 * L;
    if (static_cast<int>(bra.size()) != L || static_cast<int>(ket.size()) != L) {
        throw ValidationError("kernel_special: spin strings must have length L");
    }
    const double r = std::sqrt(0.5);
    std::vector<int> s(n);
    std::vector<Complex> u(n);
    std::vector<double> v(n);
    for (int m = 0; m < n; ++m) {
        const bool bra_side = m < L;
        const Axis ax = bra_side ? bra_axis : ket_axis;
        s[m] = bra_side ? bra[m] : ket[m - L];
        if (s[m] != 1 && s[m] != -1) throw ValidationError("kernel_special: spins must be +1 or -1");
        switch (ax) {
            case Axis::z:
                u[m] = s[m] == 1 ? 1.0 : 0.0;
                v[m] = s[m] == 1 ? 0.0 : 1.0;
                break;
            case Axis::x:
                u[m] = r;
                v[m] = r;
                break;
            case Axis::y:
                u[m] = bra_side ? Complex(0.0, r) : Complex(0.0, -r);
                v[m] = r;
                break;
        }
    }
    ComplexMatrix K = ComplexMatrix::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        for (int k = m + 1; k < n; ++k) {
            Complex val = double(pair.sigma(m, k)) * bd.kernel(m, k) * u[m] * u[k] +
                          double(s[m] * s[k]) * double(pair.sigma_prime(m, k)) * v[m] * v[k];
            K(m, k) = val;
            K(k, m) = -val;
        }
    }
    return K;
}

Complex generating_function(const BlockDecomposition &bd, const SignPair &pair, const ComplexVector &lambda) {
    check_pair_shape(bd, pair);
    const int n = 2 * bd.sites;
    if (lambda.size() != n) throw ValidationError("generating_function: lambda must have length 2L");
    ComplexMatrix K = ComplexMatrix::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        for (int k = m + 1; k < n; ++k) {
            Complex val =
                double(pair.sigma(m, k)) * bd.kernel(m, k) + double(pair.sigma_prime(m, k)) * lambda(m) * lambda(k);
            K(m, k) = val;
            K(k, m) = -val;
        }
    }
    return bd.amplitude() * pfaffian(K);
}

double diagonal_probability(const RealMatrix &G, const std::vector<int> &config) {
    const Eigen::Index L = G.rows();
    if (G.cols() != L || static_cast<Eigen::Index>(config.size()) != L) {
        throw ValidationError("diagonal_probability: G must be L x L and config of length L");
    }
    RealMatrix B = RealMatrix::Identity(L, L);
    for (Eigen::Index i = 0; i < L; ++i) {
        int c = config[i];
        if (c != 1 && c != -1) throw ValidationError("diagonal_probability: config entries must be +1 or -1");
        double d = c == 1 ? -1.0 : 1.0;
        B.row(i) -= d * G.row(i);
    }
    if (L == 0) return 1.0;
    return (B / 2.0).determinant();
}

}  // namespace gpauli
