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

#include "gpauli/signs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "gpauli/elements.hpp"
#include "gpauli/errors.hpp"

namespace gpauli {

namespace {

SignMatrix antisymmetrize_upper(const SignMatrix &upper) {
    SignMatrix s = SignMatrix::Zero(upper.rows(), upper.cols());
    for (Eigen::Index i = 0; i < upper.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < upper.cols(); ++j) {
            s(i, j) = upper(i, j);
            s(j, i) = -upper(i, j);
        }
    }
    return s;
}

SignMatrix conjugate(const SignMatrix &s, const SignVector &p) {
    SignMatrix out = s;
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
        for (Eigen::Index j = 0; j < s.cols(); ++j) out(i, j) = p[i] * s(i, j) * p[j];
    }
    return out;
}

// -D S D with D = diag(-1, 1, ..., 1): negates everything off the first row and column.
SignMatrix even_fixup(const SignMatrix &s) {
    SignMatrix out = -s;
    out.row(0) = s.row(0);
    out.col(0) = s.col(0);
    return out;
}

std::vector<int> flatten(const SignPair &p) {
    std::vector<int> key(p.sigma.data(), p.sigma.data() + p.sigma.size());
    key.insert(key.end(), p.sigma_prime.data(), p.sigma_prime.data() + p.sigma_prime.size());
    return key;
}

void matchings_rec(std::vector<int> &free, Matching &current, const std::function<void(const Matching &)> &visit) {
    if (free.empty()) {
        visit(current);
        return;
    }
    int first = free.front();
    for (size_t k = 1; k < free.size(); ++k) {
        int partner = free[k];
        std::vector<int> rest;
        rest.reserve(free.size() - 2);
        for (size_t t = 1; t < free.size(); ++t) {
            if (t != k) rest.push_back(free[t]);
        }
        current.emplace_back(first, partner);
        matchings_rec(rest, current, visit);
        current.pop_back();
    }
}

Matching random_matching(int n, std::mt19937_64 &rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matching m;
    for (int k = 0; k < n; k += 2) m.emplace_back(std::min(perm[k], perm[k + 1]), std::max(perm[k], perm[k + 1]));
    return m;
}

}  // namespace

int required_matching_sign(int sites) {
    int r = sites % 4;
    return (r == 0 || r == 1) ? 1 : -1;
}

SignMatrix sigma_prime_from_sigma(const SignMatrix &sigma, int sites) {
    const int n = 2 * sites;
    if (sigma.rows() != n || sigma.cols() != n) throw ValidationError("sigma_prime_from_sigma: Sigma must be 2L x 2L");
    SignMatrix upper = SignMatrix::Zero(n, n);
    // 1-based (a, b), a < b.
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            int e = ((a + b + 1) % 2 == 0) ? 1 : -1;
            int f;
            if (b <= sites) {
                f = e;
            } else if (a <= sites) {
                f = ((sites + 1) % 2 == 0 ? 1 : -1) * e;
            } else {
                f = -e;
            }
            upper(a - 1, b - 1) = f * sigma(a - 1, b - 1);
        }
    }
    return antisymmetrize_upper(upper);
}

SignMatrix sigma_prime_recurrence(int sites) {
    const int n = 2 * sites;
    const int r = sites % 4;
    SignMatrix s = SignMatrix::Zero(n, n);
    // First superdiagonal, 1-based m: entry (m, m+1).
    for (int m = 1; m < n; ++m) {
        int v;
        switch (r) {
            case 0:
                v = m < sites ? 1 : -1;
                break;
            case 1:
                v = m <= sites ? 1 : -1;
                break;
            case 2:
                v = m == 1 ? 1 : (m < sites ? -1 : 1);
                break;
            default:
                v = m <= sites ? -1 : 1;
                break;
        }
        s(m - 1, m) = v;
    }
    // Diagonal i: entries (m, m+i), 1-based.
    for (int i = 2; i < n; ++i) {
        for (int m = 1; m + i <= n; ++m) {
            int v;
            if (r == 0) {
                v = -s(m, m + i - 1);
            } else if (r == 2) {
                v = m == 1 ? s(m, m + i - 1) : -s(m, m + i - 1);
            } else {
                v = -s(m - 1, m + i - 2);
            }
            s(m - 1, m + i - 1) = v;
        }
    }
    return antisymmetrize_upper(s);
}

SignPair canonical_pair(int sites) {
    if (sites < 1) throw ValidationError("canonical_pair: L must be >= 1");
    const int n = 2 * sites;
    const int r = sites % 4;
    SignMatrix upper = SignMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int v = 1;
            if (r == 2) v = (a == 0) ? 1 : -1;
            if (r == 3) v = -1;
            upper(a, b) = v;
        }
    }
    SignPair pair;
    pair.sites = sites;
    pair.sigma = antisymmetrize_upper(upper);
    pair.sigma_prime = sigma_prime_recurrence(sites);
    pair.p = recover_p_vector(pair.sigma);
    return pair;
}

SignPair from_p_vector(const SignVector &p, int sites) {
    const int n = 2 * sites;
    if (sites < 1 || static_cast<int>(p.size()) != n) {
        throw ValidationError("from_p_vector: p must have length 2L");
    }
    int prod = 1;
    for (int v : p) {
        if (v != 1 && v != -1) throw ValidationError("from_p_vector: entries must be +1 or -1");
        prod *= v;
    }
    if (prod != required_matching_sign(sites)) {
        std::ostringstream msg;
        msg << "from_p_vector: product of p is " << prod << " but L = " << sites << " requires "
            << required_matching_sign(sites);
        throw ValidationError(msg.str());
    }
    SignMatrix upper = SignMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) upper(a, b) = p[a] * p[b];
    }
    SignPair pair;
    pair.sites = sites;
    pair.sigma = antisymmetrize_upper(upper);
    pair.sigma_prime = sigma_prime_from_sigma(pair.sigma, sites);
    pair.p = p;
    return pair;
}

std::optional<SignVector> recover_p_vector(const SignMatrix &sigma) {
    const Eigen::Index n = sigma.rows();
    if (n < 2 || sigma.cols() != n) return std::nullopt;
    SignVector p(n, 1);
    for (Eigen::Index j = 1; j < n; ++j) p[j] = sigma(0, j);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (sigma(i, j) != p[i] * p[j]) return std::nullopt;
        }
    }
    return p;
}

SignPair negated(const SignPair &pair) {
    SignPair out = pair;
    out.sigma = -pair.sigma;
    out.sigma_prime = -pair.sigma_prime;
    out.p = recover_p_vector(out.sigma);
    return out;
}

std::vector<SignPair> enumerate_pairs(int sites) {
    if (sites < 1) throw ValidationError("enumerate_pairs: L must be >= 1");
    if (sites > kMaxEnumerationSites) {
        std::ostringstream msg;
        msg << "enumerate_pairs: L = " << sites << " exceeds the enumeration guard L <= " << kMaxEnumerationSites;
        throw GuardError(msg.str());
    }
    const int n = 2 * sites;
    const SignPair base = canonical_pair(sites);
    std::vector<SignPair> out;
    std::set<std::vector<int>> seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
        SignVector p(n, 1);
        int prod = 1;
        for (int k = 1; k < n; ++k) {
            if ((bits >> (k - 1)) & 1) p[k] = -1;
            prod *= p[k];
        }
        SignPair cand;
        cand.sites = sites;
        cand.sigma = conjugate(base.sigma, p);
        cand.sigma_prime = conjugate(base.sigma_prime, p);
        if (prod == -1) {
            if (sites % 2 == 1) {
                cand.sigma = -cand.sigma;
                cand.sigma_prime = -cand.sigma_prime;
            } else {
                cand.sigma = even_fixup(cand.sigma);
                cand.sigma_prime = even_fixup(cand.sigma_prime);
            }
        }
        cand.p = recover_p_vector(cand.sigma);
        if (seen.insert(flatten(cand)).second) out.push_back(std::move(cand));
    }
    return out;
}

void for_each_perfect_matching(int n, const std::function<void(const Matching &)> &visit) {
    if (n < 0 || n % 2 != 0) throw ValidationError("for_each_perfect_matching: n must be even and non-negative");
    std::vector<int> free(n);
    std::iota(free.begin(), free.end(), 0);
    Matching current;
    matchings_rec(free, current, visit);
}

int matching_product(const SignMatrix &sigma, const Matching &matching) {
    int prod = 1;
    for (const auto &[i, j] : matching) prod *= sigma(i, j);
    return prod;
}

Diagnostics structural_checks(const SignPair &pair, const PairValidationOptions &opt) {
    Diagnostics d;
    const int L = pair.sites;
    const int n = 2 * L;
    if (L < 1 || pair.sigma.rows() != n || pair.sigma.cols() != n || pair.sigma_prime.rows() != n ||
        pair.sigma_prime.cols() != n) {
        throw ValidationError("structural_checks: sign matrices must be 2L x 2L");
    }
    auto entry_violations = [&](const SignMatrix &s) {
        int bad = 0;
        for (int i = 0; i < n; ++i) {
            if (s(i, i) != 0) ++bad;
            for (int j = i + 1; j < n; ++j) {
                if (s(i, j) != -s(j, i) || (s(i, j) != 1 && s(i, j) != -1)) ++bad;
            }
        }
        return bad;
    };
    d.add("sigma_entries", entry_violations(pair.sigma), 0);
    d.add("sigma_prime_entries", entry_violations(pair.sigma_prime), 0);
    SignMatrix expect = sigma_prime_from_sigma(pair.sigma, L);
    int rel_bad = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) rel_bad += expect(i, j) != pair.sigma_prime(i, j);
    }
    d.add("sigma_prime_relations", rel_bad, 0);

    const int want = required_matching_sign(L);
    int wrong = 0;
    long checked = 0;
    if (L <= opt.exhaustive_matching_sites) {
        for_each_perfect_matching(n, [&](const Matching &m) {
            ++checked;
            if (matching_product(pair.sigma, m) != want) ++wrong;
        });
    } else {
        std::mt19937_64 rng(opt.seed);
        for (int t = 0; t < opt.sampled_matchings; ++t) {
            ++checked;
            if (matching_product(pair.sigma, random_matching(n, rng)) != want) ++wrong;
        }
    }
    d.add("matching_sign", wrong, 0);
    if (pair.p) {
        // Counts mismatched entries rather than calling from_p_vector, which
        // would throw on exactly the inputs this check should report.
        const SignVector &p = *pair.p;
        int bad = static_cast<int>(p.size()) == n ? 0 : 1;
        int prod = 1;
        for (int v : p) prod *= v;
        if (prod != want) ++bad;
        for (int i = 0; !bad && i < n; ++i) {
            for (int j = i + 1; j < n; ++j) bad += pair.sigma(i, j) != p[i] * p[j];
        }
        d.add("p_vector", bad, 0);
    }
    std::ostringstream detail;
    detail << checked << " perfect matchings checked";
    d.detail = detail.str();
    return d;
}

Diagnostics validate_pair(const SignPair &pair, const GaussianSpec &spec, const PairValidationOptions &opt) {
    if (spec.sites != pair.sites) throw ValidationError("validate_pair: pair and spec have different L");
    Diagnostics d = structural_checks(pair, opt);
    const int L = pair.sites;
    BlockDecomposition bd = decompose(spec);
    const std::uint64_t dim = std::uint64_t{1} << L;
    const std::uint64_t total = dim * dim;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> configs;
    if (opt.trials < 0 || static_cast<std::uint64_t>(opt.trials) >= total) {
        for (std::uint64_t b = 0; b < dim; ++b) {
            for (std::uint64_t k = 0; k < dim; ++k) configs.emplace_back(b, k);
        }
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, dim - 1);
        for (int t = 0; t < opt.trials; ++t) configs.emplace_back(pick(rng), pick(rng));
    }
    double worst = 0.0;
    std::string where;
    for (const auto &[b, k] : configs) {
        Complex ref = element_computational(bd, OccupationSets::from_masks(L, b, k));
        Complex val = element_sigma_z(bd, pair, SpinConfiguration::from_masks(L, b, k));
        double dev = std::abs(val - ref) / std::max(1.0, std::abs(ref));
        if (dev > worst) {
            worst = dev;
            if (dev > opt.tol) {
                std::ostringstream msg;
                msg << "worst mismatch at bra mask " << b << ", ket mask " << k << ": pfaffian " << val
                    << " vs reference " << ref;
                where = msg.str();
            }
        }
    }
    d.add("functional_max_dev", worst, opt.tol);
    if (!where.empty()) d.detail += "; " + where;
    return d;
}

}  // namespace gpauli
