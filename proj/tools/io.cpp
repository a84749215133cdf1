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

#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gpauli/errors.hpp"

namespace gpauli::io {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Complex(j[0].get<double>(), j[1].get<double>());
    }
    throw ValidationError("expected a number or an [re, im] pair, got " + j.dump());
}

json matrix_to_json(const ComplexMatrix &M) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(to_json(M(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array()) throw ValidationError("matrix must be an array of rows");
    const size_t rows = j.size();
    const size_t cols = rows ? j[0].size() : 0;
    ComplexMatrix M(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ValidationError("matrix rows must have equal length");
        for (size_t k = 0; k < cols; ++k) M(i, k) = complex_from_json(j[i][k]);
    }
    return M;
}

RealMatrix real_matrix_from_json(const json &j) {
    ComplexMatrix M = matrix_from_json(j);
    if (M.size() && M.imag().cwiseAbs().maxCoeff() != 0.0) throw ValidationError("matrix must be real");
    return M.real();
}

json spec_to_json(const GaussianSpec &spec) {
    json j;
    j["L"] = spec.sites;
    j["kind"] = to_string(spec.kind);
    if (spec.kind == OperatorKind::particle_conserving && spec.hopping) {
        j["A"] = matrix_to_json(*spec.hopping);
    } else {
        j["M"] = matrix_to_json(spec.M);
    }
    return j;
}

GaussianSpec spec_from_json(const json &j) {
    if (!j.is_object() || !j.contains("L")) throw ValidationError("spec: expected an object with \"L\"");
    const int L = j.at("L").get<int>();
    if (L < 0) throw ValidationError("spec: L must be >= 0");
    OperatorKind kind = parse_operator_kind(j.value("kind", std::string("generic")));
    GaussianSpec spec;
    if (j.contains("A")) {
        ComplexMatrix A = matrix_from_json(j.at("A"));
        if (A.rows() != L || A.cols() != L) throw ValidationError("spec: \"A\" must be L x L");
        spec = GaussianSpec::particle_conserving(std::move(A));
    } else if (j.contains("M")) {
        if (kind == OperatorKind::particle_conserving) {
            throw ValidationError("spec: particle_conserving specs are given by \"A\"");
        }
        ComplexMatrix M = matrix_from_json(j.at("M"));
        if (M.rows() != 2 * L || M.cols() != 2 * L) throw ValidationError("spec: \"M\" must be 2L x 2L");
        spec = kind == OperatorKind::mixed_hermitian ? GaussianSpec::mixed(std::move(M)) : GaussianSpec::generic(std::move(M));
    } else {
        throw ValidationError("spec: needs \"M\" or \"A\"");
    }
    spec.sites = L;
    return spec;
}

json pair_to_json(const SignPair &pair) {
    auto mat = [](const SignMatrix &s) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < s.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index k = 0; k < s.cols(); ++k) row.push_back(s(i, k));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    json j;
    j["L"] = pair.sites;
    j["p"] = pair.p ? json(*pair.p) : json(nullptr);
    j["sigma"] = mat(pair.sigma);
    j["sigma_prime"] = mat(pair.sigma_prime);
    return j;
}

SignPair pair_from_json(const json &j) {
    if (!j.is_object()) throw ValidationError("sign pair: expected an object");
    SignPair pair;
    pair.sites = j.at("L").get<int>();
    const int n = 2 * pair.sites;
    auto mat = [n](const json &rows, const char *name) {
        if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
            throw ValidationError(std::string("sign pair: \"") + name + "\" must be 2L x 2L");
        }
        SignMatrix s(n, n);
        for (int i = 0; i < n; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
                throw ValidationError(std::string("sign pair: \"") + name + "\" must be 2L x 2L");
            }
            for (int k = 0; k < n; ++k) s(i, k) = rows[i][k].get<int>();
        }
        return s;
    };
    pair.sigma = mat(j.at("sigma"), "sigma");
    pair.sigma_prime = mat(j.at("sigma_prime"), "sigma_prime");
    if (j.contains("p") && !j["p"].is_null()) pair.p = j["p"].get<SignVector>();
    return pair;
}

namespace {

SiteAngles site_from_json(const json &s) {
    if (s.is_string()) {
        const std::string label = s.get<std::string>();
        if (label.size() != 1) throw ValidationError("basis: unknown shorthand \"" + label + "\"");
        return axis_angles(parse_axis(label[0]));
    }
    if (!s.is_object()) throw ValidationError("basis: each site is an angle object or \"x\"/\"y\"/\"z\"");
    SiteAngles a;
    a.phi = s.value("phi", 0.0);
    a.theta = s.value("theta", 0.0);
    a.alpha = s.value("alpha", 0.0);
    return a;
}

std::vector<SiteAngles> sites_from_json(const json &arr, int sites, const char *key) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != sites) {
        std::ostringstream msg;
        msg << "basis: \"" << key << "\" must list " << sites << " sites";
        throw ValidationError(msg.str());
    }
    std::vector<SiteAngles> out;
    for (const auto &s : arr) out.push_back(site_from_json(s));
    return out;
}

}  // namespace

Basis basis_from_json(const json &j, int sites) {
    if (!j.is_object() || !j.contains("sites")) throw ValidationError("basis: expected {\"sites\": [...]}");
    Basis b;
    b.bra = sites_from_json(j.at("sites"), sites, "sites");
    b.ket = j.contains("ket_sites") ? sites_from_json(j.at("ket_sites"), sites, "ket_sites") : b.bra;
    return b;
}

Basis basis_from_letters(const std::string &letters, int sites) {
    if (static_cast<int>(letters.size()) != sites) throw ValidationError("basis: need one x/y/z letter per site");
    Basis b;
    for (char c : letters) b.bra.push_back(axis_angles(parse_axis(c)));
    b.ket = b.bra;
    return b;
}

std::vector<int> parse_spins(const std::string &s) {
    std::vector<int> out;
    for (size_t i = 0; i < s.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c == '+' || c == 'u' || c == '1') {
            out.push_back(1);
        } else if (c == '-' || c == 'd' || c == '0') {
            out.push_back(-1);
        } else if (c == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
                   static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back(-1);  // U+2212 minus sign
            i += 2;
        } else {
            throw ValidationError("spin string \"" + s + "\": use '+' and '-'");
        }
    }
    return out;
}

std::string format_spins(const std::vector<int> &spins) {
    std::string s;
    for (int v : spins) s.push_back(v == 1 ? '+' : '-');
    return s;
}

std::string binary_label(std::uint64_t mask, int sites) {
    std::string s;
    for (int l = 0; l < sites; ++l) s.push_back(((mask >> l) & 1) ? '1' : '0');
    return s;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
}

std::uint64_t fnv1a(const std::string &bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string spec_hash(const GaussianSpec &spec) { return hex64(fnv1a(spec_to_json(spec).dump())); }

std::string pair_id(const SignPair &pair) {
    if (pair == canonical_pair(pair.sites)) return "canonical";
    json j = pair_to_json(pair);
    j.erase("p");
    return "pair-" + hex64(fnv1a(j.dump()));
}

}  // namespace gpauli::io
