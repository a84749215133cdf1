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

#include "commands.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

#include "CLI11.hpp"

#include "gpauli/errors.hpp"
#include "gpauli/fock.hpp"
#include "gpauli/lie.hpp"
#include "gpauli/parallel.hpp"
#include "gpauli/random.hpp"
#include "io.hpp"

namespace gpauli::cli {

namespace {

using io::json;

constexpr int kMaxTableSites = 7;
constexpr int kMaxVerifySites = 6;
constexpr int kMaxClosureSites = 8;
constexpr int kMaxFrameSites = 16;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const RunConfig &cfg, std::ostream &out, const std::string &text) {
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        io::write_text(cfg.out_path, text);
    }
}

void emit_json(const RunConfig &cfg, std::ostream &out, const json &j) { emit(cfg, out, j.dump(2) + "\n"); }

int required_sites(const RunConfig &cfg) {
    if (!cfg.sites) throw UsageError(cfg.command + ": -L/--sites is required");
    if (*cfg.sites < 1) throw ValidationError("L must be >= 1");
    return *cfg.sites;
}

RandomSpecOptions random_options(const RunConfig &cfg) {
    RandomSpecOptions opt;
    opt.kind = parse_operator_kind(cfg.kind);
    return opt;
}

GaussianSpec load_spec(const RunConfig &cfg) {
    if (!cfg.spec_path.empty()) {
        GaussianSpec spec = io::spec_from_json(io::read_json_file(cfg.spec_path));
        if (cfg.sites && *cfg.sites != spec.sites) throw ValidationError("--sites disagrees with the spec file");
        return spec;
    }
    if (cfg.sites) {
        Rng rng(cfg.seed);
        return random_decomposable_spec(required_sites(cfg), rng, random_options(cfg));
    }
    throw UsageError(cfg.command + ": give --spec FILE, or -L N for a seeded random spec");
}

SignPair load_pair(const RunConfig &cfg, int sites) {
    if (cfg.pair_path.empty()) return canonical_pair(sites);
    SignPair pair = io::pair_from_json(io::read_json_file(cfg.pair_path));
    if (pair.sites != sites) throw ValidationError("sign pair L does not match the spec");
    return pair;
}

io::Basis load_basis(const std::string &basis, int sites) {
    if (basis.empty()) return io::basis_from_letters(std::string(sites, 'z'), sites);
    if (static_cast<int>(basis.size()) == sites && basis.find_first_not_of("xyzXYZ") == std::string::npos) {
        return io::basis_from_letters(basis, sites);
    }
    return io::basis_from_json(io::read_json_file(basis), sites);
}

SpinConfiguration make_config(const io::Basis &b, std::vector<int> bra, std::vector<int> ket) {
    SpinConfiguration c;
    c.sites = static_cast<int>(bra.size());
    c.bra = std::move(bra);
    c.ket = std::move(ket);
    c.bra_angles = b.bra;
    c.ket_angles = b.ket;
    c.check();
    return c;
}

SpinConfiguration config_from_masks(const io::Basis &b, int sites, std::uint64_t bra, std::uint64_t ket) {
    SpinConfiguration c = SpinConfiguration::from_masks(sites, bra, ket);
    c.bra_angles = b.bra;
    c.ket_angles = b.ket;
    return c;
}

double relative_dev(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

json provenance(const RunConfig &cfg, const GaussianSpec &spec, const SignPair &pair) {
    json j;
    j["spec_hash"] = io::spec_hash(spec);
    j["sign_pair"] = io::pair_id(pair);
    j["tol"] = cfg.tol;
    j["seed"] = cfg.spec_path.empty() ? json(cfg.seed) : json(nullptr);
    return j;
}

}  // namespace

int cmd_element(const RunConfig &cfg, std::ostream &out) {
    if (cfg.bra.empty() || cfg.ket.empty()) throw UsageError("element: --bra and --ket are required");
    GaussianSpec spec = load_spec(cfg);
    const int L = spec.sites;
    std::vector<int> bra = io::parse_spins(cfg.bra);
    std::vector<int> ket = io::parse_spins(cfg.ket);
    if (static_cast<int>(bra.size()) != L || static_cast<int>(ket.size()) != L) {
        throw ValidationError("element: spin strings must have one character per site");
    }
    SignPair pair = load_pair(cfg, L);
    io::Basis basis = load_basis(cfg.basis, L);
    SpinConfiguration c = make_config(basis, bra, ket);
    BlockDecomposition bd = decompose(spec);
    Complex value = element_pauli(bd, pair, c);

    int code = kOk;
    json j;
    j["L"] = L;
    j["bra"] = io::format_spins(bra);
    j["ket"] = io::format_spins(ket);
    j["value"] = io::to_json(value);
    j["provenance"] = provenance(cfg, spec, pair);
    if (cfg.check) {
        Complex ref = element_oracle(spec, c);
        double dev = relative_dev(value, ref);
        j["oracle"] = io::to_json(ref);
        j["deviation"] = dev;
        j["passed"] = dev <= cfg.tol;
        if (dev > cfg.tol) code = kVerificationFailed;
    }
    if (cfg.format == "csv") {
        std::string text = "bra,ket,re,im\n" + io::format_spins(bra) + "," + io::format_spins(ket) + "," +
                           fmt(value.real()) + "," + fmt(value.imag()) + "\n";
        emit(cfg, out, text);
    } else {
        emit_json(cfg, out, j);
    }
    return code;
}

int cmd_table(const RunConfig &cfg, std::ostream &out) {
    GaussianSpec spec = load_spec(cfg);
    const int L = spec.sites;
    if (L > kMaxTableSites) {
        std::ostringstream msg;
        msg << "table: L = " << L << " exceeds the table guard L <= " << kMaxTableSites;
        throw GuardError(msg.str());
    }
    SignPair pair = load_pair(cfg, L);
    io::Basis basis = load_basis(cfg.basis, L);
    BlockDecomposition bd = decompose(spec);
    const std::uint64_t dim = std::uint64_t{1} << L;
    ComplexMatrix table(dim, dim);
    parallel_for(dim, [&](std::size_t b) {
        for (std::uint64_t k = 0; k < dim; ++k) table(b, k) = element_pauli(bd, pair, config_from_masks(basis, L, b, k));
    });

    int code = kOk;
    std::optional<double> herm_dev;
    if (spec.kind == OperatorKind::mixed_hermitian) herm_dev = max_abs(table - table.adjoint());
    std::optional<double> oracle_dev;
    if (cfg.check) {
        DenseOperator ref = rotate(build_gaussian(spec), basis.bra, basis.ket);
        double worst = 0.0;
        for (std::uint64_t b = 0; b < dim; ++b) {
            for (std::uint64_t k = 0; k < dim; ++k) worst = std::max(worst, relative_dev(table(b, k), ref.matrix(b, k)));
        }
        oracle_dev = worst;
        if (worst > cfg.tol) code = kVerificationFailed;
    }

    if (cfg.format == "csv") {
        std::ostringstream s;
        s << "bra";
        for (std::uint64_t k = 0; k < dim; ++k) {
            const std::string lab = io::binary_label(k, L);
            s << "," << lab << "_re," << lab << "_im";
        }
        s << "\n";
        for (std::uint64_t b = 0; b < dim; ++b) {
            s << io::binary_label(b, L);
            for (std::uint64_t k = 0; k < dim; ++k) s << "," << fmt(table(b, k).real()) << "," << fmt(table(b, k).imag());
            s << "\n";
        }
        if (herm_dev) s << "# hermitian," << (*herm_dev <= 1e-9 ? "true" : "false") << "," << fmt(*herm_dev) << "\n";
        if (oracle_dev) s << "# oracle_max_dev," << fmt(*oracle_dev) << "\n";
        emit(cfg, out, s.str());
    } else {
        json j;
        j["L"] = L;
        json labels = json::array();
        for (std::uint64_t b = 0; b < dim; ++b) labels.push_back(io::binary_label(b, L));
        j["labels"] = labels;
        j["values"] = io::matrix_to_json(table);
        j["provenance"] = provenance(cfg, spec, pair);
        if (herm_dev) j["hermitian"] = {{"passed", *herm_dev <= 1e-9}, {"max_dev", *herm_dev}};
        if (oracle_dev) j["oracle_max_dev"] = *oracle_dev;
        emit_json(cfg, out, j);
    }
    return code;
}

int cmd_signs(const RunConfig &cfg, std::ostream &out) {
    const int L = required_sites(cfg);
    std::vector<SignPair> pairs = enumerate_pairs(L);
    json j;
    j["L"] = L;
    j["count"] = pairs.size();
    json arr = json::array();
    for (const auto &p : pairs) arr.push_back(io::pair_to_json(p));
    j["pairs"] = arr;
    int code = kOk;
    if (cfg.check) {
        Rng rng(cfg.seed);
        GaussianSpec spec = random_decomposable_spec(L, rng);
        PairValidationOptions opt;
        opt.trials = cfg.trials > 0 ? cfg.trials : -1;
        opt.seed = cfg.seed;
        opt.tol = cfg.tol;
        std::vector<Diagnostics> diags(pairs.size());
        parallel_for(pairs.size(), [&](std::size_t i) { diags[i] = validate_pair(pairs[i], spec, opt); });
        json results = json::array();
        bool all = true;
        for (size_t i = 0; i < pairs.size(); ++i) {
            const Check *f = diags[i].find("functional_max_dev");
            results.push_back({{"index", i}, {"passed", diags[i].passed()}, {"functional_max_dev", f ? f->value : 0.0}});
            all = all && diags[i].passed();
        }
        j["validation"] = {{"spec_hash", io::spec_hash(spec)}, {"all_passed", all}, {"pairs", results}};
        if (!all) code = kVerificationFailed;
    }
    emit_json(cfg, out, j);
    return code;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    const int L = required_sites(cfg);
    if (L > kMaxVerifySites) {
        std::ostringstream msg;
        msg << "verify: L = " << L << " exceeds the guard L <= " << kMaxVerifySites;
        throw GuardError(msg.str());
    }
    if (cfg.trials < 1) throw ValidationError("verify: --trials must be >= 1");
    const SignPair pair = load_pair(cfg, L);
    const bool random_basis = cfg.basis == "random" || cfg.basis == "random-split";
    const io::Basis fixed = random_basis ? io::Basis{} : load_basis(cfg.basis, L);
    const RandomSpecOptions opt = random_options(cfg);
    const std::uint64_t dim = std::uint64_t{1} << L;

    struct Outcome {
        double worst = 0.0;
        std::uint64_t bra = 0, ket = 0;
        Complex formula, oracle;
        std::size_t elements = 0;
        std::size_t exact_zero_violations = 0;
    };
    std::vector<Outcome> outcomes(cfg.trials);
    parallel_for(cfg.trials, [&](std::size_t t) {
        // One generator per trial keeps results independent of scheduling.
        Rng rng(cfg.seed * 1000003ULL + t);
        GaussianSpec spec = random_decomposable_spec(L, rng, opt);
        io::Basis basis = fixed;
        if (random_basis) {
            basis.bra = random_angles(L, rng);
            basis.ket = cfg.basis == "random-split" ? random_angles(L, rng) : basis.bra;
        }
        BlockDecomposition bd = decompose(spec);
        DenseOperator ref = rotate(build_gaussian(spec), basis.bra, basis.ket);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
        if (cfg.samples <= 0 || static_cast<std::uint64_t>(cfg.samples) >= dim * dim) {
            for (std::uint64_t b = 0; b < dim; ++b) {
                for (std::uint64_t k = 0; k < dim; ++k) cells.emplace_back(b, k);
            }
        } else {
            std::uniform_int_distribution<std::uint64_t> pick(0, dim - 1);
            for (int s = 0; s < cfg.samples; ++s) cells.emplace_back(pick(rng), pick(rng));
        }
        Outcome &o = outcomes[t];
        for (const auto &[b, k] : cells) {
            SpinConfiguration c = config_from_masks(basis, L, b, k);
            Complex f = element_pauli(bd, pair, c);
            Complex r = ref.matrix(b, k);
            double dev = relative_dev(f, r);
            ++o.elements;
            if (c.diagonal_basis() && (std::popcount(b) + std::popcount(k)) % 2 == 1 && f != Complex(0.0)) {
                ++o.exact_zero_violations;
            }
            if (o.elements == 1 || dev > o.worst) {
                o.worst = dev;
                o.bra = b;
                o.ket = k;
                o.formula = f;
                o.oracle = r;
            }
        }
    });

    std::size_t worst_trial = 0;
    std::size_t total = 0, zero_viol = 0;
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        total += outcomes[t].elements;
        zero_viol += outcomes[t].exact_zero_violations;
        if (outcomes[t].worst > outcomes[worst_trial].worst) worst_trial = t;
    }
    const Outcome &w = outcomes[worst_trial];
    const bool passed = w.worst <= cfg.tol && zero_viol == 0;
    json j;
    j["L"] = L;
    j["trials"] = cfg.trials;
    j["elements"] = total;
    j["basis"] = cfg.basis.empty() ? "z" : cfg.basis;
    j["sign_pair"] = io::pair_id(pair);
    j["max_dev"] = w.worst;
    j["tol"] = cfg.tol;
    j["parity_zero_violations"] = zero_viol;
    j["passed"] = passed;
    std::vector<int> bra(L), ket(L);
    for (int l = 0; l < L; ++l) {
        bra[l] = ((w.bra >> l) & 1) ? 1 : -1;
        ket[l] = ((w.ket >> l) & 1) ? 1 : -1;
    }
    j["worst"] = {{"trial", worst_trial},
                  {"bra", io::format_spins(bra)},
                  {"ket", io::format_spins(ket)},
                  {"formula", io::to_json(w.formula)},
                  {"oracle", io::to_json(w.oracle)}};
    emit_json(cfg, out, j);
    return passed ? kOk : kVerificationFailed;
}

int cmd_algebra(const RunConfig &cfg, std::ostream &out) {
    const int L = required_sites(cfg);
    if (L > kMaxFrameSites) {
        std::ostringstream msg;
        msg << "algebra: L = " << L << " exceeds the guard L <= " << kMaxFrameSites;
        throw GuardError(msg.str());
    }
    const SignPair pair = load_pair(cfg, L);
    bool passed = true;
    json j;
    j["L"] = L;
    j["expected"] = L * (2 * L - 1);
    if (L <= kMaxClosureSites) {
        int dim = closure_dimension({to_real(pair.sigma), to_real(pair.sigma_prime)});
        j["closure_dim"] = dim;
        passed = passed && dim == L * (2 * L - 1);
    } else {
        j["closure_dim"] = nullptr;
    }
    Diagnostics spec_diag = spectrum_check(pair.sigma, L);
    j["spectrum_max_dev"] = std::max(spec_diag.find("eigenvalue_dev")->value, spec_diag.find("block_dev")->value);
    passed = passed && spec_diag.passed();

    OrthogonalFrame f = orthogonal_frame(L);
    double orth = (f.g0.transpose() * f.g0 - RealMatrix::Identity(2 * L, 2 * L)).cwiseAbs().maxCoeff();
    j["g0_orthogonality"] = orth;
    passed = passed && orth <= 1e-12;

    json overlaps = json::array();
    if (L >= 2) {
        std::vector<RootOverlap> ov = root_overlaps(L);
        for (const auto &o : ov) overlaps.push_back(io::to_json(o.direct));
        Diagnostics od = overlap_checks(ov);
        j["overlap_route_dev"] = od.find("route_dev")->value;
        j["overlap_min_abs"] = od.find("min_abs")->value;
        passed = passed && od.passed();
    }
    j["overlaps"] = overlaps;
    if (L == 2) {
        Diagnostics t = l2_commutator_table_check(pair);
        j["l2_table"] = {{"passed", t.passed()}, {"max_dev", t.max_violation()}};
        passed = passed && t.passed();
    }
    j["passed"] = passed;
    emit_json(cfg, out, j);
    return passed ? kOk : kVerificationFailed;
}

int cmd_probability(const RunConfig &cfg, std::ostream &out) {
    RealMatrix G;
    std::optional<GaussianSpec> spec;
    if (!cfg.corr_path.empty()) {
        json jf = io::read_json_file(cfg.corr_path);
        G = io::real_matrix_from_json(jf.is_object() ? jf.at("G") : jf);
        if (G.rows() != G.cols()) throw ValidationError("probability: G must be square");
    } else {
        if (cfg.spec_path.empty() && cfg.sites) {
            Rng rng(cfg.seed);
            RandomSpecOptions opt;
            opt.kind = OperatorKind::mixed_hermitian;
            opt.real = true;
            spec = random_decomposable_spec(required_sites(cfg), rng, opt);
        } else {
            spec = load_spec(cfg);
        }
        if (spec->kind != OperatorKind::mixed_hermitian) throw ValidationError("probability: spec must be mixed_hermitian");
        ComplexMatrix Gc = correlation_oracle(*spec);
        if (Gc.size() && Gc.imag().cwiseAbs().maxCoeff() > 1e-10) {
            throw ValidationError("probability: correlation matrix is not real (complex generator)");
        }
        G = Gc.real();
    }
    const int L = static_cast<int>(G.rows());
    std::vector<std::vector<int>> configs;
    if (!cfg.config.empty()) {
        configs.push_back(io::parse_spins(cfg.config));
        if (static_cast<int>(configs[0].size()) != L) throw ValidationError("probability: --config needs one entry per site");
    } else {
        if (L > 20) throw GuardError("probability: listing every configuration needs L <= 20");
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << L); ++m) {
            std::vector<int> c(L);
            for (int l = 0; l < L; ++l) c[l] = ((m >> l) & 1) ? 1 : -1;
            configs.push_back(std::move(c));
        }
    }
    std::vector<double> probs;
    double sum = 0.0;
    for (const auto &c : configs) {
        probs.push_back(diagonal_probability(G, c));
        sum += probs.back();
    }
    if (cfg.format == "csv") {
        std::ostringstream s;
        s << "config,probability\n";
        for (size_t i = 0; i < configs.size(); ++i) s << io::format_spins(configs[i]) << "," << fmt(probs[i]) << "\n";
        emit(cfg, out, s.str());
        return kOk;
    }
    json j;
    j["L"] = L;
    if (spec) j["spec_hash"] = io::spec_hash(*spec);
    if (configs.size() == 1) {
        j["config"] = io::format_spins(configs[0]);
        j["probability"] = probs[0];
    } else {
        json arr = json::array();
        for (size_t i = 0; i < configs.size(); ++i) {
            arr.push_back({{"config", io::format_spins(configs[i])}, {"probability", probs[i]}});
        }
        j["probabilities"] = arr;
        j["sum"] = sum;
    }
    emit_json(cfg, out, j);
    return kOk;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Matrix elements of fermionic Gaussian operators in product Pauli bases"};
    app.require_subcommand(1);
    RunConfig cfg;
    int sites = 0;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--spec", cfg.spec_path, "Gaussian spec JSON file")->check(CLI::ExistingFile);
        sub->add_option("-L,--sites", sites, "Number of sites (random spec / enumeration size)");
        sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
        sub->add_option("--kind", cfg.kind, "Kind of random spec: generic | mixed_hermitian | particle_conserving")
            ->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Tolerance for oracle comparisons")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out_path, "Write the result to this file");
        sub->add_option("--format", cfg.format, "Output format")
            ->capture_default_str()
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--pair", cfg.pair_path, "Sign pair JSON file (default: canonical pair)")
            ->check(CLI::ExistingFile);
    };

    CLI::App *element = app.add_subcommand("element", "Evaluate one matrix element");
    common(element);
    element->add_option("--basis", cfg.basis, "Basis JSON file or x/y/z letters, one per site");
    element->add_option("--bra", cfg.bra, "Bra spins, e.g. +-+ (site 1 leftmost)");
    element->add_option("--ket", cfg.ket, "Ket spins");
    element->add_flag("--check", cfg.check, "Compare against the dense oracle");

    CLI::App *table = app.add_subcommand("table", "All 4^L matrix elements");
    common(table);
    table->add_option("--basis", cfg.basis, "Basis JSON file or x/y/z letters");
    table->add_flag("--check", cfg.check, "Compare against the dense oracle");

    CLI::App *signs = app.add_subcommand("signs", "Enumerate sign pairs");
    common(signs);
    signs->add_option("--trials", cfg.trials, "Configurations per functional check (<= 0: all)");
    signs->add_flag("--check", cfg.check, "Validate every pair against the computational-basis formula");

    CLI::App *verify = app.add_subcommand("verify", "Pfaffian formulas against the dense oracle");
    common(verify);
    verify->add_option("--basis", cfg.basis, "z (default), x/y/z letters, a basis file, random, or random-split");
    verify->add_option("--trials", cfg.trials, "Number of random specs")->capture_default_str();
    verify->add_option("--samples", cfg.samples, "Elements per spec (0: all 4^L)")->capture_default_str();

    CLI::App *algebra = app.add_subcommand("algebra", "Lie-algebra checks on the sign matrices");
    common(algebra);

    CLI::App *probability = app.add_subcommand("probability", "Diagonal probabilities of a real mixed state");
    common(probability);
    probability->add_option("--corr", cfg.corr_path, "Correlation matrix JSON ({\"G\": [[...]]})")
        ->check(CLI::ExistingFile);
    probability->add_option("--config", cfg.config, "Occupation pattern, + occupied / - empty (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    CLI::App *sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (sub->count("--sites") > 0) cfg.sites = sites;

    try {
        if (cfg.command == "element") return cmd_element(cfg, out);
        if (cfg.command == "table") return cmd_table(cfg, out);
        if (cfg.command == "signs") return cmd_signs(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "algebra") return cmd_algebra(cfg, out);
        if (cfg.command == "probability") return cmd_probability(cfg, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const GuardError &e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const DecompositionError &e) {
        err << "decomposition error: " << e.what() << "\n";
        return kDecomposition;
    } catch (const NumericalError &e) {
        err << "decomposition error: " << e.what() << "\n";
        return kDecomposition;
    } catch (const BranchError &e) {
        err << "branch error: " << e.what() << "\n";
        return kBranch;
    } catch (const io::json::exception &e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    }
    return kUsage;
}

}  // namespace gpauli::cli
