#include "workbench/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <qis/bethe.hpp>
#include <qis/boundary.hpp>
#include <qis/braid.hpp>
#include <qis/hamiltonian.hpp>

namespace workbench {

using nlohmann::json;
using namespace qis;

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::string num(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

std::string finish_json(json doc) {
    doc["schema"] = "v1";
    return doc.dump(2) + "\n";
}

struct Check {
    std::string identity;
    json params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass() const { return std::isfinite(residual) && residual < tolerance; }
};

// Points in the disc |lambda| <= r from a seeded stream.
std::vector<std::pair<cplx, cplx>> spectral_pairs(int count, double r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto point = [&] {
        const double rad = r * std::sqrt(u(rng));
        const double phi = 2.0 * M_PI * u(rng);
        return std::polar(rad, phi);
    };
    std::vector<std::pair<cplx, cplx>> out;
    for (int k = 0; k < count; ++k) {
        const cplx a = point();
        out.emplace_back(a, point());
    }
    return out;
}

SpectralMatrixFamily corrupted(SpectralMatrixFamily R, double eps) {
    if (eps == 0.0) return R;
    auto eval = R.eval;
    const Operator defect = kron(pauli_z(), Operator::identity({R.dim_right}));
    R.eval = [eval, defect, eps](cplx l) { return eval(l) + cplx(eps) * defect; };
    R.name += "_corrupted";
    return R;
}

std::string gradation_name(Gradation g) { return g == Gradation::principal ? "principal" : "homogeneous"; }

std::string k_name(KSpec::Kind k) {
    switch (k) {
        case KSpec::Kind::identity: return "identity";
        case KSpec::Kind::gz_dvgr: return "gz_dvgr";
        case KSpec::Kind::blob: return "blob";
    }
    return "";
}

// One R family per requested gradation; a single rational family for XXX.
std::vector<std::pair<std::string, SpectralMatrixFamily>> r_families(const VerifyConfig& c) {
    std::vector<std::pair<std::string, SpectralMatrixFamily>> out;
    if (c.model == Model::xxx) {
        out.emplace_back("xxx", corrupted(r_xxx(), c.corruption));
    } else {
        for (Gradation g : c.gradations) out.emplace_back("xxz " + gradation_name(g), corrupted(r_xxz(c.mu, g), c.corruption));
    }
    return out;
}

ChainSpec periodic_chain(const VerifyConfig& c, Gradation g) {
    return c.model == Model::xxx ? ChainSpec::periodic_xxx(c.N, c.n) : ChainSpec::periodic_xxz(c.N, c.mu, g, c.n);
}

std::vector<Gradation> gradations_for(const VerifyConfig& c) {
    return c.model == Model::xxx ? std::vector<Gradation>{Gradation::principal} : c.gradations;
}

template <class F>
double worst_over(const std::vector<std::pair<cplx, cplx>>& pairs, F f) {
    double w = 0.0;
    for (auto [a, b] : pairs) w = std::max(w, f(a, b));
    return w;
}

std::vector<Check> suite_ybe(const VerifyConfig& c, std::uint64_t seed) {
    const auto pairs = spectral_pairs(c.pairs, 2.0, seed);
    std::vector<Check> out;
    const json p{{"pairs", c.pairs}, {"mu", complex_json(c.mu)}, {"corruption", c.corruption}};
    for (const auto& [name, R] : r_families(c)) {
        out.push_back({"ybe " + name, p, worst_over(pairs, [&](cplx a, cplx b) { return ybe_residual(R, a, b); }), 1e-11});
        const SpectralMatrixFamily B = braided(R);
        out.push_back({"braided ybe " + name, p,
                       worst_over(pairs, [&](cplx a, cplx b) { return braided_ybe_residual(B, a, b); }), 1e-11});
    }
    return out;
}

std::vector<Check> suite_re(const VerifyConfig& c, std::uint64_t seed) {
    const auto pairs = spectral_pairs(c.pairs, 2.0, seed);
    const auto few = spectral_pairs(std::min(c.pairs, 5), 1.0, seed + 1);
    std::vector<Check> out;
    for (Gradation g : gradations_for(c)) {
        ChainSpec chain = periodic_chain(c, g);
        const KMatrixFamily K = k_from_spec(c.k, chain);
        SpectralMatrixFamily R = corrupted(auxiliary_r(chain), c.corruption);
        const std::string tag = (c.model == Model::xxx ? "xxx" : "xxz " + gradation_name(g)) + " K=" + k_name(c.k.kind);
        const json p{{"pairs", c.pairs}, {"mu", complex_json(c.mu)}, {"xi", complex_json(c.k.xi)},
                     {"kappa", complex_json(c.k.kappa)}, {"corruption", c.corruption}};
        out.push_back({"re " + tag, p, worst_over(pairs, [&](cplx a, cplx b) { return re_residual(R, K, a, b); }), 1e-10});
        for (int n : {2, c.n}) {
            const LaxOperator L = c.model == Model::xxx ? lax_xxx(sl2_spin_rep(n)) : lax_xxz(uq_sl2_spin_rep_mu(n, c.mu), g);
            auto dressed = [&](cplx l) { return dressed_k(L, K, l); };
            json q = p;
            q["n"] = n;
            out.push_back({"re dressed " + tag + " n=" + std::to_string(n), q,
                           worst_over(few, [&](cplx a, cplx b) { return re_residual(R, dressed, a, b); }), 1e-10});
            if (n == c.n) break;
        }
    }
    return out;
}

void add_report(std::vector<Check>& out, const std::string& prefix, const RelationReport& r, const json& p) {
    for (const auto& item : r.items) out.push_back({prefix + ": " + item.relation, p, item.residual, 1e-10});
}

std::vector<Check> suite_braid(const VerifyConfig& c) {
    const cplx q = std::exp(I_UNIT * c.mu);
    const cplx Q = I_UNIT * std::exp(I_UNIT * c.mu * c.k.blob_m);
    std::vector<Check> out;
    const json p{{"N", c.N}, {"n", c.n}, {"mu", complex_json(c.mu)}, {"corruption", c.corruption}};
    BraidFamily hecke = hecke_rep(c.n, c.N, q);
    if (c.corruption != 0.0) hecke.bonds[0] += cplx(c.corruption) * Operator::identity(hecke.bonds[0].dims());
    add_report(out, "hecke", check_hecke(hecke), p);
    add_report(out, "temperley-lieb", check_temperley_lieb(hecke_rep(2, c.N, q)), p);
    const BraidFamily blob = blob_rep(c.N, q, Q, c.k.blob_c);
    add_report(out, "blob", check_blob(blob), p);
    add_report(out, "blob quotient", check_btype_quotients(blob), p);
    add_report(out, "sl2", check_relations(sl2_spin_rep(c.n)), p);
    add_report(out, "uq(sl2)", check_relations(uq_sl2_spin_rep_mu(c.n, c.mu)), p);
    add_report(out, "cyclic", check_relations(cyclic_rep(5, 2)), p);
    add_report(out, "q-oscillator", check_relations(q_oscillator_rep(5, 2)), p);
    return out;
}

std::vector<Check> suite_frt(const VerifyConfig& c, std::uint64_t seed) {
    if (c.corruption != 0.0) throw ConfigError("corruption applies to the ybe, re and braid suites only");
    if (std::pow(c.n, c.N) > 1024) throw ConfigError("frt suite limited to n^N <= 1024");
    const auto pairs = spectral_pairs(c.pairs, 1.5, seed);
    std::vector<Check> out;
    for (Gradation g : gradations_for(c)) {
        const ChainSpec chain = periodic_chain(c, g);
        const TransferFamily t(chain);
        const std::string tag = c.model == Model::xxx ? "xxx" : "xxz " + gradation_name(g);
        const json p{{"N", c.N}, {"n", c.n}, {"pairs", c.pairs}, {"mu", complex_json(c.mu)}};
        out.push_back({"frt " + tag, p, worst_over(pairs, [&](cplx a, cplx b) { return frt_residual(chain, a, b); }), 1e-10});
        out.push_back({"commuting transfer " + tag, p, worst_over(pairs, [&](cplx a, cplx b) {
                           const Operator ta = t(a), tb = t(b);
                           return comm_norm(ta, tb) / (ta.norm() * tb.norm());
                       }), 1e-9});
    }
    return out;
}

std::vector<Check> suite_symmetry(const VerifyConfig& c, std::uint64_t seed) {
    if (c.corruption != 0.0) throw ConfigError("corruption applies to the ybe, re and braid suites only");
    if (std::pow(c.n, c.N) > 1024) throw ConfigError("symmetry suite limited to n^N <= 1024");
    const auto points = spectral_pairs(std::min(c.pairs, 5), 1.0, seed);
    const json p{{"N", c.N}, {"n", c.n}, {"mu", complex_json(c.mu)}};
    std::vector<Check> out;
    auto scaled_symmetry = [](const Operator& op, const ChainSpec& chain) { return uq_symmetry_residual(op, chain) / op.norm(); };
    ChainSpec open;
    if (c.model == Model::xxx) {
        const ChainSpec periodic = ChainSpec::periodic_xxx(c.N, c.n);
        const TransferFamily t(periodic);
        out.push_back({"su2 periodic transfer", p,
                       worst_over(points, [&](cplx a, cplx) { return scaled_symmetry(t(a), periodic); }), 1e-10});
        open = periodic;
        open.boundary = BoundaryType::open;
    } else {
        open = ChainSpec::open_xxz(c.N, c.mu, Gradation::homogeneous, {}, {});
        open.site_dims.assign(c.N, c.n);
    }
    const OpenTransferFamily t(open);
    out.push_back({"quantum group open transfer", p,
                   worst_over(points, [&](cplx a, cplx) { return scaled_symmetry(t(a), open); }), 1e-10});
    if (c.n == 2) {
        const Operator H = open_hamiltonian(open);
        out.push_back({"quantum group open hamiltonian", p, scaled_symmetry(H, open), 1e-10});
        const Operator target = c.model == Model::xxx ? xxx_permutation_hamiltonian(c.N, false) : open_uq_hamiltonian(c.N, c.mu);
        const LinearFit fit = fit_operator(H, {target, Operator::identity(H.dims())});
        json q = p;
        q["scale"] = complex_json(fit.coefficients[0]);
        q["shift"] = complex_json(fit.coefficients[1]);
        out.push_back({"open hamiltonian affine fit", q, fit.residual, 1e-8});
    }
    return out;
}

Outcome checks_outcome(const std::string& suite, const std::vector<Check>& checks, Format fmt) {
    bool all = true;
    for (const auto& c : checks) all = all && c.pass();
    Outcome o;
    o.code = all ? exit_ok : exit_check_failed;
    if (fmt == Format::json) {
        json doc{{"command", "verify"}, {"suite", suite}, {"pass", all}, {"checks", json::array()}};
        for (const auto& c : checks)
            doc["checks"].push_back(
                {{"identity", c.identity}, {"params", c.params}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass()}});
        o.report = finish_json(doc);
    } else {
        std::ostringstream s;
        s << "identity,residual,tolerance,pass\n";
        for (const auto& c : checks)
            s << '"' << c.identity << "\"," << num(c.residual) << ',' << num(c.tolerance) << ',' << (c.pass() ? "true" : "false") << '\n';
        o.report = s.str();
    }
    return o;
}

}  // namespace

Outcome run_verify(const VerifyConfig& c, std::uint64_t seed, Format fmt) {
    std::vector<Check> checks;
    if (c.suite == "ybe") checks = suite_ybe(c, seed);
    else if (c.suite == "re") checks = suite_re(c, seed);
    else if (c.suite == "braid") checks = suite_braid(c);
    else if (c.suite == "frt") checks = suite_frt(c, seed);
    else if (c.suite == "symmetry") checks = suite_symmetry(c, seed);
    else throw ConfigError("unknown suite '" + c.suite + "'");
    return checks_outcome(c.suite, checks, fmt);
}

Outcome run_spectrum(const SpectrumConfig& c, Format fmt) {
    const ChainSpectrum s = xxz_spectrum(c.N, c.delta, c.periodic);
    Outcome o;
    if (fmt == Format::json) {
        json doc{{"command", "spectrum"}, {"N", c.N}, {"delta", c.delta}, {"periodic", c.periodic}, {"levels", json::array()}};
        for (const auto& l : s.levels)
            doc["levels"].push_back({{"energy", l.energy}, {"sz", l.sz}, {"momentum", l.momentum ? json(*l.momentum) : json()}});
        o.report = finish_json(doc);
    } else {
        std::ostringstream out;
        out << "energy,sz,momentum\n";
        for (const auto& l : s.levels)
            out << num(l.energy) << ',' << num(l.sz) << ',' << (l.momentum ? std::to_string(*l.momentum) : "") << '\n';
        o.report = out.str();
    }
    return o;
}

Outcome run_bethe(const BetheConfig& c, std::uint64_t seed, int threads, Format fmt) {
    std::vector<int> Ms = c.Ms;
    if (Ms.empty())
        for (int M = 0; M <= max_magnons(c.N, c.n); ++M) Ms.push_back(M);
    SeedStrategy seeds;
    seeds.seed = seed;
    seeds.restarts = c.restarts;
    seeds.box = c.box;
    seeds.threads = threads;

    std::vector<BetheSolution> sols;
    ValidationReport rep;
    if (c.validate) {
        rep = validate_against_ed(c.N, c.n, c.mu, Ms, seeds);
        for (const auto& s : rep.sectors) sols.insert(sols.end(), s.solutions.begin(), s.solutions.end());
    } else {
        for (int M : Ms) {
            const auto part = solve_bae(c.N, c.n, c.mu, M, seeds);
            sols.insert(sols.end(), part.begin(), part.end());
        }
    }
    const double s = 0.5 * (c.n - 1);
    Outcome o;
    o.code = !c.validate || rep.all_matched() ? exit_ok : exit_check_failed;
    if (fmt == Format::json) {
        json doc{{"command", "bethe"}, {"solutions", json::array()}};
        for (const auto& sol : sols) {
            json roots = json::array();
            for (cplx u : sol.system.roots) roots.push_back(complex_json(u));
            doc["solutions"].push_back({{"N", c.N},
                                        {"s", s},
                                        {"mu", complex_json(c.mu)},
                                        {"M", sol.system.M()},
                                        {"roots", roots},
                                        {"residual", sol.residual},
                                        {"energy", sol.energy ? complex_json(*sol.energy) : json()},
                                        {"momentum", sol.momentum ? complex_json(*sol.momentum) : json()},
                                        {"sz", sol.sz},
                                        {"matched", sol.matched ? json(*sol.matched) : json()}});
        }
        if (c.validate) {
            json probes = json::array();
            for (cplx p : rep.probes) probes.push_back(complex_json(p));
            doc["validation"] = {{"probes", probes}, {"all_matched", rep.all_matched()}, {"sectors", json::array()}};
            for (const auto& sv : rep.sectors)
                doc["validation"]["sectors"].push_back({{"M", sv.M},
                                                        {"sz", sv.sz},
                                                        {"sector_dim", sv.sector_dim},
                                                        {"solutions", sv.solutions.size()},
                                                        {"matched", sv.matched},
                                                        {"unmatched_ed_levels", sv.unmatched_ed_levels}});
        }
        o.report = finish_json(doc);
    } else {
        std::ostringstream out;
        out << "N,s,mu_re,mu_im,M,roots,residual,energy_re,energy_im,momentum_re,momentum_im,sz,matched\n";
        for (const auto& sol : sols) {
            out << c.N << ',' << num(s) << ',' << num(c.mu.real()) << ',' << num(c.mu.imag()) << ',' << sol.system.M() << ",\"";
            for (size_t k = 0; k < sol.system.roots.size(); ++k)
                out << (k ? ";" : "") << num(sol.system.roots[k].real()) << ' ' << num(sol.system.roots[k].imag());
            out << "\"," << num(sol.residual) << ',';
            if (sol.energy) out << num(sol.energy->real()) << ',' << num(sol.energy->imag()) << ',';
            else out << ",,";
            if (sol.momentum) out << num(sol.momentum->real()) << ',' << num(sol.momentum->imag()) << ',';
            else out << ",,";
            out << num(sol.sz) << ',' << (sol.matched ? (*sol.matched ? "true" : "false") : "") << '\n';
        }
        o.report = out.str();
    }
    return o;
}

Outcome run_phase_scan(const PhaseScanConfig& c, int threads, Format fmt) {
    const auto rows = phase_scan(c.N, c.deltas, threads);
    Outcome o;
    if (fmt == Format::json) {
        json doc{{"command", "phase-scan"}, {"N", c.N}, {"rows", json::array()}};
        for (const auto& r : rows)
            doc["rows"].push_back({{"delta", r.delta}, {"e0", r.e0}, {"degeneracy", r.degeneracy}, {"sz_abs", r.sz_abs}});
        o.report = finish_json(doc);
    } else {
        std::ostringstream out;
        out << "delta,e0,degeneracy,sz_abs\n";
        for (const auto& r : rows) out << num(r.delta) << ',' << num(r.e0) << ',' << r.degeneracy << ',' << num(r.sz_abs) << '\n';
        o.report = out.str();
    }
    return o;
}

Outcome run_casimir(const CasimirConfig& c, Format fmt) {
    struct Row {
        int n;
        cplx value, scale;
        double scalar_residual, commutator, proportionality;
        bool pass() const { return scalar_residual < 1e-10 && commutator < 1e-10 && proportionality < 1e-9; }
    };
    std::vector<Row> rows;
    for (int n : c.dims) {
        const AlgebraRep rep = uq_sl2_spin_rep_mu(n, c.mu);
        const Operator C = casimir_uq(rep);
        const cplx value = C(0, 0);
        const double scalar = (C.matrix() - value * Matrix::Identity(n, n)).norm() / std::max(1e-300, C.norm());
        double comm = 0.0;
        for (const char* g : {"Jp", "Jm", "qJz"}) comm = std::max(comm, comm_norm(C, rep[g]));
        const CasimirAsymptotics a = casimir_from_asymptotics(rep);
        for (const char* g : {"Jp", "Jm", "qJz"}) comm = std::max(comm, comm_norm(a.t_plus, rep[g]));
        rows.push_back({n, value, a.scale, scalar, comm, a.proportionality_residual});
    }
    bool all = true;
    for (const auto& r : rows) all = all && r.pass();
    Outcome o;
    o.code = all ? exit_ok : exit_check_failed;
    if (fmt == Format::json) {
        json doc{{"command", "casimir"}, {"mu", complex_json(c.mu)}, {"pass", all}, {"reps", json::array()}};
        for (const auto& r : rows)
            doc["reps"].push_back({{"n", r.n},
                                   {"casimir", complex_json(r.value)},
                                   {"asymptotic_scale", complex_json(r.scale)},
                                   {"scalar_residual", r.scalar_residual},
                                   {"commutator", r.commutator},
                                   {"proportionality_residual", r.proportionality},
                                   {"pass", r.pass()}});
        o.report = finish_json(doc);
    } else {
        std::ostringstream out;
        out << "n,casimir_re,casimir_im,scale_re,scale_im,scalar_residual,commutator,proportionality_residual,pass\n";
        for (const auto& r : rows)
            out << r.n << ',' << num(r.value.real()) << ',' << num(r.value.imag()) << ',' << num(r.scale.real()) << ','
                << num(r.scale.imag()) << ',' << num(r.scalar_residual) << ',' << num(r.commutator) << ','
                << num(r.proportionality) << ',' << (r.pass() ? "true" : "false") << '\n';
        o.report = out.str();
    }
    return o;
}

Outcome run(const RunOptions& opt, const RunConfig& config) {
    const std::uint64_t seed = opt.seed.value_or(config.seed);
    return std::visit(
        [&](const auto& p) -> Outcome {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, VerifyConfig>) return run_verify(p, seed, opt.format);
            else if constexpr (std::is_same_v<T, SpectrumConfig>) return run_spectrum(p, opt.format);
            else if constexpr (std::is_same_v<T, BetheConfig>) return run_bethe(p, seed, opt.threads, opt.format);
            else if constexpr (std::is_same_v<T, PhaseScanConfig>) return run_phase_scan(p, opt.threads, opt.format);
            else return run_casimir(p, opt.format);
        },
        config.params);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Outcome o;
    std::optional<RunOptions> opt;
    try {
        opt = parse_args(argc, argv, out);
        if (!opt) return exit_ok;
        const RunConfig config = load_config(opt->config_path, opt->command);
        o = run(*opt, config);
    } catch (const ConfigError& e) {
        err << "workbench: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        // parameter outside a library precondition
        err << "workbench: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "workbench: " << e.what() << '\n';
        return exit_check_failed;
    }
    if (opt->out) {
        std::ofstream f(*opt->out, std::ios::binary);
        if (!f) {
            err << "workbench: cannot write '" << *opt->out << "'\n";
            return exit_usage;
        }
        f << o.report;
    } else {
        out << o.report;
    }
    if (o.code == exit_check_failed) err << "workbench: checks failed\n";
    return o.code;
}

}  // namespace workbench
