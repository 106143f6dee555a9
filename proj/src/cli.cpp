#include "ndeg/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

#include "ndeg/fan.hpp"
#include "ndeg/json_io.hpp"
#include "ndeg/motivic.hpp"
#include "ndeg/probe.hpp"
#include "ndeg/realize.hpp"
#include "ndeg/strata.hpp"

namespace ndeg {

namespace {

enum Exit { Ok = 0, CheckFailed = 1, BadInput = 2, Usage = 3, OverBudget = 4 };

struct Common {
    std::string poly;
    int d = 0;
    std::string format = "text";
    unsigned seed = 1;
};

struct Ctx {
    const Common& c;
    Poly f;
    std::ostream& out;
    std::ostream& err;
    bool json() const { return c.format == "json"; }
    void emit(const nlohmann::json& j) const { out << j.dump(2) << "\n"; }
};

std::string vec_str(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string face_str(const std::vector<IVec>& V) {
    std::string s = "{";
    for (size_t i = 0; i < V.size(); ++i) s += (i ? " " : "") + vec_str(V[i]);
    return s + "}";
}

std::string set_str(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int i : members(s)) {
        out += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

int report_exit(const Report& R) { return R.status() == Status::Failed ? CheckFailed : Ok; }

void print_report(const Ctx& X, const Report& R) {
    if (X.json()) {
        X.emit(to_json(R));
        return;
    }
    for (const auto& c : R.checks) X.out << "[" << status_name(c.status) << "] " << c.name << ": " << c.detail << "\n";
    X.out << "overall: " << status_name(R.status()) << "\n";
}

void print_probe(const Ctx& X, const ProbeReport& P) {
    X.out << "nondegeneracy probe (primes";
    for (long p : P.primes) X.out << " " << p;
    X.out << "): " << (P.nondegenerate ? "nondegenerate" : "DEGENERATE") << (P.exact ? "" : " (probabilistic)")
          << "\n";
    for (const auto& v : P.faces) {
        X.out << "  " << face_str(v.face.vertices) << ": " << v.verdict;
        if (v.witness_prime) X.out << " (p=" << v.witness_prime << ")";
        X.out << "\n";
    }
}

// ---------------------------------------------------------------- subcommands

int cmd_analyze(const Ctx& X, const ProbeReport& probe, int samples) {
    const Poly& f = X.f;
    NewtonPolyhedron G = newton_polyhedron(f);
    nlohmann::json fan = nlohmann::json::array();
    std::vector<DualCone> cones;
    for (const auto& F : G.faces) {
        if (F.recession == G.ambient && F.vertices == G.vertices) continue;
        cones.push_back(sigma_cone(G, F));
        fan.push_back({{"face", to_json(F)}, {"generators", cones.back().generators}, {"dim", cones.back().dim}});
    }
    std::map<Subset, bool> seen;
    nlohmann::json gc = nlohmann::json::array();
    std::ostringstream gtext;
    for (Subset J = 1; J <= full_set(f.dim); ++J) {
        Subset Jt = tilde_J(f, J);
        if (Jt == 0 || seen[Jt]) continue;
        seen[Jt] = true;
        NewtonPolyhedron H = newton_polyhedron(f, Jt);
        nlohmann::json faces = nlohmann::json::array();
        gtext << "  J~ = " << set_str(Jt) << "\n";
        for (const auto& g : gamma_circ(H, Jt)) {
            PFamily P = p_family(H, g);
            nlohmann::json pj = nlohmann::json::array(), mj = nlohmann::json::array();
            gtext << "    " << face_str(g.vertices) << "  P = {";
            for (size_t i = 0; i < P.P.size(); ++i) {
                pj.push_back(to_json_subset(P.P[i]));
                gtext << (i ? " " : "") << set_str(P.P[i]);
            }
            gtext << "}  M = {";
            for (size_t i = 0; i < P.M.size(); ++i) {
                mj.push_back(to_json_subset(P.M[i]));
                gtext << (i ? " " : "") << set_str(P.M[i]);
            }
            gtext << "}\n";
            faces.push_back({{"face", to_json_face(g.vertices)}, {"dim", g.dim}, {"P", pj}, {"M", mj}});
        }
        gc.push_back({{"J_tilde", to_json_subset(Jt)}, {"faces", faces}});
    }
    PartitionReport part = partition_check(G, samples, X.c.seed);
    if (X.json()) {
        X.emit({{"polynomial", to_string(f)},
                {"polyhedron", to_json(G)},
                {"fan", fan},
                {"gamma_circ", gc},
                {"partition", {{"samples", part.samples}, {"ok", part.ok()}, {"violations", part.violations}}},
                {"probe", to_json(probe)}});
    } else {
        X.out << "f = " << to_string(f) << "\n";
        X.out << "vertices:";
        for (const auto& v : G.vertices) X.out << " " << vec_str(v);
        X.out << "\nfacets:\n";
        for (const auto& F : G.facets) X.out << "  <" << vec_str(F.normal) << ", x> >= " << F.offset << "\n";
        X.out << "faces and dual cones:\n";
        for (const auto& C : cones) {
            X.out << "  " << face_str(C.face.vertices);
            if (C.face.recession) X.out << " + R" << set_str(C.face.recession);
            X.out << "  dim " << C.face.dim << ", cone dim " << C.dim << ", generators";
            for (const auto& g : C.generators) X.out << " " << vec_str(g);
            X.out << "\n";
        }
        X.out << "compact faces with full support on J~:\n" << gtext.str();
        X.out << "fan partition (" << part.samples << " samples, seed " << X.c.seed
              << "): " << (part.ok() ? "ok" : "VIOLATED") << "\n";
        for (const auto& v : part.violations) X.out << "  " << v << "\n";
        print_probe(X, probe);
    }
    if (!part.ok()) return CheckFailed;
    return probe.nondegenerate ? Ok : BadInput;
}

int cmd_zeta(const Ctx& X, long N) {
    MotSeries Z = zeta_local(X.f);
    std::vector<GClass> tr = series_truncate(Z, N);
    GClass lim = series_limit(Z);
    if (X.json()) {
        nlohmann::json terms = nlohmann::json::array(), coeffs = nlohmann::json::array();
        for (const auto& t : Z.terms)
            terms.push_back({{"label", t.label}, {"coeff", to_json(t.coeff)}, {"geom", t.geom}, {"sform", t.sform}});
        for (long n = 0; n <= N; ++n) coeffs.push_back({{"n", n}, {"class", to_json(tr[n])}});
        X.emit({{"terms", terms}, {"truncation", coeffs}, {"limit", to_json(lim)}});
        return Ok;
    }
    X.out << Z.terms.size() << " cone terms\n";
    for (const auto& t : Z.terms) X.out << "  " << t.label << ": " << to_string(t.coeff) << "\n";
    for (long n = 0; n <= N; ++n) X.out << "T^" << n << ": " << to_string(tr[n]) << "\n";
    X.out << "limit T->oo: " << to_string(lim) << "\n";
    return Ok;
}

int cmd_milnor(const Ctx& X, const std::string& mode, bool relative) {
    if (mode == "cor42") {
        FaceformResult R = milnor_fiber_faceform(X.f);
        long delta = R.euler_faceform - R.euler_normative;
        if (X.json()) {
            X.emit({{"class", to_json(R.cls)},
                    {"euler_faceform", R.euler_faceform},
                    {"euler_normative", R.euler_normative},
                    {"delta", delta},
                    {"mismatch", R.mismatch()}});
        } else {
            X.out << "S_f (face form) = " << to_string(R.cls) << "\n";
            X.out << "euler: face form " << R.euler_faceform << ", normative " << R.euler_normative << ", delta "
                  << delta << "\n";
        }
        if (R.mismatch()) {
            X.err << "warning: the face-form class disagrees with the normative Milnor fiber (euler " << R.euler_faceform
                  << " vs " << R.euler_normative << ")\n";
            return CheckFailed;
        }
        return Ok;
    }
    GClass S = relative ? nearby_cycles_relative(X.f) : milnor_fiber(X.f);
    long chi = euler(S, X.f);
    if (X.json()) {
        nlohmann::json j = to_json(S);
        j["euler"] = chi;
        j["note"] = "atom weights are metadata and do not enter class equality";
        X.emit(j);
    } else {
        X.out << (relative ? "relative nearby cycles = " : "S_f = ") << to_string(S) << "\n";
        X.out << "euler = " << chi << "\n";
    }
    return Ok;
}

int cmd_restrict(const Ctx& X, int var) {
    std::vector<int> vars;
    if (var > 0) {
        if (var > X.f.dim) throw CLI::ValidationError("--var", "coordinate out of range");
        vars.push_back(var - 1);
    } else {
        for (int j = 0; j < X.f.dim; ++j) vars.push_back(j);
    }
    Report all;
    for (int j : vars) {
        Report R = check_restriction(X.f, j);
        for (auto& c : R.checks) {
            c.name = "x" + std::to_string(j + 1) + ": " + c.name;
            all.checks.push_back(c);
        }
    }
    print_report(X, all);
    return report_exit(all);
}

int cmd_contact(const Ctx& X, long n, const std::string& table) {
    const Poly& f = X.f;
    if (table == "cohomology") {
        auto T = cohomology_table(f, n);
        if (X.json()) {
            nlohmann::json j = nlohmann::json::object();
            for (auto [m, v] : T) j[std::to_string(m)] = v;
            X.emit(j);
        } else {
            for (auto [m, v] : T) X.out << "m=" << m << ": " << v << "\n";
        }
        return Ok;
    }
    if (table == "dsets") {
        auto D = d_sets(f, n);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [key, as] : D) {
            const auto& [V, k, p] = key;
            nlohmann::json aj = nlohmann::json::array();
            for (const auto& a : as) aj.push_back(a);
            arr.push_back({{"face", to_json_face(V)}, {"k", k}, {"p", p}, {"a", aj}});
            if (!X.json()) {
                X.out << "face " << face_str(V) << " k=" << k << " p=" << p << ":";
                for (const auto& a : as) X.out << " " << vec_str(a);
                X.out << "\n";
            }
        }
        if (X.json()) X.emit(arr);
        return Ok;
    }
    Poset P = enumerate_Pn(f, n);
    auto stratum_line = [&](const StratumInfo& s) {
        std::string a;
        for (int i : members(s.key.J)) a += (a.empty() ? "" : ",") + std::to_string(s.key.a[i]);
        return "J=" + set_str(s.key.J) + " a=(" + a + ") face=" + face_str(s.gamma.vertices) +
               " k=" + std::to_string(s.k) + " dim=" + std::to_string(s.dim);
    };
    if (table == "poset") {
        nlohmann::json arr = nlohmann::json::array();
        for (size_t i = 0; i < P.nodes.size(); ++i) {
            nlohmann::json j = to_json(P.nodes[i]);
            j["closure_size"] = P.closure(i).size();
            arr.push_back(j);
            if (!X.json())
                X.out << stratum_line(P.nodes[i]) << " class=" << to_string(P.nodes[i].cls)
                      << " closure=" << P.closure(i).size() << "\n";
        }
        if (X.json()) X.emit({{"n", n}, {"strata", arr}});
        return Ok;
    }
    if (table == "e1") {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [p, idx] : e1_table(P)) {
            nlohmann::json arr = nlohmann::json::array();
            if (!X.json()) X.out << "p=" << p << ":\n";
            for (size_t i : idx) {
                arr.push_back(to_json(P.nodes[i]));
                if (!X.json()) X.out << "  " << stratum_line(P.nodes[i]) << "\n";
            }
            j[std::to_string(p)] = arr;
        }
        if (X.json()) X.emit(j);
        return Ok;
    }
    // weights
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : P.nodes) {
        if (s.k != 0) continue;
        for (const auto& [a, poly] : s.cls.terms) {
            if (a.weight_mod == 0) continue;
            arr.push_back({{"stratum", to_json(s)}, {"residues", a.weights}, {"modulus", a.weight_mod}});
            if (!X.json()) X.out << stratum_line(s) << " weights " << vec_str(a.weights) << " mod " << a.weight_mod << "\n";
        }
    }
    if (X.json()) X.emit(arr);
    return Ok;
}

int cmd_ffcheck(const Ctx& X, std::vector<long> primes, std::vector<long> ns, const Budget& B) {
    if (primes.empty()) primes = default_probe_primes(X.f, 1);
    if (ns.empty()) ns = {1, 2};
    Report R;
    for (long p : primes) {
        if (!is_prime(p)) throw MathError(std::to_string(p) + " is not prime");
        if (!good_reduction(X.f, p, B)) {
            R.add("p=" + std::to_string(p), Status::Inconclusive, "bad reduction, prime skipped");
            continue;
        }
        for (long n : ns) {
            uint64_t direct = jet_count_fp(X.f, p, n, true, B);
            mpq_class sum = strata_sum_fp(X.f, p, n, B);
            bool ok = sum == mpq_class(static_cast<unsigned long>(direct));
            R.add("p=" + std::to_string(p) + " n=" + std::to_string(n), ok ? Status::Verified : Status::Failed,
                  "jets " + std::to_string(direct) + (ok ? " = " : " != ") + sum.get_str() + " strata",
                  {{"direct", direct}, {"strata", sum.get_str()}});
        }
    }
    print_report(X, R);
    return report_exit(R);
}

int cmd_spectrum(const Ctx& X) {
    SpectrumResult S = spectrum(X.f);
    if (X.json()) {
        nlohmann::json sym = nlohmann::json::array();
        for (const auto& [a, p] : S.symbolic) sym.push_back({{"atom", to_json(a)}, {"factor", to_json(p)}});
        X.emit({{"resolved", to_json(S.resolved)}, {"symbolic", sym}, {"complete", S.complete()}});
        return Ok;
    }
    X.out << "Sp = " << to_string(S.resolved);
    for (const auto& [a, p] : S.symbolic) X.out << " + (" << to_string(p) << ")*Sp" << atom_label(a);
    X.out << "\n";
    if (!S.complete()) X.out << "(" << S.symbolic.size() << " atom spectra left symbolic)\n";
    return Ok;
}

int cmd_integral(const Ctx& X, const std::vector<int>& blocks) {
    if (blocks.size() != 3) throw CLI::ValidationError("--blocks", "expected three sizes d1,d2,d3");
    Report R = check_integral_identity(X.f, blocks[0], blocks[1], blocks[2]);
    print_report(X, R);
    return report_exit(R);
}

int cmd_crosscheck(const Ctx& X, std::vector<long> primes, long nmax, const Budget& B) {
    if (primes.empty()) primes = default_probe_primes(X.f, 2);
    Report R = crosscheck(X.f, primes, nmax, B);
    print_report(X, R);
    return report_exit(R);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Newton-nondegenerate singularities: fans, contact loci, motivic Milnor fibers"};
    app.require_subcommand(1);
    Common c;
    auto common = [&](CLI::App* s) {
        s->add_option("polynomial", c.poly, "polynomial in x1..xd, e.g. \"x1^2 + x2^3\"")->required();
        s->add_option("--d", c.d, "number of variables (default: largest index used)")->check(CLI::Range(1, 12));
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
        s->add_option("--seed", c.seed, "seed for randomized checks");
    };
    int samples = 200;
    long truncate = 4, contact_n = 4, nmax = 2;
    std::string mode = "thm41", table = "poset";
    bool relative = false;
    int var = 0;
    std::vector<long> primes, ns;
    std::vector<int> blocks;

    auto* analyze = app.add_subcommand("analyze", "Newton polyhedron, dual fan, face families, probe");
    common(analyze);
    analyze->add_option("--samples", samples, "lattice points for the fan partition check")->check(CLI::NonNegativeNumber);
    auto* zeta = app.add_subcommand("zeta", "structured local motivic zeta function");
    common(zeta);
    zeta->add_option("--truncate", truncate, "print coefficients up to T^N")->check(CLI::Range(0l, 40l));
    auto* milnor = app.add_subcommand("milnor", "motivic Milnor fiber");
    common(milnor);
    milnor->add_option("--mode", mode)->check(CLI::IsMember({"thm41", "cor42"}));
    milnor->add_flag("--relative", relative, "relative nearby-cycles variant");
    auto* restrict_cmd = app.add_subcommand("restrict-check", "hyperplane restriction identity");
    common(restrict_cmd);
    restrict_cmd->add_option("--var", var, "coordinate j (1-based); default all")->check(CLI::PositiveNumber);
    auto* contact = app.add_subcommand("contact", "contact-locus strata tables");
    common(contact);
    contact->add_option("--n", contact_n, "contact order")->check(CLI::Range(1l, 40l));
    contact->add_option("--table", table)->check(CLI::IsMember({"poset", "e1", "dsets", "cohomology", "weights"}));
    auto* ffcheck = app.add_subcommand("ffcheck", "finite-field jet count against the strata sum");
    common(ffcheck);
    ffcheck->add_option("--p", primes, "primes")->delimiter(',')->allow_extra_args(false);
    ffcheck->add_option("--n", ns, "contact orders")->delimiter(',')->allow_extra_args(false)->check(CLI::Range(1l, 40l));
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Hodge spectrum expression");
    common(spectrum_cmd);
    auto* integral = app.add_subcommand("integral-check", "integral identity face-family checks");
    common(integral);
    integral->add_option("--blocks", blocks, "block sizes d1,d2,d3")->delimiter(',')->allow_extra_args(false)->required();
    auto* cross = app.add_subcommand("crosscheck", "all oracle cross-checks");
    common(cross);
    cross->add_option("--p", primes, "primes")->delimiter(',')->allow_extra_args(false);
    cross->add_option("--n", nmax, "largest contact order")->check(CLI::Range(1l, 40l));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        int d = c.d ? c.d : std::max(1, max_variable_index(c.poly));
        Ctx X{c, parse_poly(c.poly, d), out, err};
        require_local_input(X.f);
        ProbeReport probe = nondegeneracy_probe(X.f, default_probe_primes(X.f));
        if (analyze->parsed()) return cmd_analyze(X, probe, samples);
        if (!probe.nondegenerate) {
            if (X.json())
                X.emit({{"error", "degenerate input"}, {"probe", to_json(probe)}});
            else
                print_probe(X, probe);
            err << "error: f is degenerate with respect to its Newton polyhedron\n";
            return BadInput;
        }
        Budget B = Budget::from_env();
        if (zeta->parsed()) return cmd_zeta(X, truncate);
        if (milnor->parsed()) return cmd_milnor(X, mode, relative);
        if (restrict_cmd->parsed()) return cmd_restrict(X, var);
        if (contact->parsed()) return cmd_contact(X, contact_n, table);
        if (ffcheck->parsed()) return cmd_ffcheck(X, primes, ns, B);
        if (spectrum_cmd->parsed()) return cmd_spectrum(X);
        if (integral->parsed()) return cmd_integral(X, blocks);
        if (cross->parsed()) return cmd_crosscheck(X, primes, nmax, B);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return OverBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return BadInput;
    }
    return Usage;
}

}  // namespace ndeg
