#include "ndeg/realize.hpp"

#include <cmath>
#include <cstdlib>

#include "ndeg/fan.hpp"
#include "ndeg/json_io.hpp"
#include "ndeg/motivic.hpp"
#include "ndeg/strata.hpp"

namespace ndeg {

Budget Budget::from_env() {
    Budget b;
    if (const char* s = std::getenv("NDEG_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0) b.limit = v;
    }
    return b;
}

void Budget::check(double cost, const std::string& what) const {
    if (cost > limit)
        throw BudgetExceeded(what + " needs about " + std::to_string(static_cast<long long>(cost)) +
                             " evaluations, over the budget of " + std::to_string(static_cast<long long>(limit)) +
                             " (set NDEG_BUDGET to raise it)");
}

namespace {

Poly torus_face_function(const Poly& f, const Atom& a) {
    NewtonPolyhedron G = newton_polyhedron(f, a.J);
    const FaceDesc* g = G.find(a.face, 0);
    if (!g) throw MathError("atom face " + atom_label(a) + " is not a face of the Newton polyhedron");
    return face_function(f, *g);
}

}  // namespace

long atom_euler(const Atom& a, const Poly& f) {
    int q = popcount(a.J);
    long sign = (q - 1) % 2 ? -1 : 1;
    switch (a.kind) {
        case Atom::Kind::Unit:
            return 1;
        case Atom::Kind::Torus: {
            // X(0) carries a free circle action along the weight of the face; X(1) only when γ is a facet.
            if (a.eps == 0) return 0;
            std::vector<IVec> pts = a.face;
            pts.push_back(IVec(f.dim, 0));
            if (rank(a.face) != q) return 0;
            return sign * normalized_volume(pts);
        }
        case Atom::Kind::Smooth: {
            if (a.J == 0) return 1;
            std::vector<IVec> pts = restrict(f, a.J).support();
            if (pts.size() < 2) return 0;
            IMat diffs;
            for (const auto& v : pts) diffs.push_back(vsub(v, pts[0]));
            if (rank(diffs) != q) return 0;
            return sign * normalized_volume(pts);
        }
    }
    return 0;
}

long euler(const GClass& c, const Poly& f) {
    long total = 0;
    for (const auto& [a, p] : c.terms) {
        long e = atom_euler(a, f);
        for (const auto& [x, k] : p) total += e * k;  // χ(L) = 1
    }
    return total;
}

FpContext::FpContext(const Poly& f, long p, Budget budget) : f_(f), p_(p), budget_(budget) {
    PolyFp r = reduce_mod_p(f, p);
    if (r.support_changed) throw MathError("bad reduction of f modulo " + std::to_string(p));
}

mpz_class FpContext::atom_count(const Atom& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    mpz_class out;
    switch (a.kind) {
        case Atom::Kind::Unit:
            out = 1;
            break;
        case Atom::Kind::Torus: {
            if (a.has_rel) throw MathError("relative atoms have no point count");
            budget_.check(std::pow(double(p_ - 1), popcount(a.J)), "torus point count");
            PolyFp g = reduce_mod_p(torus_face_function(f_, a), p_);
            out = static_cast<unsigned long>(torus_count_kernel(g, a.J, a.eps));
            break;
        }
        case Atom::Kind::Smooth: {
            budget_.check(std::pow(double(p_ - 1), popcount(a.J)), "torus point count");
            PolyFp g = reduce_mod_p(restrict(f_, a.J), p_);
            out = static_cast<unsigned long>(torus_count_kernel(g, a.J, 0));
            break;
        }
    }
    cache_.emplace(a, out);
    return out;
}

mpq_class FpContext::class_count(const GClass& c) {
    mpq_class total = 0;
    for (const auto& [a, poly] : c.terms) {
        mpz_class n = atom_count(a);
        for (const auto& [e, k] : poly) {
            mpz_class pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), p_, e < 0 ? -e : e);
            mpq_class term = e < 0 ? mpq_class(n, pe) : mpq_class(n * pe);
            total += term * static_cast<long>(k);
        }
    }
    total.canonicalize();
    return total;
}

uint64_t jet_count_fp(const Poly& f, long p, long n, bool local, const Budget& budget, bool reference) {
    if (n < 1) throw MathError("contact order must be at least 1");
    PolyFp r = reduce_mod_p(f, p);
    if (r.support_changed) throw MathError("bad reduction of f modulo " + std::to_string(p));
    double cost = std::pow(double(p), f.dim * (local ? n : n + 1));
    budget.check(cost, "jet enumeration");
    JetQuery q;
    q.n = n;
    q.local = local;
    return reference ? jet_count_reference(r, q) : jet_count_kernel(r, q);
}

mpz_class pair_jet_count_fp(const Poly& f, long p, long n, int j, long m, const Budget& budget) {
    if (m < 1 || m > n) throw MathError("pair order must satisfy 1 <= m <= n");
    PolyFp r = reduce_mod_p(f, p);
    if (r.support_changed) throw MathError("bad reduction of f modulo " + std::to_string(p));
    budget.check(std::pow(double(p), f.dim * n), "pair jet enumeration");
    JetQuery q;
    q.n = n;
    q.pair_var = j;
    q.pair_order = m;
    mpz_class c = static_cast<unsigned long>(jet_count_kernel(r, q));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p, f.dim * m);  // coefficients t^{n+1}..t^{n+m} are free
    return c * scale;
}

mpq_class strata_sum_fp(const Poly& f, long p, long n, const Budget& budget) {
    FpContext ctx(f, p, budget);
    Poset P = enumerate_Pn(f, n);
    mpq_class total = 0;
    for (const auto& s : P.nodes) total += ctx.class_count(s.cls);
    return total;
}

bool good_reduction(const Poly& f, long p, const Budget& budget) {
    if (!is_prime(p)) return false;
    for (const auto& [e, c] : f.terms)
        if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p)) return false;
    if (reduce_mod_p(f, p).support_changed) return false;
    std::map<Subset, bool> seen;
    for (Subset J = 1; J <= full_set(f.dim); ++J) {
        Subset Jt = tilde_J(f, J);
        if (Jt == 0 || seen[Jt]) continue;
        seen[Jt] = true;
        NewtonPolyhedron G = newton_polyhedron(f, Jt);
        for (const auto& g : G.compact_faces()) {
            if (g.is_vertex()) continue;
            Poly fg = face_function(f, g);
            std::vector<int> vars = members(g.supp);
            budget.check(std::pow(double(p - 1), vars.size()), "good-reduction search");
            PolyFp h = reduce_mod_p(fg, p);
            std::vector<PolyFp> grad;
            for (int i : vars) grad.push_back(reduce_mod_p(partial_derivative(fg, i), p));
            auto eval = [&](const PolyFp& q, const IVec& x) {
                long s = 0;
                for (const auto& [e, c] : q.terms) {
                    long t = c;
                    for (int i : vars)
                        for (long k = 0; k < e[i]; ++k) t = t * x[i] % p;
                    s = (s + t) % p;
                }
                return s;
            };
            IVec x(f.dim, 1);
            for (;;) {
                if (eval(h, x) == 0) {
                    bool sing = true;
                    for (const auto& q : grad)
                        if (eval(q, x) != 0) sing = false;
                    if (sing) return false;
                }
                size_t k = 0;
                while (k < vars.size()) {
                    if (++x[vars[k]] < p) break;
                    x[vars[k]] = 1;
                    ++k;
                }
                if (k == vars.size()) break;
            }
        }
    }
    return true;
}

bool is_convenient(const Poly& f) {
    for (int i = 0; i < f.dim; ++i)
        if (restrict(f, 1u << i).is_zero()) return false;
    return true;
}

long milnor_number_oracle(const Poly& f) {
    require_local_input(f);
    if (!is_convenient(f)) throw MathError("the Kouchnirenko number needs a convenient Newton polyhedron");
    int d = f.dim;
    long mu = d % 2 ? -1 : 1;
    for (Subset J = 1; J <= full_set(d); ++J) {
        NewtonPolyhedron G = newton_polyhedron(f, J);
        long vol = 0;
        for (const auto& g : G.compact_faces())
            if (g.dim == popcount(J) - 1) vol += delta_volumes(g).second;
        mu += ((d - popcount(J)) % 2 ? -1 : 1) * vol;
    }
    return mu;
}

Report crosscheck(const Poly& f, const std::vector<long>& primes, long nmax, const Budget& budget) {
    Report R;
    require_local_input(f);
    int d = f.dim;
    for (long p : primes) {
        if (!good_reduction(f, p, budget)) {
            R.add("jets mod " + std::to_string(p), Status::Inconclusive, "bad reduction, prime skipped");
            continue;
        }
        for (long n = 1; n <= nmax; ++n) {
            std::string name = "jets n=" + std::to_string(n) + " p=" + std::to_string(p);
            if (std::pow(double(p), d * n) > budget.limit) {
                R.add(name, Status::Inconclusive, "over budget");
                continue;
            }
            uint64_t direct = jet_count_fp(f, p, n, true, budget);
            mpq_class sum = strata_sum_fp(f, p, n, budget);
            bool ok = sum == mpq_class(static_cast<unsigned long>(direct));
            R.add(name, ok ? Status::Verified : Status::Failed,
                  std::to_string(direct) + (ok ? " = " : " != ") + sum.get_str(),
                  {{"direct", direct}, {"strata", sum.get_str()}});
        }
    }
    long chi = euler(milnor_fiber(f), f);
    if (is_convenient(f)) {
        long mu = milnor_number_oracle(f);
        long expect = 1 + ((d - 1) % 2 ? -mu : mu);
        R.add("euler characteristic", chi == expect ? Status::Verified : Status::Failed,
              "chi = " + std::to_string(chi) + ", 1 + (-1)^(d-1) mu = " + std::to_string(expect),
              {{"euler", chi}, {"mu", mu}});
    } else {
        R.add("euler characteristic", Status::Inconclusive,
              "chi = " + std::to_string(chi) + "; no Kouchnirenko number for a non-convenient f", {{"euler", chi}});
    }
    return R;
}

}  // namespace ndeg
