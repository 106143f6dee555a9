#include "ndeg/probe.hpp"

#include <algorithm>

namespace ndeg {

namespace {

using QPoly = std::vector<mpq_class>;  // coefficient of s^i at index i

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly poly_mod(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact decision for a face whose exponents lie on one line.
bool edge_nondegenerate(const Poly& g) {
    std::vector<IVec> pts = g.support();
    IVec u = primitive(vsub(pts.back(), pts.front()));
    // parametrize α = α0 + t·u, choose α0 with minimal t
    std::vector<std::pair<long, mpq_class>> tc;
    int piv = 0;
    while (u[piv] == 0) ++piv;
    for (const auto& [e, c] : g.terms) tc.push_back({(e[piv] - pts.front()[piv]) / u[piv], c});
    long tmin = tc.front().first;
    for (auto& x : tc) tmin = std::min(tmin, x.first);
    long deg = 0;
    for (auto& x : tc) deg = std::max(deg, x.first - tmin);
    QPoly q(deg + 1);
    for (auto& [t, c] : tc) q[t - tmin] = c;
    QPoly dq;
    for (size_t i = 1; i < q.size(); ++i) dq.push_back(q[i] * static_cast<long>(i));
    return poly_gcd(q, dq).size() <= 1;
}

long powmod(long b, long e, long p) {
    long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Search for a singular point of g on (F_p^*)^supp; returns true if one exists.
bool singular_mod_p(const Poly& g, Subset supp, long p) {
    PolyFp h = reduce_mod_p(g, p);
    std::vector<int> vars = members(supp);
    int d = g.dim;
    std::vector<PolyFp> der;
    for (int i : vars) der.push_back(reduce_mod_p(partial_derivative(g, i), p));
    std::vector<long> x(d, 1);
    auto eval = [&](const PolyFp& P) {
        long s = 0;
        for (const auto& [e, c] : P.terms) {
            long t = c;
            for (int i : vars) t = t * powmod(x[i], e[i], p) % p;
            s = (s + t) % p;
        }
        return s;
    };
    for (;;) {
        if (eval(h) == 0) {
            bool all = true;
            for (const auto& D : der)
                if (eval(D) != 0) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        size_t k = 0;
        while (k < vars.size()) {
            if (++x[vars[k]] < p) break;
            x[vars[k]] = 1;
            ++k;
        }
        if (k == vars.size()) return false;
    }
}

}  // namespace

std::vector<long> default_probe_primes(const Poly& f, int count) {
    long lo = 3;
    for (const auto& [e, c] : f.terms)
        for (long x : e) lo = std::max(lo, x);
    std::vector<long> out;
    for (long p = lo + 1; static_cast<int>(out.size()) < count; ++p) {
        if (!is_prime(p)) continue;
        bool ok = true;
        for (const auto& [e, c] : f.terms) {
            mpz_class P = p;
            if (c.get_den() % P == 0 || c.get_num() % P == 0) ok = false;
        }
        if (ok) out.push_back(p);
    }
    return out;
}

ProbeReport nondegeneracy_probe(const Poly& f, const std::vector<long>& primes) {
    ProbeReport R;
    R.primes = primes;
    for (long p : primes)
        if (reduce_mod_p(f, p).support_changed) throw MathError("prime " + std::to_string(p) + " has bad reduction");
    NewtonPolyhedron G = newton_polyhedron(f);
    if (G.empty) return R;
    for (const auto& face : G.compact_faces()) {
        FaceVerdict V;
        V.face = face;
        Poly g = face_function(f, face);
        if (g.terms.size() == 1) {
            V.verdict = "trivial";
        } else if (face.dim <= 1) {
            bool ok = edge_nondegenerate(g);
            V.verdict = ok ? "nondegenerate" : "degenerate";
            if (!ok) R.nondegenerate = false;
        } else {
            V.exact = false;
            R.exact = false;
            V.verdict = "probably nondegenerate";
            bool any = false;
            for (long p : primes) {
                long cost = 1;
                for (int i = 0; i < popcount(face.supp) && cost <= 20000000; ++i) cost *= (p - 1);
                if (cost > 20000000) continue;
                any = true;
                if (singular_mod_p(g, face.supp, p)) {
                    V.verdict = "degenerate mod p";
                    V.witness_prime = p;
                    R.nondegenerate = false;
                    break;
                }
            }
            if (!any) V.verdict = "unchecked";
        }
        R.faces.push_back(V);
    }
    return R;
}

}  // namespace ndeg
