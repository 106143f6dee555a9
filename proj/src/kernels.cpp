#include "ndeg/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <vector>

namespace ndeg {

namespace {

struct Mono {
    IVec e;
    long c;
};

std::vector<Mono> monomials(const PolyFp& f) {
    std::vector<Mono> out;
    for (const auto& [e, c] : f.terms) out.push_back({e, c});
    return out;
}

// out = a * b truncated to length L, coefficients mod p
inline void mul_trunc(const int32_t* a, const int32_t* b, int32_t* out, int L, long p) {
    for (int t = 0; t < L; ++t) {
        int64_t s = 0;
        for (int u = 0; u <= t; ++u) s += static_cast<int64_t>(a[u]) * b[t - u];
        out[t] = static_cast<int32_t>(s % p);
    }
}

struct JetSetup {
    int d = 0, L = 0, s = 0;
    long p = 2;
    std::vector<Mono> mons;
    std::vector<long> emax;
    std::vector<std::vector<int32_t>> table;      // per coordinate: (v*(emax+1)+e)*L + t
    std::vector<std::vector<uint32_t>> allowed;  // admissible value indices per coordinate

    void decode(uint32_t v, int32_t* out) const {
        std::fill(out, out + L, 0);
        for (int t = s; t < L; ++t) {
            out[t] = static_cast<int32_t>(v % p);
            v /= static_cast<uint32_t>(p);
        }
    }
    // powers φ^0..φ^emax of the series encoded by v
    void powers(uint32_t v, long em, int32_t* out) const {
        std::fill(out, out + L, 0);
        out[0] = 1;
        if (em == 0) return;
        decode(v, out + L);
        for (long e = 2; e <= em; ++e) mul_trunc(out + (e - 1) * L, out + L, out + e * L, L, p);
    }
    const int32_t* pw(int i, uint32_t v, long e, std::vector<int32_t>& scratch) const {
        if (!table[i].empty()) return table[i].data() + (static_cast<size_t>(v) * (emax[i] + 1) + e) * L;
        scratch.resize((emax[i] + 1) * L);
        powers(v, emax[i], scratch.data());
        return scratch.data() + e * L;
    }
};

JetSetup setup(const PolyFp& f, const JetQuery& q) {
    JetSetup S;
    S.d = f.dim;
    S.L = static_cast<int>(q.n) + 1;
    S.s = q.local ? 1 : 0;
    S.p = f.p;
    S.mons = monomials(f);
    S.emax.assign(S.d, 0);
    for (const auto& m : S.mons)
        for (int i = 0; i < S.d; ++i) S.emax[i] = std::max(S.emax[i], m.e[i]);
    uint64_t V = 1;
    for (int t = S.s; t < S.L; ++t) V *= static_cast<uint64_t>(S.p);
    if (V > 0xffffffffull) throw BudgetExceeded("jet coordinate space too large");
    S.table.resize(S.d);
    S.allowed.resize(S.d);
    std::vector<int32_t> ser(S.L);
    for (int i = 0; i < S.d; ++i) {
        for (uint32_t v = 0; v < V; ++v) {
            if (i == q.pair_var) {
                S.decode(v, ser.data());
                bool ok = ser[q.pair_order] != 0;
                for (long t = 0; t < q.pair_order; ++t)
                    if (ser[t]) ok = false;
                if (!ok) continue;
            }
            S.allowed[i].push_back(v);
        }
        size_t bytes = V * (S.emax[i] + 1) * S.L * sizeof(int32_t);
        if (bytes <= (64u << 20)) {
            S.table[i].resize(V * (S.emax[i] + 1) * S.L);
            for (uint32_t v = 0; v < V; ++v) S.powers(v, S.emax[i], S.table[i].data() + v * (S.emax[i] + 1) * S.L);
        }
    }
    return S;
}

inline bool is_target(const int32_t* s, int L) {
    for (int t = 0; t + 1 < L; ++t)
        if (s[t]) return false;
    return s[L - 1] == 1;
}

struct Worker {
    const JetSetup& S;
    std::vector<std::vector<int32_t>> prod;  // per level: partial product series per monomial
    std::vector<int32_t> tmp, scratch;
    std::vector<long> leaf_exps;
    std::vector<int32_t> Q;
    std::vector<char> Qconst;

    explicit Worker(const JetSetup& s) : S(s) {
        size_t M = S.mons.size();
        prod.assign(S.d + 1, std::vector<int32_t>(M * S.L, 0));
        tmp.resize(S.L);
        for (const auto& m : S.mons)
            if (std::find(leaf_exps.begin(), leaf_exps.end(), m.e[S.d - 1]) == leaf_exps.end())
                leaf_exps.push_back(m.e[S.d - 1]);
        Q.resize(leaf_exps.size() * S.L);
        Qconst.resize(leaf_exps.size());
    }

    void init_level0() {
        auto& P = prod[0];
        std::fill(P.begin(), P.end(), 0);
        for (size_t a = 0; a < S.mons.size(); ++a) P[a * S.L] = static_cast<int32_t>(S.mons[a].c);
    }

    // apply value v of coordinate `level` to prod[level] -> prod[level+1]
    void step(int level, uint32_t v) {
        const auto& P = prod[level];
        auto& N = prod[level + 1];
        for (size_t a = 0; a < S.mons.size(); ++a) {
            long e = S.mons[a].e[level];
            if (e == 0) {
                std::memcpy(&N[a * S.L], &P[a * S.L], S.L * sizeof(int32_t));
            } else {
                mul_trunc(&P[a * S.L], S.pw(level, v, e, scratch), &N[a * S.L], S.L, S.p);
            }
        }
    }

    uint64_t leaf(const std::vector<int32_t>& P) {
        int L = S.L;
        long p = S.p;
        std::fill(Q.begin(), Q.end(), 0);
        for (size_t a = 0; a < S.mons.size(); ++a) {
            size_t g = std::find(leaf_exps.begin(), leaf_exps.end(), S.mons[a].e[S.d - 1]) - leaf_exps.begin();
            for (int t = 0; t < L; ++t) Q[g * L + t] = static_cast<int32_t>((Q[g * L + t] + P[a * L + t]) % p);
        }
        for (size_t g = 0; g < leaf_exps.size(); ++g) {
            bool c = true;
            for (int t = 1; t < L; ++t)
                if (Q[g * L + t]) c = false;
            Qconst[g] = c;
        }
        uint64_t count = 0;
        std::vector<int64_t> acc(L);
        for (uint32_t v : S.allowed[S.d - 1]) {
            std::fill(acc.begin(), acc.end(), 0);
            for (size_t g = 0; g < leaf_exps.size(); ++g) {
                const int32_t* q = &Q[g * L];
                const int32_t* w = S.pw(S.d - 1, v, leaf_exps[g], scratch);
                if (Qconst[g]) {
                    if (q[0] == 0) continue;
                    for (int t = 0; t < L; ++t) acc[t] += static_cast<int64_t>(q[0]) * w[t];
                } else {
                    for (int t = 0; t < L; ++t) {
                        int64_t s = 0;
                        for (int u = 0; u <= t; ++u) s += static_cast<int64_t>(q[u]) * w[t - u];
                        acc[t] += s % p;
                    }
                }
            }
            bool ok = acc[L - 1] % p == 1;
            for (int t = 0; ok && t + 1 < L; ++t)
                if (acc[t] % p) ok = false;
            if (ok) ++count;
        }
        return count;
    }

    uint64_t descend(int level) {
        if (level == S.d - 1) return leaf(prod[level]);
        uint64_t total = 0;
        for (uint32_t v : S.allowed[level]) {
            step(level, v);
            total += descend(level + 1);
        }
        return total;
    }
};

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

}  // namespace

uint64_t jet_count_kernel(const PolyFp& f, const JetQuery& q) {
    if (f.terms.empty()) return 0;
    JetSetup S = setup(f, q);
    uint64_t total = 0;
    if (S.d == 1) {
        Worker w(S);
        w.init_level0();
        return w.leaf(w.prod[0]);
    }
    const auto& first = S.allowed[0];
    long nfirst = static_cast<long>(first.size());
#pragma omp parallel reduction(+ : total)
    {
        Worker w(S);
        w.init_level0();
#pragma omp for schedule(dynamic, 4)
        for (long i = 0; i < nfirst; ++i) {
            w.step(0, first[i]);
            total += w.descend(1);
        }
    }
    return total;
}

uint64_t jet_count_reference(const PolyFp& f, const JetQuery& q) {
    int d = f.dim;
    int L = static_cast<int>(q.n) + 1;
    int s = q.local ? 1 : 0;
    long p = f.p;
    int per = L - s;
    int digits = d * per;
    std::vector<long> c(digits, 0);
    std::vector<std::vector<long>> phi(d, std::vector<long>(L, 0));
    uint64_t count = 0;
    for (;;) {
        for (int i = 0; i < d; ++i)
            for (int t = s; t < L; ++t) phi[i][t] = c[i * per + (t - s)];
        bool pair_ok = true;
        if (q.pair_var >= 0) {
            const auto& x = phi[q.pair_var];
            for (long t = 0; t < q.pair_order; ++t)
                if (x[t]) pair_ok = false;
            if (x[q.pair_order] == 0) pair_ok = false;
        }
        if (pair_ok) {
            std::vector<long> total(L, 0);
            for (const auto& [e, coef] : f.terms) {
                std::vector<long> term(L, 0);
                term[0] = coef;
                for (int i = 0; i < d; ++i)
                    for (long k = 0; k < e[i]; ++k) {
                        std::vector<long> next(L, 0);
                        for (int a = 0; a < L; ++a)
                            for (int b = 0; a + b < L; ++b) next[a + b] = (next[a + b] + term[a] * phi[i][b]) % p;
                        term = next;
                    }
                for (int t = 0; t < L; ++t) total[t] = (total[t] + term[t]) % p;
            }
            bool ok = total[L - 1] == 1;
            for (int t = 0; t + 1 < L; ++t)
                if (total[t]) ok = false;
            if (ok) ++count;
        }
        int k = 0;
        while (k < digits) {
            if (++c[k] < p) break;
            c[k] = 0;
            ++k;
        }
        if (k == digits) break;
    }
    return count;
}

uint64_t torus_count_kernel(const PolyFp& g, Subset vars, long target) {
    std::vector<int> idx = members(vars);
    long p = g.p;
    target = ((target % p) + p) % p;
    if (idx.empty()) {
        long s = 0;
        for (const auto& [e, c] : g.terms) s = (s + c) % p;
        return s == target ? 1 : 0;
    }
    std::vector<Mono> mons = monomials(g);
    long emax = 0;
    for (const auto& m : mons)
        for (long x : m.e) emax = std::max(emax, x);
    // pw[x*(emax+1)+e] = x^e mod p
    std::vector<long> pw(p * (emax + 1));
    for (long x = 0; x < p; ++x)
        for (long e = 0; e <= emax; ++e) pw[x * (emax + 1) + e] = powmod(x, e, p);
    int k = static_cast<int>(idx.size());
    uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (long x0 = 1; x0 < p; ++x0) {
        std::vector<long> x(k, 1);
        x[0] = x0;
        for (;;) {
            long s = 0;
            for (const auto& m : mons) {
                long t = m.c;
                for (int a = 0; a < k; ++a) t = t * pw[x[a] * (emax + 1) + m.e[idx[a]]] % p;
                s += t;
            }
            if (s % p == target) ++total;
            int a = 1;
            while (a < k) {
                if (++x[a] < p) break;
                x[a] = 1;
                ++a;
            }
            if (a >= k) break;
        }
    }
    return total;
}

uint64_t torus_count_reference(const PolyFp& g, Subset vars, long target) {
    std::vector<int> idx = members(vars);
    long p = g.p;
    target = ((target % p) + p) % p;
    std::vector<long> x(g.dim, 0);
    uint64_t count = 0;
    std::vector<long> vals(idx.size(), 1);
    for (;;) {
        for (size_t a = 0; a < idx.size(); ++a) x[idx[a]] = vals[a];
        long s = 0;
        for (const auto& [e, c] : g.terms) {
            long t = c;
            for (int i = 0; i < g.dim; ++i) t = t * powmod(x[i], e[i], p) % p;
            s = (s + t) % p;
        }
        if (s == target) ++count;
        size_t a = 0;
        while (a < idx.size()) {
            if (++vals[a] < p) break;
            vals[a] = 1;
            ++a;
        }
        if (a == idx.size()) break;
    }
    return count;
}

}  // namespace ndeg
