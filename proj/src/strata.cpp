#include "ndeg/strata.hpp"

#include <algorithm>
#include <functional>

namespace ndeg {

namespace {

using Cache = std::map<Subset, NewtonPolyhedron>;

const NewtonPolyhedron& poly_of(const Poly& f, Subset K, Cache& cache) {
    auto it = cache.find(K);
    if (it == cache.end()) it = cache.emplace(K, newton_polyhedron(f, K)).first;
    return it->second;
}

StratumInfo jet_stratum_cached(const Poly& f, long N, long n, Subset J, const IVec& b, Cache& cache) {
    StratumInfo S;
    S.key = {J, b, n};
    S.Jt = tilde_J(f, J);
    if (S.Jt == 0) return S;
    const NewtonPolyhedron& G = poly_of(f, S.Jt, cache);
    IVec bt(f.dim, 0);
    for (int i : members(S.Jt)) bt[i] = b[i];
    S.ell = G.ell(bt);
    S.k = n - S.ell;
    S.gamma = G.face_of(bt);
    if (S.k < 0) return S;
    if (S.k >= 1 && S.gamma.is_vertex()) return S;
    LPoly free{{0, 1}};
    for (int i : members(J & ~S.Jt)) {
        LPoly next;
        for (auto [e, c] : free) {
            next[e + N - b[i] + 1] += c;
            next[e + N - b[i]] -= c;
        }
        free = next;
    }
    long E = 0;
    for (int i : members(S.Jt)) E += N - b[i];
    if (S.k >= 1) E -= S.k;
    Atom a = torus_atom(S.gamma.vertices, S.Jt, S.k == 0 ? 1 : 0);
    if (S.k == 0 && S.ell > 0) {
        Weights w = monodromy_weights(G, bt);
        a.weights = w.residues;
        a.weight_mod = w.modulus;
    }
    GClass c;
    c.add(a, E, 1);
    S.cls = c.times(free);
    S.empty = S.cls.is_zero();
    if (!S.empty) {
        S.dim = -1 - S.k;
        for (int i : members(J)) S.dim += N + 1 - b[i];
    }
    return S;
}

void for_each_vector(Subset J, int d, long lo, long hi, const std::function<void(const IVec&)>& fn) {
    std::vector<int> idx = members(J);
    IVec a(d, 0);
    for (int i : idx) a[i] = lo;
    if (lo > hi && !idx.empty()) return;
    for (;;) {
        fn(a);
        size_t k = 0;
        while (k < idx.size()) {
            if (++a[idx[k]] <= hi) break;
            a[idx[k]] = lo;
            ++k;
        }
        if (k == idx.size()) return;
    }
}

}  // namespace

StratumInfo jet_stratum(const Poly& f, long N, long n, Subset J, const IVec& b) {
    Cache cache;
    return jet_stratum_cached(f, N, n, J, b, cache);
}

StratumInfo stratum_class(const Poly& f, long n, Subset J, const IVec& a) { return jet_stratum(f, n, n, J, a); }

bool delta_membership(const Poly& f, Subset J, const IVec& a, long k) {
    NewtonPolyhedron G = newton_polyhedron(f, J);
    if (G.empty) return false;
    bool nz = false;
    for (int i : members(J)) {
        if (a[i] < 0) return false;
        if (a[i]) nz = true;
    }
    if (!nz) return false;
    long l = G.ell(a);
    for (int i : members(J))
        if (a[i] > l + k) return false;
    return true;
}

std::vector<IVec> delta_tilde_enumerate(const Poly& f, Subset J, long n, long k) {
    std::vector<IVec> out;
    NewtonPolyhedron G = newton_polyhedron(f, J);
    if (G.empty || J == 0) return out;
    for_each_vector(J, f.dim, 1, n, [&](const IVec& a) {
        long l = G.ell(a);
        if (l != n - k) return;
        for (int i : members(J))
            if (a[i] > l + k) return;
        out.push_back(a);
    });
    return out;
}

bool Poset::leq(size_t i, size_t j) const {
    const auto& A = nodes[i].key;
    const auto& B = nodes[j].key;
    if ((A.J & B.J) != A.J) return false;
    for (int t : members(A.J))
        if (B.a[t] > A.a[t]) return false;
    return true;
}

std::vector<size_t> Poset::closure(size_t i) const {
    std::vector<size_t> out;
    for (size_t l = 0; l < nodes.size(); ++l)
        if (leq(l, i)) out.push_back(l);
    return out;
}

std::vector<size_t> Poset::filtration(long p) const {
    std::vector<size_t> out;
    for (size_t l = 0; l < nodes.size(); ++l)
        if (nodes[l].dim <= p) out.push_back(l);
    return out;
}

Poset enumerate_Pn(const Poly& f, long n) {
    Poset P;
    P.n = n;
    Cache cache;
    for (Subset J = 1; J <= full_set(f.dim); ++J) {
        for_each_vector(J, f.dim, 1, n, [&](const IVec& a) {
            StratumInfo S = jet_stratum_cached(f, n, n, J, a, cache);
            if (!S.empty) P.nodes.push_back(std::move(S));
        });
    }
    return P;
}

std::map<long, std::vector<size_t>> e1_table(const Poset& P) {
    std::map<long, std::vector<size_t>> out;
    for (size_t i = 0; i < P.nodes.size(); ++i) out[P.nodes[i].dim].push_back(i);
    return out;
}

std::map<DSetKey, std::vector<IVec>> d_sets(const Poly& f, long n) {
    std::map<DSetKey, std::vector<IVec>> out;
    int d = f.dim;
    NewtonPolyhedron G = newton_polyhedron(f);
    if (G.empty) return out;
    for_each_vector(full_set(d), d, 1, n, [&](const IVec& a) {
        long l = G.ell(a);
        long k = n - l;
        if (k < 0) return;
        const FaceDesc& g = G.face_of(a);
        if (k >= 1 && g.is_vertex()) return;
        long s = 0;
        for (long x : a) s += x;
        long p = d - 1 + d * n - s - k;
        out[{g.vertices, k, p}].push_back(a);
    });
    return out;
}

std::map<long, long> cohomology_table(const Poly& f, long n) {
    std::map<long, long> out;
    int d = f.dim;
    NewtonPolyhedron G = newton_polyhedron(f);
    for (const auto& [key, as] : d_sets(f, n)) {
        const auto& [V, k, p] = key;
        const FaceDesc* g = G.find(V, 0);
        auto [v0, v1] = delta_volumes(*g);
        long m = 2 * p - (d - 1);
        long add = (k == 0 ? v1 : v0) * static_cast<long>(as.size());
        out[m] += add;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Weights monodromy_weights(const NewtonPolyhedron& G, const IVec& a) {
    Weights w;
    w.modulus = G.ell(a);
    if (w.modulus <= 0) throw MathError("monodromy weights need ell(a) > 0");
    for (long x : a) w.residues.push_back(((x % w.modulus) + w.modulus) % w.modulus);
    return w;
}

}  // namespace ndeg
