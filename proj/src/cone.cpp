#include "ndeg/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ndeg {

bool PolyCone::contains(const IVec& x) const {
    for (const auto& r : eq)
        if (dot(r, x) != 0) return false;
    for (const auto& r : strict)
        if (dot(r, x) <= 0) return false;
    for (const auto& r : weak)
        if (dot(r, x) < 0) return false;
    return true;
}

namespace {

struct Row {
    IVec a;
    bool strict;
    bool operator<(const Row& o) const { return a != o.a ? a < o.a : strict < o.strict; }
};

// Feasibility of a homogeneous system of strict (> 0) and weak (>= 0) rows by Fourier-Motzkin.
bool fm_feasible(std::vector<Row> rows, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        std::vector<Row> pos, neg, next;
        for (auto& r : rows) {
            if (r.a[v] > 0)
                pos.push_back(r);
            else if (r.a[v] < 0)
                neg.push_back(r);
            else
                next.push_back(r);
        }
        for (const auto& P : pos)
            for (const auto& N : neg) {
                long cp = -N.a[v], cn = P.a[v];
                IVec a(nvars);
                for (int i = 0; i < nvars; ++i) a[i] = cp * P.a[i] + cn * N.a[i];
                next.push_back({primitive(a), P.strict || N.strict});
            }
        std::set<Row> uniq(next.begin(), next.end());
        // a strict row dominates the weak copy of itself
        rows.clear();
        for (const auto& r : uniq)
            if (r.strict || !uniq.count({r.a, true})) rows.push_back(r);
    }
    for (const auto& r : rows)
        if (r.strict) return false;  // 0 > 0
    return true;
}

// Parametrize {eq·x = 0} as x = K^T y and rewrite rows in y.
bool feasible(const IMat& eq, const IMat& strict, const IMat& weak, int m) {
    IMat K = eq.empty() ? IMat{} : kernel(eq, m);
    if (eq.empty())
        for (int i = 0; i < m; ++i) K.push_back(unit(m, i));
    int k = static_cast<int>(K.size());
    std::vector<Row> rows;
    auto conv = [&](const IVec& r, bool s) {
        IVec a(k);
        for (int j = 0; j < k; ++j) a[j] = dot(r, K[j]);
        rows.push_back({primitive(a), s});
    };
    for (const auto& r : strict) conv(r, true);
    for (const auto& r : weak) conv(r, false);
    return fm_feasible(rows, k);
}

}  // namespace

bool PolyCone::empty() const { return !feasible(eq, strict, weak, m); }

int PolyCone::dim() const {
    int best = -1;
    for (const auto& P : open_pieces()) best = std::max(best, m - rank(P.eq));
    return best;
}

std::vector<PolyCone> PolyCone::open_pieces() const {
    std::vector<PolyCone> out;
    size_t w = weak.size();
    for (unsigned long mask = 0; mask < (1ul << w); ++mask) {
        PolyCone P;
        P.m = m;
        P.eq = eq;
        P.strict = strict;
        for (size_t i = 0; i < w; ++i) {
            if ((mask >> i) & 1ul)
                P.eq.push_back(weak[i]);
            else
                P.strict.push_back(weak[i]);
        }
        if (!P.empty()) out.push_back(std::move(P));
    }
    return out;
}

bool PolyCone::closure_pointed() const {
    IMat all = eq;
    all.insert(all.end(), strict.begin(), strict.end());
    all.insert(all.end(), weak.begin(), weak.end());
    return m == 0 || rank(all) == m;
}

IMat PolyCone::closure_rays() const {
    IMat ineq = strict;
    ineq.insert(ineq.end(), weak.begin(), weak.end());
    int re = eq.empty() ? 0 : rank(eq);
    int need = m - 1 - re;
    std::set<IVec> rays;
    if (need < 0) return {};
    auto test = [&](const IMat& rows) {
        IMat K = kernel(rows, m);
        if (K.size() != 1) return;
        for (int sgn : {1, -1}) {
            IVec v = K[0];
            for (auto& x : v) x *= sgn;
            bool ok = true;
            for (const auto& r : ineq)
                if (dot(r, v) < 0) ok = false;
            if (ok) rays.insert(primitive(v));
        }
    };
    IMat cur = eq;
    std::function<void(size_t, int)> rec = [&](size_t start, int left) {
        if (left == 0) {
            test(cur);
            return;
        }
        for (size_t i = start; i < ineq.size(); ++i) {
            cur.push_back(ineq[i]);
            if (rank(cur) == static_cast<int>(re + need - left + 1)) rec(i + 1, left - 1);
            cur.pop_back();
        }
    };
    if (need == 0) {
        if (m > 0) test(eq);
    } else {
        rec(0, need);
    }
    return IMat(rays.begin(), rays.end());
}

std::vector<IVec> PolyCone::lattice_points(const IVec& lform, long N) const {
    std::vector<IVec> out;
    if (m == 0) {
        if (contains({})) out.push_back({});
        return out;
    }
    IMat rays = closure_rays();
    IVec lo(m, 0), hi(m, 0);
    for (const auto& r : rays) {
        long l = dot(lform, r);
        if (l <= 0) throw std::domain_error("linear form not positive on the cone");
        for (int i = 0; i < m; ++i) {
            // N * r_i / l, rounded outward
            long q = r[i] * N;
            long up = q >= 0 ? (q + l - 1) / l : -((-q) / l);
            long dn = q >= 0 ? q / l : -((-q + l - 1) / l);
            hi[i] = std::max(hi[i], up);
            lo[i] = std::min(lo[i], dn);
        }
    }
    IVec x = lo;
    for (;;) {
        if (dot(lform, x) <= N && contains(x)) out.push_back(x);
        int i = 0;
        while (i < m) {
            if (++x[i] <= hi[i]) break;
            x[i] = lo[i];
            ++i;
        }
        if (i == m) break;
    }
    return out;
}

}  // namespace ndeg
