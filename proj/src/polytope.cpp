#include "ndeg/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ndeg {

namespace {

IVec canon_dir(IVec v) {
    v = primitive(v);
    for (long x : v) {
        if (!x) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

void sort_unique(std::vector<IVec>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Normal candidates: kernels of independent (r-1)-subsets of the direction set.
std::set<IVec> candidate_normals(const std::vector<IVec>& dirs, int r) {
    std::set<IVec> out;
    if (r == 1) {
        out.insert(IVec{1});
        return out;
    }
    IMat cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(cur.size()) == r - 1) {
            IMat K = kernel(cur, r);
            if (K.size() == 1) out.insert(canon_dir(K[0]));
            return;
        }
        for (size_t i = start; i < dirs.size(); ++i) {
            if (dirs.size() - i < static_cast<size_t>(r - 1) - cur.size()) break;
            cur.push_back(dirs[i]);
            if (rank(cur) == static_cast<int>(cur.size())) rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<IVec> direction_set(const std::vector<IVec>& pts) {
    std::vector<IVec> dirs;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            IVec v = vsub(pts[j], pts[i]);
            if (!is_zero(v)) dirs.push_back(canon_dir(v));
        }
    sort_unique(dirs);
    return dirs;
}

struct Hull {
    std::vector<Facet> facets;
    std::vector<bool> vertex;
};

// Facets of a full-dimensional lattice polytope in Z^r; dirs must contain every edge direction.
Hull polytope_hull(const std::vector<IVec>& pts, const std::vector<IVec>& dirs, int r) {
    Hull h;
    for (const IVec& n : candidate_normals(dirs, r)) {
        for (int sgn : {1, -1}) {
            IVec m = n;
            for (auto& x : m) x *= sgn;
            long off = dot(m, pts[0]);
            for (const auto& p : pts) off = std::min(off, dot(m, p));
            IMat diffs;
            const IVec* base = nullptr;
            for (const auto& p : pts) {
                if (dot(m, p) != off) continue;
                if (!base)
                    base = &p;
                else
                    diffs.push_back(vsub(p, *base));
            }
            if (rank(diffs) == r - 1) h.facets.push_back({m, off});
        }
    }
    h.vertex.assign(pts.size(), false);
    for (size_t i = 0; i < pts.size(); ++i) {
        IMat tight;
        for (const auto& F : h.facets)
            if (dot(F.normal, pts[i]) == F.offset) tight.push_back(F.normal);
        h.vertex[i] = rank(tight) == r;
    }
    return h;
}

// Pulling triangulation of the full-dimensional polytope conv(pts) in Z^r; returns index lists.
std::vector<std::vector<int>> pulling(const std::vector<IVec>& pts, const std::vector<int>& ids,
                                      const std::vector<IVec>& dirs, int r) {
    if (r == 0) return {{ids[0]}};
    Hull h = polytope_hull(pts, dirs, r);
    std::vector<IVec> V;
    std::vector<int> Vid;
    for (size_t i = 0; i < pts.size(); ++i)
        if (h.vertex[i]) {
            V.push_back(pts[i]);
            Vid.push_back(ids[i]);
        }
    size_t apex = std::min_element(V.begin(), V.end()) - V.begin();
    std::vector<std::vector<int>> out;
    for (const auto& F : h.facets) {
        if (dot(F.normal, V[apex]) == F.offset) continue;
        std::vector<IVec> Fp;
        std::vector<int> Fid;
        for (size_t i = 0; i < V.size(); ++i)
            if (dot(F.normal, V[i]) == F.offset) {
                Fp.push_back(V[i]);
                Fid.push_back(Vid[i]);
            }
        IMat diffs;
        for (size_t i = 1; i < Fp.size(); ++i) diffs.push_back(vsub(Fp[i], Fp[0]));
        IMat B = hermite_basis(diffs, r);
        std::vector<IVec> sub;
        QVec c;
        for (const auto& p : Fp) {
            coords_in_basis(B, vsub(p, Fp[0]), c);
            IVec v;
            for (const auto& x : c) v.push_back(x.get_num().get_si());
            sub.push_back(v);
        }
        std::vector<IVec> subdirs;
        for (const auto& dvec : dirs) {
            if (dot(F.normal, dvec) != 0) continue;
            if (!coords_in_basis(B, dvec, c)) continue;
            mpz_class l = 1;
            for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
            IVec v;
            for (const auto& x : c) v.push_back(mpz_class(x * l).get_si());
            if (!is_zero(v)) subdirs.push_back(canon_dir(v));
        }
        sort_unique(subdirs);
        for (auto s : pulling(sub, Fid, subdirs, r - 1)) {
            s.push_back(Vid[apex]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

// Lattice coordinates (w.r.t. the saturated affine lattice) of a point set; returns rank.
int lattice_coords(const std::vector<IVec>& pts, std::vector<IVec>& out) {
    IMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    int d = static_cast<int>(pts[0].size());
    IMat B = saturated_basis(diffs, d);
    out.clear();
    QVec c;
    for (const auto& p : pts) {
        coords_in_basis(B, vsub(p, pts[0]), c);
        IVec v;
        for (const auto& x : c) v.push_back(x.get_num().get_si());
        out.push_back(v);
    }
    return static_cast<int>(B.size());
}

long simplex_volume_sum(const std::vector<IVec>& pts, const std::vector<std::vector<int>>& simplices) {
    mpz_class total = 0;
    for (const auto& s : simplices) {
        IMat M;
        for (size_t i = 1; i < s.size(); ++i) M.push_back(vsub(pts[s[i]], pts[s[0]]));
        total += abs(det(M));
    }
    return total.get_si();
}

long volume_in_coords(std::vector<IVec> pts, const std::vector<IVec>& dirs, int r) {
    sort_unique(pts);
    IMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    if (r == 0) return 1;
    if (rank(diffs) < r) return 0;
    std::vector<int> ids(pts.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return simplex_volume_sum(pts, pulling(pts, ids, dirs, r));
}

}  // namespace

IMat affine_lattice_basis(const std::vector<IVec>& pts) {
    if (pts.empty()) throw std::invalid_argument("affine_lattice_basis: no points");
    IMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    return saturated_basis(diffs, static_cast<int>(pts[0].size()));
}

std::vector<std::vector<IVec>> triangulate(const std::vector<IVec>& input) {
    std::vector<IVec> pts = input;
    sort_unique(pts);
    std::vector<IVec> lc;
    int r = lattice_coords(pts, lc);
    std::vector<int> ids(pts.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::vector<std::vector<IVec>> out;
    for (const auto& s : pulling(lc, ids, direction_set(lc), r)) {
        std::vector<IVec> simplex;
        for (int i : s) simplex.push_back(pts[i]);
        out.push_back(simplex);
    }
    return out;
}

long normalized_volume(const std::vector<IVec>& input) {
    if (input.empty()) return 0;
    std::vector<IVec> pts = input;
    sort_unique(pts);
    std::vector<IVec> lc;
    int r = lattice_coords(pts, lc);
    if (r == 0) return 1;
    return volume_in_coords(lc, direction_set(lc), r);
}

long mixed_volume(const std::vector<std::vector<IVec>>& polys) {
    int r = static_cast<int>(polys.size());
    if (r == 0) return 1;
    int d = static_cast<int>(polys[0].at(0).size());
    IMat diffs;
    for (const auto& P : polys)
        for (size_t i = 1; i < P.size(); ++i) diffs.push_back(vsub(P[i], P[0]));
    IMat B = saturated_basis(diffs, d);
    if (static_cast<int>(B.size()) != r)
        throw MathError("mixed_volume: lattice rank " + std::to_string(B.size()) + " differs from the number of polytopes " +
                        std::to_string(r));
    std::vector<std::vector<IVec>> local(r);
    std::vector<std::vector<IVec>> localdirs(r);
    QVec c;
    for (int k = 0; k < r; ++k) {
        for (const auto& p : polys[k]) {
            coords_in_basis(B, vsub(p, polys[k][0]), c);
            IVec v;
            for (const auto& x : c) v.push_back(x.get_num().get_si());
            local[k].push_back(v);
        }
        sort_unique(local[k]);
        localdirs[k] = direction_set(local[k]);
        // keep only vertices to limit Minkowski-sum growth
        int rk = 0;
        {
            IMat dd;
            for (size_t i = 1; i < local[k].size(); ++i) dd.push_back(vsub(local[k][i], local[k][0]));
            rk = rank(dd);
        }
        if (rk == r) {
            Hull h = polytope_hull(local[k], localdirs[k], r);
            std::vector<IVec> V;
            for (size_t i = 0; i < local[k].size(); ++i)
                if (h.vertex[i]) V.push_back(local[k][i]);
            local[k] = V;
        }
    }
    mpz_class total = 0;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        std::vector<IVec> sum{IVec(r, 0)};
        std::vector<IVec> dirs;
        for (int k = 0; k < r; ++k) {
            if (!((mask >> k) & 1u)) continue;
            std::vector<IVec> next;
            for (const auto& a : sum)
                for (const auto& b : local[k]) next.push_back(vadd(a, b));
            sort_unique(next);
            sum = std::move(next);
            dirs.insert(dirs.end(), localdirs[k].begin(), localdirs[k].end());
        }
        sort_unique(dirs);
        long v = volume_in_coords(sum, dirs, r);
        int sign = ((r - popcount(mask)) % 2) ? -1 : 1;
        total += sign * v;
    }
    mpz_class fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    if (total % fact != 0) throw std::logic_error("mixed_volume: non-integral result");
    return mpz_class(total / fact).get_si();
}

std::pair<long, long> delta_volumes(const FaceDesc& face) {
    if (!face.compact()) throw MathError("delta_volumes: face is not compact");
    long v0 = face.dim == 0 ? 0 : normalized_volume(face.vertices);
    std::vector<IVec> withzero = face.vertices;
    withzero.push_back(IVec(face.vertices[0].size(), 0));
    return {v0, normalized_volume(withzero)};
}

// ---------------------------------------------------------------- Newton polyhedra

long NewtonPolyhedron::ell(const IVec& a) const {
    if (empty) throw MathError("empty Newton polyhedron");
    long best = dot(a, vertices[0]);
    for (const auto& v : vertices) best = std::min(best, dot(a, v));
    return best;
}

const FaceDesc* NewtonPolyhedron::find(const std::vector<IVec>& V, Subset I) const {
    for (const auto& F : faces)
        if (F.vertices == V && F.recession == I) return &F;
    return nullptr;
}

const FaceDesc& NewtonPolyhedron::face_of(const IVec& a) const {
    long l = ell(a);
    std::vector<IVec> V;
    for (const auto& v : vertices)
        if (dot(a, v) == l) V.push_back(v);
    Subset I = 0;
    for (int i : members(ambient))
        if (a[i] == 0) I |= 1u << i;
    const FaceDesc* F = find(V, I);
    if (!F) throw std::logic_error("face_of: minimizing face missing from the face lattice");
    return *F;
}

std::vector<FaceDesc> NewtonPolyhedron::compact_faces() const {
    std::vector<FaceDesc> out;
    for (const auto& F : faces)
        if (F.compact()) out.push_back(F);
    return out;
}

const FaceDesc& NewtonPolyhedron::whole() const {
    for (const auto& F : faces)
        if (F.recession == ambient) return F;
    throw std::logic_error("polyhedron has no top face");
}

bool NewtonPolyhedron::facet_contains(const Facet& F, const FaceDesc& face) const {
    for (const auto& v : face.vertices)
        if (dot(F.normal, v) != F.offset) return false;
    for (int i : members(face.recession))
        if (F.normal[i] != 0) return false;
    return true;
}

namespace {

FaceDesc face_from_weight(const NewtonPolyhedron& G, const IVec& w) {
    FaceDesc F;
    F.ambient = G.ambient;
    F.normal = w;
    long l = G.ell(w);
    for (const auto& v : G.vertices)
        if (dot(w, v) == l) F.vertices.push_back(v);
    for (int i : members(G.ambient))
        if (w[i] == 0) F.recession |= 1u << i;
    IMat rows;
    for (size_t i = 1; i < F.vertices.size(); ++i) rows.push_back(vsub(F.vertices[i], F.vertices[0]));
    for (int i : members(F.recession)) rows.push_back(unit(G.d, i));
    F.dim = rank(rows);
    F.supp = F.recession;
    for (const auto& v : F.vertices)
        for (int i = 0; i < G.d; ++i)
            if (v[i]) F.supp |= 1u << i;
    return F;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const Poly& f) { return newton_polyhedron(f, full_set(f.dim)); }

NewtonPolyhedron newton_polyhedron(const Poly& f, Subset K) {
    NewtonPolyhedron G;
    G.d = f.dim;
    G.ambient = K;
    Poly g = restrict(f, K);
    if (g.is_zero()) return G;
    G.empty = false;
    std::vector<int> idx = members(K);
    int k = static_cast<int>(idx.size());
    std::vector<IVec> pts = g.support();
    // drop points dominated coordinatewise by another support point
    std::vector<IVec> minimal;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts) {
            if (q == p) continue;
            bool le = true;
            for (int i = 0; i < G.d; ++i)
                if (q[i] > p[i]) le = false;
            if (le) dominated = true;
        }
        if (!dominated) minimal.push_back(p);
    }
    auto proj = [&](const IVec& v) {
        IVec out;
        for (int i : idx) out.push_back(v[i]);
        return out;
    };
    auto embed = [&](const IVec& v) {
        IVec out(G.d, 0);
        for (int j = 0; j < k; ++j) out[idx[j]] = v[j];
        return out;
    };
    if (k == 0) {
        G.vertices = minimal;
    } else {
        std::vector<IVec> P;
        for (const auto& p : minimal) P.push_back(proj(p));
        std::vector<IVec> dirs = direction_set(P);
        for (int j = 0; j < k; ++j) dirs.push_back(unit(k, j));
        sort_unique(dirs);
        for (const IVec& n0 : candidate_normals(dirs, k)) {
            IVec n = n0;
            bool nonneg = true, nonpos = true;
            for (long x : n) {
                if (x < 0) nonneg = false;
                if (x > 0) nonpos = false;
            }
            if (!nonneg && !nonpos) continue;
            if (nonpos)
                for (auto& x : n) x = -x;
            long off = dot(n, P[0]);
            for (const auto& p : P) off = std::min(off, dot(n, p));
            IMat rows;
            const IVec* base = nullptr;
            for (const auto& p : P) {
                if (dot(n, p) != off) continue;
                if (!base)
                    base = &p;
                else
                    rows.push_back(vsub(p, *base));
            }
            for (int j = 0; j < k; ++j)
                if (n[j] == 0) rows.push_back(unit(k, j));
            if (rank(rows) == k - 1) G.facets.push_back({embed(n), off});
        }
        for (const auto& p : minimal) {
            IMat tight;
            for (const auto& F : G.facets)
                if (dot(F.normal, p) == F.offset) tight.push_back(proj(F.normal));
            if (rank(tight) == k) G.vertices.push_back(p);
        }
    }
    std::sort(G.vertices.begin(), G.vertices.end());

    // face lattice: facets and the whole polyhedron, closed under intersection
    std::vector<FaceDesc> faces;
    auto add = [&](const IVec& w) {
        FaceDesc F = face_from_weight(G, w);
        for (const auto& E : faces)
            if (E.same(F)) return false;
        faces.push_back(F);
        return true;
    };
    add(IVec(G.d, 0));
    for (const auto& F : G.facets) add(F.normal);
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = faces.size();
        for (size_t i = 1; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                bool meet = false;
                for (const auto& v : faces[i].vertices)
                    if (std::binary_search(faces[j].vertices.begin(), faces[j].vertices.end(), v)) meet = true;
                if (!meet) continue;
                if (add(vadd(faces[i].normal, faces[j].normal))) grew = true;
            }
    }
    std::sort(faces.begin(), faces.end());
    G.faces = std::move(faces);
    return G;
}

Poly face_function(const Poly& f, const FaceDesc& face) {
    Poly g = restrict(f, face.ambient);
    for (const auto& v : face.vertices)
        if (!g.terms.count(v)) throw MathError("face does not belong to the Newton polyhedron of f");
    Poly out = face_function_by_weight(f, face.normal, face.ambient);
    for (const auto& v : face.vertices)
        if (!out.terms.count(v)) throw MathError("face does not belong to the Newton polyhedron of f");
    return out;
}

}  // namespace ndeg
