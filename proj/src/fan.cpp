#include "ndeg/fan.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace ndeg {

namespace {

std::string fmt_vec(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string fmt_face(const FaceDesc& F) {
    std::string s = "conv{";
    for (size_t i = 0; i < F.vertices.size(); ++i) s += (i ? "," : "") + fmt_vec(F.vertices[i]);
    s += "}";
    if (F.recession) {
        s += "+R^{";
        bool first = true;
        for (int i : members(F.recession)) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
        s += "}";
    }
    return s;
}

void build_rows(const NewtonPolyhedron& G, const FaceDesc& F, PolyCone& C, bool open) {
    int d = G.d;
    C.m = d;
    const IVec& v0 = F.vertices[0];
    for (size_t j = 1; j < F.vertices.size(); ++j) C.eq.push_back(vsub(F.vertices[j], v0));
    auto& ineq = open ? C.strict : C.weak;
    for (const auto& w : G.vertices)
        if (!std::binary_search(F.vertices.begin(), F.vertices.end(), w)) ineq.push_back(vsub(w, v0));
    for (int i = 0; i < d; ++i) {
        if (!contains(G.ambient, i) || contains(F.recession, i))
            C.eq.push_back(unit(d, i));
        else
            ineq.push_back(unit(d, i));
    }
}

}  // namespace

DualCone sigma_cone(const NewtonPolyhedron& G, const FaceDesc& face) {
    if (G.empty) throw MathError("empty Newton polyhedron");
    if (!G.find(face.vertices, face.recession)) throw MathError("sigma_cone: not a face: " + fmt_face(face));
    if (face.recession == G.ambient && face.vertices == G.vertices)
        throw MathError("sigma_cone: the polyhedron itself is not a proper face");
    DualCone D;
    D.face = *G.find(face.vertices, face.recession);
    build_rows(G, D.face, D.cone, true);
    for (const auto& F : G.facets)
        if (G.facet_contains(F, D.face)) D.generators.push_back(F.normal);
    std::sort(D.generators.begin(), D.generators.end());
    D.dim = D.cone.m - rank(D.cone.eq);
    return D;
}

DualCone sigma_cone(const NewtonPolyhedron& G, const FaceDesc& gamma, Subset I) {
    const FaceDesc* F = G.find(gamma.vertices, I);
    if (!F) throw MathError("sigma_cone: gamma + R^I is not a face");
    return sigma_cone(G, *F);
}

PolyCone closed_sigma(const NewtonPolyhedron& G, const FaceDesc& face) {
    PolyCone C;
    build_rows(G, face, C, false);
    return C;
}

std::pair<FaceDesc, Subset> locate(const NewtonPolyhedron& G, const IVec& a) {
    const FaceDesc& F = G.face_of(a);
    if (const FaceDesc* g = G.find(F.vertices, 0)) return {*g, F.recession};
    // conv(V) need not itself be a face when d >= 3
    FaceDesc g;
    g.vertices = F.vertices;
    g.ambient = G.ambient;
    IMat rows;
    for (size_t i = 1; i < g.vertices.size(); ++i) rows.push_back(vsub(g.vertices[i], g.vertices[0]));
    g.dim = rank(rows);
    for (const auto& v : g.vertices)
        for (int i = 0; i < G.d; ++i)
            if (v[i]) g.supp |= 1u << i;
    return {g, F.recession};
}

PFamily p_family(const NewtonPolyhedron& G, const FaceDesc& gamma) {
    PFamily R;
    for (const auto& F : G.faces) {
        if (F.vertices != gamma.vertices) continue;
        if (F.recession == G.ambient && F.vertices == G.vertices) continue;
        R.P.push_back(F.recession);
    }
    std::sort(R.P.begin(), R.P.end(), [](Subset a, Subset b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    for (Subset I : R.P) {
        bool maximal = true;
        for (Subset K : R.P)
            if (K != I && (K & I) == I) maximal = false;
        if (maximal) R.M.push_back(I);
    }
    return R;
}

std::vector<FaceDesc> gamma_circ(const NewtonPolyhedron& G, Subset Jt) {
    std::vector<FaceDesc> out;
    if (G.empty || Jt == 0) return out;
    for (const auto& F : G.faces)
        if (F.compact() && F.supp == Jt) out.push_back(F);
    return out;
}

std::vector<FaceDesc> gamma_circ(const Poly& f, Subset Jt) {
    if (Jt == 0) return {};
    return gamma_circ(newton_polyhedron(f, Jt), Jt);
}

PartitionReport partition_check(const NewtonPolyhedron& G, int samples, unsigned seed, long bound) {
    PartitionReport R;
    if (G.empty) {
        R.violations.push_back("empty polyhedron");
        return R;
    }
    std::vector<DualCone> cones;
    for (const auto& F : G.faces) {
        if (F.recession == G.ambient && F.vertices == G.vertices) continue;
        DualCone D = sigma_cone(G, F);
        int expect = popcount(G.ambient) - F.dim;
        if (D.dim != expect)
            R.violations.push_back("dimension law fails on " + fmt_face(F) + ": " + std::to_string(D.dim) + " vs " +
                                   std::to_string(expect));
        if (D.cone.empty()) R.violations.push_back("empty dual cone for " + fmt_face(F));
        // closure is generated by the facet normals
        IMat rays = closed_sigma(G, F).closure_rays();
        if (rays != D.generators) R.violations.push_back("closure rays differ from facet normals on " + fmt_face(F));
        for (const auto& g : D.generators) {
            if (gcd_all(g) != 1) R.violations.push_back("non-primitive generator " + fmt_vec(g));
            for (long x : g)
                if (x < 0) R.violations.push_back("negative generator " + fmt_vec(g));
        }
        cones.push_back(std::move(D));
        ++R.faces_checked;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(0, bound);
    std::vector<int> idx = members(G.ambient);
    for (int s = 0; s < samples; ++s) {
        IVec a(G.d, 0);
        bool nz = false;
        while (!nz) {
            for (int i : idx) {
                a[i] = dist(rng);
                if (a[i]) nz = true;
            }
        }
        int hits = 0;
        const DualCone* hit = nullptr;
        for (const auto& D : cones)
            if (D.cone.contains(a)) {
                ++hits;
                hit = &D;
            }
        if (hits != 1) {
            R.violations.push_back(fmt_vec(a) + " lies in " + std::to_string(hits) + " cones");
        } else if (!hit->face.same(G.face_of(a))) {
            R.violations.push_back(fmt_vec(a) + " located in " + fmt_face(hit->face) + " but face_of gives " +
                                   fmt_face(G.face_of(a)));
        }
        ++R.samples;
    }
    // closed cones pairwise meet in a common face
    for (size_t i = 0; i < cones.size(); ++i)
        for (size_t j = i + 1; j < cones.size(); ++j) {
            PolyCone A = closed_sigma(G, cones[i].face), B = closed_sigma(G, cones[j].face);
            PolyCone C = A;
            C.eq.insert(C.eq.end(), B.eq.begin(), B.eq.end());
            C.weak.insert(C.weak.end(), B.weak.begin(), B.weak.end());
            IMat rays = C.closure_rays();
            ++R.pairs_checked;
            if (rays.empty()) continue;
            IVec w(G.d, 0);
            for (const auto& r : rays) w = vadd(w, r);
            const FaceDesc& J = G.face_of(w);
            IMat jr = closed_sigma(G, J).closure_rays();
            if (jr != rays)
                R.violations.push_back("closed cones of " + fmt_face(cones[i].face) + " and " + fmt_face(cones[j].face) +
                                       " do not meet in a common face");
        }
    return R;
}

}  // namespace ndeg
