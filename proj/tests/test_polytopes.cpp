#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "ndeg/polytope.hpp"

using namespace ndeg;

namespace {

long brute_ell(const Poly& f, const IVec& a) {
    long best = 0;
    bool have = false;
    for (const auto& [e, c] : f.terms) {
        long v = dot(a, e);
        if (!have || v < best) best = v, have = true;
    }
    return best;
}

std::vector<IVec> random_points(std::mt19937& rng, int d, int count, int hi) {
    std::uniform_int_distribution<int> u(0, hi);
    std::vector<IVec> pts;
    for (int i = 0; i < count; ++i) {
        IVec v(d);
        for (auto& x : v) x = u(rng);
        pts.push_back(v);
    }
    return pts;
}

long abs_det_volume(const std::vector<IVec>& simplex) {
    IMat m;
    for (size_t i = 1; i < simplex.size(); ++i) m.push_back(vsub(simplex[i], simplex[0]));
    mpz_class v = abs(det(m));
    return v.get_si();
}

}  // namespace

TEST_CASE("cusp polyhedron") {
    Poly f = parse_poly("x1^2 + x2^3", 2);
    NewtonPolyhedron G = newton_polyhedron(f);
    CHECK(G.vertices == std::vector<IVec>{{0, 3}, {2, 0}});
    CHECK(G.facets.size() == 3);
    CHECK(G.ell({3, 2}) == 6);
    CHECK(G.ell({1, 1}) == 2);
    const FaceDesc& g = G.face_of({3, 2});
    CHECK(g.vertices.size() == 2);
    CHECK(g.dim == 1);
    CHECK(g.compact());
    CHECK(G.compact_faces().size() == 3);
    auto [v0, v1] = delta_volumes(g);
    CHECK(v0 == 1);
    CHECK(v1 == 6);
    CHECK(face_function(f, g) == f);
}

TEST_CASE("support function agrees with a minimum over the support") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        int d = 2 + trial % 2;
        Poly f = corpus::random_nondegenerate(rng, d);
        NewtonPolyhedron G = newton_polyhedron(f);
        std::uniform_int_distribution<int> u(0, 6);
        for (int s = 0; s < 30; ++s) {
            IVec a(d);
            for (auto& x : a) x = u(rng);
            CHECK(G.ell(a) == brute_ell(f, a));
            if (is_zero(a)) continue;
            const FaceDesc& F = G.face_of(a);
            for (const auto& v : F.vertices) CHECK(dot(a, v) == G.ell(a));
            // the face function by weight uses exactly the support points on the face
            Poly fw = face_function_by_weight(f, a, full_set(d));
            for (const auto& [e, c] : fw.terms) CHECK(dot(a, e) == G.ell(a));
        }
    }
}

TEST_CASE("every vertex is a support point and faces are closed under intersection") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 2 + trial % 2;
        Poly f = corpus::random_nondegenerate(rng, d);
        NewtonPolyhedron G = newton_polyhedron(f);
        for (const auto& v : G.vertices) CHECK(f.terms.count(v) == 1);
        for (const auto& F : G.faces) {
            if (F.compact()) CHECK(F.dim == rank([&] {
                                       IMat m;
                                       for (const auto& v : F.vertices) m.push_back(vsub(v, F.vertices[0]));
                                       if (m.empty()) m.push_back(IVec(d, 0));
                                       return m;
                                   }()));
            for (const auto& v : F.vertices) CHECK(dot(F.normal, v) == G.ell(F.normal));
        }
    }
}

TEST_CASE("normalized volumes") {
    CHECK(normalized_volume({{0, 0}, {1, 0}, {0, 1}}) == 1);
    CHECK(normalized_volume({{0, 0}, {2, 0}, {0, 3}}) == 6);
    CHECK(normalized_volume({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}) ==
          6);
    CHECK(normalized_volume({{2, 0}, {0, 3}}) == 1);
    CHECK(normalized_volume({{2, 0}, {0, 2}}) == 2);
    CHECK(normalized_volume({{5, 5}}) == 1);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + trial % 2;
        auto simplex = random_points(rng, d, d + 1, 5);
        long v = abs_det_volume(simplex);
        if (v == 0) continue;
        CHECK(normalized_volume(simplex) == v);
    }
}

TEST_CASE("triangulations cover the volume") {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 + trial % 2;
        auto pts = random_points(rng, d, 6, 4);
        IMat diffs;
        for (const auto& p : pts) diffs.push_back(vsub(p, pts[0]));
        if (rank(diffs) != d) continue;
        long total = 0;
        for (const auto& s : triangulate(pts)) {
            CHECK(static_cast<int>(s.size()) == d + 1);
            total += abs_det_volume(s);
        }
        CHECK(total == normalized_volume(pts));
    }
}

TEST_CASE("mixed volume worked values") {
    CHECK(mixed_volume({{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}}) == 1);
    CHECK(mixed_volume({{{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {0, 1, 0}}, {{0, 0, 0}, {0, 0, 1}}}) == 1);
    std::vector<IVec> sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(mixed_volume({sq, sq}) == 2);
    // Bernstein count for two generic conics
    std::vector<IVec> tri2{{0, 0}, {2, 0}, {0, 2}};
    CHECK(mixed_volume({tri2, tri2}) == 4);
    CHECK_THROWS_AS(mixed_volume({{{0, 0}, {1, 0}}, {{0, 0}, {2, 0}}}), MathError);
}

TEST_CASE("mixed volume symmetry and diagonal") {
    std::mt19937 rng(25);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        int d = 2 + trial % 2;
        std::vector<std::vector<IVec>> Ps;
        bool ok = true;
        for (int i = 0; i < d; ++i) {
            auto P = random_points(rng, d, d + 1, 2);
            IMat diffs;
            for (const auto& p : P) diffs.push_back(vsub(p, P[0]));
            if (rank(diffs) != d) ok = false;
            Ps.push_back(P);
        }
        if (!ok) continue;
        ++done;
        long mv = mixed_volume(Ps);
        auto perm = Ps;
        std::reverse(perm.begin(), perm.end());
        CHECK(mixed_volume(perm) == mv);
        std::swap(perm[0], perm[1]);
        CHECK(mixed_volume(perm) == mv);
        std::vector<std::vector<IVec>> diag(d, Ps[0]);
        CHECK(mixed_volume(diag) == normalized_volume(Ps[0]));
        CHECK(mv >= 0);
    }
    CHECK(done >= 20);
}

TEST_CASE("face function rejects foreign faces") {
    Poly f = parse_poly("x1^2 + x2^3", 2);
    Poly g = parse_poly("x1^2 + x2^2", 2);
    NewtonPolyhedron G = newton_polyhedron(g);
    const FaceDesc& F = G.face_of({1, 1});
    CHECK_THROWS_AS(face_function(f, F), MathError);
}
