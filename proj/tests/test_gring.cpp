#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ndeg/gring.hpp"
#include "oracles.hpp"

using namespace ndeg;

namespace {

GClass random_class(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 2), e(-3, 3), c(-3, 3), v(1, 4);
    GClass g;
    for (int t = 0; t < 4; ++t) {
        Atom a;
        switch (kind(rng)) {
            case 0:
                a = unit_atom();
                break;
            case 1:
                a = torus_atom({{v(rng), 0}, {0, v(rng)}}, 0b11, t % 2);
                break;
            default:
                a = torus_atom({{v(rng) + 1}}, 0b1, 1);
        }
        g.add(a, e(rng), c(rng));
    }
    return g;
}

GClass unit_class() {
    GClass g;
    g.add(unit_atom(), 0, 1);
    return g;
}

}  // namespace

TEST_CASE("class arithmetic") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        GClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a.scaled(2).scaled(-2) == a);
        CHECK((a + b).scaled(1) == a.scaled(1) + b.scaled(1));
        CHECK(a.times(3) == a + a + a);
        CHECK((a - a).is_zero());
        CHECK(a.times(LPoly{{1, 1}, {0, -1}}) == a.scaled(1) - a);
    }
}

TEST_CASE("atoms and labels") {
    CHECK(atom_is_empty(torus_atom({{2, 0}}, 0b01, 0)));
    CHECK_FALSE(atom_is_empty(torus_atom({{2, 0}}, 0b01, 1)));
    GClass g;
    g.add(torus_atom({{2, 0}}, 0b01, 0), 0, 5);
    CHECK(g.is_zero());
    CHECK(atom_label(torus_atom({{2, 0}}, 0b01, 1)) == "[X((2,0)),{1},1]");
    Atom a = torus_atom({{2, 0}}, 0b01, 1), b = a;
    b.weights = {1, 0};
    b.weight_mod = 2;
    CHECK(a == b);
    CHECK(to_string(GClass{}) == "0");
}

TEST_CASE("unimodular open cones: truncation and limit") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> pos(1, 3), sf(-2, 2);
    int tested = 0;
    for (int trial = 0; trial < 100; ++trial) {
        IMat U = oracles::random_unimodular(rng);
        IMat W = oracles::dual_rows(U);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) REQUIRE(dot(W[i], U[j]) == (i == j ? 1 : 0));
        int k = 1 + trial % 3;
        ConeTerm T;
        T.cone.m = 3;
        for (int i = 0; i < k; ++i) T.cone.strict.push_back(W[i]);
        for (int i = k; i < 3; ++i) T.cone.eq.push_back(W[i]);
        T.lform = IVec(3, 0);
        for (int i = 0; i < 3; ++i) T.lform = vadd(T.lform, [&] {
            IVec w = W[i];
            long c = pos(rng);
            for (auto& x : w) x *= c;
            return w;
        }());
        T.sform = {sf(rng), sf(rng), sf(rng)};
        T.coeff = unit_class();
        REQUIRE(positivity_check(T));
        CHECK(T.cone.dim() == k);
        // same series as a product of k geometric factors
        ConeTerm P;
        P.cone.m = 1;
        P.cone.eq.push_back({1});
        P.lform = {1};
        P.sform = {0};
        P.coeff = unit_class();
        for (int i = 0; i < k; ++i) P.geom.push_back({-dot(T.sform, U[i]), dot(T.lform, U[i])});
        MotSeries A, B;
        A.terms.push_back(T);
        B.terms.push_back(P);
        auto ta = series_truncate(A, 12), tb = series_truncate(B, 12);
        for (int n = 0; n <= 12; ++n) CHECK(ta[n] == tb[n]);
        CHECK(term_limit(T) == unit_class().times(k % 2 ? -1 : 1));
        CHECK(term_limit(P) == term_limit(T));
        ++tested;
    }
    CHECK(tested == 100);
}

TEST_CASE("closed cones decompose into open faces with total limit zero") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        IMat U = oracles::random_unimodular(rng);
        IMat W = oracles::dual_rows(U);
        int k = 1 + trial % 3;
        ConeTerm T;
        T.cone.m = 3;
        for (int i = 0; i < k; ++i) T.cone.weak.push_back(W[i]);
        for (int i = k; i < 3; ++i) T.cone.eq.push_back(W[i]);
        T.lform = vadd(vadd(W[0], W[1]), W[2]);
        T.sform = {1, 0, -1};
        T.coeff = unit_class();
        auto pieces = T.cone.open_pieces();
        CHECK(pieces.size() == (1u << k));
        GClass sum;
        MotSeries whole, parts;
        whole.terms.push_back(T);
        for (const auto& piece : pieces) {
            ConeTerm Q = T;
            Q.cone = piece;
            sum += term_limit(Q);
            parts.terms.push_back(Q);
        }
        CHECK(sum.is_zero());
        CHECK(term_limit(T).is_zero());
        auto a = series_truncate(whole, 8), b = series_truncate(parts, 8);
        for (int n = 0; n <= 8; ++n) CHECK(a[n] == b[n]);
    }
}

TEST_CASE("a single geometric factor has limit -1") {
    for (long a = -3; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            ConeTerm P;
            P.cone.m = 1;
            P.cone.eq.push_back({1});
            P.lform = {1};
            P.sform = {0};
            P.coeff = unit_class();
            P.geom.push_back({a, b});
            CHECK(term_limit(P) == unit_class().times(-1));
        }
}

TEST_CASE("positivity failures are rejected") {
    ConeTerm T;
    T.cone.m = 1;
    T.cone.weak.push_back({1});
    T.lform = {0};
    T.sform = {0};
    T.coeff = unit_class();
    CHECK_FALSE(positivity_check(T));
    MotSeries Z;
    Z.terms.push_back(T);
    CHECK_THROWS(series_truncate(Z, 3));
    CHECK_THROWS(series_limit(Z));
}
