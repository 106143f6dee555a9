#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>

#include "corpus.hpp"
#include "ndeg/motivic.hpp"
#include "ndeg/realize.hpp"

using namespace ndeg;

namespace {

PolyFp random_fp(std::mt19937& rng, int d, long p) {
    std::uniform_int_distribution<int> ex(0, 3), co(1, static_cast<int>(p - 1)), nt(1, 4);
    PolyFp g;
    g.dim = d;
    g.p = p;
    int t = nt(rng);
    for (int i = 0; i < t; ++i) {
        IVec e(d);
        for (auto& x : e) x = ex(rng);
        g.terms[e] = co(rng);
    }
    return g;
}

}  // namespace

TEST_CASE("parallel jet kernel agrees with the odometer") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 80; ++trial) {
        long p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 5);
        int d = 1 + trial % 3;
        long n = 1 + trial % 2;
        if (p == 5 && d * n > 4) n = 1;
        PolyFp g = random_fp(rng, d, p);
        JetQuery q;
        q.n = n;
        q.local = trial % 4 != 3;
        if (trial % 5 == 0 && q.local) {
            q.pair_var = 0;
            q.pair_order = 1;
        }
        CHECK(jet_count_kernel(g, q) == jet_count_reference(g, q));
    }
}

TEST_CASE("torus kernel agrees with the reference") {
    std::mt19937 rng(62);
    for (int trial = 0; trial < 80; ++trial) {
        long p = trial % 2 ? 5 : 7;
        int d = 1 + trial % 3;
        PolyFp g = random_fp(rng, d, p);
        Subset vars = full_set(d);
        for (long target = 0; target < 3; ++target)
            CHECK(torus_count_kernel(g, vars, target) == torus_count_reference(g, vars, target));
    }
}

TEST_CASE("small exact counts") {
    Budget B;
    Poly c = parse_poly("x1^2 + x2^3", 2);
    CHECK(jet_count_fp(c, 7, 2, true, B) == 686);
    CHECK(jet_count_fp(c, 7, 2, true, B, true) == 686);
    // x1 = t exactly: one jet mod t^2 per unit
    CHECK(jet_count_fp(parse_poly("x1", 1), 5, 1, true, B) == 1);
    CHECK(jet_count_fp(parse_poly("x1", 1), 5, 1, false, B) == 1);
    CHECK(jet_count_fp(parse_poly("x1^2", 1), 5, 2, false, B) == 10);
    PolyFp g = reduce_mod_p(parse_poly("x1*x2", 2), 5);
    CHECK(torus_count_kernel(g, 0b11, 1) == 4);
    CHECK(torus_count_kernel(g, 0b11, 0) == 0);
}

TEST_CASE("budget") {
    Budget B;
    B.limit = 1000;
    CHECK_THROWS_AS(jet_count_fp(parse_poly("x1^2 + x2^3", 2), 7, 3, true, B), BudgetExceeded);
    setenv("NDEG_BUDGET", "12345", 1);
    CHECK(Budget::from_env().limit == 12345);
    setenv("NDEG_BUDGET", "junk", 1);
    CHECK(Budget::from_env().limit == 1e8);
    unsetenv("NDEG_BUDGET");
}

TEST_CASE("good reduction") {
    Poly q = parse_poly("x1^2 + x1*x2 + x2^2", 2);
    CHECK_FALSE(good_reduction(q, 3));  // (x1 - x2)^2 mod 3
    CHECK(good_reduction(q, 5));
    CHECK_FALSE(good_reduction(parse_poly("x1^2 + 5*x2^3", 2), 5));
    CHECK_FALSE(good_reduction(parse_poly("x1^2 + x2^3", 2), 4));
    CHECK(good_reduction(parse_poly("x1^2 + x2^3", 2), 3));
}

TEST_CASE("Kouchnirenko numbers") {
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b)
            CHECK(milnor_number_oracle(parse_poly("x1^" + std::to_string(a) + " + x2^" + std::to_string(b), 2)) ==
                  (a - 1) * (b - 1));
    CHECK(milnor_number_oracle(parse_poly("x1^2 + x2^3 + x3^5", 3)) == 8);
    CHECK(milnor_number_oracle(parse_poly("x1^4 + x1*x2 + x2^4", 2)) == 1);
    CHECK(milnor_number_oracle(parse_poly("x1^3 + x1*x2^2 + x2^5", 2)) == 4);  // D4 plus a higher term
    CHECK_THROWS_AS(milnor_number_oracle(parse_poly("x1*x2", 2)), MathError);
    CHECK(is_convenient(parse_poly("x1^2 + x2^3", 2)));
    CHECK_FALSE(is_convenient(parse_poly("x1^2 + x1*x2", 2)));
}

TEST_CASE("atom Euler characteristics") {
    Poly f = parse_poly("x1^2 + x2^3", 2);
    CHECK(atom_euler(unit_atom(), f) == 1);
    CHECK(atom_euler(torus_atom({{2, 0}}, 0b01, 1), f) == 2);  // x^2 = 1
    CHECK(atom_euler(torus_atom({{2, 0}, {0, 3}}, 0b11, 1), f) == -6);
    CHECK(atom_euler(torus_atom({{2, 0}, {0, 3}}, 0b11, 0), f) == 0);
    CHECK(atom_euler(torus_atom({{2, 0}}, 0b11, 1), f) == 0);
}

TEST_CASE("class counts use rational powers of p") {
    Poly f = parse_poly("x1^2 + x2^3", 2);
    FpContext ctx(f, 7);
    GClass g;
    g.add(torus_atom({{2, 0}}, 0b01, 1), -2, 3);
    g.add(unit_atom(), 1, -1);
    CHECK(ctx.class_count(g) == mpq_class(6, 49) - 7);
    // the atom count {x^2 + y^3 = 1} on the torus over F_7, by hand
    long cnt = 0;
    for (long x = 1; x < 7; ++x)
        for (long y = 1; y < 7; ++y)
            if ((x * x + y * y * y) % 7 == 1) ++cnt;
    CHECK(ctx.atom_count(torus_atom({{2, 0}, {0, 3}}, 0b11, 1)) == cnt);
    CHECK_THROWS_AS(FpContext(parse_poly("x1^2 + 7*x2^3", 2), 7), MathError);
}

TEST_CASE("strata sums match jet counts on the corpus") {
    Budget B;
    for (const auto& e : corpus::inputs()) {
        Poly f = corpus::poly(e);
        for (long p : {3l, 5l})
            for (long n = 1; n <= 3; ++n) {
                if (std::pow(double(p), f.dim * n) > 2e5 || !good_reduction(f, p)) continue;
                CHECK(strata_sum_fp(f, p, n, B) == mpq_class(static_cast<unsigned long>(jet_count_fp(f, p, n, true, B))));
            }
    }
}

TEST_CASE("crosscheck report") {
    Budget B;
    Report R = crosscheck(parse_poly("x1^2 + x2^3", 2), {5, 7}, 2, B);
    CHECK(R.status() == Status::Verified);
    Report Q = crosscheck(parse_poly("x1^2 + x1*x2 + x2^2", 2), {3, 5}, 2, B);
    CHECK(Q.status() == Status::Inconclusive);
    Report X = crosscheck(parse_poly("x1*x2", 2), {5}, 2, B);
    CHECK(X.status() == Status::Inconclusive);  // not convenient
}
