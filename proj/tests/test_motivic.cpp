#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "ndeg/fan.hpp"
#include "ndeg/json_io.hpp"
#include "ndeg/motivic.hpp"
#include "ndeg/realize.hpp"
#include "ndeg/strata.hpp"

using namespace ndeg;

namespace {

// J = J~ whenever J~ is nonempty: no free coordinates anywhere.
bool no_free_coordinates(const Poly& f) {
    for (Subset J = 1; J <= full_set(f.dim); ++J) {
        Subset Jt = tilde_J(f, J);
        if (Jt && Jt != J) return false;
    }
    return true;
}

std::vector<Poly> sample_polys() {
    std::vector<Poly> out;
    for (const auto& e : corpus::inputs()) out.push_back(corpus::poly(e));
    std::mt19937 rng(51);
    for (int i = 0; i < 6; ++i) out.push_back(corpus::random_nondegenerate(rng, 2 + i % 2, 3));
    return out;
}

}  // namespace

TEST_CASE("cusp Milnor fiber") {
    Poly f = parse_poly("x1^2 + x2^3", 2);
    GClass S = milnor_fiber(f);
    GClass want;
    want.add(torus_atom({{2, 0}}, 0b01, 1), 0, 1);
    want.add(torus_atom({{0, 3}}, 0b10, 1), 0, 1);
    want.add(torus_atom({{2, 0}, {0, 3}}, 0b11, 1), 0, 1);
    want.add(torus_atom({{2, 0}, {0, 3}}, 0b11, 0), 0, -1);
    CHECK(S == want);
    CHECK(S.terms.size() == 4);
    CHECK(euler(S, f) == -1);
}

TEST_CASE("zeta coefficients equal the strata classes") {
    for (const Poly& f : sample_polys()) {
        MotSeries Z = zeta_local(f);
        auto tr = series_truncate(Z, 5);
        CHECK(tr[0].is_zero());
        for (long n = 1; n <= 5; ++n) {
            GClass sum;
            for (const auto& s : enumerate_Pn(f, n).nodes) sum += s.cls;
            CHECK_MESSAGE(tr[n] == sum.scaled(-n * f.dim), to_string(f) << " n=" << n);
        }
    }
}

TEST_CASE("limit of the zeta function is minus the Milnor fiber") {
    int used = 0;
    for (const Poly& f : sample_polys()) {
        if (!no_free_coordinates(f)) continue;
        ++used;
        CHECK(series_limit(zeta_local(f)) == milnor_fiber(f).times(-1));
    }
    CHECK(used >= 5);
}

TEST_CASE("free coordinates separate the literal formula from the limit") {
    // x1^2 in two variables: x2 is free on J = {1,2}
    Poly f = parse_poly("x1^2", 2);
    GClass atom;
    atom.add(torus_atom({{2, 0}}, 0b01, 1), 0, 1);
    CHECK(milnor_fiber(f) == atom - atom.scaled(1));
    CHECK(series_limit(zeta_local(f)) == atom.times(-1));
}

TEST_CASE("pair series against pair jet counts") {
    Budget B;
    for (const char* s : {"x1^2 + x2^3", "x1*x2", "x1^2 + x1*x2 + x2^2"}) {
        Poly f = parse_poly(s, 2);
        FpContext ctx(f, 5);
        for (int j = 0; j < 2; ++j) {
            auto tr = series_truncate(pair_zeta(f, j), 3);
            for (long n = 1; n <= 3; ++n) {
                mpq_class direct = 0;
                for (long m = 1; m <= n; ++m) {
                    mpz_class pw;
                    mpz_ui_pow_ui(pw.get_mpz_t(), 5, 2 * (n + m));
                    direct += mpq_class(pair_jet_count_fp(f, 5, n, j, m, B)) / pw;
                }
                CHECK(ctx.class_count(tr[n]) == direct);
            }
            if (no_free_coordinates(f)) CHECK(series_limit(pair_zeta(f, j)) == s_delta(f, j).times(-1));
        }
    }
}

TEST_CASE("Euler characteristic against the Milnor number") {
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b) {
            Poly f = parse_poly("x1^" + std::to_string(a) + " + x2^" + std::to_string(b), 2);
            long mu = (a - 1) * (b - 1);
            CHECK(milnor_number_oracle(f) == mu);
            CHECK(euler(milnor_fiber(f), f) == 1 - mu);
        }
    CHECK(euler(milnor_fiber(parse_poly("x1*x2", 2)), parse_poly("x1*x2", 2)) == 0);
    Poly s = parse_poly("x1^2 + x2^2 + x3^2", 3);
    CHECK(milnor_number_oracle(s) == 1);
    CHECK(euler(milnor_fiber(s), s) == 2);
    Poly t = parse_poly("x1^3 + x2^4 + x3^2", 3);
    CHECK(euler(milnor_fiber(t), t) == 1 + milnor_number_oracle(t));
    CHECK(milnor_number_oracle(t) == 6);
}

TEST_CASE("restriction identity") {
    std::mt19937 rng(52);
    std::vector<Poly> polys = sample_polys();
    for (int i = 0; i < 5; ++i) polys.push_back(corpus::random_nondegenerate(rng, 2 + i % 2));
    polys.push_back(parse_poly("x1^2", 2));
    for (const Poly& f : polys)
        for (int j = 0; j < f.dim; ++j) {
            Report R = check_restriction(f, j);
            CHECK_MESSAGE(R.status() == Status::Verified, to_string(f) << " j=" << j);
        }
}

TEST_CASE("integral identity checks") {
    CHECK(check_integral_identity(parse_poly("x1*x2", 2), 1, 1, 0).status() == Status::Verified);
    CHECK(check_integral_identity(parse_poly("x1*x2 + x3^2", 3), 1, 1, 1).status() == Status::Verified);
    CHECK(check_integral_identity(parse_poly("x1^2 + x2^3", 2), 1, 1, 0).status() == Status::Failed);
    CHECK(check_integral_identity(parse_poly("x1^2 + x2^3", 2), 0, 0, 2).status() == Status::Verified);
    CHECK_THROWS_AS(check_integral_identity(parse_poly("x1*x2", 2), 1, 0, 0), MathError);
}

TEST_CASE("face-form Milnor fiber differs on the cusp") {
    FaceformResult R = milnor_fiber_faceform(parse_poly("x1^2 + x2^3", 2));
    CHECK(R.euler_faceform == -6);
    CHECK(R.euler_normative == -1);
    CHECK(R.mismatch());
}

TEST_CASE("spectrum of x^N") {
    for (int N = 2; N <= 8; ++N) {
        SpectrumResult S = spectrum(parse_poly("x1^" + std::to_string(N), 1));
        FracPoly want;
        for (int k = 1; k < N; ++k) fp_add(want, mpq_class(k, N) + 0, 1);
        for (auto& [e, c] : want) const_cast<mpq_class&>(e).canonicalize();
        CHECK(S.complete());
        CHECK(S.resolved == want);
    }
}

TEST_CASE("spectrum of x^N is symmetric about 1/2") {
    for (int N = 2; N <= 12; ++N) {
        FracPoly S = spectrum(parse_poly("x1^" + std::to_string(N), 1)).resolved;
        FracPoly mirrored;
        for (const auto& [e, c] : S) fp_add(mirrored, 1 - e, c);
        CHECK(mirrored == S);
        long long total = 0;
        for (const auto& [e, c] : S) total += c;
        CHECK(total == N - 1);  // Milnor number
    }
}

TEST_CASE("spectrum shifts by t^k under L^k") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> N(2, 6), e(-2, 3), c(-3, 3), k(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        GClass g;
        for (int t = 0; t < 3; ++t) g.add(torus_atom({{N(rng)}}, 0b1, 1), e(rng), c(rng));
        g.add(unit_atom(), e(rng), c(rng));
        int s = k(rng);
        SpectrumResult a = spectrum_of_class(g, {}), b = spectrum_of_class(g.scaled(s), {});
        REQUIRE(a.complete());
        FracPoly shifted;
        for (const auto& [x, m] : a.resolved) fp_add(shifted, x + s, m);
        CHECK(b.resolved == shifted);
    }
}

TEST_CASE("spectrum keeps unknown atoms symbolic") {
    Poly f = parse_poly("x1^2 + x2^3", 2);
    SpectrumResult S = spectrum(f);
    CHECK_FALSE(S.complete());
    CHECK(S.symbolic.size() == 2);
    std::map<Atom, FracPoly> table;
    for (const auto& [a, p] : S.symbolic) table[a] = {};
    CHECK(spectrum(f, table).complete());
}

TEST_CASE("relative nearby cycles") {
    Poly f = parse_poly("x1*x2", 2);
    GClass R = nearby_cycles_relative(f);
    bool tagged = false;
    for (const auto& [a, p] : R.terms)
        if (a.has_rel) tagged = true;
    CHECK(tagged);
    NewtonPolyhedron G = newton_polyhedron(f);
    for (const auto& [a, p] : R.terms) {
        if (!a.has_rel) continue;
        auto fam = p_family(G, *G.find(a.face, 0));
        CHECK(std::find(fam.P.begin(), fam.P.end(), a.rel) != fam.P.end());
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(milnor_fiber(parse_poly("1 + x1", 1)), MathError);
    Poly zero;
    zero.dim = 2;
    CHECK_THROWS_AS(milnor_fiber(zero), MathError);
    CHECK_THROWS_AS(pair_zeta(parse_poly("x1^2", 1), 3), MathError);
}

TEST_CASE("classes survive a JSON round trip") {
    for (const Poly& f : sample_polys()) {
        GClass S = milnor_fiber(f);
        CHECK(gclass_from_json(nlohmann::json::parse(to_json(S).dump())) == S);
        GClass R = nearby_cycles_relative(f);
        CHECK(gclass_from_json(to_json(R)) == R);
    }
}
