#include <catch2/catch.hpp>

#include "agcodes/constructions.hpp"

using namespace agcodes;

TEST_CASE("lomont1 generator: explicit small codes") {
    // q=2, a=b=1: the [9,4,4] code, also the square of the extended RS [3,2,2]
    const auto g = lomont1_generator(make_field(1), 1, 1);
    CHECK(g.n == 9);
    CHECK(g.k == 4);
    CHECK(min_distance_exhaustive(g) == 4);

    // a=b=0 is the length-(q+1)^2 repetition code
    const auto r = lomont1_generator(make_field(1), 0, 0);
    CHECK(r.k == 1);
    CHECK(min_distance_exhaustive(r) == 9);

    // q=4, a=2, b=1: n=25, k=6, exhaustive distance (5-2)(5-1)=12
    const auto h = lomont1_generator(make_field(2), 2, 1);
    CHECK(h.n == 25);
    CHECK(h.k == 6);
    CHECK(min_distance_exhaustive(h) == 12);
}

TEST_CASE("lomont1 parameter formula") {
    // paper table rows at q=256, e=0
    const auto p1 = lomont1_params(256, 80, 81, 0);
    CHECK(p1.n == 66049);
    CHECK(p1.k == 6642);
    CHECK(to_decimal(p1.rate, 6) == "0.100562");
    CHECK(p1.d == 177 * 176);

    const auto p8 = lomont1_params(256, 229, 229, 0);
    CHECK(to_decimal(p8.rate, 6) == "0.800921");
    CHECK(to_decimal(p8.delta, 4) == "0.01187");

    // twisted case e=2: only j=0,1 contribute
    const auto t = lomont1_params(4, 2, 3, 2);
    CHECK(t.k == 6);

    CHECK_THROWS_AS(lomont1_params(4, 5, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(lomont1_params(4, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("lomont1 Singleton inequality 2ab - q(a+b) <= 1 holds exhaustively") {
    for (long long q : {2, 4, 8, 16, 32, 64})
        for (long long a = 0; a <= q; ++a)
            for (long long b = 0; b <= q; ++b) REQUIRE(2 * a * b - q * (a + b) <= 1);
}

TEST_CASE("ruled parameters: kappa, l, and the distance bound") {
    // g=0, e=0 specializes to the lomont1 bound
    for (long long q : {4, 16})
        for (long long a = 0; a < q + 1; ++a)
            for (long long b = 0; b < q + 1; ++b) {
                RuledInputs in{q, 0, q + 1, 0, a, b, 2, false};
                if ((q + 1 - a) * (q + 1 - b) <= 0) continue;
                const auto rp = ruled_params(in);
                const auto lp = lomont1_params(q, a, b, 0);
                REQUIRE(rp.n == lp.n);
                REQUIRE(rp.d_bound == lp.d);
                REQUIRE(rp.l == b);
            }

    // table t:code2 row 0.8 geometry: g=1, e=0, aleph=255
    const auto rp = ruled_params({256, 1, 255, 0, 229, 228, 2, false});
    CHECK(rp.n == 65535);
    CHECK(rp.d_bound == 756);
    CHECK(!rp.k.has_value());

    // counterexample input: e < -g is rejected
    CHECK_THROWS_WITH(ruled_params({4, 0, 5, -2, 1, 1, 2, false}),
                      Catch::Contains("violates e >= -g"));
}

TEST_CASE("kappa cases") {
    CHECK(ruled_kappa(3, 5, 2) == Rat(3));
    CHECK(ruled_kappa(-1, 1, 2) == Rat(-1, 2));
    CHECK(ruled_kappa(-2, 3, 2) == Rat(-2, 2) + Rat(2, 2));
    CHECK(ruled_kappa(-1, 4, 2).ceil_ll() == 1);  // -1/2 + 3/2 = 1
}

TEST_CASE("decomposable parameters and the zeta bookkeeping") {
    // g=1, e=0: every term has deg b > 0 = 2g-2, so k = (a+1) b exactly
    const auto d1 = decomposable_params(16, 1, 0, 25, 3, 7);
    CHECK(d1.k == 4 * 7);
    CHECK(!d1.k_is_lower_bound);

    // g=0, e=0: k = (a+1)(b+1), matching lomont1
    const auto d0 = decomposable_params(16, 0, 0, 17, 3, 7);
    CHECK(d0.k == 4 * 8);
    CHECK(!d0.k_is_lower_bound);

    // g=2, e=1, a=2, b=3: degrees 3,2,1; only deg 3 > 2g-2 = 2 certified
    const auto d2 = decomposable_params(16, 2, 1, 17, 2, 3);
    CHECK(d2.k == 2 + 1 + 0);
    CHECK(d2.k_is_lower_bound);
    CHECK(d2.uncertified_terms == 2);

    CHECK_THROWS_AS(decomposable_params(16, 1, -1, 25, 1, 1), std::invalid_argument);
}

TEST_CASE("lomont2 parameters") {
    const auto p1 = lomont2_params(256, 255, 81, 80);
    CHECK(p1.n == 65535);
    CHECK(p1.k == 6560);
    CHECK(to_decimal(p1.rate, 6) == "0.100099");
    CHECK(to_decimal(p1.delta, 6) == "0.469978");

    const auto p6 = lomont2_params(256, 255, 199, 197);
    CHECK(to_decimal(p6.rate, 6) == "0.601205");
    CHECK(to_decimal(p6.delta, 5) == "0.051331");

    const auto p0 = lomont2_params(16, 25, 0, 7);
    CHECK(p0.k == 7);
    CHECK(p0.d == 17 * 18);

    CHECK_THROWS_AS(lomont2_params(256, 255, 81, 0), std::invalid_argument);
    CHECK_THROWS_AS(lomont2_params(256, 255, 257, 80), std::invalid_argument);

    // cross-module: the dimension is the Atiyah rank sum (a+1) times b
    for (long long a : {0, 1, 5, 81})
        CHECK(lomont2_params(256, 255, a, 10).k == symm_rank(a, 2) * 10);
}

TEST_CASE("goppa parameter triples") {
    const auto g = goppa_params(255, 80);
    CHECK(g.n == 254);
    CHECK(g.k == 80);
    CHECK(g.d == 174);
    CHECK(goppa_params(255, 1).d == 253);
    // Singleton slack is exactly 1 at genus 1
    for (long long k2 : {1, 40, 200, 253})
        CHECK(goppa_params(255, k2).n + 1 - goppa_params(255, k2).k - goppa_params(255, k2).d == 1);
    CHECK_THROWS_AS(goppa_params(255, 0), std::invalid_argument);
    CHECK_THROWS_AS(goppa_params(255, 254), std::invalid_argument);
}

TEST_CASE("counterexample guard") {
    // normalized input accepted
    CHECK(counterexample_guard(4, 0, 0).accepted);
    CHECK(counterexample_guard(4, 0, -3).accepted);

    // t=1, u=-1: e=0 but unnormalized; flagged as unbounded-k inconsistency
    const auto r = counterexample_guard(4, 1, -1);
    CHECK(!r.accepted);
    CHECK(r.unbounded_k);
    CHECK(r.raw_e == 0);

    // t=u=1: raw det degree 2, raw e=-2 < -g=0
    const auto s = counterexample_guard(4, 1, 1);
    CHECK(!s.accepted);
    CHECK(s.raw_det_degree == 2);
    CHECK(s.reason.find("violates e >= -g") != std::string::npos);

    // the naive dimension eventually contradicts Singleton: t >= 5 at q=4
    for (long long t = 5; t <= 12; ++t) {
        const auto g = counterexample_guard(4, t, -t);
        CHECK(g.singleton_violation);
        CHECK(g.unbounded_k);
    }

    CHECK_THROWS_AS(counterexample_guard(4, 0, 1), std::invalid_argument);
}
