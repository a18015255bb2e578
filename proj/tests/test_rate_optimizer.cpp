#include <catch2/catch.hpp>

#include "agcodes/rate_optimizer.hpp"

using namespace agcodes;

TEST_CASE("err(256, .) has the published constant and coefficient") {
    // constant term -2/65535
    CHECK(err_gap(256, 0) == Approx(-2.0 / 65535).epsilon(1e-12));
    // sqrt(delta) coefficient ~ 0.0000304586 (printed value, 3 significant figures)
    const double coeff = err_gap(256, 1) - err_gap(256, 0);
    CHECK(coeff == Approx(0.0000304586).epsilon(5e-3));
    CHECK(err_gap(256, 0) < 0);
}

TEST_CASE("err(q, delta) < 0 certified on the acceptance grid") {
    for (long long q = 4; q <= 2048; q *= 2)
        for (int i = 0; i <= 100; ++i) REQUIRE(certify_err_negative(q, i / 100.0));
    // and pointwise for every integer q in 2..2048 (double evaluation)
    for (long long q = 2; q <= 2048; ++q)
        for (int i = 0; i <= 100; ++i) REQUIRE(err_gap(double(q), i / 100.0) < 0);
}

TEST_CASE("interval sqrt brackets the true value") {
    const auto iv = interval_sqrt(Interval::of_ratio(2, 1));
    CHECK(iv.lo <= std::sqrt(2.0));
    CHECK(std::sqrt(2.0) <= iv.hi);
    CHECK(iv.hi - iv.lo < 1e-14);
}

TEST_CASE("family rate/delta formulas at known table rows") {
    // RS product row 0.1: (81,81) rate 0.1009 delta 0.470973
    const auto rs = family_point(Family::rs_product, 256, 255, 81, 81);
    REQUIRE(rs.has_value());
    CHECK(to_decimal(rs->rate, 4) == "0.1009");
    CHECK(to_decimal(rs->delta, 6) == "0.470973");

    // goppa-product row 0.9: (242,241) rate 0.900448 delta 0.002810
    const auto gp = family_point(Family::goppa_product, 256, 255, 242, 241);
    REQUIRE(gp.has_value());
    CHECK(to_decimal(gp->rate, 6) == "0.900448");
    CHECK(to_decimal(gp->delta, 3) == "0.00281");
}

TEST_CASE("best_pair_table reproduces sample rows of both tables") {
    // lomont1, target 0.8 -> (229,229); rs-product target 0.1 -> (81,81)
    const auto l1 = best_pair_table(256, 255, Family::lomont1, {Rat(8, 10)});
    REQUIRE(l1.size() == 1);
    CHECK(l1[0].p1 == 229);
    CHECK(l1[0].p2 == 229);
    CHECK(to_decimal(l1[0].rate, 6) == "0.800921");

    const auto rs = best_pair_table(256, 255, Family::rs_product, {Rat(1, 10)});
    CHECK(rs[0].p1 == 81);
    CHECK(rs[0].p2 == 81);

    // lomont2 target 0.5 -> (182,180) rate 0.502632 delta 0.085832
    const auto l2 = best_pair_table(256, 255, Family::lomont2, {Rat(5, 10)});
    CHECK(l2[0].p1 == 182);
    CHECK(l2[0].p2 == 180);
    CHECK(to_decimal(l2[0].rate, 6) == "0.502632");
    CHECK(to_decimal(l2[0].delta, 5) == "0.085832");
}

TEST_CASE("lomont2 continuous optimum and integer neighborhood") {
    // limit structure: delta -> 1 forces b0 -> aleph (1 - sqrt((q+1)/(q+2)))
    const long long q = 256, aleph = 255;
    const auto near1 = lomont2_optimum(q, aleph, 0.999999);
    CHECK(near1.b0 == Approx(aleph * (1 - std::sqrt((q + 1.0) / (q + 2.0)))).epsilon(1e-3));

    // at delta=0.05 the floor/ceil candidate box yields (199,198); the
    // exhaustive neighborhood scan shows the rounding heuristic is not
    // exactly optimal: the off-box lattice point (198,199) is feasible and
    // beats it by one dimension unit. Both facts are pinned here.
    const auto opt = lomont2_optimum(q, aleph, 0.05);
    REQUIRE(!opt.candidates.empty());
    RatePoint best = opt.candidates[0];
    for (const auto& c : opt.candidates)
        if (c.rate > best.rate) best = c;
    CHECK(best.p1 == 199);
    CHECK(best.p2 == 198);
    const Rat want(5, 100);
    const auto beat = family_point(Family::lomont2, q, aleph, 198, 199);
    REQUIRE(beat.has_value());
    CHECK(beat->delta >= want);
    CHECK(beat->rate == best.rate + Rat(1, (q + 1) * aleph));

    // the guarantee that does hold: feeding each table winner's
    // own delta back into the optimum keeps the winner among the candidates
    std::vector<Rat> targets;
    for (int i = 1; i <= 9; ++i) targets.push_back(Rat(i, 10));
    for (const auto& w : best_pair_table(q, aleph, Family::lomont2, targets)) {
        const auto o = lomont2_optimum(q, aleph, w.delta.to_double());
        bool contained = false;
        for (const auto& c : o.candidates) contained = contained || (c.p1 == w.p1 && c.p2 == w.p2);
        REQUIRE(contained);
    }

    // concavity of R(b) along the analytic curve (sampled)
    auto rate_at = [&](double b, double delta) {
        const double a = (q + 1) * (aleph * delta - aleph + b) / (b - aleph);
        return (a + 1) * b / double((q + 1) * aleph);
    };
    const double delta = 0.1;
    for (double b = 20; b < 230; b += 10) {
        const double second = rate_at(b + 1, delta) - 2 * rate_at(b, delta) + rate_at(b - 1, delta);
        REQUIRE(second < 0);
    }
    CHECK_THROWS_AS(lomont2_optimum(q, aleph, 1.5), std::domain_error);
}

TEST_CASE("product optimum: domain boundary and monotonicity") {
    const long long q = 256, aleph = 255;
    // radicand zero at delta = 1/(q-1): k2 = aleph-1
    const auto edge = product_optimum(q, aleph, 1.0 / (q - 1));
    CHECK(edge.k2 == Approx(double(aleph - 1)));
    // negative radicand is a domain error
    CHECK_THROWS_AS(product_optimum(q, aleph, 0.5 / (q - 1)), std::domain_error);
    // larger delta gives smaller k2
    double prev = 1e18;
    for (double d = 0.01; d <= 0.5; d += 0.01) {
        const auto o = product_optimum(q, aleph, d);
        REQUIRE(o.k2 < prev);
        prev = o.k2;
    }
    // neighborhood optimality at delta = 0.1
    const auto opt = product_optimum(q, aleph, 0.1);
    REQUIRE(!opt.candidates.empty());
    RatePoint best = opt.candidates[0];
    for (const auto& c : opt.candidates)
        if (c.rate > best.rate) best = c;
    const Rat want(1, 10);
    for (long long d1 = -1; d1 <= 1; ++d1)
        for (long long d2 = -1; d2 <= 1; ++d2) {
            const auto n = family_point(Family::goppa_product, q, aleph, best.p1 + d1, best.p2 + d2);
            if (!n || n->delta < want) continue;
            REQUIRE(n->rate <= best.rate);
        }
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal(Rat(6642, 66049), 6) == "0.100562");
    CHECK(to_decimal(Rat(196, 66049), 6) == "0.00296749");
    CHECK(to_decimal(Rat(1, 3), 3) == "0.333");
    CHECK(to_decimal(Rat(2, 3), 3) == "0.667");
    CHECK(to_decimal(Rat(999999, 1000000), 3) == "1");
    CHECK(to_decimal(Rat(0, 5), 6) == "0");
    CHECK(to_decimal(Rat(-1, 8), 3) == "-0.125");
    CHECK(to_decimal(Rat(12345, 1), 4) == "12350");
}

TEST_CASE("asymptotic bound utilities") {
    CHECK(tvz_bound(121, 0.3) == Approx(1 - 0.1 - 0.3));
    CHECK(gv_bound(2, 0) == Approx(1.0));
    CHECK(gv_bound(256, 0.5) > 0);
    CHECK_THROWS_AS(gv_bound(2, 0.9), std::domain_error);
}
