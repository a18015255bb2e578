#include <catch2/catch.hpp>

#include <set>

#include "agcodes/projective.hpp"

using namespace agcodes;

TEST_CASE("P^2 enumeration has q^2+q+1 distinct normalized points") {
    CHECK(enumerate_p2(*make_field(1)).size() == 7);
    CHECK(enumerate_p2(*make_field(3)).size() == 73);
    CHECK(enumerate_p2(*make_field(11)).size() == 4196353u);

    const auto& f = *make_field(3);
    const auto pts = enumerate_p2(f);
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> seen;
    for (const auto& p : pts) {
        seen.insert({p.x, p.y, p.z});
        const auto n = normalize(f, p.x, p.y, p.z);
        CHECK(n == p);  // already normalized, normalize is idempotent
    }
    CHECK(seen.size() == pts.size());

    // Any scalar multiple normalizes back into the list.
    for (std::uint32_t s = 1; s < f.q(); ++s) {
        const auto n = normalize(f, f.mul(1, s), f.mul(5, s), f.mul(3, s));
        CHECK(n == ProjPoint2{1, 5, 3});
    }
}

TEST_CASE("P^1 enumeration has q+1 points") {
    CHECK(enumerate_p1(*make_field(1)).size() == 3);
    CHECK(enumerate_p1(*make_field(2)).size() == 5);
    CHECK(enumerate_p1(*make_field(8)).size() == 257);
}

TEST_CASE("normalize scales by the first nonzero coordinate") {
    const auto& f = *make_field(4);
    const auto p = normalize(f, 0, 7, 9);
    CHECK(p.x == 0);
    CHECK(p.y == 1);
    CHECK(p.z == f.mul(9, f.inv(7)));
    CHECK(normalize(f, 11, 0, 0) == ProjPoint2{1, 0, 0});
    CHECK_THROWS_AS(normalize(f, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("chart sizes add up: q^2+q+1 = q^2 + (q+1)") {
    for (unsigned m = 1; m <= 6; ++m) {
        const auto& f = *make_field(m);
        const std::uint64_t q = f.q();
        CHECK(enumerate_p2(f).size() == q * q + enumerate_p1(f).size());
    }
}
