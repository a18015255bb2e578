#include <catch2/catch.hpp>

#include <random>

#include "agcodes/elliptic.hpp"

using namespace agcodes;

namespace {
std::uint32_t draw(std::mt19937& rng, std::uint32_t q) { return std::uint32_t(rng() % q); }
}  // namespace

TEST_CASE("y^2 + y = x^3 over GF(2) has 3 points") {
    const auto& f = *make_field(1);
    const WeierstrassCurve w{0, 0, 1, 0, 0};
    // direct oracle: enumerate the 4 affine pairs
    int affine = 0;
    for (std::uint32_t x = 0; x < 2; ++x)
        for (std::uint32_t y = 0; y < 2; ++y)
            if (f.add(f.mul(y, y), y) == f.mul(f.mul(x, x), x)) ++affine;
    CHECK(affine == 2);
    CHECK(elliptic_point_count(f, w) == 3);
}

TEST_CASE("y^2 = x^3 + x + 1 is singular in char 2") {
    for (unsigned m : {1u, 4u, 8u}) {
        const auto& f = *make_field(m);
        const WeierstrassCurve w{0, 0, 0, 1, 1};
        CHECK(!is_nonsingular(f, w));
        CHECK_THROWS_AS(elliptic_point_count(f, w), std::invalid_argument);
    }
}

TEST_CASE("discriminant agrees with brute-force smoothness") {
    std::mt19937 rng(21);
    for (unsigned m : {1u, 2u, 3u, 4u}) {
        const auto& f = *make_field(m);
        for (int i = 0; i < 200; ++i) {
            const WeierstrassCurve w{draw(rng, f.q()), draw(rng, f.q()), draw(rng, f.q()),
                                     draw(rng, f.q()), draw(rng, f.q())};
            REQUIRE(is_nonsingular(f, w) == is_nonsingular_bruteforce(f, w));
        }
    }
}

TEST_CASE("counts match a full brute-force point scan") {
    std::mt19937 rng(4);
    for (unsigned m : {2u, 3u, 4u}) {
        const auto& f = *make_field(m);
        for (int i = 0; i < 20; ++i) {
            WeierstrassCurve w{draw(rng, f.q()), draw(rng, f.q()), draw(rng, f.q()),
                               draw(rng, f.q()), draw(rng, f.q())};
            if (!is_nonsingular(f, w)) continue;
            std::uint64_t direct = 1;
            for (std::uint32_t x = 0; x < f.q(); ++x)
                for (std::uint32_t y = 0; y < f.q(); ++y) {
                    const std::uint32_t x2 = f.mul(x, x);
                    const std::uint32_t lhs =
                        f.add(f.add(f.mul(y, y), f.mul(f.mul(w.a1, x), y)), f.mul(w.a3, y));
                    const std::uint32_t rhs = f.add(f.add(f.mul(x2, x), f.mul(w.a2, x2)),
                                                    f.add(f.mul(w.a4, x), w.a6));
                    if (lhs == rhs) ++direct;
                }
            REQUIRE(elliptic_point_count(f, w) == direct);
        }
    }
}

TEST_CASE("Hasse bound holds for random valid curves, m <= 8") {
    std::mt19937 rng(1234);
    for (unsigned m = 1; m <= 8; ++m) {
        const auto& f = *make_field(m);
        int done = 0;
        while (done < 1000) {
            const WeierstrassCurve w{draw(rng, f.q()), draw(rng, f.q()), draw(rng, f.q()),
                                     draw(rng, f.q()), draw(rng, f.q())};
            if (!is_nonsingular(f, w)) continue;
            ++done;
            REQUIRE(hasse_interval_contains(f.q(), elliptic_point_count(f, w)));
        }
    }
}

TEST_CASE("any valid curve over GF(256) lands in [225, 289]") {
    std::mt19937 rng(9);
    const auto& f = *make_field(8);
    int done = 0;
    while (done < 50) {
        const WeierstrassCurve w{draw(rng, 256), draw(rng, 256), draw(rng, 256), draw(rng, 256),
                                 draw(rng, 256)};
        if (!is_nonsingular(f, w)) continue;
        ++done;
        const auto c = elliptic_point_count(f, w);
        REQUIRE(c >= 225);
        REQUIRE(c <= 289);
    }
}

TEST_CASE("no Weierstrass curve over GF(256) attains exactly 255 points") {
    const auto& f = *make_field(8);
    // Complete scan of the ordinary normal form (covers all ordinary curves
    // up to isomorphism): group orders are even, so 255 cannot appear.
    const auto ord = ordinary_family_orders(f);
    CHECK(ord.count(255) == 0);
    for (auto c : ord) REQUIRE(c % 2 == 0);
    // Supersingular normal-form slices: orders are odd but confined to
    // {225, 241, 257, 273, 289}; 255 never appears.
    const auto ss = supersingular_family_orders(f);
    CHECK(ss.count(255) == 0);
    for (auto c : ss) {
        REQUIRE(c % 2 == 1);
        REQUIRE(hasse_interval_contains(256, c));
    }
}
