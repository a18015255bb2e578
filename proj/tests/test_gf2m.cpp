#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "agcodes/gf2m.hpp"

using namespace agcodes;

namespace {

// Independent reducibility oracle: multiply out every factor pair of
// matching degrees and collect the products.
std::set<std::uint64_t> reducible_polys_of_degree(int d) {
    std::set<std::uint64_t> out;
    for (int a = 1; a <= d / 2; ++a) {
        const int b = d - a;
        for (std::uint64_t g = std::uint64_t(1) << a; g < std::uint64_t(1) << (a + 1); ++g)
            for (std::uint64_t h = std::uint64_t(1) << b; h < std::uint64_t(1) << (b + 1); ++h)
                out.insert(gf2::mul(g, h));
    }
    return out;
}

}  // namespace

TEST_CASE("reduction polynomials are the smallest irreducibles") {
    CHECK(make_field(1)->q() == 2);
    CHECK(make_field(1)->reduction_mask() == 0b10u);  // x: prime field, no reduction needed
    CHECK(make_field(2)->q() == 4);
    CHECK(make_field(2)->reduction_mask() == 0b111u);  // x^2+x+1, the only irreducible quadratic

    // m=8: cross-check against the product-set oracle.
    const auto f8 = make_field(8);
    const auto reducible = reducible_polys_of_degree(8);
    CHECK(reducible.count(f8->reduction_mask()) == 0);
    for (std::uint64_t cand = 1u << 8; cand < f8->reduction_mask(); ++cand)
        CHECK(reducible.count(cand) == 1);
}

TEST_CASE("make_field rejects out-of-range degrees") {
    CHECK_THROWS_AS(make_field(0), std::out_of_range);
    CHECK_THROWS_AS(make_field(12), std::out_of_range);
}

TEST_CASE("addition is xor with the expected identities") {
    const auto& f = *make_field(4);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
        CHECK(f.add(a, a) == 0);
        CHECK(f.add(a, 0) == a);
    }
    const auto& f4 = *make_field(2);
    CHECK(f4.add(2, 1) == 3);  // x + 1 = x+1
}

TEST_CASE("multiplication matches the schoolbook route") {
    const auto& f4 = *make_field(2);
    CHECK(f4.mul(2, 2) == 3);  // x*x = x+1 mod x^2+x+1

    for (unsigned m : {1u, 2u, 3u, 4u, 5u}) {
        const auto& f = *make_field(m);
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b)
                REQUIRE(f.mul(a, b) == f.mul_schoolbook(a, b));
    }
    std::mt19937 rng(12345);
    for (unsigned m : {8u, 11u}) {
        const auto& f = *make_field(m);
        for (int i = 0; i < 2000; ++i) {
            const std::uint32_t a = rng() % f.q(), b = rng() % f.q();
            REQUIRE(f.mul(a, b) == f.mul_schoolbook(a, b));
        }
    }
}

TEST_CASE("inverse and power laws") {
    for (unsigned m : {1u, 2u, 3u, 4u, 6u}) {
        const auto& f = *make_field(m);
        CHECK(f.inv(1) == 1);
        CHECK_THROWS_AS(f.inv(0), std::domain_error);
        for (std::uint32_t a = 1; a < f.q(); ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.pow(a, f.q() - 1) == 1);
        }
        for (std::uint32_t a = 0; a < f.q(); ++a) CHECK(f.pow(a, f.q()) == a);
    }
    CHECK(make_field(3)->elements().size() == 8);
}

TEST_CASE("field axioms hold exhaustively for m <= 4") {
    for (unsigned m = 1; m <= 4; ++m) {
        const auto& f = *make_field(m);
        const std::uint32_t q = f.q();
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
    }
}

TEST_CASE("field axioms hold on random triples for larger m") {
    std::mt19937 rng(999);
    for (unsigned m : {5u, 7u, 9u, 11u}) {
        const auto& f = *make_field(m);
        for (int i = 0; i < 500; ++i) {
            const std::uint32_t a = rng() % f.q(), b = rng() % f.q(), c = rng() % f.q();
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
}

TEST_CASE("Frobenius squaring is an additive bijection for every m") {
    for (unsigned m = 1; m <= 11; ++m) {
        const auto& f = *make_field(m);
        std::vector<bool> seen(f.q(), false);
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            const std::uint32_t s = f.mul(a, a);
            REQUIRE(!seen[s]);
            seen[s] = true;
        }
        std::mt19937 rng(m);
        for (int i = 0; i < 200; ++i) {
            const std::uint32_t a = rng() % f.q(), b = rng() % f.q();
            REQUIRE(f.mul(f.add(a, b), f.add(a, b)) == f.add(f.mul(a, a), f.mul(b, b)));
        }
    }
}

TEST_CASE("trace lands in GF(2) and is additive") {
    for (unsigned m : {2u, 3u, 8u}) {
        const auto& f = *make_field(m);
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            CHECK(f.trace(a) <= 1);
            CHECK(f.trace(f.mul(a, a)) == f.trace(a));
        }
    }
}

TEST_CASE("cross-field element operations are rejected") {
    const auto f4 = make_field(2);
    const auto f8 = make_field(3);
    FieldElement a(*f4, 2), b(*f8, 2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(FieldElement(*f4, 7), std::invalid_argument);
    CHECK((a * a.inverse()).bits == 1);
}
