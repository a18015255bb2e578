#include <catch2/catch.hpp>

#include <random>

#include "agcodes/constructions.hpp"
#include "agcodes/linear_code.hpp"

using namespace agcodes;

namespace {

// Reference distance: encode every nonzero message from scratch.
long long min_distance_reference(const GeneratorMatrix& g) {
    const std::uint32_t q = g.field->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.k; ++i) total *= q;
    long long best = g.n + 1;
    std::vector<std::uint32_t> msg(g.k);
    for (std::uint64_t v = 1; v < total; ++v) {
        std::uint64_t x = v;
        for (std::size_t i = 0; i < g.k; ++i) { msg[i] = x % q; x /= q; }
        const auto cw = encode(g, msg);
        long long w = 0;
        for (auto c : cw) w += (c != 0);
        best = std::min(best, w);
    }
    return best;
}

}  // namespace

TEST_CASE("generator matrices validate rank at construction") {
    auto f = make_field(2);
    CHECK_THROWS_AS(make_generator_matrix(f, 2, 3, {1, 2, 3, 1, 2, 3}), std::invalid_argument);
    const auto g = make_generator_matrix(f, 2, 3, {1, 0, 1, 0, 1, 2});
    CHECK(g.k == 2);
    CHECK(matrix_rank(*f, 2, 3, g.e) == 2);
}

TEST_CASE("encode is linear with the expected special cases") {
    auto f = make_field(2);
    const auto g = make_generator_matrix(f, 2, 3, {1, 0, 1, 0, 1, 2});
    CHECK(encode(g, {0, 0}) == std::vector<std::uint32_t>{0, 0, 0});
    CHECK(encode(g, {1, 0}) == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(encode(g, {0, 1}) == std::vector<std::uint32_t>{0, 1, 2});
    CHECK_THROWS_AS(encode(g, {1}), std::invalid_argument);

    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::uint32_t> a{std::uint32_t(rng() % 4), std::uint32_t(rng() % 4)};
        std::vector<std::uint32_t> b{std::uint32_t(rng() % 4), std::uint32_t(rng() % 4)};
        std::vector<std::uint32_t> sum{a[0] ^ b[0], a[1] ^ b[1]};
        const auto ca = encode(g, a), cb = encode(g, b), cs = encode(g, sum);
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(cs[j] == (ca[j] ^ cb[j]));
    }
}

TEST_CASE("repetition code distance") {
    auto f = make_field(3);
    const auto g = make_generator_matrix(f, 1, 7, std::vector<std::uint32_t>(7, 1));
    CHECK(min_distance_exhaustive(g) == 7);
}

TEST_CASE("extended RS codes are MDS") {
    // [3,2,2] over GF(2)
    CHECK(min_distance_exhaustive(extended_rs(make_field(1), 2)) == 2);
    // [5,3,3] over GF(4)
    CHECK(min_distance_exhaustive(extended_rs(make_field(2), 3)) == 3);
    // k = q+1 gives the full space, d = 1
    CHECK(min_distance_exhaustive(extended_rs(make_field(1), 3)) == 1);
    for (unsigned m : {1u, 2u}) {
        auto f = make_field(m);
        for (std::size_t k = 1; k <= f->q() + 1; ++k) {
            const auto g = extended_rs(f, k);
            REQUIRE(min_distance_exhaustive(g) == static_cast<long long>(g.n - k + 1));
        }
    }
}

TEST_CASE("incremental enumeration matches the reference encoder") {
    std::mt19937 rng(8);
    auto f = make_field(2);
    for (int t = 0; t < 10; ++t) {
        const std::size_t k = 1 + rng() % 3, n = k + rng() % 4;
        std::vector<std::uint32_t> e(k * n);
        GeneratorMatrix g;
        for (;;) {
            for (auto& x : e) x = rng() % 4;
            if (matrix_rank(*f, k, n, e) == k) break;
        }
        g = make_generator_matrix(f, k, n, e);
        REQUIRE(min_distance_exhaustive(g) == min_distance_reference(g));
    }
}

TEST_CASE("distance is independent of the worker count") {
    const auto g = lomont1_generator(make_field(2), 2, 1);  // [25,6], d=12
    const auto d1 = min_distance_exhaustive(g, std::uint64_t(1) << 21, 1);
    const auto d2 = min_distance_exhaustive(g, std::uint64_t(1) << 21, 2);
    const auto d3 = min_distance_exhaustive(g, std::uint64_t(1) << 21, 3);
    CHECK(d1 == 12);
    CHECK(d1 == d2);
    CHECK(d1 == d3);
}

TEST_CASE("work limit is enforced, not silently ignored") {
    auto f = make_field(8);  // q = 256
    // k = 4: 256^4 = 2^32 > default 2^24
    std::vector<std::uint32_t> e(4 * 5, 0);
    for (int i = 0; i < 4; ++i) { e[i * 5 + i] = 1; e[i * 5 + 4] = 1; }
    const auto g = make_generator_matrix(f, 4, 5, e);
    CHECK_THROWS_AS(min_distance_exhaustive(g), WorkLimitExceeded);
}

TEST_CASE("product code multiplies parameters") {
    const auto rs = extended_rs(make_field(1), 2);  // [3,2,2]
    const auto p = product_code(rs, rs);
    CHECK(p.n == 9);
    CHECK(p.k == 4);
    CHECK(min_distance_exhaustive(p) == 4);

    // product with a repetition code scales the distance
    auto f = make_field(1);
    const auto rep = make_generator_matrix(f, 1, 4, std::vector<std::uint32_t>(4, 1));
    const auto pr = product_code(rep, rs);
    CHECK(min_distance_exhaustive(pr) == 4 * 2);
}

TEST_CASE("singleton check and CodeParams validation") {
    CHECK(singleton_check(make_code_params(3, 2, 2, true)));
    CHECK(singleton_check(make_code_params(9, 4, 4, true)));
    CHECK_THROWS_AS(make_code_params(5, 3, 4, true), std::invalid_argument);  // 6 > 5+1 fails
    CHECK_THROWS_AS(make_code_params(4, 0, 1, true), std::invalid_argument);
    const auto p = make_code_params(9, 4, 4, true);
    CHECK(p.rate == Rat(4, 9));
    CHECK(p.delta == Rat(4, 9));
}

TEST_CASE("generator CSV round-trips") {
    const auto g = extended_rs(make_field(2), 3);
    std::stringstream ss;
    write_generator_csv(ss, g);
    const auto h = read_generator_csv(ss);
    CHECK(h.k == g.k);
    CHECK(h.n == g.n);
    CHECK(h.e == g.e);
    CHECK(h.field->q() == 4);
}

TEST_CASE("row space comparison") {
    const auto rs = extended_rs(make_field(1), 2);
    const auto p = product_code(rs, rs);
    const auto l = lomont1_generator(make_field(1), 1, 1);
    CHECK(row_space_equal(p, l));
    CHECK(row_space_equal(l, p));
    const auto rep = make_generator_matrix(make_field(1), 1, 9, std::vector<std::uint32_t>(9, 1));
    CHECK(!row_space_equal(l, rep));
}
