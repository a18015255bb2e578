// Rational points of P^1 and P^2 over GF(q): normalization and full
// enumeration in a fixed deterministic order (lexicographic on the bits of
// the normalized coordinates), so generator matrices and search output are
// byte-reproducible.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "agcodes/gf2m.hpp"

namespace agcodes {

struct ProjPoint2 {
    std::uint32_t x = 0, y = 0, z = 0;
    bool operator==(const ProjPoint2&) const = default;
};

struct ProjPoint1 {
    std::uint32_t s = 0, t = 0;
    bool operator==(const ProjPoint1&) const = default;
};

// Scale so the first nonzero coordinate (x,y,z order) is 1.
inline ProjPoint2 normalize(const GF2m& f, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    std::uint32_t lead = x ? x : (y ? y : z);
    if (lead == 0) throw std::invalid_argument("normalize: zero vector");
    const std::uint32_t s = f.inv(lead);
    return ProjPoint2{f.mul(x, s), f.mul(y, s), f.mul(z, s)};
}

inline ProjPoint1 normalize1(const GF2m& f, std::uint32_t s, std::uint32_t t) {
    std::uint32_t lead = s ? s : t;
    if (lead == 0) throw std::invalid_argument("normalize1: zero vector");
    const std::uint32_t u = f.inv(lead);
    return ProjPoint1{f.mul(s, u), f.mul(t, u)};
}

// q^2 + q + 1 points: (0:0:1), (0:1:t), (1:y:z) ascending.
inline std::vector<ProjPoint2> enumerate_p2(const GF2m& f) {
    const std::uint32_t q = f.q();
    std::vector<ProjPoint2> pts;
    pts.reserve(std::size_t(q) * q + q + 1);
    pts.push_back({0, 0, 1});
    for (std::uint32_t t = 0; t < q; ++t) pts.push_back({0, 1, t});
    for (std::uint32_t y = 0; y < q; ++y)
        for (std::uint32_t z = 0; z < q; ++z) pts.push_back({1, y, z});
    return pts;
}

// q + 1 points: (0:1), then (1:t) ascending.
inline std::vector<ProjPoint1> enumerate_p1(const GF2m& f) {
    const std::uint32_t q = f.q();
    std::vector<ProjPoint1> pts;
    pts.reserve(q + 1);
    pts.push_back({0, 1});
    for (std::uint32_t t = 0; t < q; ++t) pts.push_back({1, t});
    return pts;
}

}  // namespace agcodes
