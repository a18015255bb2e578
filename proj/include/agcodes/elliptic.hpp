// Weierstrass curves y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over
// GF(2^m): characteristic-2 discriminant, brute-force point counting, and
// O(q) trace-based counting for the two char-2 normal-form families (used
// to scan for curves with a prescribed number of rational points).

#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "agcodes/gf2m.hpp"

namespace agcodes {

struct WeierstrassCurve {
    std::uint32_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

// b2 = a1^2, b4 = a1 a3, b6 = a3^2, b8 = a1^2 a6 + a1 a3 a4 + a2 a3^2 + a4^2,
// Delta = b2^2 b8 + b6^2 + b2 b4 b6 (all standard formulas reduced mod 2).
inline std::uint32_t discriminant_char2(const GF2m& f, const WeierstrassCurve& w) {
    const std::uint32_t b2 = f.mul(w.a1, w.a1);
    const std::uint32_t b4 = f.mul(w.a1, w.a3);
    const std::uint32_t b6 = f.mul(w.a3, w.a3);
    const std::uint32_t b8 = f.add(f.add(f.mul(b2, w.a6), f.mul(f.mul(w.a1, w.a3), w.a4)),
                                   f.add(f.mul(w.a2, b6), f.mul(w.a4, w.a4)));
    return f.add(f.add(f.mul(f.mul(b2, b2), b8), f.mul(b6, b6)), f.mul(f.mul(b2, b4), b6));
}

inline bool is_nonsingular(const GF2m& f, const WeierstrassCurve& w) {
    return discriminant_char2(f, w) != 0;
}

// Independent smoothness route for tests: a singular affine point satisfies
// F = F_x = F_y = 0 with F = y^2 + a1 x y + a3 y + x^3 + a2 x^2 + a4 x + a6;
// the point at infinity on a Weierstrass equation is always smooth.
inline bool is_nonsingular_bruteforce(const GF2m& f, const WeierstrassCurve& w) {
    for (std::uint32_t x = 0; x < f.q(); ++x)
        for (std::uint32_t y = 0; y < f.q(); ++y) {
            const std::uint32_t x2 = f.mul(x, x);
            const std::uint32_t F = f.add(
                f.add(f.add(f.mul(y, y), f.mul(f.mul(w.a1, x), y)), f.mul(w.a3, y)),
                f.add(f.add(f.mul(x2, x), f.mul(w.a2, x2)), f.add(f.mul(w.a4, x), w.a6)));
            if (F != 0) continue;
            const std::uint32_t Fx = f.add(f.mul(w.a1, y), f.add(x2, w.a4));  // 3x^2 -> x^2 in char 2
            const std::uint32_t Fy = f.add(f.mul(w.a1, x), w.a3);
            if (Fx == 0 && Fy == 0) return false;
        }
    return true;
}

// Brute-force count of affine solutions plus the point at infinity.
inline std::uint64_t elliptic_point_count(const GF2m& f, const WeierstrassCurve& w) {
    if (!is_nonsingular(f, w)) throw std::invalid_argument("elliptic_point_count: singular curve");
    std::uint64_t count = 1;  // infinity
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        const std::uint32_t x2 = f.mul(x, x);
        const std::uint32_t rhs =
            f.add(f.add(f.mul(x2, x), f.mul(w.a2, x2)), f.add(f.mul(w.a4, x), w.a6));
        const std::uint32_t c = f.add(f.mul(w.a1, x), w.a3);  // y^2 + c y = rhs
        if (c == 0) {
            ++count;  // y^2 = rhs: Frobenius is bijective, exactly one y
        } else {
            // substitute y = c z: z^2 + z = rhs / c^2, solvable iff trace 0
            const std::uint32_t cinv2 = f.mul(f.inv(c), f.inv(c));
            if (f.trace(f.mul(rhs, cinv2)) == 0) count += 2;
        }
    }
    return count;
}

inline bool hasse_interval_contains(std::uint64_t q, std::uint64_t count) {
    // |count - (q+1)|^2 <= 4q, exactly
    const long long diff = static_cast<long long>(count) - static_cast<long long>(q + 1);
    return diff * diff <= static_cast<long long>(4 * q);
}

// Group orders attained by the full ordinary normal-form family
// y^2 + xy = x^3 + a2 x^2 + a6 (a6 != 0). Every ordinary curve over F_2^m
// is isomorphic to a member, so this is a complete scan of ordinary orders.
inline std::set<std::uint64_t> ordinary_family_orders(const GF2m& f) {
    std::set<std::uint64_t> out;
    for (std::uint32_t a2 = 0; a2 < f.q(); ++a2)
        for (std::uint32_t a6 = 1; a6 < f.q(); ++a6)
            out.insert(elliptic_point_count(f, {1, a2, 0, 0, a6}));
    return out;
}

// Orders attained by a slice of the supersingular normal-form family
// y^2 + a3 y = x^3 + a4 x + a6 (a3 != 0).
inline std::set<std::uint64_t> supersingular_family_orders(const GF2m& f,
                                                           bool full_a4_with_a3_one = true) {
    std::set<std::uint64_t> out;
    auto count = [&](std::uint32_t a3, std::uint32_t a4, std::uint32_t a6) {
        const std::uint32_t s = f.mul(f.inv(a3), f.inv(a3));
        std::uint64_t c = 1;
        for (std::uint32_t x = 0; x < f.q(); ++x) {
            const std::uint32_t x2 = f.mul(x, x);
            const std::uint32_t rhs = f.add(f.mul(x2, x), f.add(f.mul(a4, x), a6));
            if (f.trace(f.mul(rhs, s)) == 0) c += 2;
        }
        return c;
    };
    for (std::uint32_t a3 = 1; a3 < f.q(); ++a3)
        for (std::uint32_t a6 = 0; a6 < f.q(); ++a6) out.insert(count(a3, 0, a6));
    if (full_a4_with_a3_one)
        for (std::uint32_t a4 = 0; a4 < f.q(); ++a4)
            for (std::uint32_t a6 = 0; a6 < f.q(); ++a6) out.insert(count(1, a4, a6));
    return out;
}

}  // namespace agcodes
