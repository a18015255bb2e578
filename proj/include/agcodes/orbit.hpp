// GL3(F2) action on plane curves: variable substitutions, orbits, canonical
// representatives, and orbit-reduced enumeration of all degree-d curves.
//
// The group has 168 elements. Degree >= 5 enumerations mark visited
// polynomials in a flat bit table (degree 6 needs 2^28 bits = 32 MiB);
// smaller degrees use a hash set. Orbits divisible by a variable (in any
// member) and perfect squares are skipped as clearly reducible, except in
// degree 1 where a line is not properly divisible.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "agcodes/plane_curve.hpp"

namespace agcodes {

// Invertible 3x3 matrices over GF(2), 9-bit row-major encoding, ascending.
inline const std::vector<std::uint16_t>& gl3_matrices() {
    static const std::vector<std::uint16_t> mats = [] {
        std::vector<std::uint16_t> v;
        for (std::uint16_t m = 0; m < 512; ++m) {
            const int r0 = m & 7, r1 = (m >> 3) & 7, r2 = (m >> 6) & 7;
            // det over GF(2): rows linearly independent
            if (r0 == 0 || r1 == 0 || r2 == 0) continue;
            if (r1 == r0 || r2 == r0 || r2 == r1 || r2 == (r0 ^ r1)) continue;
            v.push_back(m);
        }
        return v;
    }();
    return mats;
}

// Product of two homogeneous GF(2) polynomials given as monomial masks.
inline std::uint32_t mask_mul(int d1, std::uint32_t m1, int d2, std::uint32_t m2) {
    std::uint32_t out = 0;
    const auto& l1 = monomials(d1);
    const auto& l2 = monomials(d2);
    for (std::uint32_t a = m1; a;) {
        const int s = std::countr_zero(a);
        a &= a - 1;
        for (std::uint32_t b = m2; b;) {
            const int t = std::countr_zero(b);
            b &= b - 1;
            out ^= 1u << monomial_index(d1 + d2, l1[s].i + l2[t].i, l1[s].j + l2[t].j);
        }
    }
    return out;
}

namespace detail {

// subst[mat][monomial bit] = expansion mask of the monomial's image.
struct SubstTable {
    std::vector<std::vector<std::uint32_t>> img;
};

inline const SubstTable& subst_table(int degree) {
    static std::vector<SubstTable> tables = [] {
        std::vector<SubstTable> out(kMaxCurveDegree + 1);
        const auto& mats = gl3_matrices();
        for (int d = 1; d <= kMaxCurveDegree; ++d) {
            const auto& list = monomials(d);
            out[d].img.assign(mats.size(), std::vector<std::uint32_t>(list.size()));
            for (std::size_t mi = 0; mi < mats.size(); ++mi) {
                // Images of x, y, z as degree-1 masks (monomials x,y,z are
                // bits 0,1,2 in degree 1).
                std::uint32_t rows[3];
                for (int r = 0; r < 3; ++r) {
                    const int bits = (mats[mi] >> (3 * r)) & 7;
                    std::uint32_t lin = 0;
                    if (bits & 4) lin ^= 1u << monomial_index(1, 1, 0);  // x
                    if (bits & 2) lin ^= 1u << monomial_index(1, 0, 1);  // y
                    if (bits & 1) lin ^= 1u << monomial_index(1, 0, 0);  // z
                    rows[r] = lin;
                }
                for (std::size_t t = 0; t < list.size(); ++t) {
                    std::uint32_t acc = 0;
                    int deg = 0;
                    auto mul_pow = [&](std::uint32_t lin, int e) {
                        for (int i = 0; i < e; ++i) {
                            acc = (deg == 0) ? lin : mask_mul(deg, acc, 1, lin);
                            ++deg;
                        }
                    };
                    mul_pow(rows[0], list[t].i);
                    mul_pow(rows[1], list[t].j);
                    mul_pow(rows[2], list[t].k);
                    out[d].img[mi][t] = acc;
                }
            }
        }
        return out;
    }();
    return tables[degree];
}

}  // namespace detail

// f(M (x,y,z)^T) as a mask, by XOR of precomputed monomial images.
inline std::uint32_t apply_gl3(int degree, std::uint32_t mask, std::size_t mat_index) {
    const auto& tab = detail::subst_table(degree).img[mat_index];
    std::uint32_t out = 0;
    while (mask) {
        const int t = std::countr_zero(mask);
        mask &= mask - 1;
        out ^= tab[t];
    }
    return out;
}

// Distinct images of the curve under all 168 substitutions.
inline std::vector<PlaneCurve> gl3_orbit(const PlaneCurve& c) {
    std::vector<std::uint32_t> masks;
    masks.reserve(gl3_matrices().size());
    for (std::size_t mi = 0; mi < gl3_matrices().size(); ++mi)
        masks.push_back(apply_gl3(c.degree, c.mask, mi));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<PlaneCurve> out;
    out.reserve(masks.size());
    for (auto m : masks) out.emplace_back(c.degree, m);
    return out;
}

// Fewest monomials, ties by smallest mask value: a total order, so two runs
// agree byte for byte.
inline PlaneCurve pick_representative(const std::vector<PlaneCurve>& orbit) {
    if (orbit.empty()) throw std::invalid_argument("pick_representative: empty orbit");
    const PlaneCurve* best = &orbit[0];
    for (const auto& c : orbit) {
        const int pb = best->term_count(), pc = c.term_count();
        if (pc < pb || (pc == pb && c.mask < best->mask)) best = &c;
    }
    return *best;
}

struct RepresentativeStats {
    std::uint64_t total_masks = 0;   // 2^M - 1
    std::uint64_t orbit_count = 0;
    std::uint64_t emitted = 0;
    std::uint64_t skipped_variable = 0;
    std::uint64_t skipped_square = 0;
    std::uint64_t masks_covered = 0;  // sum of orbit sizes processed
};

// Enumerates one representative per orbit in ascending order of the orbit's
// least mask, invoking emit(rep). Orbits of variable-divisible polynomials
// (degree >= 2) and of perfect squares are skipped.
template <typename Emit>
RepresentativeStats enumerate_representatives(int degree, Emit&& emit) {
    const auto& mats = gl3_matrices();
    const auto& tab = detail::subst_table(degree);
    const int M = monomial_count(degree);
    const std::uint64_t span = std::uint64_t(1) << M;
    const auto& mt = detail::monomial_table(degree);

    RepresentativeStats st;
    st.total_masks = span - 1;

    const bool use_bit_table = degree >= 5;
    std::vector<std::uint64_t> bits;
    std::unordered_set<std::uint32_t> seen;
    if (use_bit_table) bits.assign(span / 64 + 1, 0);
    auto visited = [&](std::uint32_t n) {
        return use_bit_table ? ((bits[n >> 6] >> (n & 63)) & 1) != 0 : seen.count(n) != 0;
    };
    auto mark = [&](std::uint32_t n) {
        if (use_bit_table) bits[n >> 6] |= std::uint64_t(1) << (n & 63);
        else seen.insert(n);
    };

    std::vector<std::uint32_t> images(mats.size());
    for (std::uint64_t n = 1; n < span; ++n) {
        if (visited(static_cast<std::uint32_t>(n))) continue;
        const std::uint32_t base = static_cast<std::uint32_t>(n);
        ++st.orbit_count;

        std::uint32_t best = base;
        int best_pop = std::popcount(base);
        bool var_divisible = false;
        std::uint64_t orbit_size = 0;
        for (std::size_t mi = 0; mi < mats.size(); ++mi) {
            std::uint32_t img = 0;
            std::uint32_t m = base;
            const auto& row = tab.img[mi];
            while (m) {
                const int t = std::countr_zero(m);
                m &= m - 1;
                img ^= row[t];
            }
            images[mi] = img;
            if (!visited(img)) {
                mark(img);
                ++orbit_size;
            }
            const int pop = std::popcount(img);
            if (pop < best_pop || (pop == best_pop && img < best)) {
                best = img;
                best_pop = pop;
            }
            if ((img & mt.i_zero) == 0 || (img & mt.j_zero) == 0 || (img & mt.k_zero) == 0)
                var_divisible = true;
        }
        st.masks_covered += orbit_size;

        if (degree >= 2 && var_divisible) {
            ++st.skipped_variable;
        } else if (degree % 2 == 0 && (base & ~mt.all_even) == 0) {
            ++st.skipped_square;
        } else {
            ++st.emitted;
            emit(PlaneCurve(degree, best));
        }
    }
    return st;
}

inline std::vector<PlaneCurve> representatives(int degree) {
    std::vector<PlaneCurve> out;
    enumerate_representatives(degree, [&](const PlaneCurve& c) { out.push_back(c); });
    return out;
}

}  // namespace agcodes
