// Homogeneous trivariate polynomials over GF(2) of degree 1..6, packed into
// a 32-bit monomial mask. Bit t selects the t-th monomial x^i y^j z^k
// (i+j+k = degree) in lexicographic order, i descending then j descending;
// that fixed bijection is the integer encoding used by the orbit tables and
// the search checkpoints. Degree 6 has C(8,2) = 28 monomials, so every
// curve fits one 32-bit word.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "agcodes/gf2m.hpp"
#include "agcodes/projective.hpp"

namespace agcodes {

inline constexpr int kMaxCurveDegree = 6;

struct Monomial {
    std::uint8_t i = 0, j = 0, k = 0;
    bool operator==(const Monomial&) const = default;
};

inline int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

namespace detail {

struct MonomialTable {
    std::vector<Monomial> list;                 // bit index -> exponents
    std::array<std::array<int, 8>, 8> index{};  // (i,j) -> bit index
    std::uint32_t i_zero = 0, j_zero = 0, k_zero = 0;  // bits of monomials missing a variable
    std::uint32_t all_even = 0;                        // bits with i,j,k all even
};

inline const MonomialTable& monomial_table(int degree) {
    static std::array<MonomialTable, kMaxCurveDegree + 1> tables = [] {
        std::array<MonomialTable, kMaxCurveDegree + 1> t{};
        for (int d = 0; d <= kMaxCurveDegree; ++d) {
            int idx = 0;
            for (int i = d; i >= 0; --i)
                for (int j = d - i; j >= 0; --j) {
                    const int k = d - i - j;
                    t[d].list.push_back({std::uint8_t(i), std::uint8_t(j), std::uint8_t(k)});
                    t[d].index[i][j] = idx;
                    if (i == 0) t[d].i_zero |= 1u << idx;
                    if (j == 0) t[d].j_zero |= 1u << idx;
                    if (k == 0) t[d].k_zero |= 1u << idx;
                    if (i % 2 == 0 && j % 2 == 0 && k % 2 == 0) t[d].all_even |= 1u << idx;
                    ++idx;
                }
        }
        return t;
    }();
    if (degree < 0 || degree > kMaxCurveDegree) throw std::out_of_range("monomial_table: degree");
    return tables[degree];
}

}  // namespace detail

inline int monomial_index(int degree, int i, int j) {
    return detail::monomial_table(degree).index[i][j];
}

inline const std::vector<Monomial>& monomials(int degree) {
    return detail::monomial_table(degree).list;
}

struct PlaneCurve {
    int degree = 0;
    std::uint32_t mask = 0;

    PlaneCurve() = default;
    PlaneCurve(int d, std::uint32_t m) : degree(d), mask(m) {
        if (d < 1 || d > kMaxCurveDegree) throw std::out_of_range("PlaneCurve: degree must be 1..6");
        if (m == 0) throw std::invalid_argument("PlaneCurve: zero polynomial is unrepresentable");
        if (m >> monomial_count(d)) throw std::invalid_argument("PlaneCurve: mask has bits beyond degree");
    }

    bool has(int i, int j) const { return (mask >> monomial_index(degree, i, j)) & 1; }
    int term_count() const { return std::popcount(mask); }

    bool divisible_by_x() const { return (mask & detail::monomial_table(degree).i_zero) == 0; }
    bool divisible_by_y() const { return (mask & detail::monomial_table(degree).j_zero) == 0; }
    bool divisible_by_z() const { return (mask & detail::monomial_table(degree).k_zero) == 0; }
    bool divisible_by_variable() const { return divisible_by_x() || divisible_by_y() || divisible_by_z(); }

    // All exponents even, i.e. the square of a lower-degree polynomial.
    bool is_perfect_square() const {
        return degree % 2 == 0 && (mask & ~detail::monomial_table(degree).all_even) == 0;
    }

    bool operator==(const PlaneCurve&) const = default;
};

// The alpha bijection between degree-d curves and integers 1..2^M-1 is the
// monomial mask itself.
inline std::uint32_t alpha_encode(const PlaneCurve& c) { return c.mask; }

inline PlaneCurve alpha_decode(int degree, std::uint32_t n) {
    if (n == 0 || (n >> monomial_count(degree)))
        throw std::out_of_range("alpha_decode: code out of range for degree");
    return PlaneCurve(degree, n);
}

inline std::uint32_t evaluate(const PlaneCurve& c, const ProjPoint2& p, const GF2m& f) {
    std::uint32_t acc = 0;
    std::uint32_t m = c.mask;
    const auto& list = monomials(c.degree);
    while (m) {
        const int t = std::countr_zero(m);
        m &= m - 1;
        const Monomial& mo = list[t];
        acc ^= f.mul(f.mul(f.pow_tab(mo.i, p.x), f.pow_tab(mo.j, p.y)), f.pow_tab(mo.k, p.z));
    }
    return acc;
}

// Formal partial derivatives in characteristic 2: a monomial survives
// d/dx iff its x-exponent is odd. Result is homogeneous of degree-1 lower
// (zero polynomial encoded as mask 0, so plain struct, not PlaneCurve).
struct MaskedPoly {
    int degree = 0;
    std::uint32_t mask = 0;
};

inline std::array<MaskedPoly, 3> formal_partials(const PlaneCurve& c) {
    std::array<MaskedPoly, 3> out;
    for (auto& p : out) p.degree = c.degree - 1;
    std::uint32_t m = c.mask;
    const auto& list = monomials(c.degree);
    while (m) {
        const int t = std::countr_zero(m);
        m &= m - 1;
        const Monomial& mo = list[t];
        if (mo.i % 2) out[0].mask ^= 1u << monomial_index(c.degree - 1, mo.i - 1, mo.j);
        if (mo.j % 2) out[1].mask ^= 1u << monomial_index(c.degree - 1, mo.i, mo.j - 1);
        if (mo.k % 2) out[2].mask ^= 1u << monomial_index(c.degree - 1, mo.i, mo.j);
    }
    return out;
}

inline std::uint32_t evaluate_masked(const MaskedPoly& p, const ProjPoint2& pt, const GF2m& f) {
    if (p.mask == 0) return 0;
    if (p.degree == 0) return p.mask & 1;  // constant polynomial
    return evaluate(PlaneCurve(p.degree, p.mask), pt, f);
}

// Multiply x*p_x (etc.) back up to degree d; used by the Euler identity
// x f_x + y f_y + z f_z = (d mod 2) f.
inline std::uint32_t lift_mask(const MaskedPoly& p, int var) {
    std::uint32_t out = 0;
    std::uint32_t m = p.mask;
    const auto& list = monomials(p.degree);
    while (m) {
        const int t = std::countr_zero(m);
        m &= m - 1;
        const Monomial& mo = list[t];
        const int i = mo.i + (var == 0), j = mo.j + (var == 1);
        out ^= 1u << monomial_index(p.degree + 1, i, j);
    }
    return out;
}

// Exhaustive rational point count over P^2(F_q), chart by chart. The affine
// chart (1:y:z) is evaluated one z-slice at a time: collapse the mask to a
// univariate polynomial in y, then Horner over all y.
inline std::uint64_t count_points(const PlaneCurve& c, const GF2m& f,
                                  std::vector<ProjPoint2>* zeros = nullptr) {
    const std::uint32_t q = f.q();
    const int d = c.degree;
    const auto& list = monomials(d);
    std::uint64_t count = 0;

    // (0:0:1): only the z^d monomial contributes.
    if (!c.has(0, 0)) {
        ++count;
        if (zeros) zeros->push_back({0, 0, 1});
    }

    // (0:1:t): univariate in t with coefficient of t^k from monomial (0, d-k, k).
    {
        std::array<std::uint32_t, kMaxCurveDegree + 1> coef{};
        for (int k = 0; k <= d; ++k) coef[k] = c.has(0, d - k) ? 1u : 0u;
        for (std::uint32_t t = 0; t < q; ++t) {
            std::uint32_t v = 0;
            for (int k = d; k >= 0; --k) v = f.mul(v, t) ^ coef[k];
            if (v == 0) {
                ++count;
                if (zeros) zeros->push_back({0, 1, t});
            }
        }
    }

    // (1:y:z): for each z reduce to a polynomial in y.
    {
        // Per degree-j coefficient, which z-exponents appear.
        std::array<std::uint32_t, kMaxCurveDegree + 1> zbits{};
        std::uint32_t m = c.mask;
        while (m) {
            const int t = std::countr_zero(m);
            m &= m - 1;
            zbits[list[t].j] |= 1u << list[t].k;
        }
        std::array<std::uint32_t, kMaxCurveDegree + 1> coef{};
        for (std::uint32_t z = 0; z < q; ++z) {
            for (int j = 0; j <= d; ++j) {
                std::uint32_t acc = 0, b = zbits[j];
                while (b) {
                    const int k = std::countr_zero(b);
                    b &= b - 1;
                    acc ^= f.pow_tab(k, z);
                }
                coef[j] = acc;
            }
            for (std::uint32_t y = 0; y < q; ++y) {
                std::uint32_t v = 0;
                for (int j = d; j >= 0; --j) v = f.mul(v, y) ^ coef[j];
                if (v == 0) {
                    ++count;
                    if (zeros) zeros->push_back({1, y, z});
                }
            }
        }
    }
    return count;
}

// Reference counter: plain loop over the full point enumeration. Slow, kept
// as the independent oracle for the fast path.
inline std::uint64_t count_points_reference(const PlaneCurve& c, const GF2m& f) {
    std::uint64_t n = 0;
    for (const auto& p : enumerate_p2(f))
        if (evaluate(c, p, f) == 0) ++n;
    return n;
}

// Text format, one curve per line: d=<degree>; f=<monomials joined by '+'>
// with monomials written x^i*y^j*z^k, exponent-1 and zero-exponent parts
// omitted. Printing uses the canonical bit order so parse/print round-trip
// exactly.
inline std::string to_string(const PlaneCurve& c) {
    std::string s = "d=" + std::to_string(c.degree) + "; f=";
    const auto& list = monomials(c.degree);
    bool first = true;
    for (std::size_t t = 0; t < list.size(); ++t) {
        if (!((c.mask >> t) & 1)) continue;
        if (!first) s += "+";
        first = false;
        const Monomial& mo = list[t];
        std::string term;
        const char* names[3] = {"x", "y", "z"};
        const int e[3] = {mo.i, mo.j, mo.k};
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!term.empty()) term += "*";
            term += names[v];
            if (e[v] > 1) term += "^" + std::to_string(e[v]);
        }
        s += term;
    }
    return s;
}

inline PlaneCurve parse_curve(const std::string& text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_curve: " + why + " in \"" + text + "\"");
    };
    auto skip_ws = [&](std::size_t& p) {
        while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p;
    };
    std::size_t p = 0;
    skip_ws(p);
    if (text.compare(p, 2, "d=") != 0) fail("expected d=");
    p += 2;
    std::size_t used = 0;
    const int degree = std::stoi(text.substr(p), &used);
    p += used;
    skip_ws(p);
    if (p >= text.size() || text[p] != ';') fail("expected ';'");
    ++p;
    skip_ws(p);
    if (text.compare(p, 2, "f=") != 0) fail("expected f=");
    p += 2;

    std::uint32_t mask = 0;
    while (true) {
        skip_ws(p);
        int e[3] = {0, 0, 0};
        bool any = false;
        while (p < text.size()) {
            const char v = text[p];
            int idx;
            if (v == 'x') idx = 0;
            else if (v == 'y') idx = 1;
            else if (v == 'z') idx = 2;
            else break;
            ++p;
            int exp = 1;
            if (p < text.size() && text[p] == '^') {
                ++p;
                exp = std::stoi(text.substr(p), &used);
                p += used;
            }
            if (e[idx] != 0) fail("variable repeated in monomial");
            e[idx] = exp;
            any = true;
            if (p < text.size() && text[p] == '*') ++p;
            else break;
        }
        if (!any) fail("empty monomial");
        if (e[0] + e[1] + e[2] != degree) fail("monomial degree mismatch");
        const std::uint32_t bit = 1u << monomial_index(degree, e[0], e[1]);
        if (mask & bit) fail("duplicate monomial");
        mask |= bit;
        skip_ws(p);
        if (p >= text.size()) break;
        if (text[p] != '+') fail("expected '+'");
        ++p;
    }
    return PlaneCurve(degree, mask);
}

}  // namespace agcodes
