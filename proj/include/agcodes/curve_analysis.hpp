// Per-field analysis of a plane curve over GF(2): singular points and their
// tangent cones, blow-up point estimates, genus bounds, and irreducibility.
//
// Singularities are located among the rational points of the analysis field
// only; the point is moved to (0:0:1) by an invertible coordinate change,
// the equation is dehomogenized, and the lowest-degree homogeneous part in
// the two local variables (u,v) is the tangent cone. Rational tangent
// directions are read off by factoring the cone over F_q. Non-ordinary
// singularities yield flagged estimates, never silent numbers.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agcodes/gf2m.hpp"
#include "agcodes/plane_curve.hpp"
#include "agcodes/projective.hpp"

namespace agcodes {

namespace detail {

// Dense homogeneous trivariate polynomial over F_q, used for coordinate
// changes when analyzing a singular point.
struct TrivarPoly {
    int degree = 0;
    std::vector<std::uint32_t> coef;  // indexed by monomial_index(degree, i, j)

    explicit TrivarPoly(int d) : degree(d), coef(monomial_count(d), 0) {}
};

inline TrivarPoly trivar_mul(const TrivarPoly& a, const TrivarPoly& b, const GF2m& f) {
    TrivarPoly out(a.degree + b.degree);
    const auto& la = monomials(a.degree);
    const auto& lb = monomials(b.degree);
    for (std::size_t s = 0; s < la.size(); ++s) {
        if (a.coef[s] == 0) continue;
        for (std::size_t t = 0; t < lb.size(); ++t) {
            if (b.coef[t] == 0) continue;
            const int i = la[s].i + lb[t].i, j = la[s].j + lb[t].j;
            const int idx = monomial_index(out.degree, i, j);
            out.coef[idx] = f.add(out.coef[idx], f.mul(a.coef[s], b.coef[t]));
        }
    }
    return out;
}

inline TrivarPoly trivar_pow(const TrivarPoly& a, int e, const GF2m& f) {
    TrivarPoly r(0);
    r.coef[0] = 1;
    for (int i = 0; i < e; ++i) r = trivar_mul(r, a, f);
    return r;
}

// f(A.(x,y,z)^T) for a 3x3 matrix over F_q given column-wise.
inline TrivarPoly substitute(const PlaneCurve& c, const std::array<std::array<std::uint32_t, 3>, 3>& A,
                             const GF2m& f) {
    // Row polynomials: the images of x, y, z.
    std::array<TrivarPoly, 3> rows{TrivarPoly(1), TrivarPoly(1), TrivarPoly(1)};
    for (int r = 0; r < 3; ++r) {
        rows[r].coef[monomial_index(1, 1, 0)] = A[r][0];
        rows[r].coef[monomial_index(1, 0, 1)] = A[r][1];
        rows[r].coef[monomial_index(1, 0, 0)] = A[r][2];
    }
    // Column convention: A[r][c]; coordinates transform by the matrix, so
    // x -> A[0][0] x + A[0][1] y + A[0][2] z, etc. The index mapping above
    // places A[r][0] on x, A[r][1] on y, A[r][2] on z.
    TrivarPoly acc(c.degree);
    const auto& list = monomials(c.degree);
    for (std::size_t t = 0; t < list.size(); ++t) {
        if (!((c.mask >> t) & 1)) continue;
        TrivarPoly term = trivar_pow(rows[0], list[t].i, f);
        term = trivar_mul(term, trivar_pow(rows[1], list[t].j, f), f);
        term = trivar_mul(term, trivar_pow(rows[2], list[t].k, f), f);
        for (std::size_t s = 0; s < acc.coef.size(); ++s) acc.coef[s] = f.add(acc.coef[s], term.coef[s]);
    }
    return acc;
}

// Univariate polynomial helpers over F_q (coefficient vectors, c[i] on t^i).
using UniPoly = std::vector<std::uint32_t>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UniPoly uni_mod(UniPoly a, const UniPoly& b, const GF2m& f) {
    uni_trim(a);
    while (a.size() >= b.size()) {
        const std::uint32_t lead = f.mul(a.back(), f.inv(b.back()));
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.add(a[shift + i], f.mul(lead, b[i]));
        uni_trim(a);
    }
    return a;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b, const GF2m& f) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(i % 2 ? p[i] : 0);  // char 2
    uni_trim(d);
    return d;
}

inline bool uni_squarefree(UniPoly p, const GF2m& f) {
    uni_trim(p);
    if (p.size() <= 2) return true;  // constants and linear
    UniPoly d = uni_derivative(p);
    if (d.empty()) return false;  // derivative 0 means p is a square in char 2
    return uni_gcd(p, d, f).size() <= 1;
}

}  // namespace detail

// Binary form over F_q: c[i] is the coefficient of u^i v^(deg - i).
struct BinForm {
    std::vector<std::uint32_t> c;

    int degree() const { return int(c.size()) - 1; }
    std::uint32_t eval(std::uint32_t u, std::uint32_t v, const GF2m& f) const {
        std::uint32_t acc = 0;
        const int d = degree();
        for (int i = 0; i <= d; ++i)
            acc = f.add(acc, f.mul(c[i], f.mul(f.pow(u, i), f.pow(v, d - i))));
        return acc;
    }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; });
    }
    bool operator==(const BinForm&) const = default;
};

// Exact division of a binary form by a*u + b*v; nullopt when not divisible.
inline std::optional<BinForm> divide_linear(const BinForm& F, std::uint32_t a, std::uint32_t b,
                                            const GF2m& f) {
    const int n = F.degree();
    if (n < 1) return std::nullopt;
    BinForm q;
    q.c.assign(n, 0);
    if (a != 0) {
        BinForm r = F;
        const std::uint32_t ainv = f.inv(a);
        for (int i = n; i >= 1; --i) {
            const std::uint32_t t = f.mul(r.c[i], ainv);
            q.c[i - 1] = t;
            r.c[i] = 0;
            r.c[i - 1] = f.add(r.c[i - 1], f.mul(t, b));
        }
        if (r.c[0] != 0) return std::nullopt;
        return q;
    }
    // Factor is b*v: divisible iff no u^n term.
    if (F.c[n] != 0) return std::nullopt;
    const std::uint32_t binv = f.inv(b);
    for (int i = 0; i < n; ++i) q.c[i] = f.mul(F.c[i], binv);
    return q;
}

// Squarefree over the algebraic closure (perfect base field, so the
// gcd-with-derivative test on the u^a v^b core is conclusive).
inline bool binform_squarefree(const BinForm& F, const GF2m& f) {
    const int n = F.degree();
    int lo = 0, hi = n;
    while (lo <= n && F.c[lo] == 0) ++lo;  // u-multiplicity
    while (hi >= 0 && F.c[hi] == 0) --hi;  // v-multiplicity is n - hi
    if (lo > hi) return false;             // zero form
    const int umult = lo, vmult = n - hi;
    if (umult > 1 || vmult > 1) return false;
    detail::UniPoly core(F.c.begin() + lo, F.c.begin() + hi + 1);
    return detail::uni_squarefree(core, f);
}

struct ConeFactor {
    BinForm form;   // degree 1 for a rational direction, >= 2 for the residual
    int exponent = 1;
};

struct SingularityRecord {
    ProjPoint2 point;
    int multiplicity = 0;
    std::vector<ConeFactor> factors;   // product over factors^exponent = cone
    bool ordinary = false;             // cone squarefree over the closure
    int rational_direction_count = 0;  // distinct linear factors over F_q
    BinForm cone;
    std::string cone_type;
};

namespace detail {

inline std::string field_elem_string(std::uint32_t v) { return std::to_string(v); }

inline std::string binform_string(const BinForm& F) {
    const int n = F.degree();
    std::string s;
    for (int i = n; i >= 0; --i) {
        if (F.c[i] == 0) continue;
        if (!s.empty()) s += "+";
        std::string term;
        if (F.c[i] != 1) term += field_elem_string(F.c[i]) + "*";  // bit value of the coefficient
        const int ve = n - i;
        if (i > 0) {
            term += "u";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (i > 0 && ve > 0) term += "*";
        if (ve > 0) {
            term += "v";
            if (ve > 1) term += "^" + std::to_string(ve);
        }
        if (i == 0 && ve == 0) term += field_elem_string(F.c[i]);
        s += term;
    }
    return s.empty() ? "0" : s;
}

inline std::string cone_type_string(const std::vector<ConeFactor>& factors) {
    std::string s;
    for (const auto& cf : factors) {
        const std::string body = binform_string(cf.form);
        const bool bare = (cf.form.degree() == 1) && (body == "u" || body == "v");
        if (!s.empty()) s += " ";
        s += bare ? body : "(" + body + ")";
        if (cf.exponent > 1) s += "^" + std::to_string(cf.exponent);
    }
    return s;
}

}  // namespace detail

// Factor out all rational linear factors (with multiplicities); whatever
// remains has no roots in P^1(F_q) and is kept as a single residual factor.
inline std::vector<ConeFactor> factor_cone(const BinForm& cone, const GF2m& f) {
    std::vector<ConeFactor> out;
    BinForm rem = cone;
    // Direction (0:1) carries factor u; directions (1:t) carry t*u + v.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> lins;
    lins.push_back({1, 0});
    for (std::uint32_t t = 0; t < f.q(); ++t) lins.push_back({t, 1});
    for (const auto& [a, b] : lins) {
        int e = 0;
        while (rem.degree() >= 1) {
            auto q = divide_linear(rem, a, b, f);
            if (!q) break;
            rem = *q;
            ++e;
        }
        if (e > 0) {
            BinForm lin;
            lin.c = {b, a};  // c[0] v-coeff, c[1] u-coeff
            out.push_back({lin, e});
        }
        if (rem.degree() < 1) break;
    }
    if (rem.degree() >= 1) out.push_back({rem, 1});
    return out;
}

// Move P to (0:0:1) by an invertible substitution, dehomogenize, and read
// off multiplicity and tangent cone from the local expansion.
inline SingularityRecord analyze_singular_point(const PlaneCurve& c, const ProjPoint2& p,
                                                const GF2m& f) {
    const std::uint32_t v[3] = {p.x, p.y, p.z};
    // Work in the affine chart of the last nonzero coordinate; the local
    // variables are the remaining coordinates in x,y,z order, matching the
    // usual dehomogenize-and-translate presentation of tangent cones.
    int pivot = v[2] ? 2 : (v[1] ? 1 : 0);
    // Columns: two standard basis vectors plus P itself as the third column,
    // so (0:0:1) maps to P. Determinant is the pivot coordinate = 1.
    std::array<std::array<std::uint32_t, 3>, 3> A{};
    int col = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        A[i][col] = 1;
        ++col;
    }
    for (int r = 0; r < 3; ++r) A[r][2] = v[r];

    const detail::TrivarPoly g = detail::substitute(c, A, f);
    const int d = c.degree;
    const auto& list = monomials(d);

    int mult = -1;
    for (int t = 0; t <= d && mult < 0; ++t)
        for (std::size_t s = 0; s < list.size(); ++s)
            if (list[s].i + list[s].j == t && g.coef[s] != 0) {
                mult = t;
                break;
            }
    SingularityRecord rec;
    rec.point = p;
    rec.multiplicity = mult;
    if (mult < 2) return rec;  // caller guards; smooth or non-point

    rec.cone.c.assign(mult + 1, 0);
    for (int i = 0; i <= mult; ++i)
        rec.cone.c[i] = g.coef[monomial_index(d, i, mult - i)];
    rec.factors = factor_cone(rec.cone, f);
    rec.ordinary = binform_squarefree(rec.cone, f);
    rec.rational_direction_count = 0;
    for (const auto& cf : rec.factors)
        if (cf.form.degree() == 1) ++rec.rational_direction_count;
    rec.cone_type = detail::cone_type_string(rec.factors);
    return rec;
}

inline bool is_simple_point(const PlaneCurve& c, const ProjPoint2& p, const GF2m& f) {
    if (evaluate(c, p, f) != 0) return false;
    for (const auto& d : formal_partials(c))
        if (evaluate_masked(d, p, f) != 0) return true;
    return false;
}

// All singular rational points over F_q, with tangent-cone analysis.
inline std::vector<SingularityRecord> singular_points(const PlaneCurve& c, const GF2m& f,
                                                      const std::vector<ProjPoint2>* known_zeros = nullptr) {
    std::vector<ProjPoint2> zeros;
    if (known_zeros == nullptr) {
        count_points(c, f, &zeros);
        known_zeros = &zeros;
    }
    const auto parts = formal_partials(c);
    std::vector<SingularityRecord> out;
    for (const auto& p : *known_zeros) {
        bool singular = true;
        for (const auto& d : parts)
            if (evaluate_masked(d, p, f) != 0) {
                singular = false;
                break;
            }
        if (singular) out.push_back(analyze_singular_point(c, p, f));
    }
    return out;
}

// Points gained on the smooth model from blowing up one singularity.
// Ordinary cones give the exact count of rational directions; otherwise the
// distinct rational linear factors are an estimate flagged for review.
inline std::pair<int, bool> blowup_bonus(const SingularityRecord& rec) {
    int distinct_linear = 0;
    for (const auto& cf : rec.factors)
        if (cf.form.degree() == 1) ++distinct_linear;
    return {distinct_linear, rec.ordinary};
}

// floor(2 sqrt(q)) in exact integer arithmetic.
inline std::uint64_t floor_two_sqrt(std::uint64_t q) {
    std::uint64_t x = static_cast<std::uint64_t>(std::sqrt(double(4 * q)));
    while ((x + 1) * (x + 1) <= 4 * q) ++x;
    while (x * x > 4 * q) --x;
    return x;
}

// Smallest g with q + 1 + g*floor(2 sqrt q) >= p; 0 when p <= q+1.
inline long long serre_genus_lower(std::uint64_t p, std::uint64_t q) {
    if (p <= q + 1) return 0;
    const std::uint64_t s = floor_two_sqrt(q);
    return static_cast<long long>((p - q - 1 + s - 1) / s);
}

// g <= (d-1)(d-2)/2 - r, floored at 0.
inline long long plane_genus_upper(int d, long long r) {
    const long long g = static_cast<long long>(d - 1) * (d - 2) / 2 - r;
    return g < 0 ? 0 : g;
}

// Sum of singularity multiplicities is at most floor(d/2)*r (+1 if d odd);
// requires at least two singularities.
inline long long multiplicity_sum_bound(int d, long long r) {
    if (r < 2) throw std::domain_error("multiplicity_sum_bound: needs r >= 2");
    return static_cast<long long>(d / 2) * r + (d % 2 ? 1 : 0);
}

// --- Irreducibility over GF(2) ------------------------------------------

namespace detail {

// Bivariate polynomial over GF(2) packed into 128 bits: bit (i*16 + j) is
// the coefficient of x^i y^j. Divisions stay within j <= 9 whenever the
// divisor actually divides, so a j overflow proves non-divisibility.
using Bivar = unsigned __int128;

inline Bivar bivar_from_mask(int degree, std::uint32_t mask) {
    Bivar out = 0;
    const auto& list = monomials(degree);
    for (std::size_t t = 0; t < list.size(); ++t)
        if ((mask >> t) & 1) out |= Bivar(1) << (list[t].i * 16 + list[t].j);
    return out;
}

inline int bivar_top_bit(Bivar p) {
    int hi = -1;
    for (int b = 127; b >= 0; --b)
        if ((p >> b) & 1) { hi = b; break; }
    return hi;
}

inline bool bivar_divides(Bivar g, Bivar f) {
    const int ltg = bivar_top_bit(g);
    const int gi = ltg / 16, gj = ltg % 16;
    while (f) {
        const int ltf = bivar_top_bit(f);
        const int fi = ltf / 16, fj = ltf % 16;
        if (fi < gi || fj < gj) return false;
        const int dj = fj - gj;
        // A shift that would spill a row past column 15 cannot occur when g
        // divides f, so it proves non-divisibility.
        for (int r = 0; r <= 7; ++r) {
            const Bivar row = (g >> (r * 16)) & 0xFFFF;
            if (row != 0 && bivar_top_bit(row) + dj > 15) return false;
        }
        f ^= g << ((fi - gi) * 16 + dj);
    }
    return true;
}

}  // namespace detail

// Trial division by every homogeneous divisor of degree 1..d/2 over GF(2),
// after dehomogenizing at z (legal once no variable divides f).
inline bool is_irreducible_over_f2(const PlaneCurve& c) {
    const int d = c.degree;
    if (d == 1) return true;
    if (c.divisible_by_variable()) return false;
    const detail::Bivar fhat = detail::bivar_from_mask(d, c.mask);
    for (int e = 1; e <= d / 2; ++e) {
        const std::uint32_t span = 1u << monomial_count(e);
        for (std::uint32_t gm = 1; gm < span; ++gm) {
            const PlaneCurve g(e, gm);
            if (g.divisible_by_z()) continue;  // z | g but z does not divide f
            if (detail::bivar_divides(detail::bivar_from_mask(e, gm), fhat)) return false;
        }
    }
    return true;
}

enum class TriState { yes, no, unknown };

namespace detail {

// Dense bivariate polynomial over F_q on a 8x16 exponent grid, same layout
// rationale as the GF(2) version above.
struct BivarQ {
    std::array<std::uint32_t, 128> a{};

    int top_term() const {  // lex, x-exponent major; -1 when zero
        for (int b = 127; b >= 0; --b)
            if (a[b]) return b;
        return -1;
    }
};

inline BivarQ bivar_q_from_coeffs(int degree, const std::vector<std::uint32_t>& coef) {
    BivarQ out;
    const auto& list = monomials(degree);
    for (std::size_t t = 0; t < list.size(); ++t)
        if (coef[t]) out.a[list[t].i * 16 + list[t].j] = coef[t];
    return out;
}

inline bool bivar_q_divides(const BivarQ& g, BivarQ f, const GF2m& fld) {
    const int ltg = g.top_term();
    const int gi = ltg / 16, gj = ltg % 16;
    const std::uint32_t lead_inv = fld.inv(g.a[ltg]);
    while (true) {
        const int ltf = f.top_term();
        if (ltf < 0) return true;
        const int fi = ltf / 16, fj = ltf % 16;
        if (fi < gi || fj < gj) return false;
        const int di = fi - gi, dj = fj - gj;
        const std::uint32_t scale = fld.mul(f.a[ltf], lead_inv);
        for (int b = 0; b <= ltg; ++b) {
            if (!g.a[b]) continue;
            const int bi = b / 16, bj = b % 16;
            if (bj + dj > 15) return false;  // cannot happen for true divisors
            const int dst = (bi + di) * 16 + (bj + dj);
            f.a[dst] = fld.add(f.a[dst], fld.mul(scale, g.a[b]));
        }
    }
}

// Does c (irreducible over GF(2), no variable factor) have a homogeneous
// factor of degree e with coefficients in fld? Scans candidates up to
// scalar, dehomogenized at z.
inline bool has_degree_e_factor_over(const PlaneCurve& c, int e, const GF2m& fld) {
    const int M = monomial_count(e);
    std::vector<std::uint32_t> fcoef(monomial_count(c.degree), 0);
    for (int t = 0; t < monomial_count(c.degree); ++t) fcoef[t] = (c.mask >> t) & 1;
    const BivarQ fhat = bivar_q_from_coeffs(c.degree, fcoef);

    std::vector<std::uint32_t> g(M, 0);
    const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < M; ++i) t *= fld.q();
        return t;
    }();
    for (std::uint64_t n = 1; n < total; ++n) {
        // odometer increment in base q
        for (int i = 0; i < M; ++i) {
            if (++g[i] < fld.q()) break;
            g[i] = 0;
        }
        // normalize: first nonzero coefficient (by monomial index) must be 1
        int first = -1;
        for (int i = 0; i < M; ++i)
            if (g[i]) { first = i; break; }
        if (first < 0 || g[first] != 1) continue;
        // skip candidates divisible by z (z does not divide f)
        bool all_z = true;
        const auto& list = monomials(e);
        for (int i = 0; i < M && all_z; ++i)
            if (g[i] && list[i].k == 0) all_z = false;
        if (all_z) continue;
        if (bivar_q_divides(bivar_q_from_coeffs(e, g), fhat, fld)) return true;
    }
    return false;
}

}  // namespace detail

// Ragot-style certificate: a simple rational point over F_{2^j} together
// with irreducibility over that same F_{2^j} proves absolute
// irreducibility. Fields are searched in the order GF(2), GF(4), GF(8).
// An F_2-irreducible form can only split over F_4 into two conjugate
// degree-d/2 factors (resp. over F_8 into three of degree d/3), so the
// extension irreducibility check scans a single factor degree, and a found
// factor settles the answer as "no".
inline TriState is_absolutely_irreducible(const PlaneCurve& c) {
    if (!is_irreducible_over_f2(c)) return TriState::no;
    const int d = c.degree;
    for (unsigned m : {1u, 2u, 3u}) {
        const auto f = make_field(m);
        std::vector<ProjPoint2> zeros;
        count_points(c, *f, &zeros);
        bool simple = false;
        for (const auto& p : zeros)
            if (is_simple_point(c, p, *f)) { simple = true; break; }
        if (!simple) continue;
        if (m == 1) return TriState::yes;
        const int orbit = (m == 2) ? 2 : 3;  // Gal(F_{2^m}/F_2) orbit size
        if (d % orbit != 0) return TriState::yes;  // cannot split over this field
        return detail::has_degree_e_factor_over(c, d / orbit, *f) ? TriState::no : TriState::yes;
    }
    return TriState::unknown;
}

// --- Full per-field report ------------------------------------------------

struct CurveReport {
    PlaneCurve curve{1, 1};
    unsigned m = 0;
    std::uint32_t q = 0;
    std::uint64_t plane_points = 0;
    std::uint64_t smooth_plane_points = 0;
    std::vector<SingularityRecord> singularities;
    long long blowup_bonus_estimate = 0;   // sum over singularities
    bool bonus_exact = true;               // false if any contribution is flagged
    std::uint64_t estimated_smooth_model_points = 0;
    long long certified_smooth_model_points = 0;  // smooth + exact bonuses only
    long long genus_lower = 0;
    long long genus_upper = 0;
    TriState abs_irreducible = TriState::unknown;
};

inline CurveReport analyze_curve(const PlaneCurve& c, const GF2m& f, bool with_irreducibility = true) {
    CurveReport r;
    r.curve = c;
    r.m = f.m();
    r.q = f.q();
    std::vector<ProjPoint2> zeros;
    r.plane_points = count_points(c, f, &zeros);
    r.singularities = singular_points(c, f, &zeros);
    r.smooth_plane_points = r.plane_points - r.singularities.size();
    long long certified = 0;
    for (const auto& s : r.singularities) {
        const auto [est, exact] = blowup_bonus(s);
        r.blowup_bonus_estimate += est;
        if (exact) certified += est;
        else r.bonus_exact = false;
    }
    r.estimated_smooth_model_points = r.smooth_plane_points + r.blowup_bonus_estimate;
    r.certified_smooth_model_points = static_cast<long long>(r.smooth_plane_points) + certified;
    r.genus_lower = serre_genus_lower(r.certified_smooth_model_points, f.q());
    r.genus_upper = plane_genus_upper(c.degree, static_cast<long long>(r.singularities.size()));
    r.abs_irreducible = with_irreducibility ? is_absolutely_irreducible(c) : TriState::unknown;
    return r;
}

}  // namespace agcodes
