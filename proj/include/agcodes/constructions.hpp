// The concrete code families: extended Reed-Solomon on P^1, direct product
// codes, the explicit P^1 x P^1 family ("Lomont code #1") with its
// generator matrix, parameter calculators for the general ruled-surface
// construction, decomposable bundles, the elliptic degree-0 family
// ("Lomont code #2", parameters only), genus-1 Goppa parameters, and the
// normalization guard that rejects the classical counterexample inputs.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agcodes/bundle.hpp"
#include "agcodes/linear_code.hpp"
#include "agcodes/projective.hpp"
#include "agcodes/rational.hpp"

namespace agcodes {

// Extended RS: evaluate s^i t^(k-1-i), i = 0..k-1, at all q+1 points of
// P^1. MDS with parameters [q+1, k, q+2-k].
inline GeneratorMatrix extended_rs(std::shared_ptr<const GF2m> field, std::size_t k) {
    const std::uint32_t q = field->q();
    if (k < 1 || k > q + 1) throw std::invalid_argument("extended_rs: need 1 <= k <= q+1");
    const auto pts = enumerate_p1(*field);
    std::vector<std::uint32_t> e;
    e.reserve(k * pts.size());
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& p : pts)
            e.push_back(field->mul(field->pow(p.s, i), field->pow(p.t, k - 1 - i)));
    return make_generator_matrix(std::move(field), k, pts.size(), std::move(e));
}

// Rows indexed by (i,j), columns by (u,v): entry = G1[i,u] * G2[j,v].
inline GeneratorMatrix product_code(const GeneratorMatrix& g1, const GeneratorMatrix& g2) {
    if (!(*g1.field == *g2.field)) throw std::invalid_argument("product_code: field mismatch");
    const GF2m& f = *g1.field;
    GeneratorMatrix g;
    g.field = g1.field;
    g.k = g1.k * g2.k;
    g.n = g1.n * g2.n;
    g.e.resize(g.k * g.n);
    for (std::size_t i = 0; i < g1.k; ++i)
        for (std::size_t j = 0; j < g2.k; ++j)
            for (std::size_t u = 0; u < g1.n; ++u)
                for (std::size_t v = 0; v < g2.n; ++v)
                    g.e[(i * g2.k + j) * g.n + (u * g2.n + v)] = f.mul(g1.at(i, u), g2.at(j, v));
    // product of full-rank factors is full rank; validate anyway
    return make_generator_matrix(g.field, g.k, g.n, std::move(g.e));
}

// Explicit generator matrix on P^1 x P^1: rows are the bihomogeneous
// monomials s^i t^(a-i) u^j v^(b-j), columns all (q+1)^2 point pairs in
// enumeration order (first factor major).
inline GeneratorMatrix lomont1_generator(std::shared_ptr<const GF2m> field, long long a, long long b) {
    const long long q = field->q();
    if (a < 0 || b < 0 || a >= q + 1 || b >= q + 1)
        throw std::invalid_argument("lomont1_generator: need 0 <= a,b < q+1");
    const auto pts = enumerate_p1(*field);
    const std::size_t k = std::size_t(a + 1) * std::size_t(b + 1);
    const std::size_t n = pts.size() * pts.size();
    std::vector<std::uint32_t> e;
    e.reserve(k * n);
    for (long long i = 0; i <= a; ++i)
        for (long long j = 0; j <= b; ++j)
            for (const auto& p : pts)
                for (const auto& r : pts) {
                    const std::uint32_t left =
                        field->mul(field->pow(p.s, i), field->pow(p.t, a - i));
                    const std::uint32_t right =
                        field->mul(field->pow(r.s, j), field->pow(r.t, b - j));
                    e.push_back(field->mul(left, right));
                }
    return make_generator_matrix(std::move(field), k, n, std::move(e));
}

// Parameters of the P^1 family for normalized invariant e >= 0:
// n = (q+1)^2, k = sum over j >= 0 with j <= a, j*e <= b of (b - j*e + 1),
// d >= (q+1-a)(q+1-b). The bound must be positive for the germ map to be
// injective.
inline CodeParams lomont1_params(long long q, long long a, long long b, long long e) {
    if (a < 0 || b < 0 || a >= q + 1 || b >= q + 1)
        throw std::invalid_argument("lomont1_params: need 0 <= a,b < q+1");
    if (e < 0) throw std::invalid_argument("lomont1_params: need e >= 0");
    const long long n = (q + 1) * (q + 1);
    long long k = 0;
    for (long long j = 0; j <= a && j * e <= b; ++j) k += b - j * e + 1;
    const long long d = (q + 1 - a) * (q + 1 - b);
    if (d <= 0) throw std::invalid_argument("lomont1_params: distance bound not positive");
    return make_code_params(n, k, d, /*d_exact=*/false);
}

// --- General ruled-surface parameters --------------------------------------

struct RuledInputs {
    long long q = 0;
    long long g = 0;       // base curve genus
    long long aleph = 0;   // #C(F_q)
    long long e = 0;       // normalized invariant, e >= -g
    long long a = 0, b = 0;
    long long p = 2;       // characteristic
    bool ample = false;
};

struct RuledParams {
    long long n = 0;
    long long d_bound = 0;
    long long l = 0;
    long long kappa_ceil = 0;
    std::optional<long long> k;  // only when a specialized dimension formula applies
    std::string k_note;
};

// Positivity threshold kappa of the ampleness criterion, exact rational.
inline Rat ruled_kappa(long long e, long long g, long long p) {
    if (e >= 0) return Rat(e);
    if (g < 2) return Rat(e, 2);
    return Rat(e, 2) + Rat(g - 1, p);
}

inline RuledParams ruled_params(const RuledInputs& in) {
    if (in.a < 0 || in.b < 0) throw std::invalid_argument("ruled_params: need a, b >= 0");
    if (in.aleph < 1) throw std::invalid_argument("ruled_params: need aleph >= 1");
    if (in.e < -in.g)
        throw std::invalid_argument("ruled_params: e = " + std::to_string(in.e) +
                                    " violates e >= -g (unnormalized bundle)");
    RuledParams out;
    out.kappa_ceil = ruled_kappa(in.e, in.g, in.p).ceil_ll();
    out.l = in.ample ? in.b - in.a * in.e : in.a * (out.kappa_ceil - in.e) + in.b;
    if (out.l >= in.aleph)
        throw std::invalid_argument("ruled_params: l >= aleph, no code guaranteed");
    out.n = (in.q + 1) * in.aleph;
    out.d_bound = out.n - (in.aleph - out.l) * in.a - (in.q + 1) * out.l;
    if (out.d_bound <= 0)
        throw std::invalid_argument("ruled_params: distance bound not positive");
    out.k_note = "requires h^0(Sym^a(E) (x) O(b P0))";
    return out;
}

// --- Decomposable bundles over a genus-g curve ------------------------------

struct DecomposableParams {
    long long n = 0;
    long long k = 0;  // certified terms exactly, uncertified terms by their lower bound
    bool k_is_lower_bound = false;
    long long uncertified_terms = 0;
    long long d_bound = 0;
};

// k = sum over j (0 <= j <= a, j e <= b) of (b - j e) - g + 1 + zeta_j,
// with zeta_j = 0 certified exactly when deg = b - j e > 2g - 2
// (Riemann-Roch vanishing); other terms contribute max(deg - g + 1, 0) and
// flag the total as a lower bound.
inline DecomposableParams decomposable_params(long long q, long long g, long long e,
                                              long long aleph, long long a, long long b) {
    if (e < 0) throw std::invalid_argument("decomposable_params: need e >= 0");
    if (a < 0 || b < 0 || b >= aleph)
        throw std::invalid_argument("decomposable_params: need a >= 0, 0 <= b < aleph");
    DecomposableParams out;
    out.n = aleph * (q + 1);
    out.d_bound = (q + 1 - a) * (aleph - b);
    if (out.d_bound <= 0)
        throw std::invalid_argument("decomposable_params: distance bound not positive");
    for (long long j = 0; j <= a && j * e <= b; ++j) {
        const long long deg = b - j * e;
        if (deg > 2 * g - 2) {
            out.k += deg - g + 1;
        } else {
            const long long lower = deg - g + 1;
            out.k += lower > 0 ? lower : 0;
            out.k_is_lower_bound = true;
            ++out.uncertified_terms;
        }
    }
    return out;
}

// --- Elliptic base, degree-0 indecomposable bundle (parameters only) -------

// n = (q+1) aleph, k = (a+1) b, d >= (q+1-a)(aleph-b). The dimension comes
// from the symmetric-power decomposition rank sum (a+1 summands of F_{r_i},
// each contributing r_i * b sections).
inline CodeParams lomont2_params(long long q, long long aleph, long long a, long long b) {
    if (b <= 0 || b >= aleph)
        throw std::invalid_argument("lomont2_params: need 0 < b < aleph (b=0 dimension is not covered)");
    if (a < 0 || a >= q + 1) throw std::invalid_argument("lomont2_params: need 0 <= a < q+1");
    const long long n = (q + 1) * aleph;
    const long long k = symm_rank(a, 2) * b;  // (a+1) b
    const long long d = (q + 1 - a) * (aleph - b);
    if (d <= 0) throw std::invalid_argument("lomont2_params: distance bound not positive");
    return make_code_params(n, k, d, /*d_exact=*/false);
}

// Genus-1 Goppa parameter triple [aleph-1, k2, aleph-1-k2] (no matrix).
inline CodeParams goppa_params(long long aleph, long long k2) {
    if (k2 <= 0 || k2 >= aleph - 1)
        throw std::invalid_argument("goppa_params: need 0 < k2 < aleph-1");
    return make_code_params(aleph - 1, k2, aleph - 1 - k2, /*d_exact=*/false);
}

// --- Normalization guard ----------------------------------------------------

// Input O(t) (+) O(u) over P^1 (t >= u). Accepted only in normalized
// presentation (t = 0). Otherwise demonstrates why the dimension formula
// must not be applied to unnormalized degrees: the naive k grows with t
// while n stays fixed, and for concrete (a,b) the claimed parameters can
// violate the Singleton bound outright.
struct GuardReport {
    long long t = 0, u = 0;
    long long raw_det_degree = 0;  // deg of the determinant bundle, t+u
    long long raw_e = 0;           // -(t+u) on the raw input
    long long normalized_e = 0;    // t-u after normalizing
    bool accepted = false;
    bool unbounded_k = false;        // naive k grows without bound in t
    bool singleton_violation = false;  // some (a,b) yields k+d > n+1 (or k > n)
    long long witness_a = -1, witness_b = -1, witness_k = 0, witness_d = 0;
    std::string reason;
};

inline GuardReport counterexample_guard(long long q, long long t, long long u) {
    if (t < u) throw std::invalid_argument("counterexample_guard: need t >= u");
    GuardReport r;
    r.t = t;
    r.u = u;
    r.raw_det_degree = t + u;
    r.raw_e = -(t + u);
    r.normalized_e = t - u;
    if (t == 0) {
        r.accepted = true;
        return r;
    }
    r.accepted = false;
    r.unbounded_k = true;  // the j=0 summand alone is a*t + b + 1
    if (r.raw_e < 0)
        r.reason = "rejected: unnormalized (raw e = " + std::to_string(r.raw_e) +
                   " violates e >= -g = 0)";
    else
        r.reason = "rejected: unnormalized (t > 0: k is not an invariant of the surface)";
    const long long n = (q + 1) * (q + 1);
    for (long long a = 0; a <= q && !r.singleton_violation; ++a)
        for (long long b = 0; b <= q; ++b) {
            long long k = 0;
            for (long long j = 0; j <= a; ++j)
                if (a * t + j * (u - t) + b >= 0) k += a * t + j * (u - t) + b + 1;
            const long long d = (q + 1 - a) * (q + 1 - b);
            if (d <= 0) continue;
            if (k > n || k + d > n + 1) {
                r.singleton_violation = true;
                r.witness_a = a;
                r.witness_b = b;
                r.witness_k = k;
                r.witness_d = d;
                break;
            }
        }
    return r;
}

}  // namespace agcodes
