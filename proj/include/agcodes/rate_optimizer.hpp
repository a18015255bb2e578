// Rate/relative-distance optimization for the four code families compared
// at q=256: RS product, the P^1 x P^1 family, RS x Goppa product, and the
// elliptic-base family. Exact rational arithmetic selects table rows;
// floating point enters only through square roots, and the sign claims
// err(q, delta) < 0 are certified with outward-rounded interval arithmetic.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agcodes/rational.hpp"

namespace agcodes {

// --- Directed-rounding interval ----------------------------------------------

struct Interval {
    double lo = 0, hi = 0;

    static Interval exact(double v) { return {v, v}; }
    static Interval of_ratio(long long num, long long den) {
        const double v = double(num) / double(den);
        return {std::nextafter(v, -INFINITY), std::nextafter(v, INFINITY)};
    }
    friend Interval operator+(Interval a, Interval b) {
        return {std::nextafter(a.lo + b.lo, -INFINITY), std::nextafter(a.hi + b.hi, INFINITY)};
    }
    friend Interval operator-(Interval a, Interval b) {
        return {std::nextafter(a.lo - b.hi, -INFINITY), std::nextafter(a.hi - b.lo, INFINITY)};
    }
    friend Interval operator*(Interval a, Interval b) {
        double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        double lo = c[0], hi = c[0];
        for (double v : c) { lo = std::min(lo, v); hi = std::max(hi, v); }
        return {std::nextafter(lo, -INFINITY), std::nextafter(hi, INFINITY)};
    }
};

inline Interval interval_sqrt(Interval a) {
    if (a.lo < 0) throw std::domain_error("interval_sqrt: negative");
    return {std::nextafter(std::sqrt(a.lo), -INFINITY), std::nextafter(std::sqrt(a.hi), INFINITY)};
}

// --- err(q, delta) -----------------------------------------------------------

// err(q,d) = -2/(q^2-1) + 2 sqrt(d) (sqrt(q/(q-1)) - sqrt((q+2)/(q+1))),
// the gap between the continuous optimal rates of the RS x Goppa product
// and the elliptic-base family.
inline double err_gap(double q, double delta) {
    return -2.0 / (q * q - 1.0) +
           2.0 * std::sqrt(delta) * (std::sqrt(q / (q - 1.0)) - std::sqrt((q + 2.0) / (q + 1.0)));
}

inline Interval err_gap_interval(long long q, Interval delta) {
    const Interval c = Interval::of_ratio(-2, q * q - 1);
    const Interval qq = interval_sqrt(Interval::of_ratio(q, q - 1)) -
                        interval_sqrt(Interval::of_ratio(q + 2, q + 1));
    return c + Interval::exact(2.0) * interval_sqrt(delta) * qq;
}

// Certified err(q, delta) < 0: true only when the whole interval is negative.
inline bool certify_err_negative(long long q, double delta) {
    const Interval d{std::nextafter(delta, -INFINITY) < 0 ? 0 : std::nextafter(delta, -INFINITY),
                     std::nextafter(delta, INFINITY)};
    return err_gap_interval(q, d).hi < 0;
}

// --- Families and the best-pair search ----------------------------------------

enum class Family { rs_product, lomont1, goppa_product, lomont2 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::rs_product: return "rs-product";
        case Family::lomont1: return "lomont1";
        case Family::goppa_product: return "goppa-product";
        case Family::lomont2: return "lomont2";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    if (s == "rs-product") return Family::rs_product;
    if (s == "lomont1") return Family::lomont1;
    if (s == "goppa-product" || s == "rs-goppa") return Family::goppa_product;
    if (s == "lomont2") return Family::lomont2;
    return std::nullopt;
}

struct RatePoint {
    Family family{};
    long long p1 = 0, p2 = 0;  // (a,b) or (k1,k2)
    Rat rate, delta;
};

struct FamilyGrid {
    long long p1_max = 0, p2_max = 0;  // inclusive; p1_min = p2_min = 0
};

inline FamilyGrid family_grid(Family fam, long long q, long long aleph) {
    switch (fam) {
        case Family::rs_product: return {q - 1, q - 1};
        case Family::lomont1: return {q, q};
        case Family::goppa_product: return {q - 1, aleph - 2};
        case Family::lomont2: return {q, aleph - 1};
    }
    throw std::logic_error("family_grid");
}

// rate/delta of a parameter pair; nullopt when the pair is out of range or
// the distance bound is not positive.
inline std::optional<RatePoint> family_point(Family fam, long long q, long long aleph,
                                             long long p1, long long p2) {
    RatePoint r{fam, p1, p2, Rat(0), Rat(0)};
    switch (fam) {
        case Family::rs_product: {
            if (p1 < 1 || p2 < 1 || p1 > q - 1 || p2 > q - 1) return std::nullopt;
            const long long n = (q - 1) * (q - 1);
            r.rate = Rat(p1 * p2, n);
            r.delta = Rat((q - p1) * (q - p2), n);
            break;
        }
        case Family::lomont1: {
            if (p1 < 0 || p2 < 0 || p1 > q || p2 > q) return std::nullopt;
            const long long n = (q + 1) * (q + 1);
            r.rate = Rat((p1 + 1) * (p2 + 1), n);
            r.delta = Rat((q + 1 - p1) * (q + 1 - p2), n);
            break;
        }
        case Family::goppa_product: {
            if (p1 < 1 || p1 > q - 1 || p2 < 1 || p2 > aleph - 2) return std::nullopt;
            const long long n = (q - 1) * (aleph - 1);
            r.rate = Rat(p1 * p2, n);
            r.delta = Rat((q - p1) * (aleph - 1 - p2), n);
            break;
        }
        case Family::lomont2: {
            if (p1 < 0 || p1 > q || p2 < 1 || p2 > aleph - 1) return std::nullopt;
            const long long n = (q + 1) * aleph;
            r.rate = Rat((p1 + 1) * p2, n);
            r.delta = Rat((q + 1 - p1) * (aleph - p2), n);
            break;
        }
    }
    if (r.delta.num <= 0) return std::nullopt;
    return r;
}

// For each rate target: scan all legal pairs, keep the pair maximizing
// delta subject to rate >= target; ties go to the higher rate, then the
// lexicographically smaller pair.
inline std::vector<RatePoint> best_pair_table(long long q, long long aleph, Family fam,
                                              const std::vector<Rat>& rate_targets) {
    std::vector<RatePoint> out;
    const auto grid = family_grid(fam, q, aleph);
    for (const Rat& target : rate_targets) {
        std::optional<RatePoint> best;
        for (long long p1 = 0; p1 <= grid.p1_max; ++p1)
            for (long long p2 = 0; p2 <= grid.p2_max; ++p2) {
                const auto pt = family_point(fam, q, aleph, p1, p2);
                if (!pt || pt->rate < target) continue;
                if (!best || pt->delta > best->delta ||
                    (pt->delta == best->delta && pt->rate > best->rate) ||
                    (pt->delta == best->delta && pt->rate == best->rate &&
                     std::pair(p1, p2) < std::pair(best->p1, best->p2)))
                    best = pt;
            }
        if (!best) throw std::domain_error("best_pair_table: no feasible pair for target " +
                                           target.to_string());
        out.push_back(*best);
    }
    return out;
}

// --- Continuous optima ---------------------------------------------------------

struct Lomont2Optimum {
    double b0 = 0, a0 = 0;
    std::vector<RatePoint> candidates;  // feasible integer lattice neighbors
};

namespace detail {
// Feasibility threshold for a delta requested as a double: two picounits
// of slack so a candidate whose exact delta equals the request is never
// lost to rounding (family deltas are spaced ~1/n >> 1e-12 apart).
inline Rat delta_threshold(double delta) {
    return Rat(llround(delta * 1e12) - 2, 1000000000000LL);
}
}  // namespace detail

// b0 = aleph (1 - sqrt((q+1) delta / (q+2))), a0 from the delta constraint;
// the best integers are among the floor/ceil lattice neighbors that still
// meet the requested delta.
inline Lomont2Optimum lomont2_optimum(long long q, long long aleph, double delta) {
    if (!(delta > 0 && delta < 1)) throw std::domain_error("lomont2_optimum: need 0 < delta < 1");
    Lomont2Optimum out;
    out.b0 = aleph * (1.0 - std::sqrt((q + 1) * delta / (q + 2.0)));
    out.a0 = (q + 1) * (aleph * delta - aleph + out.b0) / (out.b0 - aleph);
    const long long fb = (long long)std::floor(out.b0), cb = (long long)std::ceil(out.b0);
    const long long fa = (long long)std::floor(out.a0), ca = (long long)std::ceil(out.a0);
    const Rat want = detail::delta_threshold(delta);
    for (auto [a, b] : {std::pair(fa, fb), std::pair(ca, fb), std::pair(fa, cb)}) {
        const auto pt = family_point(Family::lomont2, q, aleph, a, b);
        if (pt && pt->delta >= want) out.candidates.push_back(*pt);
    }
    return out;
}

struct ProductOptimum {
    double k2 = 0, k1 = 0;
    std::vector<RatePoint> candidates;
};

// k2 = (aleph-1)(1 - sqrt(((q-1) delta - 1)/q)); the radicand is negative
// for delta < 1/(q-1), which is reported as a domain error (callers fall
// back to the exhaustive integer search).
inline ProductOptimum product_optimum(long long q, long long aleph, double delta) {
    const double radicand = ((q - 1) * delta - 1.0) / q;
    if (radicand < 0)
        throw std::domain_error("product_optimum: (q-1)*delta < 1, continuous formula undefined");
    ProductOptimum out;
    out.k2 = (aleph - 1) * (1.0 - std::sqrt(radicand));
    out.k1 = (aleph - 1 - out.k2) > 0 ? q - delta * (q - 1) * (aleph - 1) / (aleph - 1 - out.k2) : 0;
    const long long f2 = (long long)std::floor(out.k2), c2 = (long long)std::ceil(out.k2);
    const long long f1 = (long long)std::floor(out.k1), c1 = (long long)std::ceil(out.k1);
    const Rat want = detail::delta_threshold(delta);
    for (auto [k1, k2] : {std::pair(f1, f2), std::pair(c1, f2), std::pair(f1, c2)}) {
        const auto pt = family_point(Family::goppa_product, q, aleph, k1, k2);
        if (pt && pt->delta >= want) out.candidates.push_back(*pt);
    }
    return out;
}

// --- Asymptotic bound utilities (not acceptance-gated) -------------------------

inline double gv_bound(double q, double delta) {
    const double theta = (q - 1) / q;
    if (delta < 0 || delta > theta) throw std::domain_error("gv_bound: delta out of [0, (q-1)/q]");
    if (delta == 0) return 1;
    auto logq = [&](double x) { return std::log(x) / std::log(q); };
    double v = 1 + delta * logq(delta) - delta * logq(q - 1);
    if (delta < 1) v += (1 - delta) * logq(1 - delta);
    return v;
}

inline double tvz_bound(double q, double delta) {
    return 1.0 - 1.0 / (std::sqrt(q) - 1.0) - delta;
}

}  // namespace agcodes
