// Feasibility bookkeeping for the blow-up code families: the lifting
// conditions on h, the intersection-number recurrence H_{i+1}.L_{i+1} =
// h^2 H_i.L_i - t_i with its closed form, and the closed form for
// m_i = sum_j L_i.C_i^j under the non-intersecting-blowup simplification
// (sum of lambda equals t at every stage). All arithmetic is exact; h^i
// escapes 64 bits almost immediately.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agcodes/bigint.hpp"

namespace agcodes {

struct FamilyConfig {
    long long q = 0;
    long long h = 0;           // lift multiplier
    long long H0L0 = 0;        // H_0 . L_0
    long long s0L0C0 = 0;      // sum over covering curves of L_0 . C_0^j (= m_0)
    long long n0 = 0;          // initial rational point count
    long long lambda_max = 0;  // most points blown up on one curve at step 0
    std::vector<long long> t;  // points blown up per step; last value repeats
};

inline long long config_t(const FamilyConfig& c, std::size_t i) {
    if (c.t.empty()) throw std::invalid_argument("FamilyConfig: t must be nonempty");
    const long long v = i < c.t.size() ? c.t[i] : c.t.back();
    if (v < 1) throw std::invalid_argument("FamilyConfig: every t_i must be >= 1");
    return v;
}

struct ConditionReport {
    bool ok = false;
    bool h_ok = false;   // h > max(q+1, lambda_max)
    bool t0_ok = false;  // t0 >= h^2 H0.L0 (the cleared form of t0/h^2 >= H0.L0)
    std::string diagnostics;
};

inline ConditionReport check_conditions(const FamilyConfig& c) {
    ConditionReport r;
    const long long bar = c.q + 1 > c.lambda_max ? c.q + 1 : c.lambda_max;
    r.h_ok = c.h > bar;
    r.t0_ok = BigInt(config_t(c, 0)) >= BigInt(c.h) * BigInt(c.h) * BigInt(c.H0L0);
    r.ok = r.h_ok && r.t0_ok;
    r.diagnostics = std::string("h > max(q+1, lambda_max): ") + (r.h_ok ? "yes" : "NO") +
                    "; t0 >= h^2*H0.L0: " + (r.t0_ok ? "yes" : "NO");
    return r;
}

// Closed form H_i.L_i = h^(2i) H0.L0 - sum_{j=0}^{i-1} (h^2)^(i-1-j) t_j.
inline BigInt hl_closed(const FamilyConfig& c, unsigned i) {
    BigInt acc = BigInt::pow(c.h, 2 * i) * BigInt(c.H0L0);
    for (unsigned j = 0; j < i; ++j)
        acc = acc - BigInt::pow(c.h, 2 * (i - 1 - j)) * BigInt(config_t(c, j));
    return acc;
}

// The step recurrence, for cross-checking the closed form.
inline std::vector<BigInt> hl_recurrence(const FamilyConfig& c, unsigned steps) {
    std::vector<BigInt> out{BigInt(c.H0L0)};
    const BigInt h2 = BigInt(c.h) * BigInt(c.h);
    for (unsigned i = 0; i < steps; ++i)
        out.push_back(h2 * out.back() - BigInt(config_t(c, i)));
    return out;
}

// Closed form for m_i (exact; the division by h-1 must leave no remainder):
// (h-1) m_i = h^i S (h-1) - t0 (h^i - 1) + sum_{k<i} t_k (h^(i-k) - 2 h^(i-k-1) + 1).
inline BigInt m_closed(const FamilyConfig& c, unsigned i) {
    if (i == 0) return BigInt(c.s0L0C0);
    if (c.h < 2) throw std::domain_error("m_closed: need h >= 2");
    if (c.h - 1 > 0xFFFFFFFFLL) throw std::domain_error("m_closed: h too large");
    BigInt acc = BigInt::pow(c.h, i) * BigInt(c.s0L0C0) * BigInt(c.h - 1);
    acc = acc - BigInt(config_t(c, 0)) * (BigInt::pow(c.h, i) - BigInt(1));
    for (unsigned k = 0; k < i; ++k) {
        const BigInt term = BigInt::pow(c.h, i - k) - BigInt(2) * BigInt::pow(c.h, i - k - 1) +
                            BigInt(1);
        acc = acc + BigInt(config_t(c, k)) * term;
    }
    const auto [q, r] = acc.divmod_small(static_cast<std::uint32_t>(c.h - 1));
    if (r != 0) throw std::logic_error("m_closed: non-integral value, formula misuse");
    return q;
}

// Independent one-step oracle: blowing up t0 points spread over the
// covering curves (no intersections) turns each L0.C0^j into
// h L0.C0^j - lambda^j and adds t0 exceptional curves of L-degree 1, so
// m_1 = h S - t0 + t0 = h S.
inline BigInt m_one_step_oracle(const FamilyConfig& c) {
    return BigInt(c.h) * BigInt(c.s0L0C0);
}

struct StepRecord {
    unsigned i = 0;
    BigInt hl;
    BigInt m;
    BigInt n;
    bool ok = false;  // 0 <= m_i < n_i
};

struct FamilyTrace {
    std::vector<StepRecord> steps;
    std::optional<unsigned> first_failure;
};

inline FamilyTrace m_sequence(const FamilyConfig& c, unsigned steps) {
    if (steps < 1) throw std::invalid_argument("m_sequence: need steps >= 1");
    FamilyTrace tr;
    BigInt n(c.n0);
    for (unsigned i = 0; i <= steps; ++i) {
        StepRecord rec;
        rec.i = i;
        rec.hl = hl_closed(c, i);
        rec.m = m_closed(c, i);
        rec.n = n;
        rec.ok = BigInt(0) <= rec.m && rec.m < rec.n;
        if (!rec.ok && !tr.first_failure) tr.first_failure = i;
        tr.steps.push_back(std::move(rec));
        n = n + BigInt(c.q + 1) * BigInt(config_t(c, i));  // n_{i+1} = n_i + t_i (q+1)
    }
    return tr;
}

}  // namespace agcodes
