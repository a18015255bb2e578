// Rank and degree bookkeeping for tensor and symmetric powers of vector
// bundles on a curve, plus the binomial conventions the parameter
// calculators rely on.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace agcodes {

struct BundleDescriptor {
    long long rank = 1;
    long long degree = 0;
};

// Binomial coefficient with the k<0 -> 0 convention, integer arguments only.
inline long long binom(long long r, long long k) {
    if (k < 0) return 0;
    if (r < 0) throw std::domain_error("binom: negative upper argument unsupported");
    if (k > r) return 0;
    if (k > r - k) k = r - k;
    long long acc = 1;
    for (long long i = 1; i <= k; ++i) acc = acc * (r - k + i) / i;
    return acc;
}

// deg(E (x) F) = rank(F) deg(E) + rank(E) deg(F).
inline long long tensor_degree(const BundleDescriptor& e, const BundleDescriptor& f) {
    return f.rank * e.degree + e.rank * f.degree;
}

// rank S^n(E) = C(n+r-1, r-1), the number of degree-n monomials in r variables.
inline long long symm_rank(long long n, long long r) {
    if (n < 0 || r < 1) throw std::domain_error("symm_rank: need n >= 0, r >= 1");
    return binom(n + r - 1, r - 1);
}

// deg S^n(E) = (d n / r) C(n+r-1, r-1); the quotient is always integral,
// asserted here rather than assumed.
inline long long symm_degree(long long n, long long r, long long d) {
    if (n < 0 || r < 1) throw std::domain_error("symm_degree: need n >= 0, r >= 1");
    const long long num = d * n * symm_rank(n, r);
    if (num % r != 0) throw std::logic_error("symm_degree: non-integral result");
    return num / r;
}

// Any decomposition S^n(F_r) = (+) F_{r_i} must satisfy sum r_i = rank S^n(F_r).
inline bool atiyah_rank_sum_check(long long n, long long r, const std::vector<long long>& parts) {
    long long sum = 0;
    for (long long p : parts) {
        if (p < 1) throw std::invalid_argument("atiyah_rank_sum_check: ranks must be >= 1");
        sum += p;
    }
    return sum == symm_rank(n, r);
}

}  // namespace agcodes
