// Arithmetic in GF(2^m) for m = 1..11 (the fields F_2 .. F_2048).
//
// Elements are stored in the polynomial basis as bit patterns < 2^m. The
// reduction polynomial is the lexicographically smallest monic irreducible
// of its degree, found by exhaustive trial division, so every run and every
// implementation built on this header agrees bit-for-bit. Multiplication and
// inversion run off log/antilog tables built from the smallest primitive
// element (for some reduction polynomials x itself is not primitive, e.g.
// the smallest irreducible octic).

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace agcodes {

namespace gf2 {

// Polynomials over GF(2) packed into integers, bit i = coefficient of x^i.
inline int degree(std::uint64_t p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t b) {
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
    return a;
}

inline bool is_irreducible(std::uint64_t f) {
    const int d = degree(f);
    if (d <= 0) return false;
    for (std::uint64_t g = 2; degree(g) <= d / 2; ++g)
        if (mod(f, g) == 0) return false;
    return true;
}

// Smallest (by bit value) monic irreducible of degree m.
inline std::uint64_t smallest_irreducible(unsigned m) {
    for (std::uint64_t f = std::uint64_t(1) << m; f < std::uint64_t(1) << (m + 1); ++f)
        if (is_irreducible(f)) return f;
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

inline std::string poly_to_string(std::uint64_t p) {
    if (p == 0) return "0";
    std::string s;
    for (int i = degree(p); i >= 0; --i) {
        if (!((p >> i) & 1)) continue;
        if (!s.empty()) s += "+";
        if (i == 0) s += "1";
        else if (i == 1) s += "x";
        else s += "x^" + std::to_string(i);
    }
    return s;
}

}  // namespace gf2

inline constexpr unsigned kMaxExtensionDegree = 11;
inline constexpr unsigned kMaxPowerExponent = 6;  // largest curve degree handled

// Immutable arithmetic context for GF(2^m). Safe to share across threads
// once constructed; all operations are const.
class GF2m {
public:
    explicit GF2m(unsigned m) : m_(m) {
        if (m < 1 || m > kMaxExtensionDegree)
            throw std::out_of_range("GF2m: extension degree must be in 1..11");
        q_ = 1u << m;
        reduction_ = static_cast<std::uint32_t>(gf2::smallest_irreducible(m));
        build_tables();
        build_pow_tables();
        build_trace_table();
    }

    unsigned m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t reduction_mask() const { return reduction_; }
    std::string reduction_string() const { return gf2::poly_to_string(reduction_); }
    std::uint32_t generator() const { return generator_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("GF2m: inversion of zero");
        return antilog_[(q_ - 1) - log_[a]];
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    // Square-and-multiply; negative exponents go through the inverse.
    std::uint32_t pow(std::uint32_t a, long long e) const {
        if (e < 0) return pow(inv(a), -e);
        if (a == 0) return e == 0 ? 1u : 0u;
        std::uint32_t base = a, r = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // x^e for e <= kMaxPowerExponent via precomputed tables (hot path of
    // curve evaluation).
    std::uint32_t pow_tab(unsigned e, std::uint32_t x) const { return pow_[e][x]; }

    // Trace map GF(2^m) -> GF(2).
    std::uint32_t trace(std::uint32_t a) const { return trace_[a]; }

    std::uint32_t log(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("GF2m: log of zero");
        return log_[a];
    }
    std::uint32_t antilog(std::uint32_t e) const { return antilog_[e % (q_ - 1)]; }

    // Schoolbook product reduced mod the reduction polynomial. Table-free;
    // used to build the tables and as an independent cross-check in tests.
    std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(gf2::mod(gf2::mul(a, b), reduction_));
    }

    // All q elements in bit-value order 0,1,...,q-1.
    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> v(q_);
        for (std::uint32_t i = 0; i < q_; ++i) v[i] = i;
        return v;
    }

    bool operator==(const GF2m& o) const { return m_ == o.m_; }

private:
    void build_tables() {
        // Find the smallest primitive element by order computation.
        generator_ = 0;
        for (std::uint32_t g = 1; g < q_; ++g) {
            std::uint32_t acc = g, order = 1;
            while (acc != 1) {
                acc = mul_schoolbook(acc, g);
                ++order;
                if (order > q_) throw std::logic_error("GF2m: reduction polynomial not irreducible");
            }
            if (order == q_ - 1) { generator_ = g; break; }
        }
        if (generator_ == 0) throw std::logic_error("GF2m: no primitive element found");

        log_.assign(q_, 0);
        antilog_.assign(2 * (q_ - 1), 0);  // doubled so mul can skip the mod
        std::vector<bool> seen(q_, false);
        std::uint32_t acc = 1;
        for (std::uint32_t e = 0; e < q_ - 1; ++e) {
            antilog_[e] = acc;
            antilog_[e + (q_ - 1)] = acc;
            log_[acc] = e;
            if (seen[acc]) throw std::logic_error("GF2m: antilog table collision");
            seen[acc] = true;
            acc = mul_schoolbook(acc, generator_);
        }
        if (acc != 1) throw std::logic_error("GF2m: generator order mismatch");
        // Mandatory round-trip validation.
        for (std::uint32_t a = 1; a < q_; ++a)
            if (antilog_[log_[a]] != a) throw std::logic_error("GF2m: log/antilog round trip failed");
    }

    void build_pow_tables() {
        pow_.assign(kMaxPowerExponent + 1, std::vector<std::uint32_t>(q_));
        for (std::uint32_t x = 0; x < q_; ++x) pow_[0][x] = 1;
        for (unsigned e = 1; e <= kMaxPowerExponent; ++e)
            for (std::uint32_t x = 0; x < q_; ++x) pow_[e][x] = mul_schoolbook(pow_[e - 1][x], x);
    }

    void build_trace_table() {
        trace_.assign(q_, 0);
        for (std::uint32_t x = 0; x < q_; ++x) {
            std::uint32_t acc = x, t = 0;
            for (unsigned i = 0; i < m_; ++i) {
                t ^= acc;
                acc = mul_schoolbook(acc, acc);
            }
            trace_[x] = t;  // lands in {0,1}
        }
    }

    unsigned m_;
    std::uint32_t q_ = 0;
    std::uint32_t reduction_ = 0;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> log_, antilog_, trace_;
    std::vector<std::vector<std::uint32_t>> pow_;
};

// Shared per-degree field registry. Fields are immutable, so one instance
// per m serves the whole process.
inline std::shared_ptr<const GF2m> make_field(unsigned m) {
    static std::mutex mu;
    static std::shared_ptr<const GF2m> cache[kMaxExtensionDegree + 1];
    if (m < 1 || m > kMaxExtensionDegree)
        throw std::out_of_range("make_field: extension degree must be in 1..11");
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[m]) cache[m] = std::make_shared<const GF2m>(m);
    return cache[m];
}

// Checked element wrapper: carries its field so cross-field operations are
// caught instead of silently producing garbage.
struct FieldElement {
    const GF2m* field = nullptr;
    std::uint32_t bits = 0;

    FieldElement() = default;
    FieldElement(const GF2m& f, std::uint32_t b) : field(&f), bits(b) {
        if (b >= f.q()) throw std::invalid_argument("FieldElement: bits out of range");
    }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check(a, b);
        return FieldElement(*a.field, a.field->add(a.bits, b.bits));
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check(a, b);
        return FieldElement(*a.field, a.field->mul(a.bits, b.bits));
    }
    friend bool operator==(FieldElement a, FieldElement b) {
        check(a, b);
        return a.bits == b.bits;
    }
    FieldElement inverse() const { return FieldElement(*field, field->inv(bits)); }
    FieldElement pow(long long e) const { return FieldElement(*field, field->pow(bits, e)); }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.field == nullptr || b.field == nullptr || !(*a.field == *b.field))
            throw std::invalid_argument("FieldElement: operands from different fields");
    }
};

}  // namespace agcodes
