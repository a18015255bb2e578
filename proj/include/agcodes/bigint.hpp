// Minimal signed arbitrary-precision integer, enough for the blow-up
// recurrences where h^(2i) overflows 64 bits after a few steps. Little-
// endian 32-bit limbs, schoolbook multiplication.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace agcodes {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        neg_ = v < 0;
        unsigned long long u = neg_ ? -static_cast<unsigned long long>(v) : v;
        while (u) { limbs_.push_back(std::uint32_t(u)); u >>= 32; }
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_ && !r.limbs_.empty();
            return r;
        }
        const int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) { r.limbs_ = sub_mag(a.limbs_, b.limbs_); r.neg_ = a.neg_; }
        else { r.limbs_ = sub_mag(b.limbs_, a.limbs_); r.neg_ = b.neg_; }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt nb = b;
        if (!nb.is_zero()) nb.neg_ = !nb.neg_;
        return a + nb;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                const std::uint64_t cur = std::uint64_t(a.limbs_[i]) * b.limbs_[j] +
                                          r.limbs_[i + j] + carry;
                r.limbs_[i + j] = std::uint32_t(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                const std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = std::uint32_t(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    // Quotient and remainder by a positive machine integer; remainder
    // carries the dividend's sign convention |r| < d with a = q*d + r.
    std::pair<BigInt, long long> divmod_small(std::uint32_t d) const {
        if (d == 0) throw std::domain_error("BigInt: division by zero");
        BigInt q;
        q.limbs_.assign(limbs_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | limbs_[i];
            q.limbs_[i] = std::uint32_t(cur / d);
            rem = cur % d;
        }
        q.trim();
        q.neg_ = neg_ && !q.limbs_.empty();
        return {q, neg_ ? -static_cast<long long>(rem) : static_cast<long long>(rem)};
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        const int c = cmp_mag(a.limbs_, b.limbs_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        BigInt cur = *this;
        cur.neg_ = false;
        while (!cur.is_zero()) {
            auto [q, r] = cur.divmod_small(1000000000u);
            std::string chunk = std::to_string(r);
            cur = q;
            if (cur.is_zero()) out = chunk + out;
            else out = std::string(9 - chunk.size(), '0') + chunk + out;
        }
        return (neg_ ? "-" : "") + out;
    }

    static BigInt pow(long long base, unsigned e) {
        BigInt r(1), b(base);
        for (unsigned i = 0; i < e; ++i) r = r * b;
        return r;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = std::uint32_t(cur);
            carry = cur >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = std::int64_t(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (std::int64_t(1) << 32);
            r[i] = std::uint32_t(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    std::vector<std::uint32_t> limbs_;  // little-endian magnitude
    bool neg_ = false;
};

}  // namespace agcodes
