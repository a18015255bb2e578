// Exact rational arithmetic for rates and relative distances. Numerators
// stay below 2^47 in every use here (largest denominator is a code length
// squared), so int64 storage with __int128 cross-multiplication is exact.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace agcodes {

struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator<=(Rat a, Rat b) { return !(b < a); }
    friend bool operator>=(Rat a, Rat b) { return !(a < b); }

    double to_double() const { return double(num) / double(den); }

    long long ceil_ll() const {
        const long long q = num / den, r = num % den;
        return q + (r > 0 ? 1 : 0);
    }
    long long floor_ll() const {
        const long long q = num / den, r = num % den;
        return q - (r < 0 ? 1 : 0);
    }

    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Decimal rendering with the given number of significant figures (round to
// nearest), enough for reproducing printed table values.
inline std::string to_decimal(const Rat& r, int sig_figs = 6) {
    if (r.num == 0) return "0";
    const bool neg = r.num < 0;
    unsigned long long n = neg ? -(unsigned long long)r.num : (unsigned long long)r.num;
    const unsigned long long d = r.den;
    // exponent of the leading digit
    int exp10 = 0;
    {
        __int128 nn = n, dd = d;
        while (nn < dd) { nn *= 10; --exp10; }
        while (nn >= 10 * dd) { dd *= 10; ++exp10; }
    }
    // digits = round(n/d * 10^(sig_figs-1-exp10))
    __int128 num = n, den = d;
    int shift = sig_figs - 1 - exp10;
    for (int i = 0; i < shift; ++i) num *= 10;
    for (int i = 0; i < -shift; ++i) den *= 10;
    __int128 digits = (2 * num + den) / (2 * den);  // round half up
    std::string ds;
    while (digits > 0) { ds.insert(ds.begin(), char('0' + int(digits % 10))); digits /= 10; }
    if ((int)ds.size() > sig_figs) { ++exp10; ds.pop_back(); }  // rounding carried over
    // place the decimal point at exp10
    std::string out;
    if (exp10 >= (int)ds.size() - 1 && exp10 >= 0) {
        out = ds;
        out.append(exp10 - ds.size() + 1, '0');
    } else if (exp10 >= 0) {
        out = ds.substr(0, exp10 + 1) + "." + ds.substr(exp10 + 1);
    } else {
        out = "0.";
        out.append(-exp10 - 1, '0');
        out += ds;
    }
    // trim trailing zeros after a decimal point
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return (neg ? "-" : "") + out;
}

}  // namespace agcodes
