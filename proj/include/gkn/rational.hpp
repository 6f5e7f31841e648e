#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gkn {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_positive_integer(const Rational& r) { return is_integer(r) && r > 0; }

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

// Accepts "a" or "a/b" with optional leading '-'.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = s[i] == '-';
        ++i;
    }
    std::string num, den = "1";
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
    if (num.empty()) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        den.clear();
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
        if (den.empty() || i != s.size()) return std::nullopt;
    }
    Rational r(num + "/" + den);
    r.canonicalize();
    if (r.get_den() == 0) return std::nullopt;
    return neg ? Rational(-r) : r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace gkn
