#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qfix {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

/// Largest integer <= r.
inline BigInt rat_floor(const Rational& r) {
    BigInt q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

/// Fractional part in [0, 1).
inline Rational frac_mod1(const Rational& r) { return r - Rational(rat_floor(r)); }

inline long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

/// Parses "p/q" or "p" (q > 0 after normalization).
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

inline std::string format_rational(const Rational& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) s += "/" + rat_den(r).str();
    return s;
}

/// Integer power with nonnegative exponent.
inline Rational rat_pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0 has no negative power");
        return Rational(1) / rat_pow(base, -e);
    }
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

/// Reduction of a rational mod a prime p; nullopt if the denominator vanishes mod p.
inline std::optional<std::uint64_t> rational_mod(const Rational& r, std::uint64_t p) {
    BigInt bp(p);
    BigInt n = rat_num(r) % bp;
    if (n < 0) n += bp;
    BigInt d = rat_den(r) % bp;
    if (d == 0) return std::nullopt;
    // Fermat inverse.
    std::uint64_t dv = d.convert_to<std::uint64_t>();
    std::uint64_t inv = 1, base = dv;
    std::uint64_t e = p - 2;
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    while (e) {
        if (e & 1) inv = mulmod(inv, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    return mulmod(n.convert_to<std::uint64_t>(), inv);
}

}  // namespace qfix
