#pragma once

#include "qfix/cyclotomic.hpp"

#include <optional>

namespace qfix {

/// Root of unity e^{2*pi*i*e} stored by its exponent e, a rational reduced
/// into [0, 1). The group law is addition of exponents mod 1.
struct RootExp {
    Rational e;

    RootExp() : e(0) {}
    explicit RootExp(Rational v) : e(frac_mod1(std::move(v))) {}

    static RootExp one() { return RootExp(); }

    bool is_one() const { return e == 0; }
    /// Multiplicative order: the reduced denominator of the exponent.
    long long order() const { return to_ll(rat_den(e)); }

    friend RootExp operator*(const RootExp& a, const RootExp& b) { return RootExp(a.e + b.e); }
    RootExp inv() const { return RootExp(-e); }
    RootExp pow(long long k) const { return RootExp(e * Rational(k)); }
    /// Complex conjugation.
    RootExp conj() const { return inv(); }

    friend bool operator==(const RootExp& a, const RootExp& b) { return a.e == b.e; }
    friend bool operator!=(const RootExp& a, const RootExp& b) { return a.e != b.e; }
    friend bool operator<(const RootExp& a, const RootExp& b) { return a.e < b.e; }

    std::string str() const { return is_one() ? "1" : "e(" + format_rational(e) + ")"; }
};

/// The roots of unity contained in the M-th cyclotomic field form mu_{Mt}
/// with Mt = M for even M and Mt = 2M for odd M.
inline long long roots_of_unity_order(int M) { return M % 2 == 0 ? M : 2LL * M; }

/// Smallest cyclotomic order M whose field contains a primitive q-th root of unity.
inline long long min_order_for_root(long long q) {
    if (q <= 2) return 1;
    if (q % 4 == 2) return q / 2;
    return q;
}

/// Realize e^{2*pi*i*(p/q)} inside the M-th cyclotomic field, when possible.
inline std::optional<Cyclo> embed_rootexp(const RootExp& r, int M) {
    long long q = r.order();
    long long p = to_ll(rat_num(r.e));
    if (q % 2 == 0 && M % 2 == 1) {
        // factor out -1 = e^{i*pi}: e(p/q) = -e(p/q + 1/2)
        Rational shifted = frac_mod1(r.e + Rational(1, 2));
        long long q2 = to_ll(rat_den(shifted));
        if (M % q2 != 0) return std::nullopt;
        long long p2 = to_ll(rat_num(shifted));
        return -Cyclo::zeta_pow(M, p2 * (M / q2));
    }
    if (M % q != 0) return std::nullopt;
    return Cyclo::zeta_pow(M, p * (M / q));
}

/// Exponent of a root of unity equal to the given field element, if it is one.
inline std::optional<RootExp> rootexp_of(const Cyclo& c) {
    int M = c.order();
    long long Mt = roots_of_unity_order(M);
    RootExp gen(Rational(1, Mt));
    Cyclo gc = *embed_rootexp(gen, M);
    Cyclo acc = Cyclo::one(M);
    for (long long s = 0; s < Mt; ++s) {
        if (acc == c) return RootExp(Rational(s, Mt));
        acc *= gc;
    }
    return std::nullopt;
}

}  // namespace qfix
