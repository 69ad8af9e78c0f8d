#pragma once

#include "qfix/rootexp.hpp"

#include <vector>

namespace qfix {

/// Monomial u * tau^v over the Laurent-series model: u is a root of unity and
/// v a rational valuation (fractional valuations live in totally ramified
/// extensions of C((tau))). Zero is not representable; monomials model
/// elements of the unit group. Elements of F = C((t)) with t^n = tau carry
/// valuations in (1/n)Z.
struct Monomial {
    RootExp coeff;
    Rational val;

    Monomial() : coeff(), val(0) {}
    Monomial(RootExp c, Rational v) : coeff(c), val(std::move(v)) {}

    static Monomial one() { return Monomial(); }
    static Monomial tau_pow(const Rational& v) { return Monomial(RootExp(), v); }
    static Monomial root_of_unity(const Rational& exp) { return Monomial(RootExp(exp), Rational(0)); }

    bool is_one() const { return coeff.is_one() && val == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial(a.coeff * b.coeff, a.val + b.val);
    }
    Monomial inv() const { return Monomial(coeff.inv(), -val); }
    friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inv(); }
    Monomial pow(long long k) const { return Monomial(coeff.pow(k), val * Rational(k)); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.coeff == b.coeff && a.val == b.val;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.val != b.val) return a.val < b.val;
        return a.coeff < b.coeff;
    }

    std::string str() const {
        if (val == 0) return coeff.str();
        std::string t = "tau^(" + format_rational(val) + ")";
        if (coeff.is_one()) return t;
        return coeff.str() + "*" + t;
    }
};

/// All r-th roots of x: coefficient exponents (e + j)/r for j = 0..r-1 and
/// valuation val/r, ordered by j.
inline std::vector<Monomial> monomial_roots(const Monomial& x, long long r) {
    if (r < 1) throw std::invalid_argument("monomial_roots: r >= 1 required");
    std::vector<Monomial> roots;
    roots.reserve(static_cast<size_t>(r));
    for (long long j = 0; j < r; ++j)
        roots.emplace_back(RootExp((x.coeff.e + Rational(j)) / Rational(r)), x.val / Rational(r));
    return roots;
}

/// Action of the order-n automorphism t -> zeta_n * t on F = C((t)), t^n = tau.
/// On u * t^a this multiplies the coefficient by zeta_n^a = e^{2*pi*i*val_tau}.
inline Monomial zeta_action(const Monomial& x) { return Monomial(x.coeff * RootExp(x.val), x.val); }

/// Norm from F = C((t)) (t^n = tau) down to k = C((tau)): the product of the
/// n conjugates zeta^j(x). For x = u * t^s (s the t-adic valuation) this is
/// u^n * zeta_n^{s n (n-1)/2} * tau^s.
inline Monomial norm_F_over_k(const Monomial& x, long long n) {
    Rational s_t = x.val * Rational(n);  // valuation in t-units
    if (!is_integer(s_t))
        throw std::invalid_argument("norm_F_over_k: x must lie in F (t-integral valuation)");
    RootExp c = x.coeff.pow(n) * RootExp(x.val * Rational(n * (n - 1), 2));
    return Monomial(c, s_t);
}

/// t -> -t on F; multiplies u * t^a by (-1)^a.
inline Monomial sigma_minus_t(const Monomial& x, long long n) {
    return Monomial(x.coeff * RootExp(x.val * Rational(n, 2)), x.val);
}

/// Extension of tau -> -tau to monomials with fractional valuation (any
/// choice of extension gives the same Galois orbits).
inline Monomial sigma_k_nontrivial_ext(const Monomial& x) {
    return Monomial(x.coeff * RootExp(x.val / Rational(2)), x.val);
}

}  // namespace qfix
