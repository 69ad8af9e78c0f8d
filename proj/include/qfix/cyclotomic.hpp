#pragma once

#include "qfix/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace qfix {

inline int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<int> divisors_of(int m) {
    std::vector<int> ds;
    for (int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            ds.push_back(d);
            if (d != m / d) ds.push_back(m / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Exact division of integer polynomials, quotient only; requires divisor monic
/// and the division to be exact.
inline std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<BigInt> q(dn - dd + 1, BigInt(0));
    for (int k = dn - dd; k >= 0; --k) {
        BigInt c = num[k + dd];
        q[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (int j = 0; j < dd; ++j)
        if (num[j] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

/// Coefficients of the M-th cyclotomic polynomial, degree-ascending, monic.
/// Computed by dividing x^M - 1 by the cyclotomic polynomials of proper divisors.
inline std::vector<BigInt> cyclotomic_polynomial(int M) {
    if (M < 1) throw std::invalid_argument("cyclotomic_polynomial: M >= 1 required");
    std::vector<BigInt> num(M + 1, BigInt(0));
    num[0] = -1;
    num[M] = 1;
    for (int d : divisors_of(M)) {
        if (d == M) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

/// Shared per-order data: the modulus polynomial and the table of reduced
/// powers of the primitive root, used for multiplication folding and
/// Galois substitutions.
struct CycloField {
    int M = 1;
    int phi = 1;
    std::vector<BigInt> poly;                     // Phi_M, degree-ascending, monic
    std::vector<std::vector<Rational>> zpow;      // zpow[j] = coords of zeta^j, j in [0, M)

    static const CycloField& get(int M) {
        static std::map<int, std::unique_ptr<CycloField>> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(M);
        if (it != cache.end()) return *it->second;
        auto f = std::make_unique<CycloField>();
        f->M = M;
        f->phi = euler_phi(M);
        f->poly = cyclotomic_polynomial(M);
        f->zpow.resize(M);
        std::vector<Rational> cur(f->phi, Rational(0));
        cur[0] = 1;
        for (int j = 0; j < M; ++j) {
            f->zpow[j] = cur;
            // multiply by zeta: shift and fold the top coefficient through Phi_M
            Rational top = cur[f->phi - 1];
            for (int a = f->phi - 1; a > 0; --a) cur[a] = cur[a - 1];
            cur[0] = 0;
            if (top != 0)
                for (int a = 0; a < f->phi; ++a) cur[a] -= top * Rational(f->poly[a]);
        }
        auto& ref = *f;
        cache.emplace(M, std::move(f));
        return ref;
    }
};

/// Element of the M-th cyclotomic field, stored as rational coordinates on the
/// power basis 1, zeta, ..., zeta^{phi(M)-1} reduced mod Phi_M.
class Cyclo {
public:
    Cyclo() : M_(1), c_(1, Rational(0)) {}
    Cyclo(int M, std::vector<Rational> coeffs) : M_(M), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != euler_phi(M_))
            throw std::invalid_argument("Cyclo: coefficient count must equal phi(M)");
    }

    static Cyclo zero(int M) { return Cyclo(M, std::vector<Rational>(euler_phi(M), Rational(0))); }
    static Cyclo one(int M) { return from_rational(M, Rational(1)); }
    static Cyclo from_rational(int M, const Rational& r) {
        auto v = std::vector<Rational>(euler_phi(M), Rational(0));
        v[0] = r;
        return Cyclo(M, std::move(v));
    }
    /// zeta_M^j.
    static Cyclo zeta_pow(int M, long long j) {
        j %= M;
        if (j < 0) j += M;
        return Cyclo(M, CycloField::get(M).zpow[static_cast<size_t>(j)]);
    }
    static Cyclo zeta(int M) { return zeta_pow(M, 1); }

    int order() const { return M_; }
    int phi() const { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t a = 1; a < c_.size(); ++a)
            if (c_[a] != 0) return false;
        return true;
    }
    Rational rational_part() const { return c_[0]; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.M_ == b.M_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        a.require_same(b);
        Cyclo r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        a.require_same(b);
        Cyclo r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend Cyclo operator-(const Cyclo& a) {
        Cyclo r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        a.require_same(b);
        const auto& F = CycloField::get(a.M_);
        const int phi = F.phi;
        std::vector<Rational> prod(2 * phi - 1, Rational(0));
        for (int i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < phi; ++j) {
                if (b.c_[j] == 0) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        // fold degrees >= phi through the monic modulus
        for (int k = 2 * phi - 2; k >= phi; --k) {
            Rational top = prod[k];
            if (top == 0) continue;
            prod[k] = 0;
            for (int a2 = 0; a2 < phi; ++a2) prod[k - phi + a2] -= top * Rational(F.poly[a2]);
        }
        prod.resize(phi);
        return Cyclo(a.M_, std::move(prod));
    }
    friend Cyclo operator*(const Rational& s, const Cyclo& a) {
        Cyclo r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x] mod Phi_M.
    Cyclo inv() const {
        if (is_zero()) throw std::domain_error("Cyclo::inv: division by zero");
        const auto& F = CycloField::get(M_);
        // r0 = Phi_M, r1 = this; maintain r_j = s_j * this (mod Phi_M)
        std::vector<Rational> r0(F.poly.begin(), F.poly.end());
        std::vector<Rational> r1(c_.begin(), c_.end());
        trim(r1);
        std::vector<Rational> s0, s1{Rational(1)};
        while (degree(r1) > 0) {
            auto [q, rem] = poly_divmod(std::move(r0), r1);
            auto s2 = poly_sub(std::move(s0), poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
            if (r1.empty()) throw std::logic_error("Cyclo::inv: gcd has positive degree");
        }
        // Phi_M is irreducible, so the gcd is the nonzero constant r1[0]
        // and deg s1 < phi(M).
        Rational lead = r1[0];
        std::vector<Rational> res(static_cast<size_t>(F.phi), Rational(0));
        for (size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] / lead;
        return Cyclo(M_, std::move(res));
    }

    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

    /// Galois substitution zeta -> zeta^j, gcd(j, M) = 1.
    Cyclo galois(long long j) const {
        const auto& F = CycloField::get(M_);
        std::vector<Rational> res(static_cast<size_t>(F.phi), Rational(0));
        for (int a = 0; a < F.phi; ++a) {
            if (c_[a] == 0) continue;
            long long e = (static_cast<long long>(a) * j) % M_;
            if (e < 0) e += M_;
            const auto& row = F.zpow[static_cast<size_t>(e)];
            for (int b = 0; b < F.phi; ++b) res[b] += c_[a] * row[b];
        }
        return Cyclo(M_, std::move(res));
    }

    /// zeta -> zeta^{-1}; complex conjugation on the cyclotomic field.
    Cyclo conj() const { return galois(M_ - 1); }

    Cyclo pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        Cyclo acc = one(M_), b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const {
        std::string s;
        bool first = true;
        for (size_t a = 0; a < c_.size(); ++a) {
            if (c_[a] == 0) continue;
            std::string term = format_rational(c_[a]);
            if (a > 0) {
                if (term == "1") term = "";
                else if (term == "-1") term = "-";
                else term += "*";
                term += "z";
                if (a > 1) term += "^" + std::to_string(a);
            }
            if (!first && term[0] != '-') s += "+";
            s += term;
            first = false;
        }
        return first ? "0" : s;
    }

private:
    int M_;
    std::vector<Rational> c_;

    void require_same(const Cyclo& b) const {
        if (M_ != b.M_) throw std::invalid_argument("Cyclo: mixed cyclotomic orders");
    }

    static int degree(const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; }
    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    static std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rational(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        trim(a);
        return a;
    }
    static std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trim(r);
        return r;
    }
    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
        std::vector<Rational> num, const std::vector<Rational>& den) {
        trim(num);
        std::vector<Rational> q;
        if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
        while (num.size() >= den.size()) {
            Rational c = num.back() / den.back();
            size_t shift = num.size() - den.size();
            q[shift] = c;
            for (size_t j = 0; j + 1 < den.size(); ++j) num[shift + j] -= c * den[j];
            num.pop_back();
            trim(num);
        }
        return {std::move(q), std::move(num)};
    }
};

}  // namespace qfix
