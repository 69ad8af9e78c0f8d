#pragma once

#include "qfix/rootexp.hpp"

#include <array>
#include <vector>

namespace qfix {

enum class FPresentation { K, Split, Quadratic, LoopModel };
enum class SigmaKind { Identity, ZetaHalf, Conj, MinusT };

inline const char* to_string(FPresentation p) {
    switch (p) {
        case FPresentation::K: return "k";
        case FPresentation::Split: return "split";
        case FPresentation::Quadratic: return "quadratic";
        case FPresentation::LoopModel: return "loop";
    }
    return "?";
}

inline const char* to_string(SigmaKind s) {
    switch (s) {
        case SigmaKind::Identity: return "identity";
        case SigmaKind::ZetaHalf: return "zeta_half";
        case SigmaKind::Conj: return "conj";
        case SigmaKind::MinusT: return "minus_t";
    }
    return "?";
}

/// Element of the etale k-algebra F in the number-field regime, stored by its
/// coordinates: one component for F = k, two for F = k x k (componentwise) and
/// for F = k[x]/(x^2 - d) (coefficients of 1 and x).
struct FElem {
    std::vector<Cyclo> c;

    FElem() = default;
    explicit FElem(std::vector<Cyclo> comps) : c(std::move(comps)) {}

    int rank() const { return static_cast<int>(c.size()); }
    bool is_zero() const {
        for (auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const FElem& a, const FElem& b) { return a.c == b.c; }
    friend bool operator!=(const FElem& a, const FElem& b) { return !(a == b); }
};

/// The supported presentations of (F, zeta, sigma) over k = Q(zeta_M).
/// Realizes n in {1, 2}; the loop model is handled symbolically elsewhere.
class Etale {
public:
    int M = 1;
    int n = 1;
    FPresentation pres = FPresentation::K;
    SigmaKind sigma_kind = SigmaKind::Identity;
    Cyclo d;  // x^2 = d for the quadratic presentation

    Etale() : d(Cyclo::zero(1)) {}
    Etale(int M_, FPresentation p, SigmaKind s, Cyclo d_ = Cyclo())
        : M(M_), n(p == FPresentation::K ? 1 : 2), pres(p), sigma_kind(s), d(std::move(d_)) {
        if (p == FPresentation::Quadratic && d.is_zero())
            throw std::invalid_argument("Etale: quadratic presentation needs nonzero d");
    }

    FElem zero() const { return from_components(std::vector<Cyclo>(n, Cyclo::zero(M))); }
    FElem one() const {
        if (pres == FPresentation::Split) return FElem({Cyclo::one(M), Cyclo::one(M)});
        std::vector<Cyclo> v(n, Cyclo::zero(M));
        v[0] = Cyclo::one(M);
        return FElem(std::move(v));
    }
    FElem from_k(const Cyclo& a) const {
        if (pres == FPresentation::Split) return FElem({a, a});
        std::vector<Cyclo> v;
        v.push_back(a);
        if (n == 2) v.push_back(Cyclo::zero(M));
        return FElem(std::move(v));
    }
    FElem from_components(std::vector<Cyclo> comps) const {
        if (static_cast<int>(comps.size()) != n)
            throw std::invalid_argument("Etale: wrong component count");
        return FElem(std::move(comps));
    }

    FElem add(const FElem& a, const FElem& b) const {
        FElem r = a;
        for (int i = 0; i < n; ++i) r.c[i] += b.c[i];
        return r;
    }
    FElem sub(const FElem& a, const FElem& b) const {
        FElem r = a;
        for (int i = 0; i < n; ++i) r.c[i] -= b.c[i];
        return r;
    }
    FElem neg(const FElem& a) const {
        FElem r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    FElem mul(const FElem& a, const FElem& b) const {
        switch (pres) {
            case FPresentation::K: return FElem({a.c[0] * b.c[0]});
            case FPresentation::Split: return FElem({a.c[0] * b.c[0], a.c[1] * b.c[1]});
            case FPresentation::Quadratic:
                return FElem({a.c[0] * b.c[0] + d * (a.c[1] * b.c[1]),
                              a.c[0] * b.c[1] + a.c[1] * b.c[0]});
            default: throw std::logic_error("Etale::mul: loop model is symbolic");
        }
    }
    FElem scale(const Cyclo& s, const FElem& a) const { return mul(from_k(s), a); }

    /// The order-n automorphism zeta with fixed algebra k.
    FElem zeta(const FElem& a) const {
        switch (pres) {
            case FPresentation::K: return a;
            case FPresentation::Split: return FElem({a.c[1], a.c[0]});
            case FPresentation::Quadratic: return FElem({a.c[0], -a.c[1]});
            default: throw std::logic_error("Etale::zeta: loop model is symbolic");
        }
    }

    /// The involution sigma commuting with zeta.
    FElem sigma(const FElem& a) const {
        switch (sigma_kind) {
            case SigmaKind::Identity: return a;
            case SigmaKind::ZetaHalf: return zeta(a);
            case SigmaKind::Conj: {
                FElem r = a;
                for (auto& x : r.c) x = x.conj();
                return r;
            }
            case SigmaKind::MinusT: throw std::logic_error("Etale::sigma: minus_t is loop-only");
        }
        return a;
    }

    bool sigma_trivial_on_k() const { return sigma_kind != SigmaKind::Conj; }
    bool sigma_trivial_on_F() const { return sigma_kind == SigmaKind::Identity; }

    /// Nm_{F/k}(a) = prod of the n conjugates; always lands in k.
    Cyclo norm(const FElem& a) const {
        FElem p = a;
        FElem cur = a;
        for (int j = 1; j < n; ++j) {
            cur = zeta(cur);
            p = mul(p, cur);
        }
        auto k = as_k(p);
        if (!k) throw std::logic_error("Etale::norm: norm not in k");
        return *k;
    }

    std::optional<Cyclo> as_k(const FElem& a) const {
        switch (pres) {
            case FPresentation::K: return a.c[0];
            case FPresentation::Split:
                if (a.c[0] == a.c[1]) return a.c[0];
                return std::nullopt;
            case FPresentation::Quadratic:
                if (a.c[1].is_zero()) return a.c[0];
                return std::nullopt;
            default: return std::nullopt;
        }
    }

    bool is_unit(const FElem& a) const {
        switch (pres) {
            case FPresentation::K: return !a.c[0].is_zero();
            case FPresentation::Split: return !a.c[0].is_zero() && !a.c[1].is_zero();
            case FPresentation::Quadratic: {
                Cyclo nm = a.c[0] * a.c[0] - d * (a.c[1] * a.c[1]);
                return !nm.is_zero();
            }
            default: return false;
        }
    }

    FElem inv(const FElem& a) const {
        if (!is_unit(a)) throw std::domain_error("Etale::inv: not a unit");
        switch (pres) {
            case FPresentation::K: return FElem({a.c[0].inv()});
            case FPresentation::Split: return FElem({a.c[0].inv(), a.c[1].inv()});
            case FPresentation::Quadratic: {
                Cyclo nm = a.c[0] * a.c[0] - d * (a.c[1] * a.c[1]);
                Cyclo ni = nm.inv();
                return FElem({a.c[0] * ni, -(a.c[1] * ni)});
            }
            default: throw std::logic_error("Etale::inv: loop model is symbolic");
        }
    }

    /// k-basis of F as used for coordinates: (1) for F = k, the two idempotents
    /// for the split presentation, (1, x) for the quadratic one.
    std::vector<FElem> basis() const {
        std::vector<FElem> b;
        if (pres == FPresentation::Split) {
            b.push_back(FElem({Cyclo::one(M), Cyclo::zero(M)}));
            b.push_back(FElem({Cyclo::zero(M), Cyclo::one(M)}));
        } else {
            b.push_back(one());
            if (n == 2) b.push_back(FElem({Cyclo::zero(M), Cyclo::one(M)}));
        }
        return b;
    }

    /// Structure constants e_i * e_j on the coordinate basis.
    std::vector<std::vector<FElem>> mul_table() const {
        auto b = basis();
        std::vector<std::vector<FElem>> t(n, std::vector<FElem>(n, zero()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] = mul(b[i], b[j]);
        return t;
    }

    /// Matrix of zeta on the coordinate basis (k-linear), columns = images.
    std::vector<FElem> zeta_matrix() const {
        std::vector<FElem> cols;
        for (auto& e : basis()) cols.push_back(zeta(e));
        return cols;
    }
    /// Matrix of sigma on the coordinate basis (k-linear or k-semilinear
    /// according to sigma_trivial_on_k()).
    std::vector<FElem> sigma_matrix() const {
        std::vector<FElem> cols;
        for (auto& e : basis()) cols.push_back(sigma(e));
        return cols;
    }
};

}  // namespace qfix
