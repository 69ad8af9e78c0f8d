#pragma once

#include "qfix/etale.hpp"
#include "qfix/monomial.hpp"

#include <string>
#include <vector>

namespace qfix {

enum class RegimeKind { NumberField, Loop };
enum class Mode { Linear, Polarized };

inline const char* to_string(RegimeKind r) {
    return r == RegimeKind::NumberField ? "numberfield" : "loop";
}
inline const char* to_string(Mode m) { return m == Mode::Linear ? "linear" : "polarized"; }

/// The full problem instance: ground data (k, F, zeta, sigma), the order data
/// (n, m, beta), and in polarized mode the pairing data (c or gamma, epsilon)
/// plus the twisting scalar xi.
struct SetupParams {
    RegimeKind regime = RegimeKind::NumberField;
    Mode mode = Mode::Polarized;
    int M = 1;  // cyclotomic order of k in the number-field regime
    int n = 1;
    int m = 1;
    int epsilon = +1;
    SigmaKind sigma = SigmaKind::Identity;
    FPresentation f_pres = FPresentation::K;
    Cyclo f_d;

    // number-field scalars
    Cyclo beta_nf;
    FElem c_nf;
    FElem xi_nf;

    // loop scalars (gamma = Nm_{F/k}(c) is accepted directly)
    Monomial beta_loop;
    Monomial gamma_loop;
    Monomial xi_loop;

    // caches filled by validate_params
    RootExp beta_exp;
    Cyclo gamma_nf;
    RootExp gamma_exp;
    RootExp nm_xi_exp;
    Monomial nm_xi_loop;
    bool xi_in_Xi = false;
    bool xi_sigma_fixed = true;
    bool nm_xi_primitive = false;

    long long mn() const { return m / n; }
    bool polarized() const { return mode == Mode::Polarized; }
    bool sigma_trivial_on_k() const { return sigma != SigmaKind::Conj && sigma != SigmaKind::MinusT; }
    bool sigma_trivial_on_F() const { return sigma == SigmaKind::Identity; }

    Etale etale() const {
        if (regime != RegimeKind::NumberField)
            throw std::logic_error("etale(): number-field regime only");
        return Etale(M, f_pres, sigma, f_d);
    }

    Cyclo sigma_on_k(const Cyclo& a) const {
        return sigma == SigmaKind::Conj ? a.conj() : a;
    }
    Monomial sigma_on_k(const Monomial& a) const {
        return sigma == SigmaKind::MinusT ? sigma_k_nontrivial_ext(a) : a;
    }
    /// [k : k^sigma]: 2 when sigma acts nontrivially on k, else 1.
    int k_over_k_sigma() const { return sigma_trivial_on_k() ? 1 : 2; }
};

struct Validation {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
    std::string joined_errors() const {
        std::string s;
        for (auto& e : errors) s += (s.empty() ? "" : "; ") + e;
        return s;
    }
};

/// Checks every structural constraint and fills the derived caches.
/// Violations are collected (not thrown); an unsatisfied norm condition on xi
/// is a warning because it only forces the xi-eigenspace to vanish.
inline Validation validate_params(SetupParams& p) {
    Validation v;
    auto err = [&](const std::string& s) { v.errors.push_back(s); };
    auto warn = [&](const std::string& s) { v.warnings.push_back(s); };

    if (p.n < 1) err("n must be >= 1");
    if (p.m < 1) err("m must be >= 1");
    if (p.n >= 1 && p.m >= 1 && p.m % p.n != 0) err("n must divide m");
    if (p.polarized() && p.epsilon != 1 && p.epsilon != -1) err("epsilon must be +1 or -1");
    if (!v.errors.empty()) return v;

    const long long mn = p.mn();

    if (p.regime == RegimeKind::NumberField) {
        if (p.M < 1) err("cyclotomic order M must be >= 1");
        if (p.n > 2) err("number-field regime supports n in {1, 2}");
        if (p.n == 1 && p.f_pres != FPresentation::K)
            err("n = 1 requires the presentation F = k");
        if (p.n == 2 && p.f_pres != FPresentation::Split && p.f_pres != FPresentation::Quadratic)
            err("n = 2 requires the split or quadratic presentation");
        if (p.sigma == SigmaKind::MinusT) err("sigma = minus_t is loop-only");
        if (p.sigma == SigmaKind::ZetaHalf && p.n % 2 != 0)
            err("sigma = zeta^{n/2} requires n even");
        if (p.sigma == SigmaKind::Conj && p.M <= 2)
            err("sigma = conj requires M >= 3 (conjugation must act nontrivially)");
        if (p.sigma == SigmaKind::Conj && p.f_pres == FPresentation::Quadratic &&
            p.f_d.conj() != p.f_d)
            err("sigma = conj on the quadratic presentation requires conj(d) = d");
        if (!v.errors.empty()) return v;

        Etale F = p.etale();

        auto bexp = rootexp_of(p.beta_nf);
        if (!bexp) {
            err("beta must be a root of unity in Q(zeta_M)");
            return v;
        }
        p.beta_exp = *bexp;

        if (p.polarized()) {
            if (!F.is_unit(p.c_nf)) {
                err("c must be a unit of F");
                return v;
            }
            if (F.sigma(p.c_nf) != p.c_nf) err("c must be sigma-fixed");
            p.gamma_nf = F.norm(p.c_nf);
            Cyclo rhs = p.beta_nf * p.sigma_on_k(p.beta_nf);
            if (p.gamma_nf.pow(mn) != rhs)
                err("norm condition Nm(c)^(m/n) = beta * sigma(beta) violated");
            auto gexp = rootexp_of(p.gamma_nf);
            if (!gexp)
                err("Nm(c) must be a root of unity in Q(zeta_M)");
            else
                p.gamma_exp = *gexp;
        }

        if (!F.is_unit(p.xi_nf)) {
            err("xi must be a unit of F");
            return v;
        }
        Cyclo nm_xi = F.norm(p.xi_nf);
        p.xi_in_Xi = (nm_xi.pow(mn) == Cyclo::one(p.M));
        if (p.xi_in_Xi) {
            p.nm_xi_exp = *rootexp_of(nm_xi);
            p.nm_xi_primitive = (p.nm_xi_exp.order() == mn);
        } else {
            warn("Nm(xi) is not an (m/n)-th root of unity; the xi-eigenspace is zero");
        }
        if (p.polarized()) {
            p.xi_sigma_fixed = (F.sigma(p.xi_nf) == p.xi_nf);
            if (!p.xi_sigma_fixed)
                warn("xi is not sigma-fixed; the xi-eigenspace is zero in the polarized setting");
        }
    } else {
        if (p.f_pres != FPresentation::LoopModel) err("loop regime requires the loop presentation");
        if (p.sigma == SigmaKind::Conj) err("sigma = conj is number-field-only");
        if (p.sigma == SigmaKind::ZetaHalf && p.n % 2 != 0)
            err("sigma = zeta^{n/2} requires n even");
        if (p.sigma == SigmaKind::MinusT && p.n % 2 == 0)
            err("sigma = minus_t (nontrivial on k) requires n odd");
        if (!is_integer(p.beta_loop.val)) err("beta must lie in k (integral tau-valuation)");
        if (!is_integer(p.xi_loop.val * Rational(p.n)))
            err("xi must lie in F (t-integral valuation)");
        if (!v.errors.empty()) return v;

        if (p.polarized()) {
            if (!is_integer(p.gamma_loop.val)) err("gamma must lie in k (integral tau-valuation)");
            if (p.sigma == SigmaKind::MinusT && p.sigma_on_k(p.gamma_loop) != p.gamma_loop)
                err("gamma must be sigma-fixed");
            if (p.sigma == SigmaKind::ZetaHalf && !is_integer(p.gamma_loop.val / Rational(2)))
                err("gamma = Nm(c) with c sigma-fixed forces val(gamma) even for sigma = zeta^{n/2}");
            if (!v.errors.empty()) return v;
            Monomial rhs = p.beta_loop * p.sigma_on_k(p.beta_loop);
            if (p.gamma_loop.pow(mn) != rhs)
                err("norm condition Nm(c)^(m/n) = beta * sigma(beta) violated");
        }

        p.nm_xi_loop = norm_F_over_k(p.xi_loop, p.n);
        p.xi_in_Xi = (p.nm_xi_loop.val == 0) &&
                     is_integer(p.nm_xi_loop.coeff.e * Rational(mn));
        if (p.xi_in_Xi)
            p.nm_xi_primitive = (p.nm_xi_loop.coeff.order() == mn);
        else
            warn("Nm(xi) is not an (m/n)-th root of unity; the xi-eigenspace is zero");
        if (p.polarized()) {
            p.xi_sigma_fixed = (p.sigma == SigmaKind::Identity) ||
                               (sigma_minus_t(p.xi_loop, p.n) == p.xi_loop);
            if (!p.xi_sigma_fixed)
                warn("xi is not sigma-fixed; the xi-eigenspace is zero in the polarized setting");
        }
    }
    return v;
}

}  // namespace qfix
