// Characteristic-zero verification of the Artin-Hasse exponential
// identities: exact rational coefficients of E(x), truncated series over
// Q(zeta_{p^n}), the norm-product identity, and mod-p reductions.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace swp {

// Coefficients c_0..c_{N-1} of E(x) = exp(sum_{m>=0} x^{p^m}/p^m) as exact
// rationals, by exponentiating the truncated argument series.
std::vector<mpq_class> ah_coeffs(std::int64_t p, int N);

// Reductions of ah_coeffs mod p. Throws std::logic_error if a denominator
// is divisible by p (which would falsify p-integrality).
std::vector<std::int64_t> ah_mod_p(std::int64_t p, int N);

// E'/E over F_p truncated to N-1 coefficients (constant term of E is 1).
std::vector<std::int64_t> ah_dlog_mod_p(std::int64_t p, int N);

// Truncated power series over Q(zeta_{p^n}); coefficients are rational
// polynomials of degree < phi(p^n) modulo the p^n-th cyclotomic polynomial.
class CycloSeries {
public:
    CycloSeries(std::int64_t p, int n, int trunc);  // zero series
    static CycloSeries one(std::int64_t p, int n, int trunc);

    // sum_i rat_i * zeta^{i*k} * t^i, truncated.
    static CycloSeries twisted(const std::vector<mpq_class>& rat, std::int64_t p,
                               int n, int trunc, std::int64_t k);

    std::int64_t p() const { return p_; }
    int n() const { return n_; }
    int trunc() const { return trunc_; }
    int phi() const { return phi_; }

    const std::vector<mpq_class>& coeff(int i) const;
    void add_to_coeff(int i, int zexp, const mpq_class& v);  // v * zeta^{zexp}

    bool operator==(const CycloSeries& b) const;
    bool operator!=(const CycloSeries& b) const { return !(*this == b); }

    friend CycloSeries cyclo_mul(const CycloSeries& a, const CycloSeries& b);

private:
    std::int64_t p_;
    int n_, trunc_, phi_, pn_;
    std::vector<std::vector<mpq_class>> coeffs_;  // trunc x phi
};

CycloSeries cyclo_mul(const CycloSeries& a, const CycloSeries& b);

// Exact check of prod_{k=0}^{p^n-1} E(t zeta^k) == E(t^{p^n}) mod t^N
// in Q(zeta_{p^n})[[t]].
bool verify_norm_identity(std::int64_t p, int n, int N);

}  // namespace swp
