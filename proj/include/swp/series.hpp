// Sparse Laurent polynomials with EmbVector coefficients: the residue
// workhorse for the unit-vs-class pairings. Also builds the char-p dlog
// expansions of Artin-Hasse units and of the uniformizer.
#pragma once

#include <cstdint>
#include <map>

#include "swp/embvec.hpp"

namespace swp {

class SparseLaurent {
public:
    SparseLaurent() = default;
    SparseLaurent(Field::Ptr F, int f, int d);

    static SparseLaurent zero(const Field::Ptr& F, int f, int d);
    static SparseLaurent monomial(EmbVector c, std::int64_t exp);

    int f() const { return f_; }
    int d() const { return d_; }
    const Field::Ptr& field() const { return field_; }
    const std::map<std::int64_t, EmbVector>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Accumulates c at the given exponent; zero coefficients are pruned.
    void add_term(std::int64_t exp, const EmbVector& c);

    EmbVector coeff(std::int64_t exp) const;  // zero vector if absent
    EmbVector residue() const { return coeff(-1); }

    friend SparseLaurent operator+(const SparseLaurent& a, const SparseLaurent& b);
    friend SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b);
    SparseLaurent scale(const FFElem& c) const;
    SparseLaurent shift(std::int64_t k) const;  // multiply by u^k

    bool operator==(const SparseLaurent& b) const;
    bool operator!=(const SparseLaurent& b) const { return !(*this == b); }

    // Truncated dlog of the unit built from u^r and the coefficient lam:
    //   sum_{m=0}^{m_max} (r mod p) * frobshift^m(lam) * u^{r p^m - 1}.
    static SparseLaurent dlog_ah_unit(std::int64_t r, const EmbVector& lam,
                                      int m_max);

    // dlog of the uniformizer: (all-ones) * u^{-1}.
    static SparseLaurent dlog_uniformizer(const Field::Ptr& F, int f, int d);

private:
    Field::Ptr field_;
    int f_ = 0, d_ = 0;
    std::map<std::int64_t, EmbVector> terms_;
};

void require_same_shape(const SparseLaurent& a, const SparseLaurent& b);

}  // namespace swp
