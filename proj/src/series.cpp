#include "swp/series.hpp"

#include <stdexcept>

#include "swp/intutil.hpp"

namespace swp {

SparseLaurent::SparseLaurent(Field::Ptr F, int f, int d)
    : field_(std::move(F)), f_(f), d_(d) {}

SparseLaurent SparseLaurent::zero(const Field::Ptr& F, int f, int d) {
    return SparseLaurent(F, f, d);
}

SparseLaurent SparseLaurent::monomial(EmbVector c, std::int64_t exp) {
    SparseLaurent s(c.field(), c.f(), c.d());
    s.add_term(exp, c);
    return s;
}

void SparseLaurent::add_term(std::int64_t exp, const EmbVector& c) {
    if (c.f() != f_ || c.d() != d_ || !c.field()->same(*field_))
        throw std::invalid_argument("SparseLaurent: coefficient shape mismatch");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exp, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

EmbVector SparseLaurent::coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    if (it != terms_.end()) return it->second;
    return EmbVector::zeros(field_, f_, d_);
}

void require_same_shape(const SparseLaurent& a, const SparseLaurent& b) {
    if (a.f() != b.f() || a.d() != b.d())
        throw std::invalid_argument("SparseLaurent shape mismatch");
    if (!a.field() || !b.field() || !a.field()->same(*b.field()))
        throw std::invalid_argument("SparseLaurent field mismatch");
}

SparseLaurent operator+(const SparseLaurent& a, const SparseLaurent& b) {
    require_same_shape(a, b);
    SparseLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b) {
    require_same_shape(a, b);
    SparseLaurent r(a.field_, a.f_, a.d_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

SparseLaurent SparseLaurent::scale(const FFElem& c) const {
    SparseLaurent r(field_, f_, d_);
    for (const auto& [e, v] : terms_) r.add_term(e, v.scale(c));
    return r;
}

SparseLaurent SparseLaurent::shift(std::int64_t k) const {
    SparseLaurent r(field_, f_, d_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + k, v);
    return r;
}

bool SparseLaurent::operator==(const SparseLaurent& b) const {
    require_same_shape(*this, b);
    if (terms_.size() != b.terms_.size()) return false;
    auto it = terms_.begin(), jt = b.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

SparseLaurent SparseLaurent::dlog_ah_unit(std::int64_t r, const EmbVector& lam,
                                          int m_max) {
    if (r < 1) throw std::invalid_argument("dlog_ah_unit: r must be >= 1");
    if (m_max < 0) throw std::invalid_argument("dlog_ah_unit: m_max must be >= 0");
    const auto& F = lam.field();
    const std::int64_t p = F->p();
    SparseLaurent s(F, lam.f(), lam.d());
    const FFElem rmodp = F->from_int(r);
    if (rmodp.is_zero()) return s;  // p | r kills every term
    std::int64_t expo = r;  // r * p^m
    for (int m = 0; m <= m_max; ++m) {
        s.add_term(expo - 1, lam.frobshift(m).scale(rmodp));
        if (m < m_max) {
            if (expo > INT64_MAX / p)
                throw std::overflow_error("dlog_ah_unit: exponent overflow");
            expo *= p;
        }
    }
    return s;
}

SparseLaurent SparseLaurent::dlog_uniformizer(const Field::Ptr& F, int f, int d) {
    SparseLaurent s(F, f, d);
    s.add_term(-1, EmbVector::all_ones(F, f, d));
    return s;
}

}  // namespace swp
