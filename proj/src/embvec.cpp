#include "swp/embvec.hpp"

#include <stdexcept>

#include "swp/intutil.hpp"

namespace swp {

EmbVector::EmbVector(Field::Ptr F, int f, int d) : field_(std::move(F)), f_(f), d_(d) {
    if (f < 1 || d < 1)
        throw std::invalid_argument("EmbVector: f and d must be positive");
    comps_.assign(static_cast<std::size_t>(f) * static_cast<std::size_t>(d),
                  field_->zero());
}

EmbVector EmbVector::zeros(const Field::Ptr& F, int f, int d) {
    return EmbVector(F, f, d);
}

EmbVector EmbVector::all_ones(const Field::Ptr& F, int f, int d) {
    EmbVector v(F, f, d);
    for (auto& c : v.comps_) c = F->one();
    return v;
}

EmbVector EmbVector::lambda_mu(const Field::Ptr& F, int s, const FFElem& a,
                               int f, int d) {
    if (a.is_zero()) throw std::invalid_argument("lambda_mu: a must be nonzero");
    if (!a.pow(d).is_one())
        throw std::invalid_argument("lambda_mu: order of a does not divide d");
    EmbVector v(F, f, d);
    const int ss = static_cast<int>(floormod(s, f));
    const FFElem ainv = a.inverse();
    FFElem cur = F->one();
    for (int t = 0; t < d; ++t) {
        v.comps_[static_cast<std::size_t>(ss + t * f)] = cur;
        cur = cur * ainv;
    }
    return v;
}

EmbVector EmbVector::lambda_mu_inv(const Field::Ptr& F, int s, const FFElem& a,
                                   int f, int d) {
    if (a.is_zero()) throw std::invalid_argument("lambda_mu_inv: a must be nonzero");
    if (!a.pow(d).is_one())
        throw std::invalid_argument("lambda_mu_inv: order of a does not divide d");
    EmbVector v(F, f, d);
    const int ss = static_cast<int>(floormod(s, f));
    FFElem cur = F->one();
    for (int t = 0; t < d; ++t) {
        v.comps_[static_cast<std::size_t>(ss + t * f)] = cur;
        cur = cur * a;
    }
    return v;
}

void EmbVector::set(int i, FFElem v) {
    comps_.at(static_cast<std::size_t>(i)) = std::move(v);
}

EmbVector EmbVector::frobshift(std::int64_t m) const {
    if (m < 0) throw std::invalid_argument("frobshift: negative iteration count");
    const std::int64_t n = size();
    EmbVector r(field_, f_, d_);
    for (std::int64_t i = 0; i < n; ++i)
        r.comps_[static_cast<std::size_t>(i)] =
            comps_[static_cast<std::size_t>(floormod(i - m, n))];
    return r;
}

void require_same_shape(const EmbVector& a, const EmbVector& b) {
    if (a.f() != b.f() || a.d() != b.d())
        throw std::invalid_argument("EmbVector shape mismatch");
    if (!a.field() || !b.field() || !a.field()->same(*b.field()))
        throw std::invalid_argument("EmbVector field mismatch");
}

EmbVector operator+(const EmbVector& a, const EmbVector& b) {
    require_same_shape(a, b);
    EmbVector r = a;
    for (std::size_t i = 0; i < r.comps_.size(); ++i)
        r.comps_[i] = r.comps_[i] + b.comps_[i];
    return r;
}

EmbVector operator*(const EmbVector& a, const EmbVector& b) {
    require_same_shape(a, b);
    EmbVector r = a;
    for (std::size_t i = 0; i < r.comps_.size(); ++i)
        r.comps_[i] = r.comps_[i] * b.comps_[i];
    return r;
}

EmbVector EmbVector::scale(const FFElem& c) const {
    EmbVector r = *this;
    for (auto& x : r.comps_) x = x * c;
    return r;
}

FFElem EmbVector::trace_sum() const {
    FFElem acc = field_->zero();
    for (const auto& c : comps_) acc = acc + c;
    return acc;
}

bool EmbVector::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

bool EmbVector::operator==(const EmbVector& b) const {
    require_same_shape(*this, b);
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i] != b.comps_[i]) return false;
    return true;
}

}  // namespace swp
