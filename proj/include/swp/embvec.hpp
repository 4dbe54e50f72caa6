// Product-coordinate model of l (x) F_p-bar: length f*d vectors indexed by
// embeddings, with the index-shift Frobenius action and the eigenvector
// families attached to an unramified character value a.
#pragma once

#include <cstdint>

#include "swp/gf.hpp"

namespace swp {

class EmbVector {
public:
    EmbVector() = default;

    static EmbVector zeros(const Field::Ptr& F, int f, int d);
    static EmbVector all_ones(const Field::Ptr& F, int f, int d);

    // Supported on indices congruent to s mod f; entry a^{-t} at s + t*f.
    // Requires a != 0 with a^d = 1.
    static EmbVector lambda_mu(const Field::Ptr& F, int s, const FFElem& a,
                               int f, int d);
    // Same support, entry a^{+t} at s + t*f.
    static EmbVector lambda_mu_inv(const Field::Ptr& F, int s, const FFElem& a,
                                   int f, int d);

    int f() const { return f_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(comps_.size()); }
    const Field::Ptr& field() const { return field_; }
    const FFElem& at(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
    void set(int i, FFElem v);

    // Index shift (y_i) -> (y_{i-m}) applied cyclically; no componentwise
    // Frobenius (the components are scalars of the closure).
    EmbVector frobshift(std::int64_t m) const;

    friend EmbVector operator+(const EmbVector& a, const EmbVector& b);
    friend EmbVector operator*(const EmbVector& a, const EmbVector& b);
    EmbVector scale(const FFElem& c) const;

    FFElem trace_sum() const;  // sum over all f*d components

    bool is_zero() const;
    bool operator==(const EmbVector& b) const;
    bool operator!=(const EmbVector& b) const { return !(*this == b); }

private:
    EmbVector(Field::Ptr F, int f, int d);

    Field::Ptr field_;
    int f_ = 0, d_ = 0;
    std::vector<FFElem> comps_;
};

// Throws unless shapes (f, d, field) agree.
void require_same_shape(const EmbVector& a, const EmbVector& b);

}  // namespace swp
