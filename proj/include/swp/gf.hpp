// Exact arithmetic in finite fields F_{p^e}: polynomial-basis elements,
// Frobenius, trace to the prime subfield, multiplicative orders.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace swp {

class FFElem;

// Immutable field descriptor. Elements are residues of F_p[x] modulo a
// verified-irreducible monic polynomial of degree e. Construction is
// deterministic for fixed (p, e), so serialized reports are reproducible.
class Field : public std::enable_shared_from_this<Field> {
public:
    using Ptr = std::shared_ptr<const Field>;

    // Deterministic modulus: smallest irreducible in the coefficient
    // order that counts the non-leading coefficients as base-p digits
    // (constant term least significant).
    static Ptr make(std::int64_t p, int e);
    // User-supplied modulus (length e+1, monic); verified irreducible.
    static Ptr make(std::int64_t p, int e, std::vector<std::int64_t> modulus);

    std::int64_t p() const { return p_; }
    int e() const { return e_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    std::uint64_t unit_group_order() const { return order_; }  // p^e - 1
    const std::vector<std::pair<std::uint64_t, int>>& unit_order_factors() const {
        return order_factors_;
    }

    FFElem zero() const;
    FFElem one() const;
    FFElem from_int(std::int64_t v) const;              // image of v mod p
    FFElem from_coeffs(std::vector<std::int64_t> c) const;
    FFElem gen() const;                                 // class of x

    // Deterministic element of exact multiplicative order m (m | p^e - 1).
    FFElem element_of_order(std::uint64_t m) const;

    bool same(const Field& other) const;  // value equality of (p, e, modulus)

private:
    Field(std::int64_t p, int e, std::vector<std::int64_t> modulus);

    std::int64_t p_;
    int e_;
    std::vector<std::int64_t> modulus_;
    std::uint64_t order_;
    std::vector<std::pair<std::uint64_t, int>> order_factors_;
};

// One field element. Immutable after construction; operations on elements
// of distinct fields throw std::invalid_argument.
class FFElem {
public:
    FFElem() = default;

    const Field::Ptr& field() const { return field_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    FFElem operator-() const;
    friend FFElem operator+(const FFElem& a, const FFElem& b);
    friend FFElem operator-(const FFElem& a, const FFElem& b);
    friend FFElem operator*(const FFElem& a, const FFElem& b);
    friend FFElem operator/(const FFElem& a, const FFElem& b);
    FFElem& operator+=(const FFElem& b) { return *this = *this + b; }
    FFElem& operator*=(const FFElem& b) { return *this = *this * b; }

    bool operator==(const FFElem& b) const;
    bool operator!=(const FFElem& b) const { return !(*this == b); }

    FFElem inverse() const;
    FFElem pow(std::int64_t n) const;   // negative n via inverse
    FFElem frobenius(int m) const;      // x^{p^m}, m >= 0
    FFElem trace_to_prime() const;      // sum of Frobenius orbit, lies in F_p
    std::uint64_t mult_order() const;   // least n >= 1 with x^n = 1

    // Value in [0, p) if the element lies in the prime subfield.
    std::int64_t as_prime_int() const;

    std::string str() const;

private:
    friend class Field;
    FFElem(Field::Ptr f, std::vector<std::int64_t> c)
        : field_(std::move(f)), coeffs_(std::move(c)) {}

    Field::Ptr field_;
    std::vector<std::int64_t> coeffs_;  // length e, entries in [0, p)
};

// Throws unless a and b belong to the same field.
void require_same_field(const FFElem& a, const FFElem& b);

}  // namespace swp
