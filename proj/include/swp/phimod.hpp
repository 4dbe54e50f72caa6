// Rank-2 semilinear matrix sequences over Laurent polynomials: the normal
// form attached to a weight instance, base change along u -> u^{p^f-1},
// diagonal changes of basis, and extraction of the resulting class as a
// sparse Laurent element. Replays the exponent derivation independently of
// the combinatorial route.
#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "swp/series.hpp"
#include "swp/weights.hpp"

namespace swp {

// Sparse Laurent polynomial with scalar coefficients (one embedding
// component of the matrix entries).
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Field::Ptr F) : field_(std::move(F)) {}

    static LaurentPoly monomial(const FFElem& c, std::int64_t k);

    const Field::Ptr& field() const { return field_; }
    const std::map<std::int64_t, FFElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    void add_term(std::int64_t k, const FFElem& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scale_exponents(std::int64_t mult) const;  // u -> u^mult

    // (coefficient, exponent) when the polynomial is a single term.
    std::optional<std::pair<FFElem, std::int64_t>> as_monomial() const;

    bool operator==(const LaurentPoly& b) const { return terms_ == b.terms_; }

private:
    Field::Ptr field_;
    std::map<std::int64_t, FFElem> terms_;
};

struct PhiMat {
    // entries[r][c]: row r, column c; column c is the image of the c-th
    // basis vector of the source component expressed in the target basis.
    std::array<std::array<LaurentPoly, 2>, 2> entry;
};

struct PhiMatSeq {
    int period = 0;  // f before base change, f*d after
    int f = 0, d = 1;
    Field::Ptr field;
    std::vector<PhiMat> mats;  // mats[i]: component map (i-1) -> i
};

struct DiagMonomial {
    FFElem c0;
    std::int64_t k0 = 0;  // first basis vector scaled by c0 u^{k0}
    FFElem c1;
    std::int64_t k1 = 0;  // second basis vector scaled by c1 u^{k1}
};

// Upper-triangular normal form over the base: diagonal
// (u^{r_i - h_i}, (a)_i u^{h_i}) with upper-right x[i]; (a)_i is a at i = 0
// and 1 otherwise. x[i] must vanish off J; x_second adds x_second * u^p to
// the entry at i0 (trivial character only).
PhiMatSeq build_bdj(const WeightInstance& inst, const std::vector<FFElem>& x,
                    const FFElem& x_second);

// Scale every exponent by p^f - 1 and extend the period from f to f*d.
PhiMatSeq base_change_to_M(const PhiMatSeq& seq, int d);

// New matrix at i: D_i^{-1} * A_i * twist(D_{i-1}), where twist multiplies
// exponents by p (the semilinear action on the source basis scaling).
PhiMatSeq change_basis(const PhiMatSeq& seq, const std::vector<DiagMonomial>& D);

// The diagonal scalings u^{alpha_i}, a^{floor(i/f)} u^{beta_i} that
// trivialize the diagonal of the base-changed sequence.
std::vector<DiagMonomial> standard_basis_change(const WeightInstance& inst);

// Requires every matrix to be unipotent upper-triangular; assembles the
// upper-right entries across components into one sparse Laurent element.
SparseLaurent extract_as_class(const PhiMatSeq& seq);

// Every determinant is a nonzero monomial.
bool is_etale(const PhiMatSeq& seq);

}  // namespace swp
