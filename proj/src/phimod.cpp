#include "swp/phimod.hpp"

#include <stdexcept>

#include "swp/intutil.hpp"

namespace swp {

LaurentPoly LaurentPoly::monomial(const FFElem& c, std::int64_t k) {
    LaurentPoly r(c.field());
    r.add_term(k, c);
    return r;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second.is_one();
}

void LaurentPoly::add_term(std::int64_t k, const FFElem& c) {
    if (!field_) field_ = c.field();
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    if (!r.field_) r.field_ = b.field_;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.field_ ? a.field_ : b.field_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scale_exponents(std::int64_t mult) const {
    LaurentPoly r(field_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k * mult, c);
    return r;
}

std::optional<std::pair<FFElem, std::int64_t>> LaurentPoly::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    return std::make_pair(c, k);
}

PhiMatSeq build_bdj(const WeightInstance& inst, const std::vector<FFElem>& x,
                    const FFElem& x_second) {
    const int f = inst.f;
    if (static_cast<int>(x.size()) != f)
        throw std::invalid_argument("build_bdj: x must have f entries");
    for (int i = 0; i < f; ++i)
        if (!inst.in_J(i) && !x[static_cast<std::size_t>(i)].is_zero())
            throw std::invalid_argument("build_bdj: nonzero x_i for i outside J");
    if (!x_second.is_zero() && inst.chi != ChiClass::trivial)
        throw std::invalid_argument(
            "build_bdj: quadratic term only allowed for the trivial character");

    PhiMatSeq seq;
    seq.period = f;
    seq.f = f;
    seq.d = 1;
    seq.field = inst.field;
    const auto& F = inst.field;
    seq.mats.resize(static_cast<std::size_t>(f));
    for (int i = 0; i < f; ++i) {
        auto& m = seq.mats[static_cast<std::size_t>(i)];
        const int ri = inst.r[static_cast<std::size_t>(i)];
        const int hi = inst.h[static_cast<std::size_t>(i)];
        m.entry[0][0] = LaurentPoly::monomial(F->one(), ri - hi);
        m.entry[1][1] =
            LaurentPoly::monomial(i == 0 ? inst.a : F->one(), hi);
        m.entry[1][0] = LaurentPoly(F);
        LaurentPoly ur(F);
        ur.add_term(0, x[static_cast<std::size_t>(i)]);
        if (i == inst.i0 && !x_second.is_zero())
            ur.add_term(inst.p, x_second);
        m.entry[0][1] = ur;
    }
    return seq;
}

PhiMatSeq base_change_to_M(const PhiMatSeq& seq, int d) {
    if (seq.period != seq.f)
        throw std::invalid_argument("base_change_to_M: input must have period f");
    if (d < 1) throw std::invalid_argument("base_change_to_M: d must be >= 1");
    const std::int64_t scale = seq.field->p();
    std::int64_t mult = 1;
    for (int i = 0; i < seq.f; ++i) mult *= scale;
    mult -= 1;  // p^f - 1
    PhiMatSeq out;
    out.period = seq.f * d;
    out.f = seq.f;
    out.d = d;
    out.field = seq.field;
    out.mats.resize(static_cast<std::size_t>(out.period));
    for (int i = 0; i < out.period; ++i) {
        const auto& src = seq.mats[static_cast<std::size_t>(i % seq.f)];
        auto& dst = out.mats[static_cast<std::size_t>(i)];
        for (int rr = 0; rr < 2; ++rr)
            for (int cc = 0; cc < 2; ++cc)
                dst.entry[rr][cc] = src.entry[rr][cc].scale_exponents(mult);
    }
    return out;
}

PhiMatSeq change_basis(const PhiMatSeq& seq, const std::vector<DiagMonomial>& D) {
    if (static_cast<int>(D.size()) != seq.period)
        throw std::invalid_argument("change_basis: need one diagonal per index");
    for (const auto& dm : D)
        if (dm.c0.is_zero() || dm.c1.is_zero())
            throw std::invalid_argument("change_basis: diagonal entries must be nonzero");
    const std::int64_t p = seq.field->p();
    PhiMatSeq out = seq;
    for (int i = 0; i < seq.period; ++i) {
        const auto& Di = D[static_cast<std::size_t>(i)];
        const auto& Dprev =
            D[static_cast<std::size_t>(floormod(i - 1, seq.period))];
        // twist(D_{i-1}): exponents multiplied by p, coefficients kept.
        const LaurentPoly t0 = LaurentPoly::monomial(Dprev.c0, p * Dprev.k0);
        const LaurentPoly t1 = LaurentPoly::monomial(Dprev.c1, p * Dprev.k1);
        const LaurentPoly inv0 = LaurentPoly::monomial(Di.c0.inverse(), -Di.k0);
        const LaurentPoly inv1 = LaurentPoly::monomial(Di.c1.inverse(), -Di.k1);
        auto& m = out.mats[static_cast<std::size_t>(i)];
        m.entry[0][0] = inv0 * seq.mats[static_cast<std::size_t>(i)].entry[0][0] * t0;
        m.entry[0][1] = inv0 * seq.mats[static_cast<std::size_t>(i)].entry[0][1] * t1;
        m.entry[1][0] = inv1 * seq.mats[static_cast<std::size_t>(i)].entry[1][0] * t0;
        m.entry[1][1] = inv1 * seq.mats[static_cast<std::size_t>(i)].entry[1][1] * t1;
    }
    return out;
}

std::vector<DiagMonomial> standard_basis_change(const WeightInstance& inst) {
    std::vector<DiagMonomial> D;
    const auto& F = inst.field;
    FFElem apow = F->one();
    for (int i = 0; i < inst.f * inst.d; ++i) {
        if (i > 0 && i % inst.f == 0) apow = apow * inst.a;  // a^{floor(i/f)}
        DiagMonomial dm;
        dm.c0 = F->one();
        dm.k0 = inst.xi.alpha[static_cast<std::size_t>(i % inst.f)];
        dm.c1 = apow;
        dm.k1 = inst.xi.beta[static_cast<std::size_t>(i % inst.f)];
        D.push_back(dm);
    }
    return D;
}

SparseLaurent extract_as_class(const PhiMatSeq& seq) {
    SparseLaurent out(seq.field, seq.f, seq.d);
    for (int i = 0; i < seq.period; ++i) {
        const auto& m = seq.mats[static_cast<std::size_t>(i)];
        if (!m.entry[0][0].is_one() || !m.entry[1][1].is_one() ||
            !m.entry[1][0].is_zero())
            throw std::invalid_argument("extract_as_class: sequence is not unipotent");
        for (const auto& [k, c] : m.entry[0][1].terms()) {
            EmbVector v = EmbVector::zeros(seq.field, seq.f, seq.d);
            v.set(i, c);
            out.add_term(k, v);
        }
    }
    return out;
}

bool is_etale(const PhiMatSeq& seq) {
    for (const auto& m : seq.mats) {
        LaurentPoly det = m.entry[0][0] * m.entry[1][1];
        LaurentPoly off = m.entry[0][1] * m.entry[1][0];
        // det - off
        for (const auto& [k, c] : off.terms()) det.add_term(k, -c);
        auto mono = det.as_monomial();
        if (!mono || mono->first.is_zero()) return false;
    }
    return true;
}

}  // namespace swp
