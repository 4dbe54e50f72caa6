#include "swp/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "swp/intutil.hpp"

namespace swp {

namespace {

using Poly = std::vector<std::int64_t>;  // coefficient i of x^i, entries in [0,p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_rem(Poly a, const Poly& m, std::int64_t p) {
    const int dm = static_cast<int>(m.size()) - 1;
    trim(a);
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int k = static_cast<int>(a.size()) - 1;
        const std::int64_t c = a[k];
        if (c != 0) {
            for (int i = 0; i <= dm; ++i) {
                std::int64_t& t = a[k - dm + i];
                t = floormod(t - c * m[i], p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = floormod(prod[i + j] + a[i] * b[j], p);
    }
    return poly_rem(std::move(prod), m, p);
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& m, std::int64_t p) {
    Poly r{1};
    base = poly_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, m, p);
        base = poly_mul_mod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    if (!a.empty()) {
        std::int64_t inv = powmod_u64(static_cast<std::uint64_t>(a.back()),
                                      static_cast<std::uint64_t>(p - 2),
                                      static_cast<std::uint64_t>(p));
        if (p == 2) inv = 1;
        for (auto& c : a) c = floormod(c * inv, p);
    }
    return a;
}

bool is_irreducible(const Poly& m, std::int64_t p) {
    const int e = static_cast<int>(m.size()) - 1;
    const Poly x{0, 1};
    // t_d = x^{p^d} mod m, by iterated p-th powering in F_p[x]/(m).
    Poly t = poly_rem(x, m, p);
    for (int d = 1; d <= e; ++d) {
        t = poly_pow_mod(t, static_cast<std::uint64_t>(p), m, p);
        Poly diff = t;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = floormod(diff[1] - 1, p);
        diff = poly_rem(std::move(diff), m, p);
        if (d < e && e % d == 0) {
            // gcd(x^{p^d} - x, m) must be a unit
            Poly g = poly_gcd(diff, m, p);
            if (!(g.size() == 1 && g[0] == 1)) return false;
        }
        if (d == e && !diff.empty()) return false;  // x^{p^e} == x
    }
    return true;
}

}  // namespace

Field::Field(std::int64_t p, int e, std::vector<std::int64_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    unsigned __int128 o = 1;
    for (int i = 0; i < e_; ++i) {
        o *= static_cast<unsigned>(p_);
        if (o > (static_cast<unsigned __int128>(1) << 63))
            throw std::overflow_error("field cardinality exceeds 2^63");
    }
    order_ = static_cast<std::uint64_t>(o) - 1;
    if (order_ > 0) order_factors_ = factorize_u64(order_);
}

Field::Ptr Field::make(std::int64_t p, int e, std::vector<std::int64_t> modulus) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (static_cast<int>(modulus.size()) != e + 1)
        throw std::invalid_argument("modulus degree must equal extension degree");
    for (auto& c : modulus) c = floormod(c, p);
    if (modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(modulus, p))
        throw std::invalid_argument("modulus is reducible over F_p");
    return Ptr(new Field(p, e, std::move(modulus)));
}

Field::Ptr Field::make(std::int64_t p, int e) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    // Scan candidates x^e + c_{e-1} x^{e-1} + ... + c_0 in increasing order
    // of the digit string (c_{e-1},...,c_0); the first irreducible wins.
    for (std::uint64_t v = 0;; ++v) {
        Poly m(e + 1, 0);
        m[e] = 1;
        std::uint64_t t = v;
        for (int i = 0; i < e; ++i) {
            m[i] = static_cast<std::int64_t>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
        }
        if (t != 0)
            throw std::invalid_argument("no irreducible modulus found");  // unreachable
        if (is_irreducible(m, p))
            return Ptr(new Field(p, e, std::move(m)));
    }
}

bool Field::same(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
}

FFElem Field::zero() const {
    return FFElem(shared_from_this(), std::vector<std::int64_t>(e_, 0));
}

FFElem Field::one() const { return from_int(1); }

FFElem Field::from_int(std::int64_t v) const {
    std::vector<std::int64_t> c(e_, 0);
    c[0] = floormod(v, p_);
    return FFElem(shared_from_this(), std::move(c));
}

FFElem Field::from_coeffs(std::vector<std::int64_t> c) const {
    for (auto& x : c) x = floormod(x, p_);
    Poly r = poly_rem(std::move(c), modulus_, p_);
    r.resize(e_, 0);
    return FFElem(shared_from_this(), std::move(r));
}

FFElem Field::gen() const {
    if (e_ == 1) return from_coeffs({modulus_.size() > 1 ? floormod(-modulus_[0], p_) : 0});
    std::vector<std::int64_t> c(e_, 0);
    c[1] = 1;
    return FFElem(shared_from_this(), std::move(c));
}

FFElem Field::element_of_order(std::uint64_t m) const {
    if (m == 0 || order_ % m != 0)
        throw std::invalid_argument("requested order does not divide p^e - 1");
    if (m == 1) return one();
    const auto mf = factorize_u64(m);
    const std::uint64_t cof = order_ / m;
    for (std::uint64_t v = 1; v <= order_; ++v) {
        std::vector<std::int64_t> c(e_, 0);
        std::uint64_t t = v;
        for (int i = 0; i < e_ && t; ++i) {
            c[i] = static_cast<std::int64_t>(t % static_cast<std::uint64_t>(p_));
            t /= static_cast<std::uint64_t>(p_);
        }
        FFElem cand = FFElem(shared_from_this(), std::move(c))
                          .pow(static_cast<std::int64_t>(cof));
        if (cand.is_zero()) continue;
        bool exact = true;
        for (const auto& [q, k] : mf) {
            (void)k;
            if (cand.pow(static_cast<std::int64_t>(m / q)).is_one()) {
                exact = false;
                break;
            }
        }
        if (exact) return cand;
    }
    throw std::logic_error("no element of requested order");  // unreachable
}

void require_same_field(const FFElem& a, const FFElem& b) {
    if (!a.field() || !b.field() || !a.field()->same(*b.field()))
        throw std::invalid_argument("operands belong to different fields");
}

bool FFElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](std::int64_t c) { return c == 0; });
}

bool FFElem::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](std::int64_t c) { return c == 0; });
}

FFElem FFElem::operator-() const {
    FFElem r = *this;
    const std::int64_t p = field_->p();
    for (auto& c : r.coeffs_) c = floormod(-c, p);
    return r;
}

FFElem operator+(const FFElem& a, const FFElem& b) {
    require_same_field(a, b);
    FFElem r = a;
    const std::int64_t p = a.field_->p();
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = floormod(r.coeffs_[i] + b.coeffs_[i], p);
    return r;
}

FFElem operator-(const FFElem& a, const FFElem& b) {
    require_same_field(a, b);
    FFElem r = a;
    const std::int64_t p = a.field_->p();
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = floormod(r.coeffs_[i] - b.coeffs_[i], p);
    return r;
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    require_same_field(a, b);
    const std::int64_t p = a.field_->p();
    Poly prod = poly_mul_mod(a.coeffs_, b.coeffs_, a.field_->modulus(), p);
    prod.resize(a.field_->e(), 0);
    return FFElem(a.field_, std::move(prod));
}

FFElem operator/(const FFElem& a, const FFElem& b) {
    return a * b.inverse();
}

bool FFElem::operator==(const FFElem& b) const {
    require_same_field(*this, b);
    return coeffs_ == b.coeffs_;
}

FFElem FFElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero field element");
    // Extended Euclid in F_p[x]: s*a + t*modulus = gcd = const.
    const std::int64_t p = field_->p();
    Poly r0 = field_->modulus(), r1 = coeffs_;
    trim(r1);
    Poly s0 = {}, s1 = {1};
    while (!(r1.size() == 1 || r1.empty())) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        trim(rem);
        const int d1 = static_cast<int>(r1.size()) - 1;
        const std::int64_t lead_inv = static_cast<std::int64_t>(powmod_u64(
            static_cast<std::uint64_t>(r1.back()),
            static_cast<std::uint64_t>(p - 2), static_cast<std::uint64_t>(p)));
        q.assign(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        while (static_cast<int>(rem.size()) - 1 >= d1 && !rem.empty()) {
            const int k = static_cast<int>(rem.size()) - 1;
            const std::int64_t c = floormod(rem.back() * lead_inv, p);
            q[k - d1] = c;
            for (int i = 0; i <= d1; ++i)
                rem[k - d1 + i] = floormod(rem[k - d1 + i] - c * r1[i], p);
            trim(rem);
        }
        // s_next = s0 - q * s1
        Poly qs(q.size() + s1.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
                qs[i + j] = floormod(qs[i + j] + q[i] * s1[j], p);
        Poly s_next = s0;
        s_next.resize(std::max(s_next.size(), qs.size()), 0);
        for (std::size_t i = 0; i < qs.size(); ++i)
            s_next[i] = floormod(s_next[i] - qs[i], p);
        trim(s_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    if (r1.empty()) throw std::logic_error("inverse: gcd vanished");
    const std::int64_t ginv = static_cast<std::int64_t>(powmod_u64(
        static_cast<std::uint64_t>(r1[0]), static_cast<std::uint64_t>(p - 2),
        static_cast<std::uint64_t>(p)));
    for (auto& c : s1) c = floormod(c * ginv, p);
    Poly res = poly_rem(std::move(s1), field_->modulus(), p);
    res.resize(field_->e(), 0);
    return FFElem(field_, std::move(res));
}

FFElem FFElem::pow(std::int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    FFElem base = *this, r = field_->one();
    std::uint64_t e = static_cast<std::uint64_t>(n);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FFElem FFElem::frobenius(int m) const {
    if (m < 0) throw std::invalid_argument("frobenius: negative iteration count");
    FFElem r = *this;
    for (int i = 0; i < m; ++i) r = r.pow(field_->p());
    return r;
}

FFElem FFElem::trace_to_prime() const {
    FFElem acc = field_->zero(), t = *this;
    for (int m = 0; m < field_->e(); ++m) {
        acc = acc + t;
        t = t.pow(field_->p());
    }
    return acc;
}

std::uint64_t FFElem::mult_order() const {
    if (is_zero()) throw std::invalid_argument("multiplicative order of zero");
    std::uint64_t n = field_->unit_group_order();
    for (const auto& [q, k] : field_->unit_order_factors()) {
        for (int i = 0; i < k; ++i) {
            if (pow(static_cast<std::int64_t>(n / q)).is_one())
                n /= q;
            else
                break;
        }
    }
    return n;
}

std::int64_t FFElem::as_prime_int() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            throw std::domain_error("element is not in the prime subfield");
    return coeffs_.empty() ? 0 : coeffs_[0];
}

std::string FFElem::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ']';
    return os.str();
}

}  // namespace swp
