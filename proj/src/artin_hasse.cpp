#include "swp/artin_hasse.hpp"

#include <stdexcept>

#include "swp/intutil.hpp"

namespace swp {

namespace {

// Sparse argument series of E: exponents p^m < N with coefficient 1/p^m.
std::vector<std::pair<int, mpq_class>> ah_argument(std::int64_t p, int N) {
    std::vector<std::pair<int, mpq_class>> arg;
    mpz_class pk = 1;
    for (std::int64_t e = 1; e < N; e *= p) {
        arg.emplace_back(static_cast<int>(e), mpq_class(1) / mpq_class(pk));
        pk *= p;
        if (e > N / p) break;
    }
    return arg;
}

}  // namespace

std::vector<mpq_class> ah_coeffs(std::int64_t p, int N) {
    if (N < 1) throw std::invalid_argument("ah_coeffs: N must be >= 1");
    if (!is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("ah_coeffs: p must be prime");
    const auto arg = ah_argument(p, N);
    // E = sum_k A^k / k!; A has positive valuation, so k < N terms suffice.
    std::vector<mpq_class> acc(static_cast<std::size_t>(N), 0);
    std::vector<mpq_class> term(static_cast<std::size_t>(N), 0);
    term[0] = 1;
    acc[0] = 1;
    for (int k = 1; k < N; ++k) {
        std::vector<mpq_class> next(static_cast<std::size_t>(N), 0);
        bool any = false;
        for (int i = 0; i < N; ++i) {
            if (term[static_cast<std::size_t>(i)] == 0) continue;
            for (const auto& [e, c] : arg) {
                if (i + e >= N) break;
                next[static_cast<std::size_t>(i + e)] +=
                    term[static_cast<std::size_t>(i)] * c;
                any = true;
            }
        }
        if (!any) break;
        for (int i = 0; i < N; ++i) {
            next[static_cast<std::size_t>(i)] /= k;
            acc[static_cast<std::size_t>(i)] += next[static_cast<std::size_t>(i)];
        }
        term = std::move(next);
    }
    return acc;
}

std::vector<std::int64_t> ah_mod_p(std::int64_t p, int N) {
    const auto rat = ah_coeffs(p, N);
    std::vector<std::int64_t> out;
    out.reserve(rat.size());
    for (const auto& c : rat) {
        const mpz_class num = c.get_num();
        const mpz_class den = c.get_den();
        const std::uint64_t dm =
            mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p));
        if (dm == 0)
            throw std::logic_error("ah_mod_p: denominator divisible by p");
        const std::uint64_t nm =
            mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
        const std::uint64_t dinv =
            powmod_u64(dm, static_cast<std::uint64_t>(p - 2),
                       static_cast<std::uint64_t>(p));
        out.push_back(static_cast<std::int64_t>(
            mulmod_u64(nm, dinv, static_cast<std::uint64_t>(p))));
    }
    return out;
}

std::vector<std::int64_t> ah_dlog_mod_p(std::int64_t p, int N) {
    const auto e = ah_mod_p(p, N);
    if (e.empty() || e[0] != 1)
        throw std::logic_error("ah_dlog_mod_p: constant term must be 1");
    const int M = N - 1;
    std::vector<std::int64_t> deriv(static_cast<std::size_t>(M), 0);
    for (int i = 0; i < M; ++i)
        deriv[static_cast<std::size_t>(i)] =
            floormod(static_cast<std::int64_t>(i + 1) *
                         e[static_cast<std::size_t>(i + 1)],
                     p);
    // q = deriv / e by the standard recurrence (e_0 = 1).
    std::vector<std::int64_t> q(static_cast<std::size_t>(M), 0);
    for (int i = 0; i < M; ++i) {
        std::int64_t s = deriv[static_cast<std::size_t>(i)];
        for (int j = 1; j <= i && j < N; ++j)
            s = floormod(s - e[static_cast<std::size_t>(j)] *
                                 q[static_cast<std::size_t>(i - j)],
                         p);
        q[static_cast<std::size_t>(i)] = s;
    }
    return q;
}

CycloSeries::CycloSeries(std::int64_t p, int n, int trunc)
    : p_(p), n_(n), trunc_(trunc) {
    if (n < 1) throw std::invalid_argument("CycloSeries: level must be >= 1");
    if (trunc < 1) throw std::invalid_argument("CycloSeries: trunc must be >= 1");
    int pnm1 = 1;
    for (int i = 1; i < n; ++i) pnm1 *= static_cast<int>(p);
    phi_ = static_cast<int>(p - 1) * pnm1;
    pn_ = pnm1 * static_cast<int>(p);
    coeffs_.assign(static_cast<std::size_t>(trunc),
                   std::vector<mpq_class>(static_cast<std::size_t>(phi_), 0));
}

CycloSeries CycloSeries::one(std::int64_t p, int n, int trunc) {
    CycloSeries s(p, n, trunc);
    s.coeffs_[0][0] = 1;
    return s;
}

const std::vector<mpq_class>& CycloSeries::coeff(int i) const {
    return coeffs_.at(static_cast<std::size_t>(i));
}

void CycloSeries::add_to_coeff(int i, int zexp, const mpq_class& v) {
    // zeta^{zexp} reduced: exponents < phi are basis monomials; the layer
    // [phi, p^n) reduces through z^phi = -(1 + z^{q} + ... + z^{(p-2)q}),
    // q = p^{n-1}.
    auto& poly = coeffs_.at(static_cast<std::size_t>(i));
    int t = zexp % pn_;
    if (t < 0) t += pn_;
    if (t < phi_) {
        poly[static_cast<std::size_t>(t)] += v;
        return;
    }
    const int q = pn_ / static_cast<int>(p_);
    const int r = t - phi_;  // 0 <= r < q
    for (int j = 0; j <= static_cast<int>(p_) - 2; ++j)
        poly[static_cast<std::size_t>(r + j * q)] -= v;
}

bool CycloSeries::operator==(const CycloSeries& b) const {
    if (p_ != b.p_ || n_ != b.n_ || trunc_ != b.trunc_) return false;
    return coeffs_ == b.coeffs_;
}

CycloSeries CycloSeries::twisted(const std::vector<mpq_class>& rat,
                                 std::int64_t p, int n, int trunc,
                                 std::int64_t k) {
    CycloSeries s(p, n, trunc);
    const int m = std::min<int>(trunc, static_cast<int>(rat.size()));
    for (int i = 0; i < m; ++i) {
        if (rat[static_cast<std::size_t>(i)] == 0) continue;
        const int ze = static_cast<int>(
            floormod(static_cast<std::int64_t>(i) * k, s.pn_));
        s.add_to_coeff(i, ze, rat[static_cast<std::size_t>(i)]);
    }
    return s;
}

CycloSeries cyclo_mul(const CycloSeries& a, const CycloSeries& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_ || a.trunc_ != b.trunc_)
        throw std::invalid_argument("cyclo_mul: level or truncation mismatch");
    CycloSeries r(a.p_, a.n_, a.trunc_);
    const int phi = a.phi_;
    const int q = a.pn_ / static_cast<int>(a.p_);
    std::vector<mpq_class> prod(static_cast<std::size_t>(2 * phi - 1));
    for (int i = 0; i < a.trunc_; ++i) {
        const auto& ca = a.coeffs_[static_cast<std::size_t>(i)];
        bool za = true;
        for (const auto& v : ca)
            if (v != 0) { za = false; break; }
        if (za) continue;
        for (int j = 0; i + j < a.trunc_; ++j) {
            const auto& cb = b.coeffs_[static_cast<std::size_t>(j)];
            for (auto& v : prod) v = 0;
            bool any = false;
            for (int s = 0; s < phi; ++s) {
                if (ca[static_cast<std::size_t>(s)] == 0) continue;
                for (int t = 0; t < phi; ++t) {
                    if (cb[static_cast<std::size_t>(t)] == 0) continue;
                    prod[static_cast<std::size_t>(s + t)] +=
                        ca[static_cast<std::size_t>(s)] *
                        cb[static_cast<std::size_t>(t)];
                    any = true;
                }
            }
            if (!any) continue;
            // reduce degrees [phi, 2phi-2]
            for (int s = 2 * phi - 2; s >= phi; --s) {
                const mpq_class& v = prod[static_cast<std::size_t>(s)];
                if (v == 0) continue;
                const int rr = s - phi;
                for (int u = 0; u <= static_cast<int>(a.p_) - 2; ++u)
                    prod[static_cast<std::size_t>(rr + u * q)] -= v;
                prod[static_cast<std::size_t>(s)] = 0;
            }
            auto& out = r.coeffs_[static_cast<std::size_t>(i + j)];
            for (int s = 0; s < phi; ++s)
                out[static_cast<std::size_t>(s)] += prod[static_cast<std::size_t>(s)];
        }
    }
    return r;
}

bool verify_norm_identity(std::int64_t p, int n, int N) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("verify_norm_identity: p must be prime");
    if (n < 1 || N < 1)
        throw std::invalid_argument("verify_norm_identity: need n >= 1, N >= 1");
    const auto rat = ah_coeffs(p, N);
    int pn = 1;
    for (int i = 0; i < n; ++i) pn *= static_cast<int>(p);
    CycloSeries prod = CycloSeries::one(p, n, N);
    for (int k = 0; k < pn; ++k)
        prod = cyclo_mul(prod, CycloSeries::twisted(rat, p, n, N, k));
    CycloSeries rhs(p, n, N);
    for (int i = 0; static_cast<std::int64_t>(i) * pn < N; ++i)
        rhs.add_to_coeff(i * pn, 0, rat[static_cast<std::size_t>(i)]);
    return prod == rhs;
}

}  // namespace swp
