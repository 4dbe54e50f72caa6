#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "swp/artin_hasse.hpp"

using namespace swp;

namespace {

// Independent route to the same coefficients: the first-order recurrence
// n c_n = sum_{p^m <= n} c_{n - p^m} obtained from E' = A' E.
std::vector<mpq_class> ah_coeffs_ode(std::int64_t p, int N) {
    std::vector<mpq_class> c(static_cast<std::size_t>(N), 0);
    c[0] = 1;
    for (int n = 1; n < N; ++n) {
        mpq_class s = 0;
        for (std::int64_t e = 1; e <= n; e *= p) {
            s += c[static_cast<std::size_t>(n - e)];
            if (e > n / p) break;
        }
        c[static_cast<std::size_t>(n)] = s / n;
    }
    return c;
}

}  // namespace

TEST_CASE("leading coefficients and the recurrence oracle") {
    for (std::int64_t p : {2, 3, 5}) {
        auto c = ah_coeffs(p, 20);
        CHECK(c[0] == 1);
        CHECK(c[1] == 1);
        auto o = ah_coeffs_ode(p, 20);
        for (int i = 0; i < 20; ++i)
            CHECK(c[static_cast<std::size_t>(i)] == o[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("p-integrality of the coefficients") {
    for (std::int64_t p : {2, 3, 5}) {
        auto c = ah_coeffs(p, 50);
        for (const auto& q : c) {
            mpz_class den = q.get_den();
            CHECK(mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)) != 0);
        }
        auto m = ah_mod_p(p, 50);
        CHECK(m[0] == 1);
        CHECK(m[1] == 1);
    }
}

TEST_CASE("derivative identity in characteristic zero") {
    for (std::int64_t p : {2, 3}) {
        const int N = 24;
        auto c = ah_coeffs(p, N);
        // q = E'/E via the division recurrence, exact rationals
        std::vector<mpq_class> deriv(static_cast<std::size_t>(N - 1));
        for (int i = 0; i + 1 < N; ++i)
            deriv[static_cast<std::size_t>(i)] =
                c[static_cast<std::size_t>(i + 1)] * (i + 1);
        std::vector<mpq_class> q(static_cast<std::size_t>(N - 1));
        for (int i = 0; i + 1 < N; ++i) {
            mpq_class s = deriv[static_cast<std::size_t>(i)];
            for (int j = 1; j <= i; ++j)
                s -= c[static_cast<std::size_t>(j)] *
                     q[static_cast<std::size_t>(i - j)];
            q[static_cast<std::size_t>(i)] = s;
        }
        for (int i = 0; i + 1 < N; ++i) {
            bool is_pm1 = false;
            for (std::int64_t e = 1; e <= i + 1; e *= p) {
                if (e - 1 == i) is_pm1 = true;
                if (e > (i + 1) / p) break;
            }
            CHECK(q[static_cast<std::size_t>(i)] == (is_pm1 ? 1 : 0));
        }
    }
}

TEST_CASE("dlog over F_p matches the sparse expansion") {
    for (std::int64_t p : {2, 3, 5}) {
        const int N = 50;
        auto q = ah_dlog_mod_p(p, N);
        for (int i = 0; i + 1 < N; ++i) {
            bool is_pm1 = false;
            for (std::int64_t e = 1; e <= i + 1; e *= p) {
                if (e - 1 == i) is_pm1 = true;
                if (e > (i + 1) / p) break;
            }
            CHECK(q[static_cast<std::size_t>(i)] == (is_pm1 ? 1 : 0));
        }
    }
}

TEST_CASE("cyclotomic series arithmetic") {
    const std::int64_t p = 3;
    const int n = 2, N = 6;
    auto one = CycloSeries::one(p, n, N);
    CycloSeries x(p, n, N);
    x.add_to_coeff(0, 0, 1);
    x.add_to_coeff(1, 1, mpq_class(1, 2));  // 1 + (zeta/2) t
    CHECK(cyclo_mul(x, one) == x);

    // (1+t)(1-t) = 1 - t^2
    CycloSeries a(p, n, N), b(p, n, N), expect(p, n, N);
    a.add_to_coeff(0, 0, 1);
    a.add_to_coeff(1, 0, 1);
    b.add_to_coeff(0, 0, 1);
    b.add_to_coeff(1, 0, -1);
    expect.add_to_coeff(0, 0, 1);
    expect.add_to_coeff(2, 0, -1);
    CHECK(cyclo_mul(a, b) == expect);

    // zeta * zeta^{p^n - 1} = 1 after cyclotomic reduction
    CycloSeries z(p, n, N), zc(p, n, N);
    z.add_to_coeff(0, 1, 1);
    zc.add_to_coeff(0, 9 - 1, 1);
    CHECK(cyclo_mul(z, zc) == one);

    // commutativity and associativity on sampled inputs
    CycloSeries c(p, n, N);
    c.add_to_coeff(0, 4, mpq_class(2, 3));
    c.add_to_coeff(2, 7, -1);
    CHECK(cyclo_mul(a, c) == cyclo_mul(c, a));
    CHECK(cyclo_mul(cyclo_mul(a, b), c) == cyclo_mul(a, cyclo_mul(b, c)));

    CHECK_THROWS_AS(cyclo_mul(a, CycloSeries(p, n, N + 1)),
                    std::invalid_argument);
}

TEST_CASE("norm identity at small levels") {
    CHECK(verify_norm_identity(2, 1, 8));
    CHECK(verify_norm_identity(3, 1, 12));
    CHECK(verify_norm_identity(2, 1, 1));  // degenerate truncation
}

TEST_CASE("norm identity for p=2, n=1 against a plain rational oracle") {
    // Level p=2, n=1 lives in Q: E(t) E(-t) = E(t^2) can be checked with
    // rational arithmetic only, independently of the cyclotomic machinery.
    const int N = 16;
    auto c = ah_coeffs(2, N);
    std::vector<mpq_class> prod(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; i + j < N; ++j) {
            mpq_class term = c[static_cast<std::size_t>(i)] *
                             c[static_cast<std::size_t>(j)];
            if (j % 2) term = -term;
            prod[static_cast<std::size_t>(i + j)] += term;
        }
    for (int k = 0; k < N; ++k) {
        mpq_class expect = (k % 2 == 0) ? c[static_cast<std::size_t>(k / 2)] : 0;
        CHECK(prod[static_cast<std::size_t>(k)] == expect);
    }
}
