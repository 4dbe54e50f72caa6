#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "swp/gf.hpp"
#include "swp/intutil.hpp"

using namespace swp;

namespace {

FFElem random_elem(const Field::Ptr& F, std::mt19937_64& rng) {
    std::vector<std::int64_t> c(F->e());
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % F->p());
    return F->from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("construction is deterministic and validates inputs") {
    auto F2 = Field::make(2, 1);
    CHECK(F2->p() == 2);
    CHECK(F2->unit_group_order() == 1);

    auto F9 = Field::make(3, 2);
    CHECK(F9->unit_group_order() == 8);
    auto F9b = Field::make(3, 2);
    CHECK(F9->modulus() == F9b->modulus());

    // x^2 + 1 has no root mod 3 (brute force), so it is accepted.
    for (std::int64_t x = 0; x < 3; ++x)
        CHECK((x * x + 1) % 3 != 0);
    auto F9c = Field::make(3, 2, {1, 0, 1});
    CHECK(F9c->modulus() == std::vector<std::int64_t>({1, 0, 1}));

    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 2, {2, 0, 1}), std::invalid_argument);  // x^2+2=(x+1)(x+2)
    CHECK_THROWS_AS(Field::make(3, 2, {1, 0, 2}), std::invalid_argument);  // not monic
}

TEST_CASE("arithmetic in F_9 = F_3[t]/(t^2+1)") {
    auto F = Field::make(3, 2, {1, 0, 1});
    auto t = F->gen();
    CHECK(t * t == F->from_int(-1));
    CHECK(t * t == F->from_int(2));
    CHECK((t + F->zero()) == t);
    CHECK(t * t.inverse() == F->one());
    CHECK_THROWS_AS(F->zero().inverse(), std::invalid_argument);

    auto G = Field::make(3, 2);
    if (!(G->modulus() == F->modulus()))
        CHECK_THROWS_AS(t + G->gen(), std::invalid_argument);
}

TEST_CASE("frobenius, trace, order in F_9") {
    auto F = Field::make(3, 2, {1, 0, 1});
    auto t = F->gen();
    CHECK(t.frobenius(0) == t);
    CHECK(t.frobenius(2) == t);
    CHECK(t.frobenius(1) == -t);  // t^3 = t*t^2 = -t
    CHECK(t.trace_to_prime() == F->zero());
    CHECK(F->one().trace_to_prime() == F->from_int(2));  // e mod p
    CHECK(F->zero().trace_to_prime() == F->zero());
    CHECK(F->one().mult_order() == 1);
    CHECK(F->from_int(-1).mult_order() == 2);
    CHECK(t.mult_order() == 4);  // t^2 = -1
    CHECK_THROWS_AS(F->zero().mult_order(), std::invalid_argument);
}

TEST_CASE("sampled ring and Galois identities") {
    std::mt19937_64 rng(0xC0FFEE);
    for (auto [p, e] : {std::pair<std::int64_t, int>{2, 4},
                        {3, 3},
                        {5, 2},
                        {7, 1}}) {
        auto F = Field::make(p, e);
        for (int iter = 0; iter < 40; ++iter) {
            auto x = random_elem(F, rng);
            auto y = random_elem(F, rng);
            auto z = random_elem(F, rng);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            // frobenius(.,1) is a field automorphism
            CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
            CHECK((x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1));
            CHECK(x.trace_to_prime() == x.frobenius(1).trace_to_prime());
            CHECK(x.frobenius(e) == x);  // x^{p^e} = x
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == F->one());
                CHECK(F->unit_group_order() % x.mult_order() == 0);
                CHECK(x.pow(static_cast<std::int64_t>(x.mult_order())) == F->one());
            }
        }
    }
}

TEST_CASE("elements of prescribed order") {
    auto F = Field::make(5, 2);  // unit group of order 24
    for (std::uint64_t m : {1ull, 2ull, 3ull, 4ull, 6ull, 8ull, 12ull, 24ull}) {
        auto a = F->element_of_order(m);
        CHECK(a.mult_order() == m);
    }
    CHECK_THROWS_AS(F->element_of_order(5), std::invalid_argument);
}

TEST_CASE("prime subfield extraction") {
    auto F = Field::make(3, 2);
    CHECK(F->from_int(7).as_prime_int() == 1);
    CHECK_THROWS_AS(F->gen().as_prime_int(), std::domain_error);
}
