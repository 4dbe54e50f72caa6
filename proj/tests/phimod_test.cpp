#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swp/phimod.hpp"

using namespace swp;

namespace {

std::vector<FFElem> unit_x(const WeightInstance& inst) {
    std::vector<FFElem> x(static_cast<std::size_t>(inst.f), inst.field->zero());
    for (int i : inst.J_list()) x[static_cast<std::size_t>(i)] = inst.field->one();
    return x;
}

}  // namespace

TEST_CASE("normal form shape") {
    auto inst = make_instance(3, 1, {1}, 1u, 1, 1);
    auto seq = build_bdj(inst, unit_x(inst), inst.field->zero());
    REQUIRE(seq.period == 1);
    const auto& m = seq.mats[0];
    // h_0 = r_0 = 1: diagonal (u^0, a u^1), upper-right 1
    CHECK(m.entry[0][0].is_one());
    auto diag = m.entry[1][1].as_monomial();
    REQUIRE(diag.has_value());
    CHECK(diag->second == 1);
    CHECK(diag->first == inst.a);
    auto ur = m.entry[0][1].as_monomial();
    REQUIRE(ur.has_value());
    CHECK(ur->second == 0);
    CHECK(ur->first.is_one());
    CHECK(is_etale(seq));

    // all x = 0: diagonal matrices
    auto seq0 = build_bdj(inst, {inst.field->zero()}, inst.field->zero());
    CHECK(seq0.mats[0].entry[0][1].is_zero());

    // i outside J scales e by u^{r_i} and f by u^0
    auto inst2 = make_instance(3, 2, {1, 1}, 2u, 1, 1);  // J = {1}
    auto seq2 = build_bdj(inst2, unit_x(inst2), inst2.field->zero());
    auto e_col = seq2.mats[0].entry[0][0].as_monomial();
    REQUIRE(e_col.has_value());
    CHECK(e_col->second == 1);  // u^{r_0}
    auto f_col = seq2.mats[0].entry[1][1].as_monomial();
    REQUIRE(f_col.has_value());
    CHECK(f_col->second == 0);

    CHECK_THROWS_AS(build_bdj(inst2, {inst2.field->one(), inst2.field->one()},
                              inst2.field->zero()),
                    std::invalid_argument);
}

TEST_CASE("base change scales exponents and repeats blocks") {
    auto inst = make_instance(3, 2, {1, 1}, 2u, 2, 1);  // d = 2
    auto seq = build_bdj(inst, unit_x(inst), inst.field->zero());
    auto seqM = base_change_to_M(seq, inst.d);
    CHECK(seqM.period == 4);
    // exponent r_0 - h_0 = 1 becomes p^f - 1 = 8
    auto m0 = seqM.mats[0].entry[0][0].as_monomial();
    REQUIRE(m0.has_value());
    CHECK(m0->second == 8);
    // constants stay constants
    auto x1 = seqM.mats[1].entry[0][1].as_monomial();
    REQUIRE(x1.has_value());
    CHECK(x1->second == 0);
    // block at index i matches block at i mod f
    auto m2 = seqM.mats[2].entry[0][0].as_monomial();
    REQUIRE(m2.has_value());
    CHECK(m2->second == 8);
    CHECK(is_etale(seqM));
}

TEST_CASE("quadratic term of the trivial character moves to p(p^f-1)") {
    auto inst = make_instance(3, 1, {2}, 1u, 1, 1);
    REQUIRE(inst.chi == ChiClass::trivial);
    auto seq = build_bdj(inst, unit_x(inst), inst.field->one());
    auto seqM = base_change_to_M(seq, 1);
    const auto& ur = seqM.mats[0].entry[0][1];
    REQUIRE(ur.terms().size() == 2);
    CHECK(ur.terms().count(0) == 1);
    CHECK(ur.terms().count(3 * 2) == 1);  // p (p^f - 1)
}

TEST_CASE("change of basis: identity, diagonal bookkeeping, functoriality") {
    auto inst = make_instance(3, 2, {1, 2}, 2u, 2, 1);
    auto seq = base_change_to_M(build_bdj(inst, unit_x(inst), inst.field->zero()),
                                inst.d);
    const auto& F = inst.field;
    std::vector<DiagMonomial> ident(static_cast<std::size_t>(seq.period));
    for (auto& dm : ident) {
        dm.c0 = F->one();
        dm.c1 = F->one();
        dm.k0 = dm.k1 = 0;
    }
    auto same = change_basis(seq, ident);
    for (int i = 0; i < seq.period; ++i)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                CHECK(same.mats[static_cast<std::size_t>(i)].entry[r][c] ==
                      seq.mats[static_cast<std::size_t>(i)].entry[r][c]);

    // single diagonal entry u^k shifts the (0,0) exponent by p*k_{i-1} - k_i
    std::vector<DiagMonomial> D = ident;
    D[1].k0 = 2;
    auto shifted = change_basis(seq, D);
    auto before = seq.mats[1].entry[0][0].as_monomial();
    auto after = shifted.mats[1].entry[0][0].as_monomial();
    REQUIRE(before.has_value());
    REQUIRE(after.has_value());
    CHECK(after->second == before->second - 2);  // -k_i at i = 1
    auto wrap = shifted.mats[2].entry[0][0].as_monomial();
    auto wrap0 = seq.mats[2].entry[0][0].as_monomial();
    CHECK(wrap->second == wrap0->second + 3 * 2);  // +p*k_{i-1} at i = 2

    // composing two changes equals the componentwise product
    std::vector<DiagMonomial> D2 = ident;
    D2[0].c1 = F->from_int(-1);
    D2[3].k1 = -1;
    auto two_step = change_basis(change_basis(seq, D), D2);
    std::vector<DiagMonomial> Dprod = ident;
    for (int i = 0; i < seq.period; ++i) {
        Dprod[static_cast<std::size_t>(i)].c0 =
            D[static_cast<std::size_t>(i)].c0 * D2[static_cast<std::size_t>(i)].c0;
        Dprod[static_cast<std::size_t>(i)].c1 =
            D[static_cast<std::size_t>(i)].c1 * D2[static_cast<std::size_t>(i)].c1;
        Dprod[static_cast<std::size_t>(i)].k0 =
            D[static_cast<std::size_t>(i)].k0 + D2[static_cast<std::size_t>(i)].k0;
        Dprod[static_cast<std::size_t>(i)].k1 =
            D[static_cast<std::size_t>(i)].k1 + D2[static_cast<std::size_t>(i)].k1;
    }
    auto one_step = change_basis(seq, Dprod);
    for (int i = 0; i < seq.period; ++i)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                CHECK(one_step.mats[static_cast<std::size_t>(i)].entry[r][c] ==
                      two_step.mats[static_cast<std::size_t>(i)].entry[r][c]);
    CHECK(is_etale(one_step));
}

TEST_CASE("standard change of basis trivializes the diagonal") {
    for (auto [p, f, rvec, J, d, aord] :
         {std::tuple<std::int64_t, int, std::vector<int>, std::uint32_t, int,
                     std::uint64_t>{3, 2, {1, 1}, 2u, 1, 1},
          {3, 2, {1, 1}, 2u, 2, 2},
          {2, 2, {1, 2}, 2u, 3, 3},
          {5, 1, {4}, 1u, 2, 2}}) {
        auto inst = make_instance(p, f, rvec, J, d, aord);
        auto seq = change_basis(
            base_change_to_M(build_bdj(inst, unit_x(inst), inst.field->zero()),
                             inst.d),
            standard_basis_change(inst));
        for (const auto& m : seq.mats) {
            CHECK(m.entry[0][0].is_one());
            CHECK(m.entry[1][1].is_one());
            CHECK(m.entry[1][0].is_zero());
        }
        CHECK(is_etale(seq));
    }
}

TEST_CASE("extraction reproduces the pole exponents") {
    // worked instance: single term at exponent -6
    auto inst = make_instance(3, 2, {1, 1}, 2u, 1, 1);
    auto seq = change_basis(
        base_change_to_M(build_bdj(inst, unit_x(inst), inst.field->zero()),
                         inst.d),
        standard_basis_change(inst));
    auto cls = extract_as_class(seq);
    REQUIRE(cls.terms().size() == 1);
    CHECK(cls.terms().begin()->first == -6);

    // all x = 0 extracts the zero element
    auto seq0 = change_basis(
        base_change_to_M(
            build_bdj(inst,
                      std::vector<FFElem>(2, inst.field->zero()),
                      inst.field->zero()),
            inst.d),
        standard_basis_change(inst));
    CHECK(extract_as_class(seq0).is_zero());

    // trivial character: the quadratic term lands at exponent 0
    auto instt = make_instance(3, 1, {2}, 1u, 1, 1);
    auto seqt = change_basis(
        base_change_to_M(build_bdj(instt, unit_x(instt), instt.field->one()),
                         instt.d),
        standard_basis_change(instt));
    auto clst = extract_as_class(seqt);
    REQUIRE(clst.terms().size() == 2);
    CHECK(clst.terms().count(-6) == 1);  // -xi_0 = -p(p^f-1)
    CHECK(clst.terms().count(0) == 1);

    // non-unipotent input is rejected
    auto raw = build_bdj(inst, unit_x(inst), inst.field->zero());
    CHECK_THROWS_AS(extract_as_class(raw), std::invalid_argument);
}
