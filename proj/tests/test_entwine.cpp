#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfwit/entwine.hpp"
#include "test_util.hpp"

using namespace hopfwit;

namespace {

Presentation kc2(const FieldPtr& f) { return group_algebra(cyclic_group_table(2), f); }

EntwiningStructure relhopf_regular(const Presentation& l) {
    return relative_hopf_entwining(l, l, regular_comodule(l));
}

} // namespace

TEST_CASE("trivial entwinings satisfy the axioms") {
    Presentation a = kc2(Field::rationals());
    CHECK(check_entwining(trivial_entwining_modules(a)).ok());
    Presentation h4 = sweedler_h4(Field::rationals());
    CHECK(check_entwining(trivial_entwining_modules(h4)).ok());
    CHECK(check_entwining(trivial_entwining_comodules(h4)).ok());
}

TEST_CASE("doi-koppinen entwining for (kC2, kC2, kC2)") {
    Presentation l = kc2(Field::rationals());
    DoiKoppinenDatum d{l, l, regular_comodule(l), l, regular_module(l)};
    CHECK(check_doi_koppinen(d).ok());
    EntwiningStructure e = entwining_from_doi_koppinen(d);
    CHECK(check_entwining(e).ok());
    // on group-likes psi(g (x) h) = h (x) gh
    auto table = cyclic_group_table(2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Vec col = e.psi.col(i * 2 + j);
            Vec expect = zero_vec(l.field, 4);
            expect[j * 2 + table[i][j]] = l.field->one();
            REQUIRE(col == expect);
        }
}

TEST_CASE("plain flip is the trivial entwining even for H4; a scaled flip fails") {
    Presentation h4 = sweedler_h4(Field::rationals());
    Matrix flip = leg_permutation(h4.field, {4, 4}, {1, 0});
    EntwiningStructure honest{h4, h4, flip};
    CHECK(check_entwining(honest).ok());

    EntwiningStructure scaled{h4, h4, flip * h4.field->from_int(2)};
    CheckReport rep = check_entwining(scaled);
    CHECK(!rep.ok());
    bool mult_failed = false;
    for (const auto& it : rep.items)
        if (it.axiom == "multiplicativity") {
            mult_failed = !it.pass;
            CHECK(it.detail.substr(0, 9) == "at basis ");
        }
    CHECK(mult_failed);
}

TEST_CASE("yetter-drinfeld entwinings") {
    Presentation l = kc2(Field::rationals());
    EntwiningStructure e = entwining_yetter_drinfeld(l);
    CHECK(check_entwining(e).ok());
    // abelian group with S = id: psi is the flip
    CHECK(e.psi == leg_permutation(l.field, {2, 2}, {1, 0}));

    Presentation h4 = sweedler_h4(Field::rationals());
    EntwiningStructure e4 = entwining_yetter_drinfeld(h4);
    CHECK(check_entwining(e4).ok());

    Presentation h4_3 = sweedler_h4(Field::prime_field(3));
    CHECK(check_entwining(entwining_yetter_drinfeld(h4_3)).ok());
}

TEST_CASE("yetter-drinfeld psi on H4: hand-computed columns") {
    // psi(g (x) h) = h_(2) (x) S(h_(1)) g h_(3) on the basis 1, g, x, w = gx.
    // For c = g, a = x the three-fold comultiplication of x gives
    // (x,1,1), (g,x,1), (g,g,x), hence
    //   psi(g (x) x) = 1 (x) S(x) g  +  x (x) S(g) g  +  g (x) S(g) g x
    //               = 1 (x) x  +  x (x) 1  +  g (x) x.
    // For c = x, a = g:  psi(x (x) g) = g (x) S(g) x g = g (x) (-x).
    Presentation h4 = sweedler_h4(Field::rationals());
    EntwiningStructure e = entwining_yetter_drinfeld(h4);
    const FieldPtr& f = h4.field;

    Vec col_gx = e.psi.col(1 * 4 + 2); // input g (x) x
    Vec expect_gx = zero_vec(f, 16);
    expect_gx[0 * 4 + 2] = f->one(); // 1 (x) x
    expect_gx[2 * 4 + 0] = f->one(); // x (x) 1
    expect_gx[1 * 4 + 2] = f->one(); // g (x) x
    CHECK(col_gx == expect_gx);

    Vec col_xg = e.psi.col(2 * 4 + 1); // input x (x) g
    Vec expect_xg = zero_vec(f, 16);
    expect_xg[1 * 4 + 2] = f->from_int(-1); // -(g (x) x)
    CHECK(col_xg == expect_xg);

    // group-likes stay symmetric: psi(g (x) g) = g (x) g^{-1} g g = g (x) g
    Vec col_gg = e.psi.col(1 * 4 + 1);
    Vec expect_gg = zero_vec(f, 16);
    expect_gg[1 * 4 + 1] = f->one();
    CHECK(col_gg == expect_gg);

    // the cofree module on the regular H4 module is entwined for this psi
    EntwinedModule ga = cofree_on_module(e, regular_module(h4));
    CHECK(check_entwined_module(e, ga).ok());
}

TEST_CASE("cofree modules on larger spaces are direct sums of the line case") {
    Presentation l = kc2(Field::rationals());
    EntwiningStructure e = relhopf_regular(l);
    EntwinedModule w1 = cofree_on_space(e, 1);
    EntwinedModule w2 = cofree_on_space(e, 2);
    EntwinedModule sum = entwined_direct_sum(w1, w1);
    REQUIRE(sum.dim == w2.dim);
    for (size_t j = 0; j < e.dimA(); ++j) CHECK(sum.action.act[j] == w2.action.act[j]);
    CHECK(sum.coaction.rho == w2.coaction.rho);
}

TEST_CASE("builders always produce valid entwinings across the catalog") {
    std::vector<Presentation> hopfs = {kc2(Field::rationals()), kc2(Field::prime_field(2)),
                                       group_algebra(cyclic_group_table(3), Field::prime_field(3)),
                                       group_algebra(symmetric3_table(), Field::prime_field(5)),
                                       sweedler_h4(Field::rationals()),
                                       sweedler_h4(Field::prime_field(3))};
    for (const auto& l : hopfs) {
        CAPTURE(l.dim);
        CHECK(check_entwining(relhopf_regular(l)).ok());
        CHECK(check_entwining(entwining_yetter_drinfeld(l)).ok());
        CHECK(check_entwining(lc_entwining(l, l, regular_module(l))).ok());
    }
}

TEST_CASE("plain modules are entwined modules of the trivial datum") {
    Presentation a = kc2(Field::rationals());
    EntwiningStructure e = trivial_entwining_modules(a);
    EntwinedModule m;
    m.dim = 2;
    m.action = regular_module(a);
    // coaction over the one-dimensional C: m -> m (x) 1
    m.coaction = ComoduleCoaction{a.field, 2, Matrix::identity(a.field, 2)};
    CHECK(check_entwined_module(e, m).ok());

    // zero coaction: the comodule counit law is the first failure
    EntwinedModule bad = m;
    bad.coaction.rho = Matrix(a.field, 2, 2);
    CheckReport rep = check_entwined_module(e, bad);
    CHECK(!rep.ok());
    bool counit_failed = false;
    for (const auto& it : rep.items)
        if (it.axiom == "comodule: coaction counit law" && !it.pass) counit_failed = true;
    CHECK(counit_failed);
}

TEST_CASE("cofree induction") {
    Presentation l = kc2(Field::rationals());
    EntwiningStructure e = relhopf_regular(l);
    // G(A) is entwined
    EntwinedModule ga = cofree_on_module(e, regular_module(l));
    CHECK(check_entwined_module(e, ga).ok());

    // Hom(A,V)(x)C for A = C = kC2 and V = k is 4-dimensional and entwined
    EntwinedModule w = cofree_on_space(e, 1);
    CHECK(w.dim == 4);
    CHECK(check_entwined_module(e, w).ok());

    // for (k,k,C) the cofree module on k is the regular comodule
    Presentation c = kc2(Field::prime_field(3));
    EntwiningStructure ec = trivial_entwining_comodules(c);
    ModuleAction triv_k{c.field, 1, {Matrix::identity(c.field, 1)}};
    EntwinedModule gc = cofree_on_module(ec, triv_k);
    CHECK(gc.coaction.rho == c.comult());
    CHECK(check_entwined_module(ec, gc).ok());
}

TEST_CASE("cofree construction is functorial on module morphisms") {
    Presentation l = kc2(Field::rationals());
    EntwiningStructure e = relhopf_regular(l);
    auto rng = testutil::make_rng(31);
    // module endomorphisms of the regular module are left multiplications
    auto basis = module_hom(l, regular_module(l), regular_module(l));
    REQUIRE(basis.size() == 2);
    Matrix f = basis[0] + basis[1] * testutil::random_scalar(l.field, rng);
    Matrix g = basis[1];
    Matrix idc = Matrix::identity(l.field, e.dimC());
    CHECK(kron(f * g, idc) == kron(f, idc) * kron(g, idc));
}

TEST_CASE("unit map is an entwined morphism and splits when it should") {
    Presentation l = kc2(Field::rationals());
    EntwiningStructure e = relhopf_regular(l);
    EntwinedModule m;
    m.dim = 2;
    m.action = regular_module(l);
    m.coaction = regular_comodule(l);
    REQUIRE(check_entwined_module(e, m).ok());

    EntwinedModule w = cofree_on_module(e, hom_module(e.A, m.dim));
    Matrix eta = unit_map(e, m);
    // eta is A-linear and C-colinear
    for (size_t j = 0; j < e.dimA(); ++j)
        CHECK(eta * m.action.act[j] == w.action.act[j] * eta);
    Matrix idc = Matrix::identity(l.field, e.dimC());
    CHECK(kron(eta, idc) * m.coaction.rho == w.coaction.rho * eta);

    auto r = unit_splits(e, m);
    REQUIRE(r.has_value());
    CHECK(*r * eta == Matrix::identity(l.field, 2));
}

TEST_CASE("unit splitting dichotomy matches total-integral existence") {
    // (H4, k): the trivial entwined module splits iff a total integral exists
    Presentation h4 = sweedler_h4(Field::rationals());
    Presentation k = unit_presentation(h4.field);
    EntwiningStructure e = relative_hopf_entwining(h4, k, trivial_comodule(h4, 1));
    EntwinedModule m;
    m.dim = 1;
    m.action = ModuleAction{h4.field, 1, {Matrix::identity(h4.field, 1)}};
    m.coaction = trivial_comodule(h4, 1);
    REQUIRE(check_entwined_module(e, m).ok());
    CHECK(!unit_splits(e, m).has_value());

    // same construction over kC2 does split (its total integral exists)
    Presentation l = kc2(Field::rationals());
    Presentation k2 = unit_presentation(l.field);
    EntwiningStructure e2 = relative_hopf_entwining(l, k2, trivial_comodule(l, 1));
    EntwinedModule m2;
    m2.dim = 1;
    m2.action = ModuleAction{l.field, 1, {Matrix::identity(l.field, 1)}};
    m2.coaction = trivial_comodule(l, 1);
    CHECK(unit_splits(e2, m2).has_value());
}

TEST_CASE("entwined hom equals the intersection of module and comodule homs") {
    Presentation l = kc2(Field::rationals());
    EntwiningStructure e = relhopf_regular(l);
    EntwinedModule m;
    m.dim = 2;
    m.action = regular_module(l);
    m.coaction = regular_comodule(l);
    EntwinedModule g = cofree_on_module(e, regular_module(l));

    auto both = entwined_hom(e, m, g);
    auto mod = module_hom(l, m.action, g.action);
    auto com = comodule_hom(l, m.coaction, g.coaction);
    std::vector<Vec> mod_v, com_v, both_v;
    for (const auto& b : mod) mod_v.push_back(b.vec_rowmajor());
    for (const auto& b : com) com_v.push_back(b.vec_rowmajor());
    for (const auto& b : both) both_v.push_back(b.vec_rowmajor());
    // double inclusion
    for (const auto& b : both_v) {
        CHECK(in_span(mod_v, b, l.field));
        CHECK(in_span(com_v, b, l.field));
    }
    size_t count_in_both = 0;
    for (const auto& b : mod_v)
        if (in_span(com_v, b, l.field)) {
            CHECK(in_span(both_v, b, l.field));
            ++count_in_both;
        }
    (void)count_in_both;
}

TEST_CASE("direct sums and conjugates stay entwined") {
    Presentation l = kc2(Field::rationals());
    EntwiningStructure e = relhopf_regular(l);
    EntwinedModule m;
    m.dim = 2;
    m.action = regular_module(l);
    m.coaction = regular_comodule(l);
    EntwinedModule s = entwined_direct_sum(m, m);
    CHECK(s.dim == 4);
    CHECK(check_entwined_module(e, s).ok());
    auto rng = testutil::make_rng(33);
    Matrix p = testutil::random_invertible(l.field, 4, rng);
    EntwinedModule c = entwined_conjugate(s, p);
    CHECK(check_entwined_module(e, c).ok());
}

TEST_CASE("entwining json round trip") {
    Presentation l = kc2(Field::prime_field(5));
    EntwiningStructure e = entwining_yetter_drinfeld(l);
    EntwiningStructure f = EntwiningStructure::from_json(e.to_json());
    CHECK(f.psi == e.psi);
    CHECK(f.hash() == e.hash());
}
