#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfwit/field.hpp"
#include "test_util.hpp"

using namespace hopfwit;

namespace {

FieldPtr q_sqrt2() {
    FieldPtr q = Field::rationals();
    return Field::simple_extension(q, {q->from_int(-2), q->from_int(0), q->from_int(1)});
}

// L = K[x]/(x^2 - s) over K = GF(2)(s); isomorphic to GF(2)(u) with u^2 = s
FieldPtr f2u_over_f2u2() {
    FieldPtr k = Field::rational_functions(2, "s");
    return Field::simple_extension(k, {-k->generator(), k->zero(), k->one()});
}

} // namespace

TEST_CASE("prime field arithmetic") {
    FieldPtr f5 = Field::prime_field(5);
    CHECK(f5->from_int(3) + f5->from_int(4) == f5->from_int(2));
    CHECK(f5->from_int(2).inv() == f5->from_int(3));
    CHECK(f5->from_int(2) * f5->from_int(3) == f5->one());
    CHECK_THROWS_AS(Field::prime_field(6), NonPrimeModulus);
    CHECK_THROWS_AS(f5->zero().inv(), DivisionByZero);
}

TEST_CASE("rationals") {
    FieldPtr q = Field::rationals();
    CHECK(q->from_fraction(2, 3).inv() == q->from_fraction(3, 2));
    CHECK(q->parse("-6/4") == q->from_fraction(-3, 2));
    CHECK(q->parse("7") == q->from_int(7));
    CHECK_THROWS_AS(q->parse("1/0"), ParseError);
    CHECK_THROWS_AS(q->parse("abc"), ParseError);
}

TEST_CASE("simple extension Q(sqrt2)") {
    FieldPtr k = q_sqrt2();
    Scalar alpha = k->generator();
    CHECK(alpha * alpha == k->from_int(2));
    // alpha^{-1} = alpha/2, i.e. coefficient vector (0, 1/2)
    Scalar ai = alpha.inv();
    CHECK(ai == k->make_ext({Field::rationals()->zero(), Field::rationals()->from_fraction(1, 2)}));
    CHECK(ai * alpha == k->one());
    CHECK_THROWS_AS(Field::simple_extension(Field::rationals(), {Field::rationals()->one()}),
                    ZeroDegreeExtension);
    auto q = Field::rationals();
    CHECK_THROWS_AS(Field::simple_extension(q, {q->one(), q->from_int(2)}), NonMonicMinimalPolynomial);
}

TEST_CASE("rational function canonical form") {
    FieldPtr f = Field::rational_functions(2, "u");
    // (u^2+u)/(u) reduces to u+1
    Scalar v = f->make_ratfunc({0, 1, 1}, {0, 1});
    CHECK(v == f->parse("u+1"));
    CHECK(v.str() == "(u+1)/(1)");
    CHECK(f->parse("(u^2+u)/(u)") == v);
    CHECK_THROWS_AS(f->make_ratfunc({1}, {}), DivisionByZero);
}

TEST_CASE("frobenius identity of the inseparable tower") {
    FieldPtr l = f2u_over_f2u2();
    Scalar x = l->generator();
    // x^2 equals the base variable s, embedded as a constant
    Scalar s_in_l = l->make_ext({l->base()->generator()});
    CHECK(x * x == s_in_l);
}

TEST_CASE("field axioms on random triples") {
    std::vector<FieldPtr> fields = {
        Field::rationals(),          Field::prime_field(2),  Field::prime_field(3),
        Field::prime_field(5),       Field::rational_functions(2, "s"),
        q_sqrt2(),                   f2u_over_f2u2(),
    };
    auto rng = testutil::make_rng(1);
    for (const auto& f : fields) {
        CAPTURE(f->str());
        for (int iter = 0; iter < 1000; ++iter) {
            Scalar a = testutil::random_scalar(f, rng);
            Scalar b = testutil::random_scalar(f, rng);
            Scalar c = testutil::random_scalar(f, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + (-a) == f->zero());
            REQUIRE(a * f->one() == a);
            if (!a.is_zero()) REQUIRE(a * a.inv() == f->one());
        }
    }
}

TEST_CASE("parse/print round trip") {
    std::vector<FieldPtr> fields = {
        Field::rationals(),  Field::prime_field(5), Field::rational_functions(2, "s"),
        q_sqrt2(),           f2u_over_f2u2(),       Field::prime_field(3),
    };
    auto rng = testutil::make_rng(2);
    for (const auto& f : fields) {
        CAPTURE(f->str());
        for (int iter = 0; iter < 300; ++iter) {
            Scalar a = testutil::random_scalar(f, rng);
            REQUIRE(f->parse(a.str()) == a);
        }
    }
}

TEST_CASE("field spec json round trip") {
    std::vector<FieldPtr> fields = {Field::rationals(), Field::prime_field(5),
                                    Field::rational_functions(2, "s"), q_sqrt2(), f2u_over_f2u2()};
    for (const auto& f : fields) {
        FieldPtr g = Field::from_json(f->to_json());
        CHECK(f->same(g));
    }
    CHECK(Field::from_json(nlohmann::json{{"kind", "Q"}})->kind() == FieldKind::Rationals);
    CHECK_THROWS_AS(Field::from_json(nlohmann::json{{"kind", "nope"}}), ParseError);
}

TEST_CASE("generic polynomial gcd machinery") {
    FieldPtr q = Field::rationals();
    using namespace polyring;
    // gcd(x^2-1, x^2+2x+1) = x+1
    Poly a = {q->from_int(-1), q->zero(), q->one()};
    Poly b = {q->from_int(1), q->from_int(2), q->one()};
    Poly g = gcd_monic(a, b, q);
    REQUIRE(degree(g) == 1);
    CHECK(g[0] == q->one());
    CHECK(g[1] == q->one());
    auto [gg, u, v] = ext_gcd(a, b, q);
    CHECK(add(mul(u, a, q), mul(v, b, q), q) == gg);
    // derivative of x^2 - s over GF(2)(s) vanishes: inseparability marker
    FieldPtr k = Field::rational_functions(2, "s");
    Poly p = {-k->generator(), k->zero(), k->one()};
    CHECK(is_zero(derivative(p, k)));
    CHECK(degree(gcd_monic(p, derivative(p, k), k)) != 0);
}
