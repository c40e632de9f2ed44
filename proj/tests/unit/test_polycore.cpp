#include <doctest.h>

#include <map>

#include "cylcalc/order.hpp"
#include "cylcalc/parse.hpp"
#include "cylcalc/polynomial.hpp"
#include "cylcalc/rational.hpp"
#include "cylcalc/varset.hpp"
#include "support/gen.hpp"

using namespace cylcalc;

TEST_CASE("varset basics") {
    VarSet a{3, 1, 1, 0};
    CHECK(a.size() == 3);
    CHECK(a.to_string() == "{0, 1, 3}");
    CHECK(a.contains(1));
    CHECK_FALSE(a.contains(2));
    CHECK(VarSet{0, 1}.subset_of(a));
    CHECK_FALSE(a.subset_of(VarSet{0, 1}));
    CHECK(a.unioned(VarSet{2}).to_string() == "{0, 1, 2, 3}");
    CHECK(a.intersected(VarSet{1, 2}).to_string() == "{1}");
    CHECK(a.minus(VarSet{1}).to_string() == "{0, 3}");
    CHECK(a.fresh_after() == 4);
    CHECK(VarSet{}.fresh_after() == 0);
    CHECK(VarSet::range(2, 4).to_string() == "{2, 3, 4}");
    CHECK(VarSet::range(3, 2).empty());
}

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a = Rational::parse("2/4");
    CHECK(a.to_string() == "1/2");
    CHECK((a + a).to_string() == "1");
    CHECK((Rational(1) / Rational(3) * Rational(3)).to_string() == "1");
    CHECK((Rational(-2, 8)).to_string() == "-1/4");
    CHECK(Rational(7, 2).floor().to_string() == "3");
    CHECK(Rational(-7, 2).floor().to_string() == "-4");
    CHECK(Rational(2, 3).pow(3).to_string() == "8/27");
    CHECK(Rational(5).inverse().to_string() == "1/5");
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
}

TEST_CASE("monomial algebra") {
    Monomial x = Monomial::var(0, 2) * Monomial::var(3);
    CHECK(x.to_string() == "t0^2*t3");
    CHECK(x.total_degree() == 3);
    CHECK(x.exponent_of(0) == 2);
    CHECK(x.exponent_of(1) == 0);
    CHECK(Monomial().to_string() == "1");

    Monomial y = Monomial::var(0) * Monomial::var(1);
    CHECK(Monomial::lcm(x, y).to_string() == "t0^2*t1*t3");
    CHECK_FALSE(Monomial::coprime(x, y));
    CHECK(Monomial::coprime(Monomial::var(1), Monomial::var(2)));
    CHECK(Monomial::var(0).divides(x));
    CHECK_FALSE(y.divides(x));
    CHECK(Monomial::var(0).divide_into(x).to_string() == "t0*t3");
    CHECK(x.support().to_string() == "{0, 3}");
}

TEST_CASE("grevlex order: degree first, then reverse-lex tie break") {
    MonomialOrder o = MonomialOrder::grevlex();
    Monomial t0 = Monomial::var(0), t1 = Monomial::var(1);
    CHECK(o.compare(t0 * t0, t1) > 0);  // degree dominates
    CHECK(o.compare(t1, t0) > 0);       // same degree: variables ascend t0 < t1 < ...
    // x*z vs y^2 in (x,y,z) = (t0,t1,t2): grevlex puts y^2 above x*z.
    CHECK(o.compare(Monomial::var(1, 2), t0 * Monomial::var(2)) > 0);
    CHECK(o.compare(t0, t0) == 0);
}

TEST_CASE("lex order compares the largest variable first") {
    MonomialOrder o = MonomialOrder::lex();
    Monomial t0 = Monomial::var(0), t1 = Monomial::var(1);
    CHECK(o.compare(t1, t0 * t0 * t0) > 0);  // t1 beats any power of t0
    CHECK(o.compare(t1 * t0, t1) > 0);
    CHECK(o.compare(Monomial::var(1, 2), t1 * t0) > 0);
}

TEST_CASE("block order sorts the eliminated variables in front") {
    MonomialOrder o = MonomialOrder::block_elim(VarSet{2});
    // Anything containing t2 dominates anything without it.
    CHECK(o.compare(Monomial::var(2), Monomial::var(0, 5)) > 0);
    bool total_on_rest = o.compare(Monomial::var(0), Monomial::var(1)) != 0;
    CHECK(total_on_rest);
    CHECK(o.to_string() == "block-elim{2}");
}

TEST_CASE("order laws on random monomials") {
    testgen::Rng rng(424201);
    VarSet level{0, 1, 2, 3};
    for (MonomialOrder o : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                            MonomialOrder::block_elim(VarSet{0, 2})}) {
        for (int i = 0; i < 200; ++i) {
            Monomial a = testgen::random_monomial(rng, level, 4);
            Monomial b = testgen::random_monomial(rng, level, 4);
            Monomial c = testgen::random_monomial(rng, level, 4);
            // Antisymmetry and totality.
            CHECK(o.compare(a, b) == -o.compare(b, a));
            if (o.compare(a, b) == 0) CHECK(a == b);
            // Compatibility with multiplication.
            CHECK(o.compare(a * c, b * c) == o.compare(a, b));
            // The unit monomial is minimal.
            if (!(a == Monomial())) CHECK(o.compare(a, Monomial()) > 0);
        }
    }
}

TEST_CASE("polynomial arithmetic examples") {
    Polynomial p = parse_polynomial("t0 - 1");
    Polynomial q = parse_polynomial("t0 + 1");
    CHECK((p * q).to_string() == "t0^2 - 1");
    CHECK((p - p).is_zero());
    CHECK((p + Polynomial::zero()).to_string() == "t0 - 1");
    CHECK(parse_polynomial("t0 - t0").is_zero());
}

TEST_CASE("parsing reads the documented grammar") {
    CHECK(parse_polynomial("t0^2 - 1").to_string() == "t0^2 - 1");
    CHECK(parse_polynomial("(t0 - 2)*t3 - 1").to_string() == "t0*t3 - 2*t3 - 1");
    CHECK(parse_polynomial("3/4*t1*t1").to_string() == "3/4*t1^2");
    CHECK(parse_polynomial("-t0 + 2").to_string() == "-t0 + 2");
    CHECK(parse_polynomial("7").to_string() == "7");
    CHECK(parse_polynomial("2*(t0 + 1)*(t0 - 1)").to_string() == "2*t0^2 - 2");
}

TEST_CASE("parse errors carry a byte offset") {
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("t0 +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("t0 t1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(t0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
    try {
        parse_polynomial("t0 + %");
    } catch (const ParseError& e) {
        CHECK(e.pos() == 5);
    }
}

TEST_CASE("polynomial list parsing") {
    auto polys = parse_polynomial_list("t0; t1 - 1 ;t2");
    REQUIRE(polys.size() == 3);
    CHECK(polys[1].to_string() == "t1 - 1");
    CHECK(parse_polynomial_list("t0;").size() == 1);  // trailing separator tolerated
    CHECK_THROWS_AS(parse_polynomial_list("t0;;t1"), ParseError);
}

TEST_CASE("render then parse is the identity on random polynomials") {
    testgen::Rng rng(424202);
    VarSet level{0, 1, 2, 5};
    for (int i = 0; i < 200; ++i) {
        Polynomial p = testgen::random_poly(rng, level, 3, 4);
        CHECK(parse_polynomial(p.to_string()) == p);
    }
    CHECK(parse_polynomial(Polynomial::zero().to_string()).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    testgen::Rng rng(424203);
    VarSet level{0, 1, 2};
    for (int i = 0; i < 60; ++i) {
        Polynomial a = testgen::random_poly(rng, level, 3, 3);
        Polynomial b = testgen::random_poly(rng, level, 3, 3);
        Polynomial c = testgen::random_poly(rng, level, 3, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.support().subset_of(level));
        // Integral domain: supports multiply out fully.
        CHECK((a * b).support() == a.support().unioned(b.support()));
    }
}

TEST_CASE("evaluation is exact substitution") {
    Polynomial p = parse_polynomial("(t0 - 2)*t1 - 1");
    std::map<VarIndex, Rational> x{{0, Rational(3)}, {1, Rational(1)}};
    CHECK(p.evaluate(x).is_zero());

    // The first factor vanishing forces the value -1, whatever tk does.
    for (int k : {1, 5}) {
        Polynomial g = (Polynomial::variable(0) - Polynomial::constant(Rational(7, 3))) *
                           Polynomial::variable(VarIndex(k)) -
                       Polynomial::constant(Rational(1));
        std::map<VarIndex, Rational> at{{0, Rational(7, 3)}, {VarIndex(k), Rational(9, 4)}};
        CHECK(g.evaluate(at).to_string() == "-1");
    }

    CHECK(Polynomial::zero().evaluate({}).is_zero());
    CHECK_THROWS_AS(parse_polynomial("t0").evaluate({}), std::invalid_argument);
}

TEST_CASE("substitution maps variables to polynomials") {
    Polynomial p = parse_polynomial("t0^2 + t1");
    std::map<VarIndex, Polynomial> images{{0, parse_polynomial("t1 + 1")}};
    CHECK(p.substitute(images).to_string() == "t1^2 + 3*t1 + 1");
    // Unmapped variables stay put.
    std::map<VarIndex, Polynomial> collapse{{0, Polynomial::zero()}, {1, Polynomial::zero()}};
    CHECK(p.substitute(collapse).is_zero());
}

TEST_CASE("support tracks exactly the occurring variables") {
    CHECK(parse_polynomial("t0*t3 - 1").support().to_string() == "{0, 3}");
    CHECK(parse_polynomial("7").support().empty());
    CHECK(parse_polynomial("t2^2 + t2").support().to_string() == "{2}");
}
