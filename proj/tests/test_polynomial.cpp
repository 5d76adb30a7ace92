#include <doctest.h>

#include "support/generators.hpp"
#include "tnn/polynomial.hpp"

using namespace tnn;
using tnn::testing::Rng;
using tnn::testing::random_polynomial;

namespace {
Polynomial sym(const char* name) { return Polynomial::symbol(name); }
}

TEST_CASE("addition") {
    Polynomial ad = sym("a") * sym("d");
    CHECK(ad + Polynomial() == ad);

    Polynomial cg_h = sym("c") * sym("g") + sym("h");
    CHECK((sym("c") * sym("g") + sym("h")).str() == "c*g + h");
    CHECK(cg_h == sym("c") * sym("g") + sym("h"));

    Polynomial a_minus_b = sym("a") - sym("b");
    Polynomial b_minus_a = sym("b") - sym("a");
    CHECK((a_minus_b + b_minus_a).is_zero());
}

TEST_CASE("multiplication") {
    CHECK((sym("a") + sym("b")) * (sym("a") - sym("b")) ==
          sym("a") * sym("a") - sym("b") * sym("b"));
    CHECK((sym("a") * sym("e") * sym("f")).str() == "a*e*f");
    Polynomial cg_h = sym("c") * sym("g") + sym("h");
    CHECK(cg_h * Polynomial(1) == cg_h);
}

TEST_CASE("subtraction of the 2x2 minors of the order-3 weight matrix") {
    Polynomial x = sym("x");
    CHECK((x - x).is_zero());

    // Rows {1,2}, cols {1,2}: both products are a*b*d*e*f.
    Polynomial lhs = (sym("a") * sym("d")) * (sym("b") * sym("e") * sym("f"));
    Polynomial rhs = (sym("a") * sym("e") * sym("f")) * (sym("b") * sym("d"));
    CHECK((lhs - rhs).is_zero());

    // Rows {2,3}, cols {2,3}: bef*(cg+h) - beg*cf = b*e*f*h.
    Polynomial bef = sym("b") * sym("e") * sym("f");
    Polynomial beg = sym("b") * sym("e") * sym("g");
    Polynomial cf = sym("c") * sym("f");
    Polynomial cg_h = sym("c") * sym("g") + sym("h");
    CHECK(bef * cg_h - beg * cf == sym("b") * sym("e") * sym("f") * sym("h"));
}

TEST_CASE("subtraction-freeness") {
    CHECK((sym("c") * sym("g") + sym("h")).is_subtraction_free());
    CHECK(Polynomial().is_subtraction_free());
    CHECK_FALSE((sym("a") * sym("a") - sym("b") * sym("b")).is_subtraction_free());
}

TEST_CASE("evaluation") {
    std::map<std::string, Rational> ones{{"c", 1}, {"g", 1}, {"h", 1}};
    CHECK((sym("c") * sym("g") + sym("h")).evaluate(ones) == 2);

    std::map<std::string, Rational> mixed{{"a", 2}, {"e", 3}, {"f", Rational(1, 2)}};
    CHECK((sym("a") * sym("e") * sym("f")).evaluate(mixed) == 3);

    CHECK_THROWS_AS(sym("z").evaluate(ones), MissingSymbolError);
}

TEST_CASE("canonical printing") {
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial(7).str() == "7");
    CHECK((Polynomial(2) * sym("a") * sym("a")).str() == "2*a^2");
    CHECK((sym("b") - Polynomial(3)).str() == "-3 + b");
    CHECK((sym("b") * sym("a") + sym("c")).str() == "a*b + c");
    // Expanded-sequence order: aa < ab < b; prefixes first.
    CHECK((sym("b") * sym("b") + sym("a") * sym("c")).str() == "a*c + b^2");
    CHECK((sym("a") * sym("b") + sym("a")).str() == "a + a*b");
}

TEST_CASE("parse round-trips the canonical format") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_polynomial(rng);
        auto back = Polynomial::parse(p.str());
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
    CHECK_FALSE(Polynomial::parse("a +b").has_value());
    CHECK_FALSE(Polynomial::parse("").has_value());
    CHECK_FALSE(Polynomial::parse("a**b").has_value());
}

TEST_CASE("ring axioms on randomized polynomials") {
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_polynomial(rng);
        Polynomial q = random_polynomial(rng);
        Polynomial r = random_polynomial(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + Polynomial() == p);
        CHECK(p * Polynomial(1) == p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_polynomial(rng);
        Polynomial q = random_polynomial(rng);
        std::map<std::string, Rational> assignment;
        for (const char* name : {"a", "b", "c", "d", "e"})
            assignment[name] = Rational(rng.between(-6, 6), rng.between(1, 4));
        CHECK((p * q).evaluate(assignment) == p.evaluate(assignment) * q.evaluate(assignment));
        CHECK((p + q).evaluate(assignment) == p.evaluate(assignment) + q.evaluate(assignment));
    }
}

TEST_CASE("subtraction-freeness is closed under + and *") {
    Rng rng(44);
    int checked = 0;
    for (int i = 0; i < 1000 && checked < 100; ++i) {
        Polynomial p = random_polynomial(rng);
        Polynomial q = random_polynomial(rng);
        if (!p.is_subtraction_free() || !q.is_subtraction_free()) continue;
        ++checked;
        CHECK((p + q).is_subtraction_free());
        CHECK((p * q).is_subtraction_free());
    }
    CHECK(checked >= 50);
}
