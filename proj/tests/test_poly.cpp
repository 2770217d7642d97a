#include <doctest.h>

#include <random>

#include "cala/poly.hpp"

using cala::Poly;
using cala::Rational;

TEST_CASE("parse: zero and single indeterminate") {
    CHECK(Poly::parse("0").is_zero());
    Poly a = Poly::parse("alpha");
    CHECK(a.indeterminates() == std::vector<std::string>{"alpha"});
    CHECK(a.str() == "alpha");
}

TEST_CASE("parse/print round trip is a fixed point") {
    for (const char* s : {"2*t^2 - 1/3", "-alpha + 1", "x*y - y^2 + 7/2", "t", "-3", "5/7",
                          "a^3 - a^2*b + 2*a*b^2 - b^3", "2*t^2 - 1/3*s + 4"}) {
        Poly p = Poly::parse(s);
        Poly q = Poly::parse(p.str());
        CHECK(p == q);
        CHECK(p.str() == q.str());
    }
}

TEST_CASE("canonical form: two-term ordering") {
    Poly p = Poly::parse("2*t^2 - 1/3");
    CHECK(p.str() == "2*t^2 - 1/3");
    CHECK(p.terms().size() == 2);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Poly::parse("1/0"), cala::ParseError);
    CHECK_THROWS_AS(Poly::parse("2 +"), cala::ParseError);
    CHECK_THROWS_AS(Poly::parse("$x"), cala::ParseError);
    CHECK_THROWS_AS(Poly::parse("x^"), cala::ParseError);
}

TEST_CASE("substitute") {
    Poly alpha = Poly::variable("alpha");
    CHECK(cala::substitute(alpha, {{"alpha", Poly(2)}}) == Poly(2));
    Poly t = Poly::variable("t");
    CHECK(cala::substitute(t * t - Poly(1), {{"t", Poly(1)}}).is_zero());
    CHECK(cala::substitute(alpha * t, {{"t", alpha}}) == alpha * alpha);
    // unbound names stay symbolic
    CHECK(cala::substitute(alpha * t, {{"t", Poly(3)}}) == Poly(3) * alpha);
}

TEST_CASE("is_identically_zero") {
    CHECK(cala::is_identically_zero(Poly::parse("0")));
    Poly a = Poly::variable("alpha");
    CHECK(cala::is_identically_zero(a - a));
    Poly t = Poly::variable("t");
    CHECK(cala::is_identically_zero((t + Poly(1)).pow(2) - t * t - Poly(2) * t - Poly(1)));
    CHECK_FALSE(cala::is_identically_zero(t - Poly(1)));
}

namespace {

Poly random_poly(std::mt19937_64& rng) {
    static const std::vector<std::string> names = {"x", "y", "z"};
    Poly acc;
    int terms = static_cast<int>(rng() % 4);
    for (int t = 0; t <= terms; ++t) {
        long long c = static_cast<long long>(rng() % 7) - 3;
        Poly term{Rational(c)};
        for (const auto& nm : names) {
            unsigned e = static_cast<unsigned>(rng() % 3);
            if (e) term = term * Poly::variable(nm).pow(e);
        }
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_CASE("ring axioms on random small polynomials") {
    std::mt19937_64 rng(20240529);
    for (int it = 0; it < 200; ++it) {
        Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(717);
    std::map<std::string, Poly> bind = {{"x", Poly::parse("t - 1")}, {"y", Poly(2)}};
    for (int it = 0; it < 100; ++it) {
        Poly p = random_poly(rng), q = random_poly(rng);
        CHECK(cala::substitute(p * q, bind) ==
              cala::substitute(p, bind) * cala::substitute(q, bind));
        CHECK(cala::substitute(p + q, bind) ==
              cala::substitute(p, bind) + cala::substitute(q, bind));
    }
}

TEST_CASE("printing is injective on canonical forms") {
    std::mt19937_64 rng(99);
    std::vector<Poly> ps;
    for (int it = 0; it < 60; ++it) ps.push_back(random_poly(rng));
    for (size_t a = 0; a < ps.size(); ++a)
        for (size_t b = a + 1; b < ps.size(); ++b)
            if (ps[a] != ps[b]) CHECK(ps[a].str() != ps[b].str());
}

TEST_CASE("exact division") {
    Poly x = Poly::variable("x"), y = Poly::variable("y");
    Poly prod = (x + y) * (x - y);
    auto q = prod.divide_exact(x + y);
    REQUIRE(q.has_value());
    CHECK(*q == x - y);
    CHECK_FALSE((x * x + Poly(1)).divide_exact(x + y).has_value());
    // division by a constant always succeeds
    CHECK(*(x * Poly(6)).divide_exact(Poly(3)) == x * Poly(2));
}

TEST_CASE("rational roots") {
    Poly a = Poly::variable("alpha");
    Poly p = (a - Poly(1)) * (a + Poly(1)) * a;  // roots 0, 1, -1
    auto roots = p.rational_roots();
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-1));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(1));
    Poly halfroot = Poly(2) * a - Poly(1);
    auto r2 = halfroot.rational_roots();
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == Rational(1) / 2);
}

TEST_CASE("degree-0 polynomial round-trips to Rational") {
    Poly p = Poly::parse("6/4");
    CHECK(p.is_constant());
    CHECK(p.to_rational() == Rational(3) / 2);
    CHECK(cala::to_string(p.to_rational()) == "3/2");
    CHECK(cala::parse_rational("3/2") == Rational(3) / 2);
}
