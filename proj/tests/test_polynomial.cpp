#include "hecke/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hecke;

TEST_CASE("poly arithmetic and grading")
{
    Poly x1 = Poly::variable(2, 0);
    Poly x2 = Poly::variable(2, 1);
    Poly r = Poly::r_var(2);
    Poly p = x1 * x1 + GaussianRational(2) * x2 * r;
    CHECK(p.degree() == 2);
    CHECK(p.xi_degree() == 2);
    CHECK(p.r_degree() == 1);
    CHECK((p - p).is_zero());
    CHECK(p * Poly(2, GaussianRational(1)) == p);
}

TEST_CASE("linear substitution")
{
    // s: x1 -> -x1, x2 -> x1 + x2
    Poly p = Poly::variable(2, 0) * Poly::variable(2, 1);
    std::vector<std::vector<GaussianRational>> sub{
        {GaussianRational(-1), GaussianRational(0)},
        {GaussianRational(1), GaussianRational(1)}};
    Poly q = p.substitute_linear(sub);
    // (-x1)(x1+x2) = -x1^2 - x1 x2
    Poly expect = -(Poly::variable(2, 0) * Poly::variable(2, 0)) - Poly::variable(2, 0) * Poly::variable(2, 1);
    CHECK(q == expect);
}

TEST_CASE("negate_xi fixes r and flips odd degrees")
{
    Poly p = Poly::variable(1, 0) * Poly::r_var(1) + Poly(1, GaussianRational(3));
    Poly q = p.negate_xi();
    Poly expect = -(Poly::variable(1, 0) * Poly::r_var(1)) + Poly(1, GaussianRational(3));
    CHECK(q == expect);
}

TEST_CASE("exact division by linear form")
{
    Poly x1 = Poly::variable(2, 0);
    Poly x2 = Poly::variable(2, 1);
    Poly lin = x1 - x2;
    Poly p = x1 * x1 - x2 * x2;
    Poly q = p.divide_by_linear(lin);
    CHECK(q == x1 + x2);
    CHECK_THROWS(x2.divide_by_linear(lin));
}

TEST_CASE("monomial keys round trip")
{
    Monomial m{{2, 0, 1}, 3};
    CHECK(monomial_key(m) == "x1^2*x3*r^3");
    Monomial back = parse_monomial_key("x1^2*x3*r^3", 3);
    CHECK(back == m);
    CHECK(monomial_key(parse_monomial_key("1", 3)) == "1");
}

TEST_CASE("matrix evaluation")
{
    Poly p = Poly::variable(1, 0) * Poly::variable(1, 0) + Poly::r_var(1);
    GMatrix a(2, 2);
    a(0, 0) = GaussianRational(1);
    a(0, 1) = GaussianRational(1);
    a(1, 1) = GaussianRational(1);
    auto v = p.eval_matrix({a}, GaussianRational(5), 2);
    // a^2 + 5 = [[6,2],[0,6]]
    CHECK(v(0, 0) == GaussianRational(6));
    CHECK(v(0, 1) == GaussianRational(2));
    CHECK(v(1, 0) == GaussianRational(0));
}
