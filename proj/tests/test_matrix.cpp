#include "hecke/matrix.hpp"
#include "hecke/upoly.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hecke;

TEST_CASE("rref, rank, kernel")
{
    QMatrix m(2, 3, {Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6)});
    CHECK(m.rank() == 1);
    auto ker = m.kernel();
    REQUIRE(ker.size() == 2);
    for (const auto &v : ker) {
        Rational acc = 0;
        for (size_t j = 0; j < 3; ++j)
            acc += m(0, j) * v[j];
        CHECK(acc == 0);
    }
}

TEST_CASE("inverse and det")
{
    GMatrix m(2, 2);
    m(0, 0) = GaussianRational(1);
    m(0, 1) = GaussianRational::i();
    m(1, 0) = GaussianRational(0);
    m(1, 1) = GaussianRational(2);
    CHECK(m.det() == GaussianRational(2));
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv) * m == GMatrix::identity(2));

    GMatrix sing(2, 2);
    sing(0, 0) = GaussianRational(1);
    sing(1, 0) = GaussianRational(1);
    CHECK_FALSE(sing.inverse().has_value());
    CHECK(sing.det() == GaussianRational(0));
}

TEST_CASE("charpoly matches det(tI - A)")
{
    QMatrix a(3, 3, {Rational(2), Rational(1), Rational(0),
                     Rational(0), Rational(2), Rational(0),
                     Rational(1), Rational(0), Rational(-1)});
    auto cp = a.charpoly();
    REQUIRE(cp.size() == 4);
    // det(tI-A) = (t-2)^2 (t+1) = t^3 - 3t^2 + 4
    CHECK(cp[3] == 1);
    CHECK(cp[2] == -3);
    CHECK(cp[1] == 0);
    CHECK(cp[0] == 4);
    CHECK(upoly_eval(cp, Rational(2)) == 0);
    CHECK(upoly_eval(cp, Rational(-1)) == 0);
}

TEST_CASE("solve")
{
    QMatrix a(2, 2, {Rational(1), Rational(1), Rational(1), Rational(-1)});
    auto x = a.solve({Rational(3), Rational(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    QMatrix b(2, 1, {Rational(1), Rational(1)});
    CHECK_FALSE(b.solve({Rational(0), Rational(1)}).has_value());
}
