#include "hecke/cocycle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hecke;

TEST_CASE("group constructors validate")
{
    for (auto g : {FiniteGroup::cyclic(5), FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                   FiniteGroup::quaternion(), FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3))}) {
        CHECK_NOTHROW(g.validate());
        for (size_t a = 0; a < g.n; ++a)
            CHECK(g.mult(a, g.inverse(a)) == 0);
    }
    CHECK(FiniteGroup::symmetric(3).n == 6);
    CHECK(FiniteGroup::dihedral(4).n == 8);
}

TEST_CASE("generators close the group")
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto gens = s3.generators();
    CHECK(gens.size() <= 2);
}

TEST_CASE("trivial cocycle on Z/2 validates")
{
    auto t = CocycleTable::trivial(FiniteGroup::cyclic(2));
    CHECK(t.validate());
}

TEST_CASE("sign cocycle on Z/2 (coboundary) validates: 8 identities hold")
{
    auto t = CocycleTable::trivial(FiniteGroup::cyclic(2));
    t.value(1, 1) = Cyc(-1);
    // independent oracle: check all 8 cocycle identities directly
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            for (size_t c = 0; c < 2; ++c) {
                Cyc lhs = t.value(a, b) * t.value(t.group.mult(a, b), c);
                Cyc rhs = t.value(b, c) * t.value(a, t.group.mult(b, c));
                CHECK(lhs == rhs);
            }
    CHECK(t.validate());
    // N_s N_s = -N_e
    TwistedSum ns{{1, Cyc(1)}};
    auto sq = twisted_multiply(t, ns, ns);
    REQUIRE(sq.size() == 1);
    CHECK(sq.at(0) == Cyc(-1));
}

TEST_CASE("normalization violations are rejected")
{
    auto t = CocycleTable::trivial(FiniteGroup::cyclic(2));
    t.value(0, 1) = Cyc(-1);
    std::string why;
    CHECK_FALSE(t.validate(&why));
    CHECK(why.find("normalized") != std::string::npos);
}

TEST_CASE("twisted multiplication is unital and bilinear")
{
    auto t = CocycleTable::trivial(FiniteGroup::cyclic(3));
    TwistedSum e{{0, Cyc(1)}};
    TwistedSum x{{1, Cyc(2)}, {2, Cyc(-1)}};
    CHECK(twisted_multiply(t, e, x) == x);
    CHECK(twisted_multiply(t, x, e) == x);
    // nondegenerate cocycle on Z/2 x Z/2: N_a N_b = -N_b N_a
    FiniteGroup v4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto nd = CocycleTable::trivial(v4);
    // elements: 0 = e, 1 = a, 2 = b, 3 = ab; pauli-like cocycle
    // value(x,y) = -1 iff (x has a-part) and (y has b-part)
    for (size_t x2 = 0; x2 < 4; ++x2)
        for (size_t y2 = 0; y2 < 4; ++y2)
            if ((x2 % 2 == 1) && (y2 / 2 == 1))
                nd.value(x2, y2) = Cyc(-1);
    CHECK(nd.validate());
    TwistedSum na{{1, Cyc(1)}}, nb{{2, Cyc(1)}};
    auto ab = twisted_multiply(nd, na, nb);
    auto ba = twisted_multiply(nd, nb, na);
    REQUIRE(ab.size() == 1);
    REQUIRE(ba.size() == 1);
    CHECK(ab.at(3) == Cyc(-1));
    CHECK(ba.at(3) == Cyc(1));
    CHECK(ab.at(3) == Cyc(-1) * ba.at(3));
}

TEST_CASE("restriction to a subgroup")
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    // A3 inside S3: the three even permutations. With lexicographic permutation
    // indexing: 0 = id, 3 = (0 1 2)? verify via order.
    std::vector<size_t> a3{0};
    for (size_t g = 1; g < 6; ++g)
        if (s3.order_of(g) == 3)
            a3.push_back(g);
    REQUIRE(a3.size() == 3);
    auto t = CocycleTable::trivial(s3);
    auto sub = t.restrict(a3);
    CHECK(sub.group.n == 3);
    CHECK_NOTHROW(sub.group.validate());
    CHECK(sub.validate());
    CHECK(s3.is_normal(a3));
}
