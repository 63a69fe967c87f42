#include <doctest.h>

#include <sstream>

#include "prismhom/chains.hpp"

using namespace prismhom;

namespace {

// Triangulated circle: three vertices, three edges.
ChainComplex circle()
{
    ChainComplex k({3, 3});
    k.set_boundary(1, 0, Chain::generator(0, 1) - Chain::generator(0, 0));
    k.set_boundary(1, 1, Chain::generator(0, 2) - Chain::generator(0, 1));
    k.set_boundary(1, 2, Chain::generator(0, 0) - Chain::generator(0, 2));
    return k;
}

// Minimal cell structure of the projective plane: d2 e = 2a, d1 a = 0.
ChainComplex projective_plane()
{
    ChainComplex k({1, 1, 1});
    k.set_boundary(1, 0, Chain(0));
    k.set_boundary(2, 0, Chain::generator(1, 0, 2));
    return k;
}

} // namespace

TEST_SUITE("chains")
{
    TEST_CASE("chain arithmetic drops zero coefficients")
    {
        Chain a(2);
        a.add(3, 5);
        a.add(1, -2);
        Chain b = Chain::generator(2, 3, -5);
        const Chain sum = a + b;
        CHECK(sum.terms().size() == 1);
        CHECK(sum.coefficient(1) == -2);
        CHECK(sum.coefficient(3) == 0);
        CHECK((0 * a).is_zero());
        CHECK((a - a).is_zero());
        CHECK((3 * a).coefficient(3) == 15);
    }

    TEST_CASE("homology of a circle and of the projective plane")
    {
        const auto c = circle();
        CHECK(verify_d_squared(c, 0, 1).empty());
        CHECK(homology(c, 0) == HomologyGroup{1, {}});
        CHECK(homology(c, 1, true) == HomologyGroup{1, {}});
        const auto p = projective_plane();
        CHECK(homology(p, 1).free_rank == 0);
        CHECK(homology(p, 1).torsion == std::vector<BigInt>{2});
        CHECK(homology(p, 2, true).is_trivial());
        CHECK(to_string(homology(p, 1)) == "Z/2");
        CHECK(to_string(HomologyGroup{3, {2, 4}}) == "Z^3 + Z/2 + Z/4");
        CHECK(to_string(HomologyGroup{}) == "0");
    }

    TEST_CASE("top degree needs explicit truncation")
    {
        CHECK_THROWS_AS(homology(circle(), 1), InputError);
        CHECK_THROWS_AS(homology(circle(), 2, true), InputError);
    }

    TEST_CASE("malformed boundaries are rejected")
    {
        ChainComplex k({2, 1});
        CHECK_THROWS_AS(k.set_boundary(1, 0, Chain::generator(0, 5)), InputError);
        CHECK_THROWS_AS(k.set_boundary(1, 3, Chain(0)), InputError);
        CHECK_THROWS_AS(k.set_boundary(1, 0, Chain::generator(1, 0)), InputError);
        CHECK_THROWS_AS(boundary(Chain::generator(0, 0), k), InputError);
    }

    TEST_CASE("a planted d^2 violation is reported")
    {
        ChainComplex k({1, 1, 1});
        k.set_boundary(1, 0, Chain::generator(0, 0));
        k.set_boundary(2, 0, Chain::generator(1, 0));
        const auto v = verify_d_squared(k, 0, 2);
        REQUIRE(v.size() == 1);
        CHECK(v[0].generator == GeneratorId{2, 0});
        CHECK(v[0].residue == Chain::generator(0, 0));
    }

    TEST_CASE("class coordinates")
    {
        const HomologyDecomposition h(projective_plane(), 1);
        CHECK(h.group().torsion == std::vector<BigInt>{2});
        const auto one = h.class_of(Chain::generator(1, 0));
        const auto three = h.class_of(Chain::generator(1, 0, 3));
        const auto two = h.class_of(Chain::generator(1, 0, 2));
        CHECK_FALSE(one.is_zero());
        CHECK(one == three);
        CHECK(two.is_zero());
        CHECK(to_string(one) == "[|1]");

        const HomologyDecomposition c(circle(), 1, true);
        const Chain loop = Chain::generator(1, 0) + Chain::generator(1, 1) + Chain::generator(1, 2);
        const auto cls = c.class_of(loop);
        REQUIRE(cls.free.size() == 1);
        CHECK(abs(cls.free[0]) == 1);
        CHECK(c.class_of(2 * loop).free[0] == 2 * cls.free[0]);
        CHECK_THROWS_AS(c.class_of(Chain::generator(1, 0)), InputError);
    }

    TEST_CASE("sparse triplet export")
    {
        std::ostringstream out;
        write_sparse_triplets(out, projective_plane());
        CHECK(out.str() == "2 0 0 2\n");
    }
}
