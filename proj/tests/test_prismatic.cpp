#include <doctest.h>

#include <algorithm>

#include "prismhom/prismatic.hpp"
#include "prismhom/reference_formulas.hpp"
#include "support.hpp"

using namespace prismhom;

namespace {

std::vector<BracketedTuple> all_bracketed(std::size_t n, std::size_t g)
{
    std::vector<BracketedTuple> out;
    std::size_t per = 1;
    for (std::size_t i = 0; i < n; ++i)
        per *= g;
    for (const auto& p : enumerate_partitions(n))
        for (std::size_t t = 0; t < per; ++t)
            out.emplace_back(p, tuple_from_index(t, n, g));
    return out;
}

Cell prism(std::vector<std::vector<Element>> blocks)
{
    return Cell::prism(BracketedTuple::from_blocks(blocks));
}

std::size_t pow_size(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

} // namespace

TEST_SUITE("prismatic")
{
    TEST_CASE("compositions")
    {
        CHECK(enumerate_partitions(0).empty());
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto ps = enumerate_partitions(n);
            CHECK(ps.size() == pow_size(2, n - 1));
            CHECK(std::is_sorted(ps.begin(), ps.end()));
            for (const auto& p : ps)
                CHECK(p.total() == n);
        }
        CHECK(enumerate_partitions(3).front().parts == std::vector<std::size_t>{1, 1, 1});
    }

    TEST_CASE("blocks and formatting")
    {
        const auto s = examples::conj_symmetric3();
        const auto t = BracketedTuple::from_blocks({{1, 2}, {3}});
        CHECK(t.degree() == 3);
        CHECK(t.block_count() == 2);
        CHECK(t.block_start(1) == 2);
        CHECK(t.block(1)[0] == 3);
        CHECK(format(t, s) == "(" + s.name(1) + "," + s.name(2) + ")|" + s.name(3));
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t i = 0; i < pow_size(3, n); i += 7)
                CHECK(tuple_index(tuple_from_index(i, n, 3), 3) == i);
    }

    TEST_CASE("degree-two boundaries")
    {
        const auto s = examples::conj_symmetric3();
        for (Element a = 0; a < 6; ++a)
            for (Element b = 0; b < 6; ++b) {
                CellChain simplex;
                simplex.add(prism({{b}}), 1);
                simplex.add(prism({{s.mul(a, b)}}), -1);
                simplex.add(prism({{a}}), 1);
                CHECK(boundary_generator(BracketedTuple::from_blocks({{a, b}}), s) == simplex);
                CellChain square;
                square.add(prism({{a}}), 1);
                square.add(prism({{s.act(a, b)}}), -1);
                CHECK(boundary_generator(BracketedTuple::from_blocks({{a}, {b}}), s) == square);
            }
    }

    TEST_CASE("face signs and the leading action")
    {
        const auto s = examples::conj_symmetric3();
        const auto g = BracketedTuple::from_blocks({{1}, {2, 3}});
        const auto f = face(g, 1, 0, s);
        CHECK(f.sign == -1);
        CHECK(f.tuple == BracketedTuple::from_blocks({{s.act(1, 2)}, {3}}));
        const auto m = face(g, 1, 1, s);
        CHECK(m.sign == 1);
        CHECK(m.tuple == BracketedTuple::from_blocks({{1}, {s.mul(2, 3)}}));
        CHECK(all_faces(g, s).size() == 5);
    }

    TEST_CASE("generic faces reproduce the hand-written expansions over S3")
    {
        const auto s = examples::conj_symmetric3();
        for (std::size_t n = 2; n <= 4; ++n)
            for (const auto& g : all_bracketed(n, 6)) {
                auto ref = reference_boundary(g, s);
                REQUIRE(ref.has_value());
                auto got = all_faces(g, s);
                std::sort(ref->begin(), ref->end());
                std::sort(got.begin(), got.end());
                CHECK(*ref == got);
                CHECK(*reference_boundary_chain(g, s) == boundary_generator(g, s));
            }
        CHECK_FALSE(reference_boundary(BracketedTuple::from_blocks({{1}}), s).has_value());
    }

    TEST_CASE("d^2 = 0 in every mode")
    {
        for (const auto& s : {examples::conj_cyclic(2), examples::projection_max(3)})
            for (ComplexMode mode : {ComplexMode::plain, ComplexMode::qualgebra, ComplexMode::normalized}) {
                const std::size_t top = s.size() == 2 ? 5 : 4;
                const PrismaticComplex k(s, top, {.mode = mode});
                CHECK(k.square_violations().empty());
                CHECK(verify_d_squared(k.chains(), 2, top).empty());
            }
    }

    TEST_CASE("generator counts")
    {
        const auto s = examples::conj_cyclic(3);
        const PrismaticComplex plain(s, 3);
        for (std::size_t n = 1; n <= 3; ++n)
            CHECK(plain.chains().count(n) == pow_size(2, n - 1) * pow_size(3, n));
        const PrismaticComplex qa(s, 3, {.mode = ComplexMode::qualgebra});
        CHECK(qa.chains().count(3) == 4 * 27 + 9 + 3);
        const PrismaticComplex no_d3(s, 3, {.mode = ComplexMode::qualgebra, .include_d3 = false});
        CHECK(no_d3.chains().count(3) == 4 * 27 + 9);
        const PrismaticComplex normalized(s, 3, {.mode = ComplexMode::normalized});
        // degree 2: (a,b) all 9, (a|b) with a != b: 6
        CHECK(normalized.chains().count(2) == 15);
    }

    TEST_CASE("cell lookup and translation")
    {
        const auto s = examples::conj_cyclic(3);
        const PrismaticComplex k(s, 3, {.mode = ComplexMode::normalized});
        CHECK_FALSE(k.index_of(prism({{1}, {1}})).has_value());
        CHECK(k.index_of(prism({{1}, {2}})).has_value());
        CellChain c;
        c.add(prism({{1}, {1}}), 4);
        c.add(prism({{2}, {0}}), -1);
        const Chain chain = k.to_chain(c, 2);
        CHECK(chain.terms().size() == 1);
        CellChain back;
        back.add(prism({{2}, {0}}), -1);
        CHECK(k.to_cells(chain) == back);
        CHECK_THROWS_AS(k.to_chain(c, 3), InputError);
        CellChain foreign;
        foreign.add(Cell::extra(CellKind::B4_3, {0, 0, 0}), 1);
        CHECK_THROWS_AS(k.to_chain(foreign, 4), InputError);
        for (std::size_t i = 0; i < k.chains().count(2); ++i)
            CHECK(k.index_of(k.generator(2, i)) == i);
    }

    TEST_CASE("bar and rack specializations")
    {
        for (const auto& s : {examples::conj_cyclic(3), examples::projection_max(3)})
            for (std::size_t n = 2; n <= 4; ++n)
                for (std::size_t t = 0; t < pow_size(3, n); ++t) {
                    const auto e = tuple_from_index(t, n, 3);
                    CHECK(boundary_generator(BracketedTuple(OrderedPartition{{n}}, e), s) == bar_differential(e, s));
                    CellChain neg;
                    neg.add(rack_differential(e, s), -1);
                    CHECK(boundary_generator(BracketedTuple(OrderedPartition{std::vector<std::size_t>(n, 1)}, e), s) ==
                          neg);
                }
        const auto s = examples::conj_cyclic(3);
        CHECK(verify_d_squared(bar_complex(s, 4), 2, 4).empty());
        CHECK(verify_d_squared(rack_complex(s, 4), 2, 4).empty());
    }

    TEST_CASE("degenerate submodules are subcomplexes")
    {
        const auto s = examples::conj_cyclic(3);
        for (auto flavor : {DegeneracyFlavor::monoid, DegeneracyFlavor::spindle,
                            DegeneracyFlavor::adjacent_equal_singletons})
            CHECK(degenerate_span_closed(s, 4, flavor));
        CHECK(degenerate_span_closed(examples::projection_max(3), 3, DegeneracyFlavor::monoid));
        const auto span = degenerate_span(s, 2, DegeneracyFlavor::adjacent_equal_singletons);
        CHECK(span[0].empty());
        CHECK(span[1].empty());
        CHECK(span[2].size() == 3);
        CHECK_THROWS_AS(degenerate_span(testing::load_structure("xor_constant"), 2, DegeneracyFlavor::spindle),
                        InputError);
        CHECK(is_degenerate(BracketedTuple::from_blocks({{1, 2}, {0}, {0}}),
                            DegeneracyFlavor::adjacent_equal_singletons, s));
        CHECK_FALSE(is_degenerate(BracketedTuple::from_blocks({{0, 0}, {1}}),
                                  DegeneracyFlavor::adjacent_equal_singletons, s));
    }

    TEST_CASE("parallel construction matches serial")
    {
        const auto s = examples::conj_symmetric3();
        const PrismaticComplex a(s, 3, {.mode = ComplexMode::qualgebra, .jobs = 1});
        const PrismaticComplex b(s, 3, {.mode = ComplexMode::qualgebra, .jobs = 4});
        for (std::size_t n = 2; n <= 3; ++n)
            for (std::size_t i = 0; i < a.chains().count(n); ++i)
                CHECK(a.chains().column(n, i) == b.chains().column(n, i));
    }

    TEST_CASE("axiom gate and fault injection")
    {
        const auto good = examples::conj_cyclic(3);
        auto tri = good.tri();
        tri.set(1, 2, 0);
        const auto bad = Shalgebra::unchecked(good.dot(), tri);
        CHECK_THROWS_AS(PrismaticComplex(bad, 3), AxiomError);
        const PrismaticComplex k(bad, 3, {.skip_axiom_gate = true});
        CHECK_FALSE(k.square_violations().empty());
        CHECK_THROWS_AS(PrismaticComplex(testing::load_structure("xor_constant"), 3,
                                         {.mode = ComplexMode::qualgebra}),
                        AxiomError);
        CHECK_NOTHROW(PrismaticComplex(testing::load_structure("xor_constant"), 3));
    }

    TEST_CASE("low-degree homology")
    {
        CHECK(prismatic_homology(examples::trivial(), 1).is_trivial());
        CHECK(prismatic_homology(examples::conj_cyclic(2), 1) == HomologyGroup{0, {2}});
        CHECK(prismatic_homology(examples::conj_cyclic(2), 2) == HomologyGroup{0, {2}});
        CHECK(qualgebra_homology(examples::conj_cyclic(3), 2).is_trivial());
        CHECK(qualgebra_homology(examples::conj_cyclic(3), 2, false).is_trivial());
    }
}

TEST_SUITE("extra_cells")
{
    TEST_CASE("B3, D3, B4_3 and B4_4 bound cycles")
    {
        for (const auto& s : {examples::conj_cyclic(2), examples::conj_cyclic(3), examples::projection_max(3)}) {
            const auto g = static_cast<Element>(s.size());
            for (Element a = 0; a < g; ++a) {
                CHECK(testing::cell_boundary(extra_cell_boundary(Cell::extra(CellKind::D3, {a}), s), s).is_zero());
                for (Element b = 0; b < g; ++b) {
                    const auto b3 = extra_cell_boundary(Cell::extra(CellKind::B3, {a, b}), s);
                    CHECK(testing::cell_boundary(b3, s).is_zero());
                    for (Element c = 0; c < g; ++c)
                        for (CellKind kind : {CellKind::B4_3, CellKind::B4_4}) {
                            const auto d = extra_cell_boundary(Cell::extra(kind, {a, b, c}), s);
                            CHECK(testing::cell_boundary(d, s).is_zero());
                        }
                }
            }
        }
    }

    TEST_CASE("B4_1 and B4_2 have no sign assignment on small groups")
    {
        for (const auto& s : {examples::conj_cyclic(2), examples::conj_cyclic(3)})
            for (CellKind kind : {CellKind::B4_1, CellKind::B4_2}) {
                const auto r = resolve_b4_signs(s, kind);
                CHECK(r.status == SignResolution::Status::no_solution);
                CHECK(r.solutions == 0);
                CHECK(r.terms.empty());
            }
        CHECK(resolve_b4_signs(examples::projection_max(3), CellKind::B4_1).status ==
              SignResolution::Status::not_applicable);
        CHECK(resolve_b4_signs(examples::conj_cyclic(2), CellKind::B3).status ==
              SignResolution::Status::not_applicable);
        CHECK_THROWS_AS(extra_cell_boundary(Cell::extra(CellKind::B4_1, {0, 1}), examples::conj_cyclic(2)),
                        InputError);
    }

    TEST_CASE("omitted cells are reported as warnings")
    {
        const PrismaticComplex k(examples::conj_cyclic(2), 4, {.mode = ComplexMode::qualgebra});
        CHECK(k.warnings().size() == 2);
        CHECK(k.resolutions().size() == 2);
        CHECK(k.chains().count(4) == 8 * 16 + 2 * 8);
        const PrismaticComplex low(examples::conj_cyclic(2), 3, {.mode = ComplexMode::qualgebra});
        CHECK(low.warnings().empty());
    }
}
