#include <doctest.h>

#include <random>

#include "prismhom/algebra.hpp"
#include "support.hpp"

using namespace prismhom;

namespace {

// Independent restatement of the axioms on one tuple.
bool holds_at(Axiom ax, const OperationTable& d, const OperationTable& t, const std::vector<Element>& w)
{
    switch (ax) {
    case Axiom::H: return d(d(w[0], w[1]), w[2]) == d(w[0], d(w[1], w[2]));
    case Axiom::YI: return t(d(w[0], w[1]), w[2]) == d(t(w[0], w[2]), t(w[1], w[2]));
    case Axiom::IY: return t(t(w[0], w[1]), w[2]) == t(w[0], d(w[1], w[2]));
    case Axiom::III: return t(t(w[0], w[1]), w[2]) == t(t(w[0], w[2]), t(w[1], w[2]));
    case Axiom::I: return t(w[0], w[0]) == w[0];
    case Axiom::T: return d(w[0], w[1]) == d(w[1], t(w[0], w[1]));
    case Axiom::II: {
        std::size_t hits = 0;
        for (Element x = 0; x < d.size(); ++x)
            hits += t(x, w[1]) == w[0];
        return hits == 1;
    }
    }
    return false;
}

std::size_t arity(Axiom ax)
{
    return ax == Axiom::I ? 1 : ax == Axiom::II || ax == Axiom::T ? 2 : 3;
}

std::vector<std::vector<Element>> all_tuples(std::size_t n, std::size_t k)
{
    std::vector<std::vector<Element>> out{{}};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::vector<Element>> next;
        for (const auto& t : out)
            for (Element x = 0; x < n; ++x) {
                auto u = t;
                u.push_back(x);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_SUITE("algebra")
{
    TEST_CASE("conjugation qualgebras satisfy every axiom")
    {
        for (const auto& s : {examples::conj_cyclic(2), examples::conj_cyclic(3), examples::conj_symmetric3()}) {
            CHECK(s.is_qualgebra());
            CHECK(s.is_group());
            CHECK(axiom_dependency_check(s));
            const auto c = classify(s.dot(), s.tri());
            CHECK(c.action == ActionClass::quandle);
            CHECK(c.pair == PairClass::qualgebra);
        }
    }

    TEST_CASE("conjugation in S3 is b^-1 a b")
    {
        const auto s = examples::conj_symmetric3();
        for (Element a = 0; a < 6; ++a)
            for (Element b = 0; b < 6; ++b)
                CHECK(s.act(a, b) == s.mul(s.mul(s.inverse(b), a), b));
        CHECK(s.unit() == Element(0));
        CHECK_FALSE(examples::conj_cyclic(3).tri() == examples::conj_symmetric3().tri());
    }

    TEST_CASE("symmetric group tables are groups with the stated product")
    {
        for (std::size_t n = 1; n <= 4; ++n)
            CHECK_FALSE(group_law_failure(examples::symmetric_group(n)).has_value());
        const auto names = examples::symmetric_group_names(3);
        CHECK(names.size() == 6);
        CHECK(names.front() == "e");
        CHECK(group_law_failure(OperationTable::from_function(3, [](Element a, Element b) {
                  return (a + 2 * b) % 3;
              })).has_value());
    }

    TEST_CASE("projection shelf with max is a non-group qualgebra")
    {
        const auto s = examples::projection_max(3);
        CHECK(s.is_qualgebra());
        CHECK_FALSE(s.is_group());
        CHECK(classify(s.dot(), s.tri()).group == false);
    }

    TEST_CASE("reported witnesses are the first violating tuple")
    {
        std::mt19937 rng(20261015);
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = 2 + trial % 2;
            std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
            const auto d = OperationTable::from_function(n, [&](Element, Element) { return pick(rng); });
            const auto t = OperationTable::from_function(n, [&](Element, Element) { return pick(rng); });
            const auto report = check_axioms(d, t);
            for (Axiom ax : all_axioms) {
                if (ax == Axiom::II) {
                    bool ok = true;
                    for (const auto& w : all_tuples(n, 2))
                        ok = ok && holds_at(ax, d, t, {w[0], w[1]});
                    CHECK(report.holds(ax) == ok);
                    if (!ok)
                        CHECK_FALSE(holds_at(ax, d, t, report[ax].witness));
                    continue;
                }
                std::optional<std::vector<Element>> first;
                for (const auto& w : all_tuples(n, arity(ax)))
                    if (!holds_at(ax, d, t, w)) {
                        first = w;
                        break;
                    }
                CHECK(report.holds(ax) == !first);
                if (first)
                    CHECK(report[ax].witness == *first);
            }
        }
    }

    TEST_CASE("constructor rejects a non-shalgebra")
    {
        const auto d = OperationTable::from_function(3, [](Element a, Element b) { return (a + 2 * b) % 3; });
        const auto t = OperationTable::from_function(3, [](Element a, Element) { return a; });
        CHECK_THROWS_AS(Shalgebra(d, t), AxiomError);
        try {
            Shalgebra bad(d, t);
        } catch (const AxiomError& e) {
            CHECK(e.axiom() == Axiom::H);
            CHECK_FALSE(holds_at(Axiom::H, d, t, e.witness()));
        }
        CHECK_NOTHROW(Shalgebra::unchecked(d, t));
        CHECK_THROWS_AS(check_axioms(d, OperationTable::from_function(2, [](Element, Element) { return 0; })),
                        InputError);
    }

    TEST_CASE("xor with constant action fails II, I and T only")
    {
        const auto s = testing::load_structure("xor_constant");
        for (Axiom ax : {Axiom::H, Axiom::YI, Axiom::IY, Axiom::III})
            CHECK(s.report().holds(ax));
        for (Axiom ax : {Axiom::II, Axiom::I, Axiom::T})
            CHECK_FALSE(s.report().holds(ax));
        CHECK_THROWS_AS(s.act_inverse(0, 0), InputError);
        CHECK(classify(s.dot(), s.tri()).pair == PairClass::shalgebra);
    }

    TEST_CASE("act_inverse undoes the action")
    {
        const auto s = examples::conj_symmetric3();
        for (Element a = 0; a < 6; ++a)
            for (Element b = 0; b < 6; ++b) {
                CHECK(s.act(s.act_inverse(a, b), b) == a);
                CHECK(s.act_inverse(s.act(a, b), b) == a);
            }
    }

    TEST_CASE("product and diagonal action")
    {
        const auto s = examples::conj_cyclic(3);
        const std::vector<Element> g{1, 2, 2};
        CHECK(s.product(g) == Element(2));
        CHECK_FALSE(s.product(std::span<const Element>()).has_value());
        const auto s3 = examples::conj_symmetric3();
        const std::vector<Element> t{1, 2, 3};
        const auto acted = diagonal_action(t, 4, s3);
        for (std::size_t i = 0; i < t.size(); ++i)
            CHECK(acted[i] == s3.act(t[i], 4));
    }

    TEST_CASE("axiom names round-trip")
    {
        for (Axiom ax : all_axioms)
            CHECK(axiom_from_name(axiom_name(ax)) == ax);
        CHECK_FALSE(axiom_from_name("IV").has_value());
    }
}
