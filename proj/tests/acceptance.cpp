// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "prismhom/moves.hpp"
#include "prismhom/reference_formulas.hpp"
#include "support.hpp"

using namespace prismhom;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;
};

class Recorder
{
public:
    void fail(const std::string& why)
    {
        if (out_.pass)
            out_.detail = why;
        out_.pass = false;
    }
    void check(bool ok, const std::string& why)
    {
        if (!ok)
            fail(why);
    }
    void note(const std::string& text)
    {
        if (out_.pass)
            out_.detail += (out_.detail.empty() ? "" : "; ") + text;
    }
    Outcome result() const { return out_; }

private:
    Outcome out_;
};

std::size_t power(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

std::vector<BracketedTuple> tuples_of_shape(const OrderedPartition& p, std::size_t g)
{
    std::vector<BracketedTuple> out;
    const std::size_t n = p.total();
    for (std::size_t t = 0; t < power(g, n); ++t)
        out.emplace_back(p, tuple_from_index(t, n, g));
    return out;
}

std::vector<BracketedTuple> all_bracketed(std::size_t n, std::size_t g)
{
    std::vector<BracketedTuple> out;
    for (const auto& p : enumerate_partitions(n)) {
        auto part = tuples_of_shape(p, g);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct Named
{
    std::string name;
    Shalgebra s;
};

std::vector<Named> conjugation_family()
{
    return {{"trivial", examples::trivial()},
            {"conj_z2", examples::conj_cyclic(2)},
            {"conj_z3", examples::conj_cyclic(3)},
            {"conj_s3", examples::conj_symmetric3()}};
}

// 1
Outcome d_squared()
{
    Recorder r;
    std::size_t generators = 0;
    for (const auto& [name, s] : conjugation_family()) {
        const std::size_t top = s.size() <= 2 ? 5 : 4;
        try {
            const PrismaticComplex k(s, top, {.skip_axiom_gate = true, .jobs = 4});
            const auto v = verify_d_squared(k.chains(), 2, top);
            r.check(v.empty(), name + ": d^2 != 0 at " +
                                   (v.empty() ? "" : k.describe(v[0].generator.degree, v[0].generator.index)));
            for (std::size_t n = 2; n <= top; ++n)
                generators += k.chains().count(n);
        } catch (const std::exception& e) {
            r.fail(name + ": " + e.what());
        }
    }
    r.note(std::to_string(generators) + " generators checked");
    return r.result();
}

// 2
Outcome symbolic_oracle()
{
    Recorder r;
    const auto s = examples::conj_cyclic(3);
    std::size_t shapes = 0, checked = 0;
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            ++shapes;
            for (const auto& g : tuples_of_shape(p, 3)) {
                const auto ref = reference_boundary_chain(g, s);
                if (!ref) {
                    r.fail("no expansion for " + format(g, s));
                    continue;
                }
                r.check(*ref == boundary_generator(g, s), "mismatch at " + format(g, s));
                ++checked;
            }
        }
    r.check(shapes == 14, "expected 14 shapes, saw " + std::to_string(shapes));
    r.note(std::to_string(shapes) + " shapes, " + std::to_string(checked) + " tuples");
    return r.result();
}

// 3
Outcome specialization()
{
    Recorder r;
    // conj Z/3 and the projection shelf act trivially, so only conj S3 exercises the sign.
    std::vector<Named> structures{{"conj_z3", examples::conj_cyclic(3)},
                                  {"projection_max3", examples::projection_max(3)},
                                  {"conj_s3", examples::conj_symmetric3()}};
    std::ostringstream signs;
    for (const auto& [name, s] : structures) {
        signs << name << ":";
        for (std::size_t n = 2; n <= 4; ++n) {
            int global = 0;
            for (std::size_t t = 0; t < power(s.size(), n); ++t) {
                const auto e = tuple_from_index(t, n, s.size());
                r.check(boundary_generator(BracketedTuple(OrderedPartition{{n}}, e), s) == bar_differential(e, s),
                        name + ": simplex boundary differs from bar differential");
                const auto cube = boundary_generator(BracketedTuple(OrderedPartition{std::vector<std::size_t>(n, 1)}, e), s);
                const auto rack = rack_differential(e, s);
                CellChain neg;
                neg.add(rack, -1);
                const bool plus = cube == rack, minus = cube == neg;
                if (!plus && !minus) {
                    r.fail(name + ": cube boundary is not +-rack differential");
                    continue;
                }
                if (rack.is_zero())
                    continue;
                const int sign = plus ? 1 : -1;
                if (global == 0)
                    global = sign;
                r.check(sign == global, name + ": sign changes within degree " + std::to_string(n));
            }
            signs << " " << (global > 0 ? "+" : global < 0 ? "-" : "0");
        }
        signs << " ";
    }
    r.note("rack signs by degree 2..4 (0 = rack differential vanishes) " + signs.str());
    return r.result();
}

// 4
Outcome geometric_oracle()
{
    Recorder r;
    const auto s = examples::conj_cyclic(3);
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& g : all_bracketed(n, 3)) {
            try {
                auto geo = geometric_faces(good_labeling(g, s), s);
                std::vector<SignedPrism> comb;
                for (const auto& f : all_faces(g, s))
                    comb.push_back({f.sign, good_labeling(f.tuple, s)});
                std::sort(geo.begin(), geo.end());
                std::sort(comb.begin(), comb.end());
                r.check(geo == comb, "faces differ at " + format(g, s));
            } catch (const ContractViolation& e) {
                r.fail(e.what());
            }
            ++checked;
        }
    r.note(std::to_string(checked) + " tuples");
    return r.result();
}

// 5
Outcome path_independence()
{
    Recorder r;
    const auto s = examples::conj_symmetric3();
    std::size_t pairs = 0;
    const std::vector<OrderedPartition> shapes{{{2, 1}}, {{1, 2}}, {{1, 1, 1}}, {{2, 2}}};
    for (const auto& shape : shapes) {
        const auto vertices = prism_vertices(shape);
        for (const auto& g : tuples_of_shape(shape, 6)) {
            const auto prism = good_labeling(g, s);
            for (const auto& u : vertices)
                for (const auto& v : vertices) {
                    bool below = true;
                    for (std::size_t q = 0; q < u.coords.size(); ++q)
                        below = below && u.coords[q] <= v.coords[q];
                    if (!below)
                        continue;
                    try {
                        path_endomorphism(prism, u, v, s);
                        ++pairs;
                    } catch (const std::exception& e) {
                        r.fail(format(g, s) + ": " + e.what());
                    }
                }
        }
    }
    r.note(std::to_string(pairs) + " vertex pairs");
    return r.result();
}

// 6
Outcome extra_cells()
{
    Recorder r;
    std::vector<Named> groups{{"conj_z2", examples::conj_cyclic(2)},
                              {"conj_z3", examples::conj_cyclic(3)},
                              {"conj_s3", examples::conj_symmetric3()}};
    for (const auto& [name, s] : groups) {
        const auto g = static_cast<Element>(s.size());
        for (Element a = 0; a < g; ++a)
            for (Element b = 0; b < g; ++b) {
                const Cell b3 = Cell::extra(CellKind::B3, {a, b});
                r.check(testing::cell_boundary(extra_cell_boundary(b3, s), s).is_zero(),
                        name + ": " + format(b3, s) + " is not a cycle");
                for (Element c = 0; c < g; ++c)
                    for (CellKind kind : {CellKind::B4_3, CellKind::B4_4}) {
                        const Cell cell = Cell::extra(kind, {a, b, c});
                        r.check(testing::cell_boundary(extra_cell_boundary(cell, s), s).is_zero(),
                                name + ": " + format(cell, s) + " is not a cycle");
                    }
            }
    }
    std::ostringstream status;
    for (const auto& [name, s] : {groups[0], groups[1]})
        for (CellKind kind : {CellKind::B4_1, CellKind::B4_2}) {
            const auto res = resolve_b4_signs(s, kind);
            using St = SignResolution::Status;
            const char* word = res.status == St::resolved      ? "resolved"
                               : res.status == St::no_solution ? "no_solution"
                               : res.status == St::ambiguous   ? "ambiguous"
                                                               : "not_applicable";
            status << " " << name << "/" << to_string(kind) << "=" << word;
            if (res.status == St::resolved) {
                // A resolved boundary has to be a cycle for every label.
                for (Element a = 0; a < s.size(); ++a)
                    for (Element b = 0; b < s.size(); ++b) {
                        const auto d = extra_cell_boundary(Cell::extra(kind, {a, b}), s, {res});
                        r.check(testing::cell_boundary(d, s).is_zero(), "resolved " + std::string(to_string(kind)) +
                                                                             " is not a cycle");
                    }
            } else {
                r.check(res.status == St::no_solution && !res.message.empty(),
                        name + ": " + std::string(to_string(kind)) + " neither resolved nor a documented failure");
            }
        }
    r.note("B3, B4_3, B4_4 cycles over Z/2, Z/3, S3; sign resolution:" + status.str() +
           " (unresolved cells are omitted from the extended complex)");
    return r.result();
}

std::string group_text(const Json& j)
{
    HomologyGroup h;
    h.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto& t : j.at("torsion"))
        h.torsion.push_back(BigInt(t.get<std::int64_t>()));
    return to_string(h);
}

// 7
Outcome homology_values()
{
    Recorder r;
    const std::filesystem::path fresh = GENERATED_ORACLE;
    const auto frozen_path = testing::fixture("oracle_homology.json");
    Json oracle;
    if (std::filesystem::exists(fresh)) {
        oracle = read_json(fresh);
        r.check(oracle == read_json(frozen_path), "fresh oracle output differs from the frozen copy");
        r.note("oracle regenerated at build time");
    } else {
        oracle = read_json(frozen_path);
        r.note("python unavailable, using the frozen oracle output");
    }
    for (const auto& [name, s] : conjugation_family()) {
        const PrismaticComplex plain(s, 3, {.jobs = 4});
        const PrismaticComplex qa(s, 3, {.mode = ComplexMode::qualgebra, .jobs = 4});
        const PrismaticComplex qa_no_d3(s, 3, {.mode = ComplexMode::qualgebra, .include_d3 = false, .jobs = 4});
        const std::vector<std::pair<std::string, HomologyGroup>> got{
            {"H1_prismatic", plain.homology(1)},
            {"H2_prismatic", plain.homology(2)},
            {"H2_qualgebra", qa.homology(2)},
            {"H2_qualgebra_no_d3", qa_no_d3.homology(2)}};
        for (const auto& [key, h] : got) {
            const auto want = group_text(oracle.at(name).at(key));
            r.check(to_string(h) == want, name + " " + key + " = " + to_string(h) + ", oracle " + want);
        }
    }
    r.check(prismatic_homology(examples::trivial(), 1).is_trivial(), "H1^P(trivial) != 0");
    r.check(prismatic_homology(examples::conj_cyclic(2), 1) == HomologyGroup{0, {2}}, "H1^P(conj Z/2) != Z/2");
    std::ostringstream summary;
    for (const char* name : {"conj_z2", "conj_z3"})
        summary << name << ": H2^P=" << group_text(oracle.at(name).at("H2_prismatic"))
                << " H2^QA=" << group_text(oracle.at(name).at("H2_qualgebra")) << " ";
    r.note(summary.str());
    return r.result();
}

// 8
Outcome coloring_counts()
{
    Recorder r;
    const auto trefoil = testing::load_diagram("trefoil");
    const auto theta = testing::load_diagram("theta");
    const auto s3 = examples::conj_symmetric3();
    const auto t = enumerate_colorings(trefoil, s3);
    r.check(t.size() == 12, "trefoil over S3 has " + std::to_string(t.size()) + " colorings");
    r.check(t == testing::brute_force_colorings(trefoil, s3), "trefoil colorings differ from brute force");
    std::vector<Named> all = conjugation_family();
    all.push_back({"projection_max3", examples::projection_max(3)});
    for (const auto& [name, s] : all) {
        const auto c = enumerate_colorings(theta, s);
        r.check(c.size() == s.size() * s.size(), name + ": theta has " + std::to_string(c.size()) + " colorings");
        r.check(c == testing::brute_force_colorings(theta, s), name + ": theta colorings differ from brute force");
    }
    r.note("trefoil/S3 = " + std::to_string(t.size()) + ", theta = |S|^2 on " + std::to_string(all.size()) +
           " structures");
    return r.result();
}

// 9
Outcome move_invariance()
{
    Recorder r;
    std::vector<Named> structures{{"conj_z2", examples::conj_cyclic(2)}, {"conj_s3", examples::conj_symmetric3()}};
    std::vector<InvariantComputer> computers;
    for (const auto& n : structures)
        computers.emplace_back(n.s);
    std::set<Move> covered;
    for (const auto& entry : std::filesystem::directory_iterator(testing::fixture("moves"))) {
        const auto f = parse_move_fixture(read_json(entry.path()));
        const std::string label = entry.path().stem().string();
        covered.insert(f.move);
        const auto moved = apply_move(f.before, f.move, f.site);
        r.check(equivalent(moved.diagram, f.after), label + ": after-diagram does not match the move");
        for (std::size_t i = 0; i < structures.size(); ++i) {
            const auto a = computers[i](f.before);
            const auto b = computers[i](f.after);
            r.check(a.same_invariant(b), label + " over " + structures[i].name + ": invariants differ");
            try {
                const auto match = coloring_bijection(f.before, a.colorings, f.after, b.colorings, moved.persistent);
                for (std::size_t k = 0; k < match.size(); ++k)
                    r.check(a.classes[k] == b.classes[match[k]], label + ": bijection does not preserve classes");
            } catch (const ContractViolation& e) {
                r.fail(label + ": " + e.what());
            }
        }
    }
    r.check(covered.size() == all_moves.size(), "not every move has a fixture");
    r.note(std::to_string(covered.size()) + " moves over conj Z/2 and conj S3");
    return r.result();
}

// 10
Outcome handcuff()
{
    Recorder r;
    const auto s = examples::conj_symmetric3();
    const InvariantComputer qa(s);
    const auto crossed = testing::load_diagram("handcuff_crossed");
    const auto planar = testing::load_diagram("handcuff_planar");
    const auto a = qa(crossed);
    const auto b = qa(planar);
    r.check(a.same_invariant(b), "invariants differ");
    r.note(std::to_string(a.coloring_count()) + " colorings each, " + std::to_string(crossed.crossings.size()) +
           " crossings vs " + std::to_string(planar.crossings.size()));
    return r.result();
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"d^2 = 0 through degree 4 (5 for |G| <= 2)", d_squared},
        {"boundary matches the explicit expansions over conj Z/3", symbolic_oracle},
        {"simplex and cube boundaries specialize to bar and rack differentials", specialization},
        {"geometric faces of good labelings over conj Z/3", geometric_oracle},
        {"path independence on (2,1), (1,2), (1,1,1), (2,2) over conj S3", path_independence},
        {"extra cells are cycles; B4_1/B4_2 sign resolution", extra_cells},
        {"homology values against the independent oracle", homology_values},
        {"trefoil and theta coloring counts against brute force", coloring_counts},
        {"invariance under H, YI, IY, III, II, I, T", move_invariance},
        {"crossed and planar handcuff diagrams", handcuff}};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << " [" << o.detail
                  << "] (" << time.str() << "s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
