#include "prismhom/knots.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace prismhom {

std::string_view to_string(VertexRole role)
{
    return role == VertexRole::zip ? "zip" : "unzip";
}

std::size_t KTGDiagram::arc_index(ArcId id) const
{
    auto it = std::find(arcs.begin(), arcs.end(), id);
    if (it == arcs.end())
        throw InputError("unknown arc " + std::to_string(id));
    return static_cast<std::size_t>(it - arcs.begin());
}

ArcId KTGDiagram::next_arc_id() const
{
    return arcs.empty() ? 0 : *std::max_element(arcs.begin(), arcs.end()) + 1;
}

void validate(const KTGDiagram& d)
{
    std::map<ArcId, std::pair<int, int>> ends; // heads, tails
    for (ArcId a : d.arcs)
        if (!ends.emplace(a, std::pair{0, 0}).second)
            throw InputError("arc " + std::to_string(a) + " is listed twice");
    auto touch = [&](ArcId a, bool head, const std::string& where) {
        auto it = ends.find(a);
        if (it == ends.end())
            throw InputError(where + " refers to unknown arc " + std::to_string(a));
        (head ? it->second.first : it->second.second)++;
    };
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& c = d.crossings[k];
        const std::string where = "crossing " + std::to_string(k);
        if (c.sign != 1 && c.sign != -1)
            throw InputError(where + " has sign " + std::to_string(c.sign));
        if (!ends.contains(c.over))
            throw InputError(where + " refers to unknown arc " + std::to_string(c.over));
        touch(c.under_in, true, where);
        touch(c.under_out, false, where);
    }
    for (std::size_t k = 0; k < d.vertices.size(); ++k) {
        const auto& v = d.vertices[k];
        const std::string where = "vertex " + std::to_string(k);
        const int expected = v.role == VertexRole::zip ? 1 : -1;
        if (v.sign != expected)
            throw InputError(where + " is a " + std::string(to_string(v.role)) + " and needs sign " +
                             std::to_string(expected));
        const bool zip = v.role == VertexRole::zip;
        touch(v.arcs[0], zip, where);
        touch(v.arcs[1], zip, where);
        touch(v.arcs[2], !zip, where);
    }
    for (const auto& [a, ht] : ends)
        if (ht != std::pair{1, 1} && ht != std::pair{0, 0})
            throw InputError("arc " + std::to_string(a) + " has " + std::to_string(ht.first) + " incoming and " +
                             std::to_string(ht.second) + " outgoing ends");
}

KTGDiagram sorted(KTGDiagram d)
{
    std::sort(d.arcs.begin(), d.arcs.end());
    std::sort(d.crossings.begin(), d.crossings.end());
    std::sort(d.vertices.begin(), d.vertices.end());
    return d;
}

bool equivalent(const KTGDiagram& a, const KTGDiagram& b)
{
    const auto x = sorted(a), y = sorted(b);
    return x.arcs == y.arcs && x.crossings == y.crossings && x.vertices == y.vertices;
}

namespace {

struct Constraints
{
    struct Cross
    {
        std::size_t over, in, out;
        bool positive;
    };
    struct Vert
    {
        std::size_t left, right, merged;
    };
    std::vector<Cross> crossings;
    std::vector<Vert> vertices;

    Constraints(const KTGDiagram& d)
    {
        for (const auto& c : d.crossings)
            crossings.push_back({d.arc_index(c.over), d.arc_index(c.under_in), d.arc_index(c.under_out), c.sign > 0});
        for (const auto& v : d.vertices)
            vertices.push_back({d.arc_index(v.arcs[0]), d.arc_index(v.arcs[1]), d.arc_index(v.arcs[2])});
    }
};

Element crossing_out(Element in, Element over, bool positive, const Shalgebra& s)
{
    return positive ? s.act(in, over) : s.act_inverse(in, over);
}

class ColoringSearch
{
public:
    ColoringSearch(const KTGDiagram& d, const Shalgebra& s)
        : s_(s), k_(d), arcs_(d.arcs.size()), invertible_(s.report().holds(Axiom::II))
    {
    }

    using Partial = std::vector<std::optional<Element>>;

    Partial start() const { return Partial(arcs_); }

    // Fills forced colors; false on contradiction.
    bool propagate(Partial& p) const
    {
        bool changed = true;
        auto set = [&](std::size_t i, Element v) {
            if (!p[i]) {
                p[i] = v;
                changed = true;
                return true;
            }
            return *p[i] == v;
        };
        while (changed) {
            changed = false;
            for (const auto& c : k_.crossings) {
                if (p[c.in] && p[c.over] && !set(c.out, crossing_out(*p[c.in], *p[c.over], c.positive, s_)))
                    return false;
                if (invertible_ && p[c.out] && p[c.over]) {
                    const Element in = c.positive ? s_.act_inverse(*p[c.out], *p[c.over]) : s_.act(*p[c.out], *p[c.over]);
                    if (!set(c.in, in))
                        return false;
                }
            }
            for (const auto& v : k_.vertices) {
                if (p[v.left] && p[v.right] && !set(v.merged, s_.mul(*p[v.left], *p[v.right])))
                    return false;
                if (s_.is_group() && p[v.merged]) {
                    if (p[v.left] && !set(v.right, s_.mul(s_.inverse(*p[v.left]), *p[v.merged])))
                        return false;
                    if (p[v.right] && !set(v.left, s_.mul(*p[v.merged], s_.inverse(*p[v.right]))))
                        return false;
                }
            }
        }
        return true;
    }

    void search(Partial p, std::vector<Coloring>& out) const
    {
        if (!propagate(p))
            return;
        auto free = std::find(p.begin(), p.end(), std::nullopt);
        if (free == p.end()) {
            Coloring c;
            for (const auto& x : p)
                c.colors.push_back(*x);
            out.push_back(std::move(c));
            return;
        }
        for (Element v = 0; v < s_.size(); ++v) {
            Partial q = p;
            q[static_cast<std::size_t>(free - p.begin())] = v;
            search(std::move(q), out);
        }
    }

private:
    const Shalgebra& s_;
    Constraints k_;
    std::size_t arcs_;
    bool invertible_;
};

} // namespace

bool is_coloring(const KTGDiagram& d, const Coloring& c, const Shalgebra& s)
{
    if (c.colors.size() != d.arcs.size())
        return false;
    for (Element x : c.colors)
        if (x >= s.size())
            return false;
    const Constraints k(d);
    for (const auto& x : k.crossings) {
        const Element in = c.colors[x.in], over = c.colors[x.over], out = c.colors[x.out];
        if (x.positive ? s.act(in, over) != out : s.act(out, over) != in)
            return false;
    }
    for (const auto& v : k.vertices)
        if (s.mul(c.colors[v.left], c.colors[v.right]) != c.colors[v.merged])
            return false;
    return true;
}

std::vector<Coloring> enumerate_colorings(const KTGDiagram& d, const Shalgebra& s, unsigned jobs)
{
    validate(d);
    const bool negative = std::any_of(d.crossings.begin(), d.crossings.end(), [](const Crossing& c) { return c.sign < 0; });
    if (negative && !s.report().holds(Axiom::II))
        throw InputError("negative crossings need axiom II, which fails");

    ColoringSearch search(d, s);
    std::vector<Coloring> out;
    auto root = search.start();
    if (!search.propagate(root))
        return out;
    auto free = std::find(root.begin(), root.end(), std::nullopt);
    if (jobs <= 1 || free == root.end()) {
        search.search(root, out);
    } else {
        const std::size_t slot = static_cast<std::size_t>(free - root.begin());
        std::vector<std::vector<Coloring>> parts(s.size());
        {
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < jobs; ++w)
                workers.emplace_back([&, w] {
                    for (Element v = w; v < s.size(); v += jobs) {
                        auto p = root;
                        p[slot] = v;
                        search.search(std::move(p), parts[v]);
                    }
                });
        }
        for (auto& part : parts)
            out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    for (const auto& c : out)
        if (!is_coloring(d, c, s))
            throw ContractViolation("coloring search produced an invalid coloring");
    return out;
}

CellChain represented_cycle(const KTGDiagram& d, const Coloring& c, const Shalgebra& s)
{
    if (!is_coloring(d, c, s))
        throw InputError("not a valid coloring of the diagram");
    auto color = [&](ArcId a) { return c.colors[d.arc_index(a)]; };
    CellChain z;
    for (const auto& x : d.crossings) {
        if (x.sign > 0)
            z.add(Cell::prism(BracketedTuple::from_blocks({{color(x.under_in)}, {color(x.over)}})), 1);
        else
            z.add(Cell::prism(BracketedTuple::from_blocks({{color(x.under_out)}, {color(x.over)}})), -1);
    }
    for (const auto& v : d.vertices)
        z.add(Cell::prism(BracketedTuple::from_blocks({{color(v.arcs[0]), color(v.arcs[1])}})),
              v.role == VertexRole::zip ? 1 : -1);

    CellChain residue;
    for (const auto& [cell, k] : z.terms())
        residue.add(boundary_generator(cell.tuple, s), k);
    if (!residue.is_zero())
        throw ContractViolation("represented chain is not a cycle: boundary " + format(residue, s));
    return z;
}

bool InvariantResult::same_invariant(const InvariantResult& other) const
{
    return group == other.group && coloring_count() == other.coloring_count() && multiset == other.multiset;
}

InvariantComputer::InvariantComputer(const Shalgebra& s, ComplexOptions options)
    : complex_(std::make_unique<PrismaticComplex>(s, 3, options)),
      decomposition_(std::make_unique<HomologyDecomposition>(complex_->chains(), 2))
{
}

HomologyClass InvariantComputer::class_of(const CellChain& z) const
{
    return decomposition_->class_of(complex_->to_chain(z, 2));
}

InvariantResult InvariantComputer::operator()(const KTGDiagram& d) const
{
    const auto& s = complex_->algebra();
    InvariantResult r;
    r.group = group();
    r.colorings = enumerate_colorings(d, s, complex_->options().jobs);
    for (const auto& c : r.colorings) {
        r.classes.push_back(class_of(represented_cycle(d, c, s)));
        ++r.multiset[r.classes.back()];
    }
    return r;
}

InvariantResult invariant(const KTGDiagram& d, const Shalgebra& s)
{
    return InvariantComputer(s)(d);
}

std::string_view to_string(FoamKind kind)
{
    switch (kind) {
    case FoamKind::H: return "H";
    case FoamKind::YI: return "YI";
    case FoamKind::IY: return "IY";
    case FoamKind::III: return "III";
    }
    return "?";
}

std::optional<FoamKind> foam_kind_from_name(std::string_view name)
{
    for (FoamKind k : {FoamKind::H, FoamKind::YI, FoamKind::IY, FoamKind::III})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

CellChain foam_chain(const FoamChainPresentation& f)
{
    CellChain z;
    for (const auto& c : f.crossings) {
        const auto [a, b, x] = c.labels;
        std::vector<std::vector<Element>> blocks;
        switch (c.kind) {
        case FoamKind::H: blocks = {{a, b, x}}; break;
        case FoamKind::YI: blocks = {{a, b}, {x}}; break;
        case FoamKind::IY: blocks = {{a}, {b, x}}; break;
        case FoamKind::III: blocks = {{a}, {b}, {x}}; break;
        }
        z.add(Cell::prism(BracketedTuple::from_blocks(blocks)), c.sign);
    }
    return z;
}

FoamInvariantComputer::FoamInvariantComputer(const Shalgebra& s, unsigned jobs)
    : complex_(std::make_unique<PrismaticComplex>(s, 4, ComplexOptions{.mode = ComplexMode::normalized, .jobs = jobs})),
      decomposition_(std::make_unique<HomologyDecomposition>(complex_->chains(), 3))
{
}

HomologyClass FoamInvariantComputer::operator()(const FoamChainPresentation& f) const
{
    for (const auto& c : f.crossings)
        for (Element x : c.labels)
            if (x >= complex_->algebra().size())
                throw InputError("foam label out of range");
    const Chain z = complex_->to_chain(foam_chain(f), 3);
    if (!z.is_zero()) {
        const Chain r = boundary(z, complex_->chains());
        if (!r.is_zero())
            throw InputError("foam chain is not a cycle; boundary " + format(complex_->to_cells(r), complex_->algebra()));
    }
    return decomposition_->class_of(z);
}

HomologyClass foam_invariant(const FoamChainPresentation& f, const Shalgebra& s)
{
    return FoamInvariantComputer(s)(f);
}

} // namespace prismhom
