#include "prismhom/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prismhom {

std::string_view to_string(Move m)
{
    switch (m) {
    case Move::H: return "H";
    case Move::YI: return "YI";
    case Move::IY: return "IY";
    case Move::III: return "III";
    case Move::II: return "II";
    case Move::I: return "I";
    case Move::T: return "T";
    }
    return "?";
}

std::optional<Move> move_from_name(std::string_view name)
{
    for (Move m : all_moves)
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

namespace {

struct End
{
    bool at_crossing;
    std::size_t index;
    std::size_t slot; // crossing: 0 in, 1 out; vertex: arc slot
};

std::optional<End> head_of(const KTGDiagram& d, ArcId a)
{
    for (std::size_t k = 0; k < d.crossings.size(); ++k)
        if (d.crossings[k].under_in == a)
            return End{true, k, 0};
    for (std::size_t k = 0; k < d.vertices.size(); ++k) {
        const auto& v = d.vertices[k];
        for (std::size_t s = 0; s < 3; ++s)
            if (v.arcs[s] == a && (s == 2) == (v.role == VertexRole::unzip))
                return End{false, k, s};
    }
    return std::nullopt;
}

void set_end(KTGDiagram& d, const End& e, ArcId a)
{
    if (e.at_crossing)
        (e.slot == 0 ? d.crossings[e.index].under_in : d.crossings[e.index].under_out) = a;
    else
        d.vertices[e.index].arcs[e.slot] = a;
}

bool is_over(const KTGDiagram& d, ArcId a)
{
    return std::any_of(d.crossings.begin(), d.crossings.end(), [&](const Crossing& c) { return c.over == a; });
}

void remove_arc(KTGDiagram& d, ArcId a)
{
    d.arcs.erase(std::remove(d.arcs.begin(), d.arcs.end(), a), d.arcs.end());
}

void rename_arc(KTGDiagram& d, ArcId from, ArcId to)
{
    for (auto& c : d.crossings)
        for (ArcId* x : {&c.over, &c.under_in, &c.under_out})
            if (*x == from)
                *x = to;
    for (auto& v : d.vertices)
        for (auto& x : v.arcs)
            if (x == from)
                x = to;
    remove_arc(d, from);
}

void remove_crossings(KTGDiagram& d, std::vector<std::size_t> ks)
{
    std::sort(ks.rbegin(), ks.rend());
    for (std::size_t k : ks)
        d.crossings.erase(d.crossings.begin() + static_cast<std::ptrdiff_t>(k));
}

[[noreturn]] void mismatch(Move m, const std::string& why)
{
    throw InputError("move " + std::string(to_string(m)) + " does not apply: " + why);
}

void need_targets(Move m, const MoveSite& site, std::size_t n)
{
    if (site.targets.size() != n)
        mismatch(m, "expected " + std::to_string(n) + " targets");
}

std::size_t crossing_at(const KTGDiagram& d, Move m, std::int64_t k)
{
    if (k < 0 || static_cast<std::size_t>(k) >= d.crossings.size())
        mismatch(m, "no crossing " + std::to_string(k));
    return static_cast<std::size_t>(k);
}

std::size_t vertex_at(const KTGDiagram& d, Move m, std::int64_t k)
{
    if (k < 0 || static_cast<std::size_t>(k) >= d.vertices.size())
        mismatch(m, "no vertex " + std::to_string(k));
    return static_cast<std::size_t>(k);
}

ArcId arc_at(const KTGDiagram& d, Move m, std::int64_t a)
{
    if (std::find(d.arcs.begin(), d.arcs.end(), a) == d.arcs.end())
        mismatch(m, "no arc " + std::to_string(a));
    return a;
}

std::optional<std::size_t> zip_with_merged(const KTGDiagram& d, ArcId a)
{
    for (std::size_t k = 0; k < d.vertices.size(); ++k)
        if (d.vertices[k].role == VertexRole::zip && d.vertices[k].arcs[2] == a)
            return k;
    return std::nullopt;
}

std::optional<std::size_t> crossing_with_out(const KTGDiagram& d, ArcId a)
{
    for (std::size_t k = 0; k < d.crossings.size(); ++k)
        if (d.crossings[k].under_out == a)
            return k;
    return std::nullopt;
}

Vertex zip(ArcId l, ArcId r, ArcId m)
{
    return {{l, r, m}, VertexRole::zip, 1};
}

Vertex unzip(ArcId l, ArcId r, ArcId m)
{
    return {{l, r, m}, VertexRole::unzip, -1};
}

void move_I(KTGDiagram& d, const MoveSite& site, std::set<ArcId>& changed)
{
    (void)changed;
    need_targets(Move::I, site, 1);
    if (!site.inverse) {
        const ArcId x = arc_at(d, Move::I, site.targets[0]);
        if (site.sign != 1 && site.sign != -1)
            mismatch(Move::I, "sign must be +1 or -1");
        if (auto head = head_of(d, x)) {
            const ArcId n = d.next_arc_id();
            set_end(d, *head, n);
            d.arcs.push_back(n);
            d.crossings.push_back({x, x, n, site.sign});
        } else {
            d.crossings.push_back({x, x, x, site.sign});
        }
        return;
    }
    const std::size_t k = crossing_at(d, Move::I, site.targets[0]);
    const Crossing c = d.crossings[k];
    ArcId keep, drop;
    if (c.over == c.under_in)
        keep = c.under_in, drop = c.under_out;
    else if (c.over == c.under_out)
        keep = c.under_out, drop = c.under_in;
    else
        mismatch(Move::I, "crossing is not a kink");
    remove_crossings(d, {k});
    if (keep != drop)
        rename_arc(d, drop, keep);
}

void move_II(KTGDiagram& d, const MoveSite& site, std::set<ArcId>& changed)
{
    (void)changed;
    need_targets(Move::II, site, 2);
    if (!site.inverse) {
        const ArcId a = arc_at(d, Move::II, site.targets[0]);
        const ArcId b = arc_at(d, Move::II, site.targets[1]);
        if (site.sign != 1 && site.sign != -1)
            mismatch(Move::II, "sign must be +1 or -1");
        const ArcId m = d.next_arc_id();
        d.arcs.push_back(m);
        if (auto head = head_of(d, a)) {
            const ArcId n = m + 1;
            set_end(d, *head, n);
            d.arcs.push_back(n);
            d.crossings.push_back({b, a, m, site.sign});
            d.crossings.push_back({b, m, n, -site.sign});
        } else {
            d.crossings.push_back({b, a, m, site.sign});
            d.crossings.push_back({b, m, a, -site.sign});
        }
        return;
    }
    const std::size_t i = crossing_at(d, Move::II, site.targets[0]);
    const std::size_t j = crossing_at(d, Move::II, site.targets[1]);
    const Crossing ci = d.crossings[i], cj = d.crossings[j];
    if (i == j || ci.over != cj.over || ci.under_out != cj.under_in || ci.sign != -cj.sign)
        mismatch(Move::II, "crossings do not form a bigon");
    const ArcId a = ci.under_in, m = ci.under_out, n = cj.under_out;
    if (m == a || m == ci.over)
        mismatch(Move::II, "middle segment is not a separate arc");
    remove_crossings(d, {i, j});
    if (is_over(d, m))
        mismatch(Move::II, "middle segment passes over another strand");
    remove_arc(d, m);
    if (n != a)
        rename_arc(d, n, a);
}

void move_III(KTGDiagram& d, const MoveSite& site, std::set<ArcId>& changed)
{
    need_targets(Move::III, site, 3);
    const std::size_t i1 = crossing_at(d, Move::III, site.targets[0]);
    const std::size_t i2 = crossing_at(d, Move::III, site.targets[1]);
    const std::size_t i3 = crossing_at(d, Move::III, site.targets[2]);
    if (i1 == i2 || i2 == i3 || i1 == i3)
        mismatch(Move::III, "crossings must be distinct");
    Crossing& x1 = d.crossings[i1];
    Crossing& x2 = d.crossings[i2];
    const Crossing x3 = d.crossings[i3];
    if (x1.sign != 1 || x2.sign != 1 || x3.sign != 1)
        mismatch(Move::III, "only the all-positive configuration is supported");
    if (x1.under_out != x2.under_in)
        mismatch(Move::III, "the first two crossings are not consecutive on one strand");
    const ArcId a1 = x1.under_out;
    if (!site.inverse) {
        if (x1.over != x3.under_in || x2.over != x3.over)
            mismatch(Move::III, "crossings do not form a triangle");
        x1.over = x3.over;
        x2.over = x3.under_out;
    } else {
        if (x2.over != x3.under_out || x1.over != x3.over)
            mismatch(Move::III, "crossings do not form a triangle");
        x1.over = x3.under_in;
        x2.over = x3.over;
    }
    if (is_over(d, a1) || a1 == x1.under_in)
        mismatch(Move::III, "middle segment is not a short arc");
    changed.insert(a1);
}

void move_YI(KTGDiagram& d, const MoveSite& site, std::set<ArcId>& changed)
{
    (void)changed;
    need_targets(Move::YI, site, 1);
    if (!site.inverse) {
        const std::size_t k = crossing_at(d, Move::YI, site.targets[0]);
        const Crossing c = d.crossings[k];
        auto v = zip_with_merged(d, c.under_in);
        if (!v || c.sign != 1)
            mismatch(Move::YI, "crossing is not a positive crossing under a zip output");
        const ArcId z = c.under_in;
        if (is_over(d, z) || c.under_out == z)
            mismatch(Move::YI, "zip output is not a short arc");
        const ArcId x = d.vertices[*v].arcs[0], y = d.vertices[*v].arcs[1];
        const ArcId x2 = d.next_arc_id(), y2 = x2 + 1;
        remove_crossings(d, {k});
        remove_arc(d, z);
        d.arcs.push_back(x2);
        d.arcs.push_back(y2);
        d.crossings.push_back({c.over, x, x2, 1});
        d.crossings.push_back({c.over, y, y2, 1});
        d.vertices[*v] = zip(x2, y2, c.under_out);
        return;
    }
    const std::size_t v = vertex_at(d, Move::YI, site.targets[0]);
    const Vertex vx = d.vertices[v];
    auto k1 = crossing_with_out(d, vx.arcs[0]);
    auto k2 = crossing_with_out(d, vx.arcs[1]);
    if (vx.role != VertexRole::zip || !k1 || !k2)
        mismatch(Move::YI, "zip inputs do not both leave crossings");
    const Crossing c1 = d.crossings[*k1], c2 = d.crossings[*k2];
    if (c1.over != c2.over || c1.sign != 1 || c2.sign != 1)
        mismatch(Move::YI, "input crossings differ");
    if (is_over(d, vx.arcs[0]) || is_over(d, vx.arcs[1]))
        mismatch(Move::YI, "zip inputs are not short arcs");
    const ArcId z = d.next_arc_id();
    remove_crossings(d, {*k1, *k2});
    remove_arc(d, vx.arcs[0]);
    remove_arc(d, vx.arcs[1]);
    d.arcs.push_back(z);
    d.vertices[v] = zip(c1.under_in, c2.under_in, z);
    d.crossings.push_back({c1.over, z, vx.arcs[2], 1});
}

void move_IY(KTGDiagram& d, const MoveSite& site, std::set<ArcId>& changed)
{
    (void)changed;
    if (!site.inverse) {
        need_targets(Move::IY, site, 2);
        const std::size_t k1 = crossing_at(d, Move::IY, site.targets[0]);
        const std::size_t k2 = crossing_at(d, Move::IY, site.targets[1]);
        const Crossing c1 = d.crossings[k1], c2 = d.crossings[k2];
        if (k1 == k2 || c1.sign != 1 || c2.sign != 1 || c1.under_out != c2.under_in)
            mismatch(Move::IY, "crossings are not consecutive positive crossings");
        std::optional<std::size_t> v;
        for (std::size_t t = 0; t < d.vertices.size(); ++t)
            if (d.vertices[t].role == VertexRole::zip && d.vertices[t].arcs[0] == c1.over &&
                d.vertices[t].arcs[1] == c2.over)
                v = t;
        if (!v)
            mismatch(Move::IY, "over-arcs are not the inputs of one zip");
        const ArcId x1 = c1.under_out;
        if (is_over(d, x1) || x1 == c1.under_in)
            mismatch(Move::IY, "middle segment is not a short arc");
        remove_crossings(d, {k1, k2});
        if (is_over(d, x1))
            mismatch(Move::IY, "middle segment passes over another strand");
        remove_arc(d, x1);
        d.crossings.push_back({d.vertices[*v].arcs[2], c1.under_in, c2.under_out, 1});
        return;
    }
    need_targets(Move::IY, site, 1);
    const std::size_t k = crossing_at(d, Move::IY, site.targets[0]);
    const Crossing c = d.crossings[k];
    auto v = zip_with_merged(d, c.over);
    if (!v || c.sign != 1)
        mismatch(Move::IY, "crossing is not a positive crossing under a zip output");
    const ArcId x1 = d.next_arc_id();
    remove_crossings(d, {k});
    d.arcs.push_back(x1);
    d.crossings.push_back({d.vertices[*v].arcs[0], c.under_in, x1, 1});
    d.crossings.push_back({d.vertices[*v].arcs[1], x1, c.under_out, 1});
}

void move_T(KTGDiagram& d, const MoveSite& site, std::set<ArcId>& changed)
{
    (void)changed;
    need_targets(Move::T, site, 1);
    const std::size_t v = vertex_at(d, Move::T, site.targets[0]);
    const Vertex vx = d.vertices[v];
    if (vx.role != VertexRole::zip)
        mismatch(Move::T, "vertex is not a zip");
    if (!site.inverse) {
        const ArcId x = vx.arcs[0], y = vx.arcs[1];
        const ArcId x2 = d.next_arc_id();
        d.arcs.push_back(x2);
        d.crossings.push_back({y, x, x2, 1});
        d.vertices[v] = zip(y, x2, vx.arcs[2]);
        return;
    }
    const ArcId y = vx.arcs[0], x2 = vx.arcs[1];
    auto k = crossing_with_out(d, x2);
    if (!k || d.crossings[*k].over != y || d.crossings[*k].sign != 1)
        mismatch(Move::T, "right input does not leave a positive crossing under the left input");
    if (is_over(d, x2))
        mismatch(Move::T, "right input is not a short arc");
    const ArcId x = d.crossings[*k].under_in;
    remove_crossings(d, {*k});
    remove_arc(d, x2);
    d.vertices[v] = zip(x, y, vx.arcs[2]);
}

void move_H(KTGDiagram& d, const MoveSite& site, std::set<ArcId>& changed)
{
    (void)changed;
    need_targets(Move::H, site, 2);
    const std::size_t i = vertex_at(d, Move::H, site.targets[0]);
    const std::size_t j = vertex_at(d, Move::H, site.targets[1]);
    if (i == j)
        mismatch(Move::H, "vertices must be distinct");
    const Vertex v1 = d.vertices[i], v2 = d.vertices[j];
    const ArcId fresh = d.next_arc_id();

    if (site.variant == 0) {
        if (v1.role != VertexRole::zip || v2.role != VertexRole::zip)
            mismatch(Move::H, "associativity needs two zips");
        const ArcId x = v1.arcs[0], y = v1.arcs[1], u = v1.arcs[2];
        if (is_over(d, u))
            mismatch(Move::H, "connecting arc passes over another strand");
        if (v2.arcs[0] == u) {
            const ArcId z = v2.arcs[1], w = v2.arcs[2];
            d.vertices[i] = zip(y, z, fresh);
            d.vertices[j] = zip(x, fresh, w);
        } else if (v2.arcs[1] == u) {
            const ArcId t = v2.arcs[0], w = v2.arcs[2];
            d.vertices[i] = zip(t, x, fresh);
            d.vertices[j] = zip(fresh, y, w);
        } else {
            mismatch(Move::H, "second zip is not fed by the first");
        }
        remove_arc(d, u);
        d.arcs.push_back(fresh);
        return;
    }
    if (site.variant != 1)
        mismatch(Move::H, "unknown variant " + std::to_string(site.variant));
    if (!site.inverse) {
        if (v1.role != VertexRole::zip || v2.role != VertexRole::unzip || v1.arcs[2] != v2.arcs[2])
            mismatch(Move::H, "rotation needs a zip feeding an unzip");
        const ArcId x = v1.arcs[0], y = v1.arcs[1], w = v1.arcs[2], p = v2.arcs[0], q = v2.arcs[1];
        if (is_over(d, w))
            mismatch(Move::H, "connecting arc passes over another strand");
        d.vertices[i] = unzip(p, fresh, x);
        d.vertices[j] = zip(fresh, y, q);
        remove_arc(d, w);
        d.arcs.push_back(fresh);
        return;
    }
    if (v1.role != VertexRole::unzip || v2.role != VertexRole::zip || v1.arcs[1] != v2.arcs[0])
        mismatch(Move::H, "inverse rotation needs an unzip feeding a zip through its right output");
    const ArcId p = v1.arcs[0], r = v1.arcs[1], x = v1.arcs[2], y = v2.arcs[1], q = v2.arcs[2];
    if (is_over(d, r))
        mismatch(Move::H, "connecting arc passes over another strand");
    d.vertices[i] = zip(x, y, fresh);
    d.vertices[j] = unzip(p, q, fresh);
    remove_arc(d, r);
    d.arcs.push_back(fresh);
}

} // namespace

MoveResult apply_move(const KTGDiagram& d, Move m, const MoveSite& site)
{
    validate(d);
    MoveResult r{d, {}};
    std::set<ArcId> changed;
    switch (m) {
    case Move::I: move_I(r.diagram, site, changed); break;
    case Move::II: move_II(r.diagram, site, changed); break;
    case Move::III: move_III(r.diagram, site, changed); break;
    case Move::YI: move_YI(r.diagram, site, changed); break;
    case Move::IY: move_IY(r.diagram, site, changed); break;
    case Move::T: move_T(r.diagram, site, changed); break;
    case Move::H: move_H(r.diagram, site, changed); break;
    }
    validate(r.diagram);
    for (ArcId a : d.arcs)
        if (!changed.contains(a) &&
            std::find(r.diagram.arcs.begin(), r.diagram.arcs.end(), a) != r.diagram.arcs.end())
            r.persistent.push_back(a);
    return r;
}

std::vector<std::size_t> coloring_bijection(const KTGDiagram& before, const std::vector<Coloring>& before_colorings,
                                            const KTGDiagram& after, const std::vector<Coloring>& after_colorings,
                                            const std::vector<ArcId>& persistent)
{
    auto restrict = [&](const KTGDiagram& d, const std::vector<Coloring>& cs) {
        std::vector<std::size_t> idx;
        for (ArcId a : persistent)
            idx.push_back(d.arc_index(a));
        std::map<std::vector<Element>, std::size_t> out;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            std::vector<Element> key;
            for (std::size_t t : idx)
                key.push_back(cs[i].colors[t]);
            if (!out.emplace(std::move(key), i).second)
                throw ContractViolation("two colorings agree on every persistent arc");
        }
        return out;
    };
    const auto lhs = restrict(before, before_colorings);
    const auto rhs = restrict(after, after_colorings);
    if (lhs.size() != rhs.size())
        throw ContractViolation("coloring counts differ: " + std::to_string(lhs.size()) + " vs " +
                                std::to_string(rhs.size()));
    std::vector<std::size_t> out(before_colorings.size());
    for (const auto& [key, i] : lhs) {
        auto it = rhs.find(key);
        if (it == rhs.end())
            throw ContractViolation("a coloring has no partner across the move");
        out[i] = it->second;
    }
    return out;
}

} // namespace prismhom
