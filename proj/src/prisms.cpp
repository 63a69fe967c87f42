#include "prismhom/prisms.hpp"

#include <numeric>

namespace prismhom {

std::vector<PrismVertex> prism_vertices(const OrderedPartition& shape)
{
    std::vector<PrismVertex> out;
    PrismVertex v{std::vector<std::size_t>(shape.length(), 0)};
    while (true) {
        out.push_back(v);
        std::size_t q = shape.length();
        while (q > 0 && v.coords[q - 1] == shape.parts[q - 1]) {
            v.coords[q - 1] = 0;
            --q;
        }
        if (q == 0)
            return out;
        ++v.coords[q - 1];
    }
}

std::vector<PrismEdge> prism_edges(const OrderedPartition& shape)
{
    std::vector<PrismEdge> out;
    for (const auto& v : prism_vertices(shape))
        for (std::size_t q = 0; q < shape.length(); ++q)
            for (std::size_t p = v.coords[q] + 1; p <= shape.parts[q]; ++p) {
                PrismVertex w = v;
                w.coords[q] = p;
                out.emplace_back(v, std::move(w));
            }
    return out;
}

std::vector<PrismVertex> LabeledPrism::vertices() const
{
    return prism_vertices(partition);
}

namespace {

Element product(std::span<const Element> xs, const Shalgebra& s)
{
    Element acc = xs[0];
    for (std::size_t t = 1; t < xs.size(); ++t)
        acc = s.mul(acc, xs[t]);
    return acc;
}

std::size_t changed_factor(const PrismEdge& e)
{
    for (std::size_t q = 0; q < e.first.coords.size(); ++q)
        if (e.first.coords[q] != e.second.coords[q])
            return q;
    throw ContractViolation("degenerate edge");
}

} // namespace

LabeledPrism good_labeling(const BracketedTuple& g, const Shalgebra& s)
{
    LabeledPrism out{g.partition, g, {}};
    for (auto& e : prism_edges(g.partition)) {
        const std::size_t q = changed_factor(e);
        const auto block = g.block(q);
        Element label = product(block.subspan(e.first.coords[q], e.second.coords[q] - e.first.coords[q]), s);
        for (std::size_t u = q + 1; u < g.block_count(); ++u)
            if (const std::size_t p = e.first.coords[u]; p > 0)
                label = s.act(label, product(g.block(u).first(p), s));
        out.edges.emplace(std::move(e), label);
    }
    return out;
}

LabeledPrism inductive_labeling(const LabeledPrism& base, std::span<const Element> h, const Shalgebra& s)
{
    if (h.empty())
        throw InputError("appended block must be nonempty");
    const std::size_t m = h.size();
    LabeledPrism out;
    out.partition = base.partition;
    out.partition.parts.push_back(m);
    out.label.partition = out.partition;
    out.label.elements = base.label.elements;
    out.label.elements.insert(out.label.elements.end(), h.begin(), h.end());

    auto extend = [](PrismVertex v, std::size_t i) {
        v.coords.push_back(i);
        return v;
    };
    for (std::size_t i = 0; i <= m; ++i)
        for (const auto& [e, label] : base.edges)
            out.edges.emplace(PrismEdge{extend(e.first, i), extend(e.second, i)},
                              i == 0 ? label : s.act(label, product(h.first(i), s)));
    for (const auto& w : base.vertices())
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j)
                out.edges.emplace(PrismEdge{extend(w, i), extend(w, j)}, product(h.subspan(i, j - i), s));
    return out;
}

LabeledPrism inductive_labeling(const BracketedTuple& g, const Shalgebra& s)
{
    LabeledPrism out;
    for (std::size_t j = 0; j < g.block_count(); ++j)
        out = inductive_labeling(out, g.block(j), s);
    return out;
}

LabeledPrism act_on_prism(const LabeledPrism& prism, Element b, const Shalgebra& s)
{
    LabeledPrism out = prism;
    for (auto& [e, label] : out.edges)
        label = s.act(label, b);
    out.label.elements = diagonal_action(prism.label.elements, b, s);
    return out;
}

BracketedTuple recover_tuple(const LabeledPrism& prism)
{
    std::vector<Element> elements;
    const std::size_t l = prism.partition.length();
    for (std::size_t q = 0; q < l; ++q)
        for (std::size_t i = 1; i <= prism.partition.parts[q]; ++i) {
            PrismVertex from{std::vector<std::size_t>(l, 0)};
            from.coords[q] = i - 1;
            PrismVertex to = from;
            to.coords[q] = i;
            auto it = prism.edges.find({from, to});
            if (it == prism.edges.end())
                throw InputError("prism is missing an edge");
            elements.push_back(it->second);
        }
    return BracketedTuple(prism.partition, std::move(elements));
}

bool is_good(const LabeledPrism& prism, const Shalgebra& s)
{
    const auto g = recover_tuple(prism);
    return g == prism.label && good_labeling(g, s).edges == prism.edges;
}

std::vector<SignedPrism> geometric_faces(const LabeledPrism& prism, const Shalgebra& s)
{
    std::vector<SignedPrism> out;
    const auto& parts = prism.partition.parts;
    std::size_t start = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const std::size_t k = parts[j];
        for (std::size_t i = 0; i <= k; ++i) {
            auto rename = [&](const PrismVertex& v) {
                PrismVertex w = v;
                if (k == 1)
                    w.coords.erase(w.coords.begin() + static_cast<std::ptrdiff_t>(j));
                else if (w.coords[j] > i)
                    --w.coords[j];
                return w;
            };
            SignedPrism f;
            f.sign = (start + i) % 2 == 0 ? 1 : -1;
            f.prism.partition = prism.partition;
            if (k == 1)
                f.prism.partition.parts.erase(f.prism.partition.parts.begin() + static_cast<std::ptrdiff_t>(j));
            else
                --f.prism.partition.parts[j];
            for (const auto& [e, label] : prism.edges)
                if (e.first.coords[j] != i && e.second.coords[j] != i)
                    f.prism.edges.emplace(PrismEdge{rename(e.first), rename(e.second)}, label);
            f.prism.label = recover_tuple(f.prism);
            if (!is_good(f.prism, s))
                throw ContractViolation("face (" + std::to_string(j) + "," + std::to_string(i) + ") of " +
                                        format(prism.label, s) + " is not a good labeling");
            out.push_back(std::move(f));
        }
        start += k;
    }
    return out;
}

std::vector<Element> path_endomorphism(const LabeledPrism& prism, const PrismVertex& u, const PrismVertex& v,
                                       const Shalgebra& s)
{
    const auto& parts = prism.partition.parts;
    if (u.coords.size() != parts.size() || v.coords.size() != parts.size())
        throw InputError("vertex has the wrong number of coordinates");
    for (std::size_t q = 0; q < parts.size(); ++q) {
        if (u.coords[q] > parts[q] || v.coords[q] > parts[q])
            throw InputError("vertex outside the prism");
        if (u.coords[q] > v.coords[q])
            throw InputError("no directed edge path between the vertices");
    }

    std::vector<Element> identity(s.size());
    std::iota(identity.begin(), identity.end(), Element{0});
    std::optional<std::vector<Element>> result;

    auto walk = [&](auto&& self, const PrismVertex& w, const std::vector<Element>& map) -> void {
        if (w == v) {
            if (!result)
                result = map;
            else if (*result != map)
                throw ContractViolation("edge paths from the same source to the same target act differently");
            return;
        }
        for (std::size_t q = 0; q < parts.size(); ++q)
            for (std::size_t p = w.coords[q] + 1; p <= v.coords[q]; ++p) {
                PrismVertex next = w;
                next.coords[q] = p;
                const Element a = prism.edges.at({w, next});
                std::vector<Element> m(map.size());
                for (std::size_t x = 0; x < map.size(); ++x)
                    m[x] = s.act(map[x], a);
                self(self, next, m);
            }
    };
    walk(walk, u, identity);

    const auto& f = *result;
    for (Element x = 0; x < s.size(); ++x)
        for (Element y = 0; y < s.size(); ++y)
            if (f[s.mul(x, y)] != s.mul(f[x], f[y]) || f[s.act(x, y)] != s.act(f[x], f[y]))
                throw ContractViolation("path map is not an endomorphism");
    return f;
}

} // namespace prismhom
