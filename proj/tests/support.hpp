#ifndef PRISMHOM_TESTS_SUPPORT_HPP
#define PRISMHOM_TESTS_SUPPORT_HPP

#include <filesystem>
#include <string>

#include "prismhom/io.hpp"

namespace testing {

inline std::filesystem::path fixture(const std::string& relative)
{
    return std::filesystem::path(FIXTURE_DIR) / relative;
}

inline prismhom::Shalgebra load_structure(const std::string& name)
{
    auto data = prismhom::parse_structure(prismhom::read_json(fixture("structures/" + name + ".json")));
    return prismhom::Shalgebra(std::move(data.dot), std::move(data.tri), std::move(data.names));
}

inline prismhom::KTGDiagram load_diagram(const std::string& name)
{
    return prismhom::parse_diagram(prismhom::read_json(fixture("diagrams/" + name + ".json")));
}

/// Boundary of a chain of prism and extra cells, expressed again in cells.
inline prismhom::CellChain cell_boundary(const prismhom::CellChain& c, const prismhom::Shalgebra& s)
{
    prismhom::CellChain out;
    for (const auto& [cell, k] : c.terms())
        out.add(prismhom::extra_cell_boundary(cell, s), k);
    return out;
}

/// Every assignment of colors to arcs, filtered by the coloring rules
/// restated directly on the crossing and vertex lists.
inline std::vector<prismhom::Coloring> brute_force_colorings(const prismhom::KTGDiagram& d,
                                                             const prismhom::Shalgebra& s)
{
    const std::size_t n = d.arcs.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= s.size();
    std::vector<prismhom::Coloring> out;
    for (std::size_t t = 0; t < total; ++t) {
        prismhom::Coloring c{prismhom::tuple_from_index(t, n, s.size())};
        auto col = [&](prismhom::ArcId a) { return c.colors[d.arc_index(a)]; };
        bool ok = true;
        for (const auto& x : d.crossings)
            ok = ok && (x.sign > 0 ? col(x.under_out) == s.act(col(x.under_in), col(x.over))
                                   : s.act(col(x.under_out), col(x.over)) == col(x.under_in));
        for (const auto& v : d.vertices)
            ok = ok && col(v.arcs[2]) == s.mul(col(v.arcs[0]), col(v.arcs[1]));
        if (ok)
            out.push_back(std::move(c));
    }
    return out;
}

} // namespace testing

#endif
