#include "prismhom/reference_formulas.hpp"

namespace prismhom {

namespace {

using Blocks = std::vector<std::vector<Element>>;

class Terms
{
public:
    Terms& operator()(int sign, const Blocks& blocks)
    {
        out.push_back({sign, BracketedTuple::from_blocks(blocks)});
        return *this;
    }
    std::vector<SignedTuple> out;
};

} // namespace

std::optional<std::vector<SignedTuple>> reference_boundary(const BracketedTuple& g, const Shalgebra& s)
{
    const auto& p = g.partition.parts;
    const auto& e = g.elements;
    auto m = [&](Element x, Element y) { return s.mul(x, y); };
    auto t = [&](Element x, Element y) { return s.act(x, y); };
    Terms r;

    if (p == std::vector<std::size_t>{2}) {
        const Element a = e[0], b = e[1];
        r(1, {{b}})(-1, {{m(a, b)}})(1, {{a}});
    } else if (p == std::vector<std::size_t>{1, 1}) {
        const Element a = e[0], b = e[1];
        r(1, {{b}})(-1, {{b}})(-1, {{t(a, b)}})(1, {{a}});
    } else if (p == std::vector<std::size_t>{3}) {
        const Element a = e[0], b = e[1], c = e[2];
        r(1, {{b, c}})(-1, {{m(a, b), c}})(1, {{a, m(b, c)}})(-1, {{a, b}});
    } else if (p == std::vector<std::size_t>{2, 1}) {
        const Element a = e[0], b = e[1], c = e[2];
        r(1, {{b}, {c}})(-1, {{m(a, b)}, {c}})(1, {{a}, {c}})(1, {{t(a, c), t(b, c)}})(-1, {{a, b}});
    } else if (p == std::vector<std::size_t>{1, 2}) {
        const Element a = e[0], b = e[1], c = e[2];
        r(1, {{b, c}})(-1, {{b, c}})(-1, {{t(a, b)}, {c}})(1, {{a}, {m(b, c)}})(-1, {{a}, {b}});
    } else if (p == std::vector<std::size_t>{1, 1, 1}) {
        const Element a = e[0], b = e[1], c = e[2];
        r(1, {{b}, {c}})(-1, {{b}, {c}})(-1, {{t(a, b)}, {c}})(1, {{a}, {c}})(1, {{t(a, c)}, {t(b, c)}})(-1, {{a}, {b}});
    } else if (p == std::vector<std::size_t>{4}) {
        const Element a = e[0], b = e[1], c = e[2], d = e[3];
        r(1, {{b, c, d}})(-1, {{m(a, b), c, d}})(1, {{a, m(b, c), d}})(-1, {{a, b, m(c, d)}})(1, {{a, b, c}});
    } else if (p == std::vector<std::size_t>{3, 1}) {
        const Element a = e[0], b = e[1], c = e[2], d = e[3];
        r(1, {{b, c}, {d}})(-1, {{m(a, b), c}, {d}})(1, {{a, m(b, c)}, {d}})(-1, {{a, b}, {d}});
        r(-1, {{t(a, d), t(b, d), t(c, d)}})(1, {{a, b, c}});
    } else if (p == std::vector<std::size_t>{2, 2}) {
        const Element a = e[0], b = e[1], c = e[2], d = e[3];
        r(1, {{b}, {c, d}})(-1, {{m(a, b)}, {c, d}})(1, {{a}, {c, d}});
        r(1, {{t(a, c), t(b, c)}, {d}})(-1, {{a, b}, {m(c, d)}})(1, {{a, b}, {c}});
    } else if (p == std::vector<std::size_t>{2, 1, 1}) {
        const Element a = e[0], b = e[1], c = e[2], d = e[3];
        r(1, {{b}, {c}, {d}})(-1, {{m(a, b)}, {c}, {d}})(1, {{a}, {c}, {d}})(1, {{t(a, c), t(b, c)}, {d}})(-1, {{a, b}, {d}});
        r(-1, {{t(a, d), t(b, d)}, {t(c, d)}})(1, {{a, b}, {c}});
    } else if (p == std::vector<std::size_t>{1, 3}) {
        const Element a = e[0], b = e[1], c = e[2], d = e[3];
        r(1, {{b, c, d}})(-1, {{b, c, d}});
        r(-1, {{t(a, b)}, {c, d}})(1, {{a}, {m(b, c), d}})(-1, {{a}, {b, m(c, d)}})(1, {{a}, {b, c}});
    } else if (p == std::vector<std::size_t>{1, 2, 1}) {
        const Element a = e[0], b = e[1], c = e[2], d = e[3];
        r(1, {{b, c}, {d}})(-1, {{b, c}, {d}})(-1, {{t(a, b)}, {c}, {d}})(1, {{a}, {m(b, c)}, {d}})(-1, {{a}, {b}, {d}});
        r(-1, {{t(a, d)}, {t(b, d), t(c, d)}})(1, {{a}, {b, c}});
    } else if (p == std::vector<std::size_t>{1, 1, 2}) {
        const Element a = e[0], b = e[1], c = e[2], d = e[3];
        r(1, {{b}, {c, d}})(-1, {{b}, {c, d}})(-1, {{t(a, b)}, {c, d}})(1, {{a}, {c, d}});
        r(1, {{t(a, c)}, {t(b, c)}, {d}})(-1, {{a}, {b}, {m(c, d)}})(1, {{a}, {b}, {c}});
    } else if (p == std::vector<std::size_t>{1, 1, 1, 1}) {
        const Element a = e[0], b = e[1], c = e[2], d = e[3];
        r(1, {{b}, {c}, {d}})(-1, {{b}, {c}, {d}})(-1, {{t(a, b)}, {c}, {d}})(1, {{a}, {c}, {d}});
        r(1, {{t(a, c)}, {t(b, c)}, {d}})(-1, {{a}, {b}, {d}})(-1, {{t(a, d)}, {t(b, d)}, {t(c, d)}})(1, {{a}, {b}, {c}});
    } else {
        return std::nullopt;
    }
    return std::move(r.out);
}

std::optional<CellChain> reference_boundary_chain(const BracketedTuple& g, const Shalgebra& s)
{
    auto terms = reference_boundary(g, s);
    if (!terms)
        return std::nullopt;
    CellChain out;
    for (auto& t : *terms)
        out.add(Cell::prism(std::move(t.tuple)), t.sign);
    return out;
}

} // namespace prismhom
