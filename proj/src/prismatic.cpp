#include "prismhom/prismatic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace prismhom {

std::size_t OrderedPartition::total() const
{
    return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

std::vector<OrderedPartition> enumerate_partitions(std::size_t n)
{
    std::vector<OrderedPartition> out;
    if (n == 0)
        return out;
    // Recursive generation by first part yields lexicographic order.
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.push_back({current});
            return;
        }
        for (std::size_t k = 1; k <= remaining; ++k) {
            current.push_back(k);
            self(self, remaining - k);
            current.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

BracketedTuple::BracketedTuple(OrderedPartition p, std::vector<Element> e) : partition(std::move(p)), elements(std::move(e))
{
    if (partition.total() != elements.size())
        throw InputError("partition sums to " + std::to_string(partition.total()) + " but the tuple has " +
                         std::to_string(elements.size()) + " entries");
    for (std::size_t k : partition.parts)
        if (k == 0)
            throw InputError("partition parts must be positive");
}

BracketedTuple BracketedTuple::from_blocks(const std::vector<std::vector<Element>>& blocks)
{
    OrderedPartition p;
    std::vector<Element> e;
    for (const auto& b : blocks) {
        p.parts.push_back(b.size());
        e.insert(e.end(), b.begin(), b.end());
    }
    return BracketedTuple(std::move(p), std::move(e));
}

std::size_t BracketedTuple::block_start(std::size_t j) const
{
    return std::accumulate(partition.parts.begin(), partition.parts.begin() + static_cast<std::ptrdiff_t>(j),
                           std::size_t{0});
}

std::span<const Element> BracketedTuple::block(std::size_t j) const
{
    return std::span<const Element>(elements).subspan(block_start(j), partition.parts[j]);
}

std::string format(const BracketedTuple& g, const Shalgebra& s)
{
    if (g.elements.empty())
        return "()";
    std::string out;
    for (std::size_t j = 0; j < g.block_count(); ++j) {
        if (j)
            out += "|";
        auto b = g.block(j);
        if (b.size() == 1) {
            out += s.name(b[0]);
            continue;
        }
        out += "(";
        for (std::size_t i = 0; i < b.size(); ++i)
            out += (i ? "," : "") + s.name(b[i]);
        out += ")";
    }
    return out;
}

SignedTuple face(const BracketedTuple& g, std::size_t j, std::size_t i, const Shalgebra& s)
{
    if (j >= g.block_count() || i > g.partition.parts[j])
        throw InputError("face index (" + std::to_string(j) + "," + std::to_string(i) + ") out of range");
    const std::size_t start = g.block_start(j);
    const std::size_t k = g.partition.parts[j];

    SignedTuple out;
    out.sign = (start + i) % 2 == 0 ? 1 : -1;
    std::vector<Element> e = g.elements;
    std::vector<std::size_t> parts = g.partition.parts;

    if (i == 0) {
        const Element x = e[start];
        for (std::size_t t = 0; t < start; ++t)
            e[t] = s.act(e[t], x);
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(start));
    } else if (i < k) {
        e[start + i - 1] = s.mul(e[start + i - 1], e[start + i]);
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(start + i));
    } else {
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(start + k - 1));
    }
    if (--parts[j] == 0)
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
    out.tuple.partition.parts = std::move(parts);
    out.tuple.elements = std::move(e);
    return out;
}

std::vector<SignedTuple> all_faces(const BracketedTuple& g, const Shalgebra& s)
{
    std::vector<SignedTuple> out;
    for (std::size_t j = 0; j < g.block_count(); ++j)
        for (std::size_t i = 0; i <= g.partition.parts[j]; ++i)
            out.push_back(face(g, j, i, s));
    return out;
}

std::string_view to_string(CellKind kind)
{
    switch (kind) {
    case CellKind::prism: return "prism";
    case CellKind::B3: return "B3";
    case CellKind::D3: return "D3";
    case CellKind::B4_1: return "B4_1";
    case CellKind::B4_2: return "B4_2";
    case CellKind::B4_3: return "B4_3";
    case CellKind::B4_4: return "B4_4";
    }
    return "?";
}

std::size_t cell_degree(CellKind kind)
{
    switch (kind) {
    case CellKind::B3:
    case CellKind::D3: return 3;
    case CellKind::B4_1:
    case CellKind::B4_2:
    case CellKind::B4_3:
    case CellKind::B4_4: return 4;
    case CellKind::prism: break;
    }
    throw std::logic_error("prism cells have no fixed degree");
}

std::string format(const Cell& c, const Shalgebra& s)
{
    if (c.kind == CellKind::prism)
        return format(c.tuple, s);
    std::string out(to_string(c.kind));
    out += "(";
    for (std::size_t i = 0; i < c.labels.size(); ++i)
        out += (i ? "," : "") + s.name(c.labels[i]);
    return out + ")";
}

void CellChain::add(const Cell& c, std::int64_t coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void CellChain::add(const CellChain& other, std::int64_t coeff)
{
    for (const auto& [c, k] : other.terms_)
        add(c, coeff * k);
}

std::string format(const CellChain& c, const Shalgebra& s)
{
    if (c.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [cell, k] : c.terms()) {
        if (k < 0)
            out << (first ? "-" : " - ");
        else if (!first)
            out << " + ";
        if (k != 1 && k != -1)
            out << (k < 0 ? -k : k) << "*";
        out << format(cell, s);
        first = false;
    }
    return out.str();
}

CellChain boundary_generator(const BracketedTuple& g, const Shalgebra& s)
{
    CellChain out;
    for (auto& f : all_faces(g, s))
        if (f.tuple.degree() > 0)
            out.add(Cell::prism(std::move(f.tuple)), f.sign);
    return out;
}

namespace {

BracketedTuple simplex_tuple(std::vector<Element> e)
{
    OrderedPartition p{{e.size()}};
    return BracketedTuple(std::move(p), std::move(e));
}

BracketedTuple cube_tuple(std::vector<Element> e)
{
    OrderedPartition p{std::vector<std::size_t>(e.size(), 1)};
    return BracketedTuple(std::move(p), std::move(e));
}

} // namespace

CellChain bar_differential(std::span<const Element> g, const Shalgebra& s)
{
    CellChain out;
    const std::size_t n = g.size();
    if (n <= 1)
        return out;
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<Element> e(g.begin(), g.end());
        if (i == 0)
            e.erase(e.begin());
        else if (i == n)
            e.pop_back();
        else {
            e[i - 1] = s.mul(e[i - 1], e[i]);
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
        }
        out.add(Cell::prism(simplex_tuple(std::move(e))), i % 2 == 0 ? 1 : -1);
    }
    return out;
}

CellChain rack_differential(std::span<const Element> g, const Shalgebra& s)
{
    CellChain out;
    const std::size_t n = g.size();
    if (n <= 1)
        return out;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::int64_t sign = i % 2 == 0 ? 1 : -1;
        std::vector<Element> plus(g.begin(), g.end());
        for (std::size_t t = 0; t + 1 < i; ++t)
            plus[t] = s.act(plus[t], g[i - 1]);
        plus.erase(plus.begin() + static_cast<std::ptrdiff_t>(i - 1));
        std::vector<Element> minus(g.begin(), g.end());
        minus.erase(minus.begin() + static_cast<std::ptrdiff_t>(i - 1));
        out.add(Cell::prism(cube_tuple(std::move(plus))), sign);
        out.add(Cell::prism(cube_tuple(std::move(minus))), -sign);
    }
    return out;
}

bool is_degenerate(const BracketedTuple& g, DegeneracyFlavor flavor, const Shalgebra& s)
{
    const auto& parts = g.partition.parts;
    switch (flavor) {
    case DegeneracyFlavor::monoid:
        return s.unit() && std::find(g.elements.begin(), g.elements.end(), *s.unit()) != g.elements.end();
    case DegeneracyFlavor::spindle:
        for (std::size_t t = 0; t + 1 < g.elements.size(); ++t)
            if (g.elements[t] == g.elements[t + 1])
                return true;
        return false;
    case DegeneracyFlavor::adjacent_equal_singletons: {
        std::size_t start = 0;
        for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
            if (parts[j] == 1 && parts[j + 1] == 1 && g.elements[start] == g.elements[start + 1])
                return true;
            start += parts[j];
        }
        return false;
    }
    }
    return false;
}

namespace {

void require_flavor(const Shalgebra& s, DegeneracyFlavor flavor)
{
    if (flavor == DegeneracyFlavor::monoid && !s.unit())
        throw InputError("monoid degeneracies need a unit for the product");
    if (flavor == DegeneracyFlavor::spindle && !s.report().holds(Axiom::I))
        throw InputError("spindle degeneracies need axiom I");
}

std::vector<BracketedTuple> flavor_tuples(const Shalgebra& s, std::size_t n, DegeneracyFlavor flavor)
{
    std::vector<OrderedPartition> partitions;
    if (flavor == DegeneracyFlavor::monoid)
        partitions.push_back({{n}});
    else if (flavor == DegeneracyFlavor::spindle)
        partitions.push_back({std::vector<std::size_t>(n, 1)});
    else
        partitions = enumerate_partitions(n);
    std::vector<BracketedTuple> out;
    std::size_t total = 1;
    for (std::size_t t = 0; t < n; ++t)
        total *= s.size();
    for (const auto& p : partitions)
        for (std::size_t idx = 0; idx < total; ++idx)
            out.emplace_back(p, tuple_from_index(idx, n, s.size()));
    return out;
}

} // namespace

std::vector<std::vector<Cell>> degenerate_span(const Shalgebra& s, std::size_t max_degree, DegeneracyFlavor flavor)
{
    require_flavor(s, flavor);
    std::vector<std::vector<Cell>> out(max_degree + 1);
    for (std::size_t n = 1; n <= max_degree; ++n)
        for (auto& t : flavor_tuples(s, n, flavor))
            if (is_degenerate(t, flavor, s))
                out[n].push_back(Cell::prism(std::move(t)));
    return out;
}

bool degenerate_span_closed(const Shalgebra& s, std::size_t max_degree, DegeneracyFlavor flavor)
{
    const auto span = degenerate_span(s, max_degree, flavor);
    for (std::size_t n = 2; n <= max_degree; ++n)
        for (const auto& c : span[n]) {
            CellChain d = flavor == DegeneracyFlavor::monoid    ? bar_differential(c.tuple.elements, s)
                          : flavor == DegeneracyFlavor::spindle ? rack_differential(c.tuple.elements, s)
                                                                : boundary_generator(c.tuple, s);
            for (const auto& [term, k] : d.terms())
                if (!is_degenerate(term.tuple, flavor, s))
                    return false;
        }
    return true;
}

CellChain extra_cell_boundary(const Cell& cell, const Shalgebra& s, const std::vector<SignResolution>& resolutions)
{
    using B = BracketedTuple;
    const auto& l = cell.labels;
    auto prism = [](std::vector<std::vector<Element>> blocks) { return Cell::prism(B::from_blocks(blocks)); };
    auto b3 = [](Element x, Element y) { return Cell::extra(CellKind::B3, {x, y}); };

    CellChain out;
    switch (cell.kind) {
    case CellKind::prism:
        return boundary_generator(cell.tuple, s);
    case CellKind::B3: {
        const Element a = l.at(0), b = l.at(1);
        out.add(prism({{a}, {b}}), 1);
        out.add(prism({{b, s.act(a, b)}}), 1);
        out.add(prism({{a, b}}), -1);
        return out;
    }
    case CellKind::D3:
        out.add(prism({{l.at(0)}, {l.at(0)}}), 1);
        return out;
    case CellKind::B4_3: {
        const Element a = l.at(0), b = l.at(1), c = l.at(2);
        out.add(prism({{a}, {b}, {c}}), 1);
        out.add(prism({{a}, {c, s.act(b, c)}}), 1);
        out.add(prism({{a}, {b, c}}), -1);
        return out;
    }
    case CellKind::B4_4: {
        const Element a = l.at(0), b = l.at(1), c = l.at(2);
        out.add(prism({{a}, {b}, {c}}), 1);
        out.add(prism({{b, s.act(a, b)}, {c}}), 1);
        out.add(b3(s.act(a, c), s.act(b, c)), -1);
        out.add(prism({{a, b}, {c}}), -1);
        out.add(b3(a, b), 1);
        return out;
    }
    case CellKind::B4_1:
    case CellKind::B4_2: {
        auto it = std::find_if(resolutions.begin(), resolutions.end(), [&](const SignResolution& r) {
            return r.kind == cell.kind && r.status == SignResolution::Status::resolved;
        });
        if (it == resolutions.end())
            throw InputError(std::string(to_string(cell.kind)) + " has no resolved boundary");
        const Element a = l.at(0), b = l.at(1);
        if (cell.kind == CellKind::B4_1)
            out.add(prism({{a, b}, {b}}), 1);
        else
            out.add(prism({{a}, {a, b}}), 1);
        const std::size_t idx = a * s.size() + b;
        for (const auto& t : it->terms)
            out.add(b3(t.first[idx], t.second[idx]), t.sign);
        return out;
    }
    }
    return out;
}

std::string_view to_string(ComplexMode mode)
{
    switch (mode) {
    case ComplexMode::plain: return "plain";
    case ComplexMode::qualgebra: return "qualgebra";
    case ComplexMode::normalized: return "normalized";
    }
    return "?";
}

std::size_t tuple_index(std::span<const Element> g, std::size_t base)
{
    std::size_t idx = 0;
    for (Element x : g)
        idx = idx * base + x;
    return idx;
}

std::vector<Element> tuple_from_index(std::size_t index, std::size_t length, std::size_t base)
{
    std::vector<Element> out(length);
    for (std::size_t t = length; t-- > 0;) {
        out[t] = static_cast<Element>(index % base);
        index /= base;
    }
    return out;
}

namespace {

std::size_t power(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& f)
{
    if (jobs <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::vector<std::jthread> workers;
    const std::size_t chunk = (count + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi)
            break;
        workers.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i)
                f(i);
        });
    }
}

} // namespace

PrismaticComplex::PrismaticComplex(Shalgebra s, std::size_t max_degree, ComplexOptions options)
    : s_(std::move(s)), options_(options)
{
    const bool extended = options_.mode != ComplexMode::plain;
    const bool normalized = options_.mode == ComplexMode::normalized;
    const auto& report = s_.report();
    if (!options_.skip_axiom_gate) {
        std::vector<Axiom> required = {Axiom::H, Axiom::YI, Axiom::IY, Axiom::III};
        if (extended)
            required.assign(all_axioms.begin(), all_axioms.end());
        for (Axiom a : required)
            if (!report.holds(a))
                throw AxiomError(a, report[a].witness);
    }

    if (extended && max_degree >= 4)
        for (CellKind kind : {CellKind::B4_1, CellKind::B4_2}) {
            SignResolution r;
            if (s_.is_group())
                r = resolve_b4_signs(s_, kind);
            else {
                r.kind = kind;
                r.message = "product is not a group; cell omitted";
            }
            if (r.status != SignResolution::Status::resolved)
                warnings_.push_back(std::string(to_string(kind)) + " omitted: " + r.message);
            resolutions_.push_back(std::move(r));
        }

    const std::size_t g = s_.size();
    cells_.resize(max_degree + 1);
    prism_to_basis_.resize(max_degree + 1);
    partition_index_.resize(max_degree + 1);
    std::vector<std::size_t> counts(max_degree + 1, 0);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const auto partitions = enumerate_partitions(n);
        const std::size_t per = power(g, n);
        prism_to_basis_[n].assign(partitions.size() * per, -1);
        for (std::size_t p = 0; p < partitions.size(); ++p) {
            partition_index_[n][partitions[p].parts] = p;
            for (std::size_t t = 0; t < per; ++t) {
                BracketedTuple tuple(partitions[p], tuple_from_index(t, n, g));
                if (normalized && is_degenerate(tuple, DegeneracyFlavor::adjacent_equal_singletons, s_))
                    continue;
                prism_to_basis_[n][p * per + t] = static_cast<std::int64_t>(cells_[n].size());
                cells_[n].push_back(Cell::prism(std::move(tuple)));
            }
        }
        auto add_extra = [&](Cell c) {
            extra_index_[c] = cells_[n].size();
            cells_[n].push_back(std::move(c));
        };
        if (extended && n == 3) {
            for (Element a = 0; a < g; ++a)
                for (Element b = 0; b < g; ++b)
                    add_extra(Cell::extra(CellKind::B3, {a, b}));
            if (options_.include_d3 && !normalized)
                for (Element a = 0; a < g; ++a)
                    add_extra(Cell::extra(CellKind::D3, {a}));
        }
        if (extended && n == 4) {
            for (const auto& r : resolutions_)
                if (r.status == SignResolution::Status::resolved)
                    for (Element a = 0; a < g; ++a)
                        for (Element b = 0; b < g; ++b)
                            add_extra(Cell::extra(r.kind, {a, b}));
            for (CellKind kind : {CellKind::B4_3, CellKind::B4_4})
                for (Element a = 0; a < g; ++a)
                    for (Element b = 0; b < g; ++b)
                        for (Element c = 0; c < g; ++c)
                            add_extra(Cell::extra(kind, {a, b, c}));
        }
        counts[n] = cells_[n].size();
    }

    complex_ = ChainComplex(counts);
    for (std::size_t n = 2; n <= max_degree; ++n) {
        std::vector<Chain> boundaries(counts[n]);
        parallel_for(counts[n], options_.jobs, [&](std::size_t i) {
            boundaries[i] = to_chain(extra_cell_boundary(cells_[n][i], s_, resolutions_), n - 1);
        });
        for (std::size_t i = 0; i < counts[n]; ++i)
            complex_.set_boundary(n, i, boundaries[i]);
    }

    violations_ = verify_d_squared(complex_, 2, max_degree);
    if (!violations_.empty() && !options_.skip_axiom_gate)
        throw ContractViolation("d^2 != 0 at " + describe(violations_.front().generator.degree,
                                                         violations_.front().generator.index));
}

std::optional<std::size_t> PrismaticComplex::full_prism_index(const BracketedTuple& t) const
{
    const std::size_t n = t.degree();
    if (n == 0 || n > max_degree())
        return std::nullopt;
    auto it = partition_index_[n].find(t.partition.parts);
    if (it == partition_index_[n].end())
        return std::nullopt;
    for (Element x : t.elements)
        if (x >= s_.size())
            return std::nullopt;
    return it->second * power(s_.size(), n) + tuple_index(t.elements, s_.size());
}

std::optional<std::size_t> PrismaticComplex::index_of(const Cell& c) const
{
    if (c.kind == CellKind::prism) {
        auto full = full_prism_index(c.tuple);
        if (!full)
            return std::nullopt;
        const auto b = prism_to_basis_[c.tuple.degree()][*full];
        if (b < 0)
            return std::nullopt;
        return static_cast<std::size_t>(b);
    }
    auto it = extra_index_.find(c);
    if (it == extra_index_.end())
        return std::nullopt;
    return it->second;
}

Chain PrismaticComplex::to_chain(const CellChain& c, std::size_t degree) const
{
    Chain out(degree);
    for (const auto& [cell, k] : c.terms()) {
        if (cell.degree() != degree)
            throw InputError("cell " + format(cell, s_) + " does not have degree " + std::to_string(degree));
        if (cell.kind == CellKind::prism) {
            auto full = full_prism_index(cell.tuple);
            if (!full)
                throw InputError("cell " + format(cell, s_) + " is not in the complex");
            const auto b = prism_to_basis_[degree][*full];
            if (b >= 0)
                out.add(static_cast<std::size_t>(b), k);
            continue;
        }
        auto it = extra_index_.find(cell);
        if (it == extra_index_.end())
            throw InputError("cell " + format(cell, s_) + " is not in the complex");
        out.add(it->second, k);
    }
    return out;
}

CellChain PrismaticComplex::to_cells(const Chain& c) const
{
    CellChain out;
    for (const auto& [i, k] : c.terms())
        out.add(cells_.at(c.degree()).at(i), k);
    return out;
}

std::string PrismaticComplex::describe(std::size_t n, std::size_t index) const
{
    return format(cells_.at(n).at(index), s_);
}

HomologyGroup PrismaticComplex::homology(std::size_t n, bool allow_truncation) const
{
    return prismhom::homology(complex_, n, allow_truncation);
}

HomologyGroup prismatic_homology(const Shalgebra& s, std::size_t n)
{
    return PrismaticComplex(s, n + 1).homology(n);
}

HomologyGroup qualgebra_homology(const Shalgebra& s, std::size_t n, bool include_d3)
{
    return PrismaticComplex(s, n + 1, {.mode = ComplexMode::qualgebra, .include_d3 = include_d3}).homology(n);
}

namespace {

template <typename Differential>
ChainComplex tuple_complex(const Shalgebra& s, std::size_t max_degree, Differential d)
{
    std::vector<std::size_t> counts(max_degree + 1, 0);
    for (std::size_t n = 1; n <= max_degree; ++n)
        counts[n] = power(s.size(), n);
    ChainComplex k(counts);
    for (std::size_t n = 2; n <= max_degree; ++n)
        for (std::size_t i = 0; i < counts[n]; ++i) {
            Chain out(n - 1);
            const auto chain = d(tuple_from_index(i, n, s.size()), s);
            for (const auto& [cell, c] : chain.terms())
                out.add(tuple_index(cell.tuple.elements, s.size()), c);
            k.set_boundary(n, i, out);
        }
    return k;
}

} // namespace

ChainComplex bar_complex(const Shalgebra& s, std::size_t max_degree)
{
    return tuple_complex(s, max_degree, [](const std::vector<Element>& g, const Shalgebra& sh) {
        return bar_differential(g, sh);
    });
}

ChainComplex rack_complex(const Shalgebra& s, std::size_t max_degree)
{
    return tuple_complex(s, max_degree, [](const std::vector<Element>& g, const Shalgebra& sh) {
        return rack_differential(g, sh);
    });
}

} // namespace prismhom
