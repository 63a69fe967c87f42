#include "prismhom/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prismhom {

OperationTable::OperationTable(std::size_t size, std::vector<Element> entries)
    : size_(size), entries_(std::move(entries))
{
    if (size_ == 0)
        throw InputError("operation table must have positive size");
    if (entries_.size() != size_ * size_)
        throw InputError("operation table of size " + std::to_string(size_) + " needs " +
                         std::to_string(size_ * size_) + " entries, got " + std::to_string(entries_.size()));
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] >= size_)
            throw InputError("operation table entry [" + std::to_string(k / size_) + "][" +
                             std::to_string(k % size_) + "] = " + std::to_string(entries_[k]) +
                             " is out of range");
}

void OperationTable::set(Element i, Element j, Element value)
{
    if (i >= size_ || j >= size_ || value >= size_)
        throw InputError("table index out of range");
    entries_[i * size_ + j] = value;
}

std::string_view axiom_name(Axiom axiom)
{
    switch (axiom) {
    case Axiom::H: return "H";
    case Axiom::YI: return "YI";
    case Axiom::IY: return "IY";
    case Axiom::III: return "III";
    case Axiom::II: return "II";
    case Axiom::I: return "I";
    case Axiom::T: return "T";
    }
    return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name)
{
    for (Axiom a : all_axioms)
        if (axiom_name(a) == name)
            return a;
    return std::nullopt;
}

bool AxiomReport::is_shalgebra() const
{
    return holds(Axiom::H) && holds(Axiom::YI) && holds(Axiom::IY) && holds(Axiom::III);
}

bool AxiomReport::is_qualgebra() const
{
    return std::all_of(all_axioms.begin(), all_axioms.end(), [this](Axiom a) { return holds(a); });
}

namespace {

// First (a, b, c) in lexicographic order with lhs != rhs.
template <typename Lhs, typename Rhs>
AxiomStatus check_ternary(std::size_t n, Lhs lhs, Rhs rhs)
{
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (lhs(a, b, c) != rhs(a, b, c))
                    return {false, {a, b, c}};
    return {};
}

AxiomStatus check_right_invertibility(const OperationTable& tri)
{
    const std::size_t n = tri.size();
    for (Element b = 0; b < n; ++b) {
        std::vector<int> hits(n, 0);
        for (Element x = 0; x < n; ++x)
            ++hits[tri(x, b)];
        for (Element a = 0; a < n; ++a)
            if (hits[a] != 1)
                return {false, {a, b}};
    }
    return {};
}

} // namespace

AxiomReport check_axioms(const OperationTable& dot, const OperationTable& tri)
{
    if (dot.size() != tri.size())
        throw InputError("operation tables differ in size (" + std::to_string(dot.size()) + " vs " +
                         std::to_string(tri.size()) + ")");
    const std::size_t n = dot.size();
    AxiomReport report;

    report[Axiom::H] = check_ternary(
        n, [&](Element a, Element b, Element c) { return dot(dot(a, b), c); },
        [&](Element a, Element b, Element c) { return dot(a, dot(b, c)); });
    report[Axiom::YI] = check_ternary(
        n, [&](Element a, Element b, Element c) { return tri(dot(a, b), c); },
        [&](Element a, Element b, Element c) { return dot(tri(a, c), tri(b, c)); });
    report[Axiom::IY] = check_ternary(
        n, [&](Element a, Element b, Element c) { return tri(tri(a, b), c); },
        [&](Element a, Element b, Element c) { return tri(a, dot(b, c)); });
    report[Axiom::III] = check_ternary(
        n, [&](Element a, Element b, Element c) { return tri(tri(a, b), c); },
        [&](Element a, Element b, Element c) { return tri(tri(a, c), tri(b, c)); });
    report[Axiom::II] = check_right_invertibility(tri);

    for (Element a = 0; a < n; ++a)
        if (tri(a, a) != a) {
            report[Axiom::I] = {false, {a}};
            break;
        }

    for (Element a = 0; a < n && report.holds(Axiom::T); ++a)
        for (Element b = 0; b < n; ++b)
            if (dot(a, b) != dot(b, tri(a, b))) {
                report[Axiom::T] = {false, {a, b}};
                break;
            }
    return report;
}

namespace {

std::string witness_text(Axiom axiom, const std::vector<Element>& w)
{
    std::ostringstream out;
    out << "axiom " << axiom_name(axiom) << " fails at (";
    for (std::size_t i = 0; i < w.size(); ++i)
        out << (i ? "," : "") << w[i];
    out << ")";
    return out.str();
}

std::optional<Element> find_unit(const OperationTable& dot)
{
    for (Element e = 0; e < dot.size(); ++e) {
        bool ok = true;
        for (Element x = 0; x < dot.size() && ok; ++x)
            ok = dot(e, x) == x && dot(x, e) == x;
        if (ok)
            return e;
    }
    return std::nullopt;
}

} // namespace

AxiomError::AxiomError(Axiom axiom, std::vector<Element> witness)
    : InputError(witness_text(axiom, witness)), axiom_(axiom), witness_(std::move(witness))
{
}

Shalgebra::Shalgebra(OperationTable dot, OperationTable tri, std::vector<std::string> names)
    : Shalgebra(std::move(dot), std::move(tri), std::move(names), true)
{
}

Shalgebra Shalgebra::unchecked(OperationTable dot, OperationTable tri, std::vector<std::string> names)
{
    return Shalgebra(std::move(dot), std::move(tri), std::move(names), false);
}

Shalgebra::Shalgebra(OperationTable dot, OperationTable tri, std::vector<std::string> names, bool checked)
    : dot_(std::move(dot)), tri_(std::move(tri)), names_(std::move(names))
{
    report_ = check_axioms(dot_, tri_);
    if (!names_.empty() && names_.size() != dot_.size())
        throw InputError("expected " + std::to_string(dot_.size()) + " names, got " + std::to_string(names_.size()));
    if (checked)
        for (Axiom a : {Axiom::H, Axiom::YI, Axiom::IY, Axiom::III})
            if (!report_.holds(a))
                throw AxiomError(a, report_[a].witness);

    unit_ = find_unit(dot_);
    if (!group_law_failure(dot_)) {
        std::vector<Element> inv(size());
        for (Element a = 0; a < size(); ++a)
            for (Element b = 0; b < size(); ++b)
                if (dot_(a, b) == *unit_)
                    inv[a] = b;
        inverse_ = std::move(inv);
    }
    if (report_.holds(Axiom::II)) {
        act_inverse_.resize(size() * size());
        for (Element x = 0; x < size(); ++x)
            for (Element b = 0; b < size(); ++b)
                act_inverse_[tri_(x, b) * size() + b] = x;
    }
}

Element Shalgebra::act_inverse(Element a, Element b) const
{
    if (act_inverse_.empty())
        throw InputError("right action is not invertible (axiom II fails)");
    return act_inverse_[a * size() + b];
}

std::optional<Element> Shalgebra::product(std::span<const Element> g) const
{
    if (g.empty())
        return std::nullopt;
    Element acc = g.front();
    for (std::size_t i = 1; i < g.size(); ++i)
        acc = mul(acc, g[i]);
    return acc;
}

std::string Shalgebra::name(Element a) const
{
    return names_.empty() ? std::to_string(a) : names_[a];
}

std::string_view to_string(ActionClass c)
{
    switch (c) {
    case ActionClass::none: return "none";
    case ActionClass::shelf: return "shelf";
    case ActionClass::spindle: return "spindle";
    case ActionClass::rack: return "rack";
    case ActionClass::quandle: return "quandle";
    }
    return "?";
}

std::string_view to_string(PairClass c)
{
    switch (c) {
    case PairClass::none: return "none";
    case PairClass::shalgebra: return "shalgebra";
    case PairClass::qualgebra: return "qualgebra";
    }
    return "?";
}

StructureClass classify(const OperationTable& dot, const OperationTable& tri)
{
    const AxiomReport r = check_axioms(dot, tri);
    StructureClass out;
    if (r.holds(Axiom::III)) {
        const bool idem = r.holds(Axiom::I);
        const bool inv = r.holds(Axiom::II);
        out.action = idem && inv ? ActionClass::quandle
                     : inv       ? ActionClass::rack
                     : idem      ? ActionClass::spindle
                                 : ActionClass::shelf;
    }
    if (r.is_qualgebra())
        out.pair = PairClass::qualgebra;
    else if (r.is_shalgebra())
        out.pair = PairClass::shalgebra;
    out.group = !group_law_failure(dot).has_value();
    return out;
}

std::optional<std::string> group_law_failure(const OperationTable& dot)
{
    const std::size_t n = dot.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (dot(dot(a, b), c) != dot(a, dot(b, c)))
                    return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")";
    const auto e = find_unit(dot);
    if (!e)
        return std::string("no two-sided identity");
    for (Element a = 0; a < n; ++a) {
        bool found = false;
        for (Element b = 0; b < n && !found; ++b)
            found = dot(a, b) == *e && dot(b, a) == *e;
        if (!found)
            return "element " + std::to_string(a) + " has no inverse";
    }
    return std::nullopt;
}

Shalgebra conjugation_qualgebra(const OperationTable& group_dot, std::vector<std::string> names)
{
    if (auto failure = group_law_failure(group_dot))
        throw InputError("not a group: " + *failure);
    const std::size_t n = group_dot.size();
    const Element e = *find_unit(group_dot);
    std::vector<Element> inv(n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (group_dot(a, b) == e)
                inv[a] = b;
    auto tri = OperationTable::from_function(
        n, [&](Element a, Element b) { return group_dot(group_dot(inv[b], a), b); });
    return Shalgebra(group_dot, std::move(tri), std::move(names));
}

std::vector<Element> diagonal_action(std::span<const Element> tuple, Element h, const Shalgebra& s)
{
    std::vector<Element> out(tuple.size());
    std::transform(tuple.begin(), tuple.end(), out.begin(), [&](Element g) { return s.act(g, h); });
    return out;
}

bool axiom_dependency_check(const Shalgebra& s)
{
    for (Axiom a : {Axiom::IY, Axiom::T})
        if (!s.report().holds(a))
            throw InputError("precondition violated: " + std::string(axiom_name(a)) + " does not hold");
    return s.report().holds(Axiom::III);
}

namespace examples {

OperationTable cyclic_group(std::size_t n)
{
    return OperationTable::from_function(n, [n](Element a, Element b) { return (a + b) % n; });
}

namespace {

std::vector<std::vector<int>> permutations(std::size_t n)
{
    if (n == 0 || n > 5)
        throw InputError("symmetric group supported for 1 <= n <= 5");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

OperationTable symmetric_group(std::size_t n)
{
    const auto perms = permutations(n);
    return OperationTable::from_function(perms.size(), [&](Element a, Element b) {
        std::vector<int> r(n);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = perms[b][perms[a][i]];
        return static_cast<Element>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    });
}

std::vector<std::string> symmetric_group_names(std::size_t n)
{
    std::vector<std::string> names;
    for (const auto& p : permutations(n)) {
        std::string s;
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i] || p[i] == static_cast<int>(i))
                continue;
            s += "(";
            for (std::size_t j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                s += std::to_string(j + 1);
            }
            s += ")";
        }
        names.push_back(s.empty() ? "e" : s);
    }
    return names;
}

Shalgebra trivial()
{
    return Shalgebra(OperationTable(1, {0}), OperationTable(1, {0}), {"e"});
}

Shalgebra conj_cyclic(std::size_t n)
{
    return conjugation_qualgebra(cyclic_group(n));
}

Shalgebra conj_symmetric3()
{
    return conjugation_qualgebra(symmetric_group(3), symmetric_group_names(3));
}

Shalgebra projection_max(std::size_t n)
{
    return Shalgebra(OperationTable::from_function(n, [](Element a, Element b) { return std::max(a, b); }),
                     OperationTable::from_function(n, [](Element a, Element) { return a; }));
}

} // namespace examples

} // namespace prismhom
