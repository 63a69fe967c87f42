/**
 * Finite sets with two binary operations (a product and a right action),
 * the seven compatibility axioms between them, and standard examples.
 *
 * Carrier elements are dense indices 0..size-1; human-readable names live
 * in an optional side table.
 */
#ifndef PRISMHOM_ALGEBRA_HPP
#define PRISMHOM_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prismhom {

using Element = std::uint32_t;

/// Raised for malformed or inconsistent user input.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a mathematical guarantee fails to hold on actual data.
class ContractViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Square table of a total binary operation on {0, ..., size-1}.
class OperationTable
{
public:
    OperationTable() = default;
    OperationTable(std::size_t size, std::vector<Element> entries);

    /// Builds a table from f(i, j) for all pairs.
    template <typename F>
    static OperationTable from_function(std::size_t size, F&& f)
    {
        std::vector<Element> entries(size * size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                entries[i * size + j] = static_cast<Element>(f(static_cast<Element>(i), static_cast<Element>(j)));
        return OperationTable(size, std::move(entries));
    }

    std::size_t size() const { return size_; }
    Element operator()(Element i, Element j) const { return entries_[i * size_ + j]; }
    const std::vector<Element>& entries() const { return entries_; }

    /// Overwrites one entry without any validation beyond range (fault injection).
    void set(Element i, Element j, Element value);

    bool operator==(const OperationTable&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<Element> entries_;
};

enum class Axiom
{
    H,   // (ab)c = a(bc)
    YI,  // (ab)<c = (a<c)(b<c)
    IY,  // (a<b)<c = a<(bc)
    III, // (a<b)<c = (a<c)<(b<c)
    II,  // x -> x<b is a bijection
    I,   // a<a = a
    T    // ab = b(a<b)
};

inline constexpr std::array<Axiom, 7> all_axioms = {Axiom::H,  Axiom::YI, Axiom::IY, Axiom::III,
                                                    Axiom::II, Axiom::I,  Axiom::T};

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> axiom_from_name(std::string_view name);

struct AxiomStatus
{
    bool holds = true;
    /// Lexicographically minimal violating tuple; empty when the axiom holds.
    std::vector<Element> witness;
};

class AxiomReport
{
public:
    const AxiomStatus& operator[](Axiom axiom) const { return status_[static_cast<int>(axiom)]; }
    AxiomStatus& operator[](Axiom axiom) { return status_[static_cast<int>(axiom)]; }

    bool holds(Axiom axiom) const { return (*this)[axiom].holds; }
    bool is_shalgebra() const;
    bool is_qualgebra() const;

private:
    std::array<AxiomStatus, 7> status_;
};

/// Exhaustive check of all seven axioms. Throws InputError on a size mismatch.
AxiomReport check_axioms(const OperationTable& dot, const OperationTable& tri);

/// Thrown when a structure fails an axiom it is required to satisfy.
class AxiomError : public InputError
{
public:
    AxiomError(Axiom axiom, std::vector<Element> witness);

    Axiom axiom() const { return axiom_; }
    const std::vector<Element>& witness() const { return witness_; }

private:
    Axiom axiom_;
    std::vector<Element> witness_;
};

/**
 * A shalgebra: axioms H, YI, IY, III hold (checked at construction). The
 * remaining axioms are evaluated once and cached in the report.
 */
class Shalgebra
{
public:
    Shalgebra(OperationTable dot, OperationTable tri, std::vector<std::string> names = {});

    /// Skips the axiom gate. Intended for fault-injection tests only.
    static Shalgebra unchecked(OperationTable dot, OperationTable tri, std::vector<std::string> names = {});

    std::size_t size() const { return dot_.size(); }
    Element mul(Element a, Element b) const { return dot_(a, b); }
    Element act(Element a, Element b) const { return tri_(a, b); }

    const OperationTable& dot() const { return dot_; }
    const OperationTable& tri() const { return tri_; }
    const AxiomReport& report() const { return report_; }
    const std::optional<Element>& unit() const { return unit_; }

    bool is_qualgebra() const { return report_.is_qualgebra(); }
    /// True when (G, .) is a group.
    bool is_group() const { return inverse_.has_value(); }
    /// Group inverse; only valid when is_group().
    Element inverse(Element a) const { return (*inverse_)[a]; }

    /// Unique c with c < b == a. Requires axiom II.
    Element act_inverse(Element a, Element b) const;

    /// Product g[0] * g[1] * ... ; nullopt for an empty range.
    std::optional<Element> product(std::span<const Element> g) const;

    std::string name(Element a) const;
    const std::vector<std::string>& names() const { return names_; }

private:
    Shalgebra(OperationTable dot, OperationTable tri, std::vector<std::string> names, bool checked);

    OperationTable dot_;
    OperationTable tri_;
    std::vector<std::string> names_;
    AxiomReport report_;
    std::optional<Element> unit_;
    std::optional<std::vector<Element>> inverse_;
    std::vector<Element> act_inverse_; // valid when II holds
};

enum class ActionClass
{
    none,
    shelf,
    spindle,
    rack,
    quandle
};

enum class PairClass
{
    none,
    shalgebra,
    qualgebra
};

struct StructureClass
{
    ActionClass action = ActionClass::none;
    PairClass pair = PairClass::none;
    bool group = false;
};

std::string_view to_string(ActionClass c);
std::string_view to_string(PairClass c);

StructureClass classify(const OperationTable& dot, const OperationTable& tri);

/// Checks associativity, a two-sided unit and inverses. Returns a description
/// of the first failed group law, or nullopt for a group.
std::optional<std::string> group_law_failure(const OperationTable& dot);

/// Group acting on itself by conjugation a < b = b^{-1} a b.
Shalgebra conjugation_qualgebra(const OperationTable& group_dot, std::vector<std::string> names = {});

/// Componentwise right action of h on a tuple.
std::vector<Element> diagonal_action(std::span<const Element> tuple, Element h, const Shalgebra& s);

/**
 * Returns whether III holds on a structure where IY and T hold (III is
 * implied by them). Throws InputError if IY or T fail.
 */
bool axiom_dependency_check(const Shalgebra& s);

namespace examples {

OperationTable cyclic_group(std::size_t n);
/// Symmetric group on n letters (n <= 5); elements in lexicographic order of
/// their one-line notation, product (p*q)(i) = q(p(i)).
OperationTable symmetric_group(std::size_t n);
std::vector<std::string> symmetric_group_names(std::size_t n);

Shalgebra trivial();
Shalgebra conj_cyclic(std::size_t n);
Shalgebra conj_symmetric3();
/// a < b = a with the max semilattice as product: a non-group shalgebra.
Shalgebra projection_max(std::size_t n);

} // namespace examples

} // namespace prismhom

#endif
