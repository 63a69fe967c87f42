/**
 * The prismatic chain complex of a shalgebra.
 *
 * Generators in degree n are bracketed tuples: an ordered partition
 * (k_1, ..., k_l) of n together with n carrier elements split into blocks
 * of those sizes. Face (j, i) of a generator acts on block j:
 *
 *   i = 0        drop the first entry x of block j and act by x on every
 *                entry of blocks 0..j-1;
 *   0 < i < k_j  multiply entries i and i+1 of block j;
 *   i = k_j      drop the last entry of block j;
 *
 * with sign (-1)^(k_1 + ... + k_{j-1} + i). A block that becomes empty
 * disappears.
 *
 * The qualgebra-extended complex adjoins degeneracy cells in degrees 3
 * and 4; the normalized complex additionally quotients by generators
 * containing two equal adjacent singleton blocks ...|x|x|... .
 */
#ifndef PRISMHOM_PRISMATIC_HPP
#define PRISMHOM_PRISMATIC_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prismhom/algebra.hpp"
#include "prismhom/chains.hpp"

namespace prismhom {

struct OrderedPartition
{
    std::vector<std::size_t> parts;

    std::size_t total() const;
    std::size_t length() const { return parts.size(); }
    auto operator<=>(const OrderedPartition&) const = default;
};

/// All compositions of n in lexicographic order of their parts; empty for n = 0.
std::vector<OrderedPartition> enumerate_partitions(std::size_t n);

struct BracketedTuple
{
    OrderedPartition partition;
    std::vector<Element> elements;

    BracketedTuple() = default;
    BracketedTuple(OrderedPartition p, std::vector<Element> e);
    /// Builds a tuple from its blocks, e.g. {{a, b}, {c}} for (a,b)|c.
    static BracketedTuple from_blocks(const std::vector<std::vector<Element>>& blocks);

    std::size_t degree() const { return elements.size(); }
    std::size_t block_count() const { return partition.length(); }
    std::size_t block_start(std::size_t j) const;
    std::span<const Element> block(std::size_t j) const;

    auto operator<=>(const BracketedTuple&) const = default;
};

/// Renders a tuple as (a,b)|c with single-entry blocks unbracketed.
std::string format(const BracketedTuple& g, const Shalgebra& s);

struct SignedTuple
{
    int sign = 1;
    BracketedTuple tuple;
    auto operator<=>(const SignedTuple&) const = default;
};

/// Face (j, i) with 0-based block index j and 0 <= i <= k_j.
SignedTuple face(const BracketedTuple& g, std::size_t j, std::size_t i, const Shalgebra& s);

/// Every face of g in (j, i) order, without cancellation.
std::vector<SignedTuple> all_faces(const BracketedTuple& g, const Shalgebra& s);

enum class CellKind
{
    prism,
    B3,   // (a|b) + (b, a<b) - (a,b)
    D3,   // (a|a)
    B4_1, // supported on ((a,b)|b) and B3 cells
    B4_2, // supported on (a|(a,b)) and B3 cells
    B4_3, // (a|b|c) + (a|(c, b<c)) - (a|(b,c))
    B4_4  // (a|b|c) + ((b,a<b)|c) - B3(a<c, b<c) - ((a,b)|c) + B3(a,b)
};

std::string_view to_string(CellKind kind);
std::size_t cell_degree(CellKind kind);

/// A generator of a prismatic or extended complex.
struct Cell
{
    CellKind kind = CellKind::prism;
    BracketedTuple tuple;        // prism cells
    std::vector<Element> labels; // extra cells

    static Cell prism(BracketedTuple t) { return {CellKind::prism, std::move(t), {}}; }
    static Cell extra(CellKind k, std::vector<Element> labels) { return {k, {}, std::move(labels)}; }

    std::size_t degree() const { return kind == CellKind::prism ? tuple.degree() : cell_degree(kind); }
    auto operator<=>(const Cell&) const = default;
};

std::string format(const Cell& c, const Shalgebra& s);

/// Symbolic chain: integer combination of cells of one degree.
class CellChain
{
public:
    void add(const Cell& c, std::int64_t coeff);
    void add(const CellChain& other, std::int64_t coeff = 1);
    const std::map<Cell, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const CellChain&) const = default;

private:
    std::map<Cell, std::int64_t> terms_;
};

std::string format(const CellChain& c, const Shalgebra& s);

/// Signed sum of all faces with like terms combined.
CellChain boundary_generator(const BracketedTuple& g, const Shalgebra& s);

/// Semigroup differential sum_i (-1)^i d_i on G^n, as tuples of partition (n).
CellChain bar_differential(std::span<const Element> g, const Shalgebra& s);

/// Rack differential sum_i (-1)^i (d_i^+ - d_i^-), i = 1..n, as tuples of
/// partition (1, ..., 1).
CellChain rack_differential(std::span<const Element> g, const Shalgebra& s);

enum class DegeneracyFlavor
{
    monoid,                    // tuples of partition (n) containing the unit
    spindle,                   // tuples of partition (1,...,1) with equal neighbours
    adjacent_equal_singletons  // bracketed tuples with a pattern ...|x|x|...
};

bool is_degenerate(const BracketedTuple& g, DegeneracyFlavor flavor, const Shalgebra& s);

/// Spanning generators of the degenerate submodule in degrees 1..max_degree
/// (index 0 of the result is degree 0 and always empty). Throws InputError if
/// the flavor's requirement (unit, axiom I) is missing.
std::vector<std::vector<Cell>> degenerate_span(const Shalgebra& s, std::size_t max_degree, DegeneracyFlavor flavor);

/// Whether the degenerate generators are closed under the matching
/// differential (bar, rack or prismatic) through max_degree.
bool degenerate_span_closed(const Shalgebra& s, std::size_t max_degree, DegeneracyFlavor flavor);

/// One signed B3 term of a resolved B4_1 / B4_2 boundary; labels are group words in a, b.
struct B3Term
{
    int sign = 1;
    std::string first_word;
    std::string second_word;
    std::vector<Element> first;  // word evaluated at (a, b), index a * |G| + b
    std::vector<Element> second;
};

struct SignResolution
{
    enum class Status
    {
        resolved,
        no_solution,
        ambiguous,
        not_applicable
    };

    CellKind kind = CellKind::B4_1;
    Status status = Status::not_applicable;
    std::vector<B3Term> terms; // valid when resolved
    std::size_t solutions = 0;
    std::string message;
};

/**
 * Searches signs and B3 labels (group words of length <= 3 in a, b and
 * their inverses) that turn the listed cells of B4_1 or B4_2 into a cycle.
 * The prism cell's coefficient is fixed to +1, so a valid answer must be
 * unique outright.
 */
SignResolution resolve_b4_signs(const Shalgebra& s, CellKind kind);

enum class ComplexMode
{
    plain,
    qualgebra,
    normalized // normalized qualgebra-extended
};

std::string_view to_string(ComplexMode mode);

struct ComplexOptions
{
    ComplexMode mode = ComplexMode::plain;
    /// Adjoin D3(a) with boundary (a|a) in qualgebra mode. Unused in
    /// normalized mode, where (a|a) is already zero.
    bool include_d3 = true;
    /// Build even if the structure fails the axioms (fault injection).
    bool skip_axiom_gate = false;
    unsigned jobs = 1;
};

/// Boundary of an extra cell in terms of prism and B3 cells.
CellChain extra_cell_boundary(const Cell& cell, const Shalgebra& s,
                              const std::vector<SignResolution>& resolutions = {});

class PrismaticComplex
{
public:
    PrismaticComplex(Shalgebra s, std::size_t max_degree, ComplexOptions options = {});

    const Shalgebra& algebra() const { return s_; }
    const ComplexOptions& options() const { return options_; }
    std::size_t max_degree() const { return complex_.max_degree(); }
    const ChainComplex& chains() const { return complex_; }

    const std::vector<Cell>& generators(std::size_t n) const { return cells_[n]; }
    const Cell& generator(std::size_t n, std::size_t index) const { return cells_[n][index]; }
    /// Index of a cell in the basis; nullopt when absent or quotiented out.
    std::optional<std::size_t> index_of(const Cell& c) const;

    /// Throws InputError for cells that do not exist in this complex;
    /// degenerate cells of the normalized complex map to zero.
    Chain to_chain(const CellChain& c, std::size_t degree) const;
    CellChain to_cells(const Chain& c) const;
    std::string describe(std::size_t n, std::size_t index) const;

    const std::vector<SignResolution>& resolutions() const { return resolutions_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    /// Result of the d^2 = 0 check run at construction.
    const std::vector<SquareViolation>& square_violations() const { return violations_; }

    HomologyGroup homology(std::size_t n, bool allow_truncation = false) const;

private:
    std::optional<std::size_t> full_prism_index(const BracketedTuple& t) const;

    Shalgebra s_;
    ComplexOptions options_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::vector<std::int64_t>> prism_to_basis_; // full prism index -> basis index or -1
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> partition_index_;
    std::map<Cell, std::size_t> extra_index_;
    ChainComplex complex_;
    std::vector<SignResolution> resolutions_;
    std::vector<std::string> warnings_;
    std::vector<SquareViolation> violations_;
};

HomologyGroup prismatic_homology(const Shalgebra& s, std::size_t n);
HomologyGroup qualgebra_homology(const Shalgebra& s, std::size_t n, bool include_d3 = true);

/// Bar complex of (G, .) and rack complex of (G, <) on G^n, n = 1..max_degree.
ChainComplex bar_complex(const Shalgebra& s, std::size_t max_degree);
ChainComplex rack_complex(const Shalgebra& s, std::size_t max_degree);

/// Mixed-radix index of a tuple (first entry most significant).
std::size_t tuple_index(std::span<const Element> g, std::size_t base);
std::vector<Element> tuple_from_index(std::size_t index, std::size_t length, std::size_t base);

} // namespace prismhom

#endif
