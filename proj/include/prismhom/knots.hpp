/**
 * Combinatorial diagrams of knotted trivalent graphs, their colorings by a
 * qualgebra, and the homology classes the colored diagrams represent.
 *
 * Arcs are oriented. A crossing has an over-arc and an under-strand that
 * enters on under_in and leaves on under_out. A vertex lists its arcs as
 * [left, right, merged]: for a zip the two strands enter and merge into the
 * outgoing merged arc, for an unzip the merged arc enters and splits. The
 * coloring rules are
 *
 *   positive crossing   under_out = under_in < over
 *   negative crossing   under_out < over = under_in
 *   vertex              merged = left * right
 *
 * and the represented chain is the sum of +(in|over) over positive
 * crossings, -(out|over) over negative ones, +(left,right) over zips and
 * -(left,right) over unzips.
 */
#ifndef PRISMHOM_KNOTS_HPP
#define PRISMHOM_KNOTS_HPP

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "prismhom/prismatic.hpp"

namespace prismhom {

using ArcId = std::int64_t;

struct Crossing
{
    ArcId over = 0;
    ArcId under_in = 0;
    ArcId under_out = 0;
    int sign = 1;
    auto operator<=>(const Crossing&) const = default;
};

enum class VertexRole
{
    zip,
    unzip
};

std::string_view to_string(VertexRole role);

struct Vertex
{
    std::array<ArcId, 3> arcs{}; // left, right, merged
    VertexRole role = VertexRole::zip;
    int sign = 1;                // +1 for zip, -1 for unzip
    auto operator<=>(const Vertex&) const = default;
};

struct KTGDiagram
{
    std::vector<ArcId> arcs;
    std::vector<Crossing> crossings;
    std::vector<Vertex> vertices;

    std::size_t arc_index(ArcId id) const; // throws InputError if absent
    ArcId next_arc_id() const;
};

/// Throws InputError naming the offending arc, crossing or vertex.
void validate(const KTGDiagram& d);

/// Same arcs, crossings and vertices up to reordering of the lists.
bool equivalent(const KTGDiagram& a, const KTGDiagram& b);
KTGDiagram sorted(KTGDiagram d);

/// Colors in the order of KTGDiagram::arcs.
struct Coloring
{
    std::vector<Element> colors;
    auto operator<=>(const Coloring&) const = default;
};

bool is_coloring(const KTGDiagram& d, const Coloring& c, const Shalgebra& s);

/// All colorings in lexicographic order. Negative crossings need axiom II.
std::vector<Coloring> enumerate_colorings(const KTGDiagram& d, const Shalgebra& s, unsigned jobs = 1);

/// Degree-2 chain of a colored diagram; throws ContractViolation if it is not a cycle.
CellChain represented_cycle(const KTGDiagram& d, const Coloring& c, const Shalgebra& s);

struct InvariantResult
{
    HomologyGroup group;
    std::vector<Coloring> colorings;
    std::vector<HomologyClass> classes; // parallel to colorings
    std::map<HomologyClass, std::size_t> multiset;

    std::size_t coloring_count() const { return colorings.size(); }
    /// Equality of the invariant itself: group, count and class multiset.
    bool same_invariant(const InvariantResult& other) const;
};

/// Class map of H_2 of the qualgebra-extended complex, built once and reused.
class InvariantComputer
{
public:
    explicit InvariantComputer(const Shalgebra& s, ComplexOptions options = {.mode = ComplexMode::qualgebra});

    const PrismaticComplex& complex() const { return *complex_; }
    const HomologyGroup& group() const { return decomposition_->group(); }
    HomologyClass class_of(const CellChain& z) const;
    InvariantResult operator()(const KTGDiagram& d) const;

private:
    std::unique_ptr<PrismaticComplex> complex_;
    std::unique_ptr<HomologyDecomposition> decomposition_;
};

InvariantResult invariant(const KTGDiagram& d, const Shalgebra& s);

enum class FoamKind
{
    H,   // (a,b,c)
    YI,  // (a,b)|c
    IY,  // a|(b,c)
    III  // a|b|c
};

std::string_view to_string(FoamKind kind);
std::optional<FoamKind> foam_kind_from_name(std::string_view name);

struct FoamCrossing
{
    FoamKind kind = FoamKind::H;
    std::array<Element, 3> labels{};
    int sign = 1;
};

struct FoamChainPresentation
{
    std::vector<FoamCrossing> crossings;
};

CellChain foam_chain(const FoamChainPresentation& f);

/// Class map of H_3 of the normalized extended complex.
class FoamInvariantComputer
{
public:
    explicit FoamInvariantComputer(const Shalgebra& s, unsigned jobs = 1);

    const PrismaticComplex& complex() const { return *complex_; }
    const HomologyGroup& group() const { return decomposition_->group(); }
    /// Throws InputError listing the boundary residue if the chain is not a cycle.
    HomologyClass operator()(const FoamChainPresentation& f) const;

private:
    std::unique_ptr<PrismaticComplex> complex_;
    std::unique_ptr<HomologyDecomposition> decomposition_;
};

HomologyClass foam_invariant(const FoamChainPresentation& f, const Shalgebra& s);

} // namespace prismhom

#endif
