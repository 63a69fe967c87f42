/**
 * Edge-labeled products of simplices.
 *
 * A vertex of the prism of shape (k_1, ..., k_l) is a coordinate tuple
 * (p_1, ..., p_l) with 0 <= p_q <= k_q. Edges join vertices that differ in
 * one coordinate and are directed towards the larger value; every pair of
 * vertices of a simplex factor is an edge.
 */
#ifndef PRISMHOM_PRISMS_HPP
#define PRISMHOM_PRISMS_HPP

#include <map>
#include <utility>
#include <vector>

#include "prismhom/prismatic.hpp"

namespace prismhom {

struct PrismVertex
{
    std::vector<std::size_t> coords;
    auto operator<=>(const PrismVertex&) const = default;
};

using PrismEdge = std::pair<PrismVertex, PrismVertex>;

struct LabeledPrism
{
    OrderedPartition partition;
    BracketedTuple label;
    std::map<PrismEdge, Element> edges;

    std::vector<PrismVertex> vertices() const;
    auto operator<=>(const LabeledPrism&) const = default;
};

/// All vertices of the given shape in lexicographic order.
std::vector<PrismVertex> prism_vertices(const OrderedPartition& shape);
/// All edges of the given shape, ordered by their endpoints.
std::vector<PrismEdge> prism_edges(const OrderedPartition& shape);

/**
 * Labels the edge from p_q to p'_q in factor q, other coordinates fixed, by
 * (g_{q,p_q+1} ... g_{q,p'_q}) acted on successively by the prefix products
 * g_{u,1} ... g_{u,p_u} of the later blocks u = q+1, ..., l.
 */
LabeledPrism good_labeling(const BracketedTuple& g, const Shalgebra& s);

/// Prism of (base|h): copies of base acted on by h_1...h_i at vertex i of h's simplex.
LabeledPrism inductive_labeling(const LabeledPrism& base, std::span<const Element> h, const Shalgebra& s);
/// Inductive construction starting from the first block's simplex.
LabeledPrism inductive_labeling(const BracketedTuple& g, const Shalgebra& s);

/// Acts on every edge label (and on the tuple) by b.
LabeledPrism act_on_prism(const LabeledPrism& prism, Element b, const Shalgebra& s);

/// Reads the tuple off the edges between consecutive vertices of each factor.
BracketedTuple recover_tuple(const LabeledPrism& prism);
bool is_good(const LabeledPrism& prism, const Shalgebra& s);

struct SignedPrism
{
    int sign = 1;
    LabeledPrism prism;
    auto operator<=>(const SignedPrism&) const = default;
};

/**
 * Codimension-one faces in (factor, deleted vertex) order with induced labels
 * and order-preserving vertex renaming. Throws ContractViolation if an
 * induced labeling is not good.
 */
std::vector<SignedPrism> geometric_faces(const LabeledPrism& prism, const Shalgebra& s);

/**
 * The map x -> x < a_1 < ... < a_p along a directed edge path from u to v.
 * Every such path is evaluated; throws ContractViolation if two disagree or
 * the map is not an endomorphism, InputError if no directed path exists.
 */
std::vector<Element> path_endomorphism(const LabeledPrism& prism, const PrismVertex& u, const PrismVertex& v,
                                       const Shalgebra& s);

} // namespace prismhom

#endif
