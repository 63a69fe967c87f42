/**
 * Hand-written boundary expansions for every prism shape of degree 2, 3
 * and 4, kept with their canceling terms. Used as an independent check
 * of the generic face computation.
 */
#ifndef PRISMHOM_REFERENCE_FORMULAS_HPP
#define PRISMHOM_REFERENCE_FORMULAS_HPP

#include <optional>
#include <vector>

#include "prismhom/prismatic.hpp"

namespace prismhom {

/// Uncanceled signed terms of the boundary of g; nullopt outside degrees 2..4.
std::optional<std::vector<SignedTuple>> reference_boundary(const BracketedTuple& g, const Shalgebra& s);

/// Same terms summed into a chain.
std::optional<CellChain> reference_boundary_chain(const BracketedTuple& g, const Shalgebra& s);

} // namespace prismhom

#endif
