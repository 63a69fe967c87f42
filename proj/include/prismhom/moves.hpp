/**
 * Local rewrites of KTG diagrams realizing the Reidemeister-type moves
 * H, YI, IY, III, II, I and T, and the induced bijection on colorings.
 *
 * New arcs receive fresh ids; a split arc keeps its id on the segment
 * nearest its tail, so over-crossings of the original arc stay with it.
 */
#ifndef PRISMHOM_MOVES_HPP
#define PRISMHOM_MOVES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "prismhom/knots.hpp"

namespace prismhom {

enum class Move
{
    H,
    YI,
    IY,
    III,
    II,
    I,
    T
};

std::string_view to_string(Move m);
std::optional<Move> move_from_name(std::string_view name);
inline constexpr std::array<Move, 7> all_moves = {Move::H, Move::YI, Move::IY, Move::III, Move::II, Move::I, Move::T};

/**
 * Where a move applies. Targets by move (forward / inverse):
 *   I    {arc} with sign = kink sign      / {crossing}
 *   II   {under arc, over arc}, sign of the first crossing / {crossing, crossing}
 *   III  {x1, x2, x3}: x1 = (b0 over a0 -> a1), x2 = (c over a1 -> a2), x3 = (c over b0 -> b1)
 *        / the same crossings after the move
 *   YI   {crossing under the output of a zip} / {zip whose inputs come from two crossings}
 *   IY   {crossing under zip input b, crossing under zip input c} / {crossing under a zip output}
 *   T    {zip} / {zip whose right input leaves a crossing under its left input}
 *   H    variant 0: {zip, zip fed by it} (associativity); variant 1: {zip, unzip fed by it}
 *        (rotation; inverse takes {unzip, zip})
 */
struct MoveSite
{
    std::vector<std::int64_t> targets;
    int sign = 1;
    int variant = 0;
    bool inverse = false;
};

struct MoveResult
{
    KTGDiagram diagram;
    /// Arcs present on both sides whose colors agree under the bijection.
    std::vector<ArcId> persistent;
};

/// Throws InputError when the pattern does not match at the site.
MoveResult apply_move(const KTGDiagram& d, Move m, const MoveSite& site);

/**
 * Matches colorings of two diagrams that agree on the persistent arcs;
 * result[i] is the index in after_colorings of the partner of
 * before_colorings[i]. Throws ContractViolation if this is not a bijection.
 */
std::vector<std::size_t> coloring_bijection(const KTGDiagram& before, const std::vector<Coloring>& before_colorings,
                                            const KTGDiagram& after, const std::vector<Coloring>& after_colorings,
                                            const std::vector<ArcId>& persistent);

} // namespace prismhom

#endif
