#pragma once

#include <optional>

#include "position.hpp"
#include "solver.hpp"

namespace hackenbush {

/// Misère outcome of a Red-Blue position from its grounded edge counts alone:
/// L if R > B, R if B > R, N if B = R. Never P.
///
/// Each player wants to run out of moves first, so the side with fewer
/// grounded edges of its own colour wins. Linear in the number of edges.
/// Throws ErrorCode::GreenEdge if the position contains a green edge.
OutcomeClass classify_misere_rb(const Position& p);

/// Lowest-id grounded edge of the mover's own colour, if any. Pure selection,
/// no claim that the move wins. Throws ErrorCode::GreenEdge on green input.
std::optional<Move> proof_strategy_move(const Position& p, Player mover);

}  // namespace hackenbush
