#pragma once

#include "position.hpp"

namespace hackenbush {

/// Identifies every ground vertex with one fresh vertex (the smallest
/// non-negative id not used by `p`). Edge ids and colours are kept; an edge
/// between two old ground vertices becomes a loop.
Position merge_ground(const Position& p);

/// Builds the misère instance G_m: merge the ground of `p` into a vertex v*,
/// make v* an ordinary vertex and hang it from a fresh ground vertex g0 by a
/// single green edge with id max(edge ids) + 1 (0 for an empty input).
///
/// v* and g0 are the two smallest ids unused by `p`, in that order.
/// Throws ErrorCode::GreenEdge if `p` already contains green edges.
Position to_misere_instance(const Position& p);

}  // namespace hackenbush
