#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "position.hpp"
#include "solver.hpp"

namespace hackenbush {

enum class ShapeClass : std::uint8_t { Strings, Trees, Graphs };

const char* shape_name(ShapeClass s);

using PositionSink = std::function<void(const Position&)>;

/// Graph enumeration uses at most this many non-ground vertices unless told otherwise.
inline constexpr std::size_t kDefaultGraphVertices = 4;

/// Every position of the shape class with at most `max_edges` edges coloured
/// from `colors`, in a fixed order. No isomorphism reduction beyond the
/// cheap ones noted per shape.
///
///  - Strings: multisets of disjoint paths, each hanging from its own ground
///    vertex. The empty collection is grounded at {0}.
///  - Trees: recursive trees rooted at ground vertex 0 (edge j adds vertex
///    j + 1 below one of the vertices 0..j).
///  - Graphs: multigraphs with loops over {0..V}, ground {0}, where
///    V = min(max_edges, max_graph_vertices). Only pruned edge multisets
///    whose non-ground vertex labels form a prefix 1..m are emitted.
void for_each_position(ShapeClass shape, std::size_t max_edges, const std::vector<Color>& colors,
                       const PositionSink& sink, std::size_t max_graph_vertices = kDefaultGraphVertices);

std::vector<Position> enumerate_positions(ShapeClass shape, std::size_t max_edges, const std::vector<Color>& colors,
                                          std::size_t max_graph_vertices = kDefaultGraphVertices);

/// String collections where each string's grounded edge is drawn from
/// `first_colors` and every higher edge from `rest_colors`.
void for_each_string_collection(std::size_t max_edges, const std::vector<Color>& first_colors,
                                const std::vector<Color>& rest_colors, const PositionSink& sink);

/// SplitMix64. The random generator is defined in terms of this recurrence so
/// golden files are reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// next() % bound; bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Deterministic random position with exactly `max_edges` edges, ground {0}
/// and at most `max_vertices` vertices (ground included).
///
/// Edge i: u is drawn uniformly from the vertices reached so far; v is drawn
/// uniformly from those vertices plus one fresh vertex while the budget
/// allows (so loops and multi-edges occur); the colour is drawn uniformly
/// from `colors`. Each draw is SplitMix64(seed).next() % n, in the order
/// u, v, colour.
Position random_position(std::size_t max_edges, std::size_t max_vertices, const std::vector<Color>& colors,
                         std::uint64_t seed);

}  // namespace hackenbush
