#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hackenbush {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// StateKey holds one bit per root edge.
inline constexpr std::size_t kMaxEdges = 64;

enum class ErrorCode {
    Parse,
    DuplicateEdge,
    NoGround,
    UnknownColor,
    UnknownEdge,
    TooLarge,
    GreenEdge,
    InvalidArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

enum class Color : std::uint8_t { Blue, Red, Green };
enum class Player : std::uint8_t { Left, Right };

constexpr Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

// Left cuts Blue and Green, Right cuts Red and Green.
constexpr bool can_cut(Player p, Color c) {
    if (c == Color::Green) return true;
    return p == Player::Left ? c == Color::Blue : c == Color::Red;
}

char color_letter(Color c);
std::optional<Color> color_from_letter(char c);
const char* player_name(Player p);

// Parses a color subset such as "BR" or "BRG". Throws on unknown letters or an empty set.
std::vector<Color> parse_color_set(std::string_view letters);

struct Edge {
    EdgeId id = 0;
    VertexId u = 0;
    VertexId v = 0;
    Color color = Color::Blue;

    bool is_loop() const { return u == v; }
    bool operator==(const Edge&) const = default;
};

struct GroundedCounts {
    std::size_t blue = 0;
    std::size_t red = 0;
    std::size_t green = 0;

    bool operator==(const GroundedCounts&) const = default;
};

struct Move {
    EdgeId edge_id = 0;

    bool operator==(const Move&) const = default;
    auto operator<=>(const Move&) const = default;
};

struct StateKey {
    std::uint64_t present = 0;
    Player mover = Player::Left;

    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        std::uint64_t x = k.present * 2 + (k.mover == Player::Right ? 1 : 0);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

/// An immutable Hackenbush position: a colored multigraph with a ground set.
///
/// Edges are kept sorted by id. Every Position produced by the public
/// constructors and operations is pruned: each edge is reachable from some
/// ground vertex. Vertices that lose all their edges stay in the vertex set
/// but are never serialized.
class Position {
public:
    /// Empty position grounded at vertex 0.
    Position();

    /// Builds and prunes a position. Throws on duplicate ids, an empty ground
    /// set, or more than kMaxEdges edges.
    Position(std::set<VertexId> ground, std::vector<Edge> edges, std::set<VertexId> extra_vertices = {});

    const std::set<VertexId>& ground() const { return ground_; }
    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    bool is_ground(VertexId v) const { return ground_.contains(v); }
    bool is_grounded(const Edge& e) const { return is_ground(e.u) || is_ground(e.v); }
    const Edge* find_edge(EdgeId id) const;
    bool has_green() const;

    /// Equal edge lists and ground sets. Isolated non-ground vertices are ignored.
    bool operator==(const Position& other) const {
        return edges_ == other.edges_ && ground_ == other.ground_;
    }

private:
    std::set<VertexId> ground_;
    std::set<VertexId> vertices_;
    std::vector<Edge> edges_;
};

/// Edges of `edges` reachable from `ground` through `edges` itself.
std::vector<Edge> prune_edges(const std::set<VertexId>& ground, const std::vector<Edge>& edges);

bool is_pruned(const std::set<VertexId>& ground, const std::vector<Edge>& edges);

/// Reads the line-oriented position file format:
///   # comment
///   ground <vid> [<vid> ...]
///   edge <eid> <u> <v> <B|R|G>
Position parse_position(std::string_view text);

/// Ground lines first, then edge lines sorted by id. Empty position -> "ground 0\n"
/// when the ground is {0}.
std::string serialize_position(const Position& p);

GroundedCounts grounded_counts(const Position& p);

std::vector<Move> legal_moves(const Position& p, Player mover);

/// Removes the edge and everything no longer connected to the ground.
/// Colour-agnostic; throws ErrorCode::UnknownEdge for an absent id.
Position apply_move(const Position& p, Move m);

StateKey state_key(const Position& p, Player mover, const Position& root);

/// Blue <-> Red everywhere; Green unchanged.
Position swap_colors(const Position& p);

}  // namespace hackenbush
