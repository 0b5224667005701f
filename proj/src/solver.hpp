#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "position.hpp"

namespace hackenbush {

enum class PlayConvention : std::uint8_t { Normal, Misere };

enum class OutcomeClass : std::uint8_t { L, R, P, N };

char outcome_letter(OutcomeClass o);
const char* convention_name(PlayConvention c);

/// Combines the winners with Left to move first and Right to move first.
OutcomeClass outcome_from_winners(Player left_first_winner, Player right_first_winner);

/// L <-> R, P and N fixed.
OutcomeClass mirror(OutcomeClass o);

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t max_depth = 0;
};

struct SearchOptions {
    bool memoize = true;
};

/// One exact win/loss search over the sub-positions of a fixed root.
///
/// The memo table is keyed by StateKey and only meaningful relative to the
/// root, so a session is tied to one root and one convention. Moves are
/// explored in ascending edge-id order. Not thread-safe; run independent
/// sessions for parallel work.
class SearchSession {
public:
    SearchSession(const Position& root, PlayConvention conv, SearchOptions opts = {});

    const Position& root() const { return root_; }
    PlayConvention convention() const { return conv_; }
    const SearchStats& stats() const { return stats_; }

    /// `p` must be a sub-position of the root (its edge ids a subset).
    Player winner(const Position& p, Player mover);
    Player winner(Player mover) { return winner(root_, mover); }

    OutcomeClass outcome(const Position& p);
    OutcomeClass outcome() { return outcome(root_); }

    std::vector<Move> optimal_moves(const Position& p, Player mover);
    std::vector<Move> optimal_moves(Player mover) { return optimal_moves(root_, mover); }

private:
    using Mask = std::uint64_t;

    Mask mask_of(const Position& p) const;
    Mask prune(Mask present) const;
    bool mover_wins(Mask present, Player mover, std::uint64_t depth);

    Position root_;
    PlayConvention conv_;
    SearchOptions opts_;
    SearchStats stats_;

    // Dense edge index i corresponds to root_.edges()[i].
    std::vector<std::uint16_t> end_a_, end_b_;
    std::vector<std::vector<std::uint16_t>> incident_;  // per dense vertex, edge indices
    std::vector<std::uint16_t> ground_vertices_;
    Mask cuttable_[2] = {0, 0};
    std::unordered_map<StateKey, bool, StateKeyHash> memo_;
};

Player winner(const Position& p, Player mover, PlayConvention conv, SearchOptions opts = {});
OutcomeClass outcome(const Position& p, PlayConvention conv, SearchOptions opts = {});
std::vector<Move> optimal_moves(const Position& p, Player mover, PlayConvention conv, SearchOptions opts = {});

}  // namespace hackenbush
