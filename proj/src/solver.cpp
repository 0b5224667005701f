#include "solver.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace hackenbush {

char outcome_letter(OutcomeClass o) {
    switch (o) {
        case OutcomeClass::L: return 'L';
        case OutcomeClass::R: return 'R';
        case OutcomeClass::P: return 'P';
        case OutcomeClass::N: return 'N';
    }
    return '?';
}

const char* convention_name(PlayConvention c) { return c == PlayConvention::Normal ? "normal" : "misere"; }

OutcomeClass outcome_from_winners(Player left_first_winner, Player right_first_winner) {
    if (left_first_winner == Player::Left && right_first_winner == Player::Left) return OutcomeClass::L;
    if (left_first_winner == Player::Right && right_first_winner == Player::Right) return OutcomeClass::R;
    // Mover wins both ways -> N; the other player wins both ways -> P.
    return left_first_winner == Player::Left ? OutcomeClass::N : OutcomeClass::P;
}

OutcomeClass mirror(OutcomeClass o) {
    if (o == OutcomeClass::L) return OutcomeClass::R;
    if (o == OutcomeClass::R) return OutcomeClass::L;
    return o;
}

SearchSession::SearchSession(const Position& root, PlayConvention conv, SearchOptions opts)
    : root_(root), conv_(conv), opts_(opts) {
    std::map<VertexId, std::uint16_t> dense;
    auto index_of = [&](VertexId v) {
        auto [it, inserted] = dense.emplace(v, static_cast<std::uint16_t>(dense.size()));
        if (inserted) {
            incident_.emplace_back();
            if (root_.is_ground(v)) ground_vertices_.push_back(it->second);
        }
        return it->second;
    };
    const auto& edges = root_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        auto a = index_of(e.u);
        auto b = index_of(e.v);
        end_a_.push_back(a);
        end_b_.push_back(b);
        incident_[a].push_back(static_cast<std::uint16_t>(i));
        if (a != b) incident_[b].push_back(static_cast<std::uint16_t>(i));
        for (Player pl : {Player::Left, Player::Right})
            if (can_cut(pl, e.color)) cuttable_[static_cast<int>(pl)] |= Mask{1} << i;
    }
}

SearchSession::Mask SearchSession::mask_of(const Position& p) const { return state_key(p, Player::Left, root_).present; }

SearchSession::Mask SearchSession::prune(Mask present) const {
    // Vertices number at most 2 * kMaxEdges.
    std::uint64_t seen[2 * kMaxEdges / 64] = {};
    std::uint16_t stack[2 * kMaxEdges];
    std::size_t top = 0;
    auto visit = [&](std::uint16_t v) {
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (seen[v >> 6] & bit) return;
        seen[v >> 6] |= bit;
        stack[top++] = v;
    };
    for (auto g : ground_vertices_) visit(g);
    Mask kept = 0;
    while (top > 0) {
        std::uint16_t x = stack[--top];
        for (std::uint16_t i : incident_[x]) {
            if (!(present >> i & 1)) continue;
            kept |= Mask{1} << i;
            visit(end_a_[i] == x ? end_b_[i] : end_a_[i]);
        }
    }
    return kept;
}

bool SearchSession::mover_wins(Mask present, Player mover, std::uint64_t depth) {
    stats_.max_depth = std::max(stats_.max_depth, depth);
    Mask moves = present & cuttable_[static_cast<int>(mover)];
    if (moves == 0) return conv_ == PlayConvention::Misere;

    StateKey key{present, mover};
    if (opts_.memoize) {
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats_.memo_hits;
            return it->second;
        }
    }
    ++stats_.nodes_expanded;

    bool win = false;
    while (moves != 0) {
        int i = std::countr_zero(moves);
        moves &= moves - 1;
        Mask child = prune(present & ~(Mask{1} << i));
        if (!mover_wins(child, opponent(mover), depth + 1)) {
            win = true;
            break;
        }
    }
    if (opts_.memoize) memo_.emplace(key, win);
    return win;
}

Player SearchSession::winner(const Position& p, Player mover) {
    return mover_wins(mask_of(p), mover, 0) ? mover : opponent(mover);
}

OutcomeClass SearchSession::outcome(const Position& p) {
    return outcome_from_winners(winner(p, Player::Left), winner(p, Player::Right));
}

std::vector<Move> SearchSession::optimal_moves(const Position& p, Player mover) {
    Mask present = mask_of(p);
    std::vector<Move> out;
    Mask moves = present & cuttable_[static_cast<int>(mover)];
    while (moves != 0) {
        int i = std::countr_zero(moves);
        moves &= moves - 1;
        Mask child = prune(present & ~(Mask{1} << i));
        if (!mover_wins(child, opponent(mover), 1)) out.push_back(Move{root_.edges()[static_cast<std::size_t>(i)].id});
    }
    return out;
}

Player winner(const Position& p, Player mover, PlayConvention conv, SearchOptions opts) {
    return SearchSession(p, conv, opts).winner(mover);
}

OutcomeClass outcome(const Position& p, PlayConvention conv, SearchOptions opts) {
    return SearchSession(p, conv, opts).outcome();
}

std::vector<Move> optimal_moves(const Position& p, Player mover, PlayConvention conv, SearchOptions opts) {
    return SearchSession(p, conv, opts).optimal_moves(mover);
}

}  // namespace hackenbush
