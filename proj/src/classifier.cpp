#include "classifier.hpp"

namespace hackenbush {

namespace {

void require_red_blue(const Position& p) {
    if (p.has_green()) throw Error(ErrorCode::GreenEdge, "formula requires Red-Blue position (found a green edge)");
}

}  // namespace

OutcomeClass classify_misere_rb(const Position& p) {
    require_red_blue(p);
    const GroundedCounts c = grounded_counts(p);
    if (c.red > c.blue) return OutcomeClass::L;
    if (c.blue > c.red) return OutcomeClass::R;
    return OutcomeClass::N;
}

std::optional<Move> proof_strategy_move(const Position& p, Player mover) {
    require_red_blue(p);
    const Color own = mover == Player::Left ? Color::Blue : Color::Red;
    for (const Edge& e : p.edges())
        if (e.color == own && p.is_grounded(e)) return Move{e.id};
    return std::nullopt;
}

}  // namespace hackenbush
