#include "hackenbush/hackenbush.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "classifier.hpp"
#include "reduction.hpp"
#include "report_json.hpp"
#include "verification.hpp"

struct hb_position {
    hackenbush::Position value;
};

namespace {

using namespace hackenbush;

thread_local std::string last_error;

hb_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return HB_ERR_PARSE;
        case ErrorCode::DuplicateEdge: return HB_ERR_DUPLICATE_EDGE;
        case ErrorCode::NoGround: return HB_ERR_NO_GROUND;
        case ErrorCode::UnknownColor: return HB_ERR_UNKNOWN_COLOR;
        case ErrorCode::UnknownEdge: return HB_ERR_UNKNOWN_EDGE;
        case ErrorCode::TooLarge: return HB_ERR_TOO_LARGE;
        case ErrorCode::GreenEdge: return HB_ERR_GREEN_EDGE;
        case ErrorCode::InvalidArgument: return HB_ERR_INVALID_ARGUMENT;
    }
    return HB_ERR_INTERNAL;
}

hb_status fail(hb_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

template <class F>
hb_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HB_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HB_ERR_INTERNAL, e.what());
    }
}

#define HB_REQUIRE(cond, what) \
    if (!(cond)) return fail(HB_ERR_INVALID_ARGUMENT, what)

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hb_position* wrap(Position p) { return new hb_position{std::move(p)}; }

Player player_of(hb_player p) { return p == HB_RIGHT ? Player::Right : Player::Left; }
hb_player player_out(Player p) { return p == Player::Right ? HB_RIGHT : HB_LEFT; }
PlayConvention convention_of(hb_convention c) { return c == HB_MISERE ? PlayConvention::Misere : PlayConvention::Normal; }

hb_outcome outcome_out(OutcomeClass o) {
    switch (o) {
        case OutcomeClass::L: return HB_OUTCOME_L;
        case OutcomeClass::R: return HB_OUTCOME_R;
        case OutcomeClass::P: return HB_OUTCOME_P;
        case OutcomeClass::N: return HB_OUTCOME_N;
    }
    return HB_OUTCOME_N;
}

hb_status write_moves(const std::vector<Move>& moves, uint32_t* ids, size_t capacity, size_t* count) {
    *count = moves.size();
    if (moves.size() > capacity)
        return fail(HB_ERR_BUFFER_TOO_SMALL, "need room for " + std::to_string(moves.size()) + " moves");
    for (size_t i = 0; i < moves.size(); ++i) ids[i] = moves[i].edge_id;
    return HB_OK;
}

bool valid_player(hb_player p) { return p == HB_LEFT || p == HB_RIGHT; }
bool valid_convention(hb_convention c) { return c == HB_NORMAL || c == HB_MISERE; }

}  // namespace

extern "C" {

const char* hb_version(void) { return "1.0.0"; }

const char* hb_last_error(void) { return last_error.c_str(); }

const char* hb_status_string(hb_status status) {
    switch (status) {
        case HB_OK: return "ok";
        case HB_ERR_PARSE: return "parse error";
        case HB_ERR_DUPLICATE_EDGE: return "duplicate edge id";
        case HB_ERR_NO_GROUND: return "no ground vertex";
        case HB_ERR_UNKNOWN_COLOR: return "unknown color";
        case HB_ERR_UNKNOWN_EDGE: return "unknown edge";
        case HB_ERR_TOO_LARGE: return "position too large";
        case HB_ERR_GREEN_EDGE: return "green edge not allowed";
        case HB_ERR_INVALID_ARGUMENT: return "invalid argument";
        case HB_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case HB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

char hb_outcome_letter(hb_outcome outcome) {
    static const char letters[] = {'L', 'R', 'P', 'N'};
    return outcome >= HB_OUTCOME_L && outcome <= HB_OUTCOME_N ? letters[outcome] : '?';
}

void hb_string_free(char* s) { std::free(s); }

hb_suite_params hb_default_suite_params(void) {
    SuiteParams d;
    return hb_suite_params{d.max_edges, d.random_trials, d.random_max_edges, d.seed, d.max_graph_vertices, 0};
}

hb_status hb_position_parse(const char* text, hb_position** out) {
    HB_REQUIRE(text && out, "null argument");
    return guarded([&] {
        *out = wrap(parse_position(text));
        return HB_OK;
    });
}

hb_status hb_position_serialize(const hb_position* p, char** out) {
    HB_REQUIRE(p && out, "null argument");
    return guarded([&] {
        *out = dup_string(serialize_position(p->value));
        return HB_OK;
    });
}

hb_status hb_position_clone(const hb_position* p, hb_position** out) {
    HB_REQUIRE(p && out, "null argument");
    return guarded([&] {
        *out = wrap(p->value);
        return HB_OK;
    });
}

void hb_position_free(hb_position* p) { delete p; }

int hb_position_equal(const hb_position* a, const hb_position* b) { return a && b && a->value == b->value; }

size_t hb_position_edge_count(const hb_position* p) { return p ? p->value.edge_count() : 0; }

hb_status hb_position_edge(const hb_position* p, size_t index, hb_edge* out) {
    HB_REQUIRE(p && out, "null argument");
    HB_REQUIRE(index < p->value.edge_count(), "edge index out of range");
    const Edge& e = p->value.edges()[index];
    *out = hb_edge{e.id, e.u, e.v, static_cast<hb_color>(e.color)};
    return HB_OK;
}

int hb_position_has_green(const hb_position* p) { return p && p->value.has_green(); }

hb_status hb_position_grounded_counts(const hb_position* p, hb_grounded_counts* out) {
    HB_REQUIRE(p && out, "null argument");
    auto c = grounded_counts(p->value);
    *out = hb_grounded_counts{c.blue, c.red, c.green};
    return HB_OK;
}

hb_status hb_legal_moves(const hb_position* p, hb_player mover, uint32_t* edge_ids, size_t capacity, size_t* count) {
    HB_REQUIRE(p && count && (edge_ids || capacity == 0), "null argument");
    HB_REQUIRE(valid_player(mover), "invalid player");
    return guarded([&] { return write_moves(legal_moves(p->value, player_of(mover)), edge_ids, capacity, count); });
}

hb_status hb_apply_move(const hb_position* p, uint32_t edge_id, hb_position** out) {
    HB_REQUIRE(p && out, "null argument");
    return guarded([&] {
        *out = wrap(apply_move(p->value, Move{edge_id}));
        return HB_OK;
    });
}

hb_status hb_solve(const hb_position* p, hb_convention conv, int memoize, hb_solve_result* out) {
    HB_REQUIRE(p && out, "null argument");
    HB_REQUIRE(valid_convention(conv), "invalid convention");
    return guarded([&] {
        SearchSession session(p->value, convention_of(conv), SearchOptions{.memoize = memoize != 0});
        Player left_first = session.winner(Player::Left);
        Player right_first = session.winner(Player::Right);
        const SearchStats& s = session.stats();
        *out = hb_solve_result{outcome_out(outcome_from_winners(left_first, right_first)), player_out(left_first),
                               player_out(right_first), hb_search_stats{s.nodes_expanded, s.memo_hits, s.max_depth}};
        return HB_OK;
    });
}

hb_status hb_winner(const hb_position* p, hb_player mover, hb_convention conv, hb_player* out) {
    HB_REQUIRE(p && out, "null argument");
    HB_REQUIRE(valid_player(mover) && valid_convention(conv), "invalid player or convention");
    return guarded([&] {
        *out = player_out(winner(p->value, player_of(mover), convention_of(conv)));
        return HB_OK;
    });
}

hb_status hb_optimal_moves(const hb_position* p, hb_player mover, hb_convention conv, uint32_t* edge_ids,
                           size_t capacity, size_t* count) {
    HB_REQUIRE(p && count && (edge_ids || capacity == 0), "null argument");
    HB_REQUIRE(valid_player(mover) && valid_convention(conv), "invalid player or convention");
    return guarded([&] {
        return write_moves(optimal_moves(p->value, player_of(mover), convention_of(conv)), edge_ids, capacity, count);
    });
}

hb_status hb_classify_misere_rb(const hb_position* p, hb_outcome* out) {
    HB_REQUIRE(p && out, "null argument");
    return guarded([&] {
        *out = outcome_out(classify_misere_rb(p->value));
        return HB_OK;
    });
}

hb_status hb_proof_strategy_move(const hb_position* p, hb_player mover, int* found, uint32_t* edge_id) {
    HB_REQUIRE(p && found && edge_id, "null argument");
    HB_REQUIRE(valid_player(mover), "invalid player");
    return guarded([&] {
        auto m = proof_strategy_move(p->value, player_of(mover));
        *found = m.has_value();
        if (m) *edge_id = m->edge_id;
        return HB_OK;
    });
}

hb_status hb_merge_ground(const hb_position* p, hb_position** out) {
    HB_REQUIRE(p && out, "null argument");
    return guarded([&] {
        *out = wrap(merge_ground(p->value));
        return HB_OK;
    });
}

hb_status hb_to_misere_instance(const hb_position* p, hb_position** out) {
    HB_REQUIRE(p && out, "null argument");
    return guarded([&] {
        *out = wrap(to_misere_instance(p->value));
        return HB_OK;
    });
}

hb_status hb_random_position(size_t max_edges, size_t max_vertices, const char* colors, uint64_t seed,
                             hb_position** out) {
    HB_REQUIRE(colors && out, "null argument");
    return guarded([&] {
        *out = wrap(random_position(max_edges, max_vertices, parse_color_set(colors), seed));
        return HB_OK;
    });
}

hb_status hb_enumerate(hb_shape shape, size_t max_edges, const char* colors, size_t max_graph_vertices,
                       hb_position_callback callback, void* user) {
    HB_REQUIRE(colors && callback, "null argument");
    HB_REQUIRE(shape >= HB_SHAPE_STRINGS && shape <= HB_SHAPE_GRAPHS, "invalid shape");
    return guarded([&] {
        struct Stop {};
        try {
            for_each_position(
                static_cast<ShapeClass>(shape), max_edges, parse_color_set(colors),
                [&](const Position& p) {
                    hb_position handle{p};
                    if (callback(&handle, user) != 0) throw Stop{};
                },
                max_graph_vertices);
        } catch (const Stop&) {
        }
        return HB_OK;
    });
}

hb_status hb_explore_green_strings(size_t max_edges, int strict_green, hb_explore_callback callback, void* user) {
    HB_REQUIRE(callback, "null argument");
    return guarded([&] {
        for (const auto& row : explore_green_strings(max_edges, strict_green != 0))
            if (callback(row.position.c_str(), outcome_out(row.misere), user) != 0) break;
        return HB_OK;
    });
}

hb_status hb_verify(const char* suite, const hb_suite_params* params, const char* colors, char** report_json,
                    int* passed) {
    HB_REQUIRE(suite && params && report_json, "null argument");
    return guarded([&] {
        SuiteParams sp;
        sp.max_edges = params->max_edges;
        sp.random_trials = params->random_trials;
        sp.random_max_edges = params->random_max_edges;
        sp.seed = params->seed;
        sp.max_graph_vertices = params->max_graph_vertices;

        const std::string name = suite;
        VerificationReport report;
        if (name == "theorem1")
            report = verify_theorem1(sp);
        else if (name == "reduction")
            report = verify_reduction(sp);
        else if (name == "strategy")
            report = verify_proof_strategy(sp);
        else if (name == "duality")
            report = verify_duality(sp, parse_color_set(colors ? colors : "BR"));
        else
            return fail(HB_ERR_INVALID_ARGUMENT, "unknown verification suite '" + name + "'");

        *report_json = dup_string(to_json(report, params->include_timing != 0).dump());
        if (passed) *passed = report.passed();
        return HB_OK;
    });
}

}  // extern "C"
