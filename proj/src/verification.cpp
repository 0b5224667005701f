#include "verification.hpp"

#include <algorithm>
#include <chrono>

#include "classifier.hpp"
#include "reduction.hpp"

namespace hackenbush {

namespace {

const std::vector<Color> kRedBlue{Color::Blue, Color::Red};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string letter(OutcomeClass o) { return std::string(1, outcome_letter(o)); }

VerificationReport start_report(std::string suite, const SuiteParams& params, std::vector<Color> colors) {
    VerificationReport r;
    r.suite = std::move(suite);
    r.params = params;
    r.colors = std::move(colors);
    return r;
}

}  // namespace

std::size_t string_bound(std::size_t max_edges) { return max_edges + std::min<std::size_t>(max_edges, 2); }

void for_each_suite_position(const SuiteParams& params, const std::vector<Color>& colors, const PositionSink& sink) {
    auto non_empty = [&](const Position& p) {
        if (!p.empty()) sink(p);
    };
    for_each_position(ShapeClass::Strings, string_bound(params.max_edges), colors, sink);
    for_each_position(ShapeClass::Trees, params.max_edges, colors, non_empty);
    for_each_position(ShapeClass::Graphs, params.max_edges, colors, non_empty, params.max_graph_vertices);

    if (params.random_trials == 0) return;
    if (params.random_max_edges == 0 || params.random_max_edges > kMaxEdges)
        throw Error(ErrorCode::InvalidArgument, "random edge bound must be in 1.." + std::to_string(kMaxEdges));
    SplitMix64 rng(params.seed);
    for (std::size_t t = 0; t < params.random_trials; ++t) {
        std::size_t edges = 1 + rng.below(params.random_max_edges);
        std::size_t vertices = 1 + rng.below(edges + 1);
        sink(random_position(edges, vertices, colors, rng.next()));
    }
}

VerificationReport verify_theorem1(const SuiteParams& params) {
    Stopwatch clock;
    auto report = start_report("theorem1", params, kRedBlue);
    for_each_suite_position(params, kRedBlue, [&](const Position& p) {
        ++report.positions_checked;
        OutcomeClass oracle = outcome(p, PlayConvention::Misere);
        OutcomeClass formula = classify_misere_rb(p);
        if (oracle != formula)
            report.mismatches.push_back({"classifier", serialize_position(p), letter(oracle), letter(formula)});
    });
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_reduction(const SuiteParams& params) {
    Stopwatch clock;
    auto report = start_report("reduction", params, kRedBlue);
    std::uint64_t by_class[4] = {};
    for_each_suite_position(params, kRedBlue, [&](const Position& p) {
        ++report.positions_checked;
        const Position merged = merge_ground(p);
        const Position misere_instance = to_misere_instance(p);

        OutcomeClass merged_normal = outcome(merged, PlayConvention::Normal);
        ++by_class[static_cast<int>(merged_normal)];
        OutcomeClass instance_misere = outcome(misere_instance, PlayConvention::Misere);
        if (instance_misere != merged_normal)
            report.mismatches.push_back(
                {"G_m misere vs G' normal", serialize_position(p), letter(merged_normal), letter(instance_misere)});

        OutcomeClass original_normal = outcome(p, PlayConvention::Normal);
        if (original_normal != merged_normal)
            report.mismatches.push_back(
                {"ground merge (normal)", serialize_position(p), letter(original_normal), letter(merged_normal)});

        OutcomeClass original_misere = outcome(p, PlayConvention::Misere);
        OutcomeClass merged_misere = outcome(merged, PlayConvention::Misere);
        if (original_misere != merged_misere)
            report.mismatches.push_back(
                {"ground merge (misere)", serialize_position(p), letter(original_misere), letter(merged_misere)});
    });
    for (OutcomeClass o : {OutcomeClass::L, OutcomeClass::R, OutcomeClass::P, OutcomeClass::N})
        report.notes.emplace_back(std::string("normal_outcome_") + outcome_letter(o), by_class[static_cast<int>(o)]);
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_proof_strategy(const SuiteParams& params) {
    Stopwatch clock;
    auto report = start_report("strategy", params, kRedBlue);
    std::uint64_t applicable = 0;
    std::uint64_t strong_form_counterexamples = 0;
    for_each_suite_position(params, kRedBlue, [&](const Position& p) {
        ++report.positions_checked;
        const GroundedCounts c = grounded_counts(p);
        if (c.red < c.blue || c.blue == 0) return;
        ++applicable;

        const auto best = optimal_moves(p, Player::Left, PlayConvention::Misere);
        std::size_t grounded_blue = 0;
        std::size_t grounded_blue_optimal = 0;
        for (const Edge& e : p.edges()) {
            if (e.color != Color::Blue || !p.is_grounded(e)) continue;
            ++grounded_blue;
            if (std::binary_search(best.begin(), best.end(), Move{e.id})) ++grounded_blue_optimal;
        }
        if (grounded_blue_optimal == 0) {
            report.mismatches.push_back({"grounded blue cut is optimal", serialize_position(p), "at least one",
                                         "none of " + std::to_string(grounded_blue)});
        } else if (grounded_blue_optimal < grounded_blue) {
            ++strong_form_counterexamples;
        }
    });
    report.notes = {{"applicable_positions", applicable},
                    {"strong_form_counterexamples", strong_form_counterexamples}};
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_duality(const SuiteParams& params, const std::vector<Color>& colors) {
    Stopwatch clock;
    auto report = start_report("duality", params, colors);
    for_each_suite_position(params, colors, [&](const Position& p) {
        ++report.positions_checked;
        const Position swapped = swap_colors(p);
        for (PlayConvention conv : {PlayConvention::Normal, PlayConvention::Misere}) {
            const std::string tag = std::string(" (") + convention_name(conv) + ")";
            SearchSession original(p, conv);
            SearchSession mirrored(swapped, conv);
            for (Player mover : {Player::Left, Player::Right}) {
                Player direct = original.winner(mover);
                Player dual = opponent(mirrored.winner(opponent(mover)));
                if (direct != dual)
                    report.mismatches.push_back({std::string("winner duality, ") + player_name(mover) + " first" + tag,
                                                 serialize_position(p), player_name(direct), player_name(dual)});
            }
            OutcomeClass o = original.outcome();
            OutcomeClass o_swapped = mirrored.outcome();
            if (mirror(o) != o_swapped)
                report.mismatches.push_back(
                    {"outcome duality" + tag, serialize_position(p), letter(mirror(o)), letter(o_swapped)});

            OutcomeClass unmemoized = outcome(p, conv, SearchOptions{.memoize = false});
            if (o != unmemoized)
                report.mismatches.push_back(
                    {"memo transparency" + tag, serialize_position(p), letter(o), letter(unmemoized)});
        }
    });
    report.elapsed_seconds = clock.seconds();
    return report;
}

std::vector<ExploreRow> explore_green_strings(std::size_t max_edges, bool strict_green) {
    const std::vector<Color> rest = strict_green ? kRedBlue : std::vector<Color>{Color::Blue, Color::Red, Color::Green};
    std::vector<ExploreRow> rows;
    for_each_string_collection(max_edges, {Color::Green}, rest, [&](const Position& p) {
        rows.push_back({serialize_position(p), outcome(p, PlayConvention::Misere)});
    });
    std::sort(rows.begin(), rows.end(), [](const ExploreRow& a, const ExploreRow& b) { return a.position < b.position; });
    return rows;
}

}  // namespace hackenbush
