#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "enumeration.hpp"

namespace hackenbush {

struct SuiteParams {
    std::size_t max_edges = 5;  // Graphs and Trees bound
    std::size_t random_trials = 0;
    std::size_t random_max_edges = 8;
    std::uint64_t seed = 42;
    std::size_t max_graph_vertices = kDefaultGraphVertices;
};

/// Strings are cheap, so they go up to two edges further than the other
/// shapes without exceeding twice the bound: 0 -> 0, 1 -> 2, 5 -> 7.
std::size_t string_bound(std::size_t max_edges);

struct Mismatch {
    std::string check;
    std::string position;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string suite;
    SuiteParams params;
    std::vector<Color> colors;
    std::uint64_t positions_checked = 0;
    std::vector<Mismatch> mismatches;
    /// Informational counters that do not affect `passed()`.
    std::vector<std::pair<std::string, std::uint64_t>> notes;
    double elapsed_seconds = 0.0;

    bool passed() const { return mismatches.empty(); }
};

/// Exhaustive Strings (<= string_bound(max_edges)), Trees and Graphs
/// (<= max_edges), then `random_trials` seeded random positions. The empty
/// position is visited once. Trial t uses
/// SplitMix64(seed) draws for its edge count (1..random_max_edges), vertex
/// budget and its own seed.
void for_each_suite_position(const SuiteParams& params, const std::vector<Color>& colors, const PositionSink& sink);

/// classify_misere_rb(p) == outcome(p, Misere) over Red-Blue suites.
VerificationReport verify_theorem1(const SuiteParams& params);

/// outcome(G_m, Misere) == outcome(G', Normal), and outcome(G, c) == outcome(G', c)
/// for both conventions, over Red-Blue suites.
VerificationReport verify_reduction(const SuiteParams& params);

/// For Red-Blue positions with R >= B and a grounded blue edge, some grounded
/// blue cut is among Left's optimal misère moves. Positions where some grounded
/// blue cut is NOT optimal are counted in the "strong_form_counterexamples" note.
VerificationReport verify_proof_strategy(const SuiteParams& params);

/// Colour-swap duality for winners and outcomes plus memo on/off agreement,
/// both conventions.
VerificationReport verify_duality(const SuiteParams& params, const std::vector<Color>& colors);

struct ExploreRow {
    std::string position;
    OutcomeClass misere;
};

/// String collections whose grounded edges are green, with misère outcomes,
/// sorted by serialized position. Higher edges are any colour, or only
/// Blue/Red when `strict_green` is set.
std::vector<ExploreRow> explore_green_strings(std::size_t max_edges, bool strict_green);

}  // namespace hackenbush
