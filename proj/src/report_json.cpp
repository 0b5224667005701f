#include "report_json.hpp"

namespace hackenbush {

std::string color_letters(const std::vector<Color>& colors) {
    std::string s;
    for (Color c : colors) s += color_letter(c);
    return s;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["bounds"] = {
        {"max_edges", r.params.max_edges},
        {"string_max_edges", string_bound(r.params.max_edges)},
        {"graph_max_vertices", r.params.max_graph_vertices},
        {"random_trials", r.params.random_trials},
        {"random_max_edges", r.params.random_max_edges},
        {"colors", color_letters(r.colors)},
    };
    j["seed"] = r.params.seed;
    j["positions_checked"] = r.positions_checked;
    j["passed"] = r.passed();
    auto mismatches = nlohmann::ordered_json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"check", m.check}, {"position", m.position}, {"expected", m.expected}, {"got", m.got}});
    j["mismatches"] = std::move(mismatches);
    auto notes = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    j["notes"] = std::move(notes);
    if (include_timing) j["timing"] = {{"elapsed_seconds", r.elapsed_seconds}};
    return j;
}

nlohmann::ordered_json to_json(const SearchStats& s) {
    return {{"nodes_expanded", s.nodes_expanded}, {"memo_hits", s.memo_hits}, {"max_depth", s.max_depth}};
}

nlohmann::ordered_json to_json(const std::vector<ExploreRow>& rows) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& row : rows) out.push_back({{"position", row.position}, {"misere", std::string(1, outcome_letter(row.misere))}});
    return out;
}

}  // namespace hackenbush
