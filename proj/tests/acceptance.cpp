// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
//
// Criteria 1, 3 and 8 drive the installed CLI exactly as a user would; the
// rest call the library directly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "classifier.hpp"
#include "enumeration.hpp"
#include "oracle.hpp"
#include "verification.hpp"

using namespace hackenbush;
using json = nlohmann::json;

namespace {

constexpr double kVerifyBudgetSeconds = 300.0;  // 5 minutes
constexpr double kSolveBudgetSeconds = 60.0;

struct CommandResult {
    int exit_code = -1;
    std::string output;
    double seconds = 0.0;
};

CommandResult run_cli(const std::string& args) {
    CommandResult r;
    const std::string cmd = std::string("\"") + HACKENBUSH_CLI + "\" " + args;
    auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> check;  // detail written to the string
};

char oracle_letter(const Position& p, bool misere) {
    oracle::RawGame g;
    g.ground = p.ground();
    for (const Edge& e : p.edges()) g.edges.push_back({e.u, e.v, color_letter(e.color)});
    return oracle::outcome(g, misere);
}

bool verify_via_cli(const std::string& args, std::string& detail, json* report_out = nullptr) {
    CommandResult r = run_cli(args + " --json");
    json doc;
    try {
        doc = json::parse(r.output);
    } catch (const std::exception& e) {
        detail = std::string("unparsable output: ") + e.what();
        return false;
    }
    const json& report = doc["report"];
    detail = "exit " + std::to_string(r.exit_code) + ", " + std::to_string(report["positions_checked"].get<long>()) +
             " positions, " + std::to_string(report["mismatches"].size()) + " mismatches, " +
             std::to_string(r.seconds) + " s";
    if (report_out) *report_out = report;
    return r.exit_code == 0 && report["mismatches"].empty() && report["passed"] == true &&
           r.seconds <= kVerifyBudgetSeconds;
}

}  // namespace

int main() {
    const Position path({0}, {{0, 0, 1, Color::Blue}, {1, 1, 2, Color::Red}});
    const Position green({0}, {{0, 0, 1, Color::Green}});

    std::vector<Criterion> criteria{
        {1, "classifier equals misere solver on exhaustive + random Red-Blue suites",
         [](std::string& d) {
             json report;
             bool ok = verify_via_cli("verify theorem1 --max-edges 5 --random 2000 --rand-edges 9 --seed 42", d, &report);
             const json& b = report["bounds"];
             return ok && b["string_max_edges"] == 7 && b["max_edges"] == 5 && b["graph_max_vertices"] == 4 &&
                    b["random_trials"] == 2000 && b["random_max_edges"] == 9;
         }},
        {2, "blue-red path is R under misere (displayed orientation would say L)",
         [&](std::string& d) {
             const char brute = oracle_letter(path, true);
             const OutcomeClass solver = outcome(path, PlayConvention::Misere);
             const OutcomeClass formula = classify_misere_rb(path);
             const GroundedCounts c = grounded_counts(path);
             const char displayed = c.blue > c.red ? 'L' : c.red > c.blue ? 'R' : 'N';
             d = std::string("brute force ") + brute + ", solver " + outcome_letter(solver) + ", classifier " +
                 outcome_letter(formula) + ", displayed formula " + displayed;
             return brute == 'R' && solver == OutcomeClass::R && formula == OutcomeClass::R && displayed == 'L';
         }},
        {3, "reduction: outcome(G_m, misere) = outcome(G', normal), ground merge invariance",
         [](std::string& d) {
             json report;
             bool ok = verify_via_cli("verify reduction --max-edges 4 --random 1000 --rand-edges 8 --seed 42", d, &report);
             // Full-class equality is checked per position. Red-Blue positions are numbers under
             // normal play, so G' is never N; L, R and P must all occur and N must not.
             const json& notes = report["notes"];
             auto count = [&](const char* k) { return notes.contains(k) ? notes[k].get<long>() : -1L; };
             const bool all_classes = count("normal_outcome_L") > 0 && count("normal_outcome_R") > 0 &&
                                      count("normal_outcome_P") > 0 && count("normal_outcome_N") == 0;
             d += ", G' classes L/R/P/N = " + std::to_string(count("normal_outcome_L")) + "/" +
                  std::to_string(count("normal_outcome_R")) + "/" + std::to_string(count("normal_outcome_P")) + "/" +
                  std::to_string(count("normal_outcome_N"));
             return ok && all_classes;
         }},
        {4, "base cases: empty P/N, single green N/P",
         [&](std::string& d) {
             OutcomeClass en = outcome(Position(), PlayConvention::Normal);
             OutcomeClass em = outcome(Position(), PlayConvention::Misere);
             OutcomeClass gn = outcome(green, PlayConvention::Normal);
             OutcomeClass gm = outcome(green, PlayConvention::Misere);
             d = std::string("empty ") + outcome_letter(en) + "/" + outcome_letter(em) + ", green " + outcome_letter(gn) +
                 "/" + outcome_letter(gm);
             return en == OutcomeClass::P && em == OutcomeClass::N && gn == OutcomeClass::N && gm == OutcomeClass::P;
         }},
        {5, "some grounded blue cut is optimal for Left when R >= B",
         [](std::string& d) {
             SuiteParams params;
             params.max_edges = 5;
             auto r = verify_proof_strategy(params);
             d = std::to_string(r.positions_checked) + " positions, " + std::to_string(r.mismatches.size()) +
                 " violations";
             for (const auto& [k, v] : r.notes) d += ", " + k + " " + std::to_string(v);
             return r.passed();
         }},
        {6, "colour-swap duality and memo transparency",
         [](std::string& d) {
             SuiteParams params;
             params.max_edges = 5;
             auto rb = verify_duality(params, {Color::Blue, Color::Red});
             SuiteParams small;
             small.max_edges = 4;
             auto rbg = verify_duality(small, {Color::Blue, Color::Red, Color::Green});
             d = "Red-Blue " + std::to_string(rb.positions_checked) + " positions / " +
                 std::to_string(rb.mismatches.size()) + " violations; Red-Blue-Green " +
                 std::to_string(rbg.positions_checked) + " / " + std::to_string(rbg.mismatches.size());
             return rb.passed() && rbg.passed();
         }},
        {7, "18-edge random Red-Blue-Green position solves in budget",
         [](std::string& d) {
             Position p = random_position(18, 19, {Color::Blue, Color::Red, Color::Green}, 42);
             auto start = std::chrono::steady_clock::now();
             SearchSession normal(p, PlayConvention::Normal);
             SearchSession misere(p, PlayConvention::Misere);
             OutcomeClass on = normal.outcome();
             OutcomeClass om = misere.outcome();
             double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
             auto stats = [](const SearchStats& s) {
                 return "nodes " + std::to_string(s.nodes_expanded) + ", memo hits " + std::to_string(s.memo_hits) +
                        ", depth " + std::to_string(s.max_depth);
             };
             d = std::to_string(p.edge_count()) + " edges; normal " + outcome_letter(on) + " (" + stats(normal.stats()) +
                 "); misere " + outcome_letter(om) + " (" + stats(misere.stats()) + "); " + std::to_string(secs) + " s";
             return p.edge_count() == 18 && secs <= kSolveBudgetSeconds;
         }},
        {8, "repeated verify/enumerate/explore runs are byte-identical",
         [](std::string& d) {
             const std::vector<std::string> commands{
                 "verify theorem1 --max-edges 3 --random 300 --rand-edges 8 --seed 42 --json",
                 "verify reduction --max-edges 3 --random 200 --rand-edges 7 --seed 9 --json",
                 "verify strategy --max-edges 3 --random 100 --seed 5 --json",
                 "verify duality --max-edges 2 --colors BRG --json",
                 "enumerate --shape graphs --max-edges 3 --colors BRG --json",
                 "enumerate --shape trees --max-edges 3 --colors BR --json",
                 "explore green-strings --max-edges 5 --json",
                 "explore green-strings --max-edges 5 --strict-green --json",
             };
             std::size_t same = 0;
             for (const auto& c : commands) {
                 CommandResult a = run_cli(c), b = run_cli(c);
                 if (a.exit_code == 0 && !a.output.empty() && a.output == b.output) ++same;
             }
             d = std::to_string(same) + "/" + std::to_string(commands.size()) + " commands identical";
             return same == commands.size();
         }},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.name << " -- " << detail << std::endl;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
