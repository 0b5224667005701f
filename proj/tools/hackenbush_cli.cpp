// hackenbush: command-line front end over the C API in hackenbush/hackenbush.h.
//
// Exit codes: 0 success, 1 usage/parse/precondition error, 2 verification mismatches.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hackenbush/hackenbush.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(hb_status s) {
    if (s != HB_OK) {
        std::string msg = hb_last_error();
        throw CliError(msg.empty() ? hb_status_string(s) : msg);
    }
}

struct PositionDeleter {
    void operator()(hb_position* p) const { hb_position_free(p); }
};
using PositionPtr = std::unique_ptr<hb_position, PositionDeleter>;

struct StringDeleter {
    void operator()(char* s) const { hb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PositionPtr load_position(const std::string& path) {
    std::string text = read_file(path);
    hb_position* p = nullptr;
    hb_status s = hb_position_parse(text.c_str(), &p);
    if (s != HB_OK) throw CliError(path + ": " + hb_last_error());
    return PositionPtr(p);
}

std::string serialize(const hb_position* p) {
    char* raw = nullptr;
    check(hb_position_serialize(p, &raw));
    OwnedString owned(raw);
    return owned.get();
}

std::string letter(hb_outcome o) { return std::string(1, hb_outcome_letter(o)); }
const char* player_str(hb_player p) { return p == HB_LEFT ? "Left" : "Right"; }

std::vector<std::uint32_t> optimal(const hb_position* p, hb_player mover, hb_convention conv) {
    std::vector<std::uint32_t> ids(HB_MAX_EDGES);
    std::size_t n = 0;
    check(hb_optimal_moves(p, mover, conv, ids.data(), ids.size(), &n));
    ids.resize(n);
    return ids;
}

std::size_t legal_count(const hb_position* p, hb_player mover) {
    std::uint32_t ids[HB_MAX_EDGES];
    std::size_t n = 0;
    check(hb_legal_moves(p, mover, ids, HB_MAX_EDGES, &n));
    return n;
}

std::string join_ids(const std::vector<std::uint32_t>& ids) {
    if (ids.empty()) return "none";
    std::string s;
    for (auto id : ids) s += (s.empty() ? "" : " ") + std::to_string(id);
    return s;
}

json stats_json(const hb_search_stats& s) {
    return {{"nodes_expanded", s.nodes_expanded}, {"memo_hits", s.memo_hits}, {"max_depth", s.max_depth}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

hb_convention parse_play(const std::string& play) {
    if (play == "normal") return HB_NORMAL;
    if (play == "misere") return HB_MISERE;
    throw CliError("--play must be 'normal' or 'misere'");
}

// --- subcommands -----------------------------------------------------------

struct SolveArgs {
    std::string file;
    std::string play = "normal";
    bool json = false;
    bool no_memo = false;
};

int run_solve(const SolveArgs& a) {
    hb_convention conv = parse_play(a.play);
    auto p = load_position(a.file);
    hb_solve_result r{};
    check(hb_solve(p.get(), conv, a.no_memo ? 0 : 1, &r));

    json moves = json::object();
    for (hb_player mover : {HB_LEFT, HB_RIGHT}) {
        auto ids = legal_count(p.get(), mover) == 0 ? std::vector<std::uint32_t>{} : optimal(p.get(), mover, conv);
        moves[mover == HB_LEFT ? "left" : "right"] = ids;
    }
    if (a.json) {
        emit({{"command", "solve"},
              {"inputs", {{"file", a.file}, {"play", a.play}, {"memoize", !a.no_memo}}},
              {"outcome", letter(r.outcome)},
              {"winners", {{"left_first", player_str(r.winner_left_first)}, {"right_first", player_str(r.winner_right_first)}}},
              {"moves", moves},
              {"stats", stats_json(r.stats)}});
        return kExitOk;
    }
    std::cout << "play: " << a.play << '\n'
              << "outcome: " << letter(r.outcome) << '\n'
              << "winner with Left first: " << player_str(r.winner_left_first) << '\n'
              << "winner with Right first: " << player_str(r.winner_right_first) << '\n'
              << "optimal first moves (Left): " << join_ids(moves["left"].get<std::vector<std::uint32_t>>()) << '\n'
              << "optimal first moves (Right): " << join_ids(moves["right"].get<std::vector<std::uint32_t>>()) << '\n'
              << "nodes expanded: " << r.stats.nodes_expanded << ", memo hits: " << r.stats.memo_hits
              << ", max depth: " << r.stats.max_depth << '\n';
    return kExitOk;
}

struct ClassifyArgs {
    std::string file;
    bool json = false;
};

int run_classify(const ClassifyArgs& a) {
    auto p = load_position(a.file);
    if (hb_position_has_green(p.get())) throw CliError(a.file + ": formula requires Red-Blue position (found a green edge)");
    hb_outcome o{};
    check(hb_classify_misere_rb(p.get(), &o));
    hb_grounded_counts c{};
    check(hb_position_grounded_counts(p.get(), &c));

    json moves = json::object();
    for (hb_player mover : {HB_LEFT, HB_RIGHT}) {
        int found = 0;
        std::uint32_t id = 0;
        check(hb_proof_strategy_move(p.get(), mover, &found, &id));
        moves[mover == HB_LEFT ? "left" : "right"] = found ? json(id) : json(nullptr);
    }
    if (a.json) {
        emit({{"command", "classify"},
              {"inputs", {{"file", a.file}}},
              {"outcome", letter(o)},
              {"grounded", {{"blue", c.blue}, {"red", c.red}, {"green", c.green}}},
              {"moves", moves}});
        return kExitOk;
    }
    auto show = [](const json& m) { return m.is_null() ? std::string("none") : std::to_string(m.get<std::uint32_t>()); };
    std::cout << "grounded blue: " << c.blue << ", grounded red: " << c.red << '\n'
              << "misere outcome: " << letter(o) << '\n'
              << "grounded own-colour cut (Left): " << show(moves["left"]) << '\n'
              << "grounded own-colour cut (Right): " << show(moves["right"]) << '\n';
    return kExitOk;
}

struct TransformArgs {
    std::string file;
    std::string out = "-";
    bool json = false;
};

int run_transform(const TransformArgs& a, const char* command, hb_status (*transform)(const hb_position*, hb_position**)) {
    auto p = load_position(a.file);
    hb_position* raw = nullptr;
    check(transform(p.get(), &raw));
    PositionPtr result(raw);
    std::string text = serialize(result.get());
    if (a.out == "-") {
        if (!a.json) std::cout << text;
    } else {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) throw CliError("cannot write '" + a.out + "'");
        out << text;
    }
    if (a.json)
        emit({{"command", command}, {"inputs", {{"file", a.file}, {"out", a.out}}}, {"position", text}});
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    hb_suite_params params = hb_default_suite_params();
    std::string colors = "BR";
    bool json = false;
    bool timing = false;
};

int run_verify(VerifyArgs a) {
    a.params.include_timing = a.timing ? 1 : 0;
    char* raw = nullptr;
    int passed = 0;
    check(hb_verify(a.suite.c_str(), &a.params, a.colors.c_str(), &raw, &passed));
    json report = json::parse(OwnedString(raw).get());

    if (a.json) {
        emit({{"command", "verify"},
              {"inputs",
               {{"suite", a.suite},
                {"max_edges", a.params.max_edges},
                {"random", a.params.random_trials},
                {"rand_edges", a.params.random_max_edges},
                {"seed", a.params.seed},
                {"vertices", a.params.max_graph_vertices},
                {"colors", a.colors}}},
              {"report", report}});
    } else {
        const auto& b = report["bounds"];
        std::cout << "suite: " << a.suite << '\n'
                  << "bounds: strings <= " << b["string_max_edges"] << " edges, trees/graphs <= " << b["max_edges"]
                  << " edges (graphs <= " << b["graph_max_vertices"] << " non-ground vertices), "
                  << b["random_trials"] << " random trials <= " << b["random_max_edges"] << " edges, colors "
                  << b["colors"].get<std::string>() << '\n'
                  << "seed: " << report["seed"] << '\n'
                  << "positions checked: " << report["positions_checked"] << '\n'
                  << "mismatches: " << report["mismatches"].size() << '\n';
        for (const auto& [k, v] : report["notes"].items()) std::cout << k << ": " << v << '\n';
        if (report.contains("timing"))
            std::cout << "elapsed: " << report["timing"]["elapsed_seconds"].get<double>() << " s\n";
        std::size_t shown = 0;
        for (const auto& m : report["mismatches"]) {
            if (++shown > 10) {
                std::cout << "...\n";
                break;
            }
            std::cout << "--- " << m["check"].get<std::string>() << ": expected " << m["expected"].get<std::string>()
                      << ", got " << m["got"].get<std::string>() << '\n'
                      << m["position"].get<std::string>();
        }
        std::cout << (passed ? "PASS" : "FAIL") << '\n';
    }
    return passed ? kExitOk : kExitMismatch;
}

struct EnumerateArgs {
    std::string shape;
    std::size_t max_edges = 0;
    std::string colors = "BR";
    std::size_t vertices = 4;
    bool json = false;
};

int run_enumerate(const EnumerateArgs& a) {
    hb_shape shape;
    if (a.shape == "strings")
        shape = HB_SHAPE_STRINGS;
    else if (a.shape == "trees")
        shape = HB_SHAPE_TREES;
    else if (a.shape == "graphs")
        shape = HB_SHAPE_GRAPHS;
    else
        throw CliError("--shape must be strings, trees or graphs");

    std::vector<std::string> texts;
    auto collect = [](const hb_position* p, void* user) -> int {
        static_cast<std::vector<std::string>*>(user)->push_back(serialize(p));
        return 0;
    };
    check(hb_enumerate(shape, a.max_edges, a.colors.c_str(), a.vertices, collect, &texts));

    if (a.json) {
        emit({{"command", "enumerate"},
              {"inputs", {{"shape", a.shape}, {"max_edges", a.max_edges}, {"colors", a.colors}, {"vertices", a.vertices}}},
              {"count", texts.size()},
              {"positions", texts}});
        return kExitOk;
    }
    for (std::size_t i = 0; i < texts.size(); ++i) std::cout << "# position " << i << '\n' << texts[i] << '\n';
    std::cout << "# count " << texts.size() << '\n';
    return kExitOk;
}

struct ExploreArgs {
    std::string target;
    std::size_t max_edges = 0;
    bool strict_green = false;
    bool json = false;
};

int run_explore(const ExploreArgs& a) {
    if (a.target != "green-strings") throw CliError("unknown explore target '" + a.target + "'");
    json rows = json::array();
    auto collect = [](const char* text, hb_outcome o, void* user) -> int {
        static_cast<json*>(user)->push_back({{"position", text}, {"misere", letter(o)}});
        return 0;
    };
    check(hb_explore_green_strings(a.max_edges, a.strict_green ? 1 : 0, collect, &rows));

    if (a.json) {
        emit({{"command", "explore"},
              {"inputs", {{"target", a.target}, {"max_edges", a.max_edges}, {"strict_green", a.strict_green}}},
              {"count", rows.size()},
              {"outcomes", rows}});
        return kExitOk;
    }
    std::size_t tally[4] = {};
    for (const auto& row : rows) {
        std::string pos = row["position"].get<std::string>();
        std::string flat;
        for (char ch : pos) flat += ch == '\n' ? ';' : ch;
        std::string o = row["misere"].get<std::string>();
        std::cout << o << "  " << flat << '\n';
        ++tally[std::string("LRPN").find(o)];
    }
    std::cout << "rows: " << rows.size() << " (L " << tally[0] << ", R " << tally[1] << ", P " << tally[2] << ", N "
              << tally[3] << ")\n";
    return kExitOk;
}

struct BenchArgs {
    std::size_t edges = 18;
    std::uint64_t seed = 42;
    std::string colors = "BRG";
    std::size_t vertices = 0;  // 0: edges + 1
    bool json = false;
};

int run_bench(const BenchArgs& a) {
    std::size_t vertices = a.vertices == 0 ? a.edges + 1 : a.vertices;
    hb_position* raw = nullptr;
    check(hb_random_position(a.edges, vertices, a.colors.c_str(), a.seed, &raw));
    PositionPtr p(raw);

    json outcomes = json::object();
    json stats = json::object();
    json timing = json::object();
    for (hb_convention conv : {HB_NORMAL, HB_MISERE}) {
        const char* name = conv == HB_NORMAL ? "normal" : "misere";
        auto start = std::chrono::steady_clock::now();
        hb_solve_result r{};
        check(hb_solve(p.get(), conv, 1, &r));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcomes[name] = letter(r.outcome);
        stats[name] = stats_json(r.stats);
        timing[name] = secs;
    }
    if (a.json) {
        emit({{"command", "bench"},
              {"inputs", {{"edges", a.edges}, {"seed", a.seed}, {"colors", a.colors}, {"vertices", vertices}}},
              {"position", serialize(p.get())},
              {"outcomes", outcomes},
              {"stats", stats},
              {"timing", timing}});
        return kExitOk;
    }
    std::cout << serialize(p.get());
    for (const char* name : {"normal", "misere"}) {
        const auto& s = stats[name];
        std::cout << name << ": outcome " << outcomes[name].get<std::string>() << ", nodes expanded "
                  << s["nodes_expanded"] << ", memo hits " << s["memo_hits"] << ", max depth " << s["max_depth"]
                  << ", " << timing[name].get<double>() << " s\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hackenbush engine: solve, classify, reduce and verify positions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hb_version()));

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Exact outcome and optimal first moves by search");
    solve_cmd->add_option("file", solve.file, "Position file")->required();
    solve_cmd->add_option("--play", solve.play, "normal or misere")->capture_default_str();
    solve_cmd->add_flag("--json", solve.json, "Machine-readable output");
    solve_cmd->add_flag("--no-memo", solve.no_memo, "Disable the transposition table");

    ClassifyArgs classify;
    auto* classify_cmd = app.add_subcommand("classify", "Misere Red-Blue outcome from grounded edge counts");
    classify_cmd->add_option("file", classify.file, "Position file")->required();
    classify_cmd->add_flag("--json", classify.json, "Machine-readable output");

    TransformArgs reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the misere instance G_m of a Red-Blue position");
    reduce_cmd->add_option("file", reduce.file, "Position file")->required();
    reduce_cmd->add_option("-o,--out", reduce.out, "Output file ('-' for stdout)")->capture_default_str();
    reduce_cmd->add_flag("--json", reduce.json, "Machine-readable output");

    TransformArgs merge;
    auto* merge_cmd = app.add_subcommand("merge-ground", "Identify all ground vertices into one");
    merge_cmd->add_option("file", merge.file, "Position file")->required();
    merge_cmd->add_option("-o,--out", merge.out, "Output file ('-' for stdout)")->capture_default_str();
    merge_cmd->add_flag("--json", merge.json, "Machine-readable output");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a claim against the search oracle");
    verify_cmd->add_option("suite", verify.suite, "theorem1, reduction, strategy or duality")
        ->required()
        ->check(CLI::IsMember({"theorem1", "reduction", "strategy", "duality"}));
    verify_cmd->add_option("--max-edges", verify.params.max_edges, "Exhaustive bound")->capture_default_str();
    verify_cmd->add_option("--random", verify.params.random_trials, "Random trials")->capture_default_str();
    verify_cmd->add_option("--rand-edges", verify.params.random_max_edges, "Edges per random trial (max)")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify.params.seed, "Seed")->capture_default_str();
    verify_cmd->add_option("--vertices", verify.params.max_graph_vertices, "Non-ground vertices for graphs")
        ->capture_default_str();
    verify_cmd->add_option("--colors", verify.colors, "Colors for the duality suite")->capture_default_str();
    verify_cmd->add_flag("--json", verify.json, "Machine-readable output");
    verify_cmd->add_flag("--timing", verify.timing, "Include wall time in the report");

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every position of a shape class");
    enumerate_cmd->add_option("--shape", enumerate.shape, "strings, trees or graphs")->required();
    enumerate_cmd->add_option("--max-edges", enumerate.max_edges, "Edge bound")->required();
    enumerate_cmd->add_option("--colors", enumerate.colors, "Color letters, e.g. BRG")->capture_default_str();
    enumerate_cmd->add_option("--vertices", enumerate.vertices, "Non-ground vertices for graphs")->capture_default_str();
    enumerate_cmd->add_flag("--json", enumerate.json, "Machine-readable output");

    ExploreArgs explore;
    auto* explore_cmd = app.add_subcommand("explore", "Outcome tables for open-problem families");
    explore_cmd->add_option("target", explore.target, "green-strings")->required();
    explore_cmd->add_option("--max-edges", explore.max_edges, "Total edge bound")->required();
    explore_cmd->add_flag("--strict-green", explore.strict_green, "Green only on grounded edges");
    explore_cmd->add_flag("--json", explore.json, "Machine-readable output");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time the solver on a seeded random position");
    bench_cmd->add_option("--edges", bench.edges, "Edge count")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "Seed")->capture_default_str();
    bench_cmd->add_option("--colors", bench.colors, "Color letters")->capture_default_str();
    bench_cmd->add_option("--vertices", bench.vertices, "Vertex budget (0: edges + 1)")->capture_default_str();
    bench_cmd->add_flag("--json", bench.json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*solve_cmd) return run_solve(solve);
        if (*classify_cmd) return run_classify(classify);
        if (*reduce_cmd) return run_transform(reduce, "reduce", hb_to_misere_instance);
        if (*merge_cmd) return run_transform(merge, "merge-ground", hb_merge_ground);
        if (*verify_cmd) return run_verify(verify);
        if (*enumerate_cmd) return run_enumerate(enumerate);
        if (*explore_cmd) return run_explore(explore);
        if (*bench_cmd) return run_bench(bench);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
