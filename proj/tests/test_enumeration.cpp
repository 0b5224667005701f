#include <doctest.h>

#include <fstream>
#include <sstream>

#include "reduction.hpp"
#include "verification.hpp"
#include "test_support.hpp"

using namespace testing;

namespace {

const std::vector<Color> kB{Color::Blue};
const std::vector<Color> kBR{Color::Blue, Color::Red};
const std::vector<Color> kBRG{Color::Blue, Color::Red, Color::Green};

std::vector<std::size_t> counts_by_size(ShapeClass shape, std::size_t max_edges, const std::vector<Color>& colors) {
    std::vector<std::size_t> out(max_edges + 1, 0);
    for_each_position(shape, max_edges, colors, [&](const Position& p) { ++out[p.edge_count()]; });
    return out;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(HACKENBUSH_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("string enumeration examples") {
    auto one = enumerate_positions(ShapeClass::Strings, 1, kBR);
    REQUIRE(one.size() == 3);
    CHECK(one[0].empty());
    CHECK(one[1] == make({0}, {{0, 0, 1, 'B'}}));
    CHECK(one[2] == make({0}, {{0, 0, 1, 'R'}}));

    auto zero = enumerate_positions(ShapeClass::Strings, 0, kBRG);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    auto two = enumerate_positions(ShapeClass::Strings, 2, kB);
    REQUIRE(two.size() == 4);
    CHECK(two[0].empty());
    CHECK(two[1] == make({0}, {{0, 0, 1, 'B'}}));
    CHECK(two[2] == make({0, 2}, {{0, 0, 1, 'B'}, {1, 2, 3, 'B'}}));
    CHECK(two[3] == make({0}, {{0, 0, 1, 'B'}, {1, 1, 2, 'B'}}));
}

TEST_CASE("string collection counts match the Euler transform") {
    for (std::size_t colors = 1; colors <= 3; ++colors) {
        std::vector<Color> set(kBRG.begin(), kBRG.begin() + static_cast<long>(colors));
        auto expected = oracle::string_collection_counts(7, colors);
        auto got = counts_by_size(ShapeClass::Strings, 7, set);
        for (std::size_t k = 0; k <= 7; ++k) CHECK(got[k] == expected[k]);
    }
    // Frozen from the recurrence: 1 colour gives the partition numbers.
    CHECK(oracle::string_collection_counts(7, 1) == std::vector<std::uint64_t>{1, 1, 2, 3, 5, 7, 11, 15});
}

TEST_CASE("tree enumeration counts k! * c^k") {
    auto got = counts_by_size(ShapeClass::Trees, 5, kBR);
    std::uint64_t fact = 1, pow = 1;
    for (std::size_t k = 0; k <= 5; ++k) {
        if (k > 0) {
            fact *= k;
            pow *= 2;
        }
        CHECK(got[k] == fact * pow);
    }
}

TEST_CASE("graph enumeration") {
    std::size_t n = 0;
    bool saw_path = false, saw_loop = false, saw_multi = false;
    for_each_position(ShapeClass::Graphs, 3, kBR, [&](const Position& p) {
        ++n;
        CHECK(p.ground() == std::set<VertexId>{0});
        CHECK(is_pruned(p.ground(), p.edges()));
        for (const Edge& e : p.edges()) CHECK(std::max(e.u, e.v) <= 3);
        saw_path |= p == blue_red_path();
        for (const Edge& e : p.edges()) saw_loop |= e.is_loop();
        if (p.edge_count() == 2 && p.edges()[0].u == p.edges()[1].u && p.edges()[0].v == p.edges()[1].v &&
            !p.edges()[0].is_loop())
            saw_multi = true;
    });
    CHECK(saw_path);
    CHECK(saw_loop);
    CHECK(saw_multi);

    // Vertex bound caps the labels.
    for_each_position(ShapeClass::Graphs, 4, kB, [](const Position& p) {
        for (const Edge& e : p.edges()) CHECK(std::max(e.u, e.v) <= 2);
    }, 2);
}

TEST_CASE("enumeration is deterministic and emits valid positions") {
    for (auto shape : {ShapeClass::Strings, ShapeClass::Trees, ShapeClass::Graphs}) {
        auto a = enumerate_positions(shape, 3, kBRG);
        auto b = enumerate_positions(shape, 3, kBRG);
        CHECK(a == b);
        for (const auto& p : a) {
            CHECK_FALSE(p.ground().empty());
            CHECK(is_pruned(p.ground(), p.edges()));
        }
    }
    CHECK_THROWS_AS(enumerate_positions(ShapeClass::Strings, 2, {}), Error);
}

TEST_CASE("random_position") {
    CHECK(random_position(9, 5, kBRG, 1234) == random_position(9, 5, kBRG, 1234));
    CHECK(random_position(0, 3, kBR, 99).empty());
    CHECK_THROWS_AS(random_position(3, 0, kBR, 1), Error);

    Position p = random_position(8, 6, kBR, 42);
    CHECK(p.edge_count() == 8);
    CHECK(p.vertices().size() <= 6);
    CHECK_FALSE(p.has_green());
    CHECK(serialize_position(p) == read_golden("random_8_6_BR_42.hkb"));
}

TEST_CASE("SplitMix64 reference values") {
    // Reference outputs for seed 1234567.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("verify_theorem1 small bounds") {
    SuiteParams zero;
    zero.max_edges = 0;
    auto r0 = verify_theorem1(zero);
    CHECK(r0.positions_checked == 1);
    CHECK(r0.passed());

    SuiteParams two;
    two.max_edges = 2;
    bool saw_path = false;
    for_each_suite_position(two, kBR, [&](const Position& p) { saw_path |= p == blue_red_path(); });
    CHECK(saw_path);
    auto r2 = verify_theorem1(two);
    CHECK(r2.passed());
    CHECK(r2.positions_checked > 10);
}

TEST_CASE("verify_reduction small bounds") {
    SuiteParams params;
    params.max_edges = 2;
    params.random_trials = 20;
    params.random_max_edges = 5;
    auto r = verify_reduction(params);
    CHECK(r.passed());

    Position blue = make({0}, {{0, 0, 1, 'B'}});
    CHECK(oracle_outcome(to_misere_instance(blue), PlayConvention::Misere) == 'L');
    CHECK(oracle_outcome(merge_ground(blue), PlayConvention::Normal) == 'L');
    CHECK(outcome(to_misere_instance(blue), PlayConvention::Misere) == OutcomeClass::L);
}

TEST_CASE("reports are pure functions of their parameters") {
    SuiteParams params;
    params.max_edges = 2;
    params.random_trials = 30;
    params.random_max_edges = 6;
    params.seed = 7;
    auto a = verify_proof_strategy(params);
    auto b = verify_proof_strategy(params);
    CHECK(a.positions_checked == b.positions_checked);
    CHECK(a.notes == b.notes);
    CHECK(a.passed());
    auto d = verify_duality(params, kBRG);
    CHECK(d.passed());
}

TEST_CASE("explore_green_strings") {
    auto one = explore_green_strings(1, false);
    REQUIRE(one.size() == 2);
    CHECK(one[0].position == "ground 0\n");
    CHECK(one[0].misere == OutcomeClass::N);
    CHECK(one[1].position == "ground 0\nedge 0 0 1 G\n");
    CHECK(one[1].misere == OutcomeClass::P);

    Position green_blue = make({0}, {{0, 0, 1, 'G'}, {1, 1, 2, 'B'}});
    CHECK(oracle_outcome(green_blue, PlayConvention::Misere) == 'L');
    bool found = false;
    for (const auto& row : explore_green_strings(2, false))
        if (row.position == serialize_position(green_blue)) {
            found = true;
            CHECK(row.misere == OutcomeClass::L);
        }
    CHECK(found);

    auto three = explore_green_strings(3, false);
    std::size_t count = 0;
    for_each_string_collection(3, {Color::Green}, kBRG, [&](const Position&) { ++count; });
    CHECK(three.size() == count);
    CHECK(std::is_sorted(three.begin(), three.end(),
                         [](const ExploreRow& a, const ExploreRow& b) { return a.position < b.position; }));
    auto again = explore_green_strings(3, false);
    for (std::size_t i = 0; i < three.size(); ++i) {
        CHECK(three[i].position == again[i].position);
        CHECK(three[i].misere == again[i].misere);
    }

    for (const auto& row : explore_green_strings(4, true)) {
        Position p = parse_position(row.position);
        for (const Edge& e : p.edges()) CHECK((e.color == Color::Green) == p.is_grounded(e));
    }
}
