#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "sgame/game.hpp"

using namespace sgame;

namespace {

// definition-based oracle: a position is N iff some move reaches a P position
int naive_value(const ModularGame& g, const Position& x, std::map<Vec, int>& memo) {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    bool wins = false;
    for (const Position& y : legal_moves(g, x))
        if (naive_value(g, y, memo) == 0) wins = true;
    return memo[x] = wins ? 1 : 0;
}

ModularGame random_game(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim_pick(1, 3), size_pick(1, 5), entry(-3, 3);
    int dim = dim_pick(rng);
    int count = size_pick(rng);
    std::vector<Vec> vs;
    while (static_cast<int>(vs.size()) < count) {
        Vec v(dim);
        Coord sum = 0;
        for (Coord& c : v) {
            c = entry(rng);
            sum += c;
        }
        if (sum > 0) vs.push_back(v);
    }
    return ModularGame::plain(DifferenceSet::make(dim, vs));
}

}  // namespace

TEST_CASE("difference set validation") {
    CHECK_THROWS_AS(DifferenceSet::make(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(DifferenceSet::make(2, {{1}}), std::invalid_argument);
    // nonpositive coordinate sum is not a legal move vector
    CHECK_THROWS_AS(DifferenceSet::make(2, {{1, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(DifferenceSet::make(1, {{0}}), std::invalid_argument);

    DifferenceSet d = DifferenceSet::make(2, {{2, -1}, {0, 1}, {2, -1}});
    CHECK(d.vectors.size() == 2);  // duplicates collapse
    CHECK(d.vectors[0] == Vec{0, 1});
    CHECK(d.vectors[1] == Vec{2, -1});
}

TEST_CASE("legal moves stay in the orthant") {
    DifferenceSet d = DifferenceSet::make(2, {{1, 0}, {2, -1}});
    auto moves = legal_moves(d, {1, 0});
    REQUIRE(moves.size() == 1);  // (2,-1) would need x2 >= ... x1 >= 2
    CHECK(moves[0] == Vec{0, 0});

    auto from_21 = legal_moves(d, {2, 1});
    CHECK(from_21.size() == 2);

    CHECK_THROWS_AS(legal_moves(d, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(legal_moves(d, {1}), std::invalid_argument);
}

TEST_CASE("origin and empty games are P") {
    DifferenceSet d = DifferenceSet::make(3, {{1, 1, -1}});
    CHECK(position_value(d, {0, 0, 0}) == 0);
    // no legal move anywhere along the axes
    CHECK(position_value(d, {5, 0, 0}) == 0);
}

TEST_CASE("one-pile take-1..3 is the mod-4 game") {
    DifferenceSet d = DifferenceSet::make(1, {{1}, {2}, {3}});
    Solver solver(d);
    for (Coord n = 0; n <= 40; ++n) CHECK(solver.value({n}) == (n % 4 == 0 ? 0 : 1));
}

TEST_CASE("modular residue selects the move set") {
    // residue 0 takes 1 or 2, residue 1 takes only 1: values 0,1,0,1,...
    ModularGame g = ModularGame::make(
        1, 2,
        {DifferenceSet::make(1, {{1}, {2}}), DifferenceSet::make(1, {{1}})});
    Solver solver(g);
    // n=1: only move 1->0 (P) so N; n=2: residue 0 moves to 1 (N) and 0 (P) so N;
    // n=3: residue 1 moves to 2 (N) only, so P
    CHECK(solver.value({0}) == 0);
    CHECK(solver.value({1}) == 1);
    CHECK(solver.value({2}) == 1);
    CHECK(solver.value({3}) == 0);
    CHECK(solver.value({4}) == 1);

    CHECK(sum_residue({3}, 2) == 1);
    CHECK(sum_residue({1, -3}, 4) == 2);  // canonical representative of -2
}

TEST_CASE("solver equals the naive enumerator on random games") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 30; ++trial) {
        ModularGame g = random_game(rng);
        ValueTable table = solve_up_to_sum(g, 10);
        std::map<Vec, int> memo;
        for (const auto& [pos, val] : table.values)
            CHECK(val == naive_value(g, pos, memo));
    }
}

TEST_CASE("value table is self consistent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        ValueTable table = solve_up_to_sum(random_game(rng), 9);
        CHECK(table.self_consistent());
    }
}

TEST_CASE("1-d periodicity reports") {
    SUBCASE("take-1 alternates") {
        auto rep = find_period_1d(DifferenceSet::make(1, {{1}}), 100);
        REQUIRE(rep);
        CHECK(rep->preperiod == 0);
        CHECK(rep->period == 2);
    }
    SUBCASE("take-1..3 has period 4") {
        auto rep = find_period_1d(DifferenceSet::make(1, {{1}, {2}, {3}}), 200);
        REQUIRE(rep);
        CHECK(rep->preperiod == 0);
        CHECK(rep->period == 4);
    }
    SUBCASE("take-1-or-4 has period 5") {
        auto rep = find_period_1d(DifferenceSet::make(1, {{1}, {4}}), 200);
        REQUIRE(rep);
        CHECK(rep->preperiod == 0);
        CHECK(rep->period == 5);
    }
    SUBCASE("horizon too small yields nothing") {
        // take-{2,5,6} has period 11: the certificate needs the repeated
        // window fully inside the horizon, here from 16 on
        DifferenceSet d = DifferenceSet::make(1, {{2}, {5}, {6}});
        CHECK(!find_period_1d(d, 14));
        auto rep = find_period_1d(d, 16);
        REQUIRE(rep);
        CHECK(rep->preperiod == 0);
        CHECK(rep->period == 11);
        // horizons without room for even one window are rejected
        CHECK_THROWS_AS(find_period_1d(DifferenceSet::make(1, {{1}, {2}, {3}}), 6),
                        std::invalid_argument);
    }
    SUBCASE("certified period continues to the horizon") {
        DifferenceSet d = DifferenceSet::make(1, {{2}, {5}, {6}});
        auto rep = find_period_1d(d, 500);
        REQUIRE(rep);
        auto vals = values_1d(d, 500);
        for (Coord n = rep->preperiod; n + rep->period <= 500; ++n)
            CHECK(vals[n] == vals[n + rep->period]);
    }
}

TEST_CASE("parsing and serialization round trip") {
    std::string text = "# comment\ndim 2\n1 0\n-1 2\n";
    std::istringstream in(text);
    DifferenceSet d = parse_difference_set(in);
    CHECK(d.dim == 2);
    CHECK(d.vectors.size() == 2);

    std::istringstream again(serialize_difference_set(d));
    DifferenceSet d2 = parse_difference_set(again);
    CHECK(d.vectors == d2.vectors);
}

TEST_CASE("modular game file format") {
    std::string text = "dim 1\nmod 2\nset 0\n1\n2\nset 1\n1\n";
    std::istringstream in(text);
    ModularGame g = parse_modular_game(in);
    CHECK(g.modulus == 2);
    CHECK(g.sets[0].vectors.size() == 2);
    CHECK(g.sets[1].vectors.size() == 1);
}

TEST_CASE("parse errors carry ParseError") {
    std::istringstream bad1("dim x\n");
    CHECK_THROWS_AS(parse_difference_set(bad1), ParseError);
    std::istringstream bad2("dim 2\n1\n");
    CHECK_THROWS_AS(parse_difference_set(bad2), ParseError);
    std::istringstream bad3("dim 1\nmod 2\nset 5\n1\n");
    CHECK_THROWS_AS(parse_modular_game(bad3), ParseError);
}

TEST_CASE("position text forms") {
    CHECK(parse_position("4", 1) == Vec{4});
    CHECK(parse_position("(1,2)", 2) == Vec{1, 2});
    CHECK(parse_position("1, 2, 3", 3) == Vec{1, 2, 3});
    CHECK(format_position({1, 2}) == "(1,2)");
    CHECK_THROWS_AS(parse_position("1,2", 3), ParseError);
    CHECK_THROWS_AS(parse_position("x", 1), ParseError);
}

TEST_CASE("solver reuse is consistent with fresh solves") {
    DifferenceSet d = DifferenceSet::make(2, {{1, 0}, {0, 1}, {2, -1}});
    Solver reused(d);
    for (Coord x1 = 0; x1 <= 6; ++x1)
        for (Coord x2 = 0; x2 <= 6; ++x2)
            CHECK(reused.value({x1, x2}) == position_value(d, {x1, x2}));
}
