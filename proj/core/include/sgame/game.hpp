#pragma once

// Vector subtraction games: a position is a d-dimensional vector of
// non-negative integers, a move subtracts a difference vector with positive
// coordinate sum.  In the modular variant the applicable difference set is
// selected by the residue of the position's coordinate sum.  Values are the
// P/N bit: 0 = previous player wins (no-move positions included), 1 = next
// player wins.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sgame {

using Coord = long long;
using Vec = std::vector<Coord>;
using Position = Vec;

// value of a position: 0 = P (player to move loses), 1 = N
using GameValue = int;

struct DifferenceSet {
    int dim = 0;
    std::vector<Vec> vectors;  // sorted lexicographically, deduplicated

    // validates dimensions and positive sums, sorts and deduplicates
    static DifferenceSet make(int dim, std::vector<Vec> vectors);

    bool empty() const { return vectors.empty(); }
};

struct ModularGame {
    int dim = 0;
    int modulus = 1;
    std::vector<DifferenceSet> sets;  // indexed by residue 0..modulus-1

    static ModularGame make(int dim, int modulus, std::vector<DifferenceSet> sets);
    static ModularGame plain(DifferenceSet d);  // modulus-1 wrapper

    const DifferenceSet& set_for(const Position& x) const;
};

// residue of the coordinate sum, canonical representative in 0..modulus-1
int sum_residue(const Position& x, int modulus);
Coord coord_sum(const Position& x);

std::vector<Position> legal_moves(const ModularGame& g, const Position& x);
std::vector<Position> legal_moves(const DifferenceSet& d, const Position& x);

struct VecHash {
    size_t operator()(const Vec& v) const {
        size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
        for (Coord c : v) {
            h ^= static_cast<size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// memoized solver; safe to reuse across queries on the same game
class Solver {
public:
    explicit Solver(ModularGame g);
    explicit Solver(DifferenceSet d);

    GameValue value(const Position& x);
    const ModularGame& game() const { return game_; }
    size_t positions_evaluated() const { return memo_.size(); }

private:
    ModularGame game_;
    std::unordered_map<Vec, GameValue, VecHash> memo_;
};

GameValue position_value(const ModularGame& g, const Position& x);
GameValue position_value(const DifferenceSet& d, const Position& x);

struct ValueTable {
    ModularGame game;
    Coord bound = 0;  // maximum coordinate sum covered
    std::unordered_map<Vec, GameValue, VecHash> values;

    GameValue at(const Position& x) const;
    // recomputes every stored entry from its successors; true if consistent
    bool self_consistent() const;
};

// solves every position with coordinate sum <= sum_bound (small dimensions)
ValueTable solve_up_to_sum(const ModularGame& g, Coord sum_bound);
ValueTable solve_up_to_sum(const DifferenceSet& d, Coord sum_bound);

struct PeriodReport {
    Coord preperiod = 0;
    Coord period = 0;
};

// 1-d only: smallest period q (then smallest preperiod p0) such that
// value(n+q) = value(n) for all p0 <= n <= horizon-q, certified by a repeated
// window of width max(D).  nullopt if no certified repeat within the horizon.
std::optional<PeriodReport> find_period_1d(const DifferenceSet& d, Coord horizon);

// dense 1-d value sequence, index 0..horizon
std::vector<GameValue> values_1d(const DifferenceSet& d, Coord horizon);

// --- text formats ---------------------------------------------------------
// difference set:    dim <d>            modular game:  dim <d>
//                    <d integers>                      mod <k>
//                    ...                               set <r>
//                                                      <d integers> ...
// '#' starts a comment anywhere; blank lines ignored.

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DifferenceSet parse_difference_set(std::istream& in);
ModularGame parse_modular_game(std::istream& in);
// sniffs for a "mod" line and dispatches; plain sets load with modulus 1
ModularGame parse_game_file(const std::string& path);

std::string serialize_difference_set(const DifferenceSet& d);

std::string format_position(const Position& x);
Position parse_position(const std::string& text, int dim);

}  // namespace sgame
