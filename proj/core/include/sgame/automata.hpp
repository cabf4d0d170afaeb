#pragma once

// One-dimensional cellular automata with finite non-blank support, Turing
// machines, and the encoding chain
//   TM  ->  CA over (state,symbol) pairs  ->  relabeled CA over 0..L-1
//       ->  binary CA with blank 1 via the run-length code
//   phi(a) = 1^{1+L-a} 0^a 1   (block length L+2).

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgame/game.hpp"  // ParseError

namespace sgame {

struct CellularAutomaton {
    int alphabet = 2;
    int blank = 0;
    int radius = 1;
    // explicit table for small radii (indexed with leftmost cell as the most
    // significant digit), or a procedural rule for wide windows
    std::vector<int> table;
    std::function<int(const std::vector<int>&)> rule;

    static CellularAutomaton from_table(int alphabet, int blank, int radius,
                                        std::vector<int> table);
    static CellularAutomaton procedural(int alphabet, int blank, int radius,
                                        std::function<int(const std::vector<int>&)> rule);

    int apply(const std::vector<int>& window) const;
    size_t window_index(const std::vector<int>& window) const;
};

struct Configuration {
    long long base = 0;       // tape coordinate of cells[0]
    std::vector<int> cells;   // trimmed: first and last entries are non-blank

    static Configuration from_cells(long long base, std::vector<int> cells, int blank);
    int at(long long u, int blank) const;
    bool operator==(const Configuration&) const = default;
};

Configuration ca_step(const CellularAutomaton& c, const Configuration& conf);
Configuration ca_run(const CellularAutomaton& c, Configuration conf, long long steps);

// --- Turing machines -------------------------------------------------------

struct TmRule {
    int state = 0, write = 0, dir = 0;  // dir: +1 right, -1 left
};

struct TuringMachine {
    // states 1..q with 1 = start, 2 = accept, 3 = reject; tape alphabet
    // 0..ell with blank ell > 1; transitions total on non-halting states
    int q = 3;
    int ell = 2;
    std::vector<TmRule> rules;  // indexed state*(ell+1)+symbol, states 1..q

    static TuringMachine make(int q, int ell, std::vector<TmRule> rules);
    const TmRule& rule(int state, int symbol) const;
    bool halted(int state) const { return state == 2 || state == 3; }
};

TuringMachine parse_tm(std::istream& in);
TuringMachine parse_tm_file(const std::string& path);

struct TmConfiguration {
    long long base = 0;
    std::vector<int> cells;  // tape contents, blank outside
    long long head = 0;
    int state = 1;

    int at(long long u, int blank) const;
};

enum class TmStatus { Accept, Reject, Running };

struct TmRunResult {
    TmStatus status = TmStatus::Running;
    TmConfiguration conf;
    long long steps = 0;
};

TmConfiguration tm_start_configuration(const TuringMachine& m, const std::string& input);
// single step; halting states are fixed points
TmConfiguration tm_step(const TuringMachine& m, const TmConfiguration& c);
TmRunResult tm_run(const TuringMachine& m, const std::string& input, long long max_steps);

// --- TM -> CA --------------------------------------------------------------

// pair symbol (state,symbol) is encoded as state*(ell+1)+symbol; the head
// cell carries its state, every other cell has state 0; blank is (0,ell)
int pair_symbol(const TuringMachine& m, int state, int symbol);

CellularAutomaton tm_to_ca(const TuringMachine& m);
Configuration encode_tm_config(const TuringMachine& m, const TmConfiguration& c);
// recovers (state, head, tape); fails on configurations without exactly one head
std::optional<TmConfiguration> decode_tm_config(const TuringMachine& m,
                                                const Configuration& conf);

// generic alphabet relabeling: pi must be a bijection with pi[blank] = 0
CellularAutomaton relabel_ca(const CellularAutomaton& c, const std::vector<int>& pi);

// the relabeling used by the reduction pipeline: pi[(0,ell)] = 0,
// pi[(1,ell)] = 1, pi[(0,1)] = L-1, remaining symbols in canonical order
std::vector<int> standard_relabeling(const TuringMachine& m);

// --- binary encoding -------------------------------------------------------

std::vector<int> phi_block(int a, int L);                      // length L+2
std::vector<int> phi_encode(const std::vector<int>& word, int L);
// encode a full configuration: cell u maps to bits u(L+2)..u(L+2)+L+1
Configuration phi_encode_config(const Configuration& conf, int L);

struct Restored {
    int symbols[3];  // c(q-1), c(q), c(q+1)
    int offset;      // position k of the center bit inside its block
};
struct AllBlank {};
struct Unrestorable {};
using RestoreResult = std::variant<AllBlank, Restored, Unrestorable>;

// window has 2r+1 bits with r = 2(L+2); decodes the three symbols around the
// center bit by anchoring on a zero run whose right end is visible (runs end
// exactly at block offset L)
RestoreResult restore_window(const std::vector<int>& window, int L);

// binary CA with blank 1 and radius 2(L+2) simulating a radius-1 CA with
// blank 0 through the phi code
CellularAutomaton ca_to_2ca(const CellularAutomaton& c);

// rule-table text format: one line per window, '<symbols> -> <symbol>';
// radius and alphabet are inferred, the table must be complete
CellularAutomaton parse_rule_table(std::istream& in);
CellularAutomaton parse_rule_file(const std::string& path);

std::string format_configuration(const Configuration& conf, int blank,
                                 long long lo, long long hi);

}  // namespace sgame
