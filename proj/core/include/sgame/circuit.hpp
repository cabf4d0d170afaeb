#pragma once

// Straight-line circuits over the n-ary NAND gate [p1,...,pn] = !(p1 & ... & pn),
// the gate matching the P/N value recurrence.  Inputs are a window
// u_{-r},...,u_r; assignments s_1..s_N may reference inputs and earlier
// assignments; the output is s_N.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgame/game.hpp"  // ParseError

namespace sgame {

struct CircuitArg {
    enum Kind { Input, Assign } kind;
    int index;  // Input: -r..r; Assign: 1-based assignment number

    bool operator==(const CircuitArg&) const = default;
};

struct NandCircuit {
    int radius = 0;
    std::vector<std::vector<CircuitArg>> gates;  // gates[j-1] = args of s_j

    static NandCircuit make(int radius, std::vector<std::vector<CircuitArg>> gates);
    int size() const { return static_cast<int>(gates.size()); }
    bool last_gate_input_free() const;
};

struct CircuitEval {
    std::vector<int> assignments;  // value of s_1..s_N
    int output;                    // value of s_N
};

// window holds u_{-r}..u_r left to right
CircuitEval evaluate(const NandCircuit& c, const std::vector<int>& window);

struct TruthTable {
    int radius = 0;
    std::vector<uint8_t> bits;  // size 2^(2r+1)

    static TruthTable make(int radius, std::vector<uint8_t> bits);
    // window index: leftmost input u_{-r} is the highest bit
    static size_t window_index(const std::vector<int>& window);
    int operator()(const std::vector<int>& window) const;
    int width() const { return 2 * radius + 1; }
};

// deterministic sum-of-products synthesis; window width capped at 16 inputs
NandCircuit synthesize_from_table(const TruthTable& t);

// prepends double-negation gates for every input and redirects later input
// references through them, so the final assignment references no input and
// every move in the compiled game changes the coordinate-sum residue;
// grows the circuit by 2(2r+1) assignments
NandCircuit normalize_last(const NandCircuit& c);

// exhaustive functional equality on all 2^(2r+1) windows (width <= 16)
bool same_function(const NandCircuit& a, const NandCircuit& b);
TruthTable table_of(const NandCircuit& c);

// text format: 'radius <r>' then lines 's<j> = [ arg , ... ]' with args
// 'u<i>' or 's<i>'
NandCircuit parse_circuit(std::istream& in);
std::string serialize_circuit(const NandCircuit& c);

}  // namespace sgame
