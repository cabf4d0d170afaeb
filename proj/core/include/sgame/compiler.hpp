#pragma once

// Compiles a binary CA (blank 1) given as a NAND circuit into games whose
// values replay the automaton: first a 2-dimensional modular game with
// modulus 2N (N = circuit size), then a (2N+2)-dimensional plain subtraction
// game.  Time advances along (1,1): the cell at time t, coordinate u sits at
// position (Nt+u, Nt-u); the extra 2N coordinates of the lifted game carry a
// one-hot tracker of the coordinate-sum residue.

#include <string>
#include <vector>

#include "sgame/automata.hpp"
#include "sgame/circuit.hpp"
#include "sgame/game.hpp"

namespace sgame {

struct CompiledModularGame {
    ModularGame game;  // dimension 2, modulus 2N, odd residues empty
    int N = 0;         // residue 2j holds the moves of assignment s_j (s_N -> 0)
};

// requires a normalized circuit (input-free final assignment); an input
// argument u_k of s_j contributes the vector (j-k, j+k) at residue 2j, an
// assignment argument s_k contributes (j-k, j-k)
CompiledModularGame compile_to_modular(const NandCircuit& circuit);

// layout (x1, x2, m_0..m_{2N-1}); every modular vector (a1,a2) at residue j
// lifts to (a1,a2,0..) + e_j - e_k with k = j-a1-a2 mod 2N
DifferenceSet lift_to_subtraction(const CompiledModularGame& m);

// hot position for a plane point: one-hot at the residue of x1+x2
Position lifted_position(int N, Coord x1, Coord x2);
// the position whose value should equal cell u at time t: (Nt+u, Nt-u, m_0=1)
Position cell_position(int N, Coord t, Coord u);

struct SimMismatch {
    enum Kind { Cell, LiftCell, Mid } kind;
    Coord t = 0;
    Coord u = 0;   // cell coordinate, or window center i for Mid
    int j = 0;     // assignment index for Mid
    int expected = 0;
    int got = 0;
};

struct SimulationReport {
    int N = 0;
    bool pass = false;
    long long cells_checked = 0, cells_wrong = 0;
    long long lift_cells_checked = 0, lift_cells_wrong = 0;
    long long mids_checked = 0, mids_wrong = 0;
    std::vector<SimMismatch> mismatches;  // capped
    static constexpr size_t kMismatchCap = 64;

    std::string summary() const;
};

// checks, for 1 <= t <= t_max, that modular-game values match the automaton
// cells on |u| <= Nt (and the lifted game likewise), and that positions
// between consecutive rows carry the intermediate assignment values:
// value(Nt+i+j, Nt-i+j) = s_j on the window c(t, i-r..i+r), 1 <= j < N.
// the circuit must compute the automaton's transition (verified exhaustively).
SimulationReport verify_simulation(const CellularAutomaton& ca, const NandCircuit& circuit,
                                   int t_max);

// dual-solve check that the lifted game agrees with the modular one on every
// hot position with plane sum <= sum_bound
bool verify_lift_equivalence(const CompiledModularGame& m, Coord sum_bound);

// convenience: synthesize + normalize the transition circuit of a binary
// small-radius automaton given by its table
NandCircuit circuit_for(const CellularAutomaton& ca);

}  // namespace sgame
