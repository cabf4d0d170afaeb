#include "sgame/compiler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sgame {

CompiledModularGame compile_to_modular(const NandCircuit& circuit) {
    if (!circuit.last_gate_input_free())
        throw std::invalid_argument(
            "compilation needs a normalized circuit: an input argument of the final "
            "assignment would yield a move that keeps the coordinate-sum residue");
    const int N = circuit.size();
    if (N <= circuit.radius)
        throw std::invalid_argument("circuit size must exceed the window radius");
    std::vector<std::vector<Vec>> raw(2 * N);
    for (int j = 1; j <= N; ++j) {
        int residue = (2 * j) % (2 * N);
        for (const CircuitArg& a : circuit.gates[j - 1]) {
            Coord k = a.index;
            if (a.kind == CircuitArg::Input)
                raw[residue].push_back({j - k, j + k});
            else
                raw[residue].push_back({j - k, j - k});
        }
    }
    std::vector<DifferenceSet> sets;
    sets.reserve(2 * N);
    for (auto& vs : raw) sets.push_back(DifferenceSet::make(2, std::move(vs)));
    CompiledModularGame out;
    out.game = ModularGame::make(2, 2 * N, std::move(sets));
    out.N = N;
    return out;
}

DifferenceSet lift_to_subtraction(const CompiledModularGame& m) {
    const int mod = m.game.modulus;
    std::vector<Vec> vectors;
    for (int j = 0; j < mod; ++j) {
        for (const Vec& a : m.game.sets[j].vectors) {
            int k = static_cast<int>(((j - a[0] - a[1]) % mod + mod) % mod);
            Vec v(2 + mod, 0);
            v[0] = a[0];
            v[1] = a[1];
            v[2 + j] += 1;
            v[2 + k] -= 1;  // k == j never happens: move sums are not 0 mod 2N
            vectors.push_back(std::move(v));
        }
    }
    return DifferenceSet::make(2 + mod, std::move(vectors));
}

Position lifted_position(int N, Coord x1, Coord x2) {
    const int mod = 2 * N;
    Position p(2 + mod, 0);
    p[0] = x1;
    p[1] = x2;
    p[2 + static_cast<int>((x1 + x2) % mod)] = 1;
    return p;
}

Position cell_position(int N, Coord t, Coord u) {
    if (t < 0 || u < -N * t || u > N * t)
        throw std::invalid_argument("cell position needs |u| <= Nt");
    return lifted_position(N, N * t + u, N * t - u);
}

std::string SimulationReport::summary() const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << " mismatched cells " << cells_wrong << "/"
        << cells_checked << " lifted " << lift_cells_wrong << "/" << lift_cells_checked
        << " intermediates " << mids_wrong << "/" << mids_checked;
    return out.str();
}

namespace {

// dense layered solve of the 2-d modular game up to a coordinate-sum bound
struct PlaneTable {
    Coord bound;
    std::vector<int> values;  // indexed x1*(bound+1)+x2, valid for x1+x2<=bound

    int at(Coord x1, Coord x2) const { return values[x1 * (bound + 1) + x2]; }
};

PlaneTable solve_plane(const ModularGame& g, Coord bound) {
    PlaneTable table;
    table.bound = bound;
    table.values.assign((bound + 1) * (bound + 1), -1);
    for (Coord s = 0; s <= bound; ++s) {
        for (Coord x1 = 0; x1 <= s; ++x1) {
            Coord x2 = s - x1;
            const DifferenceSet& d = g.sets[s % g.modulus];
            int conj = 1;
            for (const Vec& a : d.vectors) {
                Coord y1 = x1 - a[0], y2 = x2 - a[1];
                if (y1 < 0 || y2 < 0) continue;
                conj &= table.at(y1, y2);
                if (!conj) break;
            }
            table.values[x1 * (bound + 1) + x2] = 1 - conj;
        }
    }
    return table;
}

void record(SimulationReport& rep, SimMismatch mm) {
    if (rep.mismatches.size() < SimulationReport::kMismatchCap)
        rep.mismatches.push_back(mm);
}

}  // namespace

SimulationReport verify_simulation(const CellularAutomaton& ca, const NandCircuit& circuit,
                                   int t_max) {
    if (ca.alphabet != 2 || ca.blank != 1)
        throw std::invalid_argument("simulation check expects a binary automaton with blank 1");
    if (ca.radius != circuit.radius)
        throw std::invalid_argument("circuit radius must match the automaton");
    // the circuit must compute the automaton's transition
    {
        TruthTable t = table_of(circuit);
        std::vector<int> w(2 * ca.radius + 1);
        for (size_t idx = 0; idx < t.bits.size(); ++idx) {
            for (size_t pos = 0; pos < w.size(); ++pos)
                w[pos] = (idx >> (w.size() - 1 - pos)) & 1;
            if (ca.apply(w) != t.bits[idx])
                throw std::invalid_argument("circuit does not compute the automaton rule");
        }
    }
    CompiledModularGame modular = compile_to_modular(circuit);
    const int N = modular.N;
    const int r = circuit.radius;
    SimulationReport rep;
    rep.N = N;

    // automaton rows from the single-zero seed
    std::vector<Configuration> rows(t_max + 1);
    rows[0] = Configuration::from_cells(0, {0}, 1);
    for (int t = 1; t <= t_max; ++t) rows[t] = ca_step(ca, rows[t - 1]);

    const Coord bound = 2ll * N * t_max;
    PlaneTable plane = solve_plane(modular.game, bound);

    Solver lifted(lift_to_subtraction(modular));

    for (Coord t = 1; t <= t_max; ++t) {
        for (Coord u = -N * t; u <= N * t; ++u) {
            int expected = rows[t].at(u, 1);
            int got = plane.at(N * t + u, N * t - u);
            ++rep.cells_checked;
            if (got != expected) {
                ++rep.cells_wrong;
                record(rep, {SimMismatch::Cell, t, u, 0, expected, got});
            }
            int lifted_got = lifted.value(cell_position(N, t, u));
            ++rep.lift_cells_checked;
            if (lifted_got != expected) {
                ++rep.lift_cells_wrong;
                record(rep, {SimMismatch::LiftCell, t, u, 0, expected, lifted_got});
            }
        }
    }

    // intermediate rows between t and t+1: position (Nt+i+j, Nt-i+j) should
    // carry assignment s_j of the transition applied around cell i of row t
    std::vector<int> window(2 * r + 1);
    for (Coord t = 0; t + 1 <= t_max; ++t) {
        for (int j = 1; j < N; ++j) {
            for (Coord i = -(N * t + j); i <= N * t + j; ++i) {
                for (int d = -r; d <= r; ++d) window[d + r] = rows[t].at(i + d, 1);
                int expected = evaluate(circuit, window).assignments[j - 1];
                int got = plane.at(N * t + i + j, N * t - i + j);
                ++rep.mids_checked;
                if (got != expected) {
                    ++rep.mids_wrong;
                    record(rep, {SimMismatch::Mid, t, i, j, expected, got});
                }
            }
        }
    }

    rep.pass = rep.cells_wrong == 0 && rep.lift_cells_wrong == 0 && rep.mids_wrong == 0;
    return rep;
}

bool verify_lift_equivalence(const CompiledModularGame& m, Coord sum_bound) {
    PlaneTable plane = solve_plane(m.game, sum_bound);
    Solver lifted(lift_to_subtraction(m));
    for (Coord s = 0; s <= sum_bound; ++s)
        for (Coord x1 = 0; x1 <= s; ++x1) {
            Coord x2 = s - x1;
            if (lifted.value(lifted_position(m.N, x1, x2)) != plane.at(x1, x2)) return false;
        }
    return true;
}

NandCircuit circuit_for(const CellularAutomaton& ca) {
    if (ca.alphabet != 2) throw std::invalid_argument("circuit synthesis needs a binary automaton");
    if (ca.table.empty()) throw std::invalid_argument("circuit synthesis needs an explicit table");
    std::vector<uint8_t> bits(ca.table.begin(), ca.table.end());
    TruthTable t = TruthTable::make(ca.radius, std::move(bits));
    return normalize_last(synthesize_from_table(t));
}

}  // namespace sgame
