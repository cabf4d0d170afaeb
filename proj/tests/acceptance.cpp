// Acceptance run for the toolkit.  Prints one line per criterion,
//
//   [PASS|FAIL] <n>. <description> (<elapsed>s)
//
// optionally followed by indented context lines, and exits with the number of
// failed criteria.  Criterion 5 documents a known divergence: the game
// positions on the light-cone boundary have no legal moves, so their values
// cannot replay blank automaton cells there (see README, Known limitation).

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sgame/automata.hpp"
#include "sgame/circuit.hpp"
#include "sgame/compiler.hpp"
#include "sgame/game.hpp"
#include "sgame/kayles.hpp"
#include "sgame/parallel.hpp"

using namespace sgame;

namespace {

int g_failed = 0;

void criterion(int n, const char* desc, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note += std::string("  unexpected error: ") + e.what() + "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s (%.1fs)\n", ok ? "PASS" : "FAIL", n, desc, secs);
    if (!note.empty()) std::fputs(note.c_str(), stdout);
    std::fflush(stdout);
    if (!ok) ++g_failed;
}

// ---- 1. solver vs a direct recomputation ----------------------------------

int recompute(const DifferenceSet& d, const Vec& x, std::map<Vec, int>& memo) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    int value = 0;
    for (const Vec& v : d.vectors) {
        Vec y(x.size());
        bool feasible = true;
        for (size_t i = 0; i < x.size(); ++i) {
            y[i] = x[i] - v[i];
            if (y[i] < 0) feasible = false;
        }
        if (feasible && recompute(d, y, memo) == 0) {
            value = 1;
            break;
        }
    }
    memo[x] = value;
    return value;
}

template <typename F>
void each_position(int dim, Coord sum_bound, Vec& cur, F&& f) {
    if (static_cast<int>(cur.size()) == dim) {
        f(cur);
        return;
    }
    for (Coord c = 0; c <= sum_bound; ++c) {
        cur.push_back(c);
        each_position(dim, sum_bound - c, cur, f);
        cur.pop_back();
    }
}

bool random_games(std::string&) {
    std::mt19937 rng(617394);
    std::uniform_int_distribution<int> dim_of(1, 3), count_of(1, 5), entry(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = dim_of(rng);
        int count = count_of(rng);
        std::vector<Vec> vectors;
        while (static_cast<int>(vectors.size()) < count) {
            Vec v(dim);
            Coord sum = 0;
            for (Coord& c : v) {
                c = entry(rng);
                sum += c;
            }
            if (sum > 0) vectors.push_back(std::move(v));
        }
        DifferenceSet d = DifferenceSet::make(dim, std::move(vectors));
        Solver solver(ModularGame::plain(d));
        std::map<Vec, int> memo;
        bool all = true;
        Vec cur;
        each_position(dim, 12, cur, [&](const Vec& x) {
            if (solver.value(x) != recompute(d, x, memo)) all = false;
        });
        if (!all) return false;
    }
    return true;
}

// ---- 2. periodicity reports ------------------------------------------------

bool periods(std::string&) {
    DifferenceSet d123 = DifferenceSet::make(1, {{1}, {2}, {3}});
    auto r1 = find_period_1d(d123, 2000);
    if (!r1 || r1->preperiod != 0 || r1->period != 4) return false;
    std::vector<GameValue> v1 = values_1d(d123, 200);
    for (Coord n = 0; n <= 200; ++n)
        if (v1[n] != (n % 4 == 0 ? 0 : 1)) return false;

    DifferenceSet d14 = DifferenceSet::make(1, {{1}, {4}});
    auto r2 = find_period_1d(d14, 2000);
    if (!r2 || r2->preperiod != 0 || r2->period != 5) return false;
    std::vector<GameValue> v2 = values_1d(d14, 200);
    for (Coord n = 0; n <= 200; ++n) {
        int expect = (n % 5 == 0 || n % 5 == 2) ? 0 : 1;
        if (v2[n] != expect) return false;
    }
    return true;
}

// ---- 3. pebble placement through the vector reduction ----------------------

bool kayles_reductions(std::string& note) {
    long long graphs = 0;
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all_edges.push_back({i, j});
        for (unsigned mask = 1; mask < (1u << all_edges.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (size_t e = 0; e < all_edges.size(); ++e)
                if (mask & (1u << e)) edges.push_back(all_edges[e]);
            SimpleGraph g = SimpleGraph::make(n, edges);
            if (g.has_isolated_vertex()) continue;
            ++graphs;
            KaylesReduction red = kayles_to_msg(g);
            Solver solver(ModularGame::plain(red.moves));
            if (solver.value(red.start) != kayles_value(g)) {
                std::ostringstream os;
                os << "  first failure: " << n << " vertices, edge mask " << mask << "\n";
                note += os.str();
                return false;
            }
        }
    }
    std::ostringstream os;
    os << "  " << graphs << " graphs checked\n";
    note += os.str();
    return true;
}

// ---- 4. circuit synthesis over every blank-preserving table ----------------

bool synthesis(std::string&) {
    for (int bits = 0; bits < 256; ++bits) {
        if (!(bits & 1)) continue;  // all-blank window must stay blank
        std::vector<uint8_t> table(8);
        for (int w = 0; w < 8; ++w) table[w] = (bits >> (7 - w)) & 1;
        TruthTable t = TruthTable::make(1, table);
        NandCircuit c = normalize_last(synthesize_from_table(t));
        if (!c.last_gate_input_free()) return false;
        if (c.size() <= c.radius) return false;
        TruthTable back = table_of(c);
        if (back.bits != t.bits) return false;
    }
    return true;
}

// ---- 5. replaying automaton cells as game values ----------------------------

bool simulation_claims(std::string& note) {
    bool ok = true;
    for (const char* name : {"xor_offset.rule", "and3.rule", "const1.rule"}) {
        CellularAutomaton ca = parse_rule_file(std::string(SGAME_DATA_DIR "/") + name);
        NandCircuit circuit = circuit_for(ca);
        CompiledModularGame cm = compile_to_modular(circuit);
        SimulationReport rep = verify_simulation(ca, circuit, 6);
        bool lift_ok = verify_lift_equivalence(cm, 12ll * cm.N);
        std::ostringstream os;
        os << "  " << name << ": N=" << cm.N << " " << rep.summary()
           << (lift_ok ? "; lifted and planar values agree" : "; LIFT DISAGREES") << "\n";
        note += os.str();
        ok = ok && rep.pass && lift_ok;
    }
    if (!ok)
        note +=
            "  the outermost positions of each row (|u| = N*t) have no legal moves,\n"
            "  so their value is 0 while the automaton keeps those cells blank; for\n"
            "  two of the rules later rows diverge further in from the edge\n"
            "  (see README, Known limitation)\n";
    return ok;
}

// ---- 6. machine / automaton / binary-code lockstep --------------------------

Configuration relabeled_config(const TuringMachine& m, const TmConfiguration& c,
                               const std::vector<int>& pi) {
    Configuration conf = encode_tm_config(m, c);
    for (int& cell : conf.cells) cell = pi[cell];
    return Configuration::from_cells(conf.base, conf.cells, 0);
}

bool encodings(std::string&) {
    for (const char* name : {"parity.tm", "shuttle.tm"}) {
        TuringMachine m = parse_tm_file(std::string(SGAME_DATA_DIR "/") + name);
        CellularAutomaton pair_ca = tm_to_ca(m);
        for (const char* input : {"11", "0101"}) {
            TmConfiguration tc = tm_start_configuration(m, input);
            Configuration cc = encode_tm_config(m, tc);
            for (int t = 0; t < 50; ++t) {
                tc = tm_step(m, tc);
                cc = ca_step(pair_ca, cc);
                if (!(encode_tm_config(m, tc) == cc)) return false;
            }
        }

        // run-length binary code tracks the relabeled automaton
        std::vector<int> pi = standard_relabeling(m);
        CellularAutomaton re = relabel_ca(pair_ca, pi);
        int L = (m.q + 1) * (m.ell + 1);
        CellularAutomaton bin = ca_to_2ca(re);
        Configuration rc = relabeled_config(m, tm_start_configuration(m, "11"), pi);
        Configuration bits = phi_encode_config(rc, L);
        for (int t = 0; t < 10; ++t) {
            rc = ca_step(re, rc);
            bits = ca_step(bin, bits);
            if (!(bits == phi_encode_config(rc, L))) return false;
        }
    }

    // a small three-symbol automaton exercises the same code longer
    std::vector<int> table(27);
    for (int w = 0; w < 27; ++w) table[w] = (w / 9 + w / 3 % 3 + w % 3) % 3;
    CellularAutomaton toy = CellularAutomaton::from_table(3, 0, 1, table);
    CellularAutomaton bin = ca_to_2ca(toy);
    Configuration conf = Configuration::from_cells(0, {1, 0, 2}, 0);
    Configuration bits = phi_encode_config(conf, 3);
    for (int t = 0; t < 20; ++t) {
        conf = ca_step(toy, conf);
        bits = ca_step(bin, bits);
        if (!(bits == phi_encode_config(conf, 3))) return false;
    }
    return true;
}

// ---- 7. window restoration --------------------------------------------------

bool restoration(std::string&) {
    for (int L = 2; L <= 5; ++L) {
        int r = 2 * (L + 2);
        for (int a = 0; a < L; ++a)
            for (int b = 0; b < L; ++b)
                for (int c = 0; c < L; ++c) {
                    std::vector<int> bits = phi_encode({0, a, b, c, 0}, L);
                    for (int k = 0; k < L + 2; ++k) {
                        int center = 2 * (L + 2) + k;
                        std::vector<int> window(2 * r + 1);
                        for (int i = -r; i <= r; ++i) {
                            int pos = center + i;
                            window[i + r] = (pos >= 0 && pos < static_cast<int>(bits.size()))
                                                ? bits[pos]
                                                : 1;
                        }
                        RestoreResult res = restore_window(window, L);
                        if (a == 0 && b == 0 && c == 0) {
                            if (!std::holds_alternative<AllBlank>(res)) return false;
                            continue;
                        }
                        const Restored* got = std::get_if<Restored>(&res);
                        if (!got) return false;
                        if (got->offset != k) return false;
                        if (got->symbols[0] != a || got->symbols[1] != b ||
                            got->symbols[2] != c)
                            return false;
                    }
                }
    }
    return true;
}

// ---- 8. executor timing and layout ------------------------------------------

bool executor(std::string& note) {
    TuringMachine m = parse_tm_file(SGAME_DATA_DIR "/parity.tm");
    ParallelMachine pm(m, TimeBudget{});
    for (int stage = 0; stage < 70; ++stage) pm.run_stage();
    if (!pm.mod3_ok()) return false;

    TimeBudget t;
    if (zone_offset("0", t).S != 8) return false;

    std::vector<long long> worst(6, -1);
    for (long long k = 1; k <= 63; ++k) {
        const Zone& z = pm.zones()[k - 1];
        if (z.word != word_at_index(k)) return false;
        if (zone_offset(z.word, t).S != static_cast<long>(z.start)) return false;
        if (z.result < 0) return false;  // everything this short has finished
        TmRunResult direct = tm_run(m, z.word, 1000);
        bool accepts = direct.status == TmStatus::Accept;
        if ((z.result == 1) != accepts) return false;
        if (z.result_step % 3 != 0) return false;
        size_t n = z.word.size();
        if (z.result_step > worst[n]) worst[n] = z.result_step;
    }

    // the arrival-time bound 2^(4n) holds for every word from length 5 up,
    // and at no shorter length
    int threshold = -1;
    for (int n = 5; n >= 0; --n) {
        bool all_ok = BigInt(static_cast<long>(worst[n])) < (BigInt(1) << (4u * n));
        if (!all_ok) break;
        threshold = n;
    }
    std::ostringstream os;
    os << "  worst arrival times by length:";
    for (int n = 0; n <= 5; ++n) os << " " << worst[n];
    os << "; bound met from length " << threshold << "\n";
    note += os.str();
    return threshold == 5;
}

// ---- 9. offset arithmetic at scale -------------------------------------------

bool arithmetic(std::string&) {
    std::mt19937_64 rng(905117);
    for (int trial = 0; trial < 1000; ++trial) {
        long k = static_cast<long>(rng() % (1ull << 40)) + 1;
        if (word_index(word_at_index(k)) != k) return false;
    }
    for (long kappa : {1L, 2L}) {
        TimeBudget t{1, kappa};
        for (int trial = 0; trial < 60; ++trial) {
            long n = static_cast<long>(rng() % 65);
            std::string w(n, '0');
            for (char& c : w) c = char('0' + rng() % 2);
            ZoneOffsets off = zone_offset(w, t);
            if (off.S != zone_offset_sum_check(w, t)) return false;
            if (off.result_index != off.S + 1) return false;

            ReductionReport rep = reduction_position(w, 139, 15, kappa);
            if (rep.u != BigInt(17) * (rep.S + 1) + 2) return false;
            if (rep.x1 + rep.x2 != 2 * 139 * rep.t) return false;
            if (rep.x1 - rep.x2 != 2 * rep.u) return false;
            if (rep.t % 3 != 1) return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "solver agrees with a direct recomputation on 200 random games", random_games);
    criterion(2, "one-dimensional value sequences settle into their reported periods", periods);
    criterion(3, "pebble-placement values survive the move-vector reduction on every graph with up to 5 vertices",
              kayles_reductions);
    criterion(4, "every blank-preserving three-cell table synthesizes to an equivalent normalized circuit",
              synthesis);
    criterion(5, "game values replay automaton cells through six steps", simulation_claims);
    criterion(6, "machine steps, pair-symbol automaton, and binary code stay in lockstep",
              encodings);
    criterion(7, "every three-symbol window restores exactly from its binary encoding",
              restoration);
    criterion(8, "executor layout and verdicts are exact; arrival times meet the bound from length 5",
              executor);
    criterion(9, "offset arithmetic is consistent far beyond simulated sizes", arithmetic);
    return g_failed;
}
