// sgame: command-line front end for the subtraction-game toolkit.
//
// Exit codes: 0 success, 1 verification mismatch or incomplete run,
// 2 usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgame/automata.hpp"
#include "sgame/compiler.hpp"
#include "sgame/game.hpp"
#include "sgame/kayles.hpp"
#include "sgame/parallel.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

const char* verdict(sgame::GameValue v) { return v == 0 ? "P" : "N"; }

// symbols either as one compact digit string ("0110") or comma-separated
std::vector<int> parse_cells(const std::string& text) {
    std::vector<int> cells;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) cells.push_back(std::stoi(item));
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw sgame::ParseError("bad cell symbol in input");
            cells.push_back(c - '0');
        }
    }
    if (cells.empty()) throw sgame::ParseError("empty cell string");
    return cells;
}

int cmd_solve(const std::string& file, const std::vector<std::string>& positions,
              long long sum_bound) {
    sgame::ModularGame g = sgame::parse_game_file(file);
    if (sum_bound >= 0) {
        sgame::ValueTable table = sgame::solve_up_to_sum(g, sum_bound);
        std::vector<sgame::Position> keys;
        keys.reserve(table.values.size());
        for (const auto& [pos, _] : table.values) keys.push_back(pos);
        std::sort(keys.begin(), keys.end());
        for (const auto& pos : keys)
            std::cout << sgame::format_position(pos) << " " << verdict(table.at(pos))
                      << "\n";
        return kOk;
    }
    sgame::Solver solver(g);
    for (const std::string& text : positions) {
        sgame::Position pos = sgame::parse_position(text, g.dim);
        std::cout << verdict(solver.value(pos)) << "\n";
    }
    return kOk;
}

int cmd_period(const std::string& file, long long horizon) {
    sgame::ModularGame g = sgame::parse_game_file(file);
    if (g.dim != 1 || g.modulus != 1)
        throw std::invalid_argument("period analysis needs a plain 1-d game");
    auto report = sgame::find_period_1d(g.sets[0], horizon);
    if (!report) {
        std::cout << "none\n";
        return kOk;
    }
    std::cout << "pre=" << report->preperiod << " period=" << report->period << "\n";
    return kOk;
}

int cmd_kayles(const std::string& file, bool reduce, bool verify) {
    sgame::SimpleGraph g = sgame::parse_graph_file(file);
    if (reduce) {
        sgame::KaylesReduction red = sgame::kayles_to_msg(g);
        std::cout << "# start " << sgame::format_position(red.start) << "\n";
        std::cout << sgame::serialize_difference_set(red.moves);
        return kOk;
    }
    if (verify) {
        if (!sgame::verify_kayles_reduction(g)) {
            std::cout << "MISMATCH\n";
            return kMismatch;
        }
        std::cout << "OK\n";
        return kOk;
    }
    std::cout << verdict(sgame::kayles_value(g)) << "\n";
    return kOk;
}

int cmd_ca_run(const std::string& file, long long steps, const std::string& input,
               long long base) {
    sgame::CellularAutomaton ca = sgame::parse_rule_file(file);
    std::vector<int> cells = input.empty() ? std::vector<int>{1 - ca.blank}
                                           : parse_cells(input);
    for (int c : cells)
        if (c < 0 || c >= ca.alphabet) throw sgame::ParseError("cell symbol out of range");
    sgame::Configuration conf = sgame::Configuration::from_cells(base, cells, ca.blank);
    long long lo = base - steps, hi = base + static_cast<long long>(cells.size()) + steps;
    for (long long t = 0; t <= steps; ++t) {
        std::cout << "t=" << t << " " << sgame::format_configuration(conf, ca.blank, lo, hi)
                  << "\n";
        if (t < steps) conf = sgame::ca_step(ca, conf);
    }
    return kOk;
}

int cmd_tm_run(const std::string& file, const std::string& input, long long max_steps) {
    sgame::TuringMachine m = sgame::parse_tm_file(file);
    sgame::TmRunResult r = sgame::tm_run(m, input, max_steps);
    const char* s = r.status == sgame::TmStatus::Accept   ? "accept"
                    : r.status == sgame::TmStatus::Reject ? "reject"
                                                          : "running";
    std::cout << s << " steps=" << r.steps << "\n";
    return r.status == sgame::TmStatus::Running ? kMismatch : kOk;
}

int cmd_compile(const std::string& file, long long tmax, const std::string& out) {
    sgame::CellularAutomaton ca = sgame::parse_rule_file(file);
    sgame::NandCircuit circuit = sgame::circuit_for(ca);
    sgame::CompiledModularGame compiled = sgame::compile_to_modular(circuit);
    sgame::DifferenceSet lifted = sgame::lift_to_subtraction(compiled);
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << "# lifted subtraction game, N=" << compiled.N << "\n";
        os << sgame::serialize_difference_set(lifted);
    }
    sgame::SimulationReport report =
        sgame::verify_simulation(ca, circuit, static_cast<int>(tmax));
    for (const auto& mm : report.mismatches) {
        const char* kind = mm.kind == sgame::SimMismatch::Kind::Cell       ? "cell"
                           : mm.kind == sgame::SimMismatch::Kind::LiftCell ? "lift"
                                                                           : "mid";
        std::cout << "MISMATCH " << kind << " t=" << mm.t << " u=" << mm.u;
        if (mm.kind == sgame::SimMismatch::Kind::Mid) std::cout << " j=" << mm.j;
        std::cout << " expected=" << mm.expected << " got=" << mm.got << "\n";
    }
    std::cout << "N=" << compiled.N << " " << report.summary() << "\n";
    return report.pass ? kOk : kMismatch;
}

int cmd_u_sim(const std::string& file, const std::string& word, long long stages,
              long budget_c, long budget_kappa) {
    sgame::TuringMachine m = sgame::parse_tm_file(file);
    sgame::ParallelMachine u(m, sgame::TimeBudget{budget_c, budget_kappa});
    sgame::ParallelMachine::Result r = u.run_until_result(word, stages);
    if (!r.finished) {
        std::cout << "verdict=none stages=" << r.stages << " (budget exhausted)\n";
        return kMismatch;
    }
    std::cout << "verdict=" << (r.accept ? "accept" : "reject") << " t_res=" << r.t_res
              << " stages=" << r.stages << " bound_ok=" << (r.bound_ok ? "yes" : "no")
              << " mod3=" << (u.mod3_ok() ? "ok" : "violated")
              << " visits=" << u.first_block_visits() << "\n";
    return u.mod3_ok() ? kOk : kMismatch;
}

int cmd_reduce(const std::string& file, const std::string& word, long budget_exp,
               long budget_c, int circuit_size, int alphabet_size) {
    sgame::TuringMachine m = sgame::parse_tm_file(file);
    int L = alphabet_size > 0 ? alphabet_size : (m.q + 1) * (m.ell + 1);
    // stand-in for the compiled pipeline: restore radius 2(L+2), normalized
    // circuit size 4r+3
    int N = circuit_size > 0 ? circuit_size : 4 * (2 * (L + 2)) + 3;
    sgame::ReductionReport rep =
        sgame::reduction_position(word, N, L, budget_exp, budget_c);
    std::cout << sgame::format_report(rep) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite vector subtraction games and reduction pipeline"};
    app.require_subcommand(1);
    int rc = kOk;

    auto* solve = app.add_subcommand("solve", "evaluate positions of a game file");
    std::string solve_file;
    std::vector<std::string> solve_positions;
    long long solve_bound = -1;
    solve->add_option("file", solve_file, "game file")->required();
    solve->add_option("positions", solve_positions, "positions, e.g. 4 or 2,3");
    solve->add_option("--sum-bound", solve_bound, "dump all values with sum <= bound");
    solve->callback([&] { rc = cmd_solve(solve_file, solve_positions, solve_bound); });

    auto* period = app.add_subcommand("period", "1-d periodicity report");
    std::string period_file;
    long long period_horizon = 2000;
    period->add_option("file", period_file, "game file")->required();
    period->add_option("--horizon", period_horizon, "search horizon");
    period->callback([&] { rc = cmd_period(period_file, period_horizon); });

    auto* kayles = app.add_subcommand("kayles", "node kayles value / reduction");
    std::string kayles_file;
    bool kayles_reduce = false, kayles_verify = false;
    kayles->add_option("file", kayles_file, "graph file")->required();
    kayles->add_flag("--reduce", kayles_reduce, "emit the equivalent subtraction game");
    kayles->add_flag("--verify", kayles_verify, "check game value against direct search");
    kayles->callback([&] { rc = cmd_kayles(kayles_file, kayles_reduce, kayles_verify); });

    auto* ca = app.add_subcommand("ca-run", "run a cellular automaton");
    std::string ca_file, ca_input;
    long long ca_steps = 10, ca_base = 0;
    ca->add_option("file", ca_file, "rule table file")->required();
    ca->add_option("--steps", ca_steps, "number of steps");
    ca->add_option("--input", ca_input, "initial cells (digits or comma-separated)");
    ca->add_option("--base", ca_base, "tape coordinate of the first input cell");
    ca->callback([&] { rc = cmd_ca_run(ca_file, ca_steps, ca_input, ca_base); });

    auto* tm = app.add_subcommand("tm-run", "run a Turing machine");
    std::string tm_file, tm_input;
    long long tm_max = 10000;
    tm->add_option("file", tm_file, "machine file")->required();
    tm->add_option("--input", tm_input, "binary input word");
    tm->add_option("--max-steps", tm_max, "step limit");
    tm->callback([&] { rc = cmd_tm_run(tm_file, tm_input, tm_max); });

    auto* compile = app.add_subcommand("compile", "compile a binary CA to a game and verify");
    std::string compile_file, compile_out;
    long long compile_tmax = 4;
    compile->add_option("file", compile_file, "rule table file (binary, blank 1)")->required();
    compile->add_option("--tmax", compile_tmax, "verify cells up to this time");
    compile->add_option("--out", compile_out, "write the lifted game to this file");
    compile->callback([&] { rc = cmd_compile(compile_file, compile_tmax, compile_out); });

    auto* usim = app.add_subcommand("u-sim", "run the parallel executor on one word");
    std::string usim_file, usim_word;
    long long usim_stages = -1;
    long usim_c = 1, usim_kappa = 1;
    usim->add_option("file", usim_file, "machine file")->required();
    usim->add_option("--word", usim_word, "binary input word");
    usim->add_option("--stages", usim_stages, "stage budget (default 2^(n+1)+T(n))");
    usim->add_option("--budget-c", usim_c, "time budget constant C");
    usim->add_option("--budget-exp", usim_kappa, "time budget exponent kappa");
    usim->callback([&] { rc = cmd_u_sim(usim_file, usim_word, usim_stages, usim_c, usim_kappa); });

    auto* reduce = app.add_subcommand("reduce", "print the word -> position reduction report");
    std::string reduce_file, reduce_word;
    long reduce_kappa = 1, reduce_c = 1;
    int reduce_n = 0, reduce_l = 0;
    reduce->add_option("file", reduce_file, "machine file")->required();
    reduce->add_option("--word", reduce_word, "binary input word");
    reduce->add_option("--budget-exp", reduce_kappa, "time budget exponent kappa");
    reduce->add_option("--budget-c", reduce_c, "time budget constant C");
    reduce->add_option("--circuit-size", reduce_n, "override the circuit size N");
    reduce->add_option("--alphabet-size", reduce_l, "override the alphabet size L");
    reduce->callback([&] {
        rc = cmd_reduce(reduce_file, reduce_word, reduce_kappa, reduce_c, reduce_n, reduce_l);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const sgame::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return rc;
}
