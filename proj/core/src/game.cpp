#include "sgame/game.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sgame {

Coord coord_sum(const Position& x) {
    return std::accumulate(x.begin(), x.end(), Coord{0});
}

int sum_residue(const Position& x, int modulus) {
    Coord s = coord_sum(x) % modulus;
    if (s < 0) s += modulus;
    return static_cast<int>(s);
}

DifferenceSet DifferenceSet::make(int dim, std::vector<Vec> vectors) {
    if (dim <= 0) throw std::invalid_argument("difference set dimension must be positive");
    for (const Vec& v : vectors) {
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("difference vector has wrong dimension");
        if (coord_sum(v) <= 0)
            throw std::invalid_argument("difference vector must have positive coordinate sum");
    }
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    return DifferenceSet{dim, std::move(vectors)};
}

ModularGame ModularGame::make(int dim, int modulus, std::vector<DifferenceSet> sets) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    if (static_cast<int>(sets.size()) != modulus)
        throw std::invalid_argument("need one difference set per residue");
    for (const DifferenceSet& s : sets) {
        if (s.dim != dim && !s.vectors.empty())
            throw std::invalid_argument("difference set dimension mismatch");
    }
    ModularGame g;
    g.dim = dim;
    g.modulus = modulus;
    g.sets = std::move(sets);
    for (auto& s : g.sets) s.dim = dim;  // empty sets adopt the game dimension
    return g;
}

ModularGame ModularGame::plain(DifferenceSet d) {
    int dim = d.dim;
    return make(dim, 1, {std::move(d)});
}

const DifferenceSet& ModularGame::set_for(const Position& x) const {
    return sets[sum_residue(x, modulus)];
}

static void check_dim(int dim, const Position& x) {
    if (static_cast<int>(x.size()) != dim)
        throw std::invalid_argument("position has wrong dimension");
    for (Coord c : x)
        if (c < 0) throw std::invalid_argument("position coordinates must be non-negative");
}

std::vector<Position> legal_moves(const ModularGame& g, const Position& x) {
    check_dim(g.dim, x);
    std::vector<Position> out;
    const DifferenceSet& d = g.set_for(x);
    for (const Vec& a : d.vectors) {
        Position y(x.size());
        bool ok = true;
        for (size_t i = 0; i < x.size(); ++i) {
            y[i] = x[i] - a[i];
            if (y[i] < 0) { ok = false; break; }
        }
        if (ok) out.push_back(std::move(y));
    }
    return out;
}

std::vector<Position> legal_moves(const DifferenceSet& d, const Position& x) {
    return legal_moves(ModularGame::plain(d), x);
}

Solver::Solver(ModularGame g) : game_(std::move(g)) {}
Solver::Solver(DifferenceSet d) : game_(ModularGame::plain(std::move(d))) {}

GameValue Solver::value(const Position& x) {
    check_dim(game_.dim, x);
    // explicit stack: a frame holds a position and the index of the next
    // successor to resolve; value = NAND over successor values with early
    // exit once any successor is 0
    struct Frame {
        Position pos;
        std::vector<Position> succ;
        size_t next = 0;
    };
    std::vector<Frame> stack;
    auto push = [&](Position p) -> std::optional<GameValue> {
        auto it = memo_.find(p);
        if (it != memo_.end()) return it->second;
        Frame f;
        f.succ = legal_moves(game_, p);
        f.pos = std::move(p);
        stack.push_back(std::move(f));
        return std::nullopt;
    };
    std::optional<GameValue> ret = push(x);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (ret.has_value() && *ret == 0) {
            // found a P successor: this position is N
            memo_[f.pos] = 1;
            ret = 1;
            stack.pop_back();
            continue;
        }
        if (f.next == f.succ.size()) {
            // all successors are N (or none): P
            memo_[f.pos] = 0;
            ret = 0;
            stack.pop_back();
            continue;
        }
        ret = push(std::move(f.succ[f.next++]));
    }
    return *ret;
}

GameValue position_value(const ModularGame& g, const Position& x) {
    Solver s(g);
    return s.value(x);
}

GameValue position_value(const DifferenceSet& d, const Position& x) {
    Solver s(d);
    return s.value(x);
}

GameValue ValueTable::at(const Position& x) const {
    auto it = values.find(x);
    if (it == values.end()) throw std::out_of_range("position not in table");
    return it->second;
}

bool ValueTable::self_consistent() const {
    for (const auto& [pos, val] : values) {
        int conj = 1;
        for (const Position& y : legal_moves(game, pos)) {
            conj &= values.at(y);
            if (!conj) break;
        }
        if (val != 1 - conj) return false;
    }
    return true;
}

static void enumerate_sums(int dim, Coord bound, Vec& cur, int idx,
                           const std::function<void(const Vec&)>& fn) {
    if (idx == dim) {
        fn(cur);
        return;
    }
    for (Coord c = 0; c <= bound; ++c) {
        cur[idx] = c;
        enumerate_sums(dim, bound - c, cur, idx + 1, fn);
    }
}

ValueTable solve_up_to_sum(const ModularGame& g, Coord sum_bound) {
    if (sum_bound < 0) throw std::invalid_argument("sum bound must be >= 0");
    ValueTable table;
    table.game = g;
    table.bound = sum_bound;
    // layered by coordinate sum: every move strictly decreases the sum, so
    // each layer only depends on layers below it
    std::vector<std::vector<Position>> layers(sum_bound + 1);
    Vec cur(g.dim, 0);
    enumerate_sums(g.dim, sum_bound, cur, 0,
                   [&](const Vec& v) { layers[coord_sum(v)].push_back(v); });
    for (Coord s = 0; s <= sum_bound; ++s) {
        for (Position& pos : layers[s]) {
            int conj = 1;
            for (const Position& y : legal_moves(g, pos)) {
                conj &= table.values.at(y);
                if (!conj) break;
            }
            table.values.emplace(std::move(pos), 1 - conj);
        }
    }
    return table;
}

ValueTable solve_up_to_sum(const DifferenceSet& d, Coord sum_bound) {
    return solve_up_to_sum(ModularGame::plain(d), sum_bound);
}

std::vector<GameValue> values_1d(const DifferenceSet& d, Coord horizon) {
    if (d.dim != 1) throw std::invalid_argument("values_1d needs a 1-d game");
    std::vector<GameValue> v(horizon + 1);
    for (Coord n = 0; n <= horizon; ++n) {
        int conj = 1;
        for (const Vec& a : d.vectors) {
            if (a[0] <= n) conj &= v[n - a[0]];
            if (!conj) break;
        }
        v[n] = 1 - conj;
    }
    return v;
}

std::optional<PeriodReport> find_period_1d(const DifferenceSet& d, Coord horizon) {
    if (d.dim != 1) throw std::invalid_argument("find_period_1d needs a 1-d game");
    if (d.vectors.empty()) return PeriodReport{0, 1};  // all positions are P
    Coord w = 0;
    for (const Vec& a : d.vectors) w = std::max(w, a[0]);
    if (horizon <= 2 * w) throw std::invalid_argument("horizon must exceed twice the largest move");
    std::vector<GameValue> v = values_1d(d, horizon);
    // value(n) depends only on the previous w values, so matching windows of
    // width w at p0 and p0+q certify periodicity from p0 onward
    for (Coord q = 1; q + w - 1 <= horizon; ++q) {
        Coord p0 = 0;
        for (Coord n = horizon - q; n >= 0; --n) {
            if (v[n] != v[n + q]) { p0 = n + 1; break; }
        }
        if (p0 + q + w - 1 <= horizon) return PeriodReport{p0, q};
    }
    return std::nullopt;
}

// --- parsing ---------------------------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
    size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool next_tokens(std::istream& in, std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        tokens.assign(std::istream_iterator<std::string>(ls), {});
        if (!tokens.empty()) return true;
    }
    return false;
}

Coord to_coord(const std::string& tok) {
    size_t used = 0;
    Coord val;
    try {
        val = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'");
    return val;
}

Vec to_vector(const std::vector<std::string>& tokens, int dim) {
    if (static_cast<int>(tokens.size()) != dim)
        throw ParseError("expected " + std::to_string(dim) + " coordinates");
    Vec v;
    v.reserve(dim);
    for (const auto& t : tokens) v.push_back(to_coord(t));
    return v;
}

}  // namespace

DifferenceSet parse_difference_set(std::istream& in) {
    std::vector<std::string> tokens;
    if (!next_tokens(in, tokens) || tokens.size() != 2 || tokens[0] != "dim")
        throw ParseError("expected 'dim <d>' header");
    int dim = static_cast<int>(to_coord(tokens[1]));
    std::vector<Vec> vectors;
    while (next_tokens(in, tokens)) vectors.push_back(to_vector(tokens, dim));
    try {
        return DifferenceSet::make(dim, std::move(vectors));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ModularGame parse_modular_game(std::istream& in) {
    std::vector<std::string> tokens;
    if (!next_tokens(in, tokens) || tokens.size() != 2 || tokens[0] != "dim")
        throw ParseError("expected 'dim <d>' header");
    int dim = static_cast<int>(to_coord(tokens[1]));
    if (!next_tokens(in, tokens) || tokens.size() != 2 || tokens[0] != "mod")
        throw ParseError("expected 'mod <k>' header");
    int modulus = static_cast<int>(to_coord(tokens[1]));
    if (modulus < 1) throw ParseError("modulus must be >= 1");
    std::vector<std::vector<Vec>> raw(modulus);
    int current = -1;
    while (next_tokens(in, tokens)) {
        if (tokens[0] == "set") {
            if (tokens.size() != 2) throw ParseError("expected 'set <residue>'");
            current = static_cast<int>(to_coord(tokens[1]));
            if (current < 0 || current >= modulus) throw ParseError("residue out of range");
            continue;
        }
        if (current < 0) throw ParseError("vector outside of a 'set' block");
        raw[current].push_back(to_vector(tokens, dim));
    }
    std::vector<DifferenceSet> sets;
    sets.reserve(modulus);
    try {
        for (auto& vs : raw) sets.push_back(DifferenceSet::make(dim, std::move(vs)));
        return ModularGame::make(dim, modulus, std::move(sets));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ModularGame parse_game_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    // sniff: modular files carry a 'mod' line
    std::istringstream probe(buf.str());
    std::vector<std::string> tokens;
    bool modular = false;
    while (next_tokens(probe, tokens)) {
        if (tokens[0] == "mod") { modular = true; break; }
    }
    std::istringstream body(buf.str());
    if (modular) return parse_modular_game(body);
    return ModularGame::plain(parse_difference_set(body));
}

std::string serialize_difference_set(const DifferenceSet& d) {
    std::ostringstream out;
    out << "dim " << d.dim << "\n";
    for (const Vec& v : d.vectors) {
        for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << "\n";
    }
    return out.str();
}

std::string format_position(const Position& x) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i];
    out << ")";
    return out.str();
}

Position parse_position(const std::string& text, int dim) {
    std::string cleaned;
    for (char c : text) cleaned += (c == ',' || c == '(' || c == ')') ? ' ' : c;
    std::istringstream in(cleaned);
    std::vector<std::string> tokens(std::istream_iterator<std::string>(in), {});
    Vec v = to_vector(tokens, dim);
    for (Coord c : v)
        if (c < 0) throw ParseError("position coordinates must be non-negative");
    return v;
}

}  // namespace sgame
