#include "sgame/kayles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sgame {

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SimpleGraph{n, std::move(edges)};
}

bool SimpleGraph::has_isolated_vertex() const {
    std::vector<char> touched(n, 0);
    for (auto [u, v] : edges) touched[u] = touched[v] = 1;
    for (char t : touched)
        if (!t) return true;
    return false;
}

SimpleGraph parse_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "n") {
            if (!(ls >> n)) throw ParseError("expected 'n <count>'");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("expected 'e <u> <v>'");
            edges.emplace_back(u, v);
        } else {
            throw ParseError("unknown graph line tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("graph file missing 'n' line");
    try {
        return SimpleGraph::make(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SimpleGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_graph(in);
}

GameValue kayles_value(const SimpleGraph& g) {
    if (g.n > 63) throw std::invalid_argument("kayles solver handles at most 63 vertices");
    std::vector<uint64_t> closed_nbhd(g.n);
    for (int v = 0; v < g.n; ++v) closed_nbhd[v] = 1ull << v;
    for (auto [u, v] : g.edges) {
        closed_nbhd[u] |= 1ull << v;
        closed_nbhd[v] |= 1ull << u;
    }
    std::unordered_map<uint64_t, GameValue> memo;
    // playable = vertices that are unoccupied and not adjacent to a pebble
    std::function<GameValue(uint64_t)> eval = [&](uint64_t playable) -> GameValue {
        auto it = memo.find(playable);
        if (it != memo.end()) return it->second;
        int conj = 1;
        for (uint64_t m = playable; m && conj;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            conj &= eval(playable & ~closed_nbhd[v]);
        }
        GameValue val = 1 - conj;
        memo.emplace(playable, val);
        return val;
    };
    uint64_t all = g.n == 0 ? 0 : (g.n == 63 ? ~0ull >> 1 : (1ull << g.n) - 1);
    return eval(all);
}

KaylesReduction kayles_to_msg(const SimpleGraph& g) {
    if (g.edges.empty()) throw std::invalid_argument("reduction needs at least one edge");
    if (g.has_isolated_vertex())
        throw std::invalid_argument("reduction rejects graphs with isolated vertices");
    int m = static_cast<int>(g.edges.size());
    std::vector<Vec> rows;
    rows.reserve(g.n);
    for (int v = 0; v < g.n; ++v) {
        Vec row(m, 0);
        for (int e = 0; e < m; ++e)
            if (g.edges[e].first == v || g.edges[e].second == v) row[e] = 1;
        rows.push_back(std::move(row));
    }
    KaylesReduction red;
    red.moves = DifferenceSet::make(m, std::move(rows));  // collapses twin vertices
    red.start = Position(m, 1);
    return red;
}

bool verify_kayles_reduction(const SimpleGraph& g) {
    KaylesReduction red = kayles_to_msg(g);
    return position_value(red.moves, red.start) == kayles_value(g);
}

}  // namespace sgame
