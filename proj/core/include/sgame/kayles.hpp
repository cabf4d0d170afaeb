#pragma once

// Node kayles: players alternately place pebbles on unoccupied vertices that
// are not adjacent to any occupied one; the player without a move loses.
// The reduction maps each vertex to the incidence vector of its edges and
// plays the subtraction game from the all-ones position.

#include <iosfwd>
#include <utility>
#include <vector>

#include "sgame/game.hpp"

namespace sgame {

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (min,max), sorted, deduplicated

    static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges);
    bool has_isolated_vertex() const;
};

// text format: 'n <count>' then lines 'e <u> <v>' (0-based ids)
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph_file(const std::string& path);

// P/N value by memoized search over the set of still-playable vertices
GameValue kayles_value(const SimpleGraph& g);

struct KaylesReduction {
    DifferenceSet moves;  // dimension |E|, one incidence vector per vertex
    Position start;       // all ones
};

// rejects graphs with isolated vertices (their incidence vector would be the
// zero vector, which is not a legal move) and graphs without edges
KaylesReduction kayles_to_msg(const SimpleGraph& g);

// true iff the reduced game's start value equals the direct kayles value
bool verify_kayles_reduction(const SimpleGraph& g);

}  // namespace sgame
