#ifndef COGROWTH_MULTIGRAPH_HPP
#define COGROWTH_MULTIGRAPH_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "cogrowth/schreier.hpp"

namespace cogrowth {

/// Undirected finite multigraph; loops and parallel edges permitted.
struct Multigraph {
    std::size_t num_vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    void add_edge(std::uint32_t u, std::uint32_t v) { edges.push_back({u, v}); }
};

/// Half-integer length with an infinity value, stored as a doubled integer.
struct HalfInt {
    static constexpr long long infinite = std::numeric_limits<long long>::max();
    long long twice = infinite;

    static HalfInt of_cycle_length(long long len) { return {len}; }
    static HalfInt infinity() { return {infinite}; }
    bool is_infinite() const { return twice == infinite; }
    double value() const;

    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
};

/// One undirected edge per involution orbit of defined transitions; a loop at a
/// vertex (both letter directions fixed) becomes a single loop edge.
Multigraph to_multigraph(const SchreierGraph& g);

/// Induced edges of a subgraph, vertices reindexed by position in s.vertices().
Multigraph to_multigraph(const Subgraph& s);

/// Half the length of the shortest non-backtracking closed edge path; infinity
/// on forests. A loop gives 1/2, a parallel pair gives 1.
HalfInt nb_girth_half(const Multigraph& g);

} // namespace cogrowth

#endif
