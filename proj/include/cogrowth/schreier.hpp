#ifndef COGROWTH_SCHREIER_HPP
#define COGROWTH_SCHREIER_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "cogrowth/words.hpp"

namespace cogrowth {

enum class Exactness { exact, approx };

/// Basepointed, deterministic, edge-labeled graph: a finite window onto (or all
/// of) the quotient of the Cayley tree T_n by a subgroup. Transition columns
/// follow letter code order (a, A, b, B, ...). An undefined transition means the
/// edge leaves the window.
class SchreierGraph {
public:
    static constexpr std::uint32_t undefined = std::numeric_limits<std::uint32_t>::max();

    SchreierGraph(Rank rank, std::size_t vertices, Exactness e, int certified_radius);

    Rank rank() const { return rank_; }
    std::size_t size() const { return table_.size() / rank_.num_letters(); }
    std::uint32_t basepoint() const { return basepoint_; }
    Exactness exactness() const { return exact_; }
    bool is_exact() const { return exact_ == Exactness::exact; }
    /// Radius up to which the window provably agrees with a deeper build.
    /// Unbounded (INT_MAX) on exact graphs.
    int certified_radius() const {
        return is_exact() ? std::numeric_limits<int>::max() : certified_radius_;
    }

    std::uint32_t target(std::uint32_t v, Letter l) const {
        return table_[static_cast<std::size_t>(v) * rank_.num_letters() + l.code()];
    }
    bool has_edge(std::uint32_t v, Letter l) const { return target(v, l) != undefined; }
    /// Count of defined transitions at v; a loop contributes 2.
    int degree(std::uint32_t v) const;

    /// Sets v --l--> w together with the involutive partner w --l^{-1}--> v.
    void set_transition(std::uint32_t v, Letter l, std::uint32_t w);
    void set_basepoint(std::uint32_t b) { basepoint_ = b; }

    friend bool operator==(const SchreierGraph& a, const SchreierGraph& b) {
        return a.rank_ == b.rank_ && a.basepoint_ == b.basepoint_ && a.table_ == b.table_;
    }

private:
    Rank rank_;
    Exactness exact_;
    int certified_radius_;
    std::uint32_t basepoint_ = 0;
    std::vector<std::uint32_t> table_;
};

struct BuildDiagnostics {
    bool closed = false;        // construction completed a finite quotient
    std::size_t coset_count = 0;
    int certified_radius = 0;   // stability radius of the window under deepening
    int deepening_level = 0;
};

/// Unfolded input to fold(): an arbitrary involution-consistent edge multiset.
struct PreEdge {
    std::uint32_t from;
    Letter letter;
    std::uint32_t to;
};

struct PreGraph {
    Rank rank = Rank(2);
    std::uint32_t num_vertices = 0;
    std::uint32_t basepoint = 0;
    std::vector<PreEdge> edges;
};

struct ToddCoxeterResult {
    std::optional<SchreierGraph> graph; // empty on overflow
    bool overflow = false;
    std::size_t cosets_defined = 0;
};

/// HLT-style coset enumeration of F_n modulo the normal closure of the relators.
/// Closes exactly when the quotient group is finite and the live-coset cap is
/// not exceeded; the result is its Cayley graph in canonical BFS numbering.
/// Relators must be cyclically reduced (throws std::invalid_argument otherwise).
ToddCoxeterResult todd_coxeter(Rank rank, const std::vector<ReducedWord>& relators,
                               std::size_t max_cosets);

/// Radius-R window onto T_n / <<relators>>: every relator is traced to closure
/// at every vertex within distance `depth` of the basepoint, the result is
/// folded to a deterministic graph, completed with tree transitions out to
/// radius R and restricted to the R-ball. The certified radius is the largest
/// r <= R at which the window agrees with the depth+1 build. If the
/// construction closes a finite quotient the result is exact.
std::pair<SchreierGraph, BuildDiagnostics>
truncated_quotient(Rank rank, const std::vector<ReducedWord>& relators, int radius, int depth,
                   std::size_t max_cosets = 4'000'000);

/// Merges same-labeled edges leaving one vertex until the graph is
/// deterministic; confluent, so the canonical result is independent of edge
/// order. Only the component of the basepoint is kept.
SchreierGraph fold(const PreGraph& pre);

/// BFS from the basepoint in letter order; relabels vertices by discovery
/// order. Two basepointed graphs are label-preservingly isomorphic iff their
/// canonical forms compare equal.
SchreierGraph canonicalize(const SchreierGraph& g);

/// Graph distance from the basepoint (-1 for unreachable vertices).
std::vector<int> distances_from_basepoint(const SchreierGraph& g);

/// Basepointed label-preserving isomorphism of the induced radius-r balls.
bool equal_ball(const SchreierGraph& a, const SchreierGraph& b, int r);

/// Vertex subset of a host graph with its induced edges.
class Subgraph {
public:
    Subgraph(const SchreierGraph& host, std::vector<std::uint32_t> vertices);

    const SchreierGraph& host() const { return *host_; }
    const std::vector<std::uint32_t>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool contains(std::uint32_t v) const { return v < member_.size() && member_[v]; }
    /// Induced degree; loops count twice.
    int degree(std::uint32_t v) const;
    /// Induced undirected edge count; loops count once.
    std::size_t edge_count() const;

private:
    const SchreierGraph* host_;
    std::vector<std::uint32_t> verts_;
    std::vector<char> member_;
};

/// Vertices within graph distance r of the basepoint, with induced edges.
/// Throws if r exceeds the certified radius of an approximate graph.
Subgraph ball(const SchreierGraph& g, int r);

/// Checks the involution invariant and (on exact graphs) 2n-regularity;
/// throws std::logic_error on violation.
void validate(const SchreierGraph& g);

/// Dump format: header `rank <n> vertices <V> basepoint <b> exact|approx:<R>`,
/// then one line per vertex: id followed by 2n targets in letter order,
/// `-` for undefined.
void write_dump(const SchreierGraph& g, std::ostream& out);
SchreierGraph read_dump(std::istream& in);

} // namespace cogrowth

#endif
