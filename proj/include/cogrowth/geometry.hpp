#ifndef COGROWTH_GEOMETRY_HPP
#define COGROWTH_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cogrowth/multigraph.hpp"
#include "cogrowth/schreier.hpp"

namespace cogrowth {

/// Exact fraction for the quantities that the bound chains pin to rationals.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rat operator+(Rat a, Rat b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rat operator-(Rat a, Rat b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rat operator*(Rat a, Rat b) { return {a.num * b.num, a.den * b.den}; }
    friend Rat operator/(Rat a, Rat b) { return {a.num * b.den, a.den * b.num}; }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rat a, Rat b) { return a.num * b.den <= b.num * a.den; }
};

/// Core of a finite connected subgraph: what remains after iterated removal of
/// degree-<2 vertices. Empty (trivial) for trees. Carries the Euler
/// characteristic, the boundary count relative to the 2n-regular host, and its
/// own injectivity radius.
struct CoreGraph {
    std::vector<std::uint32_t> vertices; // host vertex ids, sorted
    Multigraph graph;                    // reindexed to 0..|vertices|-1
    long long chi = 0;                   // V - E
    long long boundary = 0;              // sum over v of (2n - deg), loops twice
    HalfInt ell = HalfInt::infinity();
    bool trivial() const { return vertices.empty(); }
};

/// Strips degree-<2 vertices until none remain. Throws std::invalid_argument
/// on disconnected or empty input, std::domain_error when the subgraph leaves
/// the certified region of an approximate host.
CoreGraph core(const Subgraph& s);

/// Number of host edges with exactly one endpoint in s; loops never counted.
/// Equals sum over v of (2n - deg_s(v)). Requires an exact host, or s inside
/// the certified ball minus one shell.
long long boundary_count(const Subgraph& s);

/// Exact identity |dC| = (2n-2)|C| + 2 chi(C) on connected cores.
/// Vacuously true on the trivial core.
bool euler_boundary_check(const CoreGraph& c, Rank rank);

/// Half the minimum length of a non-backtracking closed edge path; infinity
/// for forests.
HalfInt injectivity_radius(const SchreierGraph& g);

/// Checks |C| >= (-chi + 2)(ell - 1) in exact arithmetic. Requires a planar
/// core (throws std::invalid_argument otherwise); vacuous on the trivial core.
bool planar_core_size_check(const CoreGraph& c);

struct IsoUpperBound {
    Rat value;
    std::size_t witness_index = 0;
    std::string witness;
};

/// min over candidates A of (1/2n) |dA| / |A|, exact fraction plus witness.
/// Ties resolve to the earliest candidate. Throws on an empty candidate list.
IsoUpperBound isoperimetric_upper(const SchreierGraph& g, const std::vector<Subgraph>& candidates,
                                  const std::vector<std::string>& names = {});

/// Balls around the basepoint up to max_radius together with their cores.
void default_iso_candidates(const SchreierGraph& g, int max_radius,
                            std::vector<Subgraph>& candidates, std::vector<std::string>& names);

/// Vertex set of one shortest non-backtracking cycle, empty if the graph is a
/// forest. Used as an isoperimetric witness: an m-cycle gives exactly (n-1)/n.
std::vector<std::uint32_t> shortest_cycle_vertices(const SchreierGraph& g);

struct IsoLowerBound {
    Rat value;
    bool vacuous = false; // the girth was too small for a positive bound
};

/// Planar-quotient bound (n-1)/n - 1/(n(ell-1)), clamped to 0 when vacuous.
/// The caller is responsible for having verified planarity of the graph;
/// an infinite ell yields the tree value (n-1)/n.
IsoLowerBound isoperimetric_lower_planar(Rank rank, HalfInt ell);

/// growth >= (1 + i) / (1 - i). Requires 0 <= i < 1.
Rat mohar_growth_lower(Rat iso_lower);
double mohar_growth_lower(double iso_lower);

/// lambda0 >= 1 - sqrt(1 - i^2). Requires 0 <= i <= 1.
double cheeger_lambda0_lower(double iso_lower);

} // namespace cogrowth

#endif
