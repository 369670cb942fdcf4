#ifndef COGROWTH_COUNTING_HPP
#define COGROWTH_COUNTING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cogrowth/schreier.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

/// c_r = number of vertices within distance r of the basepoint, r = 0..R.
struct BallCounts {
    std::vector<std::uint64_t> counts;
    int exact_up_to = 0;
};

/// N(r) = number of subgroup elements of word length at most r, counted as
/// non-backtracking closed walks at the basepoint. Exact integers.
struct LoopCounts {
    std::vector<BigInt> counts;
    int exact_up_to = 0;
};

/// Per-radius values (1/r) log N(r); the trailing entry is the point estimate.
struct DeltaEstimate {
    std::vector<std::pair<int, double>> per_radius; // only radii with N(r) > 1
    bool has_data = false;
    double estimate = 0.0;
    double eta = 0.0; // estimate / log(2n-1)
};

/// Exact BFS ball sizes from the basepoint. Throws if the radius exceeds the
/// certified radius of an approximate graph.
BallCounts ball_counts(const SchreierGraph& g, int radius);

/// r-th roots c_r^{1/r}, r = 1..R.
std::vector<double> growth_estimate(const BallCounts& b);

/// Counts non-backtracking closed walks at the basepoint by transfer iteration
/// on directed edges (a step is forbidden exactly when it reverses the
/// previous edge; a loop contributes two mutually-inverse directed edges).
/// Requires floor(radius/2) <= certified radius on approximate graphs.
LoopCounts loop_counts(const SchreierGraph& g, int radius);

DeltaEstimate delta_estimate(const LoopCounts& l, Rank rank);

/// Truncated Poincare series: sum over r <= R of (N(r) - N(r-1)) e^{-s r}.
double poincare_partial(const LoopCounts& l, double s);

/// log of an exact count, stable for values beyond double range.
double log_big(const BigInt& x);

} // namespace cogrowth

#endif
