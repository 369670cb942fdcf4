#ifndef COGROWTH_PLANARITY_HPP
#define COGROWTH_PLANARITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cogrowth/multigraph.hpp"
#include "cogrowth/schreier.hpp"

namespace cogrowth {

/// Verdict with a witness: a rotation system (cyclic neighbor order per vertex
/// of the simplified graph) when planar, an obstruction tag when not.
struct PlanarityVerdict {
    bool planar = false;
    std::vector<std::vector<std::uint32_t>> rotation; // simplified-graph vertex ids
    std::string obstruction;                          // nonempty iff not planar
    std::size_t simplified_vertices = 0;
    std::size_t simplified_edges = 0;
};

/// Planarity of a finite multigraph. Loops are dropped and parallel edges
/// subdivided (both preserve planarity), then a linear-time test runs on the
/// simple graph; nonplanar graphs carry a Kuratowski-subdivision tag.
PlanarityVerdict is_planar(const Multigraph& g);

/// Verdict for the radius-R ball around the basepoint. A nonplanar ball
/// refutes planarity of the full quotient; a planar ball is window-relative
/// evidence only. Throws if R exceeds the certified radius.
PlanarityVerdict check_quotient_planarity(const SchreierGraph& g, int radius);

} // namespace cogrowth

#endif
