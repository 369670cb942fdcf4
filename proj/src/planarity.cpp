#include "cogrowth/planarity.hpp"

#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace cogrowth {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

/// Drops loops and subdivides every parallel copy beyond the first.
BoostGraph simplify(const Multigraph& g) {
    BoostGraph out(g.num_vertices);
    std::size_t next = g.num_vertices;
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> seen;
    for (auto [u, v] : g.edges) {
        if (u >= g.num_vertices || v >= g.num_vertices)
            throw std::invalid_argument("multigraph edge endpoint out of range");
        if (u == v) continue; // loops never affect planarity
        auto key = std::minmax(u, v);
        if (seen[{key.first, key.second}]++ == 0) {
            boost::add_edge(u, v, out);
        } else {
            std::size_t mid = boost::add_vertex(out);
            (void)mid;
            boost::add_edge(u, next, out);
            boost::add_edge(next, v, out);
            ++next;
        }
    }
    int idx = 0;
    for (auto [ei, eend] = boost::edges(out); ei != eend; ++ei)
        boost::put(boost::edge_index, out, *ei, idx++);
    return out;
}

} // namespace

PlanarityVerdict is_planar(const Multigraph& g) {
    PlanarityVerdict verdict;
    BoostGraph simple = simplify(g);
    verdict.simplified_vertices = boost::num_vertices(simple);
    verdict.simplified_edges = boost::num_edges(simple);

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(boost::num_vertices(simple));
    std::vector<Edge> kuratowski;
    verdict.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = simple,
        boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
            embedding.begin(), boost::get(boost::vertex_index, simple)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (verdict.planar) {
        verdict.rotation.resize(embedding.size());
        for (std::size_t v = 0; v < embedding.size(); ++v)
            for (const Edge& e : embedding[v]) {
                auto u = boost::source(e, simple), w = boost::target(e, simple);
                verdict.rotation[v].push_back(
                    static_cast<std::uint32_t>(u == v ? w : u));
            }
    } else {
        verdict.obstruction =
            "kuratowski-subdivision edges=" + std::to_string(kuratowski.size());
    }
    return verdict;
}

PlanarityVerdict check_quotient_planarity(const SchreierGraph& g, int radius) {
    if (radius > g.certified_radius())
        throw std::domain_error("planarity window exceeds the certified radius");
    Subgraph b = ball(g, radius);
    return is_planar(to_multigraph(b));
}

} // namespace cogrowth
