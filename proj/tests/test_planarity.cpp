#include "doctest.h"

#include <algorithm>
#include <random>

#include "cogrowth/lab.hpp"
#include "cogrowth/multigraph.hpp"
#include "cogrowth/planarity.hpp"
#include "cogrowth/schreier.hpp"

using namespace cogrowth;

namespace {

Multigraph complete_graph(int n) {
    Multigraph g;
    g.num_vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Multigraph complete_bipartite(int a, int b) {
    Multigraph g;
    g.num_vertices = a + b;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Multigraph relabel(const Multigraph& g, std::mt19937& rng) {
    std::vector<std::uint32_t> perm(g.num_vertices);
    for (std::uint32_t i = 0; i < g.num_vertices; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph out;
    out.num_vertices = g.num_vertices;
    for (auto [u, v] : g.edges) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace

TEST_CASE("classical obstructions") {
    PlanarityVerdict k5 = is_planar(complete_graph(5));
    CHECK_FALSE(k5.planar);
    CHECK(k5.obstruction.rfind("kuratowski", 0) == 0);

    PlanarityVerdict k33 = is_planar(complete_bipartite(3, 3));
    CHECK_FALSE(k33.planar);
    CHECK_FALSE(k33.obstruction.empty());

    CHECK(is_planar(complete_graph(4)).planar);
}

TEST_CASE("k5 subdivision control") {
    // subdivide every edge of K5 once; still nonplanar
    Multigraph k5 = complete_graph(5);
    Multigraph sub;
    sub.num_vertices = 5 + k5.edges.size();
    std::uint32_t next = 5;
    for (auto [u, v] : k5.edges) {
        sub.add_edge(u, next);
        sub.add_edge(next, v);
        ++next;
    }
    CHECK_FALSE(is_planar(sub).planar);
}

TEST_CASE("loops and parallel edges are normalized away") {
    Multigraph g;
    g.num_vertices = 2;
    g.add_edge(0, 0); // loop
    g.add_edge(0, 1);
    g.add_edge(0, 1); // parallel
    g.add_edge(0, 1);
    PlanarityVerdict v = is_planar(g);
    CHECK(v.planar);
    CHECK(v.simplified_vertices == 4); // two subdivision vertices added
    CHECK(v.simplified_edges == 5);
}

TEST_CASE("planar witnesses carry a rotation system") {
    Multigraph c4;
    c4.num_vertices = 4;
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    PlanarityVerdict v = is_planar(c4);
    REQUIRE(v.planar);
    REQUIRE(v.rotation.size() == 4);
    for (const auto& ring : v.rotation) CHECK(ring.size() == 2);
}

TEST_CASE("quotient windows") {
    auto grid = truncated_quotient(Rank(2), {parse_word(Rank(2), "abAB")}, 5, 6).first;
    CHECK(check_quotient_planarity(grid, 5).planar);
    CHECK_THROWS_AS(check_quotient_planarity(grid, 6), std::domain_error);

    for (int k : {4, 6, 10}) {
        auto g = truncated_quotient(Rank(2), preset_relators("powers", Rank(2), k),
                                    std::min(2 * k, 8), 2)
                     .first;
        PlanarityVerdict v = check_quotient_planarity(g, std::min(g.certified_radius(), 8));
        CHECK(v.planar);
    }
}

TEST_CASE("z^3 lattice windows are eventually nonplanar") {
    Rank r3(3);
    std::vector<ReducedWord> relators = {parse_word(r3, "abAB"), parse_word(r3, "acAC"),
                                         parse_word(r3, "bcBC")};
    auto g = truncated_quotient(r3, relators, 3, 5).first;
    PlanarityVerdict v2 = check_quotient_planarity(g, 2);
    PlanarityVerdict v3 = check_quotient_planarity(g, 3);
    CHECK_FALSE(v3.planar);
    // subgraph monotonicity: a nonplanar ball stays nonplanar at larger radii
    if (!v2.planar) CHECK_FALSE(v3.planar);
}

TEST_CASE("verdicts are invariant under relabeling") {
    std::mt19937 rng(41);
    Multigraph k5 = complete_graph(5);
    auto ball4 = truncated_quotient(Rank(2), preset_relators("powers", Rank(2), 4), 4, 2).first;
    Multigraph cactus = to_multigraph(ball(ball4, std::min(4, ball4.certified_radius())));
    bool cactus_expected = is_planar(cactus).planar;
    CHECK(cactus_expected);
    for (int trial = 0; trial < 50; ++trial) {
        CHECK_FALSE(is_planar(relabel(k5, rng)).planar);
        CHECK(is_planar(relabel(cactus, rng)).planar == cactus_expected);
    }
}

TEST_CASE("euler necessary condition on planar verdicts") {
    for (int k : {4, 6}) {
        auto g = truncated_quotient(Rank(2), preset_relators("powers", Rank(2), k), 6, 2).first;
        PlanarityVerdict v = check_quotient_planarity(g, std::min(6, g.certified_radius()));
        REQUIRE(v.planar);
        if (v.simplified_vertices >= 3)
            CHECK(v.simplified_edges <= 3 * v.simplified_vertices - 6);
    }
}
