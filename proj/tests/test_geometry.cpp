#include "doctest.h"

#include <algorithm>
#include <random>

#include "cogrowth/geometry.hpp"
#include "cogrowth/lab.hpp"
#include "cogrowth/planarity.hpp"
#include "cogrowth/schreier.hpp"

using namespace cogrowth;

namespace {

std::vector<ReducedWord> rels(Rank rank, std::initializer_list<const char*> words) {
    std::vector<ReducedWord> out;
    for (const char* t : words) out.push_back(parse_word(rank, t));
    return out;
}

SchreierGraph grid_window(int radius) {
    return truncated_quotient(Rank(2), rels(Rank(2), {"abAB"}), radius, radius).first;
}

Subgraph whole(const SchreierGraph& g) {
    std::vector<std::uint32_t> verts(g.size());
    for (std::uint32_t v = 0; v < g.size(); ++v) verts[v] = v;
    return Subgraph(g, verts);
}

// hand-built hosts for the small textbook shapes; generous certified radius
SchreierGraph path_graph(int vertices) {
    SchreierGraph g(Rank(2), vertices, Exactness::approx, 100);
    for (int i = 0; i + 1 < vertices; ++i)
        g.set_transition(i, Letter::make(1, +1), i + 1);
    return g;
}

SchreierGraph cycle_with_pendant(int m, int tail) {
    SchreierGraph g(Rank(2), m + tail, Exactness::approx, 100);
    Letter a = Letter::make(1, +1), b = Letter::make(2, +1);
    for (int i = 0; i < m; ++i) g.set_transition(i, a, (i + 1) % m);
    if (tail > 0) {
        g.set_transition(0, b, m);
        for (int i = 0; i + 1 < tail; ++i) g.set_transition(m + i, b, m + i + 1);
    }
    return g;
}

SchreierGraph theta_graph() {
    // two vertices joined by three parallel edges (letters a, A, b)
    SchreierGraph g(Rank(2), 2, Exactness::approx, 100);
    g.set_transition(0, Letter::make(1, +1), 1);
    g.set_transition(1, Letter::make(1, +1), 0); // the A-slot of vertex 0
    g.set_transition(0, Letter::make(2, +1), 1);
    return g;
}

} // namespace

TEST_CASE("core stripping") {
    SchreierGraph path = path_graph(5);
    CHECK(core(whole(path)).trivial());

    SchreierGraph cp = cycle_with_pendant(6, 3);
    CoreGraph c = core(whole(cp));
    REQUIRE_FALSE(c.trivial());
    CHECK(c.vertices.size() == 6);
    CHECK(c.graph.edges.size() == 6);
    CHECK(c.chi == 0);
    CHECK(c.ell == HalfInt{6});

    SchreierGraph grid = grid_window(4);
    CoreGraph ballcore = core(ball(grid, 2));
    CHECK(ballcore.vertices.size() == 9); // 13-ball minus the four extremal leaves
    CHECK(ballcore.graph.edges.size() == 12);
    CHECK(ballcore.chi == -3);
    CHECK(euler_boundary_check(ballcore, Rank(2)));
}

TEST_CASE("core rejects bad input") {
    SchreierGraph path = path_graph(5);
    CHECK_THROWS_AS(core(Subgraph(path, {0, 3})), std::invalid_argument); // disconnected
    CHECK_THROWS_AS(core(Subgraph(path, {})), std::invalid_argument);
}

TEST_CASE("boundary counts") {
    SchreierGraph tree = truncated_quotient(Rank(2), {}, 3, 0).first;
    CHECK(boundary_count(Subgraph(tree, {tree.basepoint()})) == 4);

    SchreierGraph grid = grid_window(4);
    std::vector<std::uint32_t> square = shortest_cycle_vertices(grid);
    REQUIRE(square.size() == 4);
    CHECK(boundary_count(Subgraph(grid, square)) == 8); // 2m for an m-cycle

    auto rose = *todd_coxeter(Rank(2), rels(Rank(2), {"a", "b"}), 10).graph;
    CHECK(boundary_count(whole(rose)) == 0); // both loops consume all four slots
}

TEST_CASE("boundary counting needs the certified region") {
    SchreierGraph tree = truncated_quotient(Rank(2), {}, 3, 0).first;
    CHECK_THROWS_AS(boundary_count(ball(tree, 3)), std::domain_error); // touches the last shell
    CHECK_NOTHROW(boundary_count(ball(tree, 2)));
}

TEST_CASE("euler-boundary identity on the textbook shapes") {
    // 5-cycle, n = 2: boundary 10 = (2)(5) + 2*0
    SchreierGraph c5 = cycle_with_pendant(5, 0);
    CoreGraph c = core(whole(c5));
    CHECK(c.boundary == 10);
    CHECK(euler_boundary_check(c, Rank(2)));

    // rose core: one vertex, two loops, chi = -1, boundary 0
    auto rose = *todd_coxeter(Rank(2), rels(Rank(2), {"a", "b"}), 10).graph;
    CoreGraph rc = core(whole(rose));
    CHECK(rc.vertices.size() == 1);
    CHECK(rc.graph.edges.size() == 2);
    CHECK(rc.chi == -1);
    CHECK(rc.boundary == 0);
    CHECK(euler_boundary_check(rc, Rank(2)));

    // theta graph: chi = -1, each vertex has core degree 3, boundary 2
    CoreGraph tc = core(whole(theta_graph()));
    CHECK(tc.vertices.size() == 2);
    CHECK(tc.graph.edges.size() == 3);
    CHECK(tc.chi == -1);
    CHECK(tc.boundary == 2);
    CHECK(euler_boundary_check(tc, Rank(2)));
}

TEST_CASE("injectivity radius") {
    CHECK(injectivity_radius(grid_window(3)) == HalfInt{4}); // girth 4

    auto powers6 = truncated_quotient(Rank(2), preset_relators("powers", Rank(2), 6), 6, 3).first;
    CHECK(injectivity_radius(powers6) == HalfInt{6}); // the a-cycle of length 6

    SchreierGraph tree = truncated_quotient(Rank(2), {}, 4, 0).first;
    CHECK(injectivity_radius(tree).is_infinite());

    CHECK(injectivity_radius(theta_graph()) == HalfInt{2}); // parallel pair

    auto rose = *todd_coxeter(Rank(2), rels(Rank(2), {"a", "b"}), 10).graph;
    CHECK(injectivity_radius(rose) == HalfInt{1}); // a loop is a length-1 closed path
}

TEST_CASE("planar core size bound") {
    SchreierGraph grid = grid_window(4);
    std::vector<std::uint32_t> square = shortest_cycle_vertices(grid);
    CoreGraph unit = core(Subgraph(grid, square));
    CHECK(unit.vertices.size() == 4);
    CHECK(planar_core_size_check(unit)); // 4 >= (0+2)(2-1)

    auto powers6 = truncated_quotient(Rank(2), preset_relators("powers", Rank(2), 6), 6, 3).first;
    CoreGraph hexagon = core(Subgraph(powers6, shortest_cycle_vertices(powers6)));
    CHECK(hexagon.vertices.size() == 6);
    CHECK(planar_core_size_check(hexagon)); // 6 >= 2 * (3-1)

    CoreGraph theta = core(whole(theta_graph()));
    CHECK(theta.ell == HalfInt{2});
    CHECK(planar_core_size_check(theta)); // 2 >= (1+2)(1-1) = 0, degenerate bound
}

TEST_CASE("isoperimetric upper bounds") {
    SchreierGraph tree = truncated_quotient(Rank(2), {}, 8, 0).first;
    std::vector<Subgraph> candidates;
    std::vector<std::string> names;
    default_iso_candidates(tree, 7, candidates, names);
    IsoUpperBound up = isoperimetric_upper(tree, candidates, names);
    CHECK(Rat(1, 2) < up.value); // tree witnesses never dip below (n-1)/n
    CHECK(up.value.value() < 0.52);

    SchreierGraph grid = grid_window(12);
    std::vector<Subgraph> gc;
    std::vector<std::string> gn;
    default_iso_candidates(grid, 11, gc, gn);
    IsoUpperBound gup = isoperimetric_upper(grid, gc, gn);
    CHECK(gup.value.value() < 0.12); // amenable: ratio sinks with the radius

    std::vector<std::uint32_t> square = shortest_cycle_vertices(grid);
    IsoUpperBound cyc = isoperimetric_upper(grid, {Subgraph(grid, square)}, {"square"});
    CHECK(cyc.value == Rat(1, 2)); // any m-cycle gives exactly 1/2 at n = 2

    CHECK_THROWS_AS(isoperimetric_upper(grid, {}, {}), std::invalid_argument);
}

TEST_CASE("planar isoperimetric lower bound") {
    CHECK(isoperimetric_lower_planar(Rank(2), HalfInt{8}).value == Rat(1, 3));
    auto vac = isoperimetric_lower_planar(Rank(2), HalfInt{4});
    CHECK(vac.value == Rat(0, 1));
    CHECK(vac.vacuous);
    CHECK(isoperimetric_lower_planar(Rank(3), HalfInt{10}).value == Rat(7, 12));
    CHECK(isoperimetric_lower_planar(Rank(2), HalfInt::infinity()).value == Rat(1, 2));
    CHECK(isoperimetric_lower_planar(Rank(2), HalfInt{2}).vacuous);
}

TEST_CASE("mohar growth bound") {
    CHECK(mohar_growth_lower(Rat(1, 2)) == Rat(3, 1));
    CHECK(mohar_growth_lower(Rat(1, 3)) == Rat(2, 1));
    CHECK(mohar_growth_lower(Rat(0, 1)) == Rat(1, 1));
    CHECK(mohar_growth_lower(0.5) == doctest::Approx(3.0));
    CHECK_THROWS_AS(mohar_growth_lower(1.0), std::domain_error);
}

TEST_CASE("cheeger lower bound") {
    CHECK(cheeger_lambda0_lower(0.5) ==
          doctest::Approx(1.0 - std::sqrt(3.0) / 2).epsilon(1e-12)); // tree equality case
    CHECK(cheeger_lambda0_lower(1.0 / 3) == doctest::Approx(0.05719).epsilon(1e-3));
    CHECK(cheeger_lambda0_lower(0.0) == 0.0);
    CHECK_THROWS_AS(cheeger_lambda0_lower(1.5), std::domain_error);
}

TEST_CASE("randomized cores satisfy the euler identity") {
    std::vector<SchreierGraph> hosts;
    hosts.push_back(grid_window(8));
    hosts.push_back(truncated_quotient(Rank(2), preset_relators("powers", Rank(2), 4), 8, 4).first);
    hosts.push_back(*todd_coxeter(Rank(2), rels(Rank(2), {"aa", "bb", "abAB"}), 100).graph);
    int nonempty = 0;
    for (const SchreierGraph& g : hosts) {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            Subgraph s = random_connected_subgraph(g, 4 + (seed % 30), seed);
            CoreGraph c = core(s);
            CHECK(euler_boundary_check(c, g.rank()));
            if (!c.trivial()) {
                ++nonempty;
                CHECK(c.chi <= 0);
                // chi invariance under stripping
                long long chi_s = static_cast<long long>(s.size()) -
                                  static_cast<long long>(s.edge_count());
                CHECK(chi_s == c.chi);
                if (is_planar(c.graph).planar) CHECK(planar_core_size_check(c));
            }
        }
    }
    CHECK(nonempty >= 40);
}

TEST_CASE("strip order independence") {
    // independent oracle: delete a random degree-<2 vertex until none remain
    SchreierGraph grid = grid_window(6);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Subgraph s = random_connected_subgraph(grid, 20, 1000 + trial);
        CoreGraph fast = core(s);

        std::vector<std::uint32_t> verts = s.vertices();
        auto degree_in = [&](std::uint32_t v, const std::vector<std::uint32_t>& set) {
            int d = 0;
            for (int l = 0; l < 4; ++l) {
                std::uint32_t t = grid.target(v, Letter::from_code(l));
                if (t != SchreierGraph::undefined &&
                    std::find(set.begin(), set.end(), t) != set.end())
                    ++d;
            }
            return d;
        };
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::uint32_t> low;
            for (auto v : verts)
                if (degree_in(v, verts) < 2) low.push_back(v);
            if (!low.empty()) {
                std::uint32_t victim = low[rng() % low.size()];
                verts.erase(std::find(verts.begin(), verts.end(), victim));
                changed = true;
            }
        }
        std::sort(verts.begin(), verts.end());
        CHECK(verts == fast.vertices);
    }
}

TEST_CASE("iso lower stays below iso upper") {
    for (int k : {4, 6, 8}) {
        auto g = truncated_quotient(Rank(2), preset_relators("powers", Rank(2), k), k, 2).first;
        HalfInt ell = injectivity_radius(g);
        IsoLowerBound low = isoperimetric_lower_planar(Rank(2), ell);
        std::vector<Subgraph> candidates;
        std::vector<std::string> names;
        default_iso_candidates(g, std::min(g.certified_radius() - 1, 5), candidates, names);
        IsoUpperBound up = isoperimetric_upper(g, candidates, names);
        CHECK(low.value <= up.value);
    }
}
