#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "cogrowth/counting.hpp"
#include "cogrowth/schreier.hpp"
#include "oracles.hpp"

using namespace cogrowth;

namespace {

std::vector<ReducedWord> rels(Rank rank, std::initializer_list<const char*> words) {
    std::vector<ReducedWord> out;
    for (const char* t : words) out.push_back(parse_word(rank, t));
    return out;
}

} // namespace

TEST_CASE("todd-coxeter: full quotient is the rose") {
    auto res = todd_coxeter(Rank(2), rels(Rank(2), {"a", "b"}), 100);
    REQUIRE(res.graph.has_value());
    const SchreierGraph& g = *res.graph;
    CHECK(g.size() == 1);
    CHECK(g.is_exact());
    for (int l = 0; l < 4; ++l) CHECK(g.target(0, Letter::from_code(l)) == 0);
    validate(g);
}

TEST_CASE("todd-coxeter: klein four-group") {
    auto res = todd_coxeter(Rank(2), rels(Rank(2), {"aa", "bb", "abAB"}), 100);
    REQUIRE(res.graph.has_value());
    CHECK(res.graph->size() == 4);
    CHECK(res.graph->is_exact());
    validate(*res.graph);
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(res.graph->degree(v) == 4);
}

TEST_CASE("todd-coxeter: infinite quotient overflows") {
    auto res = todd_coxeter(Rank(2), rels(Rank(2), {"ab"}), 1000);
    CHECK(res.overflow);
    CHECK_FALSE(res.graph.has_value());
}

TEST_CASE("todd-coxeter rejects non-cyclically-reduced relators") {
    CHECK_THROWS_AS(todd_coxeter(Rank(2), rels(Rank(2), {"abA"}), 100), std::invalid_argument);
}

TEST_CASE("truncated quotient: commutator window is the grid") {
    auto [g, diag] = truncated_quotient(Rank(2), rels(Rank(2), {"abAB"}), 2, 4);
    CHECK(g.size() == 13); // lattice ball: 2r^2 + 2r + 1
    CHECK(diag.certified_radius >= 2);
    validate(g);
    auto lattice = oracles::lattice_ball_counts(2);
    CHECK(lattice[2] == 13);
}

TEST_CASE("truncated quotient: empty relators give the tree window") {
    auto [g, diag] = truncated_quotient(Rank(2), {}, 3, 2);
    CHECK(g.size() == 53); // 2*3^3 - 1
    CHECK_FALSE(g.is_exact());
    CHECK(diag.certified_radius == 3);
    CHECK_FALSE(diag.closed);
    validate(g);
}

TEST_CASE("truncated quotient stabilizes to the exact finite quotient") {
    auto tc = todd_coxeter(Rank(2), rels(Rank(2), {"aa", "bb", "abAB"}), 100);
    auto [g, diag] = truncated_quotient(Rank(2), rels(Rank(2), {"aa", "bb", "abAB"}), 8, 8);
    CHECK(diag.closed);
    CHECK(g.is_exact());
    CHECK(canonicalize(g) == canonicalize(*tc.graph));
}

TEST_CASE("fold merges same-labeled edges") {
    PreGraph pre;
    pre.rank = Rank(2);
    pre.num_vertices = 3;
    pre.basepoint = 0;
    Letter a = Letter::make(1, +1);
    pre.edges.push_back({0, a, 1});
    pre.edges.push_back({0, a, 2});
    SchreierGraph g = fold(pre);
    CHECK(g.size() == 2); // v1 and v2 merged
    CHECK(g.target(0, a) == 1);
}

TEST_CASE("fold leaves deterministic graphs unchanged") {
    auto [g, diag] = truncated_quotient(Rank(2), rels(Rank(2), {"abAB"}), 3, 4);
    PreGraph pre;
    pre.rank = g.rank();
    pre.num_vertices = static_cast<std::uint32_t>(g.size());
    pre.basepoint = g.basepoint();
    for (std::uint32_t v = 0; v < g.size(); ++v)
        for (int l = 0; l < 4; ++l) {
            Letter let = Letter::from_code(l);
            std::uint32_t t = g.target(v, let);
            if (t == SchreierGraph::undefined) continue;
            if (t < v || (t == v && let.inverse().code() < l)) continue;
            pre.edges.push_back({v, let, t});
        }
    SchreierGraph folded = fold(pre);
    CHECK(folded == canonicalize(g));

    SUBCASE("idempotence under shuffles") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(pre.edges.begin(), pre.edges.end(), rng);
            CHECK(fold(pre) == folded);
        }
    }
}

TEST_CASE("fold confluence on a relator-gluing pre-graph") {
    // wedge of loops a^2, b^2, abAB at the basepoint, built from fresh vertices
    PreGraph pre;
    pre.rank = Rank(2);
    pre.basepoint = 0;
    std::uint32_t next = 1;
    auto add_loop = [&](const ReducedWord& w) {
        std::uint32_t cur = 0;
        for (std::size_t i = 0; i < w.length(); ++i) {
            std::uint32_t to = (i + 1 == w.length()) ? 0 : next++;
            pre.edges.push_back({cur, w.at(i), to});
            cur = to;
        }
    };
    for (const auto& r : rels(Rank(2), {"aa", "bb", "abAB"})) add_loop(r);
    pre.num_vertices = next;

    SchreierGraph reference = fold(pre);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::shuffle(pre.edges.begin(), pre.edges.end(), rng);
        CHECK(fold(pre) == reference);
    }
}

TEST_CASE("balls") {
    auto rose = todd_coxeter(Rank(2), rels(Rank(2), {"a", "b"}), 10);
    CHECK(ball(*rose.graph, 5).size() == 1);

    auto [grid, d1] = truncated_quotient(Rank(2), rels(Rank(2), {"abAB"}), 4, 6);
    CHECK(ball(grid, 2).size() == 13);

    auto [tree, d2] = truncated_quotient(Rank(2), {}, 4, 0);
    CHECK(ball(tree, 2).size() == 17);
    CHECK_THROWS_AS(ball(tree, 5), std::domain_error); // beyond certified radius
}

TEST_CASE("deepening monotonicity") {
    for (const char* preset : {"klein", "powers6"}) {
        std::vector<ReducedWord> relators = std::string(preset) == "klein"
                                                ? rels(Rank(2), {"aa", "bb", "abAB"})
                                                : rels(Rank(2), {"aaaaaa", "bbbbbb"});
        const int R = 5;
        std::size_t prev_vertices = 0;
        BigInt prev_loops = -1;
        for (int L = 0; L <= 4; ++L) {
            auto [g, diag] = truncated_quotient(Rank(2), relators, R, L);
            std::size_t ball_size = ball(g, std::min(R, diag.certified_radius)).size();
            (void)ball_size;
            std::size_t vertices = g.size();
            if (L > 0) CHECK(vertices <= prev_vertices);
            prev_vertices = vertices;
            // loop counts at a fixed radius are nondecreasing in the deepening level
            LoopCounts lc = loop_counts(g, std::min(4, 2 * diag.certified_radius));
            if (lc.counts.size() >= 5) {
                if (prev_loops >= 0) CHECK(lc.counts[4] >= prev_loops);
                prev_loops = lc.counts[4];
            }
        }
    }
}

TEST_CASE("exact graphs are 2n-regular") {
    auto res = todd_coxeter(Rank(3), {parse_word(Rank(3), "a"), parse_word(Rank(3), "b"),
                                      parse_word(Rank(3), "c")},
                            10);
    REQUIRE(res.graph.has_value());
    CHECK(res.graph->size() == 1);
    for (int l = 0; l < 6; ++l) CHECK(res.graph->target(0, Letter::from_code(l)) == 0);
}

TEST_CASE("graph dump round trip") {
    auto [g, diag] = truncated_quotient(Rank(2), rels(Rank(2), {"abAB"}), 3, 4);
    std::stringstream buf;
    write_dump(g, buf);
    SchreierGraph back = read_dump(buf);
    CHECK(back == g);
    CHECK(back.certified_radius() == g.certified_radius());

    auto klein = todd_coxeter(Rank(2), rels(Rank(2), {"aa", "bb", "abAB"}), 100);
    std::stringstream buf2;
    write_dump(*klein.graph, buf2);
    SchreierGraph back2 = read_dump(buf2);
    CHECK(back2.is_exact());
    CHECK(back2 == *klein.graph);
}

TEST_CASE("equal_ball distinguishes graphs") {
    auto [tree, d1] = truncated_quotient(Rank(2), {}, 4, 0);
    auto [grid, d2] = truncated_quotient(Rank(2), rels(Rank(2), {"abAB"}), 4, 6);
    CHECK(equal_ball(tree, grid, 1));
    CHECK_FALSE(equal_ball(tree, grid, 2)); // first identifications at radius 2
    CHECK(equal_ball(grid, grid, 4));
}
