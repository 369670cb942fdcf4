#include "cogrowth/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "cogrowth/planarity.hpp"

namespace cogrowth {

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

namespace {

void check_certified_region(const Subgraph& s) {
    const SchreierGraph& g = s.host();
    if (g.is_exact()) return;
    std::vector<int> dist = distances_from_basepoint(g);
    for (std::uint32_t v : s.vertices())
        if (dist[v] < 0 || dist[v] > g.certified_radius() - 1)
            throw std::domain_error(
                "subgraph leaves the certified ball minus one shell; boundary counts "
                "would be unreliable");
}

bool subgraph_connected(const Subgraph& s) {
    if (s.size() == 0) return false;
    const SchreierGraph& g = s.host();
    std::vector<char> seen(g.size(), 0);
    std::queue<std::uint32_t> q;
    q.push(s.vertices()[0]);
    seen[s.vertices()[0]] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        std::uint32_t v = q.front();
        q.pop();
        for (int l = 0; l < g.rank().num_letters(); ++l) {
            std::uint32_t t = g.target(v, Letter::from_code(l));
            if (t == SchreierGraph::undefined || !s.contains(t) || seen[t]) continue;
            seen[t] = 1;
            ++reached;
            q.push(t);
        }
    }
    return reached == s.size();
}

} // namespace

long long boundary_count(const Subgraph& s) {
    check_certified_region(s);
    const int nl = s.host().rank().num_letters();
    long long total = 0;
    for (std::uint32_t v : s.vertices()) total += nl - s.degree(v);
    return total;
}

CoreGraph core(const Subgraph& s) {
    if (s.size() == 0) throw std::invalid_argument("core of an empty subgraph");
    if (!subgraph_connected(s)) throw std::invalid_argument("core of a disconnected subgraph");
    check_certified_region(s);

    const SchreierGraph& g = s.host();
    const int nl = g.rank().num_letters();
    std::vector<char> in(g.size(), 0);
    std::vector<int> deg(g.size(), 0);
    for (std::uint32_t v : s.vertices()) in[v] = 1;
    for (std::uint32_t v : s.vertices()) deg[v] = s.degree(v);

    std::queue<std::uint32_t> prune;
    for (std::uint32_t v : s.vertices())
        if (deg[v] < 2) prune.push(v);
    while (!prune.empty()) {
        std::uint32_t v = prune.front();
        prune.pop();
        if (!in[v] || deg[v] >= 2) continue;
        in[v] = 0;
        for (int l = 0; l < nl; ++l) {
            std::uint32_t t = g.target(v, Letter::from_code(l));
            if (t == SchreierGraph::undefined || !in[t]) continue;
            --deg[t];
            if (deg[t] < 2) prune.push(t);
        }
    }

    CoreGraph c;
    for (std::uint32_t v : s.vertices())
        if (in[v]) c.vertices.push_back(v);
    if (c.vertices.empty()) return c; // trivial core: the subgraph was a tree

    Subgraph remaining(g, c.vertices);
    c.graph = to_multigraph(remaining);
    c.chi = static_cast<long long>(c.vertices.size()) -
            static_cast<long long>(c.graph.edges.size());
    c.boundary = 0;
    for (std::uint32_t v : c.vertices) c.boundary += nl - remaining.degree(v);
    c.ell = nb_girth_half(c.graph);
    return c;
}

bool euler_boundary_check(const CoreGraph& c, Rank rank) {
    if (c.trivial()) return true;
    long long v = static_cast<long long>(c.vertices.size());
    return c.boundary == (2 * rank.n() - 2) * v + 2 * c.chi;
}

HalfInt injectivity_radius(const SchreierGraph& g) { return nb_girth_half(to_multigraph(g)); }

bool planar_core_size_check(const CoreGraph& c) {
    if (c.trivial()) return true;
    PlanarityVerdict verdict = is_planar(c.graph);
    if (!verdict.planar) throw std::invalid_argument("planar_core_size_check on a nonplanar core");
    if (c.ell.is_infinite())
        throw std::invalid_argument("core has infinite injectivity radius"); // cannot happen: min degree 2
    // |C| >= (-chi + 2)(ell - 1), doubled to stay in integers
    return 2 * static_cast<long long>(c.vertices.size()) >= (-c.chi + 2) * (c.ell.twice - 2);
}

IsoUpperBound isoperimetric_upper(const SchreierGraph& g, const std::vector<Subgraph>& candidates,
                                  const std::vector<std::string>& names) {
    if (candidates.empty()) throw std::invalid_argument("empty isoperimetric candidate family");
    const int nl = g.rank().num_letters();
    IsoUpperBound best;
    bool have = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Subgraph& a = candidates[i];
        if (a.size() == 0) continue;
        Rat value(boundary_count(a), static_cast<long long>(nl) * a.size());
        if (!have || value < best.value) {
            have = true;
            best.value = value;
            best.witness_index = i;
            best.witness = i < names.size() ? names[i] : "candidate " + std::to_string(i);
        }
    }
    if (!have) throw std::invalid_argument("all isoperimetric candidates empty");
    return best;
}

void default_iso_candidates(const SchreierGraph& g, int max_radius,
                            std::vector<Subgraph>& candidates, std::vector<std::string>& names) {
    for (int r = 0; r <= max_radius; ++r) {
        Subgraph b = ball(g, r);
        candidates.push_back(b);
        names.push_back("ball r=" + std::to_string(r));
        if (r >= 1) {
            CoreGraph c = core(b);
            if (!c.trivial()) {
                candidates.emplace_back(g, c.vertices);
                names.push_back("core(ball r=" + std::to_string(r) + ")");
            }
        }
    }
}

std::vector<std::uint32_t> shortest_cycle_vertices(const SchreierGraph& g) {
    Multigraph mg = to_multigraph(g);
    HalfInt girth = nb_girth_half(mg);
    if (girth.is_infinite()) return {};
    const long long target = girth.twice;

    // directed states, as in nb_girth_half
    std::vector<std::uint32_t> head(2 * mg.edges.size());
    std::vector<std::vector<std::uint32_t>> out(mg.num_vertices);
    for (std::size_t e = 0; e < mg.edges.size(); ++e) {
        auto [u, v] = mg.edges[e];
        head[2 * e] = v;
        head[2 * e + 1] = u;
        out[u].push_back(static_cast<std::uint32_t>(2 * e));
        out[v].push_back(static_cast<std::uint32_t>(2 * e + 1));
    }
    constexpr std::uint32_t no_edge = std::numeric_limits<std::uint32_t>::max();
    std::vector<int> dist(mg.num_vertices);
    std::vector<int> stamp(mg.num_vertices, -1);
    std::vector<std::uint32_t> pe(mg.num_vertices, no_edge);
    std::vector<std::uint32_t> pv(mg.num_vertices, 0);
    for (std::uint32_t start = 0; start < mg.num_vertices; ++start) {
        std::queue<std::uint32_t> q;
        stamp[start] = static_cast<int>(start);
        dist[start] = 0;
        pe[start] = no_edge;
        q.push(start);
        while (!q.empty()) {
            std::uint32_t x = q.front();
            q.pop();
            if (2LL * dist[x] >= target) continue;
            for (std::uint32_t f : out[x]) {
                if (pe[x] != no_edge && f == (pe[x] ^ 1)) continue;
                std::uint32_t y = head[f];
                if (stamp[y] != static_cast<int>(start)) {
                    stamp[y] = static_cast<int>(start);
                    dist[y] = dist[x] + 1;
                    pe[y] = f;
                    pv[y] = x;
                    q.push(y);
                } else if (static_cast<long long>(dist[x]) + dist[y] + 1 == target) {
                    std::vector<std::uint32_t> cycle;
                    for (std::uint32_t w = x;; w = pv[w]) {
                        cycle.push_back(w);
                        if (w == start) break;
                    }
                    for (std::uint32_t w = y;; w = pv[w]) {
                        cycle.push_back(w);
                        if (w == start) break;
                    }
                    std::sort(cycle.begin(), cycle.end());
                    cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
                    return cycle;
                }
            }
        }
    }
    return {}; // unreachable: the girth cycle is found from one of its vertices
}

IsoLowerBound isoperimetric_lower_planar(Rank rank, HalfInt ell) {
    const long long n = rank.n();
    if (ell.is_infinite()) return {Rat(n - 1, n), false};
    if (ell.twice <= 2) return {Rat(0, 1), true};
    Rat value = Rat(n - 1, n) - Rat(2, n * (ell.twice - 2));
    if (value.num <= 0) return {Rat(0, 1), true};
    return {value, false};
}

Rat mohar_growth_lower(Rat iso_lower) {
    if (iso_lower.num < 0 || !(iso_lower < Rat(1, 1)))
        throw std::domain_error("isoperimetric lower bound outside [0, 1)");
    return (Rat(1, 1) + iso_lower) / (Rat(1, 1) - iso_lower);
}

double mohar_growth_lower(double iso_lower) {
    if (iso_lower < 0.0 || iso_lower >= 1.0)
        throw std::domain_error("isoperimetric lower bound outside [0, 1)");
    return (1.0 + iso_lower) / (1.0 - iso_lower);
}

double cheeger_lambda0_lower(double iso_lower) {
    if (iso_lower < 0.0 || iso_lower > 1.0)
        throw std::domain_error("isoperimetric lower bound outside [0, 1]");
    return 1.0 - std::sqrt(1.0 - iso_lower * iso_lower);
}

} // namespace cogrowth
