#include "cogrowth/multigraph.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace cogrowth {

double HalfInt::value() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(twice) / 2.0;
}

Multigraph to_multigraph(const SchreierGraph& g) {
    Multigraph out;
    out.num_vertices = g.size();
    const int nl = g.rank().num_letters();
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        for (int l = 0; l < nl; ++l) {
            Letter let = Letter::from_code(l);
            std::uint32_t t = g.target(v, let);
            if (t == SchreierGraph::undefined) continue;
            // emit each involution orbit {(v,l),(t,l^-1)} once
            if (t < v) continue;
            if (t == v && let.inverse().code() < l) continue;
            out.add_edge(v, t);
        }
    }
    return out;
}

Multigraph to_multigraph(const Subgraph& s) {
    const SchreierGraph& g = s.host();
    const int nl = g.rank().num_letters();
    std::vector<std::uint32_t> index(g.size(), SchreierGraph::undefined);
    for (std::size_t i = 0; i < s.vertices().size(); ++i) index[s.vertices()[i]] = i;
    Multigraph out;
    out.num_vertices = s.vertices().size();
    for (std::uint32_t v : s.vertices()) {
        for (int l = 0; l < nl; ++l) {
            Letter let = Letter::from_code(l);
            std::uint32_t t = g.target(v, let);
            if (t == SchreierGraph::undefined || !s.contains(t)) continue;
            if (t < v) continue;
            if (t == v && let.inverse().code() < l) continue;
            out.add_edge(index[v], index[t]);
        }
    }
    return out;
}

namespace {

struct DirectedView {
    // directed states 2e, 2e+1 per undirected edge; reversal flips the low bit
    std::vector<std::uint32_t> head;             // target vertex of each state
    std::vector<std::vector<std::uint32_t>> out; // states leaving each vertex

    explicit DirectedView(const Multigraph& g) : head(2 * g.edges.size()), out(g.num_vertices) {
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            auto [u, v] = g.edges[e];
            if (u >= g.num_vertices || v >= g.num_vertices)
                throw std::invalid_argument("multigraph edge endpoint out of range");
            head[2 * e] = v;
            head[2 * e + 1] = u;
            out[u].push_back(static_cast<std::uint32_t>(2 * e));
            out[v].push_back(static_cast<std::uint32_t>(2 * e + 1));
        }
    }
};

bool is_forest(const Multigraph& g) {
    std::vector<std::uint32_t> parent(g.num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [u, v] : g.edges) {
        std::uint32_t ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

} // namespace

HalfInt nb_girth_half(const Multigraph& g) {
    if (g.edges.empty() || is_forest(g)) return HalfInt::infinity();
    DirectedView dv(g);
    constexpr std::uint32_t no_edge = std::numeric_limits<std::uint32_t>::max();
    long long best = HalfInt::infinite;

    // spanning pass: every non-tree edge closes a genuine non-backtracking
    // walk of length dist(x) + dist(y) + 1, giving an upper bound that caps
    // the exact per-vertex searches below
    {
        std::vector<int> dist(g.num_vertices, -1);
        std::vector<std::uint32_t> pe(g.num_vertices, no_edge);
        for (std::uint32_t root = 0; root < g.num_vertices; ++root) {
            if (dist[root] >= 0) continue;
            std::queue<std::uint32_t> q;
            dist[root] = 0;
            q.push(root);
            while (!q.empty()) {
                std::uint32_t x = q.front();
                q.pop();
                for (std::uint32_t f : dv.out[x]) {
                    if (pe[x] != no_edge && f == (pe[x] ^ 1)) continue;
                    std::uint32_t y = dv.head[f];
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        pe[y] = f;
                        q.push(y);
                    } else {
                        best = std::min(best, static_cast<long long>(dist[x]) + dist[y] + 1);
                    }
                }
            }
        }
    }

    // exact minimum: capped BFS from each vertex; the shortest closed
    // non-backtracking walk is a simple cycle, so it is seen from any of its
    // vertices as the first meeting of two branches
    std::vector<int> dist(g.num_vertices);
    std::vector<int> stamp(g.num_vertices, -1);
    std::vector<std::uint32_t> pe(g.num_vertices, no_edge);
    for (std::uint32_t start = 0; start < g.num_vertices; ++start) {
        if (best <= 1) break;
        std::queue<std::uint32_t> q;
        stamp[start] = static_cast<int>(start);
        dist[start] = 0;
        pe[start] = no_edge;
        q.push(start);
        while (!q.empty()) {
            std::uint32_t x = q.front();
            q.pop();
            if (2LL * dist[x] >= best) continue;
            for (std::uint32_t f : dv.out[x]) {
                if (pe[x] != no_edge && f == (pe[x] ^ 1)) continue;
                std::uint32_t y = dv.head[f];
                if (stamp[y] != static_cast<int>(start)) {
                    stamp[y] = static_cast<int>(start);
                    dist[y] = dist[x] + 1;
                    pe[y] = f;
                    q.push(y);
                } else {
                    best = std::min(best, static_cast<long long>(dist[x]) + dist[y] + 1);
                }
            }
        }
    }
    return HalfInt::of_cycle_length(best);
}

} // namespace cogrowth
