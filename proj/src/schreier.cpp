#include "cogrowth/schreier.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cogrowth {

namespace {

constexpr std::uint32_t kUndef = SchreierGraph::undefined;

struct OverflowSignal {};

/// Coset table with union-find merging and a coincidence queue. Entries may be
/// stale (dead coset ids); act() resolves through representatives.
class CosetTable {
public:
    CosetTable(Rank rank, std::size_t max_live) : rank_(rank), cap_(max_live) {}

    Rank rank() const { return rank_; }
    std::size_t total() const { return parent_.size(); }
    std::size_t live_count() const { return live_; }

    std::uint32_t add_coset() {
        if (live_ >= cap_) throw OverflowSignal{};
        parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
        table_.resize(table_.size() + rank_.num_letters(), kUndef);
        ++live_;
        return parent_.back();
    }

    bool is_live(std::uint32_t c) const { return parent_[c] == c; }

    std::uint32_t rep(std::uint32_t c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    std::uint32_t act(std::uint32_t c, Letter l) {
        std::uint32_t t = slot(rep(c), l);
        return t == kUndef ? kUndef : rep(t);
    }

    /// Records c --l--> d (and the involutive partner), queueing coincidences
    /// on determinism conflicts, then drains the queue.
    void set(std::uint32_t c, Letter l, std::uint32_t d) {
        push_edge(rep(c), l, rep(d));
        drain();
    }

    /// Traces the relator from alpha, filling gaps with fresh cosets and
    /// closing the loop. Returns true if the table changed.
    bool scan_and_fill(std::uint32_t alpha, const ReducedWord& w) {
        alpha = rep(alpha);
        const std::size_t m = w.length();
        std::uint32_t f = alpha;
        std::size_t i = 0;
        while (i < m) {
            std::uint32_t t = act(f, w.at(i));
            if (t == kUndef) break;
            f = t;
            ++i;
        }
        if (i == m) {
            if (f != alpha) {
                push_edge_queue(f, alpha);
                drain();
                return true;
            }
            return false;
        }
        std::uint32_t b = alpha;
        std::size_t j = m;
        while (j > i + 1) {
            std::uint32_t t = act(b, w.at(j - 1).inverse());
            if (t == kUndef) break;
            b = t;
            --j;
        }
        // fill the remaining gap with fresh cosets, then deduce the last edge
        while (j - i >= 2) {
            std::uint32_t d = add_coset();
            push_edge(rep(f), w.at(i), d);
            drain();
            f = rep(d);
            ++i;
        }
        push_edge(rep(f), w.at(i), rep(b));
        drain();
        return true;
    }

    /// True iff the relator trace from alpha is fully defined and returns to alpha.
    bool scans_closed(std::uint32_t alpha, const ReducedWord& w) {
        std::uint32_t c = rep(alpha);
        for (std::size_t i = 0; i < w.length(); ++i) {
            c = act(c, w.at(i));
            if (c == kUndef) return false;
        }
        return c == rep(alpha);
    }

    bool complete() {
        for (std::uint32_t v = 0; v < total(); ++v) {
            if (!is_live(v)) continue;
            for (int l = 0; l < rank_.num_letters(); ++l)
                if (act(v, Letter::from_code(l)) == kUndef) return false;
        }
        return true;
    }

    /// Distances from rep(0), indexed by coset id; meaningful at live reps only.
    std::vector<int> bfs_distances() {
        std::vector<int> dist(total(), -1);
        std::queue<std::uint32_t> q;
        std::uint32_t o = rep(0);
        dist[o] = 0;
        q.push(o);
        while (!q.empty()) {
            std::uint32_t v = q.front();
            q.pop();
            for (int l = 0; l < rank_.num_letters(); ++l) {
                std::uint32_t t = act(v, Letter::from_code(l));
                if (t != kUndef && dist[t] < 0) {
                    dist[t] = dist[v] + 1;
                    q.push(t);
                }
            }
        }
        return dist;
    }

    /// BFS-canonical extraction of the ball of the given radius around rep(0);
    /// edges leaving the ball become undefined.
    SchreierGraph extract_ball(int radius, Exactness e, int certified) {
        std::vector<int> dist = bfs_distances();
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> id(total(), kUndef);
        std::uint32_t o = rep(0);
        id[o] = 0;
        order.push_back(o);
        for (std::size_t head = 0; head < order.size(); ++head) {
            std::uint32_t v = order[head];
            for (int l = 0; l < rank_.num_letters(); ++l) {
                std::uint32_t t = act(v, Letter::from_code(l));
                if (t == kUndef || dist[t] > radius || id[t] != kUndef) continue;
                id[t] = static_cast<std::uint32_t>(order.size());
                order.push_back(t);
            }
        }
        SchreierGraph g(rank_, order.size(), e, certified);
        for (std::size_t v = 0; v < order.size(); ++v) {
            for (int l = 0; l < rank_.num_letters(); ++l) {
                std::uint32_t t = act(order[v], Letter::from_code(l));
                if (t == kUndef || dist[t] > radius || id[t] == kUndef) continue;
                g.set_transition(static_cast<std::uint32_t>(v), Letter::from_code(l), id[t]);
            }
        }
        return g;
    }

private:
    std::uint32_t& slot(std::uint32_t c, Letter l) {
        return table_[static_cast<std::size_t>(c) * rank_.num_letters() + l.code()];
    }

    void push_edge_queue(std::uint32_t a, std::uint32_t b) { pending_.push_back({a, b}); }

    /// Writes the edge at representatives, queueing any conflicts.
    void push_edge(std::uint32_t c, Letter l, std::uint32_t d) {
        std::uint32_t& fwd = slot(c, l);
        std::uint32_t cur = fwd == kUndef ? kUndef : rep(fwd);
        if (cur == kUndef) {
            fwd = d;
            std::uint32_t& back = slot(d, l.inverse());
            std::uint32_t bcur = back == kUndef ? kUndef : rep(back);
            if (bcur == kUndef)
                back = c;
            else if (bcur != c)
                push_edge_queue(bcur, c);
        } else if (cur != d) {
            push_edge_queue(cur, d);
        }
    }

    void drain() {
        while (!pending_.empty()) {
            auto [a, b] = pending_.front();
            pending_.pop_front();
            a = rep(a);
            b = rep(b);
            if (a == b) continue;
            if (b < a) std::swap(a, b); // keep the older coset as representative
            parent_[b] = a;
            --live_;
            for (int l = 0; l < rank_.num_letters(); ++l) {
                std::uint32_t t = slot(b, Letter::from_code(l));
                if (t != kUndef) push_edge(a, Letter::from_code(l), rep(t));
            }
        }
    }

    Rank rank_;
    std::size_t cap_;
    std::size_t live_ = 0;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> table_;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

void check_relators(const std::vector<ReducedWord>& relators, Rank rank) {
    for (const auto& r : relators) {
        if (r.rank() != rank) throw std::invalid_argument("relator rank mismatch");
        if (!is_cyclically_reduced(r))
            throw std::invalid_argument("relator '" + to_string(r) + "' is not cyclically reduced");
    }
}

std::vector<ReducedWord> drop_trivial(const std::vector<ReducedWord>& relators) {
    std::vector<ReducedWord> out;
    for (const auto& r : relators)
        if (!r.empty()) out.push_back(r);
    return out;
}

} // namespace

SchreierGraph::SchreierGraph(Rank rank, std::size_t vertices, Exactness e, int certified_radius)
    : rank_(rank), exact_(e), certified_radius_(certified_radius),
      table_(vertices * rank.num_letters(), undefined) {}

int SchreierGraph::degree(std::uint32_t v) const {
    int d = 0;
    for (int l = 0; l < rank_.num_letters(); ++l)
        if (has_edge(v, Letter::from_code(l))) ++d;
    return d;
}

void SchreierGraph::set_transition(std::uint32_t v, Letter l, std::uint32_t w) {
    table_[static_cast<std::size_t>(v) * rank_.num_letters() + l.code()] = w;
    table_[static_cast<std::size_t>(w) * rank_.num_letters() + l.inverse().code()] = v;
}

ToddCoxeterResult todd_coxeter(Rank rank, const std::vector<ReducedWord>& relators,
                               std::size_t max_cosets) {
    check_relators(relators, rank);
    auto rels = drop_trivial(relators);
    CosetTable ct(rank, max_cosets);
    try {
        ct.add_coset();
        for (std::uint32_t alpha = 0; alpha < ct.total(); ++alpha) {
            if (!ct.is_live(alpha)) continue;
            for (const auto& r : rels) {
                ct.scan_and_fill(alpha, r);
                if (!ct.is_live(alpha)) break;
            }
            if (!ct.is_live(alpha)) continue;
            for (int l = 0; l < rank.num_letters(); ++l) {
                if (!ct.is_live(alpha)) break;
                if (ct.act(alpha, Letter::from_code(l)) == kUndef) {
                    std::uint32_t d = ct.add_coset();
                    ct.set(alpha, Letter::from_code(l), d);
                }
            }
        }
    } catch (const OverflowSignal&) {
        return {std::nullopt, true, ct.total()};
    }
    SchreierGraph g = ct.extract_ball(std::numeric_limits<int>::max(), Exactness::exact, 0);
    return {std::move(g), false, ct.total()};
}

namespace {

/// One deepening level of the windowed build. Returns the full working table
/// and whether a finite quotient closed.
struct WindowBuild {
    CosetTable table;
    bool closed;
};

WindowBuild build_window(Rank rank, const std::vector<ReducedWord>& rels, int radius, int depth,
                         std::size_t max_cosets) {
    CosetTable ct(rank, max_cosets);
    ct.add_coset();
    if (!rels.empty()) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> dist = ct.bfs_distances();
            std::size_t known = ct.total();
            // realize every tree word of length <= depth as a vertex
            for (std::uint32_t v = 0; v < known; ++v) {
                if (!ct.is_live(v) || dist[v] < 0 || dist[v] >= depth) continue;
                for (int l = 0; l < rank.num_letters(); ++l) {
                    if (!ct.is_live(v)) break;
                    if (ct.act(v, Letter::from_code(l)) == kUndef) {
                        std::uint32_t d = ct.add_coset();
                        ct.set(v, Letter::from_code(l), d);
                        changed = true;
                    }
                }
            }
            // close every relator at every vertex within the deepening window
            for (std::uint32_t v = 0; v < known; ++v) {
                if (!ct.is_live(v) || dist[v] < 0 || dist[v] > depth) continue;
                for (const auto& r : rels) {
                    if (!ct.is_live(v)) break;
                    changed |= ct.scan_and_fill(v, r);
                }
            }
        }
    }
    bool closed = ct.complete();
    if (closed) {
        for (std::uint32_t v = 0; v < ct.total() && closed; ++v) {
            if (!ct.is_live(v)) continue;
            for (const auto& r : rels)
                if (!ct.scans_closed(v, r)) {
                    closed = false;
                    break;
                }
        }
    }
    if (!closed) {
        // hang tree transitions out to the requested radius; no merges can
        // occur here, so BFS distances are final on first visit
        std::uint32_t o = ct.rep(0);
        std::vector<int> dist(ct.total(), -1);
        dist[o] = 0;
        std::queue<std::uint32_t> q;
        q.push(o);
        while (!q.empty()) {
            std::uint32_t v = q.front();
            q.pop();
            if (dist[v] >= radius) continue;
            for (int l = 0; l < rank.num_letters(); ++l) {
                std::uint32_t t = ct.act(v, Letter::from_code(l));
                if (t == kUndef) {
                    t = ct.add_coset();
                    ct.set(v, Letter::from_code(l), t);
                    dist.push_back(-1);
                }
                if (dist[t] < 0) {
                    dist[t] = dist[v] + 1;
                    q.push(t);
                }
            }
        }
    }
    return {std::move(ct), closed};
}

} // namespace

std::pair<SchreierGraph, BuildDiagnostics>
truncated_quotient(Rank rank, const std::vector<ReducedWord>& relators, int radius, int depth,
                   std::size_t max_cosets) {
    if (radius < 1) throw std::invalid_argument("radius must be at least 1");
    if (depth < 0) throw std::invalid_argument("deepening level must be nonnegative");
    check_relators(relators, rank);
    auto rels = drop_trivial(relators);
    try {
        WindowBuild base = build_window(rank, rels, radius, depth, max_cosets);
        BuildDiagnostics diag;
        diag.deepening_level = depth;
        if (base.closed) {
            SchreierGraph g =
                base.table.extract_ball(std::numeric_limits<int>::max(), Exactness::exact, 0);
            diag.closed = true;
            diag.coset_count = g.size();
            diag.certified_radius = radius;
            return {std::move(g), diag};
        }
        SchreierGraph g = base.table.extract_ball(radius, Exactness::approx, 0);
        int certified = radius;
        if (!rels.empty()) {
            WindowBuild deeper = build_window(rank, rels, radius, depth + 1, max_cosets);
            SchreierGraph g1 = deeper.table.extract_ball(radius, Exactness::approx, 0);
            certified = 0;
            for (int r = radius; r >= 1; --r) {
                if (equal_ball(g, g1, r)) {
                    certified = r;
                    break;
                }
            }
        }
        SchreierGraph out(rank, g.size(), Exactness::approx, certified);
        for (std::uint32_t v = 0; v < g.size(); ++v)
            for (int l = 0; l < rank.num_letters(); ++l) {
                Letter let = Letter::from_code(l);
                if (g.has_edge(v, let)) out.set_transition(v, let, g.target(v, let));
            }
        diag.closed = false;
        diag.coset_count = out.size();
        diag.certified_radius = certified;
        return {std::move(out), diag};
    } catch (const OverflowSignal&) {
        throw std::runtime_error("resource cap exceeded: live cosets reached " +
                                 std::to_string(max_cosets));
    }
}

SchreierGraph fold(const PreGraph& pre) {
    if (pre.basepoint >= pre.num_vertices && pre.num_vertices > 0)
        throw std::invalid_argument("basepoint out of range");
    CosetTable ct(pre.rank, static_cast<std::size_t>(pre.num_vertices) + 1);
    for (std::uint32_t v = 0; v < pre.num_vertices; ++v) ct.add_coset();
    if (pre.num_vertices == 0) ct.add_coset();
    // move the basepoint to coset 0 so extract_ball starts there
    std::vector<std::uint32_t> map(pre.num_vertices);
    for (std::uint32_t v = 0; v < pre.num_vertices; ++v) map[v] = v;
    std::swap(map[0], map[pre.basepoint]);
    for (const auto& e : pre.edges) {
        if (e.from >= pre.num_vertices || e.to >= pre.num_vertices)
            throw std::invalid_argument("pre-graph edge endpoint out of range");
        if (!e.letter.valid_for(pre.rank))
            throw std::invalid_argument("pre-graph edge letter out of range");
        ct.set(map[e.from], e.letter, map[e.to]);
    }
    return ct.extract_ball(std::numeric_limits<int>::max(), Exactness::approx, 0);
}

SchreierGraph canonicalize(const SchreierGraph& g) {
    const int nl = g.rank().num_letters();
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> id(g.size(), kUndef);
    if (g.size() == 0) return g;
    id[g.basepoint()] = 0;
    order.push_back(g.basepoint());
    for (std::size_t head = 0; head < order.size(); ++head) {
        std::uint32_t v = order[head];
        for (int l = 0; l < nl; ++l) {
            std::uint32_t t = g.target(v, Letter::from_code(l));
            if (t == kUndef || id[t] != kUndef) continue;
            id[t] = static_cast<std::uint32_t>(order.size());
            order.push_back(t);
        }
    }
    SchreierGraph out(g.rank(), order.size(), g.exactness(),
                      g.is_exact() ? 0 : g.certified_radius());
    for (std::size_t v = 0; v < order.size(); ++v)
        for (int l = 0; l < nl; ++l) {
            std::uint32_t t = g.target(order[v], Letter::from_code(l));
            if (t != kUndef && id[t] != kUndef)
                out.set_transition(static_cast<std::uint32_t>(v), Letter::from_code(l), id[t]);
        }
    return out;
}

std::vector<int> distances_from_basepoint(const SchreierGraph& g) {
    std::vector<int> dist(g.size(), -1);
    std::queue<std::uint32_t> q;
    dist[g.basepoint()] = 0;
    q.push(g.basepoint());
    while (!q.empty()) {
        std::uint32_t v = q.front();
        q.pop();
        for (int l = 0; l < g.rank().num_letters(); ++l) {
            std::uint32_t t = g.target(v, Letter::from_code(l));
            if (t != kUndef && dist[t] < 0) {
                dist[t] = dist[v] + 1;
                q.push(t);
            }
        }
    }
    return dist;
}

bool equal_ball(const SchreierGraph& a, const SchreierGraph& b, int r) {
    if (a.rank() != b.rank()) return false;
    const int nl = a.rank().num_letters();
    std::vector<int> da = distances_from_basepoint(a);
    std::vector<int> db = distances_from_basepoint(b);
    std::vector<std::uint32_t> a2b(a.size(), kUndef), b2a(b.size(), kUndef);
    std::queue<std::pair<std::uint32_t, std::uint32_t>> q;
    a2b[a.basepoint()] = b.basepoint();
    b2a[b.basepoint()] = a.basepoint();
    q.push({a.basepoint(), b.basepoint()});
    std::size_t matched = 1;
    while (!q.empty()) {
        auto [va, vb] = q.front();
        q.pop();
        for (int l = 0; l < nl; ++l) {
            std::uint32_t ta = a.target(va, Letter::from_code(l));
            std::uint32_t tb = b.target(vb, Letter::from_code(l));
            if (ta != kUndef && da[ta] > r) ta = kUndef;
            if (tb != kUndef && db[tb] > r) tb = kUndef;
            if ((ta == kUndef) != (tb == kUndef)) return false;
            if (ta == kUndef) continue;
            if (a2b[ta] != kUndef || b2a[tb] != kUndef) {
                if (a2b[ta] != tb || b2a[tb] != ta) return false;
                continue;
            }
            a2b[ta] = tb;
            b2a[tb] = ta;
            ++matched;
            q.push({ta, tb});
        }
    }
    std::size_t count_a = 0, count_b = 0;
    for (std::size_t v = 0; v < a.size(); ++v)
        if (da[v] >= 0 && da[v] <= r) ++count_a;
    for (std::size_t v = 0; v < b.size(); ++v)
        if (db[v] >= 0 && db[v] <= r) ++count_b;
    return matched == count_a && matched == count_b;
}

Subgraph::Subgraph(const SchreierGraph& host, std::vector<std::uint32_t> vertices)
    : host_(&host), verts_(std::move(vertices)), member_(host.size(), 0) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    for (std::uint32_t v : verts_) {
        if (v >= host.size()) throw std::invalid_argument("subgraph vertex out of range");
        member_[v] = 1;
    }
}

int Subgraph::degree(std::uint32_t v) const {
    int d = 0;
    for (int l = 0; l < host_->rank().num_letters(); ++l) {
        std::uint32_t t = host_->target(v, Letter::from_code(l));
        if (t != kUndef && contains(t)) ++d;
    }
    return d;
}

std::size_t Subgraph::edge_count() const {
    std::size_t deg_sum = 0;
    for (std::uint32_t v : verts_) deg_sum += static_cast<std::size_t>(degree(v));
    return deg_sum / 2;
}

Subgraph ball(const SchreierGraph& g, int r) {
    if (r < 0) throw std::invalid_argument("ball radius must be nonnegative");
    if (r > g.certified_radius())
        throw std::domain_error("radius " + std::to_string(r) +
                                " exceeds certified radius " +
                                std::to_string(g.certified_radius()));
    std::vector<int> dist = distances_from_basepoint(g);
    std::vector<std::uint32_t> verts;
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (dist[v] >= 0 && dist[v] <= r) verts.push_back(v);
    return Subgraph(g, std::move(verts));
}

void validate(const SchreierGraph& g) {
    if (g.size() == 0) throw std::logic_error("empty graph");
    if (g.basepoint() >= g.size()) throw std::logic_error("basepoint out of range");
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        for (int l = 0; l < g.rank().num_letters(); ++l) {
            Letter let = Letter::from_code(l);
            std::uint32_t t = g.target(v, let);
            if (t == kUndef) {
                if (g.is_exact())
                    throw std::logic_error("exact graph has an undefined transition");
                continue;
            }
            if (t >= g.size()) throw std::logic_error("transition target out of range");
            if (g.target(t, let.inverse()) != v)
                throw std::logic_error("involution violated at vertex " + std::to_string(v));
        }
    }
}

void write_dump(const SchreierGraph& g, std::ostream& out) {
    out << "rank " << g.rank().n() << " vertices " << g.size() << " basepoint " << g.basepoint()
        << ' ';
    if (g.is_exact())
        out << "exact\n";
    else
        out << "approx:" << g.certified_radius() << '\n';
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        out << v;
        for (int l = 0; l < g.rank().num_letters(); ++l) {
            std::uint32_t t = g.target(v, Letter::from_code(l));
            if (t == kUndef)
                out << " -";
            else
                out << ' ' << t;
        }
        out << '\n';
    }
}

SchreierGraph read_dump(std::istream& in) {
    std::string kw1, kw2, kw3, mode;
    int n = 0;
    std::size_t vertices = 0;
    std::uint32_t basepoint = 0;
    if (!(in >> kw1 >> n >> kw2 >> vertices >> kw3 >> basepoint >> mode) || kw1 != "rank" ||
        kw2 != "vertices" || kw3 != "basepoint")
        throw std::invalid_argument("malformed graph dump header");
    Exactness e = Exactness::approx;
    int certified = 0;
    if (mode == "exact") {
        e = Exactness::exact;
    } else if (mode.rfind("approx:", 0) == 0) {
        certified = std::stoi(mode.substr(7));
    } else {
        throw std::invalid_argument("malformed exactness token '" + mode + "'");
    }
    Rank rank(n);
    SchreierGraph g(rank, vertices, e, certified);
    g.set_basepoint(basepoint);
    for (std::size_t row = 0; row < vertices; ++row) {
        std::uint32_t v;
        if (!(in >> v) || v >= vertices) throw std::invalid_argument("malformed dump row");
        for (int l = 0; l < rank.num_letters(); ++l) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("truncated dump row");
            if (tok == "-") continue;
            std::uint32_t t = static_cast<std::uint32_t>(std::stoul(tok));
            if (t >= vertices) throw std::invalid_argument("dump target out of range");
            g.set_transition(v, Letter::from_code(l), t);
        }
    }
    validate(g);
    return g;
}

} // namespace cogrowth
