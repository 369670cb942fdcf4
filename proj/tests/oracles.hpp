#ifndef COGROWTH_TEST_ORACLES_HPP
#define COGROWTH_TEST_ORACLES_HPP

// Brute-force oracles, independent of the library's counting and construction
// paths. Words are plain int sequences here: letter code 2*(gen-1) + (neg?1:0),
// inverse = code ^ 1.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "cogrowth/schreier.hpp"

namespace oracles {

/// All freely reduced words of length exactly len over 2n letter codes.
inline void reduced_words_of_length(int n, int len, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c < 2 * n; ++c) {
            if (!cur.empty() && cur.back() == (c ^ 1)) continue;
            cur.push_back(c);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

/// Number of freely reduced words of length <= radius, by direct enumeration.
inline std::uint64_t count_reduced_words(int n, int radius) {
    std::uint64_t total = 0;
    for (int len = 0; len <= radius; ++len) {
        std::vector<std::vector<int>> words;
        reduced_words_of_length(n, len, words);
        total += words.size();
    }
    return total;
}

/// Ball sizes of the Z^2 grid by BFS on integer pairs.
inline std::vector<std::uint64_t> lattice_ball_counts(int radius) {
    std::map<std::pair<int, int>, int> dist;
    std::vector<std::pair<int, int>> frontier{{0, 0}};
    dist[{0, 0}] = 0;
    for (int d = 0; d < radius; ++d) {
        std::vector<std::pair<int, int>> next;
        for (auto [x, y] : frontier) {
            const std::pair<int, int> nbrs[4] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
            for (auto p : nbrs)
                if (dist.emplace(p, d + 1).second) next.push_back(p);
        }
        frontier = std::move(next);
    }
    std::vector<std::uint64_t> counts(radius + 1, 0);
    for (auto& [p, d] : dist) ++counts[d];
    for (int r = 1; r <= radius; ++r) counts[r] += counts[r - 1];
    return counts;
}

/// Traces a letter-code word through the transition table; returns the end
/// vertex or `undefined` if the trace leaves the window.
inline std::uint32_t trace(const cogrowth::SchreierGraph& g, const std::vector<int>& word) {
    std::uint32_t v = g.basepoint();
    for (int c : word) {
        v = g.target(v, cogrowth::Letter::from_code(c));
        if (v == cogrowth::SchreierGraph::undefined) return v;
    }
    return v;
}

/// N(r) for r = 0..radius by enumerating all reduced words and tracing each
/// through the coset table.
inline std::vector<std::uint64_t> loop_counts_brute(const cogrowth::SchreierGraph& g,
                                                    int radius) {
    std::vector<std::uint64_t> counts(radius + 1, 0);
    counts[0] = 1;
    for (int len = 1; len <= radius; ++len) {
        std::vector<std::vector<int>> words;
        reduced_words_of_length(g.rank().n(), len, words);
        std::uint64_t fixing = 0;
        for (const auto& w : words)
            if (trace(g, w) == g.basepoint()) ++fixing;
        counts[len] = counts[len - 1] + fixing;
    }
    return counts;
}

/// N(r) for the commutator quotient of F_2 without any graph: reduced words
/// with zero exponent sum in both generators.
inline std::vector<std::uint64_t> grid_loop_counts_brute(int radius) {
    std::vector<std::uint64_t> counts(radius + 1, 0);
    counts[0] = 1;
    for (int len = 1; len <= radius; ++len) {
        std::vector<std::vector<int>> words;
        reduced_words_of_length(2, len, words);
        std::uint64_t kernel = 0;
        for (const auto& w : words) {
            int ea = 0, eb = 0;
            for (int c : w) {
                if (c / 2 == 0) ea += (c & 1) ? -1 : 1;
                if (c / 2 == 1) eb += (c & 1) ? -1 : 1;
            }
            if (ea == 0 && eb == 0) ++kernel;
        }
        counts[len] = counts[len - 1] + kernel;
    }
    return counts;
}

} // namespace oracles

#endif
