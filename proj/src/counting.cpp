#include "cogrowth/counting.hpp"

#include <cmath>
#include <stdexcept>

namespace cogrowth {

BallCounts ball_counts(const SchreierGraph& g, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (radius > g.certified_radius())
        throw std::domain_error("ball counts at radius " + std::to_string(radius) +
                                " exceed the certified radius");
    std::vector<int> dist = distances_from_basepoint(g);
    BallCounts out;
    out.counts.assign(static_cast<std::size_t>(radius) + 1, 0);
    for (int d : dist)
        if (d >= 0 && d <= radius) ++out.counts[d];
    for (std::size_t r = 1; r < out.counts.size(); ++r) out.counts[r] += out.counts[r - 1];
    out.exact_up_to = radius;
    return out;
}

std::vector<double> growth_estimate(const BallCounts& b) {
    std::vector<double> roots;
    for (std::size_t r = 1; r < b.counts.size(); ++r)
        roots.push_back(std::pow(static_cast<double>(b.counts[r]), 1.0 / static_cast<double>(r)));
    return roots;
}

LoopCounts loop_counts(const SchreierGraph& g, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (radius / 2 > g.certified_radius())
        throw std::domain_error("loop counts at radius " + std::to_string(radius) +
                                " would leave the certified ball");
    const int nl = g.rank().num_letters();
    const std::size_t states = g.size() * static_cast<std::size_t>(nl);
    const std::uint32_t o = g.basepoint();

    LoopCounts out;
    out.counts.assign(static_cast<std::size_t>(radius) + 1, BigInt(1));
    out.exact_up_to = radius;

    std::vector<BigInt> dp(states, BigInt(0)), next(states);
    for (int l = 0; l < nl; ++l)
        if (g.has_edge(o, Letter::from_code(l)))
            dp[static_cast<std::size_t>(o) * nl + l] = 1;
    BigInt closed(0);
    for (int r = 1; r <= radius; ++r) {
        if (r > 1) {
            for (auto& x : next) x = 0;
            for (std::uint32_t u = 0; u < g.size(); ++u) {
                for (int x = 0; x < nl; ++x) {
                    const BigInt& paths = dp[static_cast<std::size_t>(u) * nl + x];
                    if (paths.is_zero()) continue;
                    std::uint32_t v = g.target(u, Letter::from_code(x));
                    for (int y = 0; y < nl; ++y) {
                        if (y == (x ^ 1)) continue; // backtracking step
                        if (!g.has_edge(v, Letter::from_code(y))) continue;
                        next[static_cast<std::size_t>(v) * nl + y] += paths;
                    }
                }
            }
            dp.swap(next);
        }
        for (std::uint32_t u = 0; u < g.size(); ++u)
            for (int x = 0; x < nl; ++x) {
                const BigInt& paths = dp[static_cast<std::size_t>(u) * nl + x];
                if (!paths.is_zero() && g.target(u, Letter::from_code(x)) == o) closed += paths;
            }
        out.counts[r] = 1 + closed;
    }
    return out;
}

double log_big(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("log of a nonpositive count");
    unsigned bits = boost::multiprecision::msb(x);
    if (bits < 900) return std::log(x.convert_to<double>());
    BigInt shifted = x >> (bits - 512);
    return std::log(shifted.convert_to<double>()) +
           static_cast<double>(bits - 512) * std::log(2.0);
}

DeltaEstimate delta_estimate(const LoopCounts& l, Rank rank) {
    DeltaEstimate out;
    for (std::size_t r = 1; r < l.counts.size(); ++r) {
        if (l.counts[r] > 1)
            out.per_radius.emplace_back(static_cast<int>(r),
                                        log_big(l.counts[r]) / static_cast<double>(r));
    }
    if (!out.per_radius.empty()) {
        out.has_data = true;
        out.estimate = out.per_radius.back().second;
        out.eta = out.estimate / std::log(static_cast<double>(2 * rank.n() - 1));
    }
    return out;
}

double poincare_partial(const LoopCounts& l, double s) {
    if (s <= 0) throw std::invalid_argument("the series parameter must be positive");
    double total = 0.0;
    BigInt prev(0);
    for (std::size_t r = 0; r < l.counts.size(); ++r) {
        BigInt shell = l.counts[r] - prev;
        if (!shell.is_zero())
            total += shell.convert_to<double>() * std::exp(-s * static_cast<double>(r));
        prev = l.counts[r];
    }
    return total;
}

} // namespace cogrowth
