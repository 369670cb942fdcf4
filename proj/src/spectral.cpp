#include "cogrowth/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cogrowth {

namespace {

void check_size(const SchreierGraph& g, const std::vector<double>& f) {
    if (f.size() != g.size())
        throw std::invalid_argument("function vector size does not match the graph");
}

} // namespace

std::vector<double> apply_srw_dirichlet(const SchreierGraph& g, const std::vector<double>& f) {
    check_size(g, f);
    const int nl = g.rank().num_letters();
    std::vector<double> out(f.size(), 0.0);
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        double acc = 0.0;
        for (int l = 0; l < nl; ++l) {
            std::uint32_t t = g.target(v, Letter::from_code(l));
            if (t != SchreierGraph::undefined) acc += f[t];
        }
        out[v] = acc / static_cast<double>(nl);
    }
    return out;
}

std::vector<double> apply_srw(const SchreierGraph& g, const std::vector<double>& f) {
    check_size(g, f);
    if (!g.is_exact()) {
        const int nl = g.rank().num_letters();
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (f[v] != 0.0 && g.degree(v) < nl)
                throw std::domain_error(
                    "support violation: f is nonzero on the window boundary shell");
    }
    return apply_srw_dirichlet(g, f);
}

double rayleigh_quotient(const SchreierGraph& g, const std::vector<double>& f) {
    check_size(g, f);
    const int nl = g.rank().num_letters();
    double energy = 0.0, mass = 0.0;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        mass += f[v] * f[v];
        int deg = 0;
        for (int l = 0; l < nl; ++l) {
            std::uint32_t t = g.target(v, Letter::from_code(l));
            if (t == SchreierGraph::undefined) continue;
            ++deg;
            double d = f[v] - f[t];
            energy += d * d; // each edge visited from both endpoints
        }
        energy += (nl - deg) * f[v] * f[v] * 2.0; // edges leaving the window
    }
    if (mass == 0.0) throw std::invalid_argument("rayleigh quotient of the zero function");
    return energy / (2.0 * nl * mass);
}

SpectralEstimate power_iteration_rho(const SchreierGraph& g, int iters, double tol) {
    SpectralEstimate est;
    est.method_tags.push_back("power-iteration");
    if (!g.is_exact()) est.method_tags.push_back("dirichlet-ball");

    std::vector<double> f(g.size(), 1.0 / std::sqrt(static_cast<double>(g.size())));
    double mu_prev = -1.0, mu = 0.0;
    int it = 0;
    for (it = 1; it <= iters; ++it) {
        std::vector<double> pf = apply_srw_dirichlet(g, f);
        std::vector<double> ppf = apply_srw_dirichlet(g, pf);
        mu = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) mu += f[i] * ppf[i];
        if (std::abs(mu - mu_prev) < tol) break;
        mu_prev = mu;
        double norm = 0.0;
        for (double x : ppf) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) { // P^2 annihilates the iterate; spectrum seen is {0}
            mu = 0.0;
            break;
        }
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = ppf[i] / norm;
    }
    est.converged = it <= iters;
    if (!est.converged) est.method_tags.push_back("unconverged");
    est.iterations = std::min(it, iters);
    est.rho_lower = std::sqrt(std::max(mu, 0.0));
    est.rho_upper = 1.0;
    return est;
}

double return_probability_rho_lower(const SchreierGraph& g, int m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    if (m_max > g.certified_radius())
        throw std::domain_error("return probabilities at 2m = " + std::to_string(2 * m_max) +
                                " would leave the certified ball");
    std::vector<double> f(g.size(), 0.0);
    f[g.basepoint()] = 1.0;
    double best = 0.0;
    for (int m = 1; m <= m_max; ++m) {
        f = apply_srw_dirichlet(g, f);
        double p2m = 0.0; // p_{2m}(o,o) = ||P^m delta_o||^2 by self-adjointness
        for (double x : f) p2m += x * x;
        if (p2m > 0.0) best = std::max(best, std::pow(p2m, 1.0 / (2.0 * m)));
    }
    return best;
}

namespace {

void check_delta_range(Rank rank, double delta) {
    const double logq = std::log(static_cast<double>(2 * rank.n() - 1));
    if (delta < 0.5 * logq - 1e-9 || delta > logq + 1e-9)
        throw std::domain_error("delta outside the admissible range [log(2n-1)/2, log(2n-1)]");
}

} // namespace

double rho_from_delta(Rank rank, double delta) {
    check_delta_range(rank, delta);
    const double n = rank.n();
    const double sq = std::sqrt(2.0 * n - 1.0);
    const double ed = std::exp(delta);
    return sq / (2.0 * n) * (sq / ed + ed / sq);
}

double lambda0_from_delta(Rank rank, double delta) {
    check_delta_range(rank, delta);
    const double n = rank.n();
    const double ed = std::exp(delta);
    return (2.0 * n - 1.0 - ed) * (1.0 - 1.0 / ed) / (2.0 * n);
}

double delta_from_lambda0(Rank rank, double lambda0) {
    const double n = rank.n();
    const double top = 1.0 - std::sqrt(2.0 * n - 1.0) / n;
    if (lambda0 < -1e-12 || lambda0 > top + 1e-12)
        throw std::domain_error("lambda0 outside [0, 1 - sqrt(2n-1)/n]");
    const double u = n * (1.0 - lambda0);
    double disc = u * u - (2.0 * n - 1.0);
    // at the branch point the discriminant vanishes; rounding noise there
    // would inject a sqrt(eps)-sized error into the root
    if (disc < 8.0 * std::numeric_limits<double>::epsilon() * u * u) disc = 0.0;
    return std::log(u + std::sqrt(disc));
}

} // namespace cogrowth
