#ifndef COGROWTH_SPECTRAL_HPP
#define COGROWTH_SPECTRAL_HPP

#include <string>
#include <vector>

#include "cogrowth/schreier.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

/// Two-sided bracket on the spectral radius of the simple random walk, with
/// the bottom of the Laplacian spectrum carried along via lambda0 = 1 - rho.
struct SpectralEstimate {
    double rho_lower = 0.0;
    double rho_upper = 1.0;
    std::vector<std::string> method_tags;
    bool converged = true;
    int iterations = 0;

    double lambda0_lower() const { return 1.0 - rho_upper; }
    double lambda0_upper() const { return 1.0 - rho_lower; }
};

/// One application of the transition operator: (Pf)(x) averages f over the 2n
/// edge endpoints at x, a loop contributing the center value twice. Values
/// outside the window count as zero. Throws std::domain_error if f has support
/// at a vertex of an approximate graph with undefined transitions (the true
/// image would then leak outside the window).
std::vector<double> apply_srw(const SchreierGraph& g, const std::vector<double>& f);

/// Dirichlet application: same averaging, no support check. Mass on edges that
/// leave the window is absorbed.
std::vector<double> apply_srw_dirichlet(const SchreierGraph& g, const std::vector<double>& f);

/// (1/2n) sum_{x~y} |f(x)-f(y)|^2 / sum_x f(x)^2 for the zero-extension of f;
/// edges leaving the window contribute |f(x)|^2. An upper bound datum for
/// lambda0. Throws std::invalid_argument on the zero function.
double rayleigh_quotient(const SchreierGraph& g, const std::vector<double>& f);

/// Power iteration on P^2 (two steps sidestep the -rho eigenvalue on
/// bipartite-like quotients). On exact finite graphs the Rayleigh value
/// converges to rho^2 from below; on windows it is a Dirichlet lower bound.
SpectralEstimate power_iteration_rho(const SchreierGraph& g, int iters = 100000,
                                     double tol = 1e-10);

/// max over m <= m_max of p_{2m}(o,o)^{1/2m}, a spectral-radius lower bound
/// valid on windows as well. Requires m_max <= certified radius when approximate.
double return_probability_rho_lower(const SchreierGraph& g, int m_max);

/// Cogrowth formula: rho = (sqrt(2n-1)/2n) (sqrt(2n-1)/e^delta + e^delta/sqrt(2n-1)).
/// Requires (1/2) log(2n-1) <= delta <= log(2n-1).
double rho_from_delta(Rank rank, double delta);

/// lambda0 = (1/2n)(2n-1-e^delta)(1-e^{-delta}); equals 1 - rho_from_delta.
double lambda0_from_delta(Rank rank, double delta);

/// Inverse on the branch e^delta >= sqrt(2n-1):
/// e^delta = n(1-lambda0) + sqrt(n^2 (1-lambda0)^2 - (2n-1)).
/// Requires 0 <= lambda0 <= 1 - sqrt(2n-1)/n.
double delta_from_lambda0(Rank rank, double lambda0);

} // namespace cogrowth

#endif
