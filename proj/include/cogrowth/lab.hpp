#ifndef COGROWTH_LAB_HPP
#define COGROWTH_LAB_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cogrowth/counting.hpp"
#include "cogrowth/geometry.hpp"
#include "cogrowth/planarity.hpp"
#include "cogrowth/schreier.hpp"
#include "cogrowth/spectral.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

/// Relator families: "powers" (g_i^k for every generator, param = k),
/// "commutator" (abAB, rank 2), "surface" (genus-g relator, rank = 2*param),
/// "mod2" (kernel of every generator mapping to 1 in Z/2).
std::vector<ReducedWord> preset_relators(const std::string& name, Rank rank, int param = 0);

/// One side of a certified bound together with the derivation that produced it.
struct Bound {
    double value = 0.0;
    std::optional<Rat> exact;
    std::vector<std::string> chain;
};

struct QuantityBounds {
    std::optional<Bound> lower;
    std::optional<Bound> upper;
};

/// Certified bounds on delta, rho, lambda0, the isoperimetric constant and the
/// graph growth, cross-linked through lambda0 = 1 - rho.
struct BoundLedger {
    QuantityBounds delta, rho, lambda0, iso, growth;
    /// Throws std::logic_error if any lower bound exceeds its upper bound; a
    /// violation would falsify one of the chained inequalities.
    void enforce() const;
};

struct Verdict {
    std::string inequality;
    std::string status; // "satisfied" | "inconclusive" | "skipped"
    friend bool operator==(const Verdict& a, const Verdict& b) {
        return a.inequality == b.inequality && a.status == b.status;
    }
};

/// Window injectivity radius plus what it certifies for the full quotient.
struct EllMeasurement {
    HalfInt window_value = HalfInt::infinity(); // girth/2 of the window
    HalfInt certified_lower = HalfInt::infinity();
    bool exact = false; // certified_lower equals the true value
};

struct Measurements {
    int window_radius = 0;
    int usable_radius = 0; // min(certified, window)
    BallCounts balls;
    LoopCounts loops;
    DeltaEstimate delta;
    SpectralEstimate spectral;
    double return_rho_lower = 0.0;
    std::optional<PlanarityVerdict> planarity;
    int planarity_radius = 0;
    EllMeasurement ell;
    std::optional<IsoUpperBound> iso_upper;
    bool nontrivial_kernel = false;
};

struct MeasureOptions {
    int ball_radius = -1;     // default: usable radius
    int loop_radius = -1;     // default: 2 * usable radius, capped at 24
    int power_iters = 100000;
    double power_tol = 1e-10;
    bool run_planarity = true;
};

Measurements measure(const SchreierGraph& g, const std::vector<ReducedWord>& relators,
                     const MeasureOptions& opt = {});

/// Chains every applicable inequality into two-sided bounds. On exact finite
/// quotients the amenability endpoint pins delta, rho, lambda0 and growth
/// exactly; on windows the planarity+girth route feeds Cheeger and the growth
/// bound while loop counts provide the delta floor.
BoundLedger assemble_ledger(const SchreierGraph& g, const Measurements& m);

struct MarginResult {
    double margin = 0.0;       // delta + log(growth)/2 + log 2 - log(2n-1)
    std::string status;        // conjecture: "satisfied" | "inconclusive" | "skipped"
};

MarginResult conjecture_margin(const BoundLedger& ledger, Rank rank);

/// Machine-readable experiment output.
struct Report {
    std::string schema = "cogrowth-report/1";
    std::string id;
    int rank = 2;
    int k = 0; // sweep parameter, 0 when not applicable
    std::vector<std::string> relators;
    std::string error; // nonempty when the experiment failed (sweeps continue)
    bool exact = false;
    int certified_radius = -1; // -1 on exact graphs
    int window_radius = 0;
    int depth = 0;
    std::vector<std::uint64_t> ball_counts;
    std::vector<std::string> loop_counts; // decimal strings
    std::vector<double> growth_roots;
    std::vector<std::pair<int, double>> delta_hats;
    std::optional<bool> window_planar;
    int planarity_radius = 0;
    bool ell_finite = false;
    long long ell_twice = 0; // doubled injectivity radius when finite
    bool ell_exact = false;
    BoundLedger ledger;
    double conjecture_margin_value = 0.0;
    std::string conjecture_status;
    std::vector<Verdict> verdicts;
};

bool operator==(const Report& a, const Report& b);

Report run_experiment(const std::string& id, const SchreierGraph& g,
                      const std::vector<ReducedWord>& relators, int depth,
                      const MeasureOptions& opt = {});

/// Builds the powers-preset quotient for each k and reports the full chain.
/// radius <= 0 selects the default window 2k. Per-point failures are recorded
/// in the report and the sweep continues.
std::vector<Report> theorem_trend_sweep(Rank rank, const std::vector<int>& ks, int radius,
                                        int depth, std::size_t max_cosets = 4'000'000);

std::string emit_report(const Report& r, const std::string& format); // json | csv | table
Report report_from_json(const std::string& text);

/// Sweep summary: one row per k with the chained bound values.
std::string sweep_csv(const std::vector<Report>& reports);
std::string sweep_table(const std::vector<Report>& reports);

/// Deterministic connected random subgraph inside the certified region,
/// grown from the basepoint.
Subgraph random_connected_subgraph(const SchreierGraph& g, std::size_t target_size,
                                   std::uint64_t seed);

/// Full invariant suite on one graph; writes one line per check.
/// Returns 0 (all satisfied/inconclusive), 1 (invariant violation) or
/// 2 (resource cap).
int verify_graph(const SchreierGraph& g, const std::vector<ReducedWord>& relators,
                 std::ostream& log);

} // namespace cogrowth

#endif
