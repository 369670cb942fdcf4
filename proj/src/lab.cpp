#include "cogrowth/lab.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cogrowth {

using nlohmann::json;

std::vector<ReducedWord> preset_relators(const std::string& name, Rank rank, int param) {
    std::vector<ReducedWord> rels;
    if (name == "powers") {
        if (param < 1) throw std::invalid_argument("powers preset needs k >= 1");
        for (int i = 1; i <= rank.n(); ++i) {
            std::vector<Letter> raw(static_cast<std::size_t>(param), Letter::make(i, +1));
            rels.emplace_back(rank, raw);
        }
    } else if (name == "commutator") {
        if (rank.n() != 2) throw std::invalid_argument("commutator preset is rank 2");
        rels.push_back(parse_word(rank, "abAB"));
    } else if (name == "surface") {
        int genus = param;
        if (genus < 1) throw std::invalid_argument("surface preset needs genus >= 1");
        if (rank.n() != 2 * genus)
            throw std::invalid_argument("surface preset of genus g needs rank 2g");
        std::vector<Letter> raw;
        for (int i = 0; i < genus; ++i) {
            int a = 2 * i + 1, b = 2 * i + 2;
            raw.push_back(Letter::make(a, +1));
            raw.push_back(Letter::make(b, +1));
            raw.push_back(Letter::make(a, -1));
            raw.push_back(Letter::make(b, -1));
        }
        rels.emplace_back(rank, raw);
    } else if (name == "mod2") {
        for (int j = 1; j <= rank.n(); ++j) {
            std::vector<Letter> raw{Letter::make(1, +1), Letter::make(j, +1)};
            rels.emplace_back(rank, raw);
        }
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return rels;
}

void BoundLedger::enforce() const {
    auto check = [](const char* q, const QuantityBounds& b) {
        if (b.lower && b.upper && b.lower->value > b.upper->value + 1e-12)
            throw std::logic_error(std::string("ledger inconsistency on ") + q + ": lower " +
                                   std::to_string(b.lower->value) + " > upper " +
                                   std::to_string(b.upper->value));
    };
    check("delta", delta);
    check("rho", rho);
    check("lambda0", lambda0);
    check("iso", iso);
    check("growth", growth);
}

namespace {

int eccentricity(const SchreierGraph& g) {
    std::vector<int> dist = distances_from_basepoint(g);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    return ecc;
}

bool kernel_nontrivial(const std::vector<ReducedWord>& relators) {
    for (const auto& r : relators)
        if (!r.empty()) return true;
    return false;
}

} // namespace

Measurements measure(const SchreierGraph& g, const std::vector<ReducedWord>& relators,
                     const MeasureOptions& opt) {
    Measurements m;
    m.window_radius = eccentricity(g);
    m.usable_radius =
        g.is_exact() ? m.window_radius : std::min(g.certified_radius(), m.window_radius);
    m.nontrivial_kernel = kernel_nontrivial(relators);

    int ball_r = opt.ball_radius >= 0 ? std::min(opt.ball_radius, m.usable_radius)
                                      : m.usable_radius;
    m.balls = ball_counts(g, ball_r);

    int loop_r = opt.loop_radius >= 0 ? opt.loop_radius
                                      : std::min(2 * m.usable_radius, 24);
    if (!g.is_exact()) loop_r = std::min(loop_r, 2 * g.certified_radius());
    m.loops = loop_counts(g, loop_r);
    m.delta = delta_estimate(m.loops, g.rank());

    m.spectral = power_iteration_rho(g, opt.power_iters, opt.power_tol);
    m.return_rho_lower =
        m.usable_radius >= 1 ? return_probability_rho_lower(g, m.usable_radius) : 0.0;

    if (opt.run_planarity) {
        m.planarity_radius = m.usable_radius;
        m.planarity = check_quotient_planarity(g, m.planarity_radius);
    }

    m.ell.window_value = injectivity_radius(g);
    if (g.is_exact()) {
        m.ell.certified_lower = m.ell.window_value;
        m.ell.exact = true;
    } else {
        long long cert2 = 2LL * g.certified_radius();
        if (!m.ell.window_value.is_infinite() && m.ell.window_value.twice <= cert2) {
            m.ell.certified_lower = m.ell.window_value;
            m.ell.exact = true;
        } else {
            m.ell.certified_lower = HalfInt{cert2};
            m.ell.exact = false;
        }
    }

    int iso_r = m.usable_radius - 1;
    if (g.is_exact()) iso_r = m.window_radius;
    if (iso_r >= 0) {
        std::vector<Subgraph> candidates;
        std::vector<std::string> names;
        default_iso_candidates(g, iso_r, candidates, names);
        std::vector<std::uint32_t> cyc = shortest_cycle_vertices(g);
        if (!cyc.empty()) {
            bool usable = true;
            if (!g.is_exact()) {
                std::vector<int> dist = distances_from_basepoint(g);
                for (std::uint32_t v : cyc)
                    if (dist[v] > g.certified_radius() - 1) usable = false;
            }
            if (usable) {
                candidates.emplace_back(g, cyc);
                names.push_back("shortest-cycle (length " +
                                std::to_string(cyc.size()) + ")");
            }
        }
        m.iso_upper = isoperimetric_upper(g, candidates, names);
    }
    return m;
}

namespace {

std::string ell_text(const EllMeasurement& e) {
    std::ostringstream os;
    os << "injectivity radius ell " << (e.exact ? "= " : ">= ");
    if (e.certified_lower.is_infinite())
        os << "infinity";
    else
        os << e.certified_lower.value();
    return os.str();
}

} // namespace

BoundLedger assemble_ledger(const SchreierGraph& g, const Measurements& m) {
    BoundLedger led;
    const Rank rank = g.rank();
    const int n = rank.n();
    const double q = 2.0 * n - 1.0;
    const double logq = std::log(q);

    if (g.is_exact()) {
        Bound one{1.0, Rat(1, 1), {"finite quotient: the constant function is a 1-eigenfunction of P"}};
        Bound zero{0.0, Rat(0, 1), {"finite quotient: lambda0 = 1 - rho = 0"}};
        Bound dl{logq, std::nullopt,
                 {"finite quotient is amenable, so delta = log(2n-1) (grigorchuk criterion)"}};
        Bound g1{1.0, Rat(1, 1), {"finite graph: ball counts stabilize, growth = 1"}};
        Bound iso0{0.0, Rat(0, 1), {"finite graph: the whole vertex set has empty boundary"}};
        led.rho = {one, one};
        led.lambda0 = {zero, zero};
        led.delta = {dl, dl};
        led.growth = {g1, g1};
        led.iso = {iso0, iso0};
        led.enforce();
        return led;
    }

    // isoperimetric constant
    Bound iso_lower;
    if (m.planarity && m.planarity->planar) {
        IsoLowerBound b = isoperimetric_lower_planar(rank, m.ell.certified_lower);
        iso_lower.value = b.value.value();
        iso_lower.exact = b.value;
        iso_lower.chain = {"planarity verdict on the radius-" + std::to_string(m.planarity_radius) +
                               " window (evidence, not proof)",
                           ell_text(m.ell),
                           std::string("planar-girth bound i >= (n-1)/n - 1/(n(ell-1))") +
                               (b.vacuous ? " (vacuous, clamped to 0)" : "")};
    } else {
        iso_lower = {0.0, Rat(0, 1), {"no planarity certificate; trivial bound i >= 0"}};
    }
    led.iso.lower = iso_lower;
    if (m.iso_upper) {
        Bound up;
        up.value = m.iso_upper->value.value();
        up.exact = m.iso_upper->value;
        up.chain = {"isoperimetric witness: " + m.iso_upper->witness};
        led.iso.upper = up;
    }

    // lambda0 lower via Cheeger, rho upper via lambda0 = 1 - rho
    Bound lam_low;
    lam_low.value = cheeger_lambda0_lower(iso_lower.value);
    lam_low.chain = iso_lower.chain;
    lam_low.chain.push_back("cheeger inequality: lambda0 >= 1 - sqrt(1 - i^2)");
    led.lambda0.lower = lam_low;
    Bound rho_up;
    rho_up.value = 1.0 - lam_low.value;
    rho_up.chain = lam_low.chain;
    rho_up.chain.push_back("rho = 1 - lambda0");
    led.rho.upper = rho_up;

    // delta lower: trailing loop-count value and the normal-subgroup floor
    std::optional<Bound> delta_low;
    if (m.nontrivial_kernel) {
        Bound floor{0.5 * logq, std::nullopt,
                    {"cogrowth floor for nontrivial normal subgroups: delta >= log(2n-1)/2"}};
        delta_low = floor;
        if (m.delta.has_data) {
            Bound counted{m.delta.estimate, std::nullopt,
                          {"non-backtracking loop counts: (1/r) log N(r) at certified r=" +
                           std::to_string(m.delta.per_radius.back().first)}};
            if (counted.value > delta_low->value) delta_low = counted;
        }
    }
    if (delta_low) led.delta.lower = *delta_low;

    // rho lower: Dirichlet spectral data, plus the EPS image of the delta floor
    double rho_meas = std::max(m.spectral.rho_lower, m.return_rho_lower);
    Bound lam_up;
    lam_up.value = 1.0 - rho_meas;
    lam_up.chain = {m.spectral.rho_lower >= m.return_rho_lower
                        ? "dirichlet power iteration on the window"
                        : "return probability p_2m(o,o)^(1/2m)",
                    "lambda0 <= 1 - rho_lower"};
    if (delta_low) {
        double lam_from_delta = lambda0_from_delta(rank, std::min(delta_low->value, logq));
        if (lam_from_delta < lam_up.value) {
            lam_up.value = lam_from_delta;
            lam_up.chain = delta_low->chain;
            lam_up.chain.push_back("eps relation: lambda0 = (1/2n)(2n-1-e^d)(1-e^-d), decreasing in d");
        }
    }
    led.lambda0.upper = lam_up;
    Bound rho_low;
    rho_low.value = 1.0 - lam_up.value;
    rho_low.chain = lam_up.chain;
    rho_low.chain.push_back("rho = 1 - lambda0");
    led.rho.lower = rho_low;

    // delta upper through the closed-form root of the EPS relation
    if (m.nontrivial_kernel) {
        Bound delta_up;
        delta_up.value = delta_from_lambda0(rank, std::min(lam_low.value, 1.0 - std::sqrt(q) / n));
        delta_up.chain = lam_low.chain;
        delta_up.chain.push_back(
            "eps closed-form root: e^d = n(1-lambda0) + sqrt(n^2(1-lambda0)^2 - (2n-1))");
        led.delta.upper = delta_up;
    }

    // growth
    Bound growth_low;
    {
        Rat g_low = mohar_growth_lower(*iso_lower.exact);
        growth_low.value = g_low.value();
        growth_low.exact = g_low;
        growth_low.chain = iso_lower.chain;
        growth_low.chain.push_back("growth >= (1+i)/(1-i)");
    }
    led.growth.lower = growth_low;
    {
        Bound growth_up{q, std::nullopt, {"ambient bound: growth <= growth(T_n) = 2n-1"}};
        std::vector<double> roots = growth_estimate(m.balls);
        for (std::size_t r = 0; r < roots.size(); ++r) {
            if (roots[r] < growth_up.value) {
                growth_up.value = roots[r];
                growth_up.chain = {"submultiplicative ball-count root c_r^(1/r) at certified r=" +
                                   std::to_string(r + 1) + " (vertex-transitive quotient)"};
            }
        }
        led.growth.upper = growth_up;
    }

    led.enforce();
    return led;
}

MarginResult conjecture_margin(const BoundLedger& ledger, Rank rank) {
    MarginResult out;
    if (!ledger.delta.lower || !ledger.growth.lower) {
        out.status = "skipped";
        return out;
    }
    const double logq = std::log(2.0 * rank.n() - 1.0);
    const double lhs = ledger.delta.lower->value + 0.5 * std::log(ledger.growth.lower->value);
    out.margin = lhs + std::log(2.0) - logq;
    out.status = lhs >= logq - 1e-12 ? "satisfied" : "inconclusive";
    return out;
}

namespace {

std::vector<Verdict> build_verdicts(const SchreierGraph& g, const Measurements& m,
                                    const BoundLedger& led, const MarginResult& margin) {
    const Rank rank = g.rank();
    const double q = 2.0 * rank.n() - 1.0;
    std::vector<Verdict> out;

    for (std::size_t r = 0; r < m.loops.counts.size(); ++r)
        if (m.loops.counts[r] > ball_count(rank, static_cast<int>(r)))
            throw std::logic_error("loop count exceeds the tree ball count at r=" +
                                   std::to_string(r));
    out.push_back({"loop-count-tree-bound", "satisfied"});

    if (m.delta.has_data) {
        int r = m.delta.per_radius.back().first;
        double slack = std::log(2.0) / r + 1e-9;
        if (m.delta.estimate > std::log(q) + slack)
            throw std::logic_error("cogrowth estimate exceeds log(2n-1) beyond small-r slack");
        out.push_back({"cogrowth-eta-bound", "satisfied"});
    } else {
        out.push_back({"cogrowth-eta-bound", "skipped"});
    }

    if (m.nontrivial_kernel && led.growth.upper) {
        out.push_back({"growth-tightness",
                       led.growth.upper->value < q - 1e-9 ? "satisfied" : "inconclusive"});
    } else {
        out.push_back({"growth-tightness", "skipped"});
    }

    if (margin.status == "skipped") {
        out.push_back({"growth-cogrowth-relation", "skipped"});
    } else {
        out.push_back(
            {"growth-cogrowth-relation", margin.margin > 0 ? "satisfied" : "inconclusive"});
    }
    out.push_back({"growth-cogrowth-conjecture", margin.status});
    return out;
}

} // namespace

Report run_experiment(const std::string& id, const SchreierGraph& g,
                      const std::vector<ReducedWord>& relators, int depth,
                      const MeasureOptions& opt) {
    Report rep;
    rep.id = id;
    rep.rank = g.rank().n();
    for (const auto& r : relators) rep.relators.push_back(to_string(r));
    rep.exact = g.is_exact();
    rep.certified_radius = g.is_exact() ? -1 : g.certified_radius();
    rep.depth = depth;

    Measurements m = measure(g, relators, opt);
    rep.window_radius = m.window_radius;
    rep.ball_counts = m.balls.counts;
    for (const auto& c : m.loops.counts) rep.loop_counts.push_back(c.str());
    rep.growth_roots = growth_estimate(m.balls);
    rep.delta_hats = m.delta.per_radius;
    if (m.planarity) rep.window_planar = m.planarity->planar;
    rep.planarity_radius = m.planarity_radius;
    rep.ell_finite = !m.ell.window_value.is_infinite();
    rep.ell_twice = rep.ell_finite ? m.ell.window_value.twice : 0;
    rep.ell_exact = m.ell.exact;

    rep.ledger = assemble_ledger(g, m);
    MarginResult margin = conjecture_margin(rep.ledger, g.rank());
    rep.conjecture_margin_value = margin.margin;
    rep.conjecture_status = margin.status;
    rep.verdicts = build_verdicts(g, m, rep.ledger, margin);
    return rep;
}

std::vector<Report> theorem_trend_sweep(Rank rank, const std::vector<int>& ks, int radius,
                                        int depth, std::size_t max_cosets) {
    std::vector<Report> out;
    for (int k : ks) {
        int R = radius > 0 ? radius : 2 * k;
        std::string id = "powers-k" + std::to_string(k) + "-n" + std::to_string(rank.n()) +
                         "-R" + std::to_string(R) + "-L" + std::to_string(depth);
        Report rep;
        rep.id = id;
        rep.k = k;
        rep.rank = rank.n();
        try {
            auto rels = preset_relators("powers", rank, k);
            auto [g, diag] = truncated_quotient(rank, rels, R, depth, max_cosets);
            rep = run_experiment(id, g, rels, depth);
            rep.k = k;
        } catch (const std::exception& e) {
            rep.error = e.what();
        }
        out.push_back(std::move(rep));
    }
    return out;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

json bound_to_json(const Bound& b) {
    json j;
    j["value"] = b.value;
    if (b.exact)
        j["exact"] = {{"num", b.exact->num}, {"den", b.exact->den}};
    else
        j["exact"] = nullptr;
    j["chain"] = b.chain;
    return j;
}

Bound bound_from_json(const json& j) {
    Bound b;
    b.value = j.at("value").get<double>();
    if (!j.at("exact").is_null())
        b.exact = Rat(j.at("exact").at("num").get<long long>(),
                      j.at("exact").at("den").get<long long>());
    b.chain = j.at("chain").get<std::vector<std::string>>();
    return b;
}

json bounds_to_json(const QuantityBounds& q) {
    json j;
    j["lower"] = q.lower ? bound_to_json(*q.lower) : json(nullptr);
    j["upper"] = q.upper ? bound_to_json(*q.upper) : json(nullptr);
    return j;
}

QuantityBounds bounds_from_json(const json& j) {
    QuantityBounds q;
    if (!j.at("lower").is_null()) q.lower = bound_from_json(j.at("lower"));
    if (!j.at("upper").is_null()) q.upper = bound_from_json(j.at("upper"));
    return q;
}

json ledger_to_json(const BoundLedger& l) {
    json j;
    j["delta"] = bounds_to_json(l.delta);
    j["rho"] = bounds_to_json(l.rho);
    j["lambda0"] = bounds_to_json(l.lambda0);
    j["iso"] = bounds_to_json(l.iso);
    j["growth"] = bounds_to_json(l.growth);
    return j;
}

BoundLedger ledger_from_json(const json& j) {
    BoundLedger l;
    l.delta = bounds_from_json(j.at("delta"));
    l.rho = bounds_from_json(j.at("rho"));
    l.lambda0 = bounds_from_json(j.at("lambda0"));
    l.iso = bounds_from_json(j.at("iso"));
    l.growth = bounds_from_json(j.at("growth"));
    return l;
}

} // namespace

static bool bound_eq(const std::optional<Bound>& a, const std::optional<Bound>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->value == b->value && a->exact == b->exact && a->chain == b->chain;
}

static bool bounds_eq(const QuantityBounds& a, const QuantityBounds& b) {
    return bound_eq(a.lower, b.lower) && bound_eq(a.upper, b.upper);
}

bool operator==(const Report& a, const Report& b) {
    return a.schema == b.schema && a.id == b.id && a.rank == b.rank && a.k == b.k &&
           a.relators == b.relators && a.error == b.error && a.exact == b.exact &&
           a.certified_radius == b.certified_radius && a.window_radius == b.window_radius &&
           a.depth == b.depth && a.ball_counts == b.ball_counts &&
           a.loop_counts == b.loop_counts && a.growth_roots == b.growth_roots &&
           a.delta_hats == b.delta_hats && a.window_planar == b.window_planar &&
           a.planarity_radius == b.planarity_radius && a.ell_finite == b.ell_finite &&
           a.ell_twice == b.ell_twice && a.ell_exact == b.ell_exact &&
           bounds_eq(a.ledger.delta, b.ledger.delta) && bounds_eq(a.ledger.rho, b.ledger.rho) &&
           bounds_eq(a.ledger.lambda0, b.ledger.lambda0) &&
           bounds_eq(a.ledger.iso, b.ledger.iso) && bounds_eq(a.ledger.growth, b.ledger.growth) &&
           a.conjecture_margin_value == b.conjecture_margin_value &&
           a.conjecture_status == b.conjecture_status && a.verdicts == b.verdicts;
}

std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") {
        json j;
        j["schema"] = r.schema;
        j["id"] = r.id;
        j["rank"] = r.rank;
        j["k"] = r.k;
        j["relators"] = r.relators;
        j["error"] = r.error;
        j["exact"] = r.exact;
        j["certified_radius"] = r.certified_radius;
        j["window_radius"] = r.window_radius;
        j["depth"] = r.depth;
        j["ball_counts"] = r.ball_counts;
        j["loop_counts"] = r.loop_counts;
        j["growth_roots"] = r.growth_roots;
        json hats = json::array();
        for (auto [rad, val] : r.delta_hats) hats.push_back({rad, val});
        j["delta_hats"] = hats;
        j["window_planar"] = r.window_planar ? json(*r.window_planar) : json(nullptr);
        j["planarity_radius"] = r.planarity_radius;
        j["ell"] = {{"finite", r.ell_finite}, {"twice", r.ell_twice}, {"exact", r.ell_exact}};
        j["ledger"] = ledger_to_json(r.ledger);
        j["conjecture_margin"] = r.conjecture_margin_value;
        j["conjecture_status"] = r.conjecture_status;
        json vs = json::array();
        for (const auto& v : r.verdicts) vs.push_back({{"inequality", v.inequality}, {"status", v.status}});
        j["verdicts"] = vs;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "r,ball_count,loop_count,growth_root,delta_hat\n";
        std::size_t rows = std::max(r.ball_counts.size(), r.loop_counts.size());
        for (std::size_t i = 0; i < rows; ++i) {
            os << i << ',';
            if (i < r.ball_counts.size()) os << r.ball_counts[i];
            os << ',';
            if (i < r.loop_counts.size()) os << r.loop_counts[i];
            os << ',';
            if (i >= 1 && i - 1 < r.growth_roots.size())
                os << std::setprecision(12) << r.growth_roots[i - 1];
            os << ',';
            for (auto [rad, val] : r.delta_hats)
                if (rad == static_cast<int>(i)) os << std::setprecision(12) << val;
            os << '\n';
        }
        return os.str();
    }
    if (format == "table") {
        std::vector<Report> one{r};
        return sweep_table(one);
    }
    throw std::invalid_argument("unsupported report format '" + format + "'");
}

Report report_from_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != "cogrowth-report/1")
        throw std::invalid_argument("unsupported report schema '" + r.schema + "'");
    r.id = j.at("id").get<std::string>();
    r.rank = j.at("rank").get<int>();
    r.k = j.at("k").get<int>();
    r.relators = j.at("relators").get<std::vector<std::string>>();
    r.error = j.at("error").get<std::string>();
    r.exact = j.at("exact").get<bool>();
    r.certified_radius = j.at("certified_radius").get<int>();
    r.window_radius = j.at("window_radius").get<int>();
    r.depth = j.at("depth").get<int>();
    r.ball_counts = j.at("ball_counts").get<std::vector<std::uint64_t>>();
    r.loop_counts = j.at("loop_counts").get<std::vector<std::string>>();
    r.growth_roots = j.at("growth_roots").get<std::vector<double>>();
    for (const auto& h : j.at("delta_hats"))
        r.delta_hats.emplace_back(h.at(0).get<int>(), h.at(1).get<double>());
    if (!j.at("window_planar").is_null()) r.window_planar = j.at("window_planar").get<bool>();
    r.planarity_radius = j.at("planarity_radius").get<int>();
    r.ell_finite = j.at("ell").at("finite").get<bool>();
    r.ell_twice = j.at("ell").at("twice").get<long long>();
    r.ell_exact = j.at("ell").at("exact").get<bool>();
    r.ledger = ledger_from_json(j.at("ledger"));
    r.conjecture_margin_value = j.at("conjecture_margin").get<double>();
    r.conjecture_status = j.at("conjecture_status").get<std::string>();
    for (const auto& v : j.at("verdicts"))
        r.verdicts.push_back({v.at("inequality").get<std::string>(),
                              v.at("status").get<std::string>()});
    return r;
}

namespace {

std::string opt_bound(const std::optional<Bound>& b) {
    if (!b) return "";
    std::ostringstream os;
    os << std::setprecision(10) << b->value;
    return os.str();
}

} // namespace

std::string sweep_csv(const std::vector<Report>& reports) {
    std::ostringstream os;
    os << "k,ell,i_lower,growth_lower,delta_upper,delta_lower\n";
    for (const auto& r : reports) {
        os << r.k << ',';
        if (r.error.empty()) {
            if (r.ell_finite) os << std::setprecision(10) << r.ell_twice / 2.0;
            os << ',' << opt_bound(r.ledger.iso.lower) << ',' << opt_bound(r.ledger.growth.lower)
               << ',' << opt_bound(r.ledger.delta.upper) << ','
               << opt_bound(r.ledger.delta.lower);
        } else {
            os << ",,,,";
        }
        os << '\n';
    }
    return os.str();
}

std::string sweep_table(const std::vector<Report>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(24) << "id" << std::setw(6) << "k" << std::setw(8) << "ell"
       << std::setw(12) << "i_lower" << std::setw(14) << "growth_lower" << std::setw(13)
       << "delta_upper" << std::setw(13) << "delta_lower" << std::setw(10) << "planar"
       << "conjecture\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(24) << r.id << std::setw(6) << r.k;
        if (!r.error.empty()) {
            os << "error: " << r.error << '\n';
            continue;
        }
        std::ostringstream ell;
        if (r.ell_finite)
            ell << r.ell_twice / 2.0;
        else
            ell << "inf";
        os << std::setw(8) << ell.str() << std::setw(12) << opt_bound(r.ledger.iso.lower)
           << std::setw(14) << opt_bound(r.ledger.growth.lower) << std::setw(13)
           << opt_bound(r.ledger.delta.upper) << std::setw(13)
           << opt_bound(r.ledger.delta.lower) << std::setw(10)
           << (r.window_planar ? (*r.window_planar ? "yes" : "no") : "-")
           << r.conjecture_status << '\n';
    }
    return os.str();
}

Subgraph random_connected_subgraph(const SchreierGraph& g, std::size_t target_size,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> dist = distances_from_basepoint(g);
    int limit = g.is_exact() ? std::numeric_limits<int>::max() : g.certified_radius() - 1;
    std::vector<char> in(g.size(), 0), queued(g.size(), 0);
    std::vector<std::uint32_t> picked, frontier;
    auto allowed = [&](std::uint32_t v) { return dist[v] >= 0 && dist[v] <= limit; };
    std::uint32_t start = g.basepoint();
    if (!allowed(start)) throw std::invalid_argument("certified region is empty");
    in[start] = 1;
    picked.push_back(start);
    auto push_neighbors = [&](std::uint32_t v) {
        for (int l = 0; l < g.rank().num_letters(); ++l) {
            std::uint32_t t = g.target(v, Letter::from_code(l));
            if (t == SchreierGraph::undefined || in[t] || queued[t] || !allowed(t)) continue;
            queued[t] = 1;
            frontier.push_back(t);
        }
    };
    push_neighbors(start);
    while (picked.size() < target_size && !frontier.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        std::size_t i = pick(rng);
        std::uint32_t v = frontier[i];
        frontier[i] = frontier.back();
        frontier.pop_back();
        in[v] = 1;
        picked.push_back(v);
        push_neighbors(v);
    }
    return Subgraph(g, picked);
}

int verify_graph(const SchreierGraph& g, const std::vector<ReducedWord>& relators,
                 std::ostream& log) {
    try {
        validate(g);
        log << "graph-invariants: ok (determinism, involution)\n";
        if (g.is_exact()) {
            for (std::uint32_t v = 0; v < g.size(); ++v)
                if (g.degree(v) != g.rank().num_letters())
                    throw std::logic_error("exact graph is not 2n-regular at vertex " +
                                           std::to_string(v));
            log << "regularity: ok (every vertex has degree 2n)\n";
        }

        PreGraph pre;
        pre.rank = g.rank();
        pre.num_vertices = static_cast<std::uint32_t>(g.size());
        pre.basepoint = g.basepoint();
        for (std::uint32_t v = 0; v < g.size(); ++v)
            for (int l = 0; l < g.rank().num_letters(); ++l) {
                Letter let = Letter::from_code(l);
                std::uint32_t t = g.target(v, let);
                if (t == SchreierGraph::undefined) continue;
                if (t < v || (t == v && let.inverse().code() < l)) continue;
                pre.edges.push_back({v, let, t});
            }
        SchreierGraph refolded = fold(pre);
        if (!(refolded == canonicalize(g)))
            throw std::logic_error("folding is not idempotent on this graph");
        log << "fold-idempotence: ok\n";

        Measurements m = measure(g, relators);
        for (std::size_t r = 1; r < m.balls.counts.size(); ++r)
            if (m.balls.counts[r] < m.balls.counts[r - 1])
                throw std::logic_error("ball counts decrease");
        for (std::size_t r = 0; r < m.balls.counts.size(); ++r)
            if (BigInt(m.balls.counts[r]) > ball_count(g.rank(), static_cast<int>(r)))
                throw std::logic_error("ball count exceeds the tree bound");
        log << "ball-counts: ok (monotone, within the tree bound)\n";
        for (std::size_t r = 1; r < m.loops.counts.size(); ++r)
            if (m.loops.counts[r] < m.loops.counts[r - 1])
                throw std::logic_error("loop counts decrease");
        log << "loop-counts: ok (monotone)\n";

        int core_checks = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            std::size_t size = 3 + (seed * 7) % 40;
            Subgraph s = random_connected_subgraph(g, size, seed);
            CoreGraph c = core(s);
            if (!euler_boundary_check(c, g.rank()))
                throw std::logic_error("euler-boundary identity fails on a sampled core");
            if (!c.trivial() && is_planar(c.graph).planar && !planar_core_size_check(c))
                throw std::logic_error("planar core size bound fails on a sampled core");
            ++core_checks;
        }
        log << "core-identities: ok (" << core_checks << " sampled cores)\n";

        BoundLedger led = assemble_ledger(g, m);
        led.enforce();
        MarginResult margin = conjecture_margin(led, g.rank());
        for (const auto& v : build_verdicts(g, m, led, margin))
            log << "verdict " << v.inequality << ": " << v.status << "\n";
        log << "ledger: ok (all lower bounds below upper bounds)\n";
        return 0;
    } catch (const std::logic_error& e) {
        log << "INVARIANT VIOLATION: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        log << "RESOURCE: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cogrowth
