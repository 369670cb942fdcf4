#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cogrowth/counting.hpp"
#include "cogrowth/geometry.hpp"
#include "cogrowth/lab.hpp"
#include "cogrowth/planarity.hpp"
#include "cogrowth/schreier.hpp"
#include "cogrowth/spectral.hpp"
#include "cogrowth/words.hpp"

using nlohmann::json;
namespace cg = cogrowth;

namespace {

cg::SchreierGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return cg::read_dump(in);
}

std::vector<cg::ReducedWord> load_relators(const std::string& path, cg::Rank rank) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open relator file '" + path + "'");
    return cg::parse_relator_list(rank, in);
}

std::vector<int> parse_k_range(const std::string& spec) {
    std::vector<int> ks;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        int lo = std::stoi(spec.substr(0, dots));
        int hi = std::stoi(spec.substr(dots + 2));
        for (int k = lo; k <= hi; ++k) ks.push_back(k);
        return ks;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) ks.push_back(std::stoi(tok));
    return ks;
}

struct BuildArgs {
    int rank = 2;
    std::string relator_file;
    std::string preset;
    int k = 0;
    int genus = 0;
    int radius = 6;
    int depth = 2;
    std::size_t max_cosets = 4'000'000;
    std::string out;
};

std::vector<cg::ReducedWord> resolve_relators(const BuildArgs& a, cg::Rank& rank) {
    if (!a.preset.empty()) {
        if (a.preset == "commutator") rank = cg::Rank(2);
        if (a.preset == "surface") rank = cg::Rank(2 * std::max(a.genus, 1));
        int param = a.preset == "surface" ? a.genus : a.k;
        return cg::preset_relators(a.preset, rank, param);
    }
    if (!a.relator_file.empty()) {
        auto rels = load_relators(a.relator_file, rank);
        for (auto& r : rels) r = cg::cyclic_reduce(r);
        return rels;
    }
    return {};
}

int cmd_build(const BuildArgs& a) {
    cg::Rank rank(a.rank);
    auto rels = resolve_relators(a, rank);
    auto [g, diag] = cg::truncated_quotient(rank, rels, a.radius, a.depth, a.max_cosets);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw std::runtime_error("cannot open output file '" + a.out + "'");
        out = &file;
    }
    cg::write_dump(g, *out);
    std::cerr << "build: " << (diag.closed ? "closed (exact quotient), " : "window, ")
              << diag.coset_count << " vertices, certified radius " << diag.certified_radius
              << ", depth " << diag.deepening_level << "\n";
    return 0;
}

int cmd_count(const std::string& input, const std::string& mode, int radius,
              const std::string& format) {
    cg::SchreierGraph g = load_graph(input);
    if (mode == "balls") {
        cg::BallCounts b = cg::ball_counts(g, radius);
        std::vector<double> roots = cg::growth_estimate(b);
        if (format == "csv") {
            std::cout << "r,count,root_or_rate\n";
            for (std::size_t r = 0; r < b.counts.size(); ++r) {
                std::cout << r << ',' << b.counts[r] << ',';
                if (r >= 1) std::cout << roots[r - 1];
                std::cout << '\n';
            }
        } else {
            json j;
            j["mode"] = "balls";
            j["counts"] = b.counts;
            j["roots"] = roots;
            std::cout << j.dump(2) << '\n';
        }
        return 0;
    }
    if (mode == "loops") {
        cg::LoopCounts l = cg::loop_counts(g, radius);
        cg::DeltaEstimate d = cg::delta_estimate(l, g.rank());
        if (format == "csv") {
            std::cout << "r,count,root_or_rate\n";
            for (std::size_t r = 0; r < l.counts.size(); ++r) {
                std::cout << r << ',' << l.counts[r].str() << ',';
                for (auto [rad, val] : d.per_radius)
                    if (rad == static_cast<int>(r)) std::cout << val;
                std::cout << '\n';
            }
        } else {
            json j;
            j["mode"] = "loops";
            json counts = json::array();
            for (const auto& c : l.counts) counts.push_back(c.str());
            j["counts"] = counts;
            json hats = json::array();
            for (auto [rad, val] : d.per_radius) hats.push_back({rad, val});
            j["delta_hats"] = hats;
            j["eta"] = d.eta;
            std::cout << j.dump(2) << '\n';
        }
        return 0;
    }
    throw std::runtime_error("unknown count mode '" + mode + "'");
}

int cmd_spectral(const std::string& input, const std::string& method, int iters, double tol) {
    cg::SchreierGraph g = load_graph(input);
    cg::SpectralEstimate est;
    if (method == "power") {
        est = cg::power_iteration_rho(g, iters, tol);
    } else if (method == "return") {
        int usable = g.is_exact() ? 32 : g.certified_radius();
        est.rho_lower = cg::return_probability_rho_lower(g, std::max(usable, 1));
        est.rho_upper = 1.0;
        est.method_tags = {"return-probability"};
    } else if (method == "rayleigh") {
        int max_r = g.certified_radius();
        if (g.is_exact()) {
            std::vector<int> dist = cg::distances_from_basepoint(g);
            max_r = 0;
            for (int d : dist) max_r = std::max(max_r, d);
        } else {
            max_r = std::max(max_r - 1, 0);
        }
        double best = 1.0;
        for (int r = 0; r <= max_r; ++r) {
            cg::Subgraph b = cg::ball(g, r);
            std::vector<double> f(g.size(), 0.0);
            for (auto v : b.vertices()) f[v] = 1.0;
            best = std::min(best, cg::rayleigh_quotient(g, f));
        }
        est.rho_lower = 1.0 - best; // rayleigh upper-bounds lambda0
        est.rho_upper = 1.0;
        est.method_tags = {"rayleigh-ball-indicators"};
    } else {
        throw std::runtime_error("unknown spectral method '" + method + "'");
    }
    json j;
    j["rho_lower"] = est.rho_lower;
    j["rho_upper"] = est.rho_upper;
    j["lambda0_lower"] = est.lambda0_lower();
    j["lambda0_upper"] = est.lambda0_upper();
    j["method_tags"] = est.method_tags;
    j["converged"] = est.converged;
    std::cout << j.dump(2) << '\n';
    return 0;
}

json halfint_json(cg::HalfInt h) {
    json j;
    j["finite"] = !h.is_infinite();
    if (!h.is_infinite()) {
        j["twice"] = h.twice;
        j["value"] = h.value();
    }
    return j;
}

int cmd_geometry(const std::string& input, const std::string& op, int radius) {
    cg::SchreierGraph g = load_graph(input);
    int usable = g.is_exact() ? 1 << 20 : g.certified_radius();
    json j;
    if (op == "girth") {
        j["op"] = "girth";
        j["injectivity_radius"] = halfint_json(cg::injectivity_radius(g));
    } else if (op == "core") {
        int r = radius >= 0 ? radius : std::max(usable - 1, 0);
        cg::CoreGraph c = cg::core(cg::ball(g, r));
        j["op"] = "core";
        j["ball_radius"] = r;
        j["trivial"] = c.trivial();
        j["vertices"] = c.vertices.size();
        j["edges"] = c.graph.edges.size();
        j["chi"] = c.chi;
        j["boundary"] = c.boundary;
        j["ell"] = halfint_json(c.ell);
    } else if (op == "iso-upper") {
        std::vector<cg::Subgraph> candidates;
        std::vector<std::string> names;
        int r = radius >= 0 ? radius : std::max(usable - 1, 0);
        cg::default_iso_candidates(g, r, candidates, names);
        cg::IsoUpperBound up = cg::isoperimetric_upper(g, candidates, names);
        j["op"] = "iso-upper";
        j["value"] = up.value.value();
        j["exact"] = {{"num", up.value.num}, {"den", up.value.den}};
        j["witness"] = up.witness;
    } else if (op == "iso-lower") {
        int r = radius >= 0 ? radius : usable;
        cg::PlanarityVerdict verdict = cg::check_quotient_planarity(g, r);
        j["op"] = "iso-lower";
        j["window_planar"] = verdict.planar;
        if (!verdict.planar) {
            j["value"] = 0.0;
            j["certificate"] = "window not planar: " + verdict.obstruction;
        } else {
            cg::HalfInt ell = cg::injectivity_radius(g);
            cg::IsoLowerBound low = cg::isoperimetric_lower_planar(g.rank(), ell);
            j["value"] = low.value.value();
            j["exact"] = {{"num", low.value.num}, {"den", low.value.den}};
            j["vacuous"] = low.vacuous;
            j["ell"] = halfint_json(ell);
            j["certificate"] = "window planarity (radius " + std::to_string(r) +
                               ") + girth; evidence relative to the window";
        }
    } else if (op == "euler-check") {
        int checks = 0;
        bool ok = true;
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            cg::Subgraph s = cg::random_connected_subgraph(g, 4 + (seed % 30), seed);
            cg::CoreGraph c = cg::core(s);
            ok = ok && cg::euler_boundary_check(c, g.rank());
            ++checks;
        }
        j["op"] = "euler-check";
        j["cores_checked"] = checks;
        j["identity_holds"] = ok;
    } else {
        throw std::runtime_error("unknown geometry op '" + op + "'");
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_planar(const std::string& input, int radius) {
    cg::SchreierGraph g = load_graph(input);
    int r = radius >= 0 ? radius : (g.is_exact() ? 1 << 20 : g.certified_radius());
    if (g.is_exact()) {
        std::vector<int> dist = cg::distances_from_basepoint(g);
        int ecc = 0;
        for (int d : dist) ecc = std::max(ecc, d);
        r = std::min(r, ecc);
    }
    cg::PlanarityVerdict v = cg::check_quotient_planarity(g, r);
    json j;
    j["radius"] = r;
    j["planar"] = v.planar;
    j["note"] = v.planar ? "window-relative evidence, not a proof for the infinite graph"
                         : "definitive: a nonplanar ball refutes planarity of the quotient";
    if (!v.planar) j["obstruction"] = v.obstruction;
    j["simplified_vertices"] = v.simplified_vertices;
    j["simplified_edges"] = v.simplified_edges;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_sweep(int n, const std::string& krange, int radius, int depth, const std::string& out_dir,
              const std::string& format, std::size_t max_cosets) {
    cg::Rank rank(n);
    std::vector<int> ks = parse_k_range(krange);
    std::vector<cg::Report> reports = cg::theorem_trend_sweep(rank, ks, radius, depth, max_cosets);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& r : reports) {
            std::ofstream f(out_dir + "/" + r.id + ".json");
            f << cg::emit_report(r, "json");
        }
        std::ofstream summary(out_dir + "/sweep.csv");
        summary << cg::sweep_csv(reports);
    }
    if (format == "csv")
        std::cout << cg::sweep_csv(reports);
    else if (format == "table")
        std::cout << cg::sweep_table(reports);
    else
        for (const auto& r : reports) std::cout << cg::emit_report(r, "json");
    for (const auto& r : reports)
        if (!r.error.empty()) return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quotient graphs of free-group Cayley trees: growth, cogrowth, "
                 "spectral and isoperimetric bounds"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "construct a quotient graph window");
    build->add_option("--rank", build_args.rank, "free-group rank n >= 2");
    build->add_option("--relators", build_args.relator_file, "relator file");
    build->add_option("--preset", build_args.preset, "powers | commutator | surface | mod2");
    build->add_option("--k", build_args.k, "parameter for the powers preset");
    build->add_option("--genus", build_args.genus, "parameter for the surface preset");
    build->add_option("--radius", build_args.radius, "window radius R");
    build->add_option("--depth", build_args.depth, "deepening level L");
    build->add_option("--max-cosets", build_args.max_cosets, "live-coset cap");
    build->add_option("--out", build_args.out, "output file (default stdout)");

    std::string count_input, count_mode = "balls", count_format = "csv";
    int count_radius = 6;
    auto* count = app.add_subcommand("count", "ball or loop counting");
    count->add_option("--input", count_input, "graph dump file")->required();
    count->add_option("--mode", count_mode, "balls | loops");
    count->add_option("--radius", count_radius, "maximum radius");
    count->add_option("--format", count_format, "csv | json");

    std::string sp_input, sp_method = "power";
    int sp_iters = 100000;
    double sp_tol = 1e-10;
    auto* spectral = app.add_subcommand("spectral", "spectral-radius estimates");
    spectral->add_option("--input", sp_input, "graph dump file")->required();
    spectral->add_option("--method", sp_method, "power | return | rayleigh");
    spectral->add_option("--iters", sp_iters, "iteration cap");
    spectral->add_option("--tol", sp_tol, "convergence tolerance");

    std::string geo_input, geo_op = "girth";
    int geo_radius = -1;
    auto* geometry = app.add_subcommand("geometry", "cores, girth and isoperimetric bounds");
    geometry->add_option("--input", geo_input, "graph dump file")->required();
    geometry->add_option("--op", geo_op, "core | girth | iso-upper | iso-lower | euler-check");
    geometry->add_option("--radius", geo_radius, "ball radius for the operation");

    std::string pl_input;
    int pl_radius = -1;
    auto* planar = app.add_subcommand("planar", "planarity of a quotient window");
    planar->add_option("--input", pl_input, "graph dump file")->required();
    planar->add_option("--radius", pl_radius, "ball radius (default: certified radius)");

    auto* lab = app.add_subcommand("lab", "experiment orchestration");
    lab->require_subcommand(1);
    int sw_n = 2, sw_radius = 0, sw_depth = 2;
    std::string sw_k = "2..10", sw_out, sw_format = "table";
    std::size_t sw_cap = 4'000'000;
    auto* sweep = lab->add_subcommand("sweep", "powers-preset trend sweep");
    sweep->add_option("--preset", [](const std::vector<std::string>&) { return true; },
                      "preset family (powers)");
    sweep->add_option("--n", sw_n, "free-group rank");
    sweep->add_option("--k", sw_k, "k range, e.g. 2..10 or 4,6,8");
    sweep->add_option("--radius", sw_radius, "window radius (default 2k)");
    sweep->add_option("--depth", sw_depth, "deepening level");
    sweep->add_option("--out", sw_out, "directory for per-k reports");
    sweep->add_option("--format", sw_format, "json | csv | table");
    sweep->add_option("--max-cosets", sw_cap, "live-coset cap");

    std::string vf_input, vf_relators;
    int vf_rank = 2;
    auto* verify = lab->add_subcommand("verify", "run the invariant suite on a graph");
    verify->add_option("--input", vf_input, "graph dump file")->required();
    verify->add_option("--relators", vf_relators, "relator file (enables kernel-aware checks)");
    verify->add_option("--rank", vf_rank, "rank for the relator file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) return cmd_build(build_args);
        if (*count) return cmd_count(count_input, count_mode, count_radius, count_format);
        if (*spectral) return cmd_spectral(sp_input, sp_method, sp_iters, sp_tol);
        if (*geometry) return cmd_geometry(geo_input, geo_op, geo_radius);
        if (*planar) return cmd_planar(pl_input, pl_radius);
        if (*sweep) return cmd_sweep(sw_n, sw_k, sw_radius, sw_depth, sw_out, sw_format, sw_cap);
        if (*verify) {
            cg::SchreierGraph g = load_graph(vf_input);
            std::vector<cg::ReducedWord> rels;
            if (!vf_relators.empty()) rels = load_relators(vf_relators, cg::Rank(vf_rank));
            return cg::verify_graph(g, rels, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string what = e.what();
        return what.find("resource cap") != std::string::npos ? 2 : 1;
    }
    return 0;
}
