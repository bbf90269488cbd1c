// Command line front end: builds box families, lifts them to median graphs,
// runs the verification checks, solves coloring problems, and emits the
// reproduction report.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medianlab/burling.hpp"
#include "medianlab/coloring.hpp"
#include "medianlab/event_structure.hpp"
#include "medianlab/generators.hpp"
#include "medianlab/json_io.hpp"
#include "medianlab/lifting.hpp"

namespace ml = medianlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitCheckFailed = 3;

ml::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ml::SchemaError("cannot open " + path);
    ml::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ml::SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void write_json(const std::string& path, const ml::Json& j) { write_text(path, j.dump(2) + "\n"); }

struct TimerMs {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

ml::Json coloring_to_json(const ml::ColoringResult& r) {
    ml::Json j;
    j["lower"] = r.lower_bound;
    j["upper"] = r.upper_bound;
    j["exact"] = r.optimal;
    if (r.optimal) j["chi"] = r.count;
    return j;
}

// ---------------------------------------------------------------------------

int cmd_burling(int n, const std::string& out_path) {
    auto bh = ml::burling_family(n);
    // Post-hoc contract checks before anything is written.
    if (auto tri = ml::find_box_triangle(bh)) {
        std::cerr << "construction bug: triangle " << (*tri)[0] << "," << (*tri)[1] << ","
                  << (*tri)[2] << "\n";
        return kExitCheckFailed;
    }
    if (n <= 2) {
        auto chi = ml::chromatic_number(ml::intersection_graph(bh));
        if (!(chi.optimal && chi.count > n)) {
            std::cerr << "construction bug: chi not proven above " << n << "\n";
            return kExitCheckFailed;
        }
    }
    write_json(out_path, ml::hypergraph_to_json(bh));
    std::cout << "wrote " << out_path << ": " << bh.size() << " boxes, " << bh.probes.size()
              << " probes\n";
    return kExitOk;
}

int cmd_lift(const std::string& boxes_path, const std::string& out_path,
             const std::string& dot_path) {
    auto bh = ml::hypergraph_from_json(load_json(boxes_path));
    auto gc = ml::build_grid(bh);
    auto lg = ml::lift(gc, bh);
    auto an = ml::analyze_lift(lg);
    write_json(out_path, ml::lifted_to_json(lg, an, &bh));
    std::cout << "wrote " << out_path << ": grid " << gc.dims[0] << "x" << gc.dims[1] << "x"
              << gc.dims[2] << ", " << lg.graph.vertex_count() << " vertices, "
              << lg.graph.edge_count() << " edges, " << an.theta.class_count()
              << " theta classes\n";
    if (!dot_path.empty()) {
        std::vector<int> highlight = an.box_class;
        write_text(dot_path, ml::graph_to_dot(lg.graph, &an.theta, highlight));
        std::cout << "wrote " << dot_path << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct CheckRow {
    std::string name;
    bool pass;
    std::string detail;
};

int run_checks(std::vector<CheckRow>& rows) {
    bool all = true;
    for (const auto& r : rows) {
        std::cout << "CHECK " << std::left << std::setw(22) << r.name
                  << (r.pass ? "PASS" : "FAIL");
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? kExitOk : kExitCheckFailed;
}

bool wants(const std::vector<std::string>& checks, const std::string& name) {
    for (const auto& c : checks) {
        if (c == "all" || c == name) return true;
    }
    return false;
}

int cmd_verify(const std::string& graph_path, std::vector<std::string> checks,
               const std::string& mode, std::uint64_t samples, std::uint64_t seed,
               const std::string& dot_path) {
    if (checks.empty()) checks = {"all"};
    auto j = load_json(graph_path);
    std::vector<CheckRow> rows;

    bool is_lift = j.contains("theta_labels");
    ml::Graph graph;
    std::optional<ml::LoadedLift> loaded;
    if (is_lift) {
        loaded = ml::lifted_from_json(j);
        graph = loaded->lg.graph;
    } else {
        graph = ml::graph_from_json(j);
    }
    int basepoint = is_lift ? loaded->lg.alpha : 0;

    if (wants(checks, "median")) {
        bool sampled = mode == "sampled" || (mode == "auto" && graph.vertex_count() > 2000);
        ml::MedianVerdict v = sampled ? ml::is_median_sampled(graph, samples, seed)
                                      : ml::is_median_exhaustive(graph);
        std::ostringstream detail;
        detail << (sampled ? "sampled " : "exhaustive ") << v.triples_checked << " triples";
        if (!v.is_median && v.witness) {
            detail << "; witness (" << v.witness->triple[0] << "," << v.witness->triple[1] << ","
                   << v.witness->triple[2] << ") intersection size "
                   << v.witness->intersection_size;
        }
        rows.push_back({"median", v.is_median, detail.str()});
    }

    std::optional<ml::ThetaStructure> theta;
    if (wants(checks, "theta") || wants(checks, "crossing-free") ||
        wants(checks, "contact-boxes") || wants(checks, "coloring-chain") ||
        wants(checks, "degree-bounds") || wants(checks, "orientation")) {
        auto built = ml::theta_classes(graph, basepoint);
        if (built.ok()) {
            theta = std::move(*built.structure);
            if (wants(checks, "theta")) {
                rows.push_back({"theta", true,
                                std::to_string(theta->class_count()) +
                                    " classes, halfspaces convex and gated"});
            }
        } else if (wants(checks, "theta")) {
            rows.push_back({"theta", false,
                            std::string(ml::to_string(built.failure->kind)) + ": " +
                                built.failure->detail});
        }
    }

    if (wants(checks, "cube")) {
        auto v = ml::cube_condition(graph, {0, 1});
        std::string detail = v.holds ? "k=0,1" : ("violation at k=" + std::to_string(v.failed_k));
        rows.push_back({"cube", v.holds, detail});
    }

    if (is_lift) {
        std::optional<ml::LiftAnalysis> an;
        try {
            an = ml::analyze_lift(loaded->lg);
        } catch (const std::exception& e) {
            rows.push_back({"orientation", false, e.what()});
        }
        if (an) {
            if (wants(checks, "orientation")) {
                rows.push_back({"orientation", true, "rule and distance orientations agree"});
            }
            if (wants(checks, "crossing-free")) {
                auto v = ml::verify_no_lifted_crossings(*an);
                rows.push_back({"crossing-free", v.ok, v.detail});
            }
            if (loaded->boxes) {
                if (wants(checks, "contact-boxes")) {
                    auto v = ml::verify_contact_matches_boxes(*an, *loaded->boxes);
                    rows.push_back({"contact-boxes", v.ok, v.detail});
                }
                if (wants(checks, "degree-bounds")) {
                    auto omega = ml::max_clique(ml::intersection_graph(*loaded->boxes));
                    auto r = ml::verify_degree_bounds(*an, omega.size());
                    rows.push_back({"degree-bounds", r.ok,
                                    "max out-degree " + std::to_string(r.max_out_degree) +
                                        " <= " + std::to_string(r.omega + 3) + ", max degree " +
                                        std::to_string(r.max_degree) + " <= " +
                                        std::to_string(r.omega + 6)});
                }
                if (wants(checks, "coloring-chain")) {
                    auto r = ml::verify_coloring_chain(*an, *loaded->boxes);
                    rows.push_back(
                        {"coloring-chain", r.ok,
                         "chi(contact) in [" + std::to_string(r.contact.lower_bound) + "," +
                             std::to_string(r.contact.upper_bound) + "], chi(pointed) in [" +
                             std::to_string(r.pointed_contact.lower_bound) + "," +
                             std::to_string(r.pointed_contact.upper_bound) + "], chi(boxes) in [" +
                             std::to_string(r.boxes.lower_bound) + "," +
                             std::to_string(r.boxes.upper_bound) + "]"});
                }
                if (wants(checks, "certificate")) {
                    auto gc = ml::build_grid(*loaded->boxes);
                    auto v = ml::verify_amalgam_certificate(gc, *loaded->boxes);
                    rows.push_back({"certificate", v.ok, v.detail});
                }
            }
            if (!dot_path.empty()) {
                write_text(dot_path, ml::graph_to_dot(graph, &an->theta, an->box_class));
            }
        }
    } else if (!dot_path.empty()) {
        write_text(dot_path, ml::graph_to_dot(graph, theta ? &*theta : nullptr));
    }

    return run_checks(rows);
}

// ---------------------------------------------------------------------------
// chromatic

int cmd_chromatic(const std::string& graph_path, const std::string& target,
                  std::uint64_t budget_nodes, std::int64_t budget_ms) {
    ml::SolveBudget budget{budget_nodes, budget_ms};
    auto j = load_json(graph_path);
    ml::Graph target_graph;
    if (target == "intersection") {
        ml::BoxHypergraph bh =
            j.contains("boxes") && !j.contains("vertices")
                ? ml::hypergraph_from_json(j)
                : (j.contains("boxes") ? ml::hypergraph_from_json(j.at("boxes"))
                                       : throw ml::SchemaError("no boxes in " + graph_path));
        target_graph = ml::intersection_graph(bh);
    } else {
        bool is_lift = j.contains("theta_labels");
        ml::Graph graph;
        int basepoint = 0;
        if (is_lift) {
            auto loaded = ml::lifted_from_json(j);
            graph = loaded.lg.graph;
            basepoint = loaded.lg.alpha;
        } else {
            graph = ml::graph_from_json(j);
        }
        auto t = ml::theta_classes_checked(graph, basepoint);
        if (target == "contact") {
            target_graph = ml::contact_graph(t);
        } else if (target == "crossing") {
            target_graph = ml::crossing_graph(t);
        } else if (target == "pointed-contact") {
            ml::OrientedGraph og(graph, basepoint);
            target_graph = ml::pointed_contact_graph(og, t);
        } else {
            throw ml::SchemaError("unknown target " + target);
        }
    }
    auto r = ml::chromatic_number(target_graph, budget);
    std::cout << "target " << target << ": " << target_graph.vertex_count() << " vertices, "
              << target_graph.edge_count() << " edges\n";
    if (r.optimal) {
        std::cout << "chi = " << r.count << " (exact; clique bound " << r.clique.size() << ")\n";
        return kExitOk;
    }
    std::cout << "chi in [" << r.lower_bound << ", " << r.upper_bound
              << "] (budget exhausted; clique bound " << r.clique.size() << ")\n";
    return kExitResource;
}

// ---------------------------------------------------------------------------
// report

struct ReportBudgets {
    ml::SolveBudget chi{20'000'000, 60'000};
    std::uint64_t median_samples = 1'000'000;
    int exhaustive_cap = 2000;
    // Full per-class analysis cap, then a degrees-only tier: orientation of
    // a ten-million-vertex lift fits in memory, its theta structure does not.
    std::int64_t full_analysis_vertices = 2'000'000;
    std::int64_t orientation_only_vertices = 12'000'000;
};

ml::Json report_row(int n, std::uint64_t seed, const ReportBudgets& budgets, std::string& text) {
    ml::Json row;
    row["n"] = n;
    std::string tag = std::to_string(n);
    row["rerun"] = std::vector<std::string>{
        "medianlab burling --n " + tag + " --out b" + tag + ".json",
        "medianlab lift --boxes b" + tag + ".json --out l" + tag + ".json",
        "medianlab verify --graph l" + tag + ".json",
        "medianlab chromatic --graph l" + tag + ".json --target pointed-contact"};
    TimerMs timer;
    ml::BoxHypergraph bh;
    try {
        bh = ml::burling_family(n);
    } catch (const ml::ResourceLimitError& e) {
        row["status"] = std::string("resource_limit: ") + e.what();
        text += "n=" + std::to_string(n) + ": RESOURCE_LIMIT (construction)\n";
        return row;
    }
    row["boxes"] = bh.size();
    row["probes"] = static_cast<int>(bh.probes.size());

    auto boxes_graph = ml::intersection_graph(bh);
    bool triangle_free = !ml::find_box_triangle(bh).has_value();
    auto snapped = ml::snap_to_grid(bh);
    bool snap_stable = ml::intersection_graph(snapped).edges() == boxes_graph.edges();
    auto omega = ml::max_clique(boxes_graph);
    auto chi_boxes = ml::chromatic_number(boxes_graph, budgets.chi);
    row["omega"] = omega.size();
    row["chi_boxes"] = coloring_to_json(chi_boxes);
    ml::Json checks;
    checks["triangle_free"] = triangle_free;
    checks["snap_stable"] = snap_stable;
    checks["chi_exceeds_n"] = chi_boxes.lower_bound > n || (chi_boxes.optimal && chi_boxes.count > n);

    std::string status = "ok";
    try {
        auto gc = ml::build_grid(bh, ml::LiftBudget{budgets.orientation_only_vertices});
        auto lg = ml::lift(gc, bh, ml::LiftBudget{budgets.orientation_only_vertices});
        if (lg.graph.vertex_count() > budgets.full_analysis_vertices) {
            // Degrees-only tier: the orientation cross-check still runs, the
            // per-class machinery is skipped.
            auto og = ml::orient_at_alpha(lg);
            row["grid_dims"] = std::vector<int>{gc.dims[0], gc.dims[1], gc.dims[2]};
            row["lift_vertices"] = lg.graph.vertex_count();
            row["lift_edges"] = lg.graph.edge_count();
            row["max_out_degree"] = og.max_out_degree();
            row["max_degree"] = lg.graph.max_degree();
            checks["degree_bounds"] =
                og.max_out_degree() <= omega.size() + 3 && lg.graph.max_degree() <= omega.size() + 6;
            checks["orientation_cross_check"] = true;
            row["checks"] = checks;
            row["status"] = "partial: class analysis beyond budget";
            std::ostringstream line;
            line << "n=" << n << ": boxes=" << bh.size() << " grid=" << gc.dims[0] << "x"
                 << gc.dims[1] << "x" << gc.dims[2] << " |V|=" << lg.graph.vertex_count()
                 << " outdeg=" << og.max_out_degree() << " deg=" << lg.graph.max_degree()
                 << " chi(B) in [" << chi_boxes.lower_bound << "," << chi_boxes.upper_bound
                 << "] (degrees-only tier)  (" << timer.elapsed() << " ms)\n";
            text += line.str();
            return row;
        }
        auto an = ml::analyze_lift(lg);
        row["grid_dims"] = std::vector<int>{gc.dims[0], gc.dims[1], gc.dims[2]};
        row["lift_vertices"] = lg.graph.vertex_count();
        row["lift_edges"] = lg.graph.edge_count();
        row["theta_classes"] = an.theta.class_count();
        row["lifted_classes"] = lg.box_count;
        auto deg = ml::verify_degree_bounds(an, omega.size());
        row["max_out_degree"] = deg.max_out_degree;
        row["max_degree"] = deg.max_degree;
        checks["degree_bounds"] = deg.ok;
        checks["crossing_free"] = ml::verify_no_lifted_crossings(an).ok;
        checks["contact_matches_boxes"] = ml::verify_contact_matches_boxes(an, bh).ok;
        auto chain = ml::verify_coloring_chain(an, bh, budgets.chi);
        row["chi_contact"] = coloring_to_json(chain.contact);
        row["chi_pointed_contact"] = coloring_to_json(chain.pointed_contact);
        checks["coloring_chain"] = chain.ok;
        checks["orientation_cross_check"] = true;  // analyze_lift would have thrown
        if (lg.graph.vertex_count() <= budgets.exhaustive_cap) {
            auto mv = ml::is_median_exhaustive(lg.graph);
            checks["median"] = mv.is_median ? "exhaustive-pass" : "exhaustive-FAIL";
        } else {
            auto mv = ml::is_median_sampled(lg.graph, budgets.median_samples, seed);
            auto cert = ml::verify_amalgam_certificate(gc, bh);
            checks["median"] = (mv.is_median && cert.ok) ? "sampled-pass+certificate"
                                                         : "sampled-FAIL";
        }
        auto cube = ml::cube_condition(lg.graph, {0, 1});
        checks["cube_condition"] = cube.holds;
        std::ostringstream line;
        line << "n=" << n << ": boxes=" << bh.size() << " grid=" << gc.dims[0] << "x"
             << gc.dims[1] << "x" << gc.dims[2] << " |V|=" << lg.graph.vertex_count()
             << " classes=" << an.theta.class_count() << " outdeg=" << deg.max_out_degree
             << " deg=" << deg.max_degree << " chi(B) in [" << chi_boxes.lower_bound << ","
             << chi_boxes.upper_bound << "]"
             << " chi(Ga) in [" << chain.pointed_contact.lower_bound << ","
             << chain.pointed_contact.upper_bound << "]"
             << "  (" << timer.elapsed() << " ms)\n";
        text += line.str();
    } catch (const ml::ResourceLimitError& e) {
        status = std::string("lift_resource_limit");
        row["lift_error"] = e.what();
        std::ostringstream line;
        line << "n=" << n << ": boxes=" << bh.size() << " chi(B) in [" << chi_boxes.lower_bound
             << "," << chi_boxes.upper_bound << "] lift skipped: RESOURCE_LIMIT  ("
             << timer.elapsed() << " ms)\n";
        text += line.str();
    }
    row["checks"] = checks;
    row["status"] = status;
    return row;
}

int cmd_report(int n_max, const std::string& out_path, std::uint64_t seed) {
    ReportBudgets budgets;
    ml::Json report;
    report["schema"] = "medianlab/1";
    report["seed"] = seed;
    report["rows"] = ml::Json::array();
    std::string text;
    bool all_ok = true;
    for (int n = 1; n <= n_max; ++n) {
        auto row = report_row(n, seed, budgets, text);
        if (row.contains("checks")) {
            for (const auto& [key, value] : row.at("checks").items()) {
                if (value.is_boolean() && !value.get<bool>()) all_ok = false;
                if (value.is_string() && value.get<std::string>().find("FAIL") !=
                                             std::string::npos) {
                    all_ok = false;
                }
            }
        }
        report["rows"].push_back(row);
    }
    // Chain prefix row.
    try {
        TimerMs timer;
        int k = std::min(n_max, 2);
        auto built = ml::build_chain(k);
        ml::Json chain_row;
        chain_row["blocks"] = k;
        chain_row["vertices"] = built.chain.graph.vertex_count();
        auto points = ml::articulation_points(built.chain.graph);
        chain_row["articulation_count"] = static_cast<int>(points.size());
        bool arts_match = points == built.chain.articulation;
        ml::OrientedGraph og(built.chain.graph, built.chain.alpha);
        std::vector<int> art_out;
        for (int v : built.chain.articulation) art_out.push_back(og.out_degree(v));
        chain_row["articulation_out_degrees"] = art_out;
        chain_row["max_out_degree"] = og.max_out_degree();
        auto t = ml::theta_classes_checked(built.chain.graph, built.chain.alpha,
                                           ml::ThetaOptions{ml::ThetaOptions::HalfspaceCheck::Off});
        auto gamma = ml::pointed_contact_graph(og, t);
        auto chi_chain = ml::chromatic_number(gamma, budgets.chi);
        chain_row["chi_pointed_contact"] = coloring_to_json(chi_chain);
        int max_block_chi = 0;
        for (auto& blk : built.blocks) {
            auto an = ml::analyze_lift(blk, ml::ThetaOptions{ml::ThetaOptions::HalfspaceCheck::Off});
            auto chi = ml::chromatic_number(ml::pointed_contact_graph(an.orientation, an.theta),
                                            budgets.chi);
            max_block_chi = std::max(max_block_chi, chi.count);
        }
        chain_row["chi_equals_max_over_blocks"] = chi_chain.optimal && chi_chain.count == max_block_chi;
        chain_row["articulation_as_expected"] = arts_match;
        all_ok = all_ok && arts_match && chi_chain.count == max_block_chi;
        report["chain"] = chain_row;
        std::ostringstream line;
        line << "chain k=" << k << ": |V|=" << built.chain.graph.vertex_count()
             << " articulations=" << points.size() << " max outdeg=" << og.max_out_degree()
             << " chi(Ga)=" << chi_chain.count << "  (" << timer.elapsed() << " ms)\n";
        text += line.str();
    } catch (const ml::ResourceLimitError& e) {
        report["chain"] = ml::Json{{"status", std::string("resource_limit: ") + e.what()}};
    }
    write_json(out_path, report);
    std::cout << text;
    std::cout << "report written to " << out_path << "\n";
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"median graphs, event structures and box families"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for all randomized procedures");

    auto* burling = app.add_subcommand("burling", "construct a box family and write it as JSON");
    int burling_n = 1;
    std::string burling_out = "boxes.json";
    burling->add_option("--n", burling_n, "family parameter (chi exceeds n)")->required();
    burling->add_option("--out", burling_out, "output path")->required();

    auto* liftc = app.add_subcommand("lift", "lift a box family to its median graph");
    std::string lift_boxes, lift_out = "lift.json", lift_dot;
    liftc->add_option("--boxes", lift_boxes, "box hypergraph JSON")->required();
    liftc->add_option("--out", lift_out, "output path")->required();
    liftc->add_option("--dot", lift_dot, "also write a DOT rendering");

    auto* verify = app.add_subcommand("verify", "run verification checks on a graph or lift");
    std::string verify_graph, verify_mode = "auto", verify_dot;
    std::vector<std::string> verify_checks;
    std::uint64_t verify_samples = 1'000'000;
    verify->add_option("--graph", verify_graph, "graph or lifted-graph JSON")->required();
    verify->add_option("--checks", verify_checks,
                       "subset of: median,theta,cube,orientation,crossing-free,contact-boxes,"
                       "degree-bounds,coloring-chain,certificate,all")
        ->delimiter(',');
    verify->add_option("--mode", verify_mode, "median mode: exhaustive|sampled|auto");
    verify->add_option("--samples", verify_samples, "sampled-mode triple count");
    verify->add_option("--dot", verify_dot, "write a DOT rendering");

    auto* chrom = app.add_subcommand("chromatic", "clique/chromatic bounds of a derived graph");
    std::string chrom_graph, chrom_target = "pointed-contact";
    std::uint64_t chrom_budget = 50'000'000;
    std::int64_t chrom_budget_ms = -1;
    chrom->add_option("--graph", chrom_graph, "input JSON (graph, lift, or box family)")
        ->required();
    chrom->add_option("--target", chrom_target,
                      "contact|pointed-contact|crossing|intersection");
    chrom->add_option("--budget", chrom_budget, "solver node budget");
    chrom->add_option("--budget-ms", chrom_budget_ms, "solver wall-clock budget (ms)");

    auto* report = app.add_subcommand("report", "full pipeline per n plus the chain prefix");
    int report_n_max = 2;
    std::string report_out = "report.json";
    report->add_option("--n-max", report_n_max, "largest family parameter")->required();
    report->add_option("--out", report_out, "report JSON path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (burling->parsed()) return cmd_burling(burling_n, burling_out);
        if (liftc->parsed()) return cmd_lift(lift_boxes, lift_out, lift_dot);
        if (verify->parsed()) {
            return cmd_verify(verify_graph, verify_checks, verify_mode, verify_samples, seed,
                              verify_dot);
        }
        if (chrom->parsed()) {
            return cmd_chromatic(chrom_graph, chrom_target, chrom_budget, chrom_budget_ms);
        }
        if (report->parsed()) return cmd_report(report_n_max, report_out, seed);
    } catch (const ml::ResourceLimitError& e) {
        std::cerr << "RESOURCE_LIMIT: " << e.what() << "\n";
        return kExitResource;
    } catch (const ml::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
