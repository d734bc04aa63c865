// forestconc: forest complexity of dependency graphs, concentration bounds
// for graph-dependent data, and Monte Carlo validation of those bounds.
//
// Subcommands: complexity | bound | simulate | genbound | gap
// Exit codes: 0 success/pass, 1 validation failure, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forestconc/bounds.hpp"
#include "forestconc/chromatic.hpp"
#include "forestconc/csv.hpp"
#include "forestconc/families.hpp"
#include "forestconc/forest_complexity.hpp"
#include "forestconc/graph_io.hpp"
#include "forestconc/grid_select.hpp"
#include "forestconc/samplers.hpp"
#include "forestconc/simulation.hpp"
#include "forestconc/stability.hpp"

namespace fc = forestconc;

namespace {

constexpr std::uint64_t kStreamRects = 21;

struct GraphSource {
    std::string path;
    std::string family;
    int n = 0;
    int m = 0;

    void add_options(CLI::App* cmd, const std::string& family_flag = "--family") {
        cmd->add_option("--graph", path, "graph JSON file {\"n\":..,\"edges\":[[u,v],..]}");
        cmd->add_option(family_flag, family,
                        "built-in family: path|tree|cycle|grid|mdep|star|complete");
        cmd->add_option("--n", n, "vertex count for built-in families");
        cmd->add_option("--m", m, "grid side / dependence range for built-in families");
    }

    fc::GraphFile load(std::uint64_t seed) const {
        if (!path.empty()) return fc::load_graph_file(path);
        if (family.empty()) throw std::runtime_error("no graph given: use --graph or a family");
        fc::GraphFile gf;
        if (family == "path") gf.graph = fc::path_graph(n);
        else if (family == "tree") gf.graph = fc::random_tree(n, seed);
        else if (family == "cycle") gf.graph = fc::cycle_graph(n);
        else if (family == "grid") gf.graph = fc::grid_graph(m);
        else if (family == "mdep") gf.graph = fc::m_dependent_chain(n, m);
        else if (family == "star") gf.graph = fc::star_graph(n);
        else if (family == "complete") gf.graph = fc::complete_graph(n);
        else throw std::runtime_error("unknown graph family: " + family);
        return gf;
    }
};

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::runtime_error(std::string("cannot parse ") + what + ": '" + item + "'");
        }
    }
    if (out.empty()) throw std::runtime_error(std::string("empty list for ") + what);
    return out;
}

fc::LipschitzVector parse_lipschitz(const std::string& spec, int n) {
    if (spec.rfind("uniform:", 0) == 0) {
        double v = std::stod(spec.substr(8));
        return fc::LipschitzVector::uniform(n, v);
    }
    fc::LipschitzVector c{parse_double_list(spec, "Lipschitz vector")};
    if (c.size() != n)
        throw std::runtime_error("Lipschitz vector length " + std::to_string(c.size()) +
                                 " does not match n = " + std::to_string(n));
    c.validate();
    return c;
}

int env_workers_fallback(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("FORESTCONC_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string blocks_to_string(const fc::VertexPartition& p) {
    std::ostringstream os;
    for (int b = 0; b < p.block_count(); ++b) {
        os << (b ? " {" : "{");
        const auto& blk = p.blocks[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? "," : "") << blk[i];
        os << "}";
    }
    return os.str();
}

// ---------------------------------------------------------------- complexity

int run_complexity(const GraphSource& src, std::uint64_t seed, int budget,
                   const std::string& out_path, const std::string& emit_graph_path) {
    fc::GraphFile gf = src.load(seed);
    const fc::Graph& g = gf.graph;
    if (!emit_graph_path.empty()) fc::save_graph_file(gf, emit_graph_path);
    auto survey = fc::complexity_survey(g, budget);
    if (survey.empty()) throw std::runtime_error("no applicable complexity method");
    const fc::ComplexityResult* best = &survey.front();
    for (const auto& r : survey)
        if (r.value < best->value) best = &r;

    std::cout << "graph: n=" << g.vertex_count() << " edges=" << g.edge_count() << "\n";
    for (const auto& r : survey)
        std::cout << "  " << r.method << ": " << r.value << (r.exact ? " (exact)" : " (upper bound)")
                  << "\n";
    std::cout << "forest complexity " << (best->exact ? "= " : "<= ") << best->value << " via "
              << best->method << "\n";
    std::cout << "witness blocks: " << blocks_to_string(best->witness.partition) << "\n";
    std::cout << "witness forest edges:";
    for (auto [u, v] : best->witness.forest.edges()) std::cout << " (" << u << "," << v << ")";
    std::cout << "\n";
    if (gf.labels) {
        std::cout << "labels:";
        for (const auto& l : *gf.labels) std::cout << " " << l;
        std::cout << "\n";
    }

    if (!out_path.empty()) {
        nlohmann::json j;
        j["n"] = g.vertex_count();
        j["edge_count"] = g.edge_count();
        j["value"] = best->value;
        j["exact"] = best->exact;
        j["method"] = best->method;
        j["witness"]["blocks"] = best->witness.partition.blocks;
        j["witness"]["forest_edges"] = nlohmann::json::array();
        for (auto [u, v] : best->witness.forest.edges())
            j["witness"]["forest_edges"].push_back({u, v});
        j["survey"] = nlohmann::json::array();
        for (const auto& r : survey)
            j["survey"].push_back({{"method", r.method}, {"value", r.value}, {"exact", r.exact}});
        write_text(out_path, j.dump(2) + "\n");
    }
    return 0;
}

// --------------------------------------------------------------------- bound

struct FamilyColumn {
    fc::BoundFamily family;
    double denominator;
};

std::vector<FamilyColumn> applicable_families(const fc::Graph& g, const fc::LipschitzVector& c,
                                              int oracle_budget, int chi_budget) {
    std::vector<FamilyColumn> cols;
    if (g.edge_count() == 0)
        cols.push_back({fc::BoundFamily::mcdiarmid, fc::mcdiarmid_denominator(c)});
    if (g.vertex_count() <= chi_budget) {
        auto [chi, coloring] = fc::fractional_chromatic_number(g, chi_budget);
        cols.push_back({fc::BoundFamily::janson, fc::janson_denominator(c, fc::to_double(chi))});
    }
    if (fc::is_tree(g)) cols.push_back({fc::BoundFamily::tree, fc::forest_denominator(g, c)});
    if (fc::is_forest(g)) cols.push_back({fc::BoundFamily::forest, fc::forest_denominator(g, c)});
    auto lambda = fc::best_upper_bound(g, oracle_budget);
    cols.push_back({fc::BoundFamily::general, fc::general_denominator(lambda.value, c.linf())});
    return cols;
}

int run_bound(const GraphSource& src, std::uint64_t seed, const std::string& c_spec,
              const std::string& t_spec, const std::string& only_family, int budget,
              const std::string& out_path) {
    fc::GraphFile gf = src.load(seed);
    const fc::Graph& g = gf.graph;
    fc::LipschitzVector c = parse_lipschitz(c_spec, g.vertex_count());
    std::vector<double> grid = parse_double_list(t_spec, "threshold grid");
    auto cols = applicable_families(g, c, budget, 14);
    if (!only_family.empty()) {
        std::vector<FamilyColumn> filtered;
        for (const auto& col : cols)
            if (fc::family_name(col.family) == only_family) filtered.push_back(col);
        if (filtered.empty())
            throw std::runtime_error("bound family '" + only_family +
                                     "' is not applicable to this graph");
        cols = std::move(filtered);
    }

    std::vector<std::string> header{"t", "bound_mcdiarmid", "bound_janson", "bound_tree",
                                    "bound_forest", "bound_general"};
    fc::CsvWriter csv(header);
    for (double t : grid) {
        std::vector<std::string> row{fc::format_double(t), "", "", "", "", ""};
        for (const auto& col : cols) {
            auto b = fc::tail_from_denominator(col.family, col.denominator, t);
            row[1 + static_cast<std::size_t>(col.family)] = fc::format_double(b.probability);
        }
        csv.add_row(std::move(row));
    }
    std::cout << csv.str();
    if (!out_path.empty()) csv.save(out_path);
    return 0;
}

// ------------------------------------------------------------------ simulate

struct SamplerSpec {
    std::string kind;  // edgegen | mdep | poisson
    GraphSource graph_src;  // also supplies --n/--m for the mdep sampler
    int rects = 0;
    std::string regions_path;
    double intensity = 40.0;
    int cap = 5;
};

std::vector<fc::Rect> random_rects(int count, std::uint64_t seed) {
    fc::CounterRng rng(seed, kStreamRects, 0);
    std::vector<fc::Rect> rects;
    for (int i = 0; i < count; ++i) {
        double cx = 0.15 + 0.7 * rng.next_uniform();
        double cy = 0.15 + 0.7 * rng.next_uniform();
        double hw = 0.05 + 0.10 * rng.next_uniform();
        double hh = 0.05 + 0.10 * rng.next_uniform();
        rects.push_back(fc::Rect{std::max(0.0, cx - hw), std::max(0.0, cy - hh),
                                 std::min(1.0, cx + hw), std::min(1.0, cy + hh)});
    }
    return rects;
}

std::vector<fc::Rect> load_rects(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open regions file " + path);
    nlohmann::json j;
    in >> j;
    std::vector<fc::Rect> rects;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != 4)
            throw std::runtime_error("regions file: each entry must be [x0,y0,x1,y1]");
        rects.push_back(fc::Rect{r[0].get<double>(), r[1].get<double>(), r[2].get<double>(),
                                 r[3].get<double>()});
    }
    return rects;
}

fc::DependentSampler make_sampler(const SamplerSpec& spec, std::uint64_t seed) {
    if (spec.kind == "edgegen") return fc::DependentSampler::edge_generator(spec.graph_src.load(seed).graph);
    if (spec.kind == "mdep") return fc::DependentSampler::m_dependent(spec.graph_src.n, spec.graph_src.m);
    if (spec.kind == "poisson") {
        auto rects = spec.regions_path.empty() ? random_rects(spec.rects, seed)
                                               : load_rects(spec.regions_path);
        return fc::DependentSampler::poisson_regions(std::move(rects), spec.intensity, spec.cap);
    }
    throw std::runtime_error("unknown sampler kind: " + spec.kind);
}

int run_simulate(const SamplerSpec& spec, std::uint64_t seed, const std::string& c_spec,
                 const std::string& t_spec, std::int64_t trials, double confidence, int workers,
                 bool corrupt_bound, int budget, const std::string& out_path) {
    fc::DependentSampler sampler = make_sampler(spec, seed);
    fc::LipschitzVector c = parse_lipschitz(c_spec, sampler.dimension());

    std::vector<double> grid =
        t_spec.empty()
            ? fc::suggest_threshold_grid(sampler, c, {0.3, 0.1, 0.03, 0.01, 0.003, 0.0006},
                                         std::min<std::int64_t>(trials, 100000), seed)
            : parse_double_list(t_spec, "threshold grid");

    fc::TailEstimate est = fc::estimate_tail(sampler, c, grid, trials, seed, confidence, workers);

    auto cols = applicable_families(sampler.graph(), c, budget, 14);
    if (corrupt_bound)
        for (auto& col : cols) col.denominator /= 2.0;  // deliberately wrong: negative control
    const FamilyColumn* tightest = &cols.front();
    for (const auto& col : cols)
        if (col.denominator < tightest->denominator) tightest = &col;

    const double shift = est.centering_radius;
    std::vector<std::vector<fc::TailBound>> curves;
    curves.reserve(cols.size());
    for (const auto& col : cols)
        curves.push_back(fc::bound_curve(col.family, col.denominator, est.t_grid, shift));
    auto tightest_curve =
        fc::bound_curve(tightest->family, tightest->denominator, est.t_grid, shift);
    fc::ValidationReport report = fc::validate_bound(est, tightest_curve);

    std::vector<std::string> header{"t", "empirical_freq", "ci_upper"};
    for (const auto& col : cols) header.push_back(std::string("bound_") + fc::family_name(col.family));
    fc::CsvWriter csv(header);
    for (std::size_t k = 0; k < est.t_grid.size(); ++k) {
        std::vector<std::string> row{fc::format_double(est.t_grid[k]),
                                     fc::format_double(est.frequencies[k]),
                                     fc::format_double(est.ci_upper[k])};
        for (const auto& curve : curves) row.push_back(fc::format_double(curve[k].probability));
        csv.add_row(std::move(row));
    }
    std::cout << csv.str();
    if (!out_path.empty()) csv.save(out_path);

    std::cout << "graph: n=" << sampler.graph().vertex_count()
              << " edges=" << sampler.graph().edge_count() << "\n";
    std::cout << "centering: " << (est.exact_mean_used ? "exact mean " : "pilot mean ")
              << fc::format_double(est.centering_mean)
              << " radius " << fc::format_double(est.centering_radius) << "\n";
    if (corrupt_bound) std::cout << "NOTE: denominators halved (--corrupt-bound)\n";
    std::cout << "validating against tightest family: " << fc::family_name(tightest->family)
              << " (denominator " << fc::format_double(tightest->denominator) << ")\n";
    for (const auto& v : report.thresholds)
        std::cout << "  t=" << fc::format_double(v.t) << " freq=" << fc::format_double(v.frequency)
                  << " ci=" << fc::format_double(v.ci_upper)
                  << " bound=" << fc::format_double(v.bound_probability)
                  << (v.pass ? " PASS" : " FAIL") << " slack=" << fc::format_double(v.slack)
                  << "\n";
    std::cout << (report.pass ? "validation: PASS" : "validation: FAIL") << "\n";
    return report.pass ? 0 : 1;
}

// ------------------------------------------------------------------ genbound

int run_genbound(int n, double beta_B, const std::string& beta_table_path, double M, double delta,
                 std::optional<int> mdep_m, std::optional<int> delta_cap,
                 std::optional<std::int64_t> lambda_opt, const GraphSource& src,
                 std::uint64_t seed, double risk, int budget) {
    fc::StabilitySchedule sched;
    if (!beta_table_path.empty()) {
        std::ifstream in(beta_table_path);
        if (!in) throw std::runtime_error("cannot open beta table " + beta_table_path);
        std::vector<double> table;
        double v;
        while (in >> v) table.push_back(v);
        sched = fc::StabilitySchedule::table_form(std::move(table), M, n, 0);
    } else {
        sched = fc::StabilitySchedule::inverse_form(beta_B, M, n, 0);
    }

    fc::GeneralizationBound b;
    if (mdep_m) {
        b = fc::m_dependent_generalization_bound(sched, *mdep_m, risk, delta);
        std::cout << "m-dependent bound, m=" << *mdep_m << " Delta=" << 2 * *mdep_m << "\n";
    } else {
        std::int64_t lambda;
        if (lambda_opt) {
            lambda = *lambda_opt;
        } else if (!src.path.empty() || !src.family.empty()) {
            auto res = fc::best_upper_bound(src.load(seed).graph, budget);
            lambda = res.value;
            std::cout << "forest complexity " << (res.exact ? "= " : "<= ") << lambda << " via "
                      << res.method << "\n";
        } else {
            lambda = n;  // i.i.d. shape
        }
        sched.delta_cap = delta_cap.value_or(0);
        sched.validate();
        b = fc::generalization_bound(sched, lambda, risk, delta);
        std::cout << "general bound, Delta=" << sched.delta_cap << " Lambda=" << lambda << "\n";
    }
    std::cout << "empirical_risk   " << fc::format_double(b.empirical_risk) << "\n";
    std::cout << "expected_gap     " << fc::format_double(b.expected_gap_term) << "\n";
    std::cout << "deviation_term   " << fc::format_double(b.deviation_term) << "\n";
    std::cout << "total            " << fc::format_double(b.total) << "\n";
    return 0;
}

// ----------------------------------------------------------------------- gap

int run_gap(int n, int q, double lambda_reg, double delta, int reps, std::int64_t test_trials,
            double noise, std::uint64_t seed, const std::string& out_path) {
    fc::GapExperimentReport report =
        fc::gap_experiment(n, q, lambda_reg, delta, reps, test_trials, noise, seed);
    fc::CsvWriter csv({"rep", "empirical_risk", "generalization_risk", "gen_se", "gap", "bound",
                       "pass"});
    for (std::size_t r = 0; r < report.records.size(); ++r) {
        const auto& rec = report.records[r];
        csv.add_row({std::to_string(r), fc::format_double(rec.empirical),
                     fc::format_double(rec.generalization), fc::format_double(rec.generalization_se),
                     fc::format_double(rec.gap), fc::format_double(rec.bound),
                     rec.pass ? "1" : "0"});
    }
    std::cout << csv.str();
    if (!out_path.empty()) csv.save(out_path);
    std::cout << "bound (non-empirical terms): " << fc::format_double(report.bound) << "\n";
    std::cout << "pass fraction: " << fc::format_double(report.pass_fraction) << " over " << reps
              << " repetitions\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forest complexity and concentration bounds for graph-dependent data"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int workers = 0;
    app.add_option("--seed", seed, "seed for all randomness")->capture_default_str();
    app.add_option("--workers", workers, "worker threads (or env FORESTCONC_WORKERS)");
    app.fallthrough();  // global flags may follow the subcommand

    // complexity
    auto* cmd_complexity = app.add_subcommand("complexity", "forest complexity of a graph");
    GraphSource cx_src;
    cx_src.add_options(cmd_complexity);
    int cx_budget = fc::kDefaultOracleBudget;
    std::string cx_out, cx_emit;
    cmd_complexity->add_option("--budget", cx_budget, "exact-oracle vertex budget")
        ->capture_default_str();
    cmd_complexity->add_option("--out", cx_out, "write machine-readable JSON report");
    cmd_complexity->add_option("--emit-graph", cx_emit, "write the graph as a graph JSON file");

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "evaluate tail bounds over a threshold grid");
    GraphSource bd_src;
    bd_src.add_options(cmd_bound, "--graph-family");
    std::string bd_c = "uniform:1", bd_t, bd_family, bd_out;
    int bd_budget = fc::kDefaultOracleBudget;
    cmd_bound->add_option("--c", bd_c, "Lipschitz vector: 'uniform:x' or comma list")
        ->capture_default_str();
    cmd_bound->add_option("--t", bd_t, "comma-separated threshold grid")->required();
    cmd_bound->add_option("--family", bd_family,
                          "restrict to one bound family: mcdiarmid|janson|tree|forest|general");
    cmd_bound->add_option("--budget", bd_budget, "exact-oracle vertex budget")
        ->capture_default_str();
    cmd_bound->add_option("--out", bd_out, "write CSV");

    // simulate
    auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo tail vs bounds");
    SamplerSpec sim_spec;
    cmd_simulate->add_option("--sampler", sim_spec.kind, "edgegen|mdep|poisson")->required();
    sim_spec.graph_src.add_options(cmd_simulate);
    cmd_simulate->add_option("--rects", sim_spec.rects, "number of random rectangles (poisson)");
    cmd_simulate->add_option("--regions", sim_spec.regions_path,
                             "regions JSON file [[x0,y0,x1,y1],...] (poisson)");
    cmd_simulate->add_option("--intensity", sim_spec.intensity, "point process intensity")
        ->capture_default_str();
    cmd_simulate->add_option("--cap", sim_spec.cap, "count cap per region")->capture_default_str();
    std::string sim_c = "uniform:1", sim_t, sim_out;
    std::int64_t sim_trials = 100000;
    double sim_conf = 0.99;
    bool sim_corrupt = false;
    int sim_budget = fc::kDefaultOracleBudget;
    cmd_simulate->add_option("--c", sim_c, "Lipschitz vector")->capture_default_str();
    cmd_simulate->add_option("--t", sim_t, "threshold grid (default: pilot quantiles)");
    cmd_simulate->add_option("--trials", sim_trials, "Monte Carlo trials")->capture_default_str();
    cmd_simulate->add_option("--confidence", sim_conf, "Clopper-Pearson confidence")
        ->capture_default_str();
    cmd_simulate->add_flag("--corrupt-bound", sim_corrupt,
                           "negative control: halve every bound denominator");
    cmd_simulate->add_option("--budget", sim_budget, "exact-oracle vertex budget")
        ->capture_default_str();
    cmd_simulate->add_option("--out", sim_out, "write CSV");

    // genbound
    auto* cmd_genbound = app.add_subcommand("genbound", "stability generalization bound terms");
    GraphSource gb_src;
    gb_src.add_options(cmd_genbound, "--graph-family");
    int gb_n = 0;
    double gb_B = 0, gb_M = 1, gb_delta = 0.05, gb_risk = 0;
    std::string gb_beta_table;
    int gb_budget = fc::kDefaultOracleBudget;
    std::optional<int> gb_mdep, gb_Delta;
    std::optional<std::int64_t> gb_lambda;
    int gb_mdep_raw = -1, gb_Delta_raw = -1;
    std::int64_t gb_lambda_raw = -1;
    cmd_genbound->add_option("--size", gb_n, "sample size n")->required();
    cmd_genbound->add_option("--beta-B", gb_B, "stability schedule beta_i = B/i");
    cmd_genbound->add_option("--beta-table", gb_beta_table, "file with beta_1..beta_n");
    cmd_genbound->add_option("--loss-bound", gb_M, "loss bound M")->capture_default_str();
    cmd_genbound->add_option("--delta", gb_delta, "failure probability")->capture_default_str();
    cmd_genbound->add_option("--risk", gb_risk, "empirical risk term")->capture_default_str();
    cmd_genbound->add_option("--mdep", gb_mdep_raw, "m-dependent preset: dependence range m");
    cmd_genbound->add_option("--Delta", gb_Delta_raw, "dependency degree cap");
    cmd_genbound->add_option("--lambda", gb_lambda_raw, "forest complexity value");
    cmd_genbound->add_option("--budget", gb_budget, "exact-oracle vertex budget")
        ->capture_default_str();

    // gap
    auto* cmd_gap = app.add_subcommand("gap", "generalization gap experiment");
    int gap_n = 500, gap_q = 2, gap_reps = 200;
    double gap_lreg = 1.0, gap_delta = 0.05, gap_noise = 0.1;
    std::int64_t gap_test_trials = 2000;
    std::string gap_out;
    cmd_gap->add_option("--size", gap_n, "sample size n")->capture_default_str();
    cmd_gap->add_option("--q", gap_q, "neighborhood radius (sample is 2q-dependent)")
        ->capture_default_str();
    cmd_gap->add_option("--lambda-reg", gap_lreg, "ridge regularization")->capture_default_str();
    cmd_gap->add_option("--delta", gap_delta, "failure probability")->capture_default_str();
    cmd_gap->add_option("--reps", gap_reps, "repetitions")->capture_default_str();
    cmd_gap->add_option("--test-trials", gap_test_trials, "Monte Carlo test points per rep")
        ->capture_default_str();
    cmd_gap->add_option("--noise", gap_noise, "target noise amplitude")->capture_default_str();
    cmd_gap->add_option("--out", gap_out, "write CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        workers = env_workers_fallback(workers);
        if (cmd_complexity->parsed())
            return run_complexity(cx_src, seed, cx_budget, cx_out, cx_emit);
        if (cmd_bound->parsed())
            return run_bound(bd_src, seed, bd_c, bd_t, bd_family, bd_budget, bd_out);
        if (cmd_simulate->parsed())
            return run_simulate(sim_spec, seed, sim_c, sim_t, sim_trials, sim_conf, workers,
                                sim_corrupt, sim_budget, sim_out);
        if (cmd_genbound->parsed()) {
            if (gb_mdep_raw >= 0) gb_mdep = gb_mdep_raw;
            if (gb_Delta_raw >= 0) gb_Delta = gb_Delta_raw;
            if (gb_lambda_raw >= 0) gb_lambda = gb_lambda_raw;
            return run_genbound(gb_n, gb_B, gb_beta_table, gb_M, gb_delta, gb_mdep, gb_Delta,
                                gb_lambda, gb_src, seed, gb_risk, gb_budget);
        }
        if (cmd_gap->parsed())
            return run_gap(gap_n, gap_q, gap_lreg, gap_delta, gap_reps, gap_test_trials, gap_noise,
                           seed, gap_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
