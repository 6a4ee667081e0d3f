#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modnet/bounds.hpp"
#include "modnet/checks.hpp"
#include "modnet/experiment.hpp"
#include "modnet/expansion.hpp"
#include "modnet/generators.hpp"
#include "modnet/graph.hpp"
#include "modnet/io.hpp"
#include "modnet/modularity.hpp"
#include "modnet/partition.hpp"
#include "modnet/partitioners.hpp"
#include "modnet/spa.hpp"
#include "modnet/spectral.hpp"

namespace {

struct GenOptions {
    std::string model;
    std::uint32_t n = 0;
    std::uint32_t d = 3;
    bool simple = false;
    std::uint32_t m = 2;
    std::uint32_t dim = 2;
    double a1 = 1.0;
    double a2 = 1.0;
    double p = 0.7;
    std::string norm = "linf";
};

struct PartitionOptions {
    std::string in_path;
    std::string method;
    std::string partition_out;
    std::string partition_in;
    std::string pos_path;
    double h = 0.0;
    std::uint32_t omega = 0;
    double eps = 0.05;
    double p = 0.7;
    double a1 = 1.0;
    std::uint32_t passes = 100;
};

struct BoundsOptions {
    std::string d_range = "3:10";
    std::string m_range = "7,8,9,10,100,1000";
    double tol = 1e-6;
    std::string csv_path;
};

struct VerifyOptions {
    std::string check;
    std::uint32_t m = 2;
    double c = 0.25;
    std::uint32_t n = 10000;
    std::uint32_t trials = 20;
    std::uint32_t d = 3;
    std::uint32_t dim = 2;
    double a1 = 1.0;
    double a2 = 1.0;
    double p = 0.7;
    std::uint32_t subsets = 1000;
};

modnet::Norm parse_norm(const std::string& s) {
    if (s == "linf") return modnet::Norm::Linf;
    if (s == "l2") return modnet::Norm::L2;
    throw std::invalid_argument("--norm must be linf or l2");
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s) {
    const std::size_t sep = s.find(':');
    if (sep == std::string::npos) {
        const auto v = static_cast<std::uint32_t>(std::stoul(s));
        return {v, v};
    }
    const auto lo = static_cast<std::uint32_t>(std::stoul(s.substr(0, sep)));
    const auto hi = static_cast<std::uint32_t>(std::stoul(s.substr(sep + 1)));
    if (lo > hi) throw std::invalid_argument("range lower bound exceeds upper bound: " + s);
    return {lo, hi};
}

std::vector<std::uint32_t> parse_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return out;
}

int run_gen(const GenOptions& opt, std::uint64_t seed, const std::string& out_path) {
    if (out_path.empty()) throw std::invalid_argument("gen: --out is required");

    modnet::Graph g;
    if (opt.model == "regular") {
        g = modnet::gen_pairing({opt.n, opt.d, opt.simple, 100000}, seed);
    } else if (opt.model == "pa") {
        g = modnet::gen_pa({opt.n, opt.m}, seed);
    } else if (opt.model == "spa") {
        modnet::SpaGraph sg =
            modnet::gen_spa({opt.n, opt.dim, opt.a1, opt.a2, opt.p, parse_norm(opt.norm)}, seed);
        g = modnet::undirect(sg);
        modnet::write_positions(out_path + ".pos", opt.dim, sg.positions);
    } else {
        throw std::invalid_argument("gen: --model must be regular, pa, or spa");
    }

    modnet::write_edge_list(out_path, g);
    std::cout << "model=" << opt.model << " n=" << g.vertex_count()
              << " edges=" << g.edge_count() << " simple=" << (g.is_simple() ? 1 : 0)
              << " components=" << modnet::connected_components(g).second << " -> " << out_path
              << (opt.model == "spa" ? " (+ .pos)" : "") << "\n";
    return 0;
}

int run_bounds(const BoundsOptions& opt) {
    const auto [d_lo, d_hi] = parse_range(opt.d_range);
    const std::vector<std::uint32_t> ms = parse_list(opt.m_range);

    // Assemble per-parameter rows; u3 honors the requested x tolerance.
    std::vector<modnet::BoundRow> rows;
    for (std::uint32_t d = d_lo; d <= d_hi; ++d) {
        const std::string param = "d=" + std::to_string(d);
        rows.push_back({param, "u1", modnet::u1(d)});
        rows.push_back({param, "u2", modnet::u2(d)});
        rows.push_back({param, "u3", modnet::u3(d, opt.tol)});
        rows.push_back({param, "friedman", modnet::friedman_upper(d)});
    }
    for (std::uint32_t m : ms) {
        const std::string param = "m=" + std::to_string(m);
        rows.push_back({param, "l1", modnet::pa_lower_l1(m)});
        rows.push_back({param, "l2", modnet::pa_lower_l2(m)});
        if (m >= 2) {
            rows.push_back({param, "pa_upper", modnet::pa_upper(m)});
            rows.push_back({param, "mihail_rho", modnet::mihail_expansion_lower(m)});
        }
    }

    std::cout << modnet::bound_table_csv(rows);
    if (!opt.csv_path.empty()) {
        std::ofstream out(opt.csv_path);
        if (!out) throw std::runtime_error("cannot open for writing: " + opt.csv_path);
        out << modnet::bound_table_csv(rows);
        std::cout << "# wrote " << opt.csv_path << "\n";
    }
    return 0;
}

int run_partition(const PartitionOptions& opt, std::uint64_t seed) {
    modnet::Graph g = modnet::read_edge_list_file(opt.in_path);
    const std::vector<std::uint32_t> deg = g.degrees();
    std::uint32_t delta = 0, non_isolated = 0;
    for (std::uint32_t dv : deg) {
        delta = std::max(delta, dv);
        if (dv > 0) ++non_isolated;
    }
    const double dbar =
        2.0 * static_cast<double>(g.edge_count()) / std::max(g.vertex_count(), 1u);

    modnet::Partition part = modnet::Partition::single_part(std::max(g.vertex_count(), 1u));
    bool invariants_pass = true;
    std::ostringstream note;

    if (opt.method == "tree") {
        if (!(opt.h > 0.0)) throw std::invalid_argument("partition: method tree requires --h > 0");
        part = modnet::decompose_connected(g, opt.h);
        std::vector<double> vol(part.part_count(), 0.0);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) vol[part.part_of(v)] += deg[v];
        for (double s : vol) {
            if (s > opt.h + 1e-9) invariants_pass = false;
            if (part.part_count() > 1 && s < opt.h / delta - 1.0 - 1e-9) invariants_pass = false;
        }
        note << "volume bounds [" << opt.h / delta - 1.0 << ", " << opt.h << "] "
             << (invariants_pass ? "hold" : "VIOLATED");
    } else if (opt.method == "forest") {
        part = modnet::partition_forest(g);
        const double bound = modnet::forest_lower(non_isolated, std::max(delta, 1u));
        const double q = modnet::modularity(g, part).q;
        invariants_pass = q >= bound - 1e-9;
        note << "q=" << q << " >= forest bound " << bound << " "
             << (invariants_pass ? "holds" : "VIOLATED");
    } else if (opt.method == "avgdeg") {
        part = modnet::partition_avg_degree(g);
        const double bound = modnet::avg_degree_lower(g.vertex_count(), delta, dbar);
        const double q = modnet::modularity(g, part).q;
        invariants_pass = q >= bound - 1e-9;
        note << "q=" << q << " >= average-degree bound " << bound << " "
             << (invariants_pass ? "holds" : "VIOLATED");
    } else if (opt.method == "majority") {
        part = modnet::majority_color_pa(g, opt.eps, seed);
        note << "two-coloring with eps=" << opt.eps;
    } else if (opt.method == "strips") {
        if (opt.pos_path.empty())
            throw std::invalid_argument("partition: method strips requires --pos");
        modnet::Positions pos = modnet::read_positions_file(opt.pos_path);
        if (pos.vertex_count() != g.vertex_count())
            throw std::invalid_argument("partition: positions/vertex count mismatch");
        modnet::SpaGraph sg;
        sg.params = {g.vertex_count(), pos.dim, opt.a1, 1.0, opt.p, modnet::Norm::Linf};
        sg.positions = std::move(pos.coords);
        part = modnet::strip_partition(sg, opt.omega);
        note << "omega=" << (opt.omega ? opt.omega : modnet::default_strip_count(sg.params));
    } else if (opt.method == "refine") {
        if (opt.partition_in.empty())
            throw std::invalid_argument("partition: method refine requires --partition-in");
        modnet::Partition start = modnet::read_partition_file(opt.partition_in);
        const double q0 = modnet::modularity(g, start).q;
        modnet::RefineResult ref = modnet::local_search_refine(g, start, opt.passes, seed);
        part = ref.partition;
        invariants_pass = ref.q >= q0 - 1e-12;
        note << "q " << q0 << " -> " << ref.q << " in " << ref.passes << " passes, " << ref.moves
             << " moves";
    } else {
        throw std::invalid_argument(
            "partition: --method must be tree, forest, avgdeg, majority, strips, or refine");
    }

    const modnet::ModularityBreakdown mb = modnet::modularity(g, part);
    std::cout << "method=" << opt.method << " parts=" << part.part_count() << " q=" << mb.q
              << " edge_contribution=" << mb.edge_contribution << " degree_tax=" << mb.degree_tax
              << "\n";
    if (!note.str().empty()) std::cout << note.str() << "\n";

    if (!opt.partition_out.empty()) {
        modnet::write_partition(opt.partition_out, part);
        std::cout << "# wrote " << opt.partition_out << "\n";
    }
    return invariants_pass ? 0 : 1;
}

int run_modularity(const std::string& in_path, const std::string& partition_path, double gamma) {
    modnet::Graph g = modnet::read_edge_list_file(in_path);
    modnet::Partition part = modnet::read_partition_file(partition_path);
    const modnet::ModularityBreakdown mb = modnet::modularity(g, part, gamma);
    std::cout << "q=" << mb.q << " edge_contribution=" << mb.edge_contribution
              << " degree_tax=" << mb.degree_tax << " gamma=" << mb.gamma
              << " parts=" << part.part_count() << "\n";
    return 0;
}

int run_experiment_cmd(const std::string& config_path, const std::vector<std::string>& overrides,
                       const std::string& out_path) {
    modnet::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = modnet::parse_config_file(config_path);
    for (const std::string& kv : overrides) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        modnet::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!out_path.empty() && cfg.csv_out.empty()) cfg.csv_out = out_path;

    const modnet::ExperimentResult result = modnet::run_experiment(cfg);
    std::cout << "model=" << cfg.model << " method=" << cfg.method << " trials=" << cfg.trials
              << "\nmean_q=" << result.mean_q << " stddev_q=" << result.stddev_q
              << " mean_edge_contribution=" << result.mean_edge_contribution
              << " mean_degree_tax=" << result.mean_degree_tax << "\n"
              << (result.all_pass ? "all asserted bounds hold"
                                  : "ASSERTED BOUND VIOLATED (see per-trial flags)")
              << "\n";
    if (!cfg.csv_out.empty()) std::cout << "# wrote " << cfg.csv_out << "\n";
    if (!cfg.json_out.empty()) std::cout << "# wrote " << cfg.json_out << "\n";
    return result.all_pass ? 0 : 1;
}

int run_verify(const VerifyOptions& opt, std::uint64_t seed) {
    bool pass = false;
    if (opt.check == "martingale") {
        const modnet::MartingaleCheckResult r =
            modnet::martingale_check(opt.m, opt.c, opt.n, opt.trials, seed);
        pass = r.pass_fraction >= 0.95;
        std::cout << "martingale m=" << opt.m << " c=" << opt.c << " n=" << opt.n
                  << " trials=" << r.trials << " pass_fraction=" << r.pass_fraction
                  << " worst_deviation_ratio=" << r.worst_deviation_ratio << "\n";
    } else if (opt.check == "components") {
        const modnet::ComponentCountResult r =
            modnet::component_count_check(1, opt.n, opt.trials, seed);
        const double center = std::log(static_cast<double>(opt.n)) / 2.0;
        pass = std::abs(r.mean_components - center) <= 1.0;
        std::cout << "components n=" << opt.n << " trials=" << opt.trials
                  << " mean=" << r.mean_components << " expected_mean=" << r.expected_mean
                  << " band=[" << center - 1.0 << ", " << center + 1.0 << "]\n";
    } else if (opt.check == "powerlaw") {
        const double slope = modnet::power_law_check(opt.m, opt.n, opt.trials, seed);
        pass = slope >= -2.25 && slope <= -1.75;
        std::cout << "powerlaw m=" << opt.m << " n=" << opt.n << " trials=" << opt.trials
                  << " ccdf_slope=" << slope << " band=[-2.25, -1.75]\n";
    } else if (opt.check == "degree-growth") {
        const modnet::SPAParams params{opt.n, opt.dim, opt.a1, opt.a2, opt.p,
                                       modnet::Norm::Linf};
        const modnet::DegreeGrowthResult r = modnet::degree_growth_check(params, seed);
        const double target = opt.p * opt.a1;
        const double log2n = std::pow(std::log(static_cast<double>(opt.n)), 2.0);
        pass = std::abs(r.fitted_exponent - target) <= 0.15 && r.max_out_degree <= log2n;
        std::cout << "degree-growth n=" << opt.n << " pA1=" << target
                  << " fitted_exponent=" << r.fitted_exponent
                  << " max_out_degree=" << r.max_out_degree << " (log^2 n = " << log2n << ")\n";
    } else if (opt.check == "expansion") {
        std::uint32_t lambda_ok = 0, violations = 0;
        const double lambda_cap = 2.0 * std::sqrt(static_cast<double>(opt.d) - 1.0) + 0.1;
        for (std::uint32_t t = 0; t < opt.trials; ++t) {
            modnet::Graph g;
            std::uint64_t s = seed + t;
            for (;;) {  // redraw until simple and connected (a.a.s. for d >= 3)
                g = modnet::gen_pairing({opt.n, opt.d, true, 100000}, s);
                if (modnet::is_connected(g)) break;
                s += 0x1000000;
            }
            const modnet::SpectralSummary eig = modnet::second_eigenvalue(g, 1e-7, 200000, s);
            if (eig.lambda <= lambda_cap) ++lambda_ok;
            const modnet::ExpansionCheckResult r =
                modnet::check_expansion_inequality(g, eig.lambda, opt.subsets, s + 1);
            if (!r.pass) ++violations;
        }
        pass = violations == 0;
        std::cout << "expansion d=" << opt.d << " n=" << opt.n << " trials=" << opt.trials
                  << " lambda<=2sqrt(d-1)+0.1 in " << lambda_ok << "/" << opt.trials
                  << " subsets=" << opt.subsets << " violations=" << violations << "\n";
    } else if (opt.check == "simple-fraction") {
        std::uint32_t simple = 0;
        for (std::uint32_t t = 0; t < opt.trials; ++t)
            if (modnet::gen_pairing({opt.n, opt.d, false, 1}, seed + t).is_simple()) ++simple;
        const double frac = static_cast<double>(simple) / opt.trials;
        const double expected =
            std::exp(-(static_cast<double>(opt.d) * opt.d - 1.0) / 4.0);
        pass = std::abs(frac - expected) <= 0.02;
        std::cout << "simple-fraction d=" << opt.d << " n=" << opt.n << " samples=" << opt.trials
                  << " fraction=" << frac << " expected=" << expected << " tol=0.02\n";
    } else {
        throw std::invalid_argument("verify: unknown --check '" + opt.check + "'");
    }
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-graph modularity toolkit: generators, partitions, bounds, experiments"};
    app.require_subcommand(1);
    // The partition subcommand exposes a --h flag (volume cap), so help is
    // reachable via --help only.
    app.set_help_flag("--help", "print help and exit");

    std::uint64_t seed = 1;
    std::string out_path, config_path;
    app.add_option("--seed", seed, "base RNG seed (default 1)");
    app.add_option("--out", out_path, "primary output path");
    app.add_option("--config", config_path, "experiment config file");

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "sample a random graph and write its edge list");
    gen_cmd->fallthrough();
    gen_cmd->add_option("--model", gen.model, "regular | pa | spa")
        ->required()
        ->check(CLI::IsMember({"regular", "pa", "spa"}));
    gen_cmd->add_option("--n", gen.n, "number of vertices")->required();
    gen_cmd->add_option("--d", gen.d, "degree (regular model)");
    gen_cmd->add_flag("--simple", gen.simple, "reject multigraph samples (regular model)");
    gen_cmd->add_option("--m", gen.m, "edges per vertex (pa model)");
    gen_cmd->add_option("--dim", gen.dim, "torus dimension (spa model)");
    gen_cmd->add_option("--a1", gen.a1, "influence degree coefficient (spa model)");
    gen_cmd->add_option("--a2", gen.a2, "influence offset (spa model)");
    gen_cmd->add_option("--p", gen.p, "link probability (spa model)");
    gen_cmd->add_option("--norm", gen.norm, "linf | l2 (spa model)")
        ->check(CLI::IsMember({"linf", "l2"}));

    BoundsOptions bounds;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the theoretical bound tables");
    bounds_cmd->fallthrough();
    bounds_cmd->add_option("--d-range", bounds.d_range, "degrees, lo:hi (default 3:10)");
    bounds_cmd->add_option("--m-range", bounds.m_range,
                           "comma-separated m values (default 7,8,9,10,100,1000)");
    bounds_cmd->add_option("--tol", bounds.tol, "x tolerance for the u3 optimizer");
    bounds_cmd->add_option("--csv", bounds.csv_path, "also write the table as CSV");

    PartitionOptions part;
    CLI::App* part_cmd = app.add_subcommand("partition", "partition a graph from an edge list");
    part_cmd->fallthrough();
    part_cmd->set_help_flag("--help", "print help and exit");
    part_cmd->add_option("--in", part.in_path, "input edge list")->required();
    part_cmd->add_option("--method", part.method,
                         "tree | forest | avgdeg | majority | strips | refine")
        ->required()
        ->check(CLI::IsMember({"tree", "forest", "avgdeg", "majority", "strips", "refine"}));
    part_cmd->add_option("--h", part.h, "volume cap (tree method)");
    part_cmd->add_option("--omega", part.omega, "strip count, 0 = formula default (strips)");
    part_cmd->add_option("--eps", part.eps, "seed fraction (majority)");
    part_cmd->add_option("--pos", part.pos_path, "positions file (strips)");
    part_cmd->add_option("--p", part.p, "link probability for the default omega (strips)");
    part_cmd->add_option("--a1", part.a1, "influence coefficient for the default omega (strips)");
    part_cmd->add_option("--passes", part.passes, "maximum sweeps (refine)");
    part_cmd->add_option("--partition-in", part.partition_in, "starting partition (refine)");
    part_cmd->add_option("--partition-out", part.partition_out, "write the partition here");

    std::string mod_in, mod_partition;
    double mod_gamma = 1.0;
    CLI::App* mod_cmd = app.add_subcommand("modularity", "score a partition of a graph");
    mod_cmd->fallthrough();
    mod_cmd->add_option("--in", mod_in, "input edge list")->required();
    mod_cmd->add_option("--partition", mod_partition, "partition file")->required();
    mod_cmd->add_option("--gamma", mod_gamma, "resolution multiplier on the degree tax");

    std::vector<std::string> overrides;
    CLI::App* exp_cmd = app.add_subcommand("experiment", "run a configured batch of trials");
    exp_cmd->fallthrough();
    exp_cmd->add_option("--set", overrides, "override a config key (key=value, repeatable)");

    VerifyOptions verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "distributional checks of the model guarantees");
    verify_cmd->fallthrough();
    verify_cmd
        ->add_option("--check", verify.check,
                     "martingale | components | powerlaw | degree-growth | expansion | "
                     "simple-fraction")
        ->required()
        ->check(CLI::IsMember({"martingale", "components", "powerlaw", "degree-growth",
                               "expansion", "simple-fraction"}));
    verify_cmd->add_option("--m", verify.m, "edges per vertex (pa checks)");
    verify_cmd->add_option("--c", verify.c, "tracked vertex fraction (martingale)");
    verify_cmd->add_option("--n", verify.n, "graph size");
    verify_cmd->add_option("--trials", verify.trials, "number of sampled graphs");
    verify_cmd->add_option("--d", verify.d, "degree (expansion, simple-fraction)");
    verify_cmd->add_option("--dim", verify.dim, "torus dimension (degree-growth)");
    verify_cmd->add_option("--a1", verify.a1, "influence coefficient (degree-growth)");
    verify_cmd->add_option("--a2", verify.a2, "influence offset (degree-growth)");
    verify_cmd->add_option("--p", verify.p, "link probability (degree-growth)");
    verify_cmd->add_option("--subsets", verify.subsets, "subsets per graph (expansion)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) return run_gen(gen, seed, out_path);
        if (bounds_cmd->parsed()) return run_bounds(bounds);
        if (part_cmd->parsed()) return run_partition(part, seed);
        if (mod_cmd->parsed()) return run_modularity(mod_in, mod_partition, mod_gamma);
        if (exp_cmd->parsed()) return run_experiment_cmd(config_path, overrides, out_path);
        if (verify_cmd->parsed()) return run_verify(verify, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
