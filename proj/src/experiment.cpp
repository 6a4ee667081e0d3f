#include "modnet/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "modnet/bounds.hpp"
#include "modnet/generators.hpp"
#include "modnet/modularity.hpp"
#include "modnet/partitioners.hpp"
#include "modnet/spa.hpp"
#include "modnet/spectral.hpp"

namespace modnet {

namespace {

// Decorrelates the partition-stage RNG stream from the generator's, which
// consumed the raw trial seed.
constexpr std::uint64_t kPartitionSeedSalt = 0x9E3779B97F4A7C15ULL;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    std::uint64_t v;
    try {
        v = std::stoull(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: " + key + " expects an integer, got '" + value + "'");
    }
    if (pos != value.size())
        throw std::invalid_argument("config: " + key + " expects an integer, got '" + value + "'");
    return v;
}

std::uint32_t to_u32(const std::string& key, const std::string& value) {
    std::uint64_t v = to_u64(key, value);
    if (v > 0xFFFFFFFFULL)
        throw std::invalid_argument("config: " + key + " out of range");
    return static_cast<std::uint32_t>(v);
}

double to_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: " + key + " expects a number, got '" + value + "'");
    }
    if (pos != value.size())
        throw std::invalid_argument("config: " + key + " expects a number, got '" + value + "'");
    return v;
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    throw std::invalid_argument("config: " + key + " expects a boolean, got '" + value + "'");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "kind" || key == "model") cfg.model = value;
    else if (key == "n") cfg.n = to_u32(key, value);
    else if (key == "d") cfg.d = to_u32(key, value);
    else if (key == "simple" || key == "require_simple") cfg.require_simple = to_bool(key, value);
    else if (key == "m") cfg.m = to_u32(key, value);
    else if (key == "dim") cfg.dim = to_u32(key, value);
    else if (key == "a1") cfg.a1 = to_double(key, value);
    else if (key == "a2") cfg.a2 = to_double(key, value);
    else if (key == "p") cfg.p = to_double(key, value);
    else if (key == "norm") cfg.norm = value;
    else if (key == "method") cfg.method = value;
    else if (key == "h") cfg.h = to_double(key, value);
    else if (key == "omega") cfg.omega = to_u32(key, value);
    else if (key == "eps") cfg.eps = to_double(key, value);
    else if (key == "refine_passes") cfg.refine_passes = to_u32(key, value);
    else if (key == "gamma") cfg.gamma = to_double(key, value);
    else if (key == "trials") cfg.trials = to_u32(key, value);
    else if (key == "base_seed" || key == "seed") cfg.base_seed = to_u64(key, value);
    else if (key == "spectral") cfg.spectral = to_bool(key, value);
    else if (key == "csv") cfg.csv_out = value;
    else if (key == "json") cfg.json_out = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "model" && section != "partition" && section != "run")
                throw std::invalid_argument("config: unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        apply_override(cfg, key, value);
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    return parse_config(in);
}

namespace {

Norm parse_norm(const std::string& s) {
    if (s == "linf" || s == "Linf" || s == "LINF") return Norm::Linf;
    if (s == "l2" || s == "L2") return Norm::L2;
    throw std::invalid_argument("config: norm must be linf or l2, got '" + s + "'");
}

struct Instance {
    Graph graph;
    SpaGraph spa;  // populated only for the spa model
    bool has_spa = false;
};

Instance generate(const ExperimentConfig& cfg, std::uint64_t seed) {
    Instance inst;
    if (cfg.model == "regular") {
        inst.graph = gen_pairing({cfg.n, cfg.d, cfg.require_simple, 100000}, seed);
    } else if (cfg.model == "pa") {
        inst.graph = gen_pa({cfg.n, cfg.m}, seed);
    } else if (cfg.model == "spa") {
        inst.spa = gen_spa({cfg.n, cfg.dim, cfg.a1, cfg.a2, cfg.p, parse_norm(cfg.norm)}, seed);
        inst.graph = undirect(inst.spa);
        inst.has_spa = true;
    } else {
        throw std::invalid_argument("config: unknown model '" + cfg.model + "'");
    }
    return inst;
}

Partition make_partition(const ExperimentConfig& cfg, const Instance& inst,
                         std::uint64_t part_seed) {
    const Graph& g = inst.graph;
    if (cfg.method == "tree") {
        if (!(cfg.h > 0.0))
            throw std::invalid_argument("config: method tree requires h > 0");
        return decompose_connected(g, cfg.h);
    }
    if (cfg.method == "forest") return partition_forest(g);
    if (cfg.method == "avgdeg") return partition_avg_degree(g);
    if (cfg.method == "majority") return majority_color_pa(g, cfg.eps, part_seed);
    if (cfg.method == "strips") {
        if (!inst.has_spa)
            throw std::invalid_argument("config: method strips requires the spa model");
        return strip_partition(inst.spa, cfg.omega);
    }
    if (cfg.method == "refine") {
        // Standalone greedy start: every vertex alone, so the sweeps below can
        // agglomerate (moves only target parts that already hold a neighbor).
        std::vector<std::uint32_t> singletons(g.vertex_count());
        std::iota(singletons.begin(), singletons.end(), 0);
        return Partition::from_labels(singletons);
    }
    throw std::invalid_argument("config: unknown method '" + cfg.method + "'");
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");

    ExperimentResult result;
    result.config = cfg;
    result.trials.reserve(cfg.trials);

    for (std::uint32_t i = 0; i < cfg.trials; ++i) {
        const std::uint64_t seed = cfg.base_seed + i;
        Instance inst = generate(cfg, seed);
        const Graph& g = inst.graph;

        Partition part = make_partition(cfg, inst, seed ^ kPartitionSeedSalt);

        TrialRecord rec;
        rec.index = i;
        rec.seed = seed;
        rec.n = g.vertex_count();
        rec.edges = g.edge_count();

        const double q_before = modularity(g, part, 1.0).q;
        const std::uint32_t passes =
            cfg.method == "refine" ? std::max(cfg.refine_passes, 50u) : cfg.refine_passes;
        if (passes > 0) {
            RefineResult ref = local_search_refine(g, part, passes, seed ^ (kPartitionSeedSalt << 1));
            part = ref.partition;
            rec.bounds["refine_start_q"] = q_before;
            rec.asserted["refine_monotone"] = ref.q >= q_before - 1e-12;
        }

        ModularityBreakdown mb = modularity(g, part, cfg.gamma);
        rec.parts = part.part_count();
        rec.q = mb.q;
        rec.edge_contribution = mb.edge_contribution;
        rec.degree_tax = mb.degree_tax;
        rec.asserted["q_le_one"] = mb.q <= 1.0 + 1e-12;

        // Instance statistics feeding the bound formulas.
        const std::vector<std::uint32_t> deg = g.degrees();
        std::uint32_t delta = 0;
        std::uint32_t non_isolated = 0;
        for (std::uint32_t dv : deg) {
            delta = std::max(delta, dv);
            if (dv > 0) ++non_isolated;
        }
        const double dbar = 2.0 * static_cast<double>(g.edge_count()) / rec.n;

        if (cfg.model == "regular") {
            rec.bounds["u3_upper"] = u3(cfg.d);
            rec.asserted["q_le_u3"] = mb.q <= rec.bounds["u3_upper"] + 1e-9;
            rec.bounds["friedman_upper"] = friedman_upper(cfg.d);
            if (cfg.spectral && g.is_simple() && is_connected(g)) {
                SpectralSummary s = second_eigenvalue(g, 1e-7, 200000, seed);
                rec.bounds["lambda"] = s.lambda;
                rec.bounds["spectral_upper"] = spectral_upper(s.lambda, cfg.d);
                rec.asserted["q_le_lambda_over_d"] = mb.q <= rec.bounds["spectral_upper"] + 1e-9;
            }
        } else if (cfg.model == "pa") {
            rec.bounds["l1_lower"] = pa_lower_l1(cfg.m);
            rec.bounds["l2_lower"] = pa_lower_l2(cfg.m);
            if (cfg.m >= 2) {
                rec.bounds["pa_upper"] = pa_upper(cfg.m);
                rec.asserted["q_le_pa_upper"] = mb.q <= rec.bounds["pa_upper"] + 1e-9;
            }
        } else if (cfg.model == "spa") {
            rec.bounds["spa_rate"] = spa_rate(rec.n, cfg.dim, cfg.p * cfg.a1);
        }

        if (cfg.method == "avgdeg") {
            rec.bounds["avgdeg_lower"] = avg_degree_lower(rec.n, delta, dbar);
            rec.asserted["q_ge_avgdeg_lower"] = mb.q >= rec.bounds["avgdeg_lower"] - 1e-9;
        } else if (cfg.method == "forest") {
            rec.bounds["forest_lower"] = forest_lower(non_isolated, std::max(delta, 1u));
            rec.asserted["q_ge_forest_lower"] = mb.q >= rec.bounds["forest_lower"] - 1e-9;
        } else if (cfg.method == "tree") {
            std::vector<double> vol(part.part_count(), 0.0);
            for (std::uint32_t v = 0; v < rec.n; ++v) vol[part.part_of(v)] += deg[v];
            bool le_h = true, ge_floor = true;
            for (double s : vol) {
                if (s > cfg.h + 1e-9) le_h = false;
                if (part.part_count() > 1 && s < cfg.h / delta - 1.0 - 1e-9) ge_floor = false;
            }
            rec.asserted["volume_le_h"] = le_h;
            rec.asserted["volume_ge_floor"] = ge_floor;
        }

        rec.all_pass = true;
        for (const auto& [name, ok] : rec.asserted) {
            (void)name;
            if (!ok) rec.all_pass = false;
        }
        result.all_pass = result.all_pass && rec.all_pass;
        result.trials.push_back(std::move(rec));
    }

    double sum = 0.0, sum_ec = 0.0, sum_tax = 0.0;
    for (const TrialRecord& r : result.trials) {
        sum += r.q;
        sum_ec += r.edge_contribution;
        sum_tax += r.degree_tax;
    }
    result.mean_q = sum / cfg.trials;
    result.mean_edge_contribution = sum_ec / cfg.trials;
    result.mean_degree_tax = sum_tax / cfg.trials;
    if (cfg.trials > 1) {
        double ss = 0.0;
        for (const TrialRecord& r : result.trials)
            ss += (r.q - result.mean_q) * (r.q - result.mean_q);
        result.stddev_q = std::sqrt(ss / (cfg.trials - 1));
    }

    if (!cfg.csv_out.empty()) {
        std::ofstream out(cfg.csv_out);
        if (!out) throw std::runtime_error("cannot open for writing: " + cfg.csv_out);
        write_experiment_csv(out, result);
    }
    if (!cfg.json_out.empty()) {
        std::ofstream out(cfg.json_out);
        if (!out) throw std::runtime_error("cannot open for writing: " + cfg.json_out);
        out << experiment_json(result) << '\n';
    }
    return result;
}

void write_experiment_csv(std::ostream& out, const ExperimentResult& result) {
    // Column set is identical across trials of one experiment, so take the
    // bound/assert names from the first record.
    std::vector<std::string> bound_names, assert_names;
    if (!result.trials.empty()) {
        for (const auto& [name, value] : result.trials.front().bounds) {
            (void)value;
            bound_names.push_back(name);
        }
        for (const auto& [name, ok] : result.trials.front().asserted) {
            (void)ok;
            assert_names.push_back(name);
        }
    }

    out << "trial,seed,n,edges,parts,q,edge_contribution,degree_tax";
    for (const std::string& b : bound_names) out << ',' << b;
    for (const std::string& a : assert_names) out << ',' << a;
    out << ",pass\n";

    for (const TrialRecord& r : result.trials) {
        out << r.index << ',' << r.seed << ',' << r.n << ',' << r.edges << ',' << r.parts << ','
            << fmt(r.q) << ',' << fmt(r.edge_contribution) << ',' << fmt(r.degree_tax);
        for (const std::string& b : bound_names) out << ',' << fmt(r.bounds.at(b));
        for (const std::string& a : assert_names) out << ',' << (r.asserted.at(a) ? 1 : 0);
        out << ',' << (r.all_pass ? 1 : 0) << '\n';
    }
}

std::string experiment_json(const ExperimentResult& result) {
    using nlohmann::json;
    const ExperimentConfig& cfg = result.config;

    json jcfg{{"model", cfg.model},
              {"n", cfg.n},
              {"d", cfg.d},
              {"require_simple", cfg.require_simple},
              {"m", cfg.m},
              {"dim", cfg.dim},
              {"a1", cfg.a1},
              {"a2", cfg.a2},
              {"p", cfg.p},
              {"norm", cfg.norm},
              {"method", cfg.method},
              {"h", cfg.h},
              {"omega", cfg.omega},
              {"eps", cfg.eps},
              {"refine_passes", cfg.refine_passes},
              {"gamma", cfg.gamma},
              {"trials", cfg.trials},
              {"base_seed", cfg.base_seed},
              {"spectral", cfg.spectral}};

    json jtrials = json::array();
    for (const TrialRecord& r : result.trials) {
        json jt{{"trial", r.index},
                {"seed", r.seed},
                {"n", r.n},
                {"edges", r.edges},
                {"parts", r.parts},
                {"q", r.q},
                {"edge_contribution", r.edge_contribution},
                {"degree_tax", r.degree_tax},
                {"pass", r.all_pass}};
        jt["bounds"] = json(r.bounds);
        jt["asserted"] = json(r.asserted);
        jtrials.push_back(std::move(jt));
    }

    json root{{"schema_version", 1},
              {"config", jcfg},
              {"trials", jtrials},
              {"aggregate",
               {{"mean_q", result.mean_q},
                {"stddev_q", result.stddev_q},
                {"mean_edge_contribution", result.mean_edge_contribution},
                {"mean_degree_tax", result.mean_degree_tax},
                {"all_pass", result.all_pass}}}};
    return root.dump(2);
}

}  // namespace modnet
