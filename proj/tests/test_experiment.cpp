#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "modnet/bounds.hpp"
#include "modnet/experiment.hpp"

using namespace modnet;

namespace {

std::filesystem::path scratch(const char* stem) {
    return std::filesystem::temp_directory_path() /
           (std::string("modnet_exp_") + stem + "_" + std::to_string(::getpid()));
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(bool(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("config parsing covers every section and strips comments") {
    std::stringstream in(
        "# experiment sweep\n"
        "[model]\n"
        "kind = spa          # alias for model\n"
        "n = 5000\n"
        "dim = 3\n"
        "a1 = 0.5\n"
        "a2 = 2.0\n"
        "p = 0.9\n"
        "norm = l2\n"
        "\n"
        "[partition]\n"
        "method = strips     ; strip count from the model unless set\n"
        "omega = 4\n"
        "gamma = 1.5\n"
        "\n"
        "[run]\n"
        "trials = 7\n"
        "base_seed = 99\n"
        "csv = out.csv\n"
        "json = out.json\n");
    ExperimentConfig cfg = parse_config(in);
    CHECK(cfg.model == "spa");
    CHECK(cfg.n == 5000);
    CHECK(cfg.dim == 3);
    CHECK(cfg.a1 == 0.5);
    CHECK(cfg.a2 == 2.0);
    CHECK(cfg.p == 0.9);
    CHECK(cfg.norm == "l2");
    CHECK(cfg.method == "strips");
    CHECK(cfg.omega == 4);
    CHECK(cfg.gamma == 1.5);
    CHECK(cfg.trials == 7);
    CHECK(cfg.base_seed == 99);
    CHECK(cfg.csv_out == "out.csv");
    CHECK(cfg.json_out == "out.json");
    // Untouched fields keep their defaults.
    CHECK(cfg.d == 3);
    CHECK(cfg.m == 2);
    CHECK(cfg.eps == 0.05);
    CHECK_FALSE(cfg.require_simple);
}

TEST_CASE("config parsing rejects typos loudly") {
    auto reject = [](const char* text) {
        std::stringstream in(text);
        CHECK_THROWS_AS(parse_config(in), std::invalid_argument);
    };
    reject("[model]\nnn = 5\n");             // unknown key
    reject("[mdoel]\nn = 5\n");              // unknown section
    reject("[model\nn = 5\n");               // unterminated header
    reject("[model]\nn five\n");             // no equals sign
    reject("[model]\nn =\n");                // empty value
    reject("[model]\nn = 12.5\n");           // integer field
    reject("[model]\nn = 4294967296\n");     // u32 overflow
    reject("[model]\na1 = fast\n");          // numeric field
    reject("[run]\nspectral = maybe\n");     // boolean field
    CHECK_THROWS_AS(parse_config_file("/nonexistent/modnet.cfg"), std::runtime_error);
}

TEST_CASE("override aliases") {
    ExperimentConfig cfg;
    apply_override(cfg, "model", "pa");
    CHECK(cfg.model == "pa");
    apply_override(cfg, "kind", "regular");
    CHECK(cfg.model == "regular");
    apply_override(cfg, "simple", "yes");
    CHECK(cfg.require_simple);
    apply_override(cfg, "require_simple", "0");
    CHECK_FALSE(cfg.require_simple);
    apply_override(cfg, "seed", "123");
    CHECK(cfg.base_seed == 123);
    apply_override(cfg, "base_seed", "456");
    CHECK(cfg.base_seed == 456);
    apply_override(cfg, "csv", "a.csv");
    CHECK(cfg.csv_out == "a.csv");
    CHECK_THROWS_AS(apply_override(cfg, "wat", "1"), std::invalid_argument);
}

TEST_CASE("regular model with the average-degree partition") {
    ExperimentConfig cfg;
    cfg.model = "regular";
    cfg.n = 200;
    cfg.d = 3;
    cfg.method = "avgdeg";
    cfg.trials = 2;
    cfg.base_seed = 10;

    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.trials.size() == 2);
    CHECK(res.all_pass);
    for (const TrialRecord& t : res.trials) {
        CHECK(t.seed == cfg.base_seed + t.index);
        CHECK(t.n == 200);
        CHECK(t.edges == 300);  // nd/2 exactly
        CHECK(t.q == doctest::Approx(t.edge_contribution - t.degree_tax).epsilon(1e-12));
        CHECK(t.bounds.count("avgdeg_lower") == 1);
        CHECK(t.bounds.count("u3_upper") == 1);
        CHECK(t.bounds.count("friedman_upper") == 1);
        CHECK(t.bounds.at("u3_upper") == doctest::Approx(u3(3)).epsilon(1e-12));
        CHECK(t.q >= t.bounds.at("avgdeg_lower") - 1e-9);   // the method's theorem
        CHECK(t.q <= t.bounds.at("u3_upper") + 1e-9);
        CHECK(t.asserted.at("q_ge_avgdeg_lower"));
        CHECK(t.asserted.at("q_le_u3"));
        CHECK(t.asserted.at("q_le_one"));
        CHECK(t.all_pass);
        CHECK(t.parts > 1);
        CHECK(t.q > 0.4);
        CHECK(t.q < 0.7);
    }
    CHECK(res.mean_q ==
          doctest::Approx((res.trials[0].q + res.trials[1].q) / 2.0).epsilon(1e-12));
    CHECK(res.stddev_q >= 0.0);

    std::ostringstream csv;
    write_experiment_csv(csv, res);
    std::string text = csv.str();
    CHECK(text.rfind("trial,seed,n,edges,parts,q,edge_contribution,degree_tax,"
                     "avgdeg_lower,friedman_upper,u3_upper,"
                     "q_ge_avgdeg_lower,q_le_one,q_le_u3,pass\n",
                     0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);  // header + 2 trials
    CHECK(text.find("\n0,10,200,300,") != std::string::npos);
    CHECK(text.find("\n1,11,200,300,") != std::string::npos);
}

TEST_CASE("attachment model with the majority coloring") {
    ExperimentConfig cfg;
    cfg.model = "pa";
    cfg.n = 2000;
    cfg.m = 8;
    cfg.method = "majority";
    cfg.trials = 2;
    cfg.base_seed = 5;

    ExperimentResult res = run_experiment(cfg);
    CHECK(res.all_pass);
    for (const TrialRecord& t : res.trials) {
        CHECK(t.edges == 16000);  // mn exactly
        CHECK(t.parts <= 2);
        CHECK(t.bounds.at("l1_lower") == doctest::Approx(0.125).epsilon(1e-12));
        CHECK(t.bounds.at("l2_lower") ==
              doctest::Approx(pa_lower_l2(8)).epsilon(1e-12));
        CHECK(t.bounds.at("pa_upper") == doctest::Approx(0.9375).epsilon(1e-12));
        CHECK(t.asserted.at("q_le_pa_upper"));
        CHECK(t.q > 0.05);
        CHECK(t.q < 0.25);
    }
    CHECK(res.mean_degree_tax > 0.45);
    CHECK(res.mean_degree_tax < 0.55);
}

TEST_CASE("spatial model with strips") {
    ExperimentConfig cfg;
    cfg.model = "spa";
    cfg.n = 500;
    cfg.method = "strips";
    cfg.omega = 3;
    cfg.trials = 2;
    cfg.base_seed = 3;

    ExperimentResult res = run_experiment(cfg);
    CHECK(res.all_pass);
    for (const TrialRecord& t : res.trials) {
        CHECK(t.parts == 3);
        CHECK(t.edges > 0);
        CHECK(t.bounds.at("spa_rate") ==
              doctest::Approx(spa_rate(500, 2, 0.7)).epsilon(1e-12));
        CHECK(t.q > 0.0);
    }
    // Different seeds draw different graphs.
    CHECK(res.trials[0].edges != res.trials[1].edges);
}

TEST_CASE("standalone refinement agglomerates from singletons") {
    ExperimentConfig cfg;
    cfg.model = "regular";
    cfg.n = 60;
    cfg.d = 3;
    cfg.method = "refine";
    cfg.trials = 1;
    cfg.base_seed = 4;

    ExperimentResult res = run_experiment(cfg);
    const TrialRecord& t = res.trials[0];
    CHECK(t.asserted.at("refine_monotone"));
    CHECK(t.bounds.count("refine_start_q") == 1);
    CHECK(t.q >= t.bounds.at("refine_start_q") - 1e-12);
    CHECK(t.q > 0.2);       // greedy moves find real structure
    CHECK(t.parts > 1);
    CHECK(t.parts < 60);    // and actually merged singletons
    CHECK(res.all_pass);
}

TEST_CASE("gamma rescales only the degree tax") {
    ExperimentConfig cfg;
    cfg.model = "regular";
    cfg.n = 40;
    cfg.d = 4;
    cfg.method = "avgdeg";
    cfg.trials = 1;
    cfg.base_seed = 8;

    ExperimentResult plain = run_experiment(cfg);
    cfg.gamma = 2.0;
    ExperimentResult scaled = run_experiment(cfg);
    const TrialRecord& a = plain.trials[0];
    const TrialRecord& b = scaled.trials[0];
    CHECK(a.edge_contribution == b.edge_contribution);
    CHECK(a.degree_tax == b.degree_tax);  // reported unscaled
    CHECK(a.q == doctest::Approx(a.edge_contribution - a.degree_tax).epsilon(1e-12));
    CHECK(b.q == doctest::Approx(b.edge_contribution - 2.0 * b.degree_tax).epsilon(1e-12));
}

TEST_CASE("file outputs are byte-identical across reruns") {
    auto csv1 = scratch("run1.csv"), json1 = scratch("run1.json");
    auto csv2 = scratch("run2.csv"), json2 = scratch("run2.json");

    ExperimentConfig cfg;
    cfg.model = "pa";
    cfg.n = 300;
    cfg.m = 2;
    cfg.method = "avgdeg";
    cfg.trials = 3;
    cfg.base_seed = 21;
    cfg.csv_out = csv1.string();
    cfg.json_out = json1.string();
    ExperimentResult r1 = run_experiment(cfg);
    cfg.csv_out = csv2.string();
    cfg.json_out = json2.string();
    ExperimentResult r2 = run_experiment(cfg);

    CHECK(r1.mean_q == r2.mean_q);
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(slurp(json1) == slurp(json2));

    // The JSON payload parses and carries the documented schema.
    nlohmann::json doc = nlohmann::json::parse(slurp(json1));
    CHECK(doc.at("schema_version").get<int>() == 1);
    CHECK(doc.at("config").at("model").get<std::string>() == "pa");
    CHECK(doc.at("config").at("base_seed").get<std::uint64_t>() == 21);
    REQUIRE(doc.at("trials").size() == 3);
    CHECK(doc.at("trials")[0].at("seed").get<std::uint64_t>() == 21);
    CHECK(doc.at("trials")[2].at("seed").get<std::uint64_t>() == 23);
    CHECK(doc.at("trials")[0].at("q").get<double>() == r1.trials[0].q);
    CHECK(doc.at("aggregate").at("all_pass").get<bool>());
    CHECK(doc.at("aggregate").at("mean_q").get<double>() == r1.mean_q);

    for (const auto& p : {csv1, json1, csv2, json2}) std::filesystem::remove(p);
}

TEST_CASE("runner validation") {
    ExperimentConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

    cfg.trials = 1;
    cfg.model = "erdos";
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

    cfg.model = "regular";
    cfg.n = 20;
    cfg.method = "tree";
    cfg.h = 0.0;  // tree needs a positive volume cap
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

    cfg.method = "strips";  // strips without the spatial model
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

    cfg.method = "louvain";
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

    cfg.method = "avgdeg";
    cfg.model = "spa";
    cfg.norm = "l7";  // unknown norm surfaces at generation time
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

}  // TEST_SUITE("experiment")
