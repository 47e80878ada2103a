// Command-line front end: decoding runs, method comparison, random instance
// generation, the clique reduction pipeline, and micro-benchmarks.
//
// Every command prints a single JSON report on stdout (trace lines, when
// requested, are prefixed with "#trace "). Exit codes: 0 success, 2 input
// error, 3 resource cap exceeded, 4 internal consistency violation.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latdec/decode.hpp"
#include "latdec/dp.hpp"
#include "latdec/errors.hpp"
#include "latdec/gen.hpp"
#include "latdec/model_io.hpp"
#include "latdec/reduction.hpp"

namespace {

using latdec::DecodeResult;
using latdec::Method;
using latdec::Model;
using nlohmann::ordered_json;

// Probabilities are reported with 12 significant digits.
double round12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string labeling_names(const latdec::Labeling& y, const Model& model) {
    std::string out;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i) out += ' ';
        out += model.label_names[y[i]];
    }
    return out;
}

struct TimedDecode {
    DecodeResult result;
    long long wall_us = 0;
};

TimedDecode run_method(const Model& model, Method method,
                       const latdec::LdiOptions& ldi_opts) {
    using clock = std::chrono::steady_clock;
    TimedDecode out;
    auto t0 = clock::now();
    switch (method) {
        case Method::kLdi:
        case Method::kLdiBounded:
            out.result = latdec::ldi(model.lattice, model.labels, ldi_opts);
            break;
        case Method::kMvi:
            out.result = latdec::mvi(model.lattice, model.labels);
            break;
        case Method::kPmi:
            out.result = latdec::pmi(model.lattice, model.labels);
            break;
        case Method::kOracle:
            out.result = latdec::oracle_decode(model.lattice, model.labels);
            break;
    }
    out.wall_us =
        std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count();
    return out;
}

ordered_json result_fields(const DecodeResult& r, const Model& model) {
    ordered_json j;
    j["method"] = latdec::method_name(r.method);
    j["labeling"] = labeling_names(r.labeling, model);
    j["labeling_indices"] = r.labeling;
    j["probability"] = round12(r.probability);
    j["steps"] = r.steps;
    j["exact"] = r.exact;
    j["cap_hit"] = r.cap_hit;
    return j;
}

void print_trace(const DecodeResult& r, const Model& model) {
    for (const auto& t : r.trace) {
        ordered_json line;
        line["step"] = t.step;
        line["latent_log_score"] = t.latent_log_score;
        line["labeling"] = labeling_names(t.labeling, model);
        line["probability"] = round12(t.labeling_probability);
        line["prob_gap"] = round12(t.prob_gap);
        line["new"] = t.new_labeling;
        std::cout << "#trace " << line.dump() << "\n";
    }
}

struct DecodeArgs {
    std::string model_path;
    std::string method = "ldi";
    std::optional<long long> max_steps;
    double alpha = 1.0;
    bool trace = false;
};

int cmd_decode(const DecodeArgs& args) {
    auto method = latdec::method_from_name(args.method);
    if (!method) throw std::invalid_argument("unknown method: " + args.method);

    std::string bytes = latdec::read_file(args.model_path);
    Model model = latdec::load_model(bytes);

    latdec::LdiOptions opts;
    opts.alpha = args.alpha;
    opts.keep_trace = args.trace;
    if (args.max_steps) opts.max_steps = *args.max_steps;
    if (*method == Method::kLdiBounded && !opts.max_steps) opts.max_steps = 1;

    TimedDecode run = run_method(model, *method, opts);
    if (args.trace) print_trace(run.result, model);

    ordered_json j;
    j["command"] = "decode";
    ordered_json fields = result_fields(run.result, model);
    j.update(fields);
    if (run.result.method == Method::kLdi || run.result.method == Method::kLdiBounded) {
        j["prob_gap"] = round12(run.result.prob_gap);
        j["alpha"] = args.alpha;
        if (opts.max_steps) j["max_steps"] = *opts.max_steps;
    }
    j["positions"] = model.lattice.num_positions();
    j["model"] = args.model_path;
    j["model_digest"] = latdec::content_digest(bytes);
    j["wall_time_us"] = run.wall_us;
    std::cout << j.dump() << "\n";
    return 0;
}

struct CompareArgs {
    std::string model_path;
    long long bounded_steps = 1;
};

int cmd_compare(const CompareArgs& args) {
    std::string bytes = latdec::read_file(args.model_path);
    Model model = latdec::load_model(bytes);

    // Oracle is the reference when the labeling space is small enough.
    std::optional<TimedDecode> oracle;
    try {
        oracle = run_method(model, Method::kOracle, {});
    } catch (const latdec::CapExceededError&) {
        oracle.reset();
    }

    std::vector<TimedDecode> runs;
    runs.push_back(run_method(model, Method::kLdi, {}));
    latdec::LdiOptions bounded;
    bounded.max_steps = args.bounded_steps;
    runs.push_back(run_method(model, Method::kLdiBounded, bounded));
    runs.push_back(run_method(model, Method::kMvi, {}));
    runs.push_back(run_method(model, Method::kPmi, {}));
    if (oracle) runs.push_back(*oracle);

    const latdec::Labeling& reference =
        oracle ? oracle->result.labeling : runs.front().result.labeling;

    ordered_json rows = ordered_json::array();
    for (const auto& run : runs) {
        ordered_json row = result_fields(run.result, model);
        row["agrees"] = (run.result.labeling == reference);
        row["wall_time_us"] = run.wall_us;
        rows.push_back(std::move(row));
    }

    ordered_json j;
    j["command"] = "compare";
    j["reference"] = oracle ? "oracle" : "ldi";
    j["rows"] = std::move(rows);
    j["model"] = args.model_path;
    j["model_digest"] = latdec::content_digest(bytes);
    std::cout << j.dump() << "\n";
    return 0;
}

struct GenArgs {
    latdec::GenParams params;
    std::string out_path;
};

int cmd_gen(const GenArgs& args) {
    latdec::ModelDoc doc = latdec::random_model(args.params);
    std::string bytes = latdec::serialize_model_doc(doc);
    if (args.out_path.empty()) {
        std::cout << bytes << "\n";
        return 0;
    }
    latdec::write_file(args.out_path, bytes);
    ordered_json j;
    j["command"] = "gen";
    j["out"] = args.out_path;
    j["model_digest"] = latdec::content_digest(bytes);
    j["positions"] = args.params.positions;
    j["num_latent"] = args.params.num_latent;
    j["num_labels"] = args.params.num_labels;
    j["seed"] = args.params.seed;
    j["zero_fraction"] = args.params.zero_fraction;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_reduce(const std::string& graph_path, const std::string& out_path) {
    latdec::Graph g = latdec::load_graph_file(graph_path);
    latdec::ReductionBuild build = latdec::build_reduction(g);
    latdec::to_model(build.doc);  // reject anything that fails validation
    std::string bytes = latdec::serialize_model_doc(build.doc);
    if (out_path.empty()) {
        std::cout << bytes << "\n";
        return 0;
    }
    latdec::write_file(out_path, bytes);
    ordered_json j;
    j["command"] = "reduce";
    j["graph"] = graph_path;
    j["out"] = out_path;
    j["nodes"] = g.num_nodes();
    j["alpha_g"] = build.meta.alpha_g;
    j["model_digest"] = latdec::content_digest(bytes);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_clique(const std::string& graph_path, const std::string& via) {
    std::string bytes = latdec::read_file(graph_path);
    latdec::Graph g = latdec::parse_graph(bytes);
    int size = 0;
    if (via == "brute") {
        size = latdec::max_clique_bruteforce(g);
    } else if (via == "ldi") {
        size = latdec::clique_via_decoding(g, Method::kLdi);
    } else if (via == "oracle") {
        size = latdec::clique_via_decoding(g, Method::kOracle);
    } else {
        throw std::invalid_argument("clique: --via must be brute, ldi or oracle");
    }
    std::int64_t alpha_g = 0;
    for (int v = 1; v <= g.num_nodes(); ++v) alpha_g += std::int64_t{1} << g.degree(v);
    ordered_json j;
    j["command"] = "clique";
    j["via"] = via;
    j["clique_size"] = size;
    j["nodes"] = g.num_nodes();
    j["alpha_g"] = alpha_g;
    j["graph_digest"] = latdec::content_digest(bytes);
    std::cout << j.dump() << "\n";
    return 0;
}

struct BenchArgs {
    std::string model_path;
    latdec::GenParams params;
    bool use_gen = false;
    int suite = 1;
    int reps = 3;
    long long bounded_steps = 1;
};

int cmd_bench(const BenchArgs& args) {
    if (args.reps < 1) throw std::invalid_argument("bench: --reps must be >= 1");
    if (args.suite < 1) throw std::invalid_argument("bench: --suite must be >= 1");

    std::vector<Model> models;
    if (!args.model_path.empty()) {
        models.push_back(latdec::load_model_file(args.model_path));
    } else if (args.use_gen) {
        for (int i = 0; i < args.suite; ++i) {
            latdec::GenParams p = args.params;
            p.seed = args.params.seed + static_cast<std::uint64_t>(i);
            models.push_back(latdec::to_model(latdec::random_model(p)));
        }
    } else {
        throw std::invalid_argument("bench: need --model or generator parameters");
    }

    const std::vector<Method> methods = {Method::kLdi, Method::kLdiBounded, Method::kMvi,
                                         Method::kPmi};
    ordered_json rows = ordered_json::array();
    for (Method method : methods) {
        latdec::LdiOptions opts;
        if (method == Method::kLdiBounded) opts.max_steps = args.bounded_steps;
        std::vector<long long> timings;
        std::vector<long long> steps;
        std::vector<double> probs;
        for (const Model& model : models) {
            std::optional<TimedDecode> first;
            for (int rep = 0; rep < args.reps; ++rep) {
                TimedDecode run = run_method(model, method, opts);
                timings.push_back(run.wall_us);
                if (!first) first = run;
            }
            steps.push_back(first->result.steps);
            probs.push_back(round12(first->result.probability));
        }
        std::sort(timings.begin(), timings.end());
        ordered_json row;
        row["method"] = latdec::method_name(method);
        row["median_us"] = timings[timings.size() / 2];
        if (models.size() == 1) {
            row["steps"] = steps[0];
            row["probability"] = probs[0];
        } else {
            row["steps"] = steps;
            row["probability"] = probs;
        }
        rows.push_back(std::move(row));
    }

    ordered_json j;
    j["command"] = "bench";
    j["reps"] = args.reps;
    j["models"] = models.size();
    j["rows"] = std::move(rows);
    std::cout << j.dump() << "\n";
    return 0;
}

const char* kD1Json =
    R"({"labels":["A","B"],)"
    R"("latent":[{"name":"a1","label":"A"},{"name":"a2","label":"A"},{"name":"b1","label":"B"}],)"
    R"("node_scores":[[1,2,1],[3,1,2]],)"
    R"("edge_scores":[[[1,1,1],[1,1,1],[1,1,1]]],"log_space":false})";

int cmd_selftest() {
    ordered_json checks = ordered_json::array();
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        ordered_json c;
        c["name"] = name;
        c["ok"] = ok;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(std::move(c));
        all_ok = all_ok && ok;
    };

    Model d1 = latdec::load_model(kD1Json);
    auto r = latdec::ldi(d1.lattice, d1.labels);
    check("fixture-ldi", r.steps == 1 && r.exact && r.prob_gap == 0.0 &&
                             std::abs(r.probability - 0.5) < 1e-12 &&
                             r.labeling == latdec::Labeling{0, 0});
    auto rm = latdec::mvi(d1.lattice, d1.labels);
    auto rp = latdec::pmi(d1.lattice, d1.labels);
    auto ro = latdec::oracle_decode(d1.lattice, d1.labels);
    check("fixture-agreement", rm.labeling == r.labeling && rp.labeling == r.labeling &&
                                   ro.labeling == r.labeling);
    check("fixture-partition",
          std::abs(latdec::partition_function(d1.lattice) - std::log(24.0)) < 1e-12);

    latdec::Graph g4(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto build = latdec::build_reduction(g4);
    Model m4 = latdec::to_model(build.doc);
    check("reduction-alpha", build.meta.alpha_g == 18);
    check("reduction-total-mass",
          std::abs(latdec::partition_function(m4.lattice)) < 1e-9);
    check("reduction-clique", latdec::max_clique_bruteforce(g4) == 3 &&
                                  latdec::clique_via_decoding(g4, Method::kLdi) == 3 &&
                                  latdec::clique_via_decoding(g4, Method::kOracle) == 3);

    int sweep_fail = 0;
    for (int i = 0; i < 200; ++i) {
        latdec::GenParams p;
        p.positions = 1 + i % 4;
        p.num_latent = 1 + (i / 2) % 4;
        p.num_labels = 1 + i % std::min(3, p.num_latent);
        p.zero_fraction = (i % 2 == 0) ? 0.0 : 0.3;
        p.seed = 9000 + static_cast<std::uint64_t>(i);
        Model model = latdec::to_model(latdec::random_model(p));
        auto exact = latdec::ldi(model.lattice, model.labels);
        auto oracle = latdec::oracle_decode(model.lattice, model.labels);
        if (!exact.exact || exact.labeling != oracle.labeling ||
            std::abs(exact.probability - oracle.probability) > 1e-9) {
            ++sweep_fail;
        }
    }
    check("random-sweep", sweep_fail == 0,
          sweep_fail ? std::to_string(sweep_fail) + " of 200 models failed" : "200 models");

    ordered_json j;
    j["command"] = "selftest";
    j["ok"] = all_ok;
    j["checks"] = std::move(checks);
    std::cout << j.dump() << "\n";
    return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and approximate decoders for latent-variable linear-chain "
                 "conditional models, with a maximum-clique reduction harness"};
    app.require_subcommand(1);
    std::function<int()> task;

    DecodeArgs decode_args;
    auto* decode = app.add_subcommand("decode", "Decode a model file with one method");
    decode->add_option("--model", decode_args.model_path, "Model JSON file")->required();
    decode->add_option("--method", decode_args.method,
                       "ldi | ldi-bounded | mvi | pmi | oracle");
    decode->add_option("--max-steps", decode_args.max_steps, "Search step bound (>= 1)");
    decode->add_option("--alpha", decode_args.alpha, "Stopping factor in (0, 1]");
    decode->add_flag("--trace", decode_args.trace, "Print #trace lines per search step");
    decode->callback([&] { task = [&] { return cmd_decode(decode_args); }; });

    CompareArgs compare_args;
    auto* compare = app.add_subcommand("compare", "Run every method on one model");
    compare->add_option("--model", compare_args.model_path, "Model JSON file")->required();
    compare->add_option("--max-steps", compare_args.bounded_steps,
                        "Step bound for the ldi-bounded row");
    compare->callback([&] { task = [&] { return cmd_compare(compare_args); }; });

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a seeded random model");
    gen->add_option("--positions", gen_args.params.positions, "Sequence length")->required();
    gen->add_option("--num-latent", gen_args.params.num_latent, "Latent states")->required();
    gen->add_option("--num-labels", gen_args.params.num_labels, "Labels")->required();
    gen->add_option("--seed", gen_args.params.seed, "64-bit seed")->required();
    gen->add_option("--zero-fraction", gen_args.params.zero_fraction,
                    "Probability of an exact-zero score, in [0, 1)");
    gen->add_option("--out", gen_args.out_path, "Output file (stdout if omitted)");
    gen->callback([&] { task = [&] { return cmd_gen(gen_args); }; });

    std::string reduce_graph, reduce_out;
    auto* reduce = app.add_subcommand("reduce", "Compile a graph into a decoding instance");
    reduce->add_option("--graph", reduce_graph, "Graph JSON file")->required();
    reduce->add_option("--out", reduce_out, "Output file (stdout if omitted)");
    reduce->callback([&] { task = [&] { return cmd_reduce(reduce_graph, reduce_out); }; });

    std::string clique_graph, clique_via = "ldi";
    auto* clique = app.add_subcommand("clique", "Maximum clique size of a graph");
    clique->add_option("--graph", clique_graph, "Graph JSON file")->required();
    clique->add_option("--via", clique_via, "brute | ldi | oracle");
    clique->callback([&] { task = [&] { return cmd_clique(clique_graph, clique_via); }; });

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time the decoders");
    bench->add_option("--model", bench_args.model_path, "Model JSON file");
    auto* bp = bench->add_option("--positions", bench_args.params.positions, "Sequence length");
    bench->add_option("--num-latent", bench_args.params.num_latent, "Latent states")
        ->needs(bp);
    bench->add_option("--num-labels", bench_args.params.num_labels, "Labels")->needs(bp);
    bench->add_option("--seed", bench_args.params.seed, "64-bit seed");
    bench->add_option("--zero-fraction", bench_args.params.zero_fraction, "Zero fraction");
    bench->add_option("--suite", bench_args.suite, "Number of generated models");
    bench->add_option("--reps", bench_args.reps, "Repetitions per model");
    bench->add_option("--max-steps", bench_args.bounded_steps,
                      "Step bound for the ldi-bounded row");
    bench->callback([&] {
        bench_args.use_gen = bench->count("--positions") > 0;
        task = [&] { return cmd_bench(bench_args); };
    });

    auto* selftest = app.add_subcommand("selftest", "Run the built-in fixture checks");
    selftest->callback([&] { task = [] { return cmd_selftest(); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return task();
    } catch (const latdec::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const latdec::ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
