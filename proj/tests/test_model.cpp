#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "latdec/errors.hpp"
#include "latdec/model.hpp"
#include "latdec/model_io.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace latdec;

TEST_CASE("lattice constructor rejects mismatched tables") {
    CHECK_THROWS_AS(Lattice(2, 2, {0, 0, 0}, std::vector<double>(4, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Lattice(2, 2, std::vector<double>(4, 0.0), std::vector<double>(3, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Lattice(0, 2, {}, {}), std::invalid_argument);
}

TEST_CASE("validate accepts the d1 fixture") {
    Model m = fixtures::d1();
    CHECK(validate(m.lattice, m.labels).empty());
}

TEST_CASE("validate reports all-paths-zero") {
    Lattice lat(2, 2, std::vector<double>(4, kLogZero), std::vector<double>(4, 0.0));
    LabelMap labels(2, {0, 1});
    auto report = validate(lat, labels);
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("all-paths-zero") == 0);

    // A single severed transition also kills every path.
    Lattice cut(2, 1, {0.0, 0.0}, {kLogZero});
    LabelMap one(1, {0});
    report = validate(cut, one);
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("all-paths-zero") == 0);
}

TEST_CASE("validate reports an empty label class") {
    Lattice lat(1, 2, {0.0, 0.0}, {});
    LabelMap labels(2, {0, 0});  // label 1 owns nothing
    auto report = validate(lat, labels);
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("empty-label-class") == 0);
}

TEST_CASE("validate reports dimension mismatches and bad scores") {
    Lattice lat(1, 2, {0.0, 0.0}, {});
    auto report = validate(lat, LabelMap(1, {0, 0, 0}));
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("dimension-mismatch") == 0);

    Lattice nan_lat(1, 1, {std::nan("")}, {});
    report = validate(nan_lat, LabelMap(1, {0}));
    CHECK(!report.empty());
    CHECK(report[0].find("invalid-score") == 0);
}

TEST_CASE("project maps latent labelings through state ownership") {
    Model m = fixtures::d1();
    CHECK(project({1, 0}, m.labels) == Labeling{0, 0});  // (a2, a1) -> (A, A)
    CHECK(project({1, 2}, m.labels) == Labeling{0, 1});  // (a2, b1) -> (A, B)
    CHECK(project({2, 2}, m.labels) == Labeling{1, 1});  // (b1, b1) -> (B, B)
}

TEST_CASE("projecting all latent labelings partitions them among labelings") {
    for (const auto& params : fixtures::suite_params(12, 101)) {
        if (params.positions > 4 || params.num_latent > 5) continue;
        Model model = fixtures::suite_model(params);
        auto paths = oracle::enumerate_paths(model.lattice);
        std::map<Labeling, long long> counts;
        for (const auto& p : paths) counts[project(p.states, model.labels)] += 1;
        long long total = 0;
        for (const auto& [y, c] : counts) {
            long long expect = 1;
            for (int label : y) {
                expect *= static_cast<long long>(model.labels.latents_of(label).size());
            }
            CHECK(c == expect);
            total += c;
        }
        long long all = 1;
        for (int i = 0; i < model.lattice.num_positions(); ++i) {
            all *= model.lattice.num_latent();
        }
        CHECK(total == all);
    }
}

TEST_CASE("linear documents load into log-domain lattices") {
    Model m = fixtures::d1();
    CHECK(m.lattice.node(0, 1) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(m.lattice.node(1, 0) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(m.lattice.edge(0, 2, 1) == 0.0);
    CHECK(m.labels.latents_of(0) == std::vector<int>{0, 1});
    CHECK(m.labels.latents_of(1) == std::vector<int>{2});
}

TEST_CASE("save/load round-trips bit-exactly") {
    Model m = fixtures::d1();
    std::string bytes = save_model(m);
    Model back = load_model(bytes);
    CHECK(back.lattice.node_scores() == m.lattice.node_scores());
    CHECK(back.lattice.edge_scores() == m.lattice.edge_scores());
    CHECK(back.labels.latent_to_label() == m.labels.latent_to_label());
    CHECK(back.label_names == m.label_names);
    CHECK(back.latent_names == m.latent_names);
    // And the serialized form is a fixed point.
    CHECK(save_model(back) == bytes);
}

TEST_CASE("round-trip preserves the zero sentinel") {
    ModelDoc doc;
    doc.label_names = {"A", "B"};
    doc.latent_names = {"u", "v"};
    doc.latent_to_label = {0, 1};
    doc.positions = 2;
    doc.node_scores = {0.25, 0.0, 1.0, 0.125};
    doc.edge_scores = {1.0, 0.0, 0.5, 1.0};
    Model m = to_model(doc);
    CHECK(is_log_zero(m.lattice.node(0, 1)));
    Model back = load_model(save_model(m));
    CHECK(is_log_zero(back.lattice.node(0, 1)));
    CHECK(is_log_zero(back.lattice.edge(0, 0, 1)));
    CHECK(back.lattice.node_scores() == m.lattice.node_scores());
}

TEST_CASE("tied edge shorthand expands to every transition") {
    std::string text = R"({"labels":["A"],
        "latent":[{"name":"h0","label":"A"},{"name":"h1","label":"A"}],
        "node_scores":[[1,1],[1,1],[1,1]],
        "edge_scores":{"tied":[[1,0.5],[0.25,1]]}})";
    Model m = load_model(text);
    for (int pos = 0; pos < 2; ++pos) {
        CHECK(m.lattice.edge(pos, 0, 1) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
        CHECK(m.lattice.edge(pos, 1, 0) == doctest::Approx(std::log(0.25)).epsilon(1e-15));
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_model_doc("not json"), ParseError);
    CHECK_THROWS_AS(parse_model_doc("[1,2]"), ParseError);
    // Wrong edge arity: needs positions-1 = 1 transition table.
    CHECK_THROWS_AS(parse_model_doc(R"({"labels":["A"],
        "latent":[{"name":"h","label":"A"}],
        "node_scores":[[1],[1]],
        "edge_scores":[]})"),
                    ParseError);
    // Row width must be |H|.
    CHECK_THROWS_AS(parse_model_doc(R"({"labels":["A"],
        "latent":[{"name":"h","label":"A"}],
        "node_scores":[[1,1]],
        "edge_scores":[]})"),
                    ParseError);
    // Unknown owner label.
    CHECK_THROWS_AS(parse_model_doc(R"({"labels":["A"],
        "latent":[{"name":"h","label":"B"}],
        "node_scores":[[1]],
        "edge_scores":[]})"),
                    ParseError);
    // "-inf" is only valid in log space.
    CHECK_THROWS_AS(parse_model_doc(R"({"labels":["A"],
        "latent":[{"name":"h","label":"A"}],
        "node_scores":[["-inf"]],
        "edge_scores":[]})"),
                    ParseError);
}

TEST_CASE("negative linear scores are a validation error") {
    CHECK_THROWS_AS(parse_model_doc(R"({"labels":["A"],
        "latent":[{"name":"h","label":"A"}],
        "node_scores":[[-1.0]],
        "edge_scores":[]})"),
                    ValidationError);
}

TEST_CASE("log-space documents accept -inf strings") {
    std::string text = R"({"labels":["A","B"],
        "latent":[{"name":"u","label":"A"},{"name":"v","label":"B"}],
        "node_scores":[[0.0,"-inf"],[0.0,0.0]],
        "edge_scores":[[[0.0,0.0],[0.0,0.0]]],
        "log_space":true})";
    Model m = load_model(text);
    CHECK(m.lattice.node(0, 0) == 0.0);
    CHECK(is_log_zero(m.lattice.node(0, 1)));
}

TEST_CASE("content digest is stable and input-sensitive") {
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
    CHECK(content_digest("").size() == 16);
}
