#ifndef LATDEC_TESTS_FIXTURES_HPP
#define LATDEC_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "latdec/gen.hpp"
#include "latdec/model.hpp"
#include "latdec/model_io.hpp"
#include "latdec/reduction.hpp"

namespace fixtures {

// Canonical two-position fixture used throughout the tests:
//   H = {a1, a2, b1}, Y = {A, B}, H(A) = {a1, a2}, H(B) = {b1};
//   linear node scores (1, 2, 1) then (3, 1, 2); all edge scores 1.
// Path masses enumerate to Z = 24 with P(A,A) = 12/24.
inline latdec::Model d1() {
    latdec::ModelDoc doc;
    doc.label_names = {"A", "B"};
    doc.latent_names = {"a1", "a2", "b1"};
    doc.latent_to_label = {0, 0, 1};
    doc.positions = 2;
    doc.node_scores = {1, 2, 1, 3, 1, 2};
    doc.edge_scores = std::vector<double>(9, 1.0);
    return latdec::to_model(doc);
}

// One position, H(A) = {a1}, H(B) = {b1, b2}, scores (0.4, 0.3, 0.3).
// The best single path projects to A but B holds more total mass, so mvi
// picks A while the exact decoders pick B.
inline latdec::Model adversarial() {
    latdec::ModelDoc doc;
    doc.label_names = {"A", "B"};
    doc.latent_names = {"a1", "b1", "b2"};
    doc.latent_to_label = {0, 1, 1};
    doc.positions = 1;
    doc.node_scores = {0.4, 0.3, 0.3};
    return latdec::to_model(doc);
}

// One position, four labels; the two best latent states share a label whose
// total mass still loses the first stopping test, so the stream emits a
// duplicate labeling before terminating.
inline latdec::Model duplicate_heavy() {
    latdec::ModelDoc doc;
    doc.label_names = {"W", "X", "Y", "Z"};
    doc.latent_names = {"w1", "w2", "x", "y", "z"};
    doc.latent_to_label = {0, 0, 1, 2, 3};
    doc.positions = 1;
    doc.node_scores = {20, 19, 18, 13, 10};
    return latdec::to_model(doc);
}

// The four-node example graph: edges {(1,2),(2,3),(2,4),(3,4)}, maximum
// clique {2,3,4}, sum of 2^degree = 18.
inline latdec::Graph four_node_graph() {
    return latdec::Graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Deterministic mixed-size model suite: m <= 5, |H| <= 5, |Y| <= 3,
// zero fraction alternating between 0 and 0.3.
inline std::vector<latdec::GenParams> suite_params(int count, std::uint64_t seed0) {
    std::mt19937_64 rng(seed0);
    std::vector<latdec::GenParams> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        latdec::GenParams p;
        p.positions = 1 + static_cast<int>(rng() % 5);
        p.num_latent = 1 + static_cast<int>(rng() % 5);
        p.num_labels = 1 + static_cast<int>(rng() % std::min<std::uint64_t>(3, p.num_latent));
        p.zero_fraction = (i % 2 == 0) ? 0.0 : 0.3;
        p.seed = seed0 + 1000003ULL * static_cast<std::uint64_t>(i);
        out.push_back(p);
    }
    return out;
}

inline latdec::Model suite_model(const latdec::GenParams& p) {
    return latdec::to_model(latdec::random_model(p));
}

// CRF-shaped suite: one latent state per label.
inline std::vector<latdec::GenParams> crf_suite_params(int count, std::uint64_t seed0) {
    auto out = suite_params(count, seed0);
    for (auto& p : out) p.num_labels = p.num_latent;
    return out;
}

// Deterministic random graphs with n in [1, max_nodes].
inline std::vector<latdec::Graph> random_graphs(int count, int max_nodes,
                                                std::uint64_t seed0) {
    std::mt19937_64 rng(seed0);
    std::vector<latdec::Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int n = 1 + static_cast<int>(rng() % max_nodes);
        // Edge densities from sparse to near-complete.
        double density = 0.15 + 0.7 * (static_cast<double>(rng() % 1000) / 1000.0);
        std::vector<std::pair<int, int>> edges;
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                if (static_cast<double>(rng() % 1000) / 1000.0 < density) {
                    edges.emplace_back(a, b);
                }
            }
        }
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

// All labeled graphs on n nodes (edge subsets of the complete graph).
inline std::vector<latdec::Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
    }
    std::vector<latdec::Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (mask & (1u << s)) edges.push_back(slots[s]);
        }
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

}  // namespace fixtures

#endif  // LATDEC_TESTS_FIXTURES_HPP
