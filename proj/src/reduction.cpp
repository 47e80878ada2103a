#include "latdec/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "latdec/errors.hpp"

namespace latdec {

Graph::Graph(int num_nodes, std::vector<std::pair<int, int>> edges)
    : n_(num_nodes), edges_(std::move(edges)) {
    if (n_ < 1) throw ValidationError("graph: needs at least one node");
    for (auto& [a, b] : edges_) {
        if (a == b) throw ValidationError("graph: self-loop on node " + std::to_string(a));
        if (a < 1 || a > n_ || b < 1 || b > n_) {
            throw ValidationError("graph: edge endpoint outside 1.." + std::to_string(n_));
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw ValidationError("graph: duplicate edge");
    }
    adj_.assign(static_cast<std::size_t>(n_) * n_, false);
    degree_.assign(n_, 0);
    for (const auto& [a, b] : edges_) {
        adj_[index(a, b)] = adj_[index(b, a)] = true;
        ++degree_[a - 1];
        ++degree_[b - 1];
    }
}

Graph parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_number_integer()) {
        throw ParseError("graph: document must be {\"nodes\": n, \"edges\": [[a,b],...]}");
    }
    int n = j["nodes"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("graph: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer()) {
                throw ParseError("graph: each edge must be a pair of node indices");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    return Graph(n, std::move(edges));
}

Graph load_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

std::string serialize_graph(const Graph& g) {
    nlohmann::ordered_json j;
    j["nodes"] = g.num_nodes();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j.dump();
}

ReductionBuild build_reduction(const Graph& g) {
    const int n = g.num_nodes();
    const int num_latent = 2 * n;
    if (n > 62) throw CapExceededError("reduction: 2^degree overflows past 62 nodes");

    std::int64_t alpha_g = 0;
    for (int v = 1; v <= n; ++v) alpha_g += std::int64_t{1} << g.degree(v);

    ReductionBuild out;
    out.meta.alpha_g = alpha_g;
    out.meta.layer_of_latent.resize(num_latent);

    ModelDoc& doc = out.doc;
    doc.positions = n;
    doc.log_space = false;
    doc.label_names = {"E", "N"};
    for (int v = 1; v <= n; ++v) {
        doc.latent_names.push_back("E" + std::to_string(v));
        doc.latent_to_label.push_back(0);
        out.meta.layer_of_latent[v - 1] = v;
        out.meta.layer_of_latent[n + v - 1] = v;
    }
    for (int v = 1; v <= n; ++v) {
        doc.latent_names.push_back("N" + std::to_string(v));
        doc.latent_to_label.push_back(1);
    }

    doc.node_scores.assign(static_cast<std::size_t>(n) * num_latent, 0.0);
    doc.edge_scores.assign(static_cast<std::size_t>(std::max(0, n - 1)) * num_latent *
                               num_latent, 0.0);
    auto node_at = [&](int pos, int state) -> double& {
        return doc.node_scores[static_cast<std::size_t>(pos) * num_latent + state];
    };
    auto edge_at = [&](int pos, int from, int to) -> double& {
        return doc.edge_scores[(static_cast<std::size_t>(pos) * num_latent + from) *
                                   num_latent + to];
    };

    for (int v = 1; v <= n; ++v) {
        const int e_row = v - 1;      // state Ev
        const int n_row = n + v - 1;  // state Nv
        // Row admissibility per position (1-indexed position k of layer v).
        auto e_ok = [&](int k) { return k == v || g.connected(k, v); };
        auto n_ok = [&](int k) { return k != v; };

        for (int k = 1; k <= n; ++k) {
            if (e_ok(k)) node_at(k - 1, e_row) = 1.0;
            if (n_ok(k)) node_at(k - 1, n_row) = 1.0;
        }

        // Within-layer transitions; a state splits its outgoing mass in half
        // when both successor rows are admissible.
        for (int k = 1; k < n; ++k) {
            const int branches = int(e_ok(k + 1)) + int(n_ok(k + 1));
            const double score = branches == 2 ? 0.5 : 1.0;
            for (int from : {e_row, n_row}) {
                bool from_ok = (from == e_row) ? e_ok(k) : n_ok(k);
                if (!from_ok) continue;
                if (e_ok(k + 1)) edge_at(k - 1, from, e_row) = score;
                if (n_ok(k + 1)) edge_at(k - 1, from, n_row) = score;
            }
        }

        // First-position weights: split if both rows start the layer, then
        // scale by the layer weight so each path weighs 1/alpha_g.
        const double delta = static_cast<double>(std::int64_t{1} << g.degree(v)) /
                             static_cast<double>(alpha_g);
        const double base = (e_ok(1) && n_ok(1)) ? 0.5 : 1.0;
        if (e_ok(1)) node_at(0, e_row) = base * delta;
        if (n_ok(1)) node_at(0, n_row) = base * delta;
    }

    return out;
}

namespace {

struct CliqueSearch {
    const std::vector<std::uint64_t>& adj;
    int best = 0;

    void grow(std::uint64_t cand, int size) {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        int v = std::countr_zero(cand);
        grow(cand & adj[v], size + 1);              // take v
        grow(cand & ~(std::uint64_t{1} << v), size);  // skip v
    }
};

}  // namespace

int max_clique_bruteforce(const Graph& g, int cap) {
    const int n = g.num_nodes();
    if (n > cap) {
        throw CapExceededError("max_clique_bruteforce: graph has " + std::to_string(n) +
                               " nodes, cap is " + std::to_string(cap));
    }
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& [a, b] : g.edges()) {
        adj[a - 1] |= std::uint64_t{1} << (b - 1);
        adj[b - 1] |= std::uint64_t{1} << (a - 1);
    }
    CliqueSearch search{adj};
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    search.grow(all, 0);
    return search.best;
}

int clique_via_decoding(const Graph& g, Method method) {
    ReductionBuild build = build_reduction(g);
    Model model = to_model(build.doc);

    DecodeResult res;
    switch (method) {
        case Method::kLdi:
            res = ldi(model.lattice, model.labels);
            break;
        case Method::kOracle:
            res = oracle_decode(model.lattice, model.labels);
            break;
        default:
            throw std::invalid_argument("clique_via_decoding: method must be ldi or oracle");
    }

    const double scaled = res.probability * static_cast<double>(build.meta.alpha_g);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) >= 1e-6 || rounded < 1.0) {
        throw ConsistencyError(
            "clique_via_decoding: non-integer-mass: P(y*)*alpha_g = " +
            std::to_string(scaled));
    }
    return static_cast<int>(rounded);
}

}  // namespace latdec
