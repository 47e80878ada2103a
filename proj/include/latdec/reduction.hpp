#ifndef LATDEC_REDUCTION_HPP
#define LATDEC_REDUCTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latdec/decode.hpp"
#include "latdec/model_io.hpp"

namespace latdec {

// Undirected graph with 1-indexed nodes, no self-loops, no duplicate edges.
class Graph {
public:
    Graph(int num_nodes, std::vector<std::pair<int, int>> edges);

    int num_nodes() const { return n_; }
    // Normalized (a < b), sorted, 1-indexed.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool connected(int a, int b) const { return adj_[index(a, b)]; }
    int degree(int v) const { return degree_[v - 1]; }

private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
    }
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<bool> adj_;
    std::vector<int> degree_;
};

// JSON: {"nodes": 4, "edges": [[1,2],[2,3],[2,4],[3,4]]}
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string serialize_graph(const Graph& g);

struct ReductionMeta {
    // Sum over nodes of 2^degree: the number of finite-score paths in the
    // compiled model; every such path carries linear mass exactly 1/alpha_g.
    std::int64_t alpha_g = 0;
    // Owning graph node (1-indexed) of each latent state.
    std::vector<int> layer_of_latent;
};

struct ReductionBuild {
    ModelDoc doc;  // linear-domain document, ready to serialize or compile
    ReductionMeta meta;
};

// Compiles a graph into a decoding instance whose optimal labeling has
// probability c / alpha_g, where c is the graph's maximum clique size.
//
// The lattice has one position per graph node and two latent rows per node
// v (layer v): an "in-clique" row Ev owned by label E and an "out" row Nv
// owned by label N. Cross-layer transitions score 0, so every finite path
// stays inside one layer. Within layer v: position v admits only Ev; a
// position k adjacent to v admits both rows; any other position admits only
// Nv. A transition out of a state splits its mass in half whenever both
// successor rows are admissible, and the first position's node scores carry
// the same one-half split plus the layer weight 2^deg(v) / alpha_g, which
// makes every finite path weigh exactly 1/alpha_g and the total mass 1.
ReductionBuild build_reduction(const Graph& g);

// Exact maximum clique size by branch and bound over vertex bitmasks.
// Throws CapExceededError for graphs larger than `cap` nodes.
int max_clique_bruteforce(const Graph& g, int cap = 20);

// Compiles the graph, decodes with `method` (kLdi or kOracle), and reads the
// clique size back off the optimal labeling's probability. Throws
// ConsistencyError if that probability times alpha_g is not within 1e-6 of
// an integer.
int clique_via_decoding(const Graph& g, Method method = Method::kLdi);

}  // namespace latdec

#endif  // LATDEC_REDUCTION_HPP
