#ifndef LATDEC_TESTS_ORACLE_HPP
#define LATDEC_TESTS_ORACLE_HPP

// Brute-force oracles for the dynamic-programming and search results. These
// enumerate complete paths explicitly and never share code with the forward
// or best-first machinery they check.

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "latdec/model.hpp"
#include "latdec/reduction.hpp"

namespace oracle {

struct Path {
    latdec::LatentLabeling states;
    double log_score;       // left-to-right double accumulation, as emitted
    long double lin_score;  // extended-precision linear mass
};

// All |H|^m complete paths in lexicographic state order.
inline std::vector<Path> enumerate_paths(const latdec::Lattice& lat) {
    const int m = lat.num_positions();
    const int h = lat.num_latent();
    std::vector<Path> out;
    latdec::LatentLabeling states(m, 0);
    for (;;) {
        double g = lat.node(0, states[0]);
        long double lg = lat.node(0, states[0]);
        for (int i = 1; i < m; ++i) {
            g = (g + lat.edge(i - 1, states[i - 1], states[i])) + lat.node(i, states[i]);
            lg += lat.edge(i - 1, states[i - 1], states[i]);
            lg += lat.node(i, states[i]);
        }
        out.push_back(Path{states, g,
                           latdec::is_log_zero(lg) ? 0.0L : expl(lg)});
        int i = m - 1;
        while (i >= 0 && ++states[i] == h) states[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

// Only the finite-score complete paths, found by depth-first extension of
// finite prefixes. Handles lattices whose full path space is huge but whose
// finite part is small (the clique reductions).
inline std::vector<Path> finite_paths(const latdec::Lattice& lat) {
    const int m = lat.num_positions();
    const int h = lat.num_latent();
    std::vector<Path> out;
    latdec::LatentLabeling states;
    std::vector<double> prefix;  // log score after each chosen state

    auto extend = [&](auto&& self, int pos) -> void {
        if (pos == m) {
            double g = prefix.back();
            out.push_back(Path{states, g, expl((long double)g)});
            return;
        }
        for (int k = 0; k < h; ++k) {
            double g = pos == 0 ? lat.node(0, k)
                                : (prefix.back() + lat.edge(pos - 1, states.back(), k)) +
                                      lat.node(pos, k);
            if (latdec::is_log_zero(g)) continue;
            states.push_back(k);
            prefix.push_back(g);
            self(self, pos + 1);
            states.pop_back();
            prefix.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

inline long double partition_linear(const std::vector<Path>& paths) {
    long double z = 0.0L;
    for (const auto& p : paths) z += p.lin_score;
    return z;
}

// Paths ordered the way the stream must emit them: score descending, then
// lexicographically ascending states.
inline std::vector<Path> sorted_paths(std::vector<Path> paths) {
    std::erase_if(paths, [](const Path& p) { return latdec::is_log_zero(p.log_score); });
    std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
        if (a.log_score != b.log_score) return a.log_score > b.log_score;
        return a.states < b.states;
    });
    return paths;
}

// Linear mass of every labeling, keyed by the labeling itself.
inline std::map<latdec::Labeling, long double> labeling_masses(
    const std::vector<Path>& paths, const latdec::LabelMap& labels) {
    std::map<latdec::Labeling, long double> out;
    for (const auto& p : paths) {
        out[latdec::project(p.states, labels)] += p.lin_score;
    }
    return out;
}

// Best labeling by mass, ties to the lexicographically smallest.
inline std::pair<latdec::Labeling, long double> best_labeling(
    const std::map<latdec::Labeling, long double>& masses) {
    std::pair<latdec::Labeling, long double> best;
    bool first = true;
    for (const auto& [y, mass] : masses) {
        if (first || mass > best.second) {
            best = {y, mass};
            first = false;
        }
    }
    return best;
}

// Per-position state posteriors from the path enumeration.
inline std::vector<long double> marginals(const latdec::Lattice& lat,
                                          const std::vector<Path>& paths) {
    const int m = lat.num_positions();
    const int h = lat.num_latent();
    const long double z = partition_linear(paths);
    std::vector<long double> out(static_cast<std::size_t>(m) * h, 0.0L);
    for (const auto& p : paths) {
        for (int i = 0; i < m; ++i) out[i * h + p.states[i]] += p.lin_score;
    }
    for (auto& v : out) v /= z;
    return out;
}

// Maximum clique by plain subset enumeration (no pruning); n <= ~20.
inline int max_clique_subsets(const latdec::Graph& g) {
    const int n = g.num_nodes();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> nodes;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) nodes.push_back(v + 1);
        }
        bool clique = true;
        for (std::size_t a = 0; a < nodes.size() && clique; ++a) {
            for (std::size_t b = a + 1; b < nodes.size() && clique; ++b) {
                if (!g.connected(nodes[a], nodes[b])) clique = false;
            }
        }
        if (clique) best = std::max(best, static_cast<int>(nodes.size()));
    }
    return best;
}

}  // namespace oracle

#endif  // LATDEC_TESTS_ORACLE_HPP
