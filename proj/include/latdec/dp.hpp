#ifndef LATDEC_DP_HPP
#define LATDEC_DP_HPP

#include <utility>
#include <vector>

#include "latdec/model.hpp"

namespace latdec {

// Exact best-suffix table: at(i, j) is the best achievable score from latent
// state j at position i to the end of the lattice, excluding j's own node
// score (that is counted in the prefix). The last row is identically 0.
// Consequences, both asserted by tests:
//   at(i, j) >= edge(i, j, k) + node(i+1, k) + at(i+1, k) for every k,
//   with equality for the maximizing k (monotone / consistent heuristic).
class HeuristicTable {
public:
    HeuristicTable(int num_positions, int num_latent, std::vector<double> values);

    int num_positions() const { return m_; }
    int num_latent() const { return h_; }
    double at(int pos, int state) const { return heu_[pos * h_ + state]; }

private:
    int m_;
    int h_;
    std::vector<double> heu_;
};

// log of the sum of all |H|^m path scores (forward algorithm). Finite for
// validated lattices. The _ld variant carries the extended-precision value;
// decoders use it so that probability ratios are correctly rounded.
long double partition_function_ld(const Lattice& lattice);
double partition_function(const Lattice& lattice);

// Highest-scoring path and its log score. Ties are broken toward the
// lexicographically smallest state sequence, matching the order in which
// the A* stream emits equal-scoring paths.
std::pair<LatentLabeling, double> viterbi(const Lattice& lattice);

// log of the unnormalized mass of all latent labelings consistent with y:
// a forward pass restricted at each position i to the class of y[i].
// Returns -inf when no consistent path has nonzero score.
long double restricted_log_mass_ld(const Lattice& lattice, const LabelMap& labels,
                                   const Labeling& y);
double restricted_log_mass(const Lattice& lattice, const LabelMap& labels,
                           const Labeling& y);

// P(y) = exp(restricted mass - log_z), rounded once at the end.
double labeling_probability(const Lattice& lattice, const LabelMap& labels,
                            const Labeling& y, long double log_z);

// Per-position posteriors P(h_i = j), m x |H| row-major, linear domain.
// Each row sums to 1 up to rounding.
std::vector<double> marginals(const Lattice& lattice);

// Builds the best-suffix table in one right-to-left sweep, O(m |H|^2).
HeuristicTable heuristic_table(const Lattice& lattice);

}  // namespace latdec

#endif  // LATDEC_DP_HPP
