#ifndef LATDEC_SEARCH_HPP
#define LATDEC_SEARCH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "latdec/dp.hpp"
#include "latdec/model.hpp"

namespace latdec {

// A prefix of a path: the chosen states, the accumulated prefix score g
// (node scores of all chosen states plus the edges between them), and the
// priority f = g + heu(end position, last state). For a full-length path
// f == g. Prefixes with f = -inf can never complete and are never queued.
struct PartialPath {
    LatentLabeling states;
    double g = 0.0;
    double f = 0.0;
};

// Best-first enumerator of complete paths in nonincreasing score order.
// Plain A* with full prefixes kept in the queue (no recombination); with the
// exact suffix heuristic the n-th emission is the n-th best path. Ties are
// emitted in lexicographic state order. Single-owner mutable state; separate
// streams over the same lattice may run concurrently.
class TopNStream {
public:
    // `heu` must have been built from `lattice`.
    TopNStream(const Lattice& lattice, const HeuristicTable& heu);

    // Next complete path and its log score, or nullopt once every
    // finite-score path has been emitted. The returned score is the exact
    // left-to-right accumulation over the path's nodes and edges.
    std::optional<std::pair<LatentLabeling, double>> next_best();

    long long emitted_count() const { return emitted_; }
    std::size_t frontier_size() const { return heap_.size(); }
    // Heap-ordered; exposed for inspection in tests.
    const std::vector<PartialPath>& frontier() const { return heap_; }

private:
    void push(PartialPath p);
    PartialPath pop();

    const Lattice* lat_;
    const HeuristicTable* heu_;
    std::vector<PartialPath> heap_;
    long long emitted_ = 0;
};

}  // namespace latdec

#endif  // LATDEC_SEARCH_HPP
