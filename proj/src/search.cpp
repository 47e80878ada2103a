#include "latdec/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace latdec {

namespace {

// Heap ordering: pop the highest f first; on exact f ties pop the longer
// prefix first (drill down before moving sideways), then the
// lexicographically smaller state sequence. This makes the emission order of
// equal-scoring complete paths lexicographic and reproducible.
bool pops_later(const PartialPath& a, const PartialPath& b) {
    if (a.f != b.f) return a.f < b.f;
    if (a.states.size() != b.states.size()) return a.states.size() < b.states.size();
    return a.states > b.states;
}

}  // namespace

TopNStream::TopNStream(const Lattice& lattice, const HeuristicTable& heu)
    : lat_(&lattice), heu_(&heu) {
    if (heu.num_positions() != lattice.num_positions() ||
        heu.num_latent() != lattice.num_latent()) {
        throw std::invalid_argument("TopNStream: heuristic table does not match lattice");
    }
    for (int j = 0; j < lattice.num_latent(); ++j) {
        double g = lattice.node(0, j);
        if (is_log_zero(g)) continue;
        double f = g + heu.at(0, j);
        if (is_log_zero(f)) continue;  // no finite completion exists
        push(PartialPath{{j}, g, f});
    }
}

void TopNStream::push(PartialPath p) {
    heap_.push_back(std::move(p));
    std::push_heap(heap_.begin(), heap_.end(), pops_later);
}

PartialPath TopNStream::pop() {
    std::pop_heap(heap_.begin(), heap_.end(), pops_later);
    PartialPath p = std::move(heap_.back());
    heap_.pop_back();
    return p;
}

std::optional<std::pair<LatentLabeling, double>> TopNStream::next_best() {
    const int m = lat_->num_positions();
    const int h = lat_->num_latent();
    while (!heap_.empty()) {
        PartialPath p = pop();
        const int len = static_cast<int>(p.states.size());
        if (len == m) {
            ++emitted_;
            return std::make_pair(std::move(p.states), p.g);
        }
        const int i = len - 1;        // boundary being crossed
        const int j = p.states.back();
        for (int k = 0; k < h; ++k) {
            double e = lat_->edge(i, j, k);
            if (is_log_zero(e)) continue;
            double n = lat_->node(i + 1, k);
            if (is_log_zero(n)) continue;
            double g = (p.g + e) + n;
            double f = g + heu_->at(i + 1, k);
            if (is_log_zero(f)) continue;
            PartialPath child;
            child.states.reserve(p.states.size() + 1);
            child.states.insert(child.states.end(), p.states.begin(), p.states.end());
            child.states.push_back(k);
            child.g = g;
            child.f = f;
            push(std::move(child));
        }
    }
    return std::nullopt;
}

}  // namespace latdec
