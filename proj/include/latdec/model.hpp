#ifndef LATDEC_MODEL_HPP
#define LATDEC_MODEL_HPP

#include <string>
#include <vector>

#include "latdec/logscore.hpp"

namespace latdec {

// A path through the lattice: one latent state index per position.
using LatentLabeling = std::vector<int>;
// Its projection: one label index per position.
using Labeling = std::vector<int>;

// Position x latent-state grid with log-domain node scores and
// position-dependent transition scores. Immutable after construction and
// safe to share across threads.
class Lattice {
public:
    // node_scores: m x |H| row-major; edge_scores: (m-1) x |H| x |H| row-major,
    // entry (i, j, k) scoring the transition from state j at position i to
    // state k at position i+1.
    Lattice(int num_positions, int num_latent,
            std::vector<double> node_scores,
            std::vector<double> edge_scores);

    int num_positions() const { return m_; }
    int num_latent() const { return h_; }

    double node(int pos, int state) const { return node_[pos * h_ + state]; }
    double edge(int pos, int from, int to) const {
        return edge_[(static_cast<std::size_t>(pos) * h_ + from) * h_ + to];
    }

    const std::vector<double>& node_scores() const { return node_; }
    const std::vector<double>& edge_scores() const { return edge_; }

private:
    int m_;
    int h_;
    std::vector<double> node_;
    std::vector<double> edge_;
};

// Disjoint partition of latent states into per-label classes: every latent
// state is owned by exactly one label. Empty label classes are representable
// so that validate() can report them; all other operations assume a
// validated map.
class LabelMap {
public:
    LabelMap(int num_labels, std::vector<int> latent_to_label);

    int num_labels() const { return num_labels_; }
    int num_latent() const { return static_cast<int>(latent_to_label_.size()); }
    int label_of(int latent) const { return latent_to_label_[latent]; }
    // Latent states owned by `label`, in increasing index order.
    const std::vector<int>& latents_of(int label) const { return classes_[label]; }
    const std::vector<int>& latent_to_label() const { return latent_to_label_; }

private:
    int num_labels_;
    std::vector<int> latent_to_label_;
    std::vector<std::vector<int>> classes_;
};

// A lattice plus its label partition and the display names used by the
// interchange format.
struct Model {
    Lattice lattice;
    LabelMap labels;
    std::vector<std::string> label_names;   // size |Y|
    std::vector<std::string> latent_names;  // size |H|
};

// Checks the model invariants: matching dimensions, no NaN/+inf scores,
// every label class non-empty, and at least one complete path with finite
// score (single forward max sweep). Returns a list of problems, empty if ok.
std::vector<std::string> validate(const Lattice& lattice, const LabelMap& labels);

// Throws ValidationError with the joined report if validate() fails.
void validate_or_throw(const Lattice& lattice, const LabelMap& labels);

// Maps a latent labeling to its unique parent labeling via state ownership.
Labeling project(const LatentLabeling& h, const LabelMap& labels);

}  // namespace latdec

#endif  // LATDEC_MODEL_HPP
