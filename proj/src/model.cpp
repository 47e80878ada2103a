#include "latdec/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "latdec/errors.hpp"

namespace latdec {

Lattice::Lattice(int num_positions, int num_latent,
                 std::vector<double> node_scores,
                 std::vector<double> edge_scores)
    : m_(num_positions),
      h_(num_latent),
      node_(std::move(node_scores)),
      edge_(std::move(edge_scores)) {
    if (m_ < 1 || h_ < 1) {
        throw std::invalid_argument("Lattice: num_positions and num_latent must be >= 1");
    }
    if (node_.size() != static_cast<std::size_t>(m_) * h_) {
        throw std::invalid_argument("Lattice: node score table has wrong size");
    }
    if (edge_.size() != static_cast<std::size_t>(m_ - 1) * h_ * h_) {
        throw std::invalid_argument("Lattice: edge score table has wrong size");
    }
}

LabelMap::LabelMap(int num_labels, std::vector<int> latent_to_label)
    : num_labels_(num_labels), latent_to_label_(std::move(latent_to_label)) {
    if (num_labels_ < 1) {
        throw std::invalid_argument("LabelMap: num_labels must be >= 1");
    }
    if (latent_to_label_.empty()) {
        throw std::invalid_argument("LabelMap: latent_to_label must be non-empty");
    }
    classes_.resize(num_labels_);
    for (std::size_t h = 0; h < latent_to_label_.size(); ++h) {
        int y = latent_to_label_[h];
        if (y >= 0 && y < num_labels_) {
            classes_[y].push_back(static_cast<int>(h));
        }
    }
}

namespace {

// True iff at least one complete path has finite score: Viterbi-style max
// sweep, no log-sum-exp needed.
bool has_finite_path(const Lattice& lat) {
    const int m = lat.num_positions();
    const int h = lat.num_latent();
    std::vector<double> prev(h), cur(h);
    for (int j = 0; j < h; ++j) prev[j] = lat.node(0, j);
    for (int i = 1; i < m; ++i) {
        for (int k = 0; k < h; ++k) {
            double best = kLogZero;
            for (int j = 0; j < h; ++j) {
                double s = prev[j] + lat.edge(i - 1, j, k);
                if (s > best) best = s;
            }
            cur[k] = best + lat.node(i, k);
        }
        prev.swap(cur);
    }
    for (int j = 0; j < h; ++j) {
        if (!is_log_zero(prev[j])) return true;
    }
    return false;
}

bool score_ok(double s) { return !std::isnan(s) && s < std::numeric_limits<double>::infinity(); }

}  // namespace

std::vector<std::string> validate(const Lattice& lattice, const LabelMap& labels) {
    std::vector<std::string> report;

    if (labels.num_latent() != lattice.num_latent()) {
        std::ostringstream os;
        os << "dimension-mismatch: label map covers " << labels.num_latent()
           << " latent states, lattice has " << lattice.num_latent();
        report.push_back(os.str());
        return report;  // further checks would index out of range
    }

    for (int h = 0; h < labels.num_latent(); ++h) {
        int y = labels.label_of(h);
        if (y < 0 || y >= labels.num_labels()) {
            std::ostringstream os;
            os << "dimension-mismatch: latent state " << h << " maps to label " << y
               << " outside [0, " << labels.num_labels() << ")";
            report.push_back(os.str());
        }
    }

    for (int y = 0; y < labels.num_labels(); ++y) {
        if (labels.latents_of(y).empty()) {
            std::ostringstream os;
            os << "empty-label-class: label " << y << " owns no latent state";
            report.push_back(os.str());
        }
    }

    for (double s : lattice.node_scores()) {
        if (!score_ok(s)) {
            report.push_back("invalid-score: node score table contains NaN or +inf");
            break;
        }
    }
    for (double s : lattice.edge_scores()) {
        if (!score_ok(s)) {
            report.push_back("invalid-score: edge score table contains NaN or +inf");
            break;
        }
    }

    if (report.empty() && !has_finite_path(lattice)) {
        report.push_back("all-paths-zero: no complete path has a nonzero score");
    }
    return report;
}

void validate_or_throw(const Lattice& lattice, const LabelMap& labels) {
    auto report = validate(lattice, labels);
    if (report.empty()) return;
    std::string joined;
    for (const auto& line : report) {
        if (!joined.empty()) joined += "; ";
        joined += line;
    }
    throw ValidationError(joined);
}

Labeling project(const LatentLabeling& h, const LabelMap& labels) {
    Labeling y(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) {
        y[j] = labels.label_of(h[j]);
    }
    return y;
}

}  // namespace latdec
