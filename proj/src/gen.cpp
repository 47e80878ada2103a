#include "latdec/gen.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "latdec/errors.hpp"

namespace latdec {

namespace {

// Uniform in [0, 1) from the top 53 bits; exact and platform-independent.
double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ModelDoc random_model(const GenParams& p) {
    if (p.positions < 1) throw std::invalid_argument("gen: positions must be >= 1");
    if (p.num_labels < 1) throw std::invalid_argument("gen: num_labels must be >= 1");
    if (p.num_latent < p.num_labels) {
        throw std::invalid_argument("gen: num_latent must be >= num_labels");
    }
    if (!(p.zero_fraction >= 0.0 && p.zero_fraction < 1.0)) {
        throw std::invalid_argument("gen: zero_fraction must be in [0, 1)");
    }

    ModelDoc doc;
    doc.positions = p.positions;
    doc.log_space = false;
    for (int y = 0; y < p.num_labels; ++y) doc.label_names.push_back("y" + std::to_string(y));
    for (int h = 0; h < p.num_latent; ++h) {
        doc.latent_names.push_back("h" + std::to_string(h));
        doc.latent_to_label.push_back(h % p.num_labels);
    }

    std::mt19937_64 rng(p.seed);
    auto draw = [&]() {
        double v = 1.0 - u01(rng);       // (0, 1]
        bool zero = u01(rng) < p.zero_fraction;
        return zero ? 0.0 : v;
    };

    const std::size_t node_count = static_cast<std::size_t>(p.positions) * p.num_latent;
    const std::size_t edge_count = static_cast<std::size_t>(p.positions - 1) *
                                   p.num_latent * p.num_latent;
    // Redraw whole models until one keeps a finite path (zero_fraction < 1
    // makes this terminate quickly in practice).
    for (int attempt = 0; attempt < 10000; ++attempt) {
        doc.node_scores.clear();
        doc.edge_scores.clear();
        for (std::size_t i = 0; i < node_count; ++i) doc.node_scores.push_back(draw());
        for (std::size_t i = 0; i < edge_count; ++i) doc.edge_scores.push_back(draw());
        try {
            to_model(doc);
            return doc;
        } catch (const ValidationError&) {
            continue;
        }
    }
    throw std::invalid_argument("gen: could not draw a valid model; zero_fraction too high");
}

}  // namespace latdec
