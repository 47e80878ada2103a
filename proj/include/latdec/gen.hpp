#ifndef LATDEC_GEN_HPP
#define LATDEC_GEN_HPP

#include <cstdint>

#include "latdec/model_io.hpp"

namespace latdec {

// Deterministic random model generator. All randomness flows from the
// 64-bit seed through std::mt19937_64 (whose output sequence is pinned by
// the standard) and the uniform mapping u = (next() >> 11) * 2^-53, so the
// same arguments produce byte-identical documents on any platform.
struct GenParams {
    int positions = 1;
    int num_latent = 1;   // must be >= num_labels
    int num_labels = 1;
    std::uint64_t seed = 0;
    // Probability that each score entry is an exact zero. The whole model is
    // redrawn until at least one complete path stays finite.
    double zero_fraction = 0.0;
};

// Latent states are assigned to labels round-robin; linear scores drawn
// uniform from (0, 1]. Throws std::invalid_argument on bad parameters.
ModelDoc random_model(const GenParams& params);

}  // namespace latdec

#endif  // LATDEC_GEN_HPP
