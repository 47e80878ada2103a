#ifndef LATDEC_DECODE_HPP
#define LATDEC_DECODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "latdec/model.hpp"

namespace latdec {

enum class Method { kLdi, kLdiBounded, kMvi, kPmi, kOracle };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

// One emission of the LDI loop: the n-th drawn latent labeling, its parent
// labeling, the labeling's probability (cached when the labeling was already
// scored) and the stopping gap P(y') - alpha * P_remain after the step.
struct TraceEntry {
    long long step = 0;
    double latent_log_score = 0.0;
    Labeling labeling;
    double labeling_probability = 0.0;
    double prob_gap = 0.0;
    bool new_labeling = false;
};

struct DecodeResult {
    Labeling labeling;
    double probability = 0.0;  // P(labeling), linear domain
    long long steps = 0;       // latent labelings drawn
    bool exact = false;        // stopping certificate achieved
    Method method = Method::kLdi;
    bool cap_hit = false;      // safety cap ended an unbounded run
    double prob_gap = -1.0;    // final stopping gap
    std::vector<TraceEntry> trace;
};

struct LdiOptions {
    // Bound on search steps; unset means run to the stopping condition
    // (guarded by safety_cap).
    std::optional<long long> max_steps;
    // Stopping factor in (0, 1]. 1 gives the exact condition
    // P(y') - P_remain >= 0; smaller values stop earlier without a
    // certificate.
    double alpha = 1.0;
    bool keep_trace = false;
    // Emission guard for unbounded runs; the underlying problem is NP-hard,
    // so the library must not hang on adversarial inputs.
    long long safety_cap = 1'000'000;
};

// Draws latent labelings best-first, projects each to its parent labeling,
// scores every labeling once, and stops as soon as the best labeling found
// holds at least as much probability as everything not yet accounted for.
// `exact` is true iff that certificate was achieved with alpha = 1, or the
// stream was exhausted (all mass accounted for either way).
DecodeResult ldi(const Lattice& lattice, const LabelMap& labels,
                 const LdiOptions& options = {});

// Projects the single best latent path. Fast, no certificate.
DecodeResult mvi(const Lattice& lattice, const LabelMap& labels);

// Per-position argmax of label marginals (ties to the smaller label index).
// Fast, no certificate, positions decided independently.
DecodeResult pmi(const Lattice& lattice, const LabelMap& labels);

// Scores every one of the |Y|^m labelings; ground truth for small models.
// Ties go to the lexicographically smallest labeling. Throws
// CapExceededError when |Y|^m > cap.
DecodeResult oracle_decode(const Lattice& lattice, const LabelMap& labels,
                           long long cap = 2'000'000);

}  // namespace latdec

#endif  // LATDEC_DECODE_HPP
