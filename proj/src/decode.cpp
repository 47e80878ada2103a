#include "latdec/decode.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>

#include "latdec/dp.hpp"
#include "latdec/errors.hpp"
#include "latdec/search.hpp"

namespace latdec {

const char* method_name(Method m) {
    switch (m) {
        case Method::kLdi: return "ldi";
        case Method::kLdiBounded: return "ldi-bounded";
        case Method::kMvi: return "mvi";
        case Method::kPmi: return "pmi";
        case Method::kOracle: return "oracle";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "ldi") return Method::kLdi;
    if (name == "ldi-bounded") return Method::kLdiBounded;
    if (name == "mvi") return Method::kMvi;
    if (name == "pmi") return Method::kPmi;
    if (name == "oracle") return Method::kOracle;
    return std::nullopt;
}

DecodeResult ldi(const Lattice& lat, const LabelMap& labels, const LdiOptions& opt) {
    if (!(opt.alpha > 0.0 && opt.alpha <= 1.0)) {
        throw std::invalid_argument("ldi: alpha must be in (0, 1]");
    }
    if (opt.max_steps && *opt.max_steps < 1) {
        throw std::invalid_argument("ldi: max_steps must be >= 1");
    }

    const long double log_z = partition_function_ld(lat);
    const HeuristicTable heu = heuristic_table(lat);
    TopNStream stream(lat, heu);

    DecodeResult res;
    res.method = opt.max_steps ? Method::kLdiBounded : Method::kLdi;
    const long long bound = opt.max_steps ? *opt.max_steps : opt.safety_cap;

    std::map<Labeling, double> scored;  // the set S with cached P(y)
    KahanSum mass;                      // sum of P(y) over S
    Labeling best;
    double best_p = 0.0;
    bool have_best = false;
    double prob_gap = -1.0;
    long long n = 0;

    bool condition_met = false;
    bool exhausted = false;
    bool bounded = false;

    for (;;) {
        if (prob_gap >= 0.0) {
            condition_met = true;
            break;
        }
        if (n >= bound) {
            bounded = true;
            break;
        }
        auto nxt = stream.next_best();
        if (!nxt) {
            exhausted = true;
            break;
        }
        ++n;
        const auto& [h, h_score] = *nxt;
        Labeling y = project(h, labels);
        auto it = scored.find(y);
        double p_y;
        bool is_new = (it == scored.end());
        if (is_new) {
            p_y = labeling_probability(lat, labels, y, log_z);
            scored.emplace(y, p_y);
            mass.add(p_y);
            if (!have_best || p_y > best_p) {
                best = y;
                best_p = p_y;
                have_best = true;
            }
            prob_gap = best_p - opt.alpha * (1.0 - mass.value());
        } else {
            // Duplicate emission: the step counter advances, nothing else
            // is refreshed.
            p_y = it->second;
        }
        if (opt.keep_trace) {
            res.trace.push_back(TraceEntry{n, h_score, std::move(y), p_y, prob_gap, is_new});
        }
    }

    assert(have_best && "validated lattices emit at least one path before any exit");

    if (condition_met) {
        res.exact = (opt.alpha == 1.0);
    } else if (exhausted) {
        // Every finite-score path was drawn, so every labeling with nonzero
        // probability is in S and the best is the true optimum.
        prob_gap = best_p - opt.alpha * (1.0 - mass.value());
        res.exact = true;
    } else if (bounded) {
        res.exact = false;
        if (!opt.max_steps) res.cap_hit = true;
    }

    res.labeling = std::move(best);
    res.probability = best_p;
    res.steps = n;
    res.prob_gap = prob_gap;
    return res;
}

DecodeResult mvi(const Lattice& lat, const LabelMap& labels) {
    // Take the top emission of the same stream LDI draws from; this keeps
    // tie handling identical between mvi and ldi(max_steps = 1).
    const HeuristicTable heu = heuristic_table(lat);
    TopNStream stream(lat, heu);
    auto top = stream.next_best();
    if (!top) {
        throw std::invalid_argument("mvi: lattice has no finite-score path");
    }
    DecodeResult res;
    res.method = Method::kMvi;
    res.labeling = project(top->first, labels);
    res.probability =
        labeling_probability(lat, labels, res.labeling, partition_function_ld(lat));
    res.steps = 1;
    res.exact = false;
    return res;
}

DecodeResult pmi(const Lattice& lat, const LabelMap& labels) {
    const int m = lat.num_positions();
    const int num_labels = labels.num_labels();
    const std::vector<double> marg = marginals(lat);

    DecodeResult res;
    res.method = Method::kPmi;
    res.labeling.resize(m);
    for (int i = 0; i < m; ++i) {
        int best_label = 0;
        double best_mass = -1.0;
        for (int y = 0; y < num_labels; ++y) {
            double s = 0.0;
            for (int h : labels.latents_of(y)) {
                s += marg[static_cast<std::size_t>(i) * lat.num_latent() + h];
            }
            if (s > best_mass) {  // strict: ties keep the smaller label
                best_mass = s;
                best_label = y;
            }
        }
        res.labeling[i] = best_label;
    }
    res.probability =
        labeling_probability(lat, labels, res.labeling, partition_function_ld(lat));
    res.steps = 1;
    res.exact = false;
    return res;
}

DecodeResult oracle_decode(const Lattice& lat, const LabelMap& labels, long long cap) {
    const int m = lat.num_positions();
    const int num_labels = labels.num_labels();

    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= num_labels;
        if (total > cap) {
            throw CapExceededError("oracle_decode: |Y|^m exceeds cap of " +
                                   std::to_string(cap));
        }
    }

    const long double log_z = partition_function_ld(lat);
    Labeling y(m, 0);
    Labeling best;
    long double best_mass = kLogZeroL;
    bool have_best = false;
    // Lexicographic odometer over all labelings; strict > keeps the first
    // (smallest) labeling among mass ties.
    for (long long idx = 0; idx < total; ++idx) {
        long double mass = restricted_log_mass_ld(lat, labels, y);
        if (!have_best || mass > best_mass) {
            best = y;
            best_mass = mass;
            have_best = true;
        }
        for (int i = m - 1; i >= 0; --i) {
            if (++y[i] < num_labels) break;
            y[i] = 0;
        }
    }

    DecodeResult res;
    res.method = Method::kOracle;
    res.labeling = std::move(best);
    res.probability =
        is_log_zero(best_mass) ? 0.0 : static_cast<double>(expl(best_mass - log_z));
    res.steps = total;
    res.exact = true;
    return res;
}

}  // namespace latdec
