#include "latdec/dp.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace latdec {

HeuristicTable::HeuristicTable(int num_positions, int num_latent,
                               std::vector<double> values)
    : m_(num_positions), h_(num_latent), heu_(std::move(values)) {
    if (heu_.size() != static_cast<std::size_t>(m_) * h_) {
        throw std::invalid_argument("HeuristicTable: wrong table size");
    }
}

long double partition_function_ld(const Lattice& lat) {
    const int m = lat.num_positions();
    const int h = lat.num_latent();
    std::vector<long double> prev(h), cur(h), buf(h);
    for (int j = 0; j < h; ++j) prev[j] = lat.node(0, j);
    for (int i = 1; i < m; ++i) {
        for (int k = 0; k < h; ++k) {
            for (int j = 0; j < h; ++j) buf[j] = prev[j] + lat.edge(i - 1, j, k);
            cur[k] = lat.node(i, k) + log_sum_exp(buf);
        }
        prev.swap(cur);
    }
    return log_sum_exp(prev);
}

double partition_function(const Lattice& lat) {
    return static_cast<double>(partition_function_ld(lat));
}

std::pair<LatentLabeling, double> viterbi(const Lattice& lat) {
    const int m = lat.num_positions();
    const int h = lat.num_latent();
    HeuristicTable heu = heuristic_table(lat);

    // Backward table + forward reconstruction. Taking the smallest state
    // achieving the bound at each step yields the lexicographically smallest
    // optimal path.
    int cur = -1;
    double best = kLogZero;
    for (int j = 0; j < h; ++j) {
        double f = lat.node(0, j) + heu.at(0, j);
        if (cur < 0 || f > best) {
            best = f;
            cur = j;
        }
    }
    assert(!is_log_zero(best) && "viterbi requires a validated lattice");

    LatentLabeling path;
    path.reserve(m);
    path.push_back(cur);
    double score = lat.node(0, cur);
    for (int i = 0; i + 1 < m; ++i) {
        const double target = heu.at(i, cur);
        int next = -1;
        for (int k = 0; k < h; ++k) {
            // Same association as heuristic_table(), so the maximizing
            // successor compares equal bit-for-bit.
            double cand = (heu.at(i + 1, k) + lat.node(i + 1, k)) + lat.edge(i, cur, k);
            if (cand == target) {
                next = k;
                break;
            }
        }
        assert(next >= 0);
        score = (score + lat.edge(i, cur, next)) + lat.node(i + 1, next);
        path.push_back(next);
        cur = next;
    }
    return {std::move(path), score};
}

long double restricted_log_mass_ld(const Lattice& lat, const LabelMap& labels,
                                   const Labeling& y) {
    const int m = lat.num_positions();
    assert(static_cast<int>(y.size()) == m);

    const auto& first = labels.latents_of(y[0]);
    std::vector<long double> prev(first.size()), cur, buf;
    for (std::size_t a = 0; a < first.size(); ++a) prev[a] = lat.node(0, first[a]);

    for (int i = 1; i < m; ++i) {
        const auto& from = labels.latents_of(y[i - 1]);
        const auto& to = labels.latents_of(y[i]);
        cur.assign(to.size(), kLogZeroL);
        buf.resize(from.size());
        for (std::size_t b = 0; b < to.size(); ++b) {
            for (std::size_t a = 0; a < from.size(); ++a) {
                buf[a] = prev[a] + lat.edge(i - 1, from[a], to[b]);
            }
            cur[b] = lat.node(i, to[b]) + log_sum_exp(buf);
        }
        prev.swap(cur);
    }
    return log_sum_exp(prev);
}

double restricted_log_mass(const Lattice& lat, const LabelMap& labels,
                           const Labeling& y) {
    return static_cast<double>(restricted_log_mass_ld(lat, labels, y));
}

double labeling_probability(const Lattice& lat, const LabelMap& labels,
                            const Labeling& y, long double log_z) {
    long double mass = restricted_log_mass_ld(lat, labels, y);
    if (is_log_zero(mass)) return 0.0;
    return static_cast<double>(expl(mass - log_z));
}

std::vector<double> marginals(const Lattice& lat) {
    const int m = lat.num_positions();
    const int h = lat.num_latent();

    std::vector<long double> fwd(static_cast<std::size_t>(m) * h);
    std::vector<long double> bwd(static_cast<std::size_t>(m) * h);
    std::vector<long double> buf(h);

    for (int j = 0; j < h; ++j) fwd[j] = lat.node(0, j);
    for (int i = 1; i < m; ++i) {
        for (int k = 0; k < h; ++k) {
            for (int j = 0; j < h; ++j) buf[j] = fwd[(i - 1) * h + j] + lat.edge(i - 1, j, k);
            fwd[i * h + k] = lat.node(i, k) + log_sum_exp(buf);
        }
    }

    for (int j = 0; j < h; ++j) bwd[(m - 1) * h + j] = 0.0L;
    for (int i = m - 2; i >= 0; --i) {
        for (int j = 0; j < h; ++j) {
            for (int k = 0; k < h; ++k) {
                buf[k] = lat.edge(i, j, k) + lat.node(i + 1, k) + bwd[(i + 1) * h + k];
            }
            bwd[i * h + j] = log_sum_exp(buf);
        }
    }

    for (int j = 0; j < h; ++j) buf[j] = fwd[(m - 1) * h + j];
    const long double log_z = log_sum_exp(std::span<const long double>(buf.data(), h));

    std::vector<double> out(static_cast<std::size_t>(m) * h);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < h; ++j) {
            long double lp = fwd[i * h + j] + bwd[i * h + j];
            out[i * h + j] =
                is_log_zero(lp) ? 0.0 : static_cast<double>(expl(lp - log_z));
        }
    }
    return out;
}

HeuristicTable heuristic_table(const Lattice& lat) {
    const int m = lat.num_positions();
    const int h = lat.num_latent();
    std::vector<double> heu(static_cast<std::size_t>(m) * h, 0.0);
    for (int i = m - 2; i >= 0; --i) {
        for (int j = 0; j < h; ++j) {
            double best = kLogZero;
            for (int k = 0; k < h; ++k) {
                double cand = (heu[(i + 1) * h + k] + lat.node(i + 1, k)) + lat.edge(i, j, k);
                if (cand > best) best = cand;
            }
            heu[i * h + j] = best;
        }
    }
    return HeuristicTable(m, h, std::move(heu));
}

}  // namespace latdec
