#ifndef LATDEC_LOGSCORE_HPP
#define LATDEC_LOGSCORE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace latdec {

// Scores live in natural-log domain. A linear-domain score of exactly 0
// (an impossible node/edge) is represented by -infinity; it absorbs under
// addition and is the identity under log-sum-exp. Scores are never NaN.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();
inline constexpr long double kLogZeroL = -std::numeric_limits<long double>::infinity();

inline bool is_log_zero(double x) { return std::isinf(x) && x < 0.0; }
inline bool is_log_zero(long double x) { return std::isinf(x) && x < 0.0L; }

// log(exp(a) + exp(b)) with the larger argument factored out.
inline double log_add(double a, double b) {
    if (is_log_zero(a)) return b;
    if (is_log_zero(b)) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

// Two-pass log-sum-exp (running max, then scaled sum). Accumulation is done
// in extended precision: probabilities derived from these sums are compared
// against each other with no epsilon in the decoders, so the extra mantissa
// bits keep exact ratios (e.g. a labeling holding exactly half the total
// mass) from landing an ulp on the wrong side of the comparison.
inline long double log_sum_exp(std::span<const long double> xs) {
    long double m = kLogZeroL;
    for (long double x : xs) m = std::max(m, x);
    if (is_log_zero(m)) return kLogZeroL;
    long double s = 0.0L;
    for (long double x : xs) {
        if (!is_log_zero(x)) s += expl(x - m);
    }
    return m + logl(s);
}

// Compensated (Kahan) sum for linear-domain probability accumulation.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

}  // namespace latdec

#endif  // LATDEC_LOGSCORE_HPP
