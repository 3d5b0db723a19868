#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace sdebayes {

/// Kahan compensated accumulator. Long Ito/quadrature sums (500..50000
/// terms) need the compensation to meet the 1e-9 oracle tolerances.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

inline double logsumexp(std::span<const double> xs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : xs) {
        if (x > m) m = x;
    }
    if (!std::isfinite(m)) return m;  // all -inf (or empty)
    KahanSum s;
    for (double x : xs) s.add(std::exp(x - m));
    return m + std::log(s.value());
}

/// logsumexp of xs + log-weights lw (same length).
inline double logsumexp_weighted(std::span<const double> xs, std::span<const double> lw) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double v = xs[i] + lw[i];
        if (v > m) m = v;
    }
    if (!std::isfinite(m)) return m;
    KahanSum s;
    for (std::size_t i = 0; i < xs.size(); ++i) s.add(std::exp(xs[i] + lw[i] - m));
    return m + std::log(s.value());
}

inline double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean of empty range");
    KahanSum s;
    for (double x : xs) s.add(x);
    return s.value() / static_cast<double>(xs.size());
}

/// Unbiased (1/(n-1)) sample variance.
inline double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("sample_variance needs n >= 2");
    double m = mean(xs);
    KahanSum s;
    for (double x : xs) s.add((x - m) * (x - m));
    return s.value() / static_cast<double>(xs.size() - 1);
}

/// Population (1/n) variance; the convention used for covariate standardization.
inline double population_variance(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("population_variance of empty range");
    double m = mean(xs);
    KahanSum s;
    for (double x : xs) s.add((x - m) * (x - m));
    return s.value() / static_cast<double>(xs.size());
}

inline double standard_error(std::span<const double> xs) {
    return std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
}

inline double normal_logpdf(double y, double mean, double var) {
    if (!(var > 0.0)) throw std::domain_error("normal_logpdf: variance must be positive");
    double d = y - mean;
    return -0.5 * std::log(2.0 * 3.14159265358979323846 * var) - d * d / (2.0 * var);
}

}  // namespace sdebayes
