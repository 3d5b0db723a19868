#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdebayes/time_grid.hpp"

namespace sdebayes {

/// Link function g_l applied to a covariate value. Identity by default; the
/// clamp link operationalizes a compact covariate range without enforcing
/// compactness globally.
struct Link {
    enum class Kind { Identity, Clamp, Custom };

    Kind kind = Kind::Identity;
    double lo = 0.0, hi = 0.0;
    std::function<double(double)> fn;

    static Link identity() { return Link{}; }
    static Link clamp(double lo, double hi) {
        if (!(hi > lo)) throw std::invalid_argument("Link::clamp: need hi > lo");
        Link l;
        l.kind = Kind::Clamp;
        l.lo = lo;
        l.hi = hi;
        return l;
    }
    /// User-registered continuous map; must be defined on the observed range.
    static Link custom(std::function<double(double)> f) {
        Link l;
        l.kind = Kind::Custom;
        l.fn = std::move(f);
        return l;
    }

    double operator()(double z) const {
        switch (kind) {
            case Kind::Identity: return z;
            case Kind::Clamp: return z < lo ? lo : (z > hi ? hi : z);
            case Kind::Custom: {
                double g = fn(z);
                if (!std::isfinite(g))
                    throw std::domain_error("Link: custom link undefined at covariate value " +
                                            std::to_string(z));
                return g;
            }
        }
        throw std::logic_error("Link: bad kind");
    }
};

/// p time-indexed covariate trajectories on a shared grid, each with a link.
class CovariateSet {
public:
    CovariateSet() = default;
    CovariateSet(TimeGrid grid, std::vector<std::vector<double>> series, std::vector<Link> links,
                 bool standardized = false)
        : grid_(grid),
          series_(std::move(series)),
          links_(std::move(links)),
          standardized_(standardized) {
        if (links_.size() != series_.size())
            throw std::invalid_argument("CovariateSet: one link per series required");
        for (std::size_t l = 0; l < series_.size(); ++l) {
            if (static_cast<int>(series_[l].size()) != grid_.n_points())
                throw std::invalid_argument("CovariateSet: series " + std::to_string(l + 1) +
                                            " length does not match the grid");
            for (double v : series_[l])
                if (!std::isfinite(v))
                    throw std::invalid_argument("CovariateSet: non-finite covariate value in z" +
                                                std::to_string(l + 1));
        }
    }

    /// Covariate-free set (p = 0) on the given grid.
    static CovariateSet empty(TimeGrid grid) { return CovariateSet(grid, {}, {}); }

    /// All-identity links.
    static CovariateSet with_identity_links(TimeGrid grid, std::vector<std::vector<double>> series,
                                            bool standardized = false) {
        std::vector<Link> links(series.size(), Link::identity());
        return CovariateSet(grid, std::move(series), std::move(links), standardized);
    }

    const TimeGrid& grid() const { return grid_; }
    int p() const { return static_cast<int>(series_.size()); }
    bool standardized() const { return standardized_; }
    const std::vector<double>& series(int l) const { return series_.at(l); }
    const Link& link(int l) const { return links_.at(l); }

    /// Raw covariate value z_l(t_k).
    double value(int l, int k) const { return series_.at(l).at(k); }

    /// Link-transformed value g_l(z_l(t_k)).
    double g(int l, int k) const { return links_.at(l)(series_.at(l).at(k)); }

private:
    TimeGrid grid_;
    std::vector<std::vector<double>> series_;
    std::vector<Link> links_;
    bool standardized_ = false;
};

/// Rescales every series to empirical mean 0 and variance 1 over the grid,
/// using the population (1/N) variance convention. Errors on constant series.
CovariateSet standardize(const CovariateSet& covs);

}  // namespace sdebayes
