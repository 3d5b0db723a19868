#include "sdebayes/simulate.hpp"

#include <cmath>

#include "sdebayes/rng.hpp"

namespace sdebayes {

SamplePath euler_maruyama(const ModelSpec& model, const CovariateSet& covs, double x0,
                          const TimeGrid& grid, std::uint64_t seed) {
    if (!(covs.grid() == grid))
        throw std::invalid_argument("euler_maruyama: covariates live on a different grid");
    if (model.p() != covs.p())
        throw std::invalid_argument("euler_maruyama: mask length does not match covariate count");
    if (!std::isfinite(x0)) throw std::invalid_argument("euler_maruyama: non-finite x0");

    Rng rng(seed);
    const double dt = grid.dt();
    const double sq_dt = std::sqrt(dt);
    std::vector<double> x(grid.n_points());
    x[0] = x0;
    for (int k = 0; k < grid.n_steps; ++k) {
        double t = grid.time(k);
        double phi = phi_eval(model, covs, k);
        double b = model.drift_b(t, x[k]);
        double s = model.diffusion.sigma(t, x[k]);
        double next = x[k] + phi * b * dt + s * sq_dt * rng.normal();
        if (!std::isfinite(next))
            throw std::runtime_error("euler_maruyama: non-finite value at step " +
                                     std::to_string(k + 1));
        x[k + 1] = next;
    }
    return SamplePath(grid, std::move(x));
}

CovariateSet simulate_covariates(const std::vector<CovariateSde>& sdes, const TimeGrid& grid,
                                 std::uint64_t seed) {
    std::vector<std::vector<double>> series;
    series.reserve(sdes.size());
    CovariateSet none = CovariateSet::empty(grid);
    for (std::size_t l = 0; l < sdes.size(); ++l) {
        ModelSpec m(sdes[l].drift, sdes[l].diffusion, {}, {1.0});
        SamplePath z = euler_maruyama(m, none, sdes[l].z0, grid, derive_stream_seed(seed, l));
        series.push_back(std::move(z.values));
    }
    return CovariateSet::with_identity_links(grid, std::move(series));
}

}  // namespace sdebayes
