#pragma once

#include <cstdint>
#include <vector>

#include "sdebayes/model.hpp"
#include "sdebayes/time_grid.hpp"

namespace sdebayes {

/// Euler-Maruyama with left-endpoint drift/diffusion evaluation:
///   X_{k+1} = X_k + phi(t_k) b(t_k, X_k) dt + sigma(t_k, X_k) sqrt(dt) eps_k,
/// eps_k iid standard normal from the seeded generator. Deterministic given
/// (model, covs, x0, grid, seed). Throws with the step index if the state
/// leaves the finite range mid-simulation.
SamplePath euler_maruyama(const ModelSpec& model, const CovariateSet& covs, double x0,
                          const TimeGrid& grid, std::uint64_t seed);

/// One covariate SDE dz = b(z) dt + sigma dW, simulated with phi == 1.
struct CovariateSde {
    DriftSpec drift;
    DiffusionSpec diffusion = DiffusionSpec::constant(1.0);
    double z0 = 0.0;
};

/// Simulates p covariate trajectories with mutually independent noise
/// streams derived from `seed` (stream l for covariate l). Identity links.
CovariateSet simulate_covariates(const std::vector<CovariateSde>& sdes, const TimeGrid& grid,
                                 std::uint64_t seed);

}  // namespace sdebayes
