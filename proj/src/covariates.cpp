#include "sdebayes/covariates.hpp"

#include <cmath>

#include "sdebayes/math_util.hpp"

namespace sdebayes {

CovariateSet standardize(const CovariateSet& covs) {
    std::vector<std::vector<double>> out;
    std::vector<Link> links;
    out.reserve(covs.p());
    for (int l = 0; l < covs.p(); ++l) {
        const auto& s = covs.series(l);
        double m = mean(s);
        double v = population_variance(s);
        if (!(v > 0.0))
            throw std::invalid_argument("standardize: covariate series z" + std::to_string(l + 1) +
                                        " has zero variance");
        double inv_sd = 1.0 / std::sqrt(v);
        std::vector<double> t(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) t[k] = (s[k] - m) * inv_sd;
        out.push_back(std::move(t));
        links.push_back(covs.link(l));
    }
    return CovariateSet(covs.grid(), std::move(out), std::move(links), /*standardized=*/true);
}

}  // namespace sdebayes
