#include "sdebayes/model.hpp"

#include <span>

namespace sdebayes {

double phi_eval(const ModelSpec& model, const CovariateSet& covs, int k) {
    if (k < 0 || k >= covs.grid().n_points())
        throw std::out_of_range("phi_eval: grid index " + std::to_string(k) + " out of range");
    if (model.p() != covs.p())
        throw std::invalid_argument("phi_eval: mask length does not match covariate count");
    double phi = model.xi[0];
    int j = 0;
    for (int l = 0; l < model.p(); ++l) {
        if (model.mask[l]) phi += model.xi[1 + j++] * covs.g(l, k);
    }
    return phi;
}

double phi_from_g(std::span<const double> xi, std::span<const int> mask,
                  std::span<const double> g_row) {
    double phi = xi[0];
    std::size_t j = 0;
    for (std::size_t l = 0; l < mask.size(); ++l) {
        if (mask[l]) phi += xi[1 + j++] * g_row[l];
    }
    return phi;
}

}  // namespace sdebayes
