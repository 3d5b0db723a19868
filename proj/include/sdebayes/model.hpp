#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdebayes/covariates.hpp"

namespace sdebayes {

/// Drift families b_beta(t, x).
///
/// LinearAffine:  b = beta[0] + beta[1] * x        (the (xi5 + xi6 X) form)
/// CklsDrift:     b = beta[0] + beta[1] * x        (CKLS theta1 + theta2 X)
/// ConstantRatio: b = beta[0] * sigma(t, x), i.e. b/sigma == eta(beta) = beta[0].
///   The family with constant drift-to-diffusion ratio; its likelihood
///   functionals have closed forms used by the asymptotic diagnostics.
enum class DriftFamily { LinearAffine, CklsDrift, ConstantRatio };

struct DriftSpec {
    DriftFamily family = DriftFamily::LinearAffine;
    std::vector<double> beta;

    static int arity(DriftFamily f) { return f == DriftFamily::ConstantRatio ? 1 : 2; }

    DriftSpec() = default;
    DriftSpec(DriftFamily f, std::vector<double> b) : family(f), beta(std::move(b)) {
        if (static_cast<int>(beta.size()) != arity(family))
            throw std::invalid_argument("DriftSpec: parameter arity mismatch");
        for (double v : beta)
            if (!std::isfinite(v)) throw std::invalid_argument("DriftSpec: non-finite beta");
    }

    /// eta(beta) for the constant-ratio family.
    double eta() const {
        if (family != DriftFamily::ConstantRatio)
            throw std::logic_error("DriftSpec::eta: only defined for the constant-ratio family");
        return beta[0];
    }
};

/// Diffusion families sigma(t, x): known constant sigma, or the CKLS power
/// form A * x^B.
enum class DiffusionFamily { Constant, CklsPower };

struct DiffusionSpec {
    DiffusionFamily family = DiffusionFamily::Constant;
    std::vector<double> params{1.0};

    static DiffusionSpec constant(double sigma) {
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw std::invalid_argument("DiffusionSpec: sigma must be positive and finite");
        DiffusionSpec d;
        d.family = DiffusionFamily::Constant;
        d.params = {sigma};
        return d;
    }
    static DiffusionSpec ckls_power(double a, double b) {
        if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("DiffusionSpec: need A > 0 and finite A, B");
        DiffusionSpec d;
        d.family = DiffusionFamily::CklsPower;
        d.params = {a, b};
        return d;
    }

    double sigma(double /*t*/, double x) const {
        switch (family) {
            case DiffusionFamily::Constant: return params[0];
            case DiffusionFamily::CklsPower: return params[0] * std::pow(x, params[1]);
        }
        throw std::logic_error("DiffusionSpec: bad family");
    }

    bool operator==(const DiffusionSpec& o) const {
        return family == o.family && params == o.params;
    }
};

/// Full model: drift family, covariate inclusion mask, xi coefficients of the
/// covariate factor phi, and the (shared, known) diffusion.
///
/// xi packs the intercept xi_0 followed by one coefficient per *included*
/// covariate, in mask order; masked-out covariates contribute exactly zero.
struct ModelSpec {
    DriftSpec drift;
    DiffusionSpec diffusion;
    std::vector<int> mask;    // length p, entries 0/1
    std::vector<double> xi;   // length 1 + popcount(mask)

    ModelSpec() : xi{1.0} {}
    ModelSpec(DriftSpec d, DiffusionSpec s, std::vector<int> mask_, std::vector<double> xi_)
        : drift(std::move(d)), diffusion(std::move(s)), mask(std::move(mask_)), xi(std::move(xi_)) {
        int inc = 0;
        for (int m : mask) {
            if (m != 0 && m != 1) throw std::invalid_argument("ModelSpec: mask entries must be 0/1");
            inc += m;
        }
        if (static_cast<int>(xi.size()) != 1 + inc)
            throw std::invalid_argument("ModelSpec: xi must have length 1 + popcount(mask)");
        for (double v : xi)
            if (!std::isfinite(v)) throw std::invalid_argument("ModelSpec: non-finite xi");
    }

    int p() const { return static_cast<int>(mask.size()); }
    int included() const { return static_cast<int>(xi.size()) - 1; }

    /// b_beta(t, x).
    double drift_b(double t, double x) const {
        switch (drift.family) {
            case DriftFamily::LinearAffine:
            case DriftFamily::CklsDrift: return drift.beta[0] + drift.beta[1] * x;
            case DriftFamily::ConstantRatio: return drift.beta[0] * diffusion.sigma(t, x);
        }
        throw std::logic_error("ModelSpec: bad drift family");
    }
};

/// Covariate drift factor phi(t_k) = xi_0 + sum over included l of
/// xi_l * g_l(z_l(t_k)).
double phi_eval(const ModelSpec& model, const CovariateSet& covs, int k);

/// phi from a precomputed row of link-transformed covariate values g[l].
double phi_from_g(std::span<const double> xi, std::span<const int> mask,
                  std::span<const double> g_row);

}  // namespace sdebayes
