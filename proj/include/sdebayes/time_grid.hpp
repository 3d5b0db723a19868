#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdebayes {

/// Uniform time grid t0 + k*dt, k = 0..n_steps.
struct TimeGrid {
    double t0 = 0.0;
    double t_end = 1.0;
    int n_steps = 1;

    TimeGrid() = default;
    TimeGrid(double t0_, double t_end_, int n_steps_) : t0(t0_), t_end(t_end_), n_steps(n_steps_) {
        if (!(t_end > t0)) throw std::invalid_argument("TimeGrid: t_end must exceed t0");
        if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
        if (!std::isfinite(t0) || !std::isfinite(t_end))
            throw std::invalid_argument("TimeGrid: endpoints must be finite");
    }

    double dt() const { return (t_end - t0) / n_steps; }
    double time(int k) const { return t0 + k * dt(); }
    int n_points() const { return n_steps + 1; }
    double span() const { return t_end - t0; }

    bool operator==(const TimeGrid& o) const {
        return t0 == o.t0 && t_end == o.t_end && n_steps == o.n_steps;
    }
};

/// One individual's discretized process realization on a uniform grid.
struct SamplePath {
    TimeGrid grid;
    std::vector<double> values;  // length n_steps + 1, values[0] is the initial value

    SamplePath() = default;
    SamplePath(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid.n_points())
            throw std::invalid_argument("SamplePath: need n_steps + 1 values, got " +
                                        std::to_string(values.size()));
        for (std::size_t k = 0; k < values.size(); ++k)
            if (!std::isfinite(values[k]))
                throw std::invalid_argument("SamplePath: non-finite value at index " +
                                            std::to_string(k));
    }

    double x0() const { return values.front(); }
    int n_steps() const { return grid.n_steps; }
};

}  // namespace sdebayes
