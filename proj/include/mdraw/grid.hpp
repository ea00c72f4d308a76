#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mdraw {

/// Uniform time grid t_k = k*horizon/steps, k = 0..steps.
struct GridSpec {
    double horizon;
    std::size_t steps;

    GridSpec(double horizon_, std::size_t steps_) : horizon(horizon_), steps(steps_) {
        if (!(horizon > 0.0) || !std::isfinite(horizon)) {
            throw std::invalid_argument("GridSpec: horizon must be positive and finite");
        }
        if (steps < 2) {
            throw std::invalid_argument("GridSpec: steps must be >= 2");
        }
    }

    double step() const { return horizon / static_cast<double>(steps); }
    double time(std::size_t k) const {
        return horizon * (static_cast<double>(k) / static_cast<double>(steps));
    }
    std::size_t nodes() const { return steps + 1; }

    bool operator==(const GridSpec&) const = default;
};

/// A trajectory sampled on a uniform grid; values.size() == grid.nodes().
struct GridPath {
    GridSpec grid;
    std::vector<double> values;
};

/// A path plus a positive importance weight (Radon-Nikodym factor).
struct WeightedPath {
    GridPath path;
    double weight;
};

inline void check_path(const GridPath& p, const char* where) {
    if (p.values.size() != p.grid.nodes()) {
        throw std::invalid_argument(std::string(where) + ": values length != steps+1");
    }
}

/// Linear interpolation of a grid path at time t, clamped to [0, horizon].
inline double interp_at(const GridPath& p, double t) {
    const double h = p.grid.step();
    if (t <= 0.0) return p.values.front();
    if (t >= p.grid.horizon) return p.values.back();
    double idx = t / h;
    auto k = static_cast<std::size_t>(idx);
    if (k >= p.grid.steps) k = p.grid.steps - 1;
    const double w = idx - static_cast<double>(k);
    return p.values[k] * (1.0 - w) + p.values[k + 1] * w;
}

}  // namespace mdraw
