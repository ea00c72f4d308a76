#pragma once

#include <atomic>
#include <cstdint>

#include "mdraw/grid.hpp"
#include "mdraw/rng.hpp"

namespace mdraw {

/// Diagnostics shared by samplers; counters only, never exceptions.
struct SamplerCounters {
    std::atomic<std::uint64_t> meander_resampled{0};
    std::atomic<std::uint64_t> imhof_rejected{0};
};

struct MeanderOptions {
    /// Resolution of the internal Brownian path the meander is carved from.
    std::size_t internal_steps = std::size_t{1} << 14;
    /// Resample when the post-zero segment spans fewer internal cells than
    /// this. The meander is independent of the last zero, so the thinning
    /// leaves the meander law unchanged while removing degenerate few-node
    /// reconstructions whose drawdown collapses to ~0.
    std::size_t min_tail_cells = 256;
};

/// Standard Brownian motion from `start`; increments are exact Gaussians,
/// so the law at the grid nodes carries no discretization error.
GridPath sample_bm(RngStream stream, const GridSpec& grid, double start);

/// Brownian meander on [0,1] built from the last zero of an internal
/// Brownian path: locate the last sign-change cell, place the zero by
/// linear interpolation, rescale |W| after it onto the requested grid.
GridPath sample_meander_lastzero(RngStream stream, const GridSpec& grid,
                                 const MeanderOptions& opts = {},
                                 SamplerCounters* counters = nullptr);

/// Three-dimensional Bessel process from 0 (modulus of a 3D Brownian
/// motion); exact in law at the grid nodes.
GridPath sample_bes3(RngStream stream, const GridSpec& grid);

/// Four-dimensional squared Bessel process (squared modulus of a 4D
/// Brownian motion); coordinate 1 starts at sqrt(start), the others at 0.
GridPath sample_besq4(RngStream stream, const GridSpec& grid, double start);

/// BES(3) path together with the weight sqrt(pi/2)/R(1). Averaging any
/// functional with these weights estimates the same functional of the
/// meander. Replicates with R(1) = 0 at machine precision are resampled.
WeightedPath sample_meander_imhof(RngStream stream, const GridSpec& grid,
                                  SamplerCounters* counters = nullptr);

}  // namespace mdraw
