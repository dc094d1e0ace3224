#pragma once

#include <span>
#include <vector>

#include "quant/core.hpp"
#include "quant/density.hpp"
#include "quant/quantizer.hpp"

namespace quant {

inline constexpr std::size_t kMaxGridPoints = 32;
inline constexpr std::size_t kMaxOracleCells = 8;

/// Discretized search space: contiguous unions of grid segments.
class GridInstance {
  public:
    GridInstance(PiecewiseConstantDensity density, std::vector<double> grid,
                 std::size_t max_cells);

    /// `points` equally spaced grid points over the support, merged with the
    /// density breakpoints.
    static GridInstance regular(PiecewiseConstantDensity density, std::size_t points,
                                std::size_t max_cells);

    const PiecewiseConstantDensity& density() const { return density_; }
    std::span<const double> grid() const { return grid_; }
    std::size_t max_cells() const { return max_cells_; }

    /// Exactly `points` grid points: each density piece is split evenly, with
    /// segment counts roughly proportional to piece length.
    static GridInstance subdivided(PiecewiseConstantDensity density, std::size_t points,
                                   std::size_t max_cells);

    /// Image under x -> c x + t of both grid and density.
    GridInstance transformed(double scale, double shift) const;

  private:
    PiecewiseConstantDensity density_;
    std::vector<double> grid_;
    std::size_t max_cells_;
};

struct OracleResult {
    double value;
    IntervalQuantizer argmin;
    std::size_t feasible_count;
};

/// Smallest distortion over all grid-aligned interval quantizers with at most
/// max_cells cells and H^alpha <= rate (+1e-12), each cell using its optimal
/// codepoint. Ties go to fewer cells, then the lexicographically smallest
/// boundary vector.
OracleResult brute_force_optimal(const GridInstance& inst, RenyiOrder alpha, double rate,
                                 DistortionExponent r);

std::vector<OracleResult> alpha_profile(const GridInstance& inst,
                                        std::span<const RenyiOrder> alphas, double rate,
                                        DistortionExponent r);

/// e^{rR} D^alpha(R) for each R.
std::vector<double> empirical_limit_probe(const GridInstance& inst, RenyiOrder alpha,
                                          DistortionExponent r, std::span<const double> rates);

} // namespace quant
