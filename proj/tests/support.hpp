#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "quant/density.hpp"

namespace quant::test {

/// 0.5 on [0, 0.5], 1.5 on [0.5, 1]: masses (0.25, 0.75) on equal halves.
inline PiecewiseConstantDensity two_mass()
{
    return PiecewiseConstantDensity({0.0, 0.5, 1.0}, {0.5, 1.5});
}

/// Three fixed piecewise densities used across suites.
inline std::vector<PiecewiseConstantDensity> piecewise_corpus()
{
    return {
        two_mass(),
        PiecewiseConstantDensity::from_masses({0.0, 0.25, 0.6, 1.0}, std::vector{0.2, 0.5, 0.3}),
        PiecewiseConstantDensity::from_masses({-1.0, -0.2, 0.5, 1.0, 2.0},
                                              std::vector{0.1, 0.4, 0.35, 0.15}),
    };
}

/// Random piecewise density with `pieces` segments on [lo, hi]; heights kept
/// within a factor `spread` of each other.
inline PiecewiseConstantDensity random_piecewise(std::mt19937_64& rng, std::size_t pieces,
                                                 double lo, double hi, double spread = 5.0)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> cuts{lo, hi};
    while (cuts.size() < pieces + 1) {
        const double x = lo + (hi - lo) * (0.05 + 0.9 * unit(rng));
        bool far = true;
        for (double c : cuts) {
            far = far && std::abs(c - x) > 1e-3 * (hi - lo);
        }
        if (far) {
            cuts.push_back(x);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> masses;
    for (std::size_t i = 0; i < pieces; ++i) {
        const double h = 1.0 + (spread - 1.0) * unit(rng);
        masses.push_back(h * (cuts[i + 1] - cuts[i]));
    }
    return PiecewiseConstantDensity::from_masses(std::move(cuts), masses);
}

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace quant::test
