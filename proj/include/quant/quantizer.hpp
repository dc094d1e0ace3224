#pragma once

#include <span>
#include <vector>

#include "quant/core.hpp"
#include "quant/density.hpp"
#include "quant/entropy.hpp"

namespace quant {

/// Quantizer with interval cells. Cell i is (b_{i-1}, b_i], except the first
/// cell which is closed at b_0. Codepoint i lies in the closure of cell i.
/// The quantizer is undefined outside [b_0, b_N].
class IntervalQuantizer {
  public:
    IntervalQuantizer(std::vector<double> boundaries, std::vector<double> codepoints);

    std::size_t levels() const { return codepoints_.size(); }
    std::span<const double> boundaries() const { return boundaries_; }
    std::span<const double> codepoints() const { return codepoints_; }
    Interval span() const { return {boundaries_.front(), boundaries_.back()}; }
    Interval cell(std::size_t i) const { return {boundaries_[i], boundaries_[i + 1]}; }

    std::size_t cell_index(double x) const;
    double operator()(double x) const { return codepoints_[cell_index(x)]; }

    friend bool operator==(const IntervalQuantizer&, const IntervalQuantizer&) = default;

  private:
    std::vector<double> boundaries_;
    std::vector<double> codepoints_;
};

inline double quantize(const IntervalQuantizer& q, double x)
{
    return q(x);
}

/// Masses mu(S_i) of the cells.
ProbVector cell_masses(const IntervalQuantizer& q, const Density& d);

double quantizer_entropy(const IntervalQuantizer& q, const Density& d, RenyiOrder alpha);

/// E|X - q(X)|^r. Closed form for piecewise-constant densities.
double distortion(const IntervalQuantizer& q, const Density& d, DistortionExponent r);

/// Integral of |x - c|^r over [u, v].
double abs_power_integral(double u, double v, double c, double r);

/// Codepoint a in the cell minimizing E[|X - a|^r ; X in cell]: the conditional
/// mean for r = 2, the conditional median for r = 1, and otherwise the root of
/// int_{x<a} (a-x)^{r-1} dmu = int_{x>a} (x-a)^{r-1} dmu.
double optimal_codepoint(Interval cell, const Density& d, DistortionExponent r);

/// Same boundaries, each codepoint replaced by optimal_codepoint. Cells with
/// zero mass keep their codepoint.
IntervalQuantizer improve_codepoints(const IntervalQuantizer& q, const Density& d,
                                     DistortionExponent r);

/// N equal cells over `span` with midpoint codepoints.
IntervalQuantizer uniform_quantizer(Interval span, std::size_t levels);

/// T o q o T^{-1} for T(x) = c x + t (or -c x + t when `reflect`).
IntervalQuantizer transform_quantizer(const IntervalQuantizer& q, double scale, double shift,
                                      bool reflect = false);

} // namespace quant
