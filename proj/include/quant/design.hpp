#pragma once

#include <string>

#include "quant/compander.hpp"
#include "quant/core.hpp"
#include "quant/density.hpp"
#include "quant/quantizer.hpp"

namespace quant {

enum class LimitRegime { FiniteAlphaBelow1pr, Shannon, NegInfinity, HighAlpha };

std::string to_string(LimitRegime regime);

/// Predicted value of lim e^{rate_exponent * R} D^alpha(R).
struct PredictedLimit {
    double value;
    LimitRegime regime;
    double rate_exponent;
};

/// Point density minimizing the compander's asymptotic entropy-normalized
/// distortion: f^{1/a2} normalized for finite alpha != 1, uniform on the
/// support for alpha = 1, f itself for alpha = -inf.
Density optimal_point_density(const Density& f, RenyiOrder alpha, DistortionExponent r);

/// High-rate limit for alpha in [-inf, 1 + r).
PredictedLimit predicted_limit(const Density& f, RenyiOrder alpha, DistortionExponent r);

/// High-rate limit for alpha in [1 + r, +inf]: C(r) (ess sup f)^{-r} with rate
/// exponent (1 + r)(alpha - 1)/alpha.
PredictedLimit predicted_limit_high_alpha(const Density& f, RenyiOrder alpha,
                                          DistortionExponent r);

/// Dispatches on the regime of alpha.
PredictedLimit predict(const Density& f, RenyiOrder alpha, DistortionExponent r);

/// Companding quantizer over the optimal point density.
IntervalQuantizer design_compander(const Density& f, RenyiOrder alpha, DistortionExponent r,
                                   std::size_t levels);

/// Optimal quantizer of a uniform source on `span` under H^alpha <= rate.
/// alpha <= 0: floor(e^rate) equal cells. alpha in (0, 1 + r): n equal cells
/// and one shorter rightmost cell sized so the entropy equals the rate.
IntervalQuantizer uniform_optimal(Interval span, RenyiOrder alpha, double rate,
                                  DistortionExponent r);

/// (2 / ess inf f)^r e^{-r rate}, an upper bound on D^alpha(rate) for alpha < 0.
double pierce_upper_bound(const Density& f, DistortionExponent r, double rate);

/// Asymptotic compander score e^{-r D_alpha(f||g)} * int f g^{-r}; proportional
/// to the limit of e^{rH} D for Q_{g,N}. Finite alpha < 1 only.
double compander_score(const Density& f, const Density& g, RenyiOrder alpha,
                       DistortionExponent r);

} // namespace quant
