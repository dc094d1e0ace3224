#include "quant/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quant/entropy.hpp"

namespace quant {

namespace {

constexpr double kIntegerSnap = 1e-9;

void require_below_1pr(RenyiOrder alpha, DistortionExponent r)
{
    require_off_shannon_seam(alpha);
    if (alpha.is_pos_infinity() || (alpha.is_finite() && alpha.value() >= 1.0 + r.value())) {
        throw RegimeError("order must be below 1 + r for this operation");
    }
}

// floor(e^rate), snapping values within kIntegerSnap of an integer.
std::size_t level_count(double rate)
{
    const double e = std::exp(rate);
    const double nearest = std::round(e);
    if (std::abs(e - nearest) <= kIntegerSnap) {
        return static_cast<std::size_t>(nearest);
    }
    return static_cast<std::size_t>(std::floor(e));
}

} // namespace

std::string to_string(LimitRegime regime)
{
    switch (regime) {
    case LimitRegime::FiniteAlphaBelow1pr:
        return "finite_alpha_below_1pr";
    case LimitRegime::Shannon:
        return "shannon";
    case LimitRegime::NegInfinity:
        return "neg_infinity";
    case LimitRegime::HighAlpha:
        return "high_alpha";
    }
    return "unknown";
}

Density optimal_point_density(const Density& f, RenyiOrder alpha, DistortionExponent r)
{
    require_below_1pr(alpha, r);
    if (!(ess_bounds(f).inf > 0.0)) {
        throw InvalidArgument("optimal point density needs ess inf f > 0");
    }
    if (alpha.is_neg_infinity()) {
        return f;
    }
    const Interval sup = f.support();
    if (alpha.value() == 1.0) {
        return uniform_density(sup.lo, sup.hi);
    }
    const double p = 1.0 / exponents(alpha, r).a2;
    if (const auto* pc = f.piecewise()) {
        const auto h = pc->heights();
        const auto b = pc->breakpoints();
        std::vector<double> masses(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) {
            masses[i] = std::pow(h[i], p) * (b[i + 1] - b[i]);
        }
        return PiecewiseConstantDensity::from_masses({b.begin(), b.end()}, masses);
    }
    const SmoothDensity& s = *f.smooth();
    std::optional<EssBounds> eb;
    if (s.declared_ess_bounds()) {
        eb = EssBounds{std::pow(s.declared_ess_bounds()->inf, p),
                       std::pow(s.declared_ess_bounds()->sup, p)};
    }
    auto bps = s.breakpoints();
    return SmoothDensity([s, p](double x) { return std::pow(s.pdf(x), p); }, sup,
                         {bps.begin(), bps.end()}, s.quadrature(), eb, s.weakly_unimodal());
}

PredictedLimit predicted_limit(const Density& f, RenyiOrder alpha, DistortionExponent r)
{
    require_below_1pr(alpha, r);
    const double c = distortion_constant(r);
    const double rv = r.value();
    if (alpha.is_neg_infinity()) {
        return {c * power_integral(f, 1.0 - rv), LimitRegime::NegInfinity, rv};
    }
    if (alpha.value() == 1.0) {
        return {c * std::exp(-rv * log_integral(f)), LimitRegime::Shannon, rv};
    }
    const ExponentPair e = exponents(alpha, r);
    return {c * std::pow(power_integral(f, e.a1), e.a2), LimitRegime::FiniteAlphaBelow1pr, rv};
}

PredictedLimit predicted_limit_high_alpha(const Density& f, RenyiOrder alpha,
                                          DistortionExponent r)
{
    const double rv = r.value();
    if (alpha.is_neg_infinity() || (alpha.is_finite() && alpha.value() < 1.0 + rv)) {
        throw RegimeError("high-order limit requires alpha >= 1 + r");
    }
    const double sup = ess_bounds(f).sup;
    if (!std::isfinite(sup)) {
        throw RegimeError("high-order limit needs ess sup f < inf");
    }
    const double beta = alpha.is_pos_infinity() ? 1.0 : (alpha.value() - 1.0) / alpha.value();
    return {distortion_constant(r) * std::pow(sup, -rv), LimitRegime::HighAlpha,
            (1.0 + rv) * beta};
}

PredictedLimit predict(const Density& f, RenyiOrder alpha, DistortionExponent r)
{
    if (alpha.is_pos_infinity() || (alpha.is_finite() && alpha.value() >= 1.0 + r.value())) {
        return predicted_limit_high_alpha(f, alpha, r);
    }
    return predicted_limit(f, alpha, r);
}

IntervalQuantizer design_compander(const Density& f, RenyiOrder alpha, DistortionExponent r,
                                   std::size_t levels)
{
    return compand_build(Compander(optimal_point_density(f, alpha, r)), levels);
}

IntervalQuantizer uniform_optimal(Interval span, RenyiOrder alpha, double rate,
                                  DistortionExponent r)
{
    require_below_1pr(alpha, r);
    if (!(r.value() > 1.0)) {
        throw RegimeError("uniform-source optimal quantizers are characterized for r > 1");
    }
    if (!(rate >= 0.0) || !std::isfinite(rate)) {
        throw InvalidArgument("rate must be finite and nonnegative");
    }
    const std::size_t whole = level_count(rate);
    if (alpha <= RenyiOrder::finite(0.0) || std::abs(std::log(double(whole)) - rate) <= kIntegerSnap
        || whole == 0) {
        return uniform_quantizer(span, std::max<std::size_t>(whole, 1));
    }

    // rate lies strictly inside (log n, log(n + 1)): n cells of length h and
    // one rightmost cell of length h0 in (0, |I|/(n+1)).
    const std::size_t n = whole;
    const double width = span.length();
    auto entropy_at = [&](double h0) {
        const double p0 = h0 / width;
        const double p = (1.0 - p0) / double(n);
        std::vector<double> masses(n, p);
        masses.push_back(p0);
        return renyi_entropy(ProbVector(std::move(masses)), alpha);
    };
    const double upper = width / double(n + 1);
    const double tol = 1e-13 * width;
    // Bisect in log h0: for small alpha the root can sit many decades below upper.
    const double log_lo = std::log(std::numeric_limits<double>::min() * width);
    double h0 = std::exp(bisect_increasing(
        [&](double x) { return entropy_at(std::exp(x)) - rate; }, log_lo, std::log(upper), 0.0));
    h0 = std::min(h0, upper);

    // Runtime monotonicity guard: fall back to a grid search plus refinement.
    if (std::abs(entropy_at(h0) - rate) > 1e-10) {
        constexpr int kGrid = 4096;
        double best = h0;
        double best_gap = std::abs(entropy_at(h0) - rate);
        for (int k = 1; k <= kGrid; ++k) {
            const double x = upper * double(k) / kGrid;
            const double gap = std::abs(entropy_at(x) - rate);
            if (gap < best_gap) {
                best_gap = gap;
                best = x;
            }
        }
        const double lo = std::max(0.0, best - upper / kGrid);
        const double hi = std::min(upper, best + upper / kGrid);
        h0 = bisect_increasing([&](double x) { return entropy_at(x) - rate; }, lo, hi, tol);
        if (std::abs(entropy_at(h0) - rate) > 1e-10) {
            throw NumericalError("could not meet the entropy constraint with equality");
        }
    }

    const double h = (width - h0) / double(n);
    std::vector<double> b(n + 2);
    for (std::size_t i = 0; i <= n; ++i) {
        b[i] = span.lo + h * double(i);
    }
    b[n + 1] = span.hi;
    std::vector<double> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = 0.5 * (b[i] + b[i + 1]);
    }
    return {std::move(b), std::move(c)};
}

double pierce_upper_bound(const Density& f, DistortionExponent r, double rate)
{
    const double inf = ess_bounds(f).inf;
    if (!(inf > 0.0)) {
        throw InvalidArgument("Pierce bound needs ess inf f > 0");
    }
    const double rv = r.value();
    return std::pow(2.0 / inf, rv) * std::exp(-rv * rate);
}

double compander_score(const Density& f, const Density& g, RenyiOrder alpha,
                       DistortionExponent r)
{
    if (!alpha.is_finite() || !(alpha.value() < 1.0)) {
        throw RegimeError("compander score is defined here for finite alpha < 1");
    }
    const double a = alpha.value();
    const double rv = r.value();
    const Interval fs = f.support();
    if (!fs.within(g.support())) {
        throw InvalidArgument("source support must lie inside the point-density support");
    }
    const Interval over(std::max(fs.lo, g.support().lo), std::min(fs.hi, g.support().hi));
    const double overlap = integrate_pair(f, g, over, [a](double fv, double gv) {
        return fv > 0.0 ? std::pow(fv, a) * std::pow(gv, 1.0 - a) : 0.0;
    });
    const double bennett = integrate_pair(f, g, over, [rv](double fv, double gv) {
        return fv > 0.0 ? fv * std::pow(gv, -rv) : 0.0;
    });
    return std::pow(overlap, rv / (1.0 - a)) * bennett;
}

} // namespace quant
