#include "quant/quantizer.hpp"

#include <algorithm>
#include <cmath>

namespace quant {

namespace {

constexpr double kSpanTol = 1e-12;

void require_covers(const IntervalQuantizer& q, const Density& d)
{
    if (!d.support().within(q.span(), kSpanTol)) {
        throw InvalidArgument("quantizer span does not cover the density support");
    }
}

// Integral over [u, v] of w(x) f(x) where w is evaluated in closed form on
// constant pieces by `closed(u, v, height)` and pointwise by `point(x)`.
template <class Closed, class Point>
double integrate_weighted(const Density& d, double u, double v, Closed&& closed, Point&& point)
{
    const Interval sup = d.support();
    u = std::max(u, sup.lo);
    v = std::min(v, sup.hi);
    if (!(v > u)) {
        return 0.0;
    }
    double total = 0.0;
    if (const auto* pc = d.piecewise()) {
        const auto b = pc->breakpoints();
        const auto h = pc->heights();
        for (std::size_t k = pc->piece_of(u); k < h.size() && b[k] < v; ++k) {
            const double lo = std::max(u, b[k]);
            const double hi = std::min(v, b[k + 1]);
            if (hi > lo) {
                total += closed(lo, hi, h[k]);
            }
        }
        return total;
    }
    const auto bps = d.breakpoints();
    std::vector<double> cuts{u, v};
    for (double b : bps) {
        if (b > u && b < v) {
            cuts.push_back(b);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += integrate([&](double x) { return point(x) * d.pdf(x); }, cuts[i], cuts[i + 1],
                           d.quadrature());
    }
    return total;
}

// Distortion of a single cell [u, v] with codepoint c.
double cell_distortion(const Density& d, double u, double v, double c, double r)
{
    auto closed = [&](double lo, double hi, double h) { return h * abs_power_integral(lo, hi, c, r); };
    auto point = [&](double x) { return std::pow(std::abs(x - c), r); };
    if (c > u && c < v) {
        return integrate_weighted(d, u, c, closed, point) + integrate_weighted(d, c, v, closed, point);
    }
    return integrate_weighted(d, u, v, closed, point);
}

} // namespace

IntervalQuantizer::IntervalQuantizer(std::vector<double> boundaries, std::vector<double> codepoints)
    : boundaries_(std::move(boundaries)), codepoints_(std::move(codepoints))
{
    if (codepoints_.empty() || boundaries_.size() != codepoints_.size() + 1) {
        throw InvalidArgument("quantizer needs N >= 1 codepoints and N + 1 boundaries");
    }
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (!std::isfinite(boundaries_[i])) {
            throw InvalidArgument("quantizer boundaries must be finite");
        }
        if (i > 0 && !(boundaries_[i] > boundaries_[i - 1])) {
            throw InvalidArgument("quantizer boundaries must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < codepoints_.size(); ++i) {
        if (!(codepoints_[i] >= boundaries_[i] && codepoints_[i] <= boundaries_[i + 1])) {
            throw InvalidArgument("codepoint outside the closure of its cell");
        }
    }
}

std::size_t IntervalQuantizer::cell_index(double x) const
{
    if (!(x >= boundaries_.front() && x <= boundaries_.back())) {
        throw InvalidArgument("point outside the quantizer span");
    }
    const auto first = boundaries_.begin() + 1;
    const auto it = std::lower_bound(first, boundaries_.end(), x);
    return std::min(static_cast<std::size_t>(it - first), codepoints_.size() - 1);
}

ProbVector cell_masses(const IntervalQuantizer& q, const Density& d)
{
    require_covers(q, d);
    const auto b = q.boundaries();
    const std::size_t n = q.levels();
    std::vector<double> masses(n);
    if (d.piecewise()) {
        // Direct overlaps avoid cancellation between nearby cdf values on small cells.
        auto length = [](double lo, double hi, double h) { return h * (hi - lo); };
        auto never = [](double) { return 0.0; };
        for (std::size_t i = 0; i < n; ++i) {
            const double lo = i == 0 ? -HUGE_VAL : b[i];
            const double hi = i + 1 == n ? HUGE_VAL : b[i + 1];
            masses[i] = std::min(1.0, integrate_weighted(d, lo, hi, length, never));
        }
        return ProbVector(std::move(masses));
    }
    // The end cells absorb any mass left outside the span by the support slack.
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double next = (i + 1 == n) ? 1.0 : d.cdf(b[i + 1]);
        masses[i] = std::max(0.0, next - prev);
        prev = next;
    }
    return ProbVector(std::move(masses));
}

double quantizer_entropy(const IntervalQuantizer& q, const Density& d, RenyiOrder alpha)
{
    return renyi_entropy(cell_masses(q, d), alpha);
}

double abs_power_integral(double u, double v, double c, double r)
{
    const double e = r + 1.0;
    if (c <= u) {
        return (std::pow(v - c, e) - std::pow(u - c, e)) / e;
    }
    if (c >= v) {
        return (std::pow(c - u, e) - std::pow(c - v, e)) / e;
    }
    return (std::pow(c - u, e) + std::pow(v - c, e)) / e;
}

double distortion(const IntervalQuantizer& q, const Density& d, DistortionExponent r)
{
    require_covers(q, d);
    const auto b = q.boundaries();
    const auto c = q.codepoints();
    const double rv = r.value();
    const Interval sup = d.support();
    double total = 0.0;
    for (std::size_t i = 0; i < q.levels(); ++i) {
        if (b[i + 1] <= sup.lo || b[i] >= sup.hi) {
            continue;
        }
        total += cell_distortion(d, b[i], b[i + 1], c[i], rv);
    }
    return total;
}

double optimal_codepoint(Interval cell, const Density& d, DistortionExponent r)
{
    const double mass_lo = d.cdf(cell.lo);
    const double mass = d.cdf(cell.hi) - mass_lo;
    if (!(mass > 0.0)) {
        throw InvalidArgument("optimal codepoint undefined for a zero-mass cell");
    }
    const double rv = r.value();
    if (rv == 2.0) {
        auto closed = [](double lo, double hi, double h) { return h * 0.5 * (hi * hi - lo * lo); };
        auto point = [](double x) { return x; };
        const double mean = integrate_weighted(d, cell.lo, cell.hi, closed, point) / mass;
        return std::clamp(mean, cell.lo, cell.hi);
    }
    if (rv == 1.0) {
        return std::clamp(d.quantile(std::min(1.0, mass_lo + 0.5 * mass)), cell.lo, cell.hi);
    }
    // Stationarity residual: left moment minus right moment, nondecreasing in a.
    auto residual = [&](double a) {
        const double e = rv - 1.0;
        auto left_closed = [&](double lo, double hi, double h) {
            return h * (std::pow(a - lo, rv) - std::pow(a - hi, rv)) / rv;
        };
        auto right_closed = [&](double lo, double hi, double h) {
            return h * (std::pow(hi - a, rv) - std::pow(lo - a, rv)) / rv;
        };
        auto left_point = [&](double x) { return std::pow(a - x, e); };
        auto right_point = [&](double x) { return std::pow(x - a, e); };
        return integrate_weighted(d, cell.lo, a, left_closed, left_point)
             - integrate_weighted(d, a, cell.hi, right_closed, right_point);
    };
    return bisect_increasing(residual, cell.lo, cell.hi, 1e-13 * cell.length());
}

IntervalQuantizer improve_codepoints(const IntervalQuantizer& q, const Density& d,
                                     DistortionExponent r)
{
    const auto b = q.boundaries();
    std::vector<double> c(q.codepoints().begin(), q.codepoints().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Interval cell = q.cell(i);
        if (d.cdf(cell.hi) - d.cdf(cell.lo) > 0.0) {
            c[i] = optimal_codepoint(cell, d, r);
        }
    }
    return {std::vector<double>(b.begin(), b.end()), std::move(c)};
}

IntervalQuantizer uniform_quantizer(Interval span, std::size_t levels)
{
    if (levels == 0) {
        throw InvalidArgument("uniform quantizer needs at least one level");
    }
    std::vector<double> b(levels + 1);
    std::vector<double> c(levels);
    const double width = span.length();
    for (std::size_t i = 0; i <= levels; ++i) {
        b[i] = span.lo + width * (double(i) / double(levels));
    }
    b.front() = span.lo;
    b.back() = span.hi;
    for (std::size_t i = 0; i < levels; ++i) {
        c[i] = 0.5 * (b[i] + b[i + 1]);
    }
    return {std::move(b), std::move(c)};
}

IntervalQuantizer transform_quantizer(const IntervalQuantizer& q, double scale, double shift,
                                      bool reflect)
{
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw InvalidArgument("similarity scale must be positive");
    }
    const double sign = reflect ? -1.0 : 1.0;
    std::vector<double> b;
    std::vector<double> c;
    for (double x : q.boundaries()) {
        b.push_back(sign * scale * x + shift);
    }
    for (double x : q.codepoints()) {
        c.push_back(sign * scale * x + shift);
    }
    if (reflect) {
        std::reverse(b.begin(), b.end());
        std::reverse(c.begin(), c.end());
    }
    return {std::move(b), std::move(c)};
}

} // namespace quant
