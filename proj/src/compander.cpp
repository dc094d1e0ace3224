#include "quant/compander.hpp"

#include <algorithm>
#include <cmath>

#include "quant/entropy.hpp"

namespace quant {

namespace {

std::vector<double> expand_boundaries(const Compander& c, std::size_t levels)
{
    if (levels == 0) {
        throw InvalidArgument("companding quantizer needs at least one level");
    }
    std::vector<double> b(levels + 1);
    const double n = double(levels);
    for (std::size_t i = 0; i <= levels; ++i) {
        b[i] = c.expand(double(i) / n);
    }
    b.front() = c.support().lo;
    b.back() = c.support().hi;
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (!(b[i] > b[i - 1])) {
            throw NumericalError("expander produced non-increasing boundaries");
        }
    }
    return b;
}

void require_nested(const Density& f, const Density& g)
{
    if (!f.support().within(g.support())) {
        throw InvalidArgument("source support must lie inside the point-density support");
    }
}

} // namespace

Compander::Compander(Density point_density) : g_(std::move(point_density))
{
    if (!(ess_bounds(g_).inf > 0.0)) {
        throw InvalidArgument("point density must be bounded away from zero on its support");
    }
}

IntervalQuantizer compand_build(const Compander& c, std::size_t levels)
{
    std::vector<double> b = expand_boundaries(c, levels);
    std::vector<double> q(levels);
    const double two_n = 2.0 * double(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        q[i] = std::clamp(c.expand(double(2 * i + 1) / two_n), b[i], b[i + 1]);
    }
    return {std::move(b), std::move(q)};
}

IntervalQuantizer midpoint_variant(const Compander& c, std::size_t levels)
{
    std::vector<double> b = expand_boundaries(c, levels);
    std::vector<double> q(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        q[i] = 0.5 * (b[i] + b[i + 1]);
    }
    return {std::move(b), std::move(q)};
}

double bennett_functional(const Density& f, const Density& g, DistortionExponent r)
{
    require_nested(f, g);
    if (!(ess_bounds(g).inf > 0.0)) {
        throw InvalidArgument("Bennett integral needs ess inf g > 0");
    }
    const double rv = r.value();
    const Interval fs = f.support();
    const Interval over(std::max(fs.lo, g.support().lo), std::min(fs.hi, g.support().hi));
    const double integral = integrate_pair(f, g, over, [rv](double fv, double gv) {
        return gv > 0.0 ? fv / std::pow(gv, rv) : 0.0;
    });
    return distortion_constant(r) * integral;
}

double entropy_offset(const Density& f, const Density& g, RenyiOrder alpha)
{
    return -relative_entropy(f, g, alpha);
}

Density compressed_density(const Density& f, const Compander& c)
{
    const Density& g = c.point_density();
    require_nested(f, g);
    const Interval fs = f.support();
    const Interval over(std::max(fs.lo, g.support().lo), std::min(fs.hi, g.support().hi));

    if (f.piecewise() && g.piecewise()) {
        std::vector<double> bps;
        std::vector<double> heights;
        for (const CommonPiece& p : common_pieces(f, g, over)) {
            if (bps.empty()) {
                bps.push_back(c.compress(p.lo));
            }
            const double y = c.compress(p.hi);
            if (!(y > bps.back())) {
                continue;
            }
            bps.push_back(y);
            heights.push_back(p.f_value / p.g_value);
        }
        bps.front() = std::max(bps.front(), 0.0);
        bps.back() = std::min(bps.back(), 1.0);
        return PiecewiseConstantDensity(std::move(bps), std::move(heights));
    }

    std::vector<double> interior;
    for (double b : g.breakpoints()) {
        interior.push_back(c.compress(b));
    }
    for (double b : f.breakpoints()) {
        interior.push_back(c.compress(b));
    }
    const Interval image(c.compress(over.lo), c.compress(over.hi));
    Compander expander = c;
    return SmoothDensity(
        [f, expander](double y) {
            const double x = expander.expand(std::clamp(y, 0.0, 1.0));
            const double gv = expander.point_density().pdf(x);
            return gv > 0.0 ? f.pdf(x) / gv : 0.0;
        },
        image, std::move(interior));
}

} // namespace quant
