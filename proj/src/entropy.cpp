#include "quant/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quant {

namespace {

constexpr double kSumTol = 1e-12;

} // namespace

ProbVector::ProbVector(std::vector<double> weights) : weights_(std::move(weights))
{
    if (weights_.empty()) {
        throw InvalidArgument("probability vector must not be empty");
    }
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw InvalidArgument("probability entries must lie in [0, 1]");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kSumTol) {
        throw InvalidArgument("probability vector must sum to one");
    }
}

void require_off_shannon_seam(RenyiOrder alpha)
{
    if (alpha.is_finite() && alpha.value() != 1.0 && alpha.is_shannon()) {
        throw RegimeError("order within the Shannon exclusion window; pass alpha = 1 exactly");
    }
}

double renyi_entropy(const ProbVector& p, RenyiOrder alpha)
{
    require_off_shannon_seam(alpha);
    const auto w = p.weights();
    if (alpha.is_pos_infinity()) {
        return -std::log(*std::max_element(w.begin(), w.end()));
    }
    if (alpha.is_neg_infinity()) {
        double smallest = 1.0;
        for (double x : w) {
            if (x > 0.0) {
                smallest = std::min(smallest, x);
            }
        }
        return -std::log(smallest);
    }
    const double a = alpha.value();
    if (a == 1.0) {
        double h = 0.0;
        for (double x : w) {
            if (x > 0.0) {
                h -= x * std::log(x);
            }
        }
        return std::max(h, 0.0);
    }
    // log sum p^a via log-sum-exp over the positive entries.
    double peak = -std::numeric_limits<double>::infinity();
    for (double x : w) {
        if (x > 0.0) {
            peak = std::max(peak, a * std::log(x));
        }
    }
    double sum = 0.0;
    for (double x : w) {
        if (x > 0.0) {
            sum += std::exp(a * std::log(x) - peak);
        }
    }
    const double h = (peak + std::log(sum)) / (1.0 - a);
    return std::max(h, 0.0);
}

double differential_entropy(const Density& d, RenyiOrder alpha)
{
    require_off_shannon_seam(alpha);
    if (alpha.is_pos_infinity()) {
        const double sup = ess_bounds(d).sup;
        if (!std::isfinite(sup)) {
            throw RegimeError("differential entropy at +inf needs a bounded density");
        }
        return -std::log(sup);
    }
    if (alpha.is_neg_infinity()) {
        const double inf = ess_bounds(d).inf;
        if (!(inf > 0.0)) {
            throw RegimeError("differential entropy at -inf needs ess inf f > 0");
        }
        return -std::log(inf);
    }
    const double a = alpha.value();
    if (a == 1.0) {
        return -log_integral(d);
    }
    if (a < 0.0 && !(ess_bounds(d).inf > 0.0)) {
        throw RegimeError("negative order needs ess inf f > 0");
    }
    const double integral = power_integral(d, a);
    if (!(integral > 0.0) || !std::isfinite(integral)) {
        throw NumericalError("power integral of the density diverges");
    }
    return std::log(integral) / (1.0 - a);
}

double relative_entropy(const Density& f, const Density& g, RenyiOrder alpha)
{
    require_off_shannon_seam(alpha);
    const Interval fs = f.support();
    if (!fs.within(g.support())) {
        throw InvalidArgument("relative entropy needs supp f inside supp g");
    }
    // Integrate over the part of supp f that lies in supp g; the slack allowed
    // by within() carries no mass of g.
    const Interval over(std::max(fs.lo, g.support().lo), std::min(fs.hi, g.support().hi));

    if (!alpha.is_finite()) {
        const EssBounds rb = ratio_bounds(f, g, over);
        if (alpha.is_pos_infinity()) {
            if (!std::isfinite(rb.sup)) {
                throw InvalidArgument("f/g is unbounded: g vanishes where f does not");
            }
            return std::log(rb.sup);
        }
        if (!(rb.inf > 0.0)) {
            throw RegimeError("relative entropy at -inf needs ess inf f/g > 0");
        }
        return std::log(rb.inf);
    }

    bool support_violation = false;
    const double a = alpha.value();
    double integral;
    if (a == 1.0) {
        integral = integrate_pair(f, g, over, [&](double fv, double gv) {
            if (fv <= 0.0) {
                return 0.0;
            }
            if (gv <= 0.0) {
                support_violation = true;
                return 0.0;
            }
            return fv * std::log(fv / gv);
        });
    } else {
        integral = integrate_pair(f, g, over, [&](double fv, double gv) {
            if (fv <= 0.0) {
                return 0.0;
            }
            if (gv <= 0.0) {
                support_violation = true;
                return 0.0;
            }
            return std::pow(fv, a) * std::pow(gv, 1.0 - a);
        });
    }
    if (support_violation) {
        throw InvalidArgument("g vanishes on a set where f is positive");
    }
    if (!std::isfinite(integral)) {
        throw NumericalError("relative entropy integral diverges");
    }
    if (a == 1.0) {
        return integral;
    }
    if (!(integral > 0.0)) {
        throw NumericalError("relative entropy integral vanishes");
    }
    return std::log(integral) / (a - 1.0);
}

} // namespace quant
