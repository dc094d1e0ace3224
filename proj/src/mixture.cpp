#include "quant/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "quant/entropy.hpp"

namespace quant {

namespace {

constexpr double kWeightTol = 1e-12;
constexpr double kAbutTol = 1e-12;

void require_weights(std::span<const double> s)
{
    if (s.size() < 2) {
        throw InvalidArgument("mixture needs at least two components");
    }
    double total = 0.0;
    for (double w : s) {
        if (!(w > 0.0 && w < 1.0)) {
            throw InvalidArgument("mixture weights must lie in (0, 1)");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kWeightTol) {
        throw InvalidArgument("mixture weights must sum to one");
    }
}

double finite_alpha_below_1pr(RenyiOrder alpha, DistortionExponent r)
{
    if (!alpha.is_finite()) {
        throw RegimeError("allocation weights need a finite order");
    }
    require_off_shannon_seam(alpha);
    const double a = alpha.value();
    if (a == 1.0 || a >= 1.0 + r.value()) {
        throw RegimeError("allocation weights need alpha < 1 + r, alpha != 1");
    }
    return a;
}

} // namespace

MixtureSpec::MixtureSpec(std::vector<MixtureComponent> components)
    : components_(std::move(components))
{
    require_weights(weights());
    for (std::size_t i = 1; i < components_.size(); ++i) {
        const Interval prev = components_[i - 1].density.support();
        const Interval next = components_[i].density.support();
        const double tol = kAbutTol * (components_.back().density.support().hi
                                       - components_.front().density.support().lo);
        if (std::abs(prev.hi - next.lo) > tol) {
            throw InvalidArgument("component supports must abut in left-to-right order");
        }
    }
}

std::vector<double> MixtureSpec::weights() const
{
    std::vector<double> s;
    for (const auto& c : components_) {
        s.push_back(c.weight);
    }
    return s;
}

Interval MixtureSpec::support() const
{
    return {components_.front().density.support().lo, components_.back().density.support().hi};
}

Density MixtureSpec::density() const
{
    const bool all_piecewise = std::all_of(components_.begin(), components_.end(),
                                           [](const auto& c) { return c.density.piecewise(); });
    if (all_piecewise) {
        std::vector<double> bps;
        std::vector<double> heights;
        for (const auto& c : components_) {
            const auto* pc = c.density.piecewise();
            auto b = pc->breakpoints();
            if (bps.empty()) {
                bps.push_back(b.front());
            }
            for (std::size_t k = 0; k < pc->pieces(); ++k) {
                bps.push_back(b[k + 1]);
                heights.push_back(c.weight * pc->heights()[k]);
            }
        }
        return PiecewiseConstantDensity(std::move(bps), std::move(heights));
    }
    std::vector<double> cuts;
    for (const auto& c : components_) {
        for (double b : c.density.breakpoints()) {
            cuts.push_back(b);
        }
    }
    auto parts = components_;
    return SmoothDensity(
        [parts](double x) {
            for (const auto& c : parts) {
                const Interval s = c.density.support();
                if (x >= s.lo && x <= s.hi) {
                    return c.weight * c.density.pdf(x);
                }
            }
            return 0.0;
        },
        support(), std::move(cuts));
}

std::vector<double> allocation_weights(std::span<const double> s, RenyiOrder alpha,
                                       DistortionExponent r)
{
    require_weights(s);
    const double a = finite_alpha_below_1pr(alpha, r);
    const ExponentPair e = exponents(alpha, r);
    // log domain: near alpha = 1 + r the exponents blow up
    double peak = -std::numeric_limits<double>::infinity();
    for (double w : s) {
        peak = std::max(peak, e.a1 * std::log(w));
    }
    double sum = 0.0;
    for (double w : s) {
        sum += std::exp(e.a1 * std::log(w) - peak);
    }
    const double log_scale = -(peak + std::log(sum)) / (1.0 - a);
    std::vector<double> t;
    for (double w : s) {
        t.push_back(std::exp(std::log(w) / e.a2 + log_scale));
    }
    return t;
}

std::vector<double> allocate_rates(std::span<const double> s, RenyiOrder alpha,
                                   DistortionExponent r, double rate)
{
    const std::vector<double> t = allocation_weights(s, alpha, r);
    double threshold = 0.0;
    for (double x : t) {
        threshold = std::max(threshold, -std::log(x));
    }
    if (!(rate >= threshold)) {
        throw InvalidArgument("rate below max_i(-log t_i); some component rate would be negative");
    }
    std::vector<double> rates;
    for (double x : t) {
        rates.push_back(std::max(0.0, rate + std::log(x)));
    }
    return rates;
}

double rate_condition_lhs(std::span<const double> s, std::span<const double> rates, double alpha)
{
    if (s.size() != rates.size()) {
        throw InvalidArgument("weights and rates differ in length");
    }
    // log-sum-exp of alpha log s_i + (1 - alpha) R_i
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) {
        peak = std::max(peak, alpha * std::log(s[i]) + (1.0 - alpha) * rates[i]);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        sum += std::exp(alpha * std::log(s[i]) + (1.0 - alpha) * rates[i] - peak);
    }
    return peak + std::log(sum);
}

bool check_rate_condition(std::span<const double> s, std::span<const double> rates, double rate,
                          RenyiOrder alpha)
{
    require_off_shannon_seam(alpha);
    if (!alpha.is_finite() || alpha.value() < 0.0 || alpha.value() == 1.0) {
        throw RegimeError("rate condition is stated for alpha in [0, inf) without 1");
    }
    const double a = alpha.value();
    const double lhs = rate_condition_lhs(s, rates, a);
    const double rhs = (1.0 - a) * rate;
    // Equality is the design point of allocate_rates; allow rounding.
    const double slack = 1e-12 * std::max(1.0, std::abs(rhs));
    return a < 1.0 ? lhs <= rhs + slack : lhs >= rhs - slack;
}

double composed_entropy(std::span<const double> s, std::span<const double> entropies,
                        RenyiOrder alpha)
{
    if (s.size() != entropies.size() || s.empty()) {
        throw InvalidArgument("weights and entropies differ in length");
    }
    require_off_shannon_seam(alpha);
    if (alpha.is_neg_infinity()) {
        // -log min_i s_i e^{-H_i}
        double h = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < s.size(); ++i) {
            h = std::max(h, entropies[i] - std::log(s[i]));
        }
        return h;
    }
    if (alpha.is_pos_infinity()) {
        double h = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < s.size(); ++i) {
            h = std::min(h, entropies[i] - std::log(s[i]));
        }
        return h;
    }
    const double a = alpha.value();
    if (a == 1.0) {
        double h = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            h += s[i] * (entropies[i] - std::log(s[i]));
        }
        return h;
    }
    return rate_condition_lhs(s, entropies, a) / (1.0 - a);
}

IntervalQuantizer compose(const MixtureSpec& spec, std::span<const IntervalQuantizer> parts)
{
    if (parts.size() != spec.size()) {
        throw InvalidArgument("one part quantizer per mixture component is required");
    }
    const double tol = kAbutTol * spec.support().length();
    std::vector<double> b;
    std::vector<double> c;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Interval want = spec[i].density.support();
        const Interval got = parts[i].span();
        if (std::abs(got.lo - want.lo) > tol || std::abs(got.hi - want.hi) > tol) {
            throw InvalidArgument("part quantizer span does not match its component support");
        }
        const auto pb = parts[i].boundaries();
        if (b.empty()) {
            b.push_back(pb.front());
        }
        b.insert(b.end(), pb.begin() + 1, pb.end());
        const auto pc = parts[i].codepoints();
        c.insert(c.end(), pc.begin(), pc.end());
    }
    // Shared boundaries between parts may differ by rounding; keep the
    // codepoints inside their cells.
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = std::clamp(c[i], b[i], b[i + 1]);
    }
    return {std::move(b), std::move(c)};
}

double f_functional(std::span<const double> v, std::span<const double> s, DistortionExponent r)
{
    if (v.size() != s.size()) {
        throw InvalidArgument("v and s differ in length");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0)) {
            throw InvalidArgument("F needs positive arguments");
        }
        total += s[i] * std::pow(v[i], -r.value());
    }
    return total;
}

double weight_constraint(std::span<const double> v, std::span<const double> s, double alpha)
{
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        total += std::pow(s[i], alpha) * std::pow(v[i], 1.0 - alpha);
    }
    return total;
}

std::vector<double> project_to_constraint(std::span<const double> v, std::span<const double> s,
                                          double alpha)
{
    if (alpha == 1.0) {
        throw RegimeError("constraint is scale-free at alpha = 1");
    }
    const double k = std::pow(weight_constraint(v, s, alpha), -1.0 / (1.0 - alpha));
    std::vector<double> out;
    for (double x : v) {
        out.push_back(k * x);
    }
    return out;
}

double constrained_f(std::span<const double> v, std::span<const double> s, RenyiOrder alpha,
                     DistortionExponent r, double tol)
{
    const double a = finite_alpha_below_1pr(alpha, r);
    if (std::abs(weight_constraint(v, s, a) - 1.0) > tol) {
        throw InvalidArgument("v violates sum s_i^alpha v_i^{1-alpha} = 1");
    }
    return f_functional(v, s, r);
}

std::vector<double> f_minimizer(std::span<const double> s, RenyiOrder alpha,
                                DistortionExponent r)
{
    if (!alpha.is_finite() || !(alpha.value() < 1.0)) {
        throw RegimeError("F minimizer is characterized for finite alpha < 1");
    }
    return allocation_weights(s, alpha, r);
}

} // namespace quant
