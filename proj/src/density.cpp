#include "quant/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quant/core.hpp"

namespace quant {

namespace {

constexpr double kNormalizationTol = 1e-12;
constexpr std::size_t kCdfTableCells = 1024;
constexpr std::size_t kEssScanPoints = 4096;

void require_sorted_strict(std::span<const double> xs, const char* what)
{
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i])) {
            throw InvalidArgument(std::string(what) + " must be finite");
        }
        if (i > 0 && !(xs[i] > xs[i - 1])) {
            throw InvalidArgument(std::string(what) + " must be strictly increasing");
        }
    }
}

// Samples in [a, b] with the endpoints nudged one ulp inward so that a
// one-sided limit is seen at a jump.
template <class Fn>
void scan_piece(double a, double b, std::size_t points, Fn&& visit)
{
    const double lo = std::nextafter(a, b);
    const double hi = std::nextafter(b, a);
    points = std::max<std::size_t>(points, 2);
    for (std::size_t k = 0; k < points; ++k) {
        const double x = (k + 1 == points) ? hi : lo + (hi - lo) * double(k) / double(points - 1);
        visit(x);
    }
}

} // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw InvalidArgument("interval requires finite lo < hi");
    }
}

bool Interval::within(const Interval& outer, double tol) const
{
    const double slack = tol * outer.length();
    return lo >= outer.lo - slack && hi <= outer.hi + slack;
}

//---------------------------------------------------------------------------//
// PiecewiseConstantDensity
//---------------------------------------------------------------------------//

PiecewiseConstantDensity::PiecewiseConstantDensity(std::vector<double> breakpoints,
                                                   std::vector<double> heights)
    : breakpoints_(std::move(breakpoints)), heights_(std::move(heights))
{
    if (breakpoints_.size() < 2 || heights_.size() + 1 != breakpoints_.size()) {
        throw InvalidArgument("piecewise density needs m+1 breakpoints for m heights, m >= 1");
    }
    require_sorted_strict(breakpoints_, "breakpoints");
    cumulative_.assign(breakpoints_.size(), 0.0);
    for (std::size_t i = 0; i < heights_.size(); ++i) {
        const double h = heights_[i];
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw InvalidArgument("piecewise density heights must be positive and finite");
        }
        cumulative_[i + 1] = cumulative_[i] + h * (breakpoints_[i + 1] - breakpoints_[i]);
    }
    if (std::abs(cumulative_.back() - 1.0) > kNormalizationTol) {
        throw InvalidArgument("piecewise density does not integrate to one");
    }
    cumulative_.back() = 1.0;
}

PiecewiseConstantDensity PiecewiseConstantDensity::from_masses(std::vector<double> breakpoints,
                                                               std::span<const double> masses)
{
    if (breakpoints.size() != masses.size() + 1) {
        throw InvalidArgument("piecewise density needs m+1 breakpoints for m masses");
    }
    require_sorted_strict(breakpoints, "breakpoints");
    const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
    if (!(total > 0.0)) {
        throw InvalidArgument("piecewise masses must have positive total");
    }
    std::vector<double> heights(masses.size());
    for (std::size_t i = 0; i < masses.size(); ++i) {
        heights[i] = masses[i] / total / (breakpoints[i + 1] - breakpoints[i]);
    }
    return {std::move(breakpoints), std::move(heights)};
}

std::size_t PiecewiseConstantDensity::piece_of(double x) const
{
    const auto first = breakpoints_.begin() + 1;
    const auto it = std::lower_bound(first, breakpoints_.end(), x);
    const auto k = static_cast<std::size_t>(it - first);
    return std::min(k, heights_.size() - 1);
}

double PiecewiseConstantDensity::pdf(double x) const
{
    if (x < breakpoints_.front() || x > breakpoints_.back()) {
        return 0.0;
    }
    return heights_[piece_of(x)];
}

double PiecewiseConstantDensity::cdf(double x) const
{
    if (x <= breakpoints_.front()) {
        return 0.0;
    }
    if (x >= breakpoints_.back()) {
        return 1.0;
    }
    const std::size_t k = piece_of(x);
    const double v = cumulative_[k] + heights_[k] * (x - breakpoints_[k]);
    return std::min(v, cumulative_[k + 1]);
}

double PiecewiseConstantDensity::quantile(double u) const
{
    if (!(u >= 0.0 && u <= 1.0)) {
        throw InvalidArgument("quantile level must lie in [0, 1]");
    }
    if (u == 0.0) {
        return breakpoints_.front();
    }
    if (u == 1.0) {
        return breakpoints_.back();
    }
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    std::size_t k = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    k = std::min(k, heights_.size() - 1);
    const double x = breakpoints_[k] + (u - cumulative_[k]) / heights_[k];
    return std::clamp(x, breakpoints_[k], breakpoints_[k + 1]);
}

//---------------------------------------------------------------------------//
// SmoothDensity
//---------------------------------------------------------------------------//

SmoothDensity::SmoothDensity(std::function<double(double)> unnormalized_pdf, Interval support,
                             std::vector<double> breakpoints, QuadratureOptions quadrature,
                             std::optional<EssBounds> ess_bounds, bool weakly_unimodal)
    : pdf_(std::make_shared<const std::function<double(double)>>(std::move(unnormalized_pdf))),
      support_(support),
      quadrature_(quadrature),
      ess_bounds_(ess_bounds),
      weakly_unimodal_(weakly_unimodal)
{
    breakpoints.push_back(support_.lo);
    breakpoints.push_back(support_.hi);
    std::erase_if(breakpoints, [&](double b) { return !(b >= support_.lo && b <= support_.hi); });
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    breakpoints_ = std::move(breakpoints);

    const std::size_t pieces = breakpoints_.size() - 1;
    const std::size_t per_piece = std::max<std::size_t>(1, kCdfTableCells / pieces);
    table_x_.reserve(pieces * per_piece + 1);
    for (std::size_t i = 0; i < pieces; ++i) {
        const double a = breakpoints_[i];
        const double b = breakpoints_[i + 1];
        for (std::size_t k = 0; k < per_piece; ++k) {
            table_x_.push_back(a + (b - a) * double(k) / double(per_piece));
        }
    }
    table_x_.push_back(support_.hi);

    // normalizer_ is still 1 here, so integrate_pdf sees the raw pdf.
    table_cdf_.assign(table_x_.size(), 0.0);
    for (std::size_t k = 0; k + 1 < table_x_.size(); ++k) {
        const double mass = integrate_pdf(table_x_[k], table_x_[k + 1]);
        if (!(mass >= 0.0) || !std::isfinite(mass)) {
            throw InvalidArgument("smooth density pdf must be nonnegative and integrable");
        }
        table_cdf_[k + 1] = table_cdf_[k] + mass;
    }
    const double total = table_cdf_.back();
    if (!(total > 0.0)) {
        throw InvalidArgument("smooth density has zero mass on its support");
    }
    normalizer_ = total;
    for (double& c : table_cdf_) {
        c /= total;
    }
    table_cdf_.back() = 1.0;
    if (ess_bounds_) {
        ess_bounds_->inf /= total;
        ess_bounds_->sup /= total;
    }
}

double SmoothDensity::pdf(double x) const
{
    if (x < support_.lo || x > support_.hi) {
        return 0.0;
    }
    return (*pdf_)(x) / normalizer_;
}

double SmoothDensity::integrate_pdf(double a, double b) const
{
    return integrate([this](double x) { return pdf(x); }, a, b, quadrature_);
}

double SmoothDensity::cdf(double x) const
{
    if (x <= support_.lo) {
        return 0.0;
    }
    if (x >= support_.hi) {
        return 1.0;
    }
    const auto it = std::upper_bound(table_x_.begin(), table_x_.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - table_x_.begin()) - 1;
    const double v = table_cdf_[k] + integrate_pdf(table_x_[k], x);
    return std::clamp(v, table_cdf_[k], table_cdf_[k + 1]);
}

double SmoothDensity::quantile(double u) const
{
    if (!(u >= 0.0 && u <= 1.0)) {
        throw InvalidArgument("quantile level must lie in [0, 1]");
    }
    if (u == 0.0) {
        return support_.lo;
    }
    if (u == 1.0) {
        return support_.hi;
    }
    const auto it = std::upper_bound(table_cdf_.begin(), table_cdf_.end(), u);
    std::size_t k = static_cast<std::size_t>(it - table_cdf_.begin()) - 1;
    k = std::min(k, table_x_.size() - 2);
    const double a = table_x_[k];
    const double b = table_x_[k + 1];
    const double base = table_cdf_[k];
    const double tol = 1e-13 * support_.length();
    return bisect_increasing([&](double x) { return base + integrate_pdf(a, x) - u; }, a, b, tol);
}

//---------------------------------------------------------------------------//
// Density
//---------------------------------------------------------------------------//

double Density::pdf(double x) const
{
    return std::visit([x](const auto& d) { return d.pdf(x); }, impl_);
}

double Density::cdf(double x) const
{
    return std::visit([x](const auto& d) { return d.cdf(x); }, impl_);
}

double Density::quantile(double u) const
{
    return std::visit([u](const auto& d) { return d.quantile(u); }, impl_);
}

Interval Density::support() const
{
    return std::visit([](const auto& d) { return d.support(); }, impl_);
}

std::span<const double> Density::breakpoints() const
{
    return std::visit([](const auto& d) { return d.breakpoints(); }, impl_);
}

const QuadratureOptions& Density::quadrature() const
{
    static const QuadratureOptions defaults{};
    if (const auto* s = smooth()) {
        return s->quadrature();
    }
    return defaults;
}

Density uniform_density(double lo, double hi)
{
    const Interval support(lo, hi);
    return PiecewiseConstantDensity({lo, hi}, {1.0 / support.length()});
}

Density truncated_laplace(double mu, double scale, Interval window)
{
    if (!(scale > 0.0)) {
        throw InvalidArgument("Laplace scale must be positive");
    }
    std::vector<double> kinks;
    if (mu > window.lo && mu < window.hi) {
        kinks.push_back(mu);
    }
    const double far = std::max(std::abs(window.lo - mu), std::abs(window.hi - mu));
    const double near = (mu >= window.lo && mu <= window.hi)
                          ? 0.0
                          : std::min(std::abs(window.lo - mu), std::abs(window.hi - mu));
    const EssBounds raw{std::exp(-far / scale), std::exp(-near / scale)};
    return SmoothDensity([mu, scale](double x) { return std::exp(-std::abs(x - mu) / scale); },
                         window, std::move(kinks), {}, raw, true);
}

Density truncated_gaussian(double mu, double sigma, Interval window)
{
    if (!(sigma > 0.0)) {
        throw InvalidArgument("Gaussian sigma must be positive");
    }
    auto raw_pdf = [mu, sigma](double x) {
        const double z = (x - mu) / sigma;
        return std::exp(-0.5 * z * z);
    };
    std::vector<double> kinks;
    if (mu > window.lo && mu < window.hi) {
        kinks.push_back(mu);
    }
    const double far = std::max(std::abs(window.lo - mu), std::abs(window.hi - mu));
    const double nearest = std::clamp(mu, window.lo, window.hi);
    const EssBounds raw{raw_pdf(mu + far), raw_pdf(nearest)};
    return SmoothDensity(raw_pdf, window, std::move(kinks), {}, raw, true);
}

Density as_smooth(const PiecewiseConstantDensity& d)
{
    auto bps = d.breakpoints();
    std::vector<double> interior(bps.begin() + 1, bps.end() - 1);
    return SmoothDensity([d](double x) { return d.pdf(x); }, d.support(), std::move(interior));
}

//---------------------------------------------------------------------------//
// Integrals
//---------------------------------------------------------------------------//

std::vector<CommonPiece> common_pieces(const Density& f, const Density& g, Interval over)
{
    std::vector<double> cuts{over.lo, over.hi};
    for (const Density* d : {&f, &g}) {
        for (double b : d->breakpoints()) {
            if (b > over.lo && b < over.hi) {
                cuts.push_back(b);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const bool both_constant = f.piecewise() && g.piecewise();
    std::vector<CommonPiece> pieces;
    pieces.reserve(cuts.size() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        const double mid = 0.5 * (a + b);
        pieces.push_back({a, b, both_constant, f.pdf(mid), g.pdf(mid)});
    }
    return pieces;
}

double integrate_pair(const Density& f, const Density& g, Interval over,
                      const std::function<double(double, double)>& phi)
{
    double total = 0.0;
    for (const CommonPiece& p : common_pieces(f, g, over)) {
        if (p.constant) {
            total += phi(p.f_value, p.g_value) * (p.hi - p.lo);
        } else {
            total += integrate([&](double x) { return phi(f.pdf(x), g.pdf(x)); }, p.lo, p.hi,
                               f.quadrature());
        }
    }
    return total;
}

EssBounds ratio_bounds(const Density& f, const Density& g, Interval over)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    auto visit = [&](double fv, double gv) {
        if (gv == 0.0) {
            if (fv > 0.0) {
                hi = std::numeric_limits<double>::infinity();
            }
            return;
        }
        const double ratio = fv / gv;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    };
    for (const CommonPiece& p : common_pieces(f, g, over)) {
        if (p.constant) {
            visit(p.f_value, p.g_value);
        } else {
            scan_piece(p.lo, p.hi, 64, [&](double x) { visit(f.pdf(x), g.pdf(x)); });
        }
    }
    return {lo, hi};
}

EssBounds ess_bounds(const Density& d)
{
    if (const auto* pc = d.piecewise()) {
        const auto h = pc->heights();
        const auto [mn, mx] = std::minmax_element(h.begin(), h.end());
        return {*mn, *mx};
    }
    const SmoothDensity& s = *d.smooth();
    if (s.declared_ess_bounds()) {
        return *s.declared_ess_bounds();
    }
    const auto bps = s.breakpoints();
    const double span = s.support().length();
    double best_lo = std::numeric_limits<double>::infinity();
    double best_hi = -std::numeric_limits<double>::infinity();
    double x_lo = bps.front();
    double x_hi = bps.front();
    double step = span;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const double a = bps[i];
        const double b = bps[i + 1];
        const auto points = std::max<std::size_t>(
            2, static_cast<std::size_t>(double(kEssScanPoints) * (b - a) / span));
        step = std::min(step, (b - a) / double(points - 1));
        scan_piece(a, b, points, [&](double x) {
            const double v = s.pdf(x);
            if (v < best_lo) {
                best_lo = v;
                x_lo = x;
            }
            if (v > best_hi) {
                best_hi = v;
                x_hi = x;
            }
        });
    }
    // Golden-section polish around the best scan points.
    const Interval sup = s.support();
    auto polish = [&](double x0, double sign) {
        const double a = std::max(sup.lo, x0 - step);
        const double b = std::min(sup.hi, x0 + step);
        const double x = golden_section_max([&](double x) { return sign * s.pdf(x); }, a, b,
                                            1e-12 * span);
        return s.pdf(x);
    };
    best_hi = std::max(best_hi, polish(x_hi, 1.0));
    best_lo = std::min(best_lo, polish(x_lo, -1.0));
    // The scan sees one-sided limits only up to an ulp; treat a minimum that
    // is negligible against the maximum as a zero of the pdf.
    if (best_lo <= 1e-14 * best_hi) {
        best_lo = 0.0;
    }
    return {std::max(best_lo, 0.0), best_hi};
}

double power_integral(const Density& d, double p)
{
    if (p < 0.0 && !(ess_bounds(d).inf > 0.0)) {
        throw InvalidArgument("negative power integral needs a density bounded away from zero");
    }
    if (const auto* pc = d.piecewise()) {
        double total = 0.0;
        const auto b = pc->breakpoints();
        const auto h = pc->heights();
        for (std::size_t i = 0; i < h.size(); ++i) {
            total += std::pow(h[i], p) * (b[i + 1] - b[i]);
        }
        return total;
    }
    return integrate_pair(d, d, d.support(),
                          [p](double fv, double) { return fv > 0.0 ? std::pow(fv, p) : 0.0; });
}

double log_integral(const Density& d)
{
    return integrate_pair(d, d, d.support(),
                          [](double fv, double) { return fv > 0.0 ? fv * std::log(fv) : 0.0; });
}

Density similarity_transform(const Density& d, double scale, double shift, bool reflect)
{
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw InvalidArgument("similarity scale must be positive");
    }
    const double sign = reflect ? -1.0 : 1.0;
    auto forward = [=](double x) { return sign * scale * x + shift; };

    if (const auto* pc = d.piecewise()) {
        std::vector<double> bps;
        std::vector<double> heights;
        for (double b : pc->breakpoints()) {
            bps.push_back(forward(b));
        }
        for (double h : pc->heights()) {
            heights.push_back(h / scale);
        }
        if (reflect) {
            std::reverse(bps.begin(), bps.end());
            std::reverse(heights.begin(), heights.end());
        }
        return PiecewiseConstantDensity(std::move(bps), std::move(heights));
    }

    const SmoothDensity& s = *d.smooth();
    const Interval sup = s.support();
    const double a = forward(sup.lo);
    const double b = forward(sup.hi);
    std::vector<double> bps;
    for (double x : s.breakpoints()) {
        bps.push_back(forward(x));
    }
    std::optional<EssBounds> eb;
    if (s.declared_ess_bounds()) {
        eb = EssBounds{s.declared_ess_bounds()->inf / scale, s.declared_ess_bounds()->sup / scale};
    }
    auto inverse = [=](double y) { return (y - shift) / (sign * scale); };
    return SmoothDensity([s, inverse, scale](double y) { return s.pdf(inverse(y)) / scale; },
                         Interval(std::min(a, b), std::max(a, b)), std::move(bps),
                         s.quadrature(), eb, s.weakly_unimodal());
}

} // namespace quant
