#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "quant/core.hpp"
#include "quant/numerics.hpp"

namespace quant {

/// Compact interval [lo, hi] with lo < hi.
struct Interval {
    double lo;
    double hi;

    Interval(double lo, double hi);

    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
    /// True when this interval lies inside `outer` up to tol * outer.length().
    bool within(const Interval& outer, double tol = 1e-12) const;
};

struct EssBounds {
    double inf;
    double sup;
};

/// Density with constant height h_i on (b_{i-1}, b_i]. All heights are
/// positive, so the support is the whole of [b_0, b_m].
class PiecewiseConstantDensity {
  public:
    PiecewiseConstantDensity(std::vector<double> breakpoints, std::vector<double> heights);

    /// Heights are masses divided by segment lengths; masses are normalized
    /// to sum to one.
    static PiecewiseConstantDensity from_masses(std::vector<double> breakpoints,
                                                std::span<const double> masses);

    std::span<const double> breakpoints() const { return breakpoints_; }
    std::span<const double> heights() const { return heights_; }
    std::size_t pieces() const { return heights_.size(); }
    Interval support() const { return {breakpoints_.front(), breakpoints_.back()}; }

    double pdf(double x) const;
    double cdf(double x) const;
    double quantile(double u) const;

    /// Index of the piece containing x (x clamped into the support).
    std::size_t piece_of(double x) const;

  private:
    std::vector<double> breakpoints_;
    std::vector<double> heights_;
    std::vector<double> cumulative_;
};

/// Continuous density on a compact interval, normalized by quadrature at
/// construction. Declared breakpoints mark kinks or jumps the quadrature must
/// not straddle.
class SmoothDensity {
  public:
    SmoothDensity(std::function<double(double)> unnormalized_pdf, Interval support,
                  std::vector<double> breakpoints = {}, QuadratureOptions quadrature = {},
                  std::optional<EssBounds> ess_bounds = std::nullopt,
                  bool weakly_unimodal = false);

    Interval support() const { return support_; }
    /// Support endpoints plus interior breakpoints, sorted.
    std::span<const double> breakpoints() const { return breakpoints_; }
    const QuadratureOptions& quadrature() const { return quadrature_; }
    const std::optional<EssBounds>& declared_ess_bounds() const { return ess_bounds_; }
    bool weakly_unimodal() const { return weakly_unimodal_; }

    double pdf(double x) const;
    double cdf(double x) const;
    double quantile(double u) const;

  private:
    std::shared_ptr<const std::function<double(double)>> pdf_;
    double normalizer_ = 1.0;
    Interval support_;
    std::vector<double> breakpoints_;
    QuadratureOptions quadrature_;
    std::optional<EssBounds> ess_bounds_;
    bool weakly_unimodal_;
    // Cumulative mass at table_x_[k]; table_x_ refines breakpoints_.
    std::vector<double> table_x_;
    std::vector<double> table_cdf_;

    double integrate_pdf(double a, double b) const;
};

/// One-dimensional source density on a compact interval.
class Density {
  public:
    Density(PiecewiseConstantDensity d) : impl_(std::move(d)) {}
    Density(SmoothDensity d) : impl_(std::move(d)) {}

    double pdf(double x) const;
    double cdf(double x) const;
    /// Generalized inverse of the cdf: quantile(0) = lo, quantile(1) = hi.
    double quantile(double u) const;
    Interval support() const;
    /// Sorted points including both support endpoints; the density is smooth
    /// (or constant) between consecutive entries.
    std::span<const double> breakpoints() const;

    const PiecewiseConstantDensity* piecewise() const
    {
        return std::get_if<PiecewiseConstantDensity>(&impl_);
    }
    const SmoothDensity* smooth() const { return std::get_if<SmoothDensity>(&impl_); }

    const QuadratureOptions& quadrature() const;

  private:
    std::variant<PiecewiseConstantDensity, SmoothDensity> impl_;
};

Density uniform_density(double lo, double hi);

/// Laplace(mu, scale) truncated to `window` and renormalized.
Density truncated_laplace(double mu, double scale, Interval window);

/// Gaussian(mu, sigma) truncated to `window` and renormalized.
Density truncated_gaussian(double mu, double sigma, Interval window);

/// Same pdf evaluated through the quadrature path (for cross-checks).
Density as_smooth(const PiecewiseConstantDensity& d);

/// Integral of f^p over the support.
double power_integral(const Density& d, double p);

/// Integral of f log f over the support.
double log_integral(const Density& d);

/// Essential infimum and supremum of the pdf on its support.
EssBounds ess_bounds(const Density& d);

/// Density of X' = c X + t (or -c X + t when `reflect`).
Density similarity_transform(const Density& d, double scale, double shift, bool reflect = false);

/// Piece of the common refinement of one or two densities. For a piece on
/// which both densities are piecewise constant, `constant` is true and
/// f_value/g_value hold the heights.
struct CommonPiece {
    double lo;
    double hi;
    bool constant;
    double f_value;
    double g_value;
};

/// Common refinement of f's and g's breakpoints clipped to `over`.
std::vector<CommonPiece> common_pieces(const Density& f, const Density& g, Interval over);

/// Integral over `over` of phi(f(x), g(x)); closed form on constant pieces.
double integrate_pair(const Density& f, const Density& g, Interval over,
                      const std::function<double(double, double)>& phi);

/// Essential inf and sup of f/g on `over` (grid scan on non-constant pieces).
EssBounds ratio_bounds(const Density& f, const Density& g, Interval over);

} // namespace quant
