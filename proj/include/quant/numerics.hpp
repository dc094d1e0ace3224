#pragma once

#include <functional>

namespace quant {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    int max_depth = 40;
};

/// Adaptive Simpson quadrature of fn over [a, b]. The integrand is never
/// sampled exactly at a or b (endpoints are nudged one ulp inward), so a
/// function with a jump at an endpoint integrates as its one-sided limit.
double integrate(const std::function<double(double)>& fn, double a, double b,
                 const QuadratureOptions& opts = {});

/// Root of a nondecreasing function on [lo, hi] by bisection to absolute
/// tolerance abs_tol. Returns lo (hi) when fn(lo) >= 0 (fn(hi) <= 0).
double bisect_increasing(const std::function<double(double)>& fn, double lo, double hi,
                         double abs_tol);

/// Maximizer of a unimodal function on [lo, hi] by golden-section search.
double golden_section_max(const std::function<double(double)>& fn, double lo, double hi,
                          double abs_tol);

} // namespace quant
