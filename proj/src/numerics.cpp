#include "quant/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quant {

namespace {

struct SimpsonPanel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& fn, const SimpsonPanel& p, double eps, int depth)
{
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = fn(lm);
    const double frm = fn(rm);
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps || !(p.b - p.a > 0)) {
        return left + right + delta / 15.0;
    }
    return refine(fn, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * eps, depth - 1)
         + refine(fn, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * eps, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& fn, double a, double b,
                 const QuadratureOptions& opts)
{
    if (!(b > a)) {
        return 0.0;
    }
    const double lo = std::nextafter(a, b);
    const double hi = std::nextafter(b, a);
    auto clamped = [&](double x) { return fn(std::clamp(x, lo, hi)); };

    // A few initial panels keep a narrow feature from hiding between the
    // first five samples.
    constexpr int kPanels = 8;
    const double h = (b - a) / kPanels;
    SimpsonPanel panels[kPanels];
    double scale = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        SimpsonPanel& p = panels[i];
        p.a = a + i * h;
        p.b = (i + 1 == kPanels) ? b : a + (i + 1) * h;
        p.m = 0.5 * (p.a + p.b);
        p.fa = clamped(p.a);
        p.fm = clamped(p.m);
        p.fb = clamped(p.b);
        p.whole = simpson(p.a, p.b, p.fa, p.fm, p.fb);
        scale += std::abs(p.whole);
    }
    const double eps = opts.rel_tol * std::max(scale, std::numeric_limits<double>::min()) / kPanels;
    double total = 0.0;
    for (const SimpsonPanel& p : panels) {
        total += refine(clamped, p, eps, opts.max_depth);
    }
    return total;
}

double bisect_increasing(const std::function<double(double)>& fn, double lo, double hi,
                         double abs_tol)
{
    if (fn(lo) >= 0.0) {
        return lo;
    }
    if (fn(hi) <= 0.0) {
        return hi;
    }
    while (hi - lo > abs_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (fn(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double golden_section_max(const std::function<double(double)>& fn, double lo, double hi,
                          double abs_tol)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = fn(x1);
    double f2 = fn(x2);
    while (hi - lo > abs_tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = fn(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = fn(x1);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace quant
