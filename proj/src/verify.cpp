#include "quant/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "quant/compander.hpp"
#include "quant/design.hpp"
#include "quant/entropy.hpp"
#include "quant/mixture.hpp"
#include "quant/oracle.hpp"
#include "quant/report.hpp"

namespace quant {

namespace {

const DistortionExponent kR2(2.0);

// Collects checks; `at_most` records measured <= tolerance.
class Suite {
  public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void at_most(std::string what, double measured, double tolerance)
    {
        // NaN never passes
        result_.checks.push_back({std::move(what), measured, tolerance, measured <= tolerance});
    }

    // strict: measured < tolerance
    void below(std::string what, double measured, double tolerance)
    {
        result_.checks.push_back({std::move(what), measured, tolerance, measured < tolerance});
    }

    void note(std::string text) { result_.note = std::move(text); }
    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

double rel(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

PiecewiseConstantDensity two_mass()
{
    return PiecewiseConstantDensity({0.0, 0.5, 1.0}, {0.5, 1.5});
}

std::vector<PiecewiseConstantDensity> corpus()
{
    return {two_mass(),
            PiecewiseConstantDensity::from_masses({0.0, 0.25, 0.6, 1.0}, std::vector{0.2, 0.5, 0.3}),
            PiecewiseConstantDensity::from_masses({-1.0, -0.2, 0.5, 1.0, 2.0},
                                                  std::vector{0.1, 0.4, 0.35, 0.15})};
}

PiecewiseConstantDensity random_piecewise(std::mt19937_64& rng, std::size_t pieces, double lo,
                                          double hi)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> cuts{lo};
    for (std::size_t i = 1; i < pieces; ++i) {
        cuts.push_back(lo + (hi - lo) * (i + 0.4 * (unit(rng) - 0.5)) / pieces);
    }
    cuts.push_back(hi);
    std::vector<double> masses;
    for (std::size_t i = 0; i < pieces; ++i) {
        masses.push_back((0.5 + 2.0 * unit(rng)) * (cuts[i + 1] - cuts[i]));
    }
    return PiecewiseConstantDensity::from_masses(std::move(cuts), masses);
}

// Uniform grid with interior cuts jittered by up to a quarter spacing.
IntervalQuantizer jittered_quantizer(std::mt19937_64& rng, Interval span, std::size_t levels)
{
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double h = span.length() / levels;
    std::vector<double> cuts{span.lo};
    for (std::size_t i = 1; i < levels; ++i) {
        cuts.push_back(span.lo + h * (i + jitter(rng)));
    }
    cuts.push_back(span.hi);
    std::vector<double> c;
    for (std::size_t i = 0; i < levels; ++i) {
        c.push_back(cuts[i] + (cuts[i + 1] - cuts[i]) * unit(rng));
    }
    return {std::move(cuts), std::move(c)};
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t m)
{
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::vector<double> s(m);
    double total = 0.0;
    for (double& x : s) {
        x = unit(rng);
        total += x;
    }
    for (double& x : s) {
        x /= total;
    }
    double head = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        head += s[i];
    }
    s.back() = 1.0 - head;
    return s;
}

const std::vector<RenyiOrder>& profile_orders()
{
    static const std::vector<RenyiOrder> a{RenyiOrder::neg_infinity(), RenyiOrder::finite(-2.0),
                                           RenyiOrder::finite(-1.0),   RenyiOrder::finite(0.0),
                                           RenyiOrder::finite(0.5),    RenyiOrder::finite(1.0),
                                           RenyiOrder::finite(2.0),    RenyiOrder::pos_infinity()};
    return a;
}

std::vector<std::pair<Density, Density>> bennett_pairs()
{
    const auto c = corpus();
    return {{c[0], uniform_density(0.0, 1.0)},
            {c[1], c[0]},
            {c[2], PiecewiseConstantDensity::from_masses({-1.0, 0.5, 2.0}, std::vector{0.4, 0.6})}};
}

SuiteResult exponent_identity()
{
    Suite s("exponent_identity");
    double worst = 0.0;
    for (double r : {1.0, 1.5, 2.0, 3.0, 5.0}) {
        for (double a = -20.0; a < 1.0 + r; a += 0.37) {
            if (std::abs(a - 1.0) < 1e-6) continue;
            const ExponentPair e = exponents(RenyiOrder::finite(a), DistortionExponent(r));
            worst = std::max(worst, rel((1.0 - e.a1) * e.a2, r));
        }
    }
    s.at_most("max relative error of (1 - a1) a2 = r", worst, 1e-12);
    return s.take();
}

SuiteResult uniform_exactness()
{
    Suite s("uniform_exactness");
    const Density u = uniform_density(0.0, 1.0);
    double d_err = 0.0;
    double h_err = 0.0;
    for (std::size_t n = 1; n <= 64; ++n) {
        const IntervalQuantizer q = uniform_quantizer(Interval(0, 1), n);
        d_err = std::max(d_err, std::abs(distortion(q, u, kR2) - 1.0 / (12.0 * n * n)));
        for (RenyiOrder a : profile_orders()) {
            h_err = std::max(h_err, std::abs(quantizer_entropy(q, u, a) - std::log(double(n))));
        }
    }
    s.at_most("max |D - 1/(12 N^2)|, N = 1..64", d_err, 1e-12);
    s.at_most("max |H - log N|", h_err, 1e-12);
    return s.take();
}

SuiteResult main_theorem_convergence()
{
    Suite s("main_theorem_convergence");
    std::vector<std::size_t> levels;
    for (std::size_t n = 16; n <= 2048; n *= 2) levels.push_back(n);
    const Density f = two_mass();
    for (RenyiOrder a : {RenyiOrder::finite(0.5), RenyiOrder::finite(-2.0), RenyiOrder::neg_infinity()}) {
        const ConvergenceReport rep = run_sweep(f, a, kR2, levels);
        s.at_most("relative deviation at N=2048, alpha=" + a.to_string(), rep.final_relative_deviation, 0.02);
        const double d64 = std::abs(rep.rows[2].normalized - rep.predicted);
        const double d2048 = std::abs(rep.rows.back().normalized - rep.predicted);
        // An exact construction (g = f at -inf) has nothing left to shrink.
        const double exact = 1e-12 * rep.predicted;
        s.below("deviation(2048) / max(deviation(64), exact floor), alpha=" + a.to_string(),
                d2048 / std::max(d64, exact), 1.0);
    }
    return s.take();
}

SuiteResult bennett_integral()
{
    Suite s("bennett_integral");
    const Density u = uniform_density(0.0, 1.0);
    double exact = 0.0;
    for (double r : {1.0, 2.0, 3.0}) {
        const DistortionExponent rr(r);
        const double want = bennett_functional(u, u, rr);
        for (std::size_t n : {1u, 7u, 64u}) {
            const double got = std::pow(double(n), r) * distortion(compand_build(Compander(u), n), u, rr);
            exact = std::max(exact, rel(got, want));
        }
    }
    s.at_most("uniform f = g: N^r D vs C(r) int f/g^r", exact, 1e-12);
    double dev = 0.0;
    double mid = 0.0;
    for (const auto& [f, g] : bennett_pairs()) {
        const Compander c(g);
        const double scaled = 2048.0 * 2048.0 * distortion(compand_build(c, 2048), f, kR2);
        const double scaled_mid = 2048.0 * 2048.0 * distortion(midpoint_variant(c, 2048), f, kR2);
        dev = std::max(dev, rel(scaled, bennett_functional(f, g, kR2)));
        mid = std::max(mid, rel(scaled_mid, scaled));
    }
    s.at_most("corpus pairs, relative deviation at N=2048", dev, 0.01);
    s.at_most("midpoint vs compander codepoints at N=2048", mid, 0.005);
    return s.take();
}

SuiteResult entropy_offset_suite()
{
    Suite s("entropy_offset");
    const Density u = uniform_density(0.0, 1.0);
    const Compander wide(uniform_density(0.0, 2.0));
    double exact = 0.0;
    for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-1.0), RenyiOrder::finite(0.0),
                         RenyiOrder::finite(0.5), RenyiOrder::finite(1.0), RenyiOrder::finite(2.0)}) {
        for (std::size_t n = 2; n <= 256; n += 2) {
            const double h = quantizer_entropy(compand_build(wide, n), u, a);
            exact = std::max(exact, std::abs(h - std::log(double(n)) + std::log(2.0)));
        }
    }
    s.at_most("U[0,1] under U[0,2] compander, even N: |H - log N + log 2|", exact, 1e-12);
    double worst = 0.0;
    for (const auto& [f, g] : bennett_pairs()) {
        const IntervalQuantizer q = compand_build(Compander(g), 4096);
        for (RenyiOrder a : profile_orders()) {
            worst = std::max(worst, std::abs(quantizer_entropy(q, f, a) - std::log(4096.0)
                                             - entropy_offset(f, g, a)));
        }
    }
    s.at_most("corpus pairs at N=4096: |H - log N + D_alpha|", worst, 1e-3);
    return s.take();
}

SuiteResult compressed_density_identity()
{
    Suite s("compressed_density_identity");
    double worst = 0.0;
    for (const auto& [f, g] : bennett_pairs()) {
        const Density fc = compressed_density(f, Compander(g));
        for (RenyiOrder a : profile_orders()) {
            worst = std::max(worst, std::abs(differential_entropy(fc, a) - entropy_offset(f, g, a)));
        }
    }
    s.at_most("|h_alpha(compressed) + D_alpha(f||g)|", worst, 1e-8);
    return s.take();
}

SuiteResult oracle_monotonicity()
{
    Suite s("oracle_monotonicity");
    const auto c = corpus();
    double rise = 0.0;
    double violations = 0.0;
    for (const auto& f : {c[0], c[2]}) {
        const GridInstance inst = GridInstance::subdivided(f, 24, 6);
        const auto prof = alpha_profile(inst, profile_orders(), std::log(4.0), kR2);
        for (std::size_t i = 1; i < prof.size(); ++i) {
            const double step = prof[i].value - prof[i - 1].value;
            rise = std::max(rise, step);
            violations += step > 0.0 ? 1.0 : 0.0;
        }
    }
    s.at_most("violations of D nonincreasing in alpha at R = log 4", violations, 0.0);
    s.at_most("largest increase between consecutive orders", rise, 0.0);
    return s.take();
}

SuiteResult negative_alpha_uniform()
{
    Suite s("negative_alpha_uniform");
    const GridInstance u = GridInstance::regular(PiecewiseConstantDensity({0.0, 1.0}, {1.0}), 13, 6);
    double worst = 0.0;
    for (double rate : {std::log(2.0), std::log(3.0)}) {
        const double zero = brute_force_optimal(u, RenyiOrder::finite(0.0), rate, kR2).value;
        for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-2.0), RenyiOrder::finite(-0.5)}) {
            worst = std::max(worst, std::abs(brute_force_optimal(u, a, rate, kR2).value - zero));
        }
    }
    s.at_most("|D^alpha(R) - D^0(R)| for alpha < 0", worst, 1e-12);
    return s.take();
}

SuiteResult uniform_optimal_suite()
{
    Suite s("uniform_optimal");
    const Density u = uniform_density(0.0, 1.0);
    double h_err = 0.0;
    double d_err = 0.0;
    for (double rate : {0.2, 0.9, std::log(2.5), 1.7, 3.1}) {
        for (RenyiOrder a : {RenyiOrder::finite(0.25), RenyiOrder::finite(0.5), RenyiOrder::finite(1.0),
                             RenyiOrder::finite(2.5)}) {
            h_err = std::max(h_err, std::abs(quantizer_entropy(uniform_optimal(Interval(0, 1), a, rate, kR2), u, a) - rate));
        }
    }
    for (std::size_t n = 1; n <= 16; ++n) {
        for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-1.0), RenyiOrder::finite(0.5)}) {
            const IntervalQuantizer q = uniform_optimal(Interval(0, 1), a, std::log(double(n)), kR2);
            d_err = std::max(d_err, rel(distortion(q, u, kR2), distortion_constant(kR2) / double(n * n)));
        }
    }
    s.at_most("alpha > 0: |H - R|", h_err, 1e-10);
    s.at_most("R = log n: relative error vs C(r) n^-r", d_err, 1e-12);
    return s.take();
}

SuiteResult scaling_law()
{
    Suite s("scaling_law");
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double d_err = 0.0;
    double h_err = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const Density d = random_piecewise(rng, 1 + trial % 5, 0.0, 1.0);
        const IntervalQuantizer q = jittered_quantizer(rng, Interval(0, 1), 1 + trial % 9);
        const double c = 0.05 + 10.0 * unit(rng);
        const double t = -20.0 + 40.0 * unit(rng);
        const Density dm = similarity_transform(d, c, t);
        const IntervalQuantizer qm = transform_quantizer(q, c, t);
        for (double r : {1.0, 2.0, 3.5}) {
            const DistortionExponent rr(r);
            d_err = std::max(d_err, rel(distortion(qm, dm, rr), std::pow(c, r) * distortion(q, d, rr)));
        }
        for (RenyiOrder a : profile_orders()) {
            h_err = std::max(h_err, std::abs(quantizer_entropy(qm, dm, a) - quantizer_entropy(q, d, a)));
        }
    }
    s.at_most("distortion vs c^r times original (relative)", d_err, 1e-10);
    s.at_most("entropy change", h_err, 1e-12);
    const GridInstance inst = GridInstance::regular(corpus()[1], 14, 5);
    const GridInstance moved = inst.transformed(2.5, -1.0);
    double o_err = 0.0;
    for (RenyiOrder a : profile_orders()) {
        o_err = std::max(o_err, rel(brute_force_optimal(moved, a, std::log(3.0), kR2).value,
                                    6.25 * brute_force_optimal(inst, a, std::log(3.0), kR2).value));
    }
    s.at_most("oracle optimum vs c^r times original (relative)", o_err, 1e-10);
    return s.take();
}

SuiteResult mixture_identities()
{
    Suite s("mixture_identities");
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double h_err = 0.0;
    double d_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + trial % 3;
        const auto w = random_weights(rng, m);
        std::vector<MixtureComponent> comps;
        std::vector<IntervalQuantizer> parts;
        double lo = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double hi = lo + 0.3 + unit(rng);
            comps.push_back({w[i], random_piecewise(rng, 1 + i % 3, lo, hi)});
            parts.push_back(jittered_quantizer(rng, Interval(lo, hi), 1 + (trial + i) % 5));
            lo = hi;
        }
        const MixtureSpec spec(comps);
        const IntervalQuantizer q = compose(spec, parts);
        const Density whole = spec.density();
        for (RenyiOrder a : profile_orders()) {
            std::vector<double> h;
            for (std::size_t i = 0; i < m; ++i) h.push_back(quantizer_entropy(parts[i], comps[i].density, a));
            h_err = std::max(h_err, std::abs(composed_entropy(w, h, a) - quantizer_entropy(q, whole, a)));
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) sum += w[i] * distortion(parts[i], comps[i].density, kR2);
        d_err = std::max(d_err, rel(distortion(q, whole, kR2), sum));
    }
    double rate_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto w = random_weights(rng, 2 + trial % 4);
        double a = -3.0 + 5.5 * unit(rng);
        if (std::abs(a - 1.0) < 1e-3) a = 0.5;
        const double rate = 4.0 + 4.0 * unit(rng);
        const auto ri = allocate_rates(w, RenyiOrder::finite(a), kR2, rate);
        rate_err = std::max(rate_err, std::abs(rate_condition_lhs(w, ri, a) - (1.0 - a) * rate) / rate);
    }
    s.at_most("composed entropy: formula vs direct", h_err, 1e-12);
    s.at_most("composed distortion vs sum s_i D_i (relative)", d_err, 1e-12);
    s.at_most("allocated rates: rate identity (relative)", rate_err, 1e-12);
    return s.take();
}

SuiteResult f_minimizer_suite()
{
    Suite s("f_minimizer");
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double excess = -HUGE_VAL;
    double closed = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto w = random_weights(rng, 2 + trial % 4);
        double a = -3.0 + 4.0 * unit(rng);
        if (std::abs(a) < 1e-3) a = -0.5;
        const double r = 1.0 + 3.0 * unit(rng);
        const RenyiOrder alpha = RenyiOrder::finite(a);
        const DistortionExponent rr(r);
        const auto t = f_minimizer(w, alpha, rr);
        const double best = constrained_f(t, w, alpha, rr);
        const ExponentPair e = exponents(alpha, rr);
        double sum = 0.0;
        for (double x : w) sum += std::pow(x, e.a1);
        closed = std::max(closed, rel(best, std::pow(sum, e.a2)));
        std::uniform_real_distribution<double> pos(0.01, 1.0);
        for (int k = 0; k < 1000; ++k) {
            std::vector<double> v(w.size());
            for (double& x : v) x = pos(rng);
            v = project_to_constraint(v, w, a);
            excess = std::max(excess, best - constrained_f(v, w, alpha, rr));
        }
    }
    s.at_most("max F(t) - F(v) over projected v", excess, 1e-12);
    s.at_most("F(t) vs (sum s^a1)^a2 (relative)", closed, 1e-10);
    return s.take();
}

SuiteResult alpha_seam()
{
    Suite s("alpha_seam");
    double lim = 0.0;
    double ent = 0.0;
    double decay = 0.0;
    double growth = -HUGE_VAL;
    double gap50 = 0.0;
    const ProbVector p(std::vector<double>{0.1, 0.2, 0.3, 0.4});
    const double shannon_h = renyi_entropy(p, RenyiOrder::finite(1.0));
    for (const auto& f : corpus()) {
        const double shannon = predicted_limit(f, RenyiOrder::finite(1.0), kR2).value;
        for (double a : {1.0 - 1e-4, 1.0 + 1e-4}) {
            lim = std::max(lim, rel(predicted_limit(f, RenyiOrder::finite(a), kR2).value, shannon));
            ent = std::max(ent, rel(renyi_entropy(p, RenyiOrder::finite(a)), shannon_h));
        }
        const double edge = predicted_limit(f, RenyiOrder::neg_infinity(), kR2).value;
        double prev = HUGE_VAL;
        for (double a : {-50.0, -500.0, -5000.0}) {
            const double gap = rel(predicted_limit(f, RenyiOrder::finite(a), kR2).value, edge);
            if (a == -50.0) gap50 = std::max(gap50, gap);
            decay = std::max(decay, gap * std::abs(a));
            growth = std::max(growth, gap - prev);
            prev = gap;
        }
    }
    s.at_most("predicted limit at 1 +- 1e-4 vs Shannon branch (relative)", lim, 1e-3);
    s.at_most("Renyi entropy at 1 +- 1e-4 vs Shannon (relative)", ent, 1e-3);
    s.at_most("gap to the -inf branch times |alpha|", decay, 3.0);
    s.below("gap to the -inf branch is decreasing in |alpha|", growth, 0.0);
    s.note("relative gap to the -inf branch at alpha = -50: " + format_number(gap50)
           + " (first order in 1/|alpha|)");
    return s.take();
}

SuiteResult pierce_bound()
{
    Suite s("pierce_bound");
    double worst = -HUGE_VAL;
    for (const auto& f : corpus()) {
        const GridInstance inst = GridInstance::subdivided(f, 24, 6);
        for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-2.0), RenyiOrder::finite(-0.5)}) {
            for (int k = 0; k <= 10; ++k) {
                const double rate = 0.2 * k;
                const double v = brute_force_optimal(inst, a, rate, kR2).value;
                worst = std::max(worst, v / pierce_upper_bound(f, kR2, rate));
            }
        }
    }
    s.at_most("max oracle value / (2/i(f))^r e^{-rR}", worst, 1.0);
    return s.take();
}

SuiteResult f_star_optimality()
{
    Suite s("f_star_optimality");
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> factor(0.5, 1.5);
    double worst = -HUGE_VAL;
    for (const auto& f : corpus()) {
        for (double a : {-2.0, 0.5}) {
            const RenyiOrder alpha = RenyiOrder::finite(a);
            const Density star = optimal_point_density(f, alpha, kR2);
            const double best = compander_score(f, star, alpha, kR2);
            const auto* pc = star.piecewise();
            for (int k = 0; k < 200; ++k) {
                std::vector<double> cuts;
                std::vector<double> masses;
                const auto b = pc->breakpoints();
                const auto h = pc->heights();
                for (std::size_t i = 0; i < h.size(); ++i) {
                    const double w = (b[i + 1] - b[i]) / 3.0;
                    for (int j = 0; j < 3; ++j) {
                        cuts.push_back(b[i] + j * w);
                        masses.push_back(h[i] * w * factor(rng));
                    }
                }
                cuts.push_back(b.back());
                const Density g = PiecewiseConstantDensity::from_masses(cuts, masses);
                worst = std::max(worst, best / compander_score(f, g, alpha, kR2) - 1.0);
            }
        }
    }
    s.at_most("max score(f*) / score(g) - 1 over perturbed g", worst, 1e-12);
    return s.take();
}

using SuiteFn = std::function<SuiteResult()>;

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"exponent_identity", exponent_identity},
        {"uniform_exactness", uniform_exactness},
        {"main_theorem_convergence", main_theorem_convergence},
        {"bennett_integral", bennett_integral},
        {"entropy_offset", entropy_offset_suite},
        {"compressed_density_identity", compressed_density_identity},
        {"oracle_monotonicity", oracle_monotonicity},
        {"negative_alpha_uniform", negative_alpha_uniform},
        {"uniform_optimal", uniform_optimal_suite},
        {"scaling_law", scaling_law},
        {"mixture_identities", mixture_identities},
        {"f_minimizer", f_minimizer_suite},
        {"alpha_seam", alpha_seam},
        {"pierce_bound", pierce_bound},
        {"f_star_optimality", f_star_optimality},
    };
    return r;
}

} // namespace

bool SuiteResult::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& SuiteResult::worst() const
{
    // failed checks first, then the one with the least headroom
    auto score = [](const CheckResult& c) {
        if (!c.passed) return HUGE_VAL;
        if (c.tolerance > 0.0) return c.measured / c.tolerance;
        return c.measured - c.tolerance;
    };
    return *std::max_element(checks.begin(), checks.end(),
                             [&](const CheckResult& a, const CheckResult& b) { return score(a) < score(b); });
}

std::vector<std::string> verify_suite_names()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

std::vector<SuiteResult> run_verify(const std::vector<std::string>& only)
{
    for (const auto& name : only) {
        const auto names = verify_suite_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw InvalidArgument("unknown verify suite '" + name + "'");
        }
    }
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) {
        if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            SuiteResult failed{name, {{std::string("exception: ") + e.what(), HUGE_VAL, 0.0, false}}, ""};
            out.push_back(std::move(failed));
        }
    }
    return out;
}

json to_json(const std::vector<SuiteResult>& results)
{
    auto num = [](double x) { return std::isfinite(x) ? json(x) : json(format_number(x)); };
    json suites = json::array();
    bool all = true;
    for (const SuiteResult& r : results) {
        json checks = json::array();
        for (const CheckResult& c : r.checks) {
            checks.push_back({{"check", c.what},
                              {"measured", num(c.measured)},
                              {"tolerance", num(c.tolerance)},
                              {"status", c.passed ? "pass" : "fail"}});
        }
        const CheckResult& w = r.worst();
        json entry{{"name", r.name},
                   {"status", r.passed() ? "pass" : "fail"},
                   {"measured", num(w.measured)},
                   {"tolerance", num(w.tolerance)},
                   {"checks", checks}};
        if (!r.note.empty()) entry["note"] = r.note;
        suites.push_back(entry);
        all = all && r.passed();
    }
    return json{{"status", all ? "pass" : "fail"}, {"suite_count", results.size()}, {"suites", suites}};
}

} // namespace quant
