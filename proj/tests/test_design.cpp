#include "doctest.h"

#include <cmath>
#include <random>

#include "quant/design.hpp"
#include "quant/entropy.hpp"
#include "support.hpp"

using namespace quant;
using quant::test::rel_err;
using quant::test::two_mass;

namespace {

const DistortionExponent kR2(2.0);

double normalized(const IntervalQuantizer& q, const Density& f, RenyiOrder a, DistortionExponent r)
{
    return std::exp(r.value() * quantizer_entropy(q, f, a)) * distortion(q, f, r);
}

// Random positive perturbation of g, renormalized; stays a valid point density.
Density perturb(std::mt19937_64& rng, const Density& g)
{
    const auto* pc = g.piecewise();
    std::uniform_real_distribution<double> factor(0.5, 1.5);
    // refine each piece into three so the perturbation has its own shape
    std::vector<double> cuts;
    std::vector<double> masses;
    const auto b = pc->breakpoints();
    const auto h = pc->heights();
    for (std::size_t k = 0; k < h.size(); ++k) {
        const double w = (b[k + 1] - b[k]) / 3.0;
        for (int j = 0; j < 3; ++j) {
            cuts.push_back(b[k] + j * w);
            masses.push_back(h[k] * w * factor(rng));
        }
    }
    cuts.push_back(b.back());
    return PiecewiseConstantDensity::from_masses(std::move(cuts), masses);
}

} // namespace

TEST_CASE("optimal_point_density examples")
{
    const Density u = uniform_density(-1, 3);
    for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-2.0), RenyiOrder::finite(0.0),
                         RenyiOrder::finite(0.5), RenyiOrder::finite(1.0), RenyiOrder::finite(2.5)}) {
        const Density g = optimal_point_density(u, a, kR2);
        CHECK(g.pdf(0.7) == doctest::Approx(0.25).epsilon(1e-14));
    }
    const Density same = optimal_point_density(two_mass(), RenyiOrder::neg_infinity(), kR2);
    CHECK(same.pdf(0.2) == 0.5);
    CHECK(same.pdf(0.8) == 1.5);

    const Density star = optimal_point_density(two_mass(), RenyiOrder::finite(0.5), kR2);
    CHECK(star.pdf(0.2) == doctest::Approx(0.890579).epsilon(1e-6));
    CHECK(star.pdf(0.8) == doctest::Approx(1.109421).epsilon(1e-6));
    CHECK(star.pdf(0.2) == doctest::Approx(std::pow(0.5, 0.2) / 0.977511).epsilon(1e-6));

    const Density shannon = optimal_point_density(two_mass(), RenyiOrder::finite(1.0), kR2);
    CHECK(shannon.pdf(0.2) == doctest::Approx(1.0));
    // alpha = 0 reduces to f^{1/(1+r)}
    const Density zero = optimal_point_density(two_mass(), RenyiOrder::finite(0.0), kR2);
    const double z = 0.5 * std::cbrt(0.5) + 0.5 * std::cbrt(1.5);
    CHECK(zero.pdf(0.8) == doctest::Approx(std::cbrt(1.5) / z).epsilon(1e-14));

    CHECK_THROWS_AS(optimal_point_density(two_mass(), RenyiOrder::finite(3.0), kR2), RegimeError);
    CHECK_THROWS_AS(optimal_point_density(two_mass(), RenyiOrder::pos_infinity(), kR2), RegimeError);
}

TEST_CASE("optimal point density on the quadrature path")
{
    const Density f = truncated_gaussian(0.0, 0.7, Interval(-1, 1));
    const Density g = optimal_point_density(f, RenyiOrder::finite(0.5), kR2);
    // ratio g / f^{0.2} is constant
    const double k = g.pdf(0.0) / std::pow(f.pdf(0.0), 0.2);
    for (double x : {-0.9, -0.3, 0.4, 0.95}) {
        CHECK(rel_err(g.pdf(x) / std::pow(f.pdf(x), 0.2), k) < 1e-9);
    }
    CHECK(std::abs(g.cdf(1.0) - 1.0) < 1e-12);
}

TEST_CASE("predicted_limit examples")
{
    const Density u = uniform_density(0, 1);
    const Density u2 = uniform_density(0, 2);
    for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-5.0), RenyiOrder::finite(0.0),
                         RenyiOrder::finite(0.5), RenyiOrder::finite(1.0), RenyiOrder::finite(2.9)}) {
        CHECK(predicted_limit(u, a, kR2).value == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
        CHECK(predicted_limit(u2, a, kR2).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(predicted_limit(u, a, kR2).rate_exponent == 2.0);
    }
    const PredictedLimit p = predicted_limit(two_mass(), RenyiOrder::finite(0.5), kR2);
    CHECK(p.value == doctest::Approx(0.0706763117831173).epsilon(1e-13));
    CHECK(p.regime == LimitRegime::FiniteAlphaBelow1pr);
    CHECK(predicted_limit(two_mass(), RenyiOrder::finite(-2.0), kR2).value
          == doctest::Approx(0.0883082364998853).epsilon(1e-13));
    const PredictedLimit n = predicted_limit(two_mass(), RenyiOrder::neg_infinity(), kR2);
    CHECK(n.value == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK(n.regime == LimitRegime::NegInfinity);
    const PredictedLimit s = predicted_limit(two_mass(), RenyiOrder::finite(1.0), kR2);
    CHECK(s.regime == LimitRegime::Shannon);
    CHECK(s.value == doctest::Approx(std::exp(-2.0 * 0.130812035941137) / 12.0).epsilon(1e-13));
    CHECK_THROWS_AS(predicted_limit(two_mass(), RenyiOrder::finite(3.0), kR2), RegimeError);
    CHECK_THROWS_AS(predicted_limit(two_mass(), RenyiOrder::pos_infinity(), kR2), RegimeError);
}

TEST_CASE("predicted_limit_high_alpha examples")
{
    const PredictedLimit u = predicted_limit_high_alpha(uniform_density(0, 1), RenyiOrder::pos_infinity(), kR2);
    CHECK(u.value == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(u.rate_exponent == 3.0);
    CHECK(u.regime == LimitRegime::HighAlpha);
    const PredictedLimit t = predicted_limit_high_alpha(two_mass(), RenyiOrder::finite(3.0), kR2);
    CHECK(t.value == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
    CHECK(t.rate_exponent == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(predicted_limit_high_alpha(uniform_density(0, 2), RenyiOrder::pos_infinity(), kR2).value
          == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(predicted_limit_high_alpha(two_mass(), RenyiOrder::finite(6.0), kR2).rate_exponent
          == doctest::Approx(2.5).epsilon(1e-15));
    CHECK_THROWS_AS(predicted_limit_high_alpha(two_mass(), RenyiOrder::finite(2.5), kR2), RegimeError);

    CHECK(predict(two_mass(), RenyiOrder::finite(4.0), kR2).regime == LimitRegime::HighAlpha);
    CHECK(predict(two_mass(), RenyiOrder::finite(2.0), kR2).regime == LimitRegime::FiniteAlphaBelow1pr);
    CHECK(to_string(LimitRegime::NegInfinity) == "neg_infinity");
}

TEST_CASE("predicted limit scaling covariance")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Density f = quant::test::random_piecewise(rng, 4, 0.0, 1.0);
        const double c = 0.1 + 5.0 * unit(rng);
        const double t = -3.0 + 6.0 * unit(rng);
        const Density fm = similarity_transform(f, c, t, trial % 2 == 0);
        for (double r : {1.0, 2.0, 3.0}) {
            const DistortionExponent rr(r);
            for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-1.0),
                                 RenyiOrder::finite(0.5), RenyiOrder::finite(1.0),
                                 RenyiOrder::finite(1.5 + r), RenyiOrder::pos_infinity()}) {
                CHECK(rel_err(predict(fm, a, rr).value, std::pow(c, r) * predict(f, a, rr).value) < 1e-9);
            }
        }
    }
}

TEST_CASE("alpha continuity of the predicted limit")
{
    for (const auto& f : quant::test::piecewise_corpus()) {
        const double shannon = predicted_limit(f, RenyiOrder::finite(1.0), kR2).value;
        for (double a : {1.0 - 1e-4, 1.0 + 1e-4}) {
            CHECK(rel_err(predicted_limit(f, RenyiOrder::finite(a), kR2).value, shannon) < 1e-3);
        }
        // Approach to the -inf branch is first order in 1/|alpha|.
        const double edge = predicted_limit(f, RenyiOrder::neg_infinity(), kR2).value;
        double prev = 1.0;
        for (double a : {-50.0, -500.0, -5000.0, -50000.0}) {
            const double gap = rel_err(predicted_limit(f, RenyiOrder::finite(a), kR2).value, edge);
            CHECK(gap < prev);
            CHECK(gap * std::abs(a) < 3.0);
            prev = gap;
        }
    }
}

TEST_CASE("design_compander")
{
    const Density u = uniform_density(0, 1);
    for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-1.0), RenyiOrder::finite(0.5),
                         RenyiOrder::finite(1.0)}) {
        for (std::size_t n : {1u, 5u, 64u}) {
            const auto q = design_compander(u, a, kR2, n);
            const auto ref = uniform_quantizer(Interval(0, 1), n);
            for (std::size_t i = 0; i <= n; ++i) {
                CHECK(std::abs(q.boundaries()[i] - ref.boundaries()[i]) < 1e-14);
            }
            CHECK(rel_err(normalized(q, u, a, kR2), 1.0 / 12.0) < 1e-12);
        }
    }
    CHECK(design_compander(two_mass(), RenyiOrder::neg_infinity(), kR2, 16)
          == compand_build(Compander(two_mass()), 16));
    const auto q = design_compander(two_mass(), RenyiOrder::finite(0.5), kR2, 1024);
    CHECK(rel_err(normalized(q, two_mass(), RenyiOrder::finite(0.5), kR2), 0.0706763117831173) < 0.02);
}

TEST_CASE("main theorem convergence on the two-mass density")
{
    struct Case {
        RenyiOrder alpha;
        double prediction;
    };
    for (const Case& c : {Case{RenyiOrder::finite(0.5), 0.0706763117831173},
                          Case{RenyiOrder::finite(-2.0), 0.0883082364998853},
                          Case{RenyiOrder::neg_infinity(), 1.0 / 9.0}}) {
        CHECK(rel_err(predicted_limit(two_mass(), c.alpha, kR2).value, c.prediction) < 1e-12);
        double dev64 = 0.0;
        double dev2048 = 0.0;
        for (std::size_t n = 16; n <= 2048; n *= 2) {
            const auto q = design_compander(two_mass(), c.alpha, kR2, n);
            const double dev = std::abs(normalized(q, two_mass(), c.alpha, kR2) - c.prediction);
            if (n == 64) dev64 = dev;
            if (n == 2048) dev2048 = dev;
        }
        CHECK(dev2048 / c.prediction < 0.02);
        if (dev64 > 1e-12 * c.prediction) {
            CHECK(dev2048 < dev64);
        } else {
            // g = f at alpha = -inf: equal-mass cells make the value exact for N divisible by 4
            CHECK(dev2048 < 1e-12 * c.prediction);
        }
    }
}

TEST_CASE("uniform_optimal examples")
{
    const Interval unit(0, 1);
    auto q = uniform_optimal(unit, RenyiOrder::finite(0.5), std::log(2.0), kR2);
    CHECK(q == uniform_quantizer(unit, 2));
    CHECK(distortion(q, uniform_density(0, 1), kR2) == doctest::Approx(1.0 / 48.0).epsilon(1e-15));
    q = uniform_optimal(unit, RenyiOrder::finite(-2.0), 1.0, kR2);
    CHECK(q.levels() == 2);
    CHECK(distortion(q, uniform_density(0, 1), kR2) == doctest::Approx(1.0 / 48.0).epsilon(1e-15));

    q = uniform_optimal(unit, RenyiOrder::finite(0.5), std::log(2.5), kR2);
    CHECK(q.levels() == 3);
    CHECK(std::abs(quantizer_entropy(q, uniform_density(0, 1), RenyiOrder::finite(0.5)) - std::log(2.5))
          < 1e-10);
    CHECK(q.cell(0).length() == doctest::Approx(q.cell(1).length()).epsilon(1e-14));
    CHECK(q.cell(2).length() == doctest::Approx(0.0375247044257356).epsilon(1e-9));
    CHECK(distortion(q, uniform_density(0, 1), kR2) == doctest::Approx(0.0185793481884567).epsilon(1e-10));

    q = uniform_optimal(unit, RenyiOrder::finite(2.0), std::log(2.5), DistortionExponent(3.0));
    CHECK(q.cell(2).length() == doctest::Approx(0.122514822655441).epsilon(1e-9));
    CHECK(distortion(q, uniform_density(0, 1), DistortionExponent(3.0))
          == doctest::Approx(0.00232293725368811).epsilon(1e-10));

    CHECK_THROWS_AS(uniform_optimal(unit, RenyiOrder::finite(3.0), 1.0, kR2), RegimeError);
    CHECK_THROWS_AS(uniform_optimal(unit, RenyiOrder::finite(0.5), 1.0, DistortionExponent(1.0)),
                    RegimeError);
    CHECK_THROWS_AS(uniform_optimal(unit, RenyiOrder::finite(0.5), -1.0, kR2), InvalidArgument);
}

TEST_CASE("uniform_optimal entropy and distortion")
{
    const Interval span(-2, 1);
    const Density u = uniform_density(-2, 1);
    for (double r : {1.5, 2.0, 3.0}) {
        const DistortionExponent rr(r);
        const double c = distortion_constant(rr);
        for (std::size_t n = 1; n <= 20; ++n) {
            for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-1.0),
                                 RenyiOrder::finite(0.0), RenyiOrder::finite(0.5),
                                 RenyiOrder::finite(1.0), RenyiOrder::finite(r)}) {
                const auto q = uniform_optimal(span, a, std::log(double(n)), rr);
                CHECK(q.levels() == n);
                CHECK(rel_err(distortion(q, u, rr), c * std::pow(double(n), -r) * std::pow(3.0, r))
                      < 1e-12);
            }
        }
        for (double rate : {0.3, 1.1, 2.0, 3.7}) {
            const std::size_t floor_n = std::size_t(std::floor(std::exp(rate)));
            for (RenyiOrder a : {RenyiOrder::neg_infinity(), RenyiOrder::finite(-1.0),
                                 RenyiOrder::finite(0.0)}) {
                const auto q = uniform_optimal(span, a, rate, rr);
                CHECK(quantizer_entropy(q, u, a) == doctest::Approx(std::log(double(floor_n))).epsilon(1e-14));
                CHECK(quantizer_entropy(q, u, a) <= rate);
            }
            for (RenyiOrder a : {RenyiOrder::finite(0.3), RenyiOrder::finite(1.0),
                                 RenyiOrder::finite(0.9 + r)}) {
                const auto q = uniform_optimal(span, a, rate, rr);
                CHECK(std::abs(quantizer_entropy(q, u, a) - rate) < 1e-10);
            }
        }
    }
}

TEST_CASE("pierce_upper_bound examples")
{
    CHECK(pierce_upper_bound(uniform_density(0, 1), kR2, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(pierce_upper_bound(uniform_density(0, 1), kR2, std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pierce_upper_bound(two_mass(), kR2, 1.0) == doctest::Approx(16.0 * std::exp(-2.0)).epsilon(1e-15));
    CHECK(pierce_upper_bound(two_mass(), kR2, 1.0) == doctest::Approx(2.16536).epsilon(1e-5));
    CHECK_THROWS_AS(pierce_upper_bound(SmoothDensity([](double x) { return x; }, Interval(0, 1)), kR2, 1.0),
                    InvalidArgument);
}

TEST_CASE("optimal point density minimizes the compander score")
{
    std::mt19937_64 rng(43);
    for (const auto& f : quant::test::piecewise_corpus()) {
        for (double a : {-2.0, 0.5}) {
            const RenyiOrder alpha = RenyiOrder::finite(a);
            const Density star = optimal_point_density(f, alpha, kR2);
            const double best = compander_score(f, star, alpha, kR2);
            // the score at f* is the predicted limit divided by C(r)
            CHECK(rel_err(best * distortion_constant(kR2), predicted_limit(f, alpha, kR2).value) < 1e-12);
            for (int k = 0; k < 200; ++k) {
                CHECK(best <= compander_score(f, perturb(rng, star), alpha, kR2) * (1.0 + 1e-12));
            }
        }
    }
}
