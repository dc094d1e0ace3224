#pragma once

#include <span>
#include <vector>

#include "quant/core.hpp"
#include "quant/density.hpp"
#include "quant/quantizer.hpp"

namespace quant {

struct MixtureComponent {
    double weight;
    Density density;
};

/// Source split into m >= 2 components with positive weights summing to one
/// and supports that tile an interval from left to right.
class MixtureSpec {
  public:
    explicit MixtureSpec(std::vector<MixtureComponent> components);

    std::size_t size() const { return components_.size(); }
    const MixtureComponent& operator[](std::size_t i) const { return components_[i]; }
    std::vector<double> weights() const;
    Interval support() const;

    /// sum_i s_i f_i as a single density.
    Density density() const;

  private:
    std::vector<MixtureComponent> components_;
};

/// t_i = s_i^{1/a2} (sum_j s_j^{a1})^{-1/(1-alpha)}; satisfies
/// sum_i s_i^alpha t_i^{1-alpha} = 1.
std::vector<double> allocation_weights(std::span<const double> s, RenyiOrder alpha,
                                       DistortionExponent r);

/// R_i = R + log t_i. Rejects R below max_i(-log t_i).
std::vector<double> allocate_rates(std::span<const double> s, RenyiOrder alpha,
                                   DistortionExponent r, double rate);

/// log sum_i s_i^alpha e^{(1-alpha) R_i}, the left side of the composition rate
/// condition.
double rate_condition_lhs(std::span<const double> s, std::span<const double> rates, double alpha);

/// Whether component rates R_i guarantee a composed rate of at most R:
/// lhs <= (1 - alpha) R for alpha in [0, 1), lhs >= (1 - alpha) R for alpha > 1.
bool check_rate_condition(std::span<const double> s, std::span<const double> rates, double rate,
                          RenyiOrder alpha);

/// Rényi entropy of a composed quantizer from the component entropies:
/// (1/(1-alpha)) log sum_i s_i^alpha e^{(1-alpha) H_i}, with the matching
/// Shannon and +-inf forms.
double composed_entropy(std::span<const double> s, std::span<const double> entropies,
                        RenyiOrder alpha);

/// Concatenation of per-component quantizers (left to right).
IntervalQuantizer compose(const MixtureSpec& spec, std::span<const IntervalQuantizer> parts);

/// F(v) = sum_i s_i v_i^{-r}.
double f_functional(std::span<const double> v, std::span<const double> s, DistortionExponent r);

/// sum_i s_i^alpha v_i^{1-alpha}; the feasible set of the minimization is
/// where this equals one.
double weight_constraint(std::span<const double> v, std::span<const double> s, double alpha);

/// Rescales v onto the constraint surface weight_constraint(v) = 1.
std::vector<double> project_to_constraint(std::span<const double> v, std::span<const double> s,
                                          double alpha);

/// F(v) for a feasible v; rejects v off the constraint by more than tol.
double constrained_f(std::span<const double> v, std::span<const double> s, RenyiOrder alpha,
                     DistortionExponent r, double tol = 1e-9);

/// Minimizer of F over the constraint surface, for finite alpha < 1.
std::vector<double> f_minimizer(std::span<const double> s, RenyiOrder alpha,
                                DistortionExponent r);

} // namespace quant
