#pragma once

#include <span>
#include <vector>

#include "quant/core.hpp"
#include "quant/density.hpp"

namespace quant {

/// Finite probability vector; zero entries are allowed.
class ProbVector {
  public:
    explicit ProbVector(std::vector<double> weights);

    std::span<const double> weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }

  private:
    std::vector<double> weights_;
};

/// Rényi entropy (natural log) of a probability vector for any order in
/// [-inf, +inf]. Zero entries are dropped (0^0 = 0, 0 log 0 = 0), so order 0
/// gives the log of the support size.
double renyi_entropy(const ProbVector& p, RenyiOrder alpha);

/// Rényi differential entropy of a density.
double differential_entropy(const Density& d, RenyiOrder alpha);

/// Rényi divergence D_alpha(f || g). Requires supp f within supp g.
double relative_entropy(const Density& f, const Density& g, RenyiOrder alpha);

/// Throws RegimeError when alpha is finite, within kShannonWindow of 1, but
/// not exactly 1.
void require_off_shannon_seam(RenyiOrder alpha);

} // namespace quant
