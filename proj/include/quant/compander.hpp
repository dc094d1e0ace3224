#pragma once

#include "quant/core.hpp"
#include "quant/density.hpp"
#include "quant/quantizer.hpp"

namespace quant {

/// Point density g on a compact interval with its compressor G (the cdf of g)
/// and expander G^ (the generalized inverse of G).
class Compander {
  public:
    /// Rejects point densities that are not bounded away from zero.
    explicit Compander(Density point_density);

    const Density& point_density() const { return g_; }
    Interval support() const { return g_.support(); }

    double compress(double x) const { return g_.cdf(x); }
    double expand(double u) const { return g_.quantile(u); }

  private:
    Density g_;
};

/// N-level companding quantizer: boundaries G^(i/N), codepoints G^((2i-1)/2N).
IntervalQuantizer compand_build(const Compander& c, std::size_t levels);

/// Same cells as compand_build, with cell midpoints as codepoints.
IntervalQuantizer midpoint_variant(const Compander& c, std::size_t levels);

/// Bennett's high-resolution distortion C(r) * int f / g^r.
double bennett_functional(const Density& f, const Density& g, DistortionExponent r);

/// Predicted limit of H^alpha(Q_{g,N}) - log N, i.e. -D_alpha(f || g).
double entropy_offset(const Density& f, const Density& g, RenyiOrder alpha);

/// Density of G(X) for X ~ f: f(G^(y)) / g(G^(y)) on [G(lo_f), G(hi_f)].
Density compressed_density(const Density& f, const Compander& c);

} // namespace quant
