#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace quant {

/// Argument outside the domain an operation is defined on.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Rényi order (or distortion exponent) outside the regime an operation covers.
class RegimeError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Iterative numerics failed to produce a usable answer.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Half-width of the window around 1 in which the finite-order formulas are
/// refused; callers dispatch the Shannon branch explicitly.
inline constexpr double kShannonWindow = 1e-9;

/// Extended-real order in [-inf, +inf].
class RenyiOrder {
  public:
    enum class Kind { NegInfinity, Finite, PosInfinity };

    static constexpr RenyiOrder neg_infinity() { return RenyiOrder(Kind::NegInfinity, 0.0); }
    static constexpr RenyiOrder pos_infinity() { return RenyiOrder(Kind::PosInfinity, 0.0); }
    static RenyiOrder finite(double value);

    /// Parses "neg_inf", "pos_inf", "-inf", "inf" or a decimal number.
    static RenyiOrder parse(const std::string& text);

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_neg_infinity() const { return kind_ == Kind::NegInfinity; }
    constexpr bool is_pos_infinity() const { return kind_ == Kind::PosInfinity; }

    /// True for the finite order 1 (exactly, or within kShannonWindow).
    bool is_shannon() const;

    /// Finite value; throws for the infinite orders.
    double value() const;

    /// Value as an extended double (+-infinity for the infinite orders).
    double as_double() const;

    std::string to_string() const;

    friend std::partial_ordering operator<=>(const RenyiOrder& a, const RenyiOrder& b)
    {
        return a.as_double() <=> b.as_double();
    }
    friend bool operator==(const RenyiOrder& a, const RenyiOrder& b)
    {
        return a.kind_ == b.kind_ && a.value_ == b.value_;
    }

  private:
    constexpr RenyiOrder(Kind kind, double value) : kind_(kind), value_(value) {}

    Kind kind_;
    double value_;
};

/// Exponent r >= 1 of the distortion |x - q(x)|^r.
class DistortionExponent {
  public:
    explicit DistortionExponent(double r);

    constexpr double value() const { return r_; }

  private:
    double r_;
};

struct ExponentPair {
    double a1;
    double a2;
};

/// C(r) = 1 / ((1 + r) 2^r), the normalized distortion of a uniform
/// quantizer on a uniform source.
double distortion_constant(DistortionExponent r);

/// High-resolution exponents (a1, a2) for a finite order alpha < 1 + r,
/// alpha != 1. For alpha = -inf only a1 = 1 - r is meaningful and a2 is
/// returned as 1.
ExponentPair exponents(RenyiOrder alpha, DistortionExponent r);

namespace fault {

/// Multiplies every distortion_constant() result; 1.0 disables the fault.
/// Used only by the self-verification command to prove its suites are live.
void set_distortion_constant_scale(double scale);
double distortion_constant_scale();

} // namespace fault

} // namespace quant
