#include "quant/core.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace quant {

namespace {

std::atomic<double> g_constant_scale{1.0};

} // namespace

RenyiOrder RenyiOrder::finite(double value)
{
    if (std::isnan(value)) {
        throw InvalidArgument("Renyi order must not be NaN");
    }
    if (std::isinf(value)) {
        return value > 0 ? pos_infinity() : neg_infinity();
    }
    return RenyiOrder(Kind::Finite, value);
}

RenyiOrder RenyiOrder::parse(const std::string& text)
{
    if (text == "neg_inf" || text == "-inf" || text == "-infinity") {
        return neg_infinity();
    }
    if (text == "pos_inf" || text == "inf" || text == "+inf" || text == "infinity") {
        return pos_infinity();
    }
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw InvalidArgument("cannot parse Renyi order '" + text + "'");
    }
    return finite(v);
}

bool RenyiOrder::is_shannon() const
{
    return kind_ == Kind::Finite && std::abs(value_ - 1.0) <= kShannonWindow;
}

double RenyiOrder::value() const
{
    if (kind_ != Kind::Finite) {
        throw RegimeError("infinite Renyi order has no finite value");
    }
    return value_;
}

double RenyiOrder::as_double() const
{
    switch (kind_) {
    case Kind::NegInfinity:
        return -std::numeric_limits<double>::infinity();
    case Kind::PosInfinity:
        return std::numeric_limits<double>::infinity();
    case Kind::Finite:
        break;
    }
    return value_;
}

std::string RenyiOrder::to_string() const
{
    switch (kind_) {
    case Kind::NegInfinity:
        return "neg_inf";
    case Kind::PosInfinity:
        return "pos_inf";
    case Kind::Finite:
        break;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
}

DistortionExponent::DistortionExponent(double r) : r_(r)
{
    if (!(r >= 1.0) || !std::isfinite(r)) {
        throw InvalidArgument("distortion exponent r must be finite and >= 1");
    }
}

double distortion_constant(DistortionExponent r)
{
    const double rv = r.value();
    return g_constant_scale.load(std::memory_order_relaxed) / ((1.0 + rv) * std::pow(2.0, rv));
}

ExponentPair exponents(RenyiOrder alpha, DistortionExponent r)
{
    const double rv = r.value();
    if (alpha.is_neg_infinity()) {
        return {1.0 - rv, 1.0};
    }
    if (alpha.is_pos_infinity()) {
        throw RegimeError("exponents undefined for alpha = +inf");
    }
    if (alpha.is_shannon()) {
        throw RegimeError("exponents undefined at alpha = 1; use the Shannon branch");
    }
    const double a = alpha.value();
    if (a >= 1.0 + rv) {
        throw RegimeError("exponents require alpha < 1 + r");
    }
    return {(1.0 - a + a * rv) / (1.0 - a + rv), (1.0 - a + rv) / (1.0 - a)};
}

namespace fault {

void set_distortion_constant_scale(double scale)
{
    g_constant_scale.store(scale, std::memory_order_relaxed);
}

double distortion_constant_scale()
{
    return g_constant_scale.load(std::memory_order_relaxed);
}

} // namespace fault

} // namespace quant
