#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "quant/density.hpp"
#include "quant/mixture.hpp"
#include "quant/oracle.hpp"
#include "quant/quantizer.hpp"

namespace quant {

using nlohmann::json;

/// Malformed or inconsistent input specification.
class SpecError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Density from a spec object:
///   {"kind": "uniform", "lo", "hi"}
///   {"kind": "piecewise", "breakpoints", "heights" | "masses"}
///   {"kind": "truncated_laplace", "mu", "scale", "lo", "hi"}
///   {"kind": "truncated_gauss", "mu", "sigma", "lo", "hi"}
///   {"kind": "mixture", "partition", "weights", "components"}
Density density_from_json(const json& spec);

/// Mixture part of the schema; component i must live on [partition[i], partition[i+1]].
MixtureSpec mixture_from_json(const json& spec);

/// Reads a density spec from a file path, or parses the argument itself when it
/// starts with '{'.
json load_spec(const std::string& path_or_inline);

RenyiOrder order_from_json(const json& value);
json to_json(RenyiOrder alpha);

json to_json(const IntervalQuantizer& q);
IntervalQuantizer quantizer_from_json(const json& j);

/// {"density": piecewise spec, "grid": [...] | "grid_points": n, "max_cells": k}
GridInstance instance_from_json(const json& spec);

struct BaselineEntry {
    RenyiOrder alpha;
    double value;
    IntervalQuantizer argmin;
    std::size_t feasible_count;

    bool operator==(const BaselineEntry&) const = default;
};

struct OracleBaseline {
    double rate;
    double r;
    std::vector<BaselineEntry> entries;

    bool operator==(const OracleBaseline&) const = default;
};

json to_json(const OracleBaseline& b);
OracleBaseline baseline_from_json(const json& j);

} // namespace quant
