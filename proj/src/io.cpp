#include "quant/io.hpp"

#include <fstream>
#include <sstream>

namespace quant {

namespace {

const json& field(const json& obj, const char* key)
{
    if (!obj.is_object()) {
        throw SpecError("expected a JSON object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SpecError(std::string("missing field '") + key + "'");
    }
    return *it;
}

double number(const json& obj, const char* key)
{
    const json& v = field(obj, key);
    if (!v.is_number()) {
        throw SpecError(std::string("field '") + key + "' must be a number");
    }
    return v.get<double>();
}

std::vector<double> numbers(const json& obj, const char* key)
{
    const json& v = field(obj, key);
    if (!v.is_array()) {
        throw SpecError(std::string("field '") + key + "' must be an array of numbers");
    }
    std::vector<double> out;
    for (const json& x : v) {
        if (!x.is_number()) {
            throw SpecError(std::string("field '") + key + "' must be an array of numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

std::size_t count(const json& obj, const char* key)
{
    const json& v = field(obj, key);
    if (!v.is_number_unsigned()) {
        throw SpecError(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

// Library validation failures inside a spec are reported as spec errors.
template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const SpecError&) {
        throw;
    } catch (const InvalidArgument& e) {
        throw SpecError(e.what());
    } catch (const json::exception& e) {
        throw SpecError(e.what());
    }
}

Interval window(const json& spec)
{
    return Interval(number(spec, "lo"), number(spec, "hi"));
}

PiecewiseConstantDensity piecewise_from_json(const json& spec)
{
    auto bps = numbers(spec, "breakpoints");
    const bool has_h = spec.contains("heights");
    const bool has_m = spec.contains("masses");
    if (has_h == has_m) {
        throw SpecError("piecewise density needs exactly one of 'heights' or 'masses'");
    }
    if (has_m) {
        return PiecewiseConstantDensity::from_masses(std::move(bps), numbers(spec, "masses"));
    }
    return PiecewiseConstantDensity(std::move(bps), numbers(spec, "heights"));
}

} // namespace

MixtureSpec mixture_from_json(const json& spec)
{
    return guarded([&] {
        const auto partition = numbers(spec, "partition");
        const auto weights = numbers(spec, "weights");
        const json& comps = field(spec, "components");
        if (!comps.is_array()) {
            throw SpecError("'components' must be an array");
        }
        if (weights.size() != comps.size() || partition.size() != comps.size() + 1) {
            throw SpecError("mixture needs m weights, m components and m+1 partition points");
        }
        std::vector<MixtureComponent> parts;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            Density d = density_from_json(comps[i]);
            const Interval want(partition[i], partition[i + 1]);
            const Interval got = d.support();
            const double tol = 1e-12 * want.length();
            if (std::abs(got.lo - want.lo) > tol || std::abs(got.hi - want.hi) > tol) {
                throw SpecError("mixture component " + std::to_string(i)
                                + " does not match its partition interval");
            }
            parts.push_back({weights[i], std::move(d)});
        }
        return MixtureSpec(std::move(parts));
    });
}

Density density_from_json(const json& spec)
{
    return guarded([&]() -> Density {
        const json& kind = field(spec, "kind");
        if (!kind.is_string()) {
            throw SpecError("'kind' must be a string");
        }
        const std::string k = kind.get<std::string>();
        if (k == "uniform") {
            return uniform_density(number(spec, "lo"), number(spec, "hi"));
        }
        if (k == "piecewise") {
            return piecewise_from_json(spec);
        }
        if (k == "truncated_laplace") {
            return truncated_laplace(number(spec, "mu"), number(spec, "scale"), window(spec));
        }
        if (k == "truncated_gauss") {
            return truncated_gaussian(number(spec, "mu"), number(spec, "sigma"), window(spec));
        }
        if (k == "mixture") {
            return mixture_from_json(spec).density();
        }
        throw SpecError("unknown density kind '" + k + "'");
    });
}

json load_spec(const std::string& path_or_inline)
{
    std::string text;
    const auto first = path_or_inline.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && path_or_inline[first] == '{') {
        text = path_or_inline;
    } else {
        std::ifstream in(path_or_inline);
        if (!in) {
            throw SpecError("cannot open '" + path_or_inline + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("invalid JSON: ") + e.what());
    }
}

RenyiOrder order_from_json(const json& value)
{
    return guarded([&] {
        if (value.is_string()) {
            return RenyiOrder::parse(value.get<std::string>());
        }
        if (value.is_number()) {
            return RenyiOrder::finite(value.get<double>());
        }
        throw SpecError("order must be a number or one of neg_inf/pos_inf");
    });
}

json to_json(RenyiOrder alpha)
{
    if (alpha.is_finite()) {
        return alpha.value();
    }
    return alpha.is_neg_infinity() ? "neg_inf" : "pos_inf";
}

json to_json(const IntervalQuantizer& q)
{
    return json{{"boundaries", std::vector<double>(q.boundaries().begin(), q.boundaries().end())},
                {"codepoints", std::vector<double>(q.codepoints().begin(), q.codepoints().end())}};
}

IntervalQuantizer quantizer_from_json(const json& j)
{
    return guarded([&] { return IntervalQuantizer(numbers(j, "boundaries"), numbers(j, "codepoints")); });
}

GridInstance instance_from_json(const json& spec)
{
    return guarded([&] {
        const Density d = density_from_json(field(spec, "density"));
        const auto* pc = d.piecewise();
        if (pc == nullptr) {
            throw SpecError("oracle instances need a piecewise-constant density");
        }
        const std::size_t cells = count(spec, "max_cells");
        const bool has_grid = spec.contains("grid");
        if (has_grid == spec.contains("grid_points")) {
            throw SpecError("instance needs exactly one of 'grid' or 'grid_points'");
        }
        if (has_grid) {
            return GridInstance(*pc, numbers(spec, "grid"), cells);
        }
        return GridInstance::regular(*pc, count(spec, "grid_points"), cells);
    });
}

json to_json(const OracleBaseline& b)
{
    json entries = json::array();
    for (const auto& e : b.entries) {
        entries.push_back({{"alpha", to_json(e.alpha)},
                           {"value", e.value},
                           {"argmin", to_json(e.argmin)},
                           {"feasible_count", e.feasible_count}});
    }
    return json{{"rate", b.rate}, {"r", b.r}, {"entries", entries}};
}

OracleBaseline baseline_from_json(const json& j)
{
    return guarded([&] {
        OracleBaseline b{number(j, "rate"), number(j, "r"), {}};
        const json& entries = field(j, "entries");
        if (!entries.is_array()) {
            throw SpecError("'entries' must be an array");
        }
        for (const json& e : entries) {
            b.entries.push_back({order_from_json(field(e, "alpha")), number(e, "value"),
                                 quantizer_from_json(field(e, "argmin")), count(e, "feasible_count")});
        }
        return b;
    });
}

} // namespace quant
