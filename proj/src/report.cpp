#include "quant/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "quant/entropy.hpp"
#include "quant/parallel.hpp"

namespace quant {

namespace {

constexpr const char* kHeader = "N,entropy,distortion,normalized";

double parse_double(const std::string& text)
{
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(text, &used);
    } catch (const std::exception&) {
        throw SpecError("not a number: '" + text + "'");
    }
    if (used != text.size()) {
        throw SpecError("not a number: '" + text + "'");
    }
    return x;
}

} // namespace

Normalization parse_normalization(const std::string& text)
{
    if (text == "entropy") {
        return Normalization::Entropy;
    }
    if (text == "levels") {
        return Normalization::Levels;
    }
    throw SpecError("normalization must be 'entropy' or 'levels'");
}

std::string to_string(Normalization n)
{
    return n == Normalization::Entropy ? "entropy" : "levels";
}

ConvergenceReport run_sweep(const Density& f, RenyiOrder alpha, DistortionExponent r,
                            const std::vector<std::size_t>& levels, Normalization normalization)
{
    if (levels.empty()) {
        throw InvalidArgument("sweep needs at least one N");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] == 0 || (i > 0 && levels[i] <= levels[i - 1])) {
            throw InvalidArgument("N values must be positive and strictly increasing");
        }
    }
    // Regime problems surface here, before any row is computed.
    const PredictedLimit limit = predicted_limit(f, alpha, r);
    const Density star = optimal_point_density(f, alpha, r);
    const double predicted = normalization == Normalization::Entropy
                                 ? limit.value
                                 : bennett_functional(f, star, r);
    const Compander compander(star);
    const double rv = r.value();

    std::vector<ReportRow> rows(levels.size());
    parallel_for(levels.size(), [&](std::size_t i) {
        ReportRow& row = rows[i];
        row.levels = levels[i];
        try {
            const IntervalQuantizer q = compand_build(compander, levels[i]);
            row.entropy = quantizer_entropy(q, f, alpha);
            row.distortion = distortion(q, f, r);
            const double log_scale = normalization == Normalization::Entropy
                                         ? row.entropy
                                         : std::log(double(levels[i]));
            row.normalized = std::exp(rv * log_scale) * row.distortion;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });

    double final_dev = std::nan("");
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (!it->error) {
            final_dev = std::abs(it->normalized - predicted) / predicted;
            break;
        }
    }
    return {std::move(rows), predicted, to_string(limit.regime), normalization, final_dev};
}

std::string format_number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(const ConvergenceReport& report, std::ostream& out)
{
    out << kHeader << '\n';
    for (const ReportRow& row : report.rows) {
        if (row.error) {
            out << "# error N=" << row.levels << ": " << *row.error << '\n';
            continue;
        }
        out << row.levels << ',' << format_number(row.entropy) << ','
            << format_number(row.distortion) << ',' << format_number(row.normalized) << '\n';
    }
    out << "# predicted=" << format_number(report.predicted) << '\n';
}

json to_json(const ConvergenceReport& report)
{
    // Values go through the same 12-digit formatting as the CSV.
    auto num = [](double x) { return json::parse(format_number(x)); };
    json rows = json::array();
    for (const ReportRow& row : report.rows) {
        if (row.error) {
            rows.push_back({{"N", row.levels}, {"error", *row.error}});
            continue;
        }
        rows.push_back({{"N", row.levels},
                        {"entropy", num(row.entropy)},
                        {"distortion", num(row.distortion)},
                        {"normalized", num(row.normalized)}});
    }
    json out{{"rows", rows},
             {"predicted", num(report.predicted)},
             {"regime", report.regime},
             {"normalization", to_string(report.normalization)}};
    out["final_relative_deviation"] = std::isfinite(report.final_relative_deviation)
                                          ? num(report.final_relative_deviation)
                                          : json(nullptr);
    return out;
}

ParsedCsv parse_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
        throw SpecError("missing CSV header");
    }
    ParsedCsv out{{}, std::nan("")};
    bool footer = false;
    while (std::getline(in, line)) {
        if (footer) {
            throw SpecError("content after the footer line");
        }
        if (line.rfind("# predicted=", 0) == 0) {
            out.predicted = parse_double(line.substr(12));
            footer = true;
            continue;
        }
        if (line.rfind("# error N=", 0) == 0) {
            const auto colon = line.find(": ");
            if (colon == std::string::npos) {
                throw SpecError("malformed error row");
            }
            ReportRow row;
            row.levels = static_cast<std::size_t>(parse_double(line.substr(10, colon - 10)));
            row.error = line.substr(colon + 2);
            out.rows.push_back(row);
            continue;
        }
        std::istringstream fields(line);
        std::vector<std::string> cells;
        std::string cell;
        while (std::getline(fields, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 4) {
            throw SpecError("CSV row must have 4 fields: '" + line + "'");
        }
        out.rows.push_back({static_cast<std::size_t>(parse_double(cells[0])), parse_double(cells[1]),
                            parse_double(cells[2]), parse_double(cells[3]), std::nullopt});
    }
    if (!footer) {
        throw SpecError("missing '# predicted=' footer");
    }
    return out;
}

} // namespace quant
