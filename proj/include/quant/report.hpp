#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quant/design.hpp"
#include "quant/io.hpp"

namespace quant {

/// How the distortion column is normalized: e^{r H} (realized entropy) or N^r.
enum class Normalization { Entropy, Levels };

Normalization parse_normalization(const std::string& text);
std::string to_string(Normalization n);

struct ReportRow {
    std::size_t levels;
    double entropy = 0.0;
    double distortion = 0.0;
    double normalized = 0.0;
    std::optional<std::string> error;
};

/// Sweep of design_compander over N. `predicted` is the limit of the
/// normalized column: the predicted limit for entropy normalization, the
/// Bennett integral of the optimal compander for level normalization.
struct ConvergenceReport {
    std::vector<ReportRow> rows;
    double predicted;
    std::string regime;
    Normalization normalization;
    /// |normalized - predicted| / predicted at the largest N without an error.
    double final_relative_deviation;
};

/// Rows are computed in parallel and returned in the order of `levels`, which
/// must be strictly increasing. A failure at one N is kept as an error row.
ConvergenceReport run_sweep(const Density& f, RenyiOrder alpha, DistortionExponent r,
                            const std::vector<std::size_t>& levels,
                            Normalization normalization = Normalization::Entropy);

/// %.12g formatting used by every report writer.
std::string format_number(double x);

/// Header `N,entropy,distortion,normalized`, one row per N, error rows as
/// `# error N=<n>: <message>`, footer `# predicted=<value>`.
void write_csv(const ConvergenceReport& report, std::ostream& out);
json to_json(const ConvergenceReport& report);

struct ParsedCsv {
    std::vector<ReportRow> rows;
    double predicted;
};

/// Inverse of write_csv; throws SpecError on schema violations.
ParsedCsv parse_csv(std::istream& in);

} // namespace quant
