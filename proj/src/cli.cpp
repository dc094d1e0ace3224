#include "quant/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quant/design.hpp"
#include "quant/io.hpp"
#include "quant/oracle.hpp"
#include "quant/report.hpp"
#include "quant/verify.hpp"

namespace quant {

namespace {

struct Options {
    std::string density;
    std::string alpha = "0.5";
    double r = 2.0;
    double rate = 0.0;
    std::string levels;
    std::string alphas = "neg_inf,-2,-1,0,0.5,1,2,pos_inf";
    std::string instance;
    std::string out;
    std::string format = "csv";
    std::string normalize = "entropy";
    std::vector<std::string> suites;
    double perturb = 0.0;
};

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::vector<std::size_t> parse_levels(const std::string& text)
{
    std::vector<std::size_t> out;
    for (const auto& item : split(text)) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw SpecError("bad level count '" + item + "'");
        }
        if (used != item.size() || v <= 0) {
            throw SpecError("bad level count '" + item + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) {
        throw SpecError("--levels needs at least one value");
    }
    return out;
}

RenyiOrder parse_order(const std::string& text)
{
    try {
        return RenyiOrder::parse(text);
    } catch (const InvalidArgument& e) {
        throw SpecError(e.what());
    }
}

// Writes to --out when given, otherwise to the command's stream.
void emit(const Options& o, std::ostream& out, const std::string& text)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw SpecError("cannot write '" + o.out + "'");
    }
    file << text;
}

int cmd_predict(const Options& o, std::ostream& out)
{
    const Density f = density_from_json(load_spec(o.density));
    const PredictedLimit p = predict(f, parse_order(o.alpha), DistortionExponent(o.r));
    std::ostringstream text;
    if (o.format == "json") {
        text << json{{"value", json::parse(format_number(p.value))},
                     {"regime", to_string(p.regime)},
                     {"rate_exponent", json::parse(format_number(p.rate_exponent))}}
                    .dump(2)
             << '\n';
    } else {
        text << "value,regime,rate_exponent\n"
             << format_number(p.value) << ',' << to_string(p.regime) << ','
             << format_number(p.rate_exponent) << '\n';
    }
    emit(o, out, text.str());
    return kExitOk;
}

int cmd_design(const Options& o, std::ostream& out)
{
    const Density f = density_from_json(load_spec(o.density));
    const auto levels = parse_levels(o.levels);
    if (levels.size() != 1) {
        throw SpecError("design takes a single --levels value");
    }
    const IntervalQuantizer q = design_compander(f, parse_order(o.alpha), DistortionExponent(o.r), levels[0]);
    emit(o, out, to_json(q).dump(2) + "\n");
    return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    const Density f = density_from_json(load_spec(o.density));
    const ConvergenceReport rep = run_sweep(f, parse_order(o.alpha), DistortionExponent(o.r),
                                            parse_levels(o.levels), parse_normalization(o.normalize));
    std::ostringstream text;
    if (o.format == "json") {
        text << to_json(rep).dump(2) << '\n';
    } else {
        write_csv(rep, text);
    }
    emit(o, out, text.str());
    return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err)
{
    const GridInstance inst = instance_from_json(load_spec(o.instance));
    std::vector<RenyiOrder> alphas;
    for (const auto& a : split(o.alphas)) alphas.push_back(parse_order(a));
    if (alphas.empty()) {
        throw SpecError("--alphas needs at least one order");
    }
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        if (!(alphas[i - 1] < alphas[i])) {
            throw SpecError("--alphas must be strictly increasing");
        }
    }
    const auto prof = alpha_profile(inst, alphas, o.rate, DistortionExponent(o.r));
    OracleBaseline base{o.rate, o.r, {}};
    for (std::size_t i = 0; i < prof.size(); ++i) {
        base.entries.push_back({alphas[i], prof[i].value, prof[i].argmin, prof[i].feasible_count});
    }
    emit(o, out, to_json(base).dump(2) + "\n");
    for (std::size_t i = 1; i < prof.size(); ++i) {
        if (prof[i].value > prof[i - 1].value) {
            err << "monotonicity violated: D at alpha=" << alphas[i].to_string() << " exceeds alpha="
                << alphas[i - 1].to_string() << '\n';
            return kExitMonotonicity;
        }
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.perturb != 0.0) {
        fault::set_distortion_constant_scale(1.0 + o.perturb);
    }
    const auto results = run_verify(o.suites);
    fault::set_distortion_constant_scale(1.0);
    const json summary = to_json(results);
    if (o.format == "json") {
        emit(o, out, summary.dump(2) + "\n");
    } else {
        std::ostringstream text;
        for (const SuiteResult& r : results) {
            const CheckResult& w = r.worst();
            text << (r.passed() ? "PASS " : "FAIL ") << r.name << "  measured=" << format_number(w.measured)
                 << " tolerance=" << format_number(w.tolerance) << "  [" << w.what << "]\n";
            if (!r.note.empty()) text << "     note: " << r.note << '\n';
        }
        text << summary["status"].get<std::string>() << ": " << results.size() << " suites\n";
        if (!o.out.empty()) {
            emit(o, out, summary.dump(2) + "\n");
        }
        out << text.str();
    }
    return summary["status"] == "pass" ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Scalar quantizers under Renyi entropy constraints", "quantctl"};
    app.require_subcommand(1);
    Options o;

    auto density = [&](CLI::App* c) {
        c->add_option("--density", o.density, "density spec: JSON file or inline JSON")->required();
    };
    auto order = [&](CLI::App* c) {
        c->add_option("--alpha", o.alpha, "Renyi order: number, neg_inf or pos_inf");
        c->add_option("--r", o.r, "distortion exponent r >= 1");
    };
    auto output = [&](CLI::App* c) {
        c->add_option("--out", o.out, "write output here instead of stdout");
        c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* predict = app.add_subcommand("predict", "predicted high-rate limit");
    density(predict);
    order(predict);
    output(predict);

    CLI::App* design = app.add_subcommand("design", "optimal companding quantizer as JSON");
    density(design);
    order(design);
    design->add_option("--levels", o.levels, "number of levels N")->required();
    design->add_option("--out", o.out, "write output here instead of stdout");

    CLI::App* sweep = app.add_subcommand("sweep", "convergence report over N");
    density(sweep);
    order(sweep);
    output(sweep);
    sweep->add_option("--levels", o.levels, "comma-separated increasing N values")->required();
    sweep->add_option("--normalize", o.normalize, "entropy (e^{rH} D) or levels (N^r D)")
        ->check(CLI::IsMember({"entropy", "levels"}));

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive grid optimum across orders");
    oracle->add_option("--instance", o.instance, "oracle instance: JSON file or inline JSON")->required();
    oracle->add_option("--alphas", o.alphas, "comma-separated increasing orders");
    oracle->add_option("--rate", o.rate, "entropy budget R")->required();
    oracle->add_option("--r", o.r, "distortion exponent r >= 1");
    oracle->add_option("--out", o.out, "write output here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", o.suites, "run only these suites (repeatable)");
    output(verify);
    verify->add_option("--perturb-constant", o.perturb, "scale C(r) by 1 + x (fault injection)")
        ->group("");

    std::vector<const char*> argv{"quantctl"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSpec;
    }

    try {
        if (*predict) return cmd_predict(o, out);
        if (*design) return cmd_design(o, out);
        if (*sweep) return cmd_sweep(o, out);
        if (*oracle) return cmd_oracle(o, out, err);
        return cmd_verify(o, out);
    } catch (const RegimeError& e) {
        err << "regime error: " << e.what() << '\n';
        return kExitRegime;
    } catch (const SpecError& e) {
        err << "spec error: " << e.what() << '\n';
        return kExitSpec;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitSpec;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace quant
