#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "innerkit/experiments.hpp"
#include "innerkit/inner.hpp"
#include "innerkit/json_io.hpp"
#include "innerkit/kernels.hpp"
#include "innerkit/multiplier.hpp"
#include "innerkit/series.hpp"
#include "innerkit/space.hpp"
#include "innerkit/weights.hpp"

namespace innerkit::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kWeightMaterialization = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string space = "dirichlet";
    std::string series;
    std::vector<std::string> zeros;
    std::string schedule = "8,32,128";
    std::string config;
    double tol = kDefaultMomentTol;
    std::uint64_t seed = 42;
    std::optional<std::size_t> truncation;
    std::size_t trials = 500;
    std::size_t max_degree = 12;
    std::size_t max_denominator = 2;
    double radius = 2.0;
    std::size_t grid = 4096;
    std::size_t sections = 64;
    std::size_t degree = 12;
    std::size_t restarts = 4;
    std::size_t section_size = 16;
    bool normalize = false;
    bool json_out = false;
    bool csv = false;
};

// Flags from a JSON config file, appended only where the command line did not
// set them.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].starts_with("--config=")) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw UsageError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
    const auto present = [&](const std::string& flag) {
        return std::any_of(args.begin(), args.end(),
                           [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
    };
    const auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::vector<std::string> extra;
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        const std::string flag = "--" + it.key();
        if (flag == "--config" || present(flag)) continue;
        const json& v = it.value();
        if (v.is_boolean()) {
            if (v.get<bool>()) extra.push_back(flag);
        } else if (v.is_array()) {
            for (const auto& e : v) {
                extra.push_back(flag);
                extra.push_back(scalar(e));
            }
        } else if (!v.is_null()) {
            extra.push_back(flag);
            extra.push_back(scalar(v));
        }
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

std::vector<std::size_t> parse_schedule(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v < 0) throw std::invalid_argument("malformed schedule entry '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw std::invalid_argument("empty section schedule");
    return out;
}

json document(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

void emit(std::ostream& out, json doc) {
    round_floats(doc);
    out << doc.dump(2) << '\n';
}

int emit_error(std::ostream& out, std::ostream& err, const std::string& command, const std::string& type,
               const std::string& message) {
    json doc = document(command);
    doc["error"] = {{"type", type}, {"message", message}};
    err << "innerkit " << (command.empty() ? "" : command + ": ") << message << '\n';
    emit(out, std::move(doc));
    return kUsage;
}

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    int dispatch(const std::string& cmd) {
        if (opt_.csv && cmd != "verify-theorem" && cmd != "explore-rs92" && cmd != "extremal" && cmd != "mult-bound")
            throw UsageError("--csv is only available for mult-bound and the experiment commands");
        if (cmd == "weights") return weights();
        if (cmd == "norm") return norm_cmd();
        if (cmd == "inner-check") return inner_check();
        if (cmd == "witness") return witness();
        if (cmd == "grid-refute") return grid_refute();
        if (cmd == "mult-bound") return mult_bound();
        if (cmd == "supnorm") return supnorm();
        if (cmd == "ss-inner") return ss_inner_cmd();
        if (cmd == "verify-theorem") return verify_theorem();
        if (cmd == "bergman-demo") return bergman_demo();
        if (cmd == "explore-rs92") return explore();
        if (cmd == "extremal") return extremal();
        throw UsageError("unknown subcommand '" + cmd + "'");
    }

private:
    [[nodiscard]] SpaceContext space(std::size_t K = kWeightMaterialization) const {
        return SpaceContext{parse_weight_spec(opt_.space, K)};
    }

    [[nodiscard]] TruncatedSeries series(const SpaceContext& S) const {
        if (opt_.series.empty()) throw UsageError("--series is required");
        auto f = parse_series(opt_.series);
        if (f.is_zero()) throw std::invalid_argument("the zero function is not accepted");
        return opt_.normalize ? normalized(f, S) : f;
    }

    [[nodiscard]] json base(const std::string& cmd, const SpaceContext& S) const {
        json doc = document(cmd);
        doc["space"] = S.weights.spec();
        return doc;
    }

    int weights() {
        const auto S = space(opt_.truncation.value_or(10));
        json doc = base("weights", S);
        doc["weights"] = to_json(S.weights);
        emit(out_, std::move(doc));
        return kSuccess;
    }

    int norm_cmd() {
        const auto S = space();
        const auto f = series(S);
        json doc = base("norm", S);
        doc["series"] = to_json(f);
        doc["norm_sq"] = norm_sq(f, S);
        doc["norm"] = norm(f, S);
        emit(out_, std::move(doc));
        return kSuccess;
    }

    int inner_check() {
        const auto S = space();
        const auto f = series(S);
        const auto v = is_inner(f, S, opt_.tol);
        json doc = base("inner-check", S);
        doc.update(to_json(v));
        emit(out_, std::move(doc));
        return v.is_inner ? kSuccess : kNegative;
    }

    int witness() {
        const auto S = space();
        const auto f = series(S);
        const auto v = is_inner(f, S, opt_.tol);
        const auto w = refute(f, S, opt_.tol);
        json doc = base("witness", S);
        doc.update(to_json(v));
        doc["witness"] = w ? to_json(*w) : json(nullptr);
        emit(out_, std::move(doc));
        return w ? kNegative : kSuccess;
    }

    int grid_refute() {
        const auto S = space();
        const auto f = series(S);
        GridOptions g;
        g.max_denominator = opt_.max_denominator;
        g.radius = opt_.radius;
        g.moment_tol = opt_.tol;
        const auto scan = rational_grid_refute(f, S, g);
        json doc = base("grid-refute", S);
        doc["real_only"] = f.has_real_coefficients();
        doc["max_denominator"] = opt_.max_denominator;
        doc["radius"] = opt_.radius;
        doc["points_examined"] = scan.points_examined;
        doc["budget_exhausted"] = scan.budget_exhausted;
        doc["witness"] = scan.witness ? to_json(*scan.witness) : json(nullptr);
        emit(out_, std::move(doc));
        return scan.witness ? kNegative : kSuccess;
    }

    int mult_bound() {
        const auto S = space();
        const auto f = series(S);
        const auto schedule = parse_schedule(opt_.schedule);
        const auto est = multiplier_norm_estimate(f, S, schedule, kDefaultSectionTol);
        if (opt_.csv) {
            out_ << "N,sigma,converged,iterations\n";
            for (const auto& b : est.trace) {
                json row = {b.sigma};
                round_floats(row);
                out_ << b.N << ',' << row[0].dump() << ',' << (b.converged ? "true" : "false") << ','
                     << b.iterations << '\n';
            }
            return kSuccess;
        }
        json doc = base("mult-bound", S);
        json trace = json::array();
        for (const auto& b : est.trace) trace.push_back(to_json(b));
        doc["trace"] = std::move(trace);
        doc["best"] = est.best;
        doc["monotone"] = est.monotone;
        doc["stalled"] = est.stalled;
        doc["extrapolated"] = est.extrapolated ? json(*est.extrapolated) : json(nullptr);
        doc["maximizer"] = est.trace.empty() ? json(nullptr) : to_json(est.trace.back().maximizer);
        emit(out_, std::move(doc));
        return kSuccess;
    }

    int supnorm() {
        const auto S = space();
        const auto f = series(S);
        json doc = base("supnorm", S);
        doc["grid_points"] = opt_.grid;
        doc["sup_norm"] = sup_norm_estimate(f, opt_.grid);
        emit(out_, std::move(doc));
        return kSuccess;
    }

    [[nodiscard]] std::vector<Complex> single_zero_set() const {
        if (opt_.zeros.size() > 1) throw UsageError("this command takes a single --zeros set");
        return opt_.zeros.empty() ? std::vector<Complex>{} : parse_points(opt_.zeros.front());
    }

    int ss_inner_cmd() {
        const auto zeros = single_zero_set();
        if (zeros.empty()) throw std::invalid_argument("--zeros must name at least one zero");
        const auto S = space();
        const std::size_t K = opt_.truncation.value_or(default_kernel_truncation(zeros));
        const auto phi = ss_inner(zeros, S, K);
        const auto v = is_inner(phi, S, opt_.tol);
        json doc = base("ss-inner", S);
        doc["truncation"] = K;
        json values = json::array();
        for (Complex a : zeros) values.push_back(complex_to_json(evaluate(phi, a)));
        doc["values_at_zeros"] = std::move(values);
        doc["verdict"] = to_json(v);
        doc["series"] = to_json(phi);
        emit(out_, std::move(doc));
        return kSuccess;
    }

    int report(const std::string& cmd, const ExperimentReport& rep, int exit_code) {
        if (opt_.csv) {
            out_ << to_csv(rep);
            return exit_code;
        }
        json doc = document(cmd);
        doc["report"] = to_json(rep);
        emit(out_, std::move(doc));
        return exit_code;
    }

    int verify_theorem() {
        const auto S = space();
        const auto rep = verify_theorem_main(S, opt_.trials, opt_.max_degree, opt_.seed);
        return report("verify-theorem", rep, rep.ok() ? kSuccess : kNegative);
    }

    int bergman_demo() {
        const auto rep = bergman_counterexample();
        return report("bergman-demo", rep, rep.ok() ? kSuccess : kNegative);
    }

    int explore() {
        const auto S = space();
        std::vector<std::vector<Complex>> sets;
        for (const auto& z : opt_.zeros) sets.push_back(parse_points(z));
        if (sets.empty()) throw UsageError("explore-rs92 needs at least one --zeros set");
        const auto rep = explore_rs92(S, sets, opt_.sections, opt_.truncation.value_or(0));
        return report("explore-rs92", rep, kSuccess);
    }

    int extremal() {
        const auto S = space();
        const auto zeros = single_zero_set();
        ExtremalOptions eo;
        eo.section_size = opt_.section_size;
        const auto rep = extremal_search(S, zeros, opt_.degree, opt_.restarts, opt_.seed, eo);
        return report("extremal", rep, kSuccess);
    }

    const Options& opt_;
    std::ostream& out_;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--space", o.space, "weight spec: hardy | dirichlet | bergman | power:ALPHA | atoms:r,w;...");
    sub->add_option("--tol", o.tol, "absolute tolerance for vanishing moments")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--truncation", o.truncation, "truncation degree K");
    sub->add_option("--config", o.config, "JSON file of default flag values");
    sub->add_flag("--json", o.json_out, "write JSON (default)");
    sub->add_flag("--csv", o.csv, "write a CSV table instead of JSON");
}

void add_series(CLI::App* sub, Options& o) {
    sub->add_option("--series", o.series, "coefficients \"re,im;re,im;...\", lowest degree first");
    sub->add_flag("--normalize", o.normalize, "divide the series by its norm first");
}

}  // namespace

int run(std::span<const std::string> raw_args, std::ostream& out, std::ostream& err) {
    std::string command = raw_args.empty() ? std::string{} : raw_args.front();
    Options opt;
    CLI::App app{"Inner functions in weighted Hardy / Dirichlet-type spaces", "innerkit"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        bool takes_series;
    };
    const Sub subs[] = {
        {"weights", "materialize a weight sequence", false},
        {"norm", "space norm of a series", true},
        {"inner-check", "certify innerness from the shift moments", true},
        {"witness", "refuting (k, lambda) pair for a normalized non-inner series", true},
        {"grid-refute", "search condition (a) over a rational lambda grid", true},
        {"mult-bound", "finite-section lower bounds on the multiplier norm", true},
        {"supnorm", "boundary grid estimate of the sup norm", true},
        {"ss-inner", "inner function with a prescribed finite zero set", false},
        {"verify-theorem", "randomized check of the characterization", false},
        {"bergman-demo", "inner function in the Bergman weight with multiplier norm > 1", false},
        {"explore-rs92", "multiplier bounds of zero-set inner functions", false},
        {"extremal", "minimize multiplier-to-space norm ratio on a zero-set subspace", false},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_common(sub, opt);
        if (s.takes_series) add_series(sub, opt);
        const std::string name = s.name;
        if (name == "grid-refute") {
            sub->add_option("--max-denominator", opt.max_denominator, "largest denominator q");
            sub->add_option("--radius", opt.radius, "initial |lambda| radius");
        } else if (name == "mult-bound") {
            sub->add_option("--schedule", opt.schedule, "increasing section sizes, e.g. 8,32,128");
        } else if (name == "supnorm") {
            sub->add_option("--grid", opt.grid, "number of boundary points")->check(CLI::Range(8, 1 << 24));
        } else if (name == "ss-inner") {
            sub->add_option("--zeros", opt.zeros, "zero set \"re,im;re,im;...\"");
        } else if (name == "verify-theorem") {
            sub->add_option("--trials", opt.trials, "number of random trials");
            sub->add_option("--max-degree", opt.max_degree, "largest sampled degree");
        } else if (name == "explore-rs92") {
            sub->add_option("--zeros", opt.zeros, "zero set (repeat for several sets)");
            sub->add_option("--sections", opt.sections, "section size N");
        } else if (name == "extremal") {
            sub->add_option("--zeros", opt.zeros, "zero set of the subspace");
            sub->add_option("--degree", opt.degree, "polynomial degree");
            sub->add_option("--restarts", opt.restarts, "number of random restarts");
            sub->add_option("--section-size", opt.section_size, "section size for the multiplier bound");
        }
    }

    try {
        auto args = merge_config(std::vector<std::string>(raw_args.begin(), raw_args.end()));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        return emit_error(out, err, command, "usage", e.what());
    } catch (const UsageError& e) {
        return emit_error(out, err, command, "usage", e.what());
    }

    command = app.get_subcommands().front()->get_name();
    try {
        Runner runner(opt, out);
        return runner.dispatch(command);
    } catch (const UsageError& e) {
        return emit_error(out, err, command, "usage", e.what());
    } catch (const NonExpansiveWeights& e) {
        return emit_error(out, err, command, "non_expansive", e.what());
    } catch (const NotNormalized& e) {
        return emit_error(out, err, command, "not_normalized", e.what());
    } catch (const std::runtime_error& e) {
        return emit_error(out, err, command, "numerical", e.what());
    } catch (const std::exception& e) {
        return emit_error(out, err, command, "input", e.what());
    }
}

}  // namespace innerkit::cli
