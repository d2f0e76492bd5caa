#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "experiments.hpp"
#include "mtopdiv/cloud_io.hpp"
#include "mtopdiv/crossbarcode.hpp"
#include "mtopdiv/errors.hpp"
#include "mtopdiv/mtopdiv.hpp"
#include "mtopdiv/parallel.hpp"
#include "mtopdiv/synth.hpp"
#include "svg.hpp"

namespace mtd::cli {

namespace {

using json = nlohmann::ordered_json;

PointCloud load(const std::string& path) { return load_cloud(path, format_from_path(path)); }

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
    } else {
        write_file(path, content);
    }
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Engine parse_engine(const std::string& name) {
    if (name == "implicit") return Engine::implicit_cohomology;
    if (name == "plain") return Engine::explicit_plain;
    return Engine::explicit_clearing;
}

// synth ---------------------------------------------------------------------

struct SynthArgs {
    std::string kind;
    std::size_t n = 0;
    std::string center = "0,0";
    double radius = 1.0;
    std::string centers;
    double sigma = 1.0;
    std::string weights;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
};

int synth(const SynthArgs& a) {
    GeneratorSpec spec;
    spec.n = a.n;
    spec.seed = a.seed;
    spec.radius = a.radius;
    spec.sigma = a.sigma;
    spec.center = experiments::parse_list(a.center);
    if (a.kind == "ring") {
        spec.kind = GeneratorKind::ring;
    } else if (a.kind == "disk") {
        spec.kind = GeneratorKind::disk;
    } else {
        spec.kind = GeneratorKind::gaussian_mixture;
        if (a.centers.empty()) throw InvalidInput("--kind gauss-mixture needs --centers");
        const auto centers = load(a.centers);
        for (std::size_t i = 0; i < centers.size(); ++i) {
            const auto row = centers.row(i);
            spec.centers.emplace_back(row.begin(), row.end());
        }
        if (!a.weights.empty()) spec.weights = experiments::parse_list(a.weights);
    }
    spec.validate();
    const auto format = a.format.empty() ? format_from_path(a.out) : parse_cloud_format(a.format);
    save_cloud(generate(spec), a.out, format);
    return kOk;
}

// barcode -------------------------------------------------------------------

struct BarcodeArgs {
    std::string p;
    std::string q;
    std::size_t dim = 1;
    std::optional<double> threshold;
    std::string engine = "implicit";
    std::string format = "csv";
    std::string out;
    std::string svg;
};

std::string barcode_csv(const Barcode& b) {
    std::string text = "dim,birth,death\n";
    for (std::size_t k = 0; k <= b.max_hom_dim(); ++k) {
        for (const auto& iv : b[k]) {
            text += std::to_string(k) + ',' + format_number(iv.birth) + ',' + format_number(iv.death) + '\n';
        }
    }
    return text;
}

std::string barcode_json(const Barcode& b) {
    json intervals = json::array();
    for (std::size_t k = 0; k <= b.max_hom_dim(); ++k) {
        for (const auto& iv : b[k]) {
            intervals.push_back(
                {{"dim", k}, {"birth", iv.birth}, {"death", number(iv.death)}, {"truncated", iv.truncated}});
        }
    }
    return json{{"intervals", intervals}}.dump(2) + '\n';
}

int barcode(const BarcodeArgs& a, std::ostream& out) {
    const auto p = load(a.p);
    const auto q = a.q.empty() ? PointCloud(p.dim()) : load(a.q);
    const auto b = cross_barcode(p, q, a.dim, {parse_engine(a.engine), a.threshold});
    emit(a.out, a.format == "json" ? barcode_json(b) : barcode_csv(b), out);
    if (!a.svg.empty()) {
        const auto title = std::filesystem::path(a.p).filename().string() +
                           (a.q.empty() ? "" : " relative to " + std::filesystem::path(a.q).filename().string());
        write_file(a.svg, svg::barcode(b, title));
    }
    return kOk;
}

// mtopdiv -------------------------------------------------------------------

struct MTopDivArgs {
    std::string p;
    std::string q;
    std::string profile = "default";
    std::size_t b_p = 0;
    std::size_t b_q = 0;
    std::size_t runs = 0;
    std::size_t dim = 1;
    std::string stat = "sum";
    std::uint64_t seed = 0;
    std::string direction = "pq";
    std::string out;
};

int mtopdiv(const MTopDivArgs& a, const CLI::App& cmd, std::ostream& out) {
    MTopDivConfig cfg = a.profile == "desk" ? MTopDivConfig::desk() : MTopDivConfig{};
    if (cmd.count("--bp") > 0) cfg.b_p = a.b_p;
    if (cmd.count("--bq") > 0) cfg.b_q = a.b_q;
    if (cmd.count("--runs") > 0) cfg.n_runs = a.runs;
    cfg.hom_dim = a.dim;
    cfg.stat = StatSpec::parse(a.stat);
    cfg.seed = a.seed;
    cfg.direction = parse_direction(a.direction);

    const auto results = mtop_div(load(a.p), load(a.q), cfg);
    json doc;
    doc["config"] = {{"b_p", cfg.b_p},       {"b_q", cfg.b_q},           {"runs", cfg.n_runs},
                     {"dim", cfg.hom_dim},   {"stat", cfg.stat.name()}, {"seed", cfg.seed}};
    doc["results"] = json::array();
    for (const auto& r : results) {
        json per_run = json::array();
        for (double v : r.per_run) per_run.push_back(number(v));
        doc["results"].push_back({{"direction", r.direction},
                                  {"mean", number(r.mean)},
                                  {"std_error", number(r.std_error)},
                                  {"per_run", per_run}});
    }
    emit(a.out, doc.dump(2) + '\n', out);
    return kOk;
}

// sweep ---------------------------------------------------------------------

struct SweepArgs {
    std::string name;
    std::string range;
    std::string sizes = "50,100,200,400";
    std::size_t runs = 0;
    std::size_t n = 1000;
    std::size_t b_p = 100;
    std::size_t b_q = 1000;
    std::uint64_t seed = 0;
    std::string out;
    std::string svg;
};

int sweep(const SweepArgs& a, std::ostream& out) {
    std::ostringstream csv;
    std::vector<double> x;
    std::vector<svg::Series> series;
    std::string x_label = "d";

    if (a.name == "rings") {
        experiments::RingsConfig cfg{a.n, a.b_p, a.b_q, a.runs == 0 ? 10 : a.runs, a.seed};
        series = {{"mtopdiv_mean", {}}, {"h0_max_mean", {}}};
        csv << "d,mtopdiv_mean,mtopdiv_stderr,h0_max_mean\n";
        for (double d : experiments::parse_range(a.range.empty() ? "0:2:0.25" : a.range)) {
            const auto row = experiments::rings_row(d, cfg);
            csv << format_number(row.d) << ',' << format_number(row.mtopdiv_mean) << ','
                << format_number(row.mtopdiv_stderr) << ',' << format_number(row.h0_max_mean) << '\n';
            x.push_back(d);
            series[0].y.push_back(row.mtopdiv_mean);
            series[1].y.push_back(row.h0_max_mean);
        }
    } else if (a.name == "disks") {
        series = {{"h0_max_mean", {}}, {"h1_sum_mean", {}}};
        csv << "d,h0_max_mean,h1_sum_mean\n";
        for (double d : experiments::parse_range(a.range.empty() ? "2.5:3.5:0.5" : a.range)) {
            const auto row = experiments::disks_row(d, a.n, a.runs == 0 ? 10 : a.runs, a.seed);
            csv << format_number(row.d) << ',' << format_number(row.h0_max_mean) << ','
                << format_number(row.h1_sum_mean) << '\n';
            x.push_back(d);
            series[0].y.push_back(row.h0_max_mean);
            series[1].y.push_back(row.h1_sum_mean);
        }
    } else {
        x_label = "n";
        series = {{"h1_max_mean", {}}};
        csv << "n,h1_max_mean\n";
        for (std::size_t n : experiments::parse_sizes(a.sizes)) {
            const auto row = experiments::decay_row(n, a.runs == 0 ? 20 : a.runs, a.seed);
            csv << row.n << ',' << format_number(row.h1_max_mean) << '\n';
            x.push_back(static_cast<double>(n));
            series[0].y.push_back(row.h1_max_mean);
        }
    }
    emit(a.out, csv.str(), out);
    if (!a.svg.empty()) write_file(a.svg, svg::trend(x, series, x_label, a.name + " sweep"));
    return kOk;
}

// oracle --------------------------------------------------------------------

struct OracleArgs {
    std::string p;
    std::string q;
    std::size_t dim = 1;
    bool inject_fault = false;
};

constexpr std::size_t kOracleMaxPoints = 14;

int oracle(const OracleArgs& a, std::ostream& out) {
    const auto p = load(a.p);
    const auto q = a.q.empty() ? PointCloud(p.dim()) : load(a.q);
    if (p.size() + q.size() > kOracleMaxPoints) {
        throw InvalidInput("oracle: at most " + std::to_string(kOracleMaxPoints) + " points in total, got " +
                           std::to_string(p.size() + q.size()));
    }
    const auto qm = quotient_of(p, q);
    auto implicit = cross_barcode(qm, a.dim, {Engine::implicit_cohomology, std::nullopt});
    if (a.inject_fault) {
        implicit[0].push_back({0.0, std::max(1.0, qm.matrix.max_entry()), 0, false});
        implicit.normalize();
    }

    std::size_t checks = 0;
    std::size_t mismatches = 0;
    const auto report = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++mismatches;
            out << "mismatch: " << what << '\n';
        }
    };

    for (const auto engine : {Engine::explicit_plain, Engine::explicit_clearing}) {
        const auto other = cross_barcode(qm, a.dim, {engine, std::nullopt});
        report(other == implicit, std::string("barcode differs from the ") +
                                      (engine == Engine::explicit_plain ? "plain" : "clearing") + " reduction");
    }

    std::vector<double> alphas(qm.matrix.values().begin(), qm.matrix.values().end());
    alphas.push_back(0.0);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    for (std::size_t k = 0; k <= a.dim; ++k) {
        for (double alpha : alphas) {
            // The component holding Q is not part of the cross-barcode.
            std::size_t expected = betti_oracle(qm.matrix, alpha, k, kOracleMaxPoints);
            if (k == 0 && qm.n_q > 0) --expected;
            const std::size_t got = alive_count(implicit[k], alpha);
            report(got == expected, "H" + std::to_string(k) + " at alpha " + format_number(alpha) + ": barcode " +
                                        std::to_string(got) + ", oracle " + std::to_string(expected));
        }
    }
    if (qm.n_q > 0) report(implicit[0] == h0_oracle(qm), "H0 intervals differ from the spanning-tree oracle");

    out << "checks: " << checks << ", mismatches: " << mismatches << '\n';
    return mismatches == 0 ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cross-barcodes and MTop-Div for point clouds", "mtopdiv"};
    app.require_subcommand(1);
    const auto kinds = CLI::IsMember({"ring", "disk", "gauss-mixture"});
    const auto formats = CLI::IsMember({"csv", "mtdb"});
    const auto engines = CLI::IsMember({"implicit", "plain", "clearing"});

    SynthArgs synth_args;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic point cloud");
    synth_cmd->add_option("--kind", synth_args.kind, "ring, disk or gauss-mixture")->required()->check(kinds);
    synth_cmd->add_option("--n", synth_args.n, "Number of points")->required()->check(CLI::PositiveNumber);
    synth_cmd->add_option("--center", synth_args.center, "Center x,y (ring, disk)")->capture_default_str();
    synth_cmd->add_option("--radius", synth_args.radius, "Radius (ring, disk)")->capture_default_str();
    synth_cmd->add_option("--centers", synth_args.centers, "Cloud file of mixture centers");
    synth_cmd->add_option("--sigma", synth_args.sigma, "Mixture standard deviation")->capture_default_str();
    synth_cmd->add_option("--weights", synth_args.weights, "Mixture weights w1,w2,... (default uniform)");
    synth_cmd->add_option("--seed", synth_args.seed)->capture_default_str();
    synth_cmd->add_option("--out", synth_args.out, "Output file")->required();
    synth_cmd->add_option("--format", synth_args.format, "csv or mtdb (default from extension)")->check(formats);

    BarcodeArgs barcode_args;
    auto* barcode_cmd = app.add_subcommand("barcode", "Cross-barcode of P relative to Q");
    barcode_cmd->add_option("p", barcode_args.p, "Cloud P")->required();
    barcode_cmd->add_option("q", barcode_args.q, "Cloud Q (omit for the ordinary barcode of P)");
    barcode_cmd->add_option("--dim", barcode_args.dim, "Highest homology dimension")->capture_default_str();
    barcode_cmd->add_option("--threshold", barcode_args.threshold, "Filtration cap");
    barcode_cmd->add_option("--engine", barcode_args.engine)->check(engines)->capture_default_str();
    barcode_cmd->add_option("--format", barcode_args.format)->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    barcode_cmd->add_option("--out", barcode_args.out, "Interval table (default stdout)");
    barcode_cmd->add_option("--svg", barcode_args.svg, "Barcode diagram");

    MTopDivArgs mtopdiv_args;
    auto* mtopdiv_cmd = app.add_subcommand("mtopdiv", "MTop-Div score over subsampled cross-barcodes");
    mtopdiv_cmd->add_option("p", mtopdiv_args.p, "Cloud P")->required();
    mtopdiv_cmd->add_option("q", mtopdiv_args.q, "Cloud Q")->required();
    mtopdiv_cmd->add_option("--profile", mtopdiv_args.profile, "default (1000/10000/100) or desk (100/1000/10)")
        ->check(CLI::IsMember({"default", "desk"}))
        ->capture_default_str();
    mtopdiv_cmd->add_option("--bp", mtopdiv_args.b_p, "Subsample size of the first cloud");
    mtopdiv_cmd->add_option("--bq", mtopdiv_args.b_q, "Subsample size of the second cloud");
    mtopdiv_cmd->add_option("--runs", mtopdiv_args.runs, "Number of subsampled runs");
    mtopdiv_cmd->add_option("--dim", mtopdiv_args.dim, "Homology dimension")->capture_default_str();
    mtopdiv_cmd->add_option("--stat", mtopdiv_args.stat, "sum, sum_sq, count, max or quantile:<q>")
        ->capture_default_str();
    mtopdiv_cmd->add_option("--seed", mtopdiv_args.seed)->capture_default_str();
    mtopdiv_cmd->add_option("--direction", mtopdiv_args.direction)
        ->check(CLI::IsMember({"pq", "qp", "both"}))
        ->capture_default_str();
    mtopdiv_cmd->add_option("--out", mtopdiv_args.out, "JSON output (default stdout)");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Synthetic experiment tables");
    sweep_cmd->add_option("name", sweep_args.name, "rings, disks or decay")
        ->required()
        ->check(CLI::IsMember({"rings", "disks", "decay"}));
    sweep_cmd->add_option("--range", sweep_args.range, "Center distances a:b:step (rings, disks)");
    sweep_cmd->add_option("--sizes", sweep_args.sizes, "Cloud sizes (decay)")->capture_default_str();
    sweep_cmd->add_option("--runs", sweep_args.runs, "Runs or seeds per row (default 10, decay 20)");
    sweep_cmd->add_option("--n", sweep_args.n, "Points per cloud (rings, disks)")->capture_default_str();
    sweep_cmd->add_option("--bp", sweep_args.b_p, "Subsample size of P (rings)")->capture_default_str();
    sweep_cmd->add_option("--bq", sweep_args.b_q, "Subsample size of Q (rings)")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep_args.seed)->capture_default_str();
    sweep_cmd->add_option("--out", sweep_args.out, "CSV output (default stdout)");
    sweep_cmd->add_option("--svg", sweep_args.svg, "Trend plot");

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "Check the barcode engines against brute-force Betti numbers");
    oracle_cmd->add_option("p", oracle_args.p, "Cloud P")->required();
    oracle_cmd->add_option("q", oracle_args.q, "Cloud Q (may be omitted)");
    oracle_cmd->add_option("--dim", oracle_args.dim, "Highest homology dimension")->capture_default_str();
    oracle_cmd->add_flag("--inject-fault", oracle_args.inject_fault)->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        configure_threads_from_env();
        if (*synth_cmd) return synth(synth_args);
        if (*barcode_cmd) return barcode(barcode_args, out);
        if (*mtopdiv_cmd) return mtopdiv(mtopdiv_args, *mtopdiv_cmd, out);
        if (*sweep_cmd) return sweep(sweep_args, out);
        return oracle(oracle_args, out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace mtd::cli
