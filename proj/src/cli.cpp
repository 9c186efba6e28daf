#include "saddlelink/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "saddlelink/equivalence.hpp"
#include "saddlelink/render.hpp"
#include "saddlelink/report.hpp"
#include "saddlelink/spec_file.hpp"
#include "saddlelink/sweep.hpp"

namespace saddlelink {

using nlohmann::json;

namespace {

constexpr double default_tol = 1e-9;
constexpr int default_samples = 4096;

struct Settings {
    std::string file;
    std::string file2;
    std::string out_path;
    std::optional<double> tol;
    int samples = default_samples;
    int jobs = 1;
    std::optional<std::uint64_t> seed;
    int leaves = 12;
    double radius = 1.0;
    bool no_shade = false;
};

double resolve_tol(const Settings& s)
{
    if (s.tol) return *s.tol;
    if (const char* env = std::getenv("SADDLELINK_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
            throw Error(ErrorCode::InvalidInput, "SADDLELINK_TOL must be a positive number");
        return v;
    }
    return default_tol;
}

json tolerances(double tol, int samples)
{
    return {{"compare", tol}, {"tt_boundary", tol_boundary}, {"oracle_samples", samples}};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int report_violations(std::ostream& out, const char* command, const std::vector<ViolationReport>& v)
{
    json j = report_header(command);
    j["violations"] = to_json(v);
    emit(out, j);
    return exit_violation;
}

int cmd_classify(const Settings& s, std::ostream& out)
{
    const double tol = resolve_tol(s);
    const ConnectionSpec spec = load_connection_spec(s.file);
    const auto violations = validate_genericity(spec);
    if (!violations.empty()) return report_violations(out, "classify", violations);

    const Classification c = classify(spec);
    json j = report_header("classify");
    j["tolerances"] = tolerances(tol, s.samples);
    j["input"] = to_json(c.params);
    j["classification"] = to_json(c);
    j["oracle"] = to_json(cross_check(c, s.samples, true));
    emit(out, j);
    return exit_ok;
}

int cmd_compare(const Settings& s, std::ostream& out)
{
    const double tol = resolve_tol(s);
    const ConnectionSpec a = load_connection_spec(s.file);
    const ConnectionSpec b = load_connection_spec(s.file2);
    auto va = validate_genericity(a);
    const auto vb = validate_genericity(b);
    if (!va.empty() || !vb.empty()) {
        json j = report_header("compare");
        j["violations"] = json::array({to_json(va), to_json(vb)});
        emit(out, j);
        return exit_violation;
    }

    const Classification ca = classify(a), cb = classify(b);
    const EquivalenceVerdict v = equivalent(ca, cb, tol);
    json j = report_header("compare");
    j["tolerances"] = tolerances(tol, s.samples);
    j["inputs"] = json::array({to_json(ca.params), to_json(cb.params)});
    j["classifications"] = json::array({to_json(ca), to_json(cb)});
    j["verdict"] = to_json(v);
    emit(out, j);
    switch (v.outcome) {
    case Outcome::Equivalent: return exit_ok;
    case Outcome::NotEquivalent: return exit_not_equivalent;
    case Outcome::BoundaryIndeterminate: return exit_boundary;
    }
    return exit_failure;
}

int cmd_sweep(const Settings& s, std::ostream& out)
{
    const double tol = resolve_tol(s);
    json doc;
    try {
        doc = json::parse(read_text_file(s.file));
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed grid document: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::InvalidInput, "grid document must be an object");

    SweepOptions opts;
    if (doc.contains("samples")) opts.samples = doc["samples"].get<int>();
    if (doc.contains("check_moduli")) opts.check_moduli = doc["check_moduli"].get<bool>();
    std::uint64_t seed = doc.value("seed", std::uint64_t{0});
    if (s.seed) seed = *s.seed;

    const std::vector<GridPoint> points = expand_grid(doc, seed);
    const std::vector<PointResult> results =
        s.jobs > 1 ? evaluate_parallel(points, opts, s.jobs) : evaluate_serial(points, opts);

    json head = report_header("sweep");
    head["tolerances"] = tolerances(tol, opts.samples);
    head["seed"] = seed;
    head["points"] = points.size();
    emit(out, head);
    for (std::size_t i = 0; i < results.size(); ++i) emit(out, to_json(results[i], i));
    json tail = report_header("sweep");
    tail["summary"] = to_json(summarize(results));
    emit(out, tail);
    return exit_ok;
}

int cmd_render(const Settings& s, std::ostream& out)
{
    const ConnectionSpec spec = load_connection_spec(s.file);
    const auto violations = validate_genericity(spec);
    if (!violations.empty()) return report_violations(out, "render", violations);

    RenderOptions o;
    o.leaves = s.leaves;
    o.radius = s.radius;
    o.shade_sector = !s.no_shade;
    const std::string svg = render_svg(normalize(spec), o);

    std::ofstream f(s.out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + s.out_path);
    f << svg;
    if (!f) throw Error(ErrorCode::InvalidInput, "failed writing " + s.out_path);
    return exit_ok;
}

int cmd_validate(const Settings& s, std::ostream& out)
{
    const ConnectionSpec spec = load_connection_spec(s.file);
    const auto violations = validate_genericity(spec);
    json j = report_header("validate");
    j["violations"] = to_json(violations);
    emit(out, j);
    return violations.empty() ? exit_ok : exit_violation;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Topological classification of heteroclinic saddle connections in 3D", "saddlelink"};
    app.require_subcommand(1);
    Settings s;

    auto* classify_cmd = app.add_subcommand("classify", "Classify one connection spec");
    classify_cmd->add_option("file", s.file, "Connection spec (JSON)")->required();
    classify_cmd->add_option("--samples", s.samples, "Oracle samples on the unit circle")
        ->check(CLI::Range(1000, 1 << 22));

    auto* compare_cmd = app.add_subcommand("compare", "Decide topological equivalence of two specs");
    compare_cmd->add_option("file1", s.file, "First connection spec")->required();
    compare_cmd->add_option("file2", s.file2, "Second connection spec")->required();
    compare_cmd->add_option("--tol", s.tol, "Relative tolerance for modulus comparisons")
        ->check(CLI::PositiveNumber);

    auto* sweep_cmd = app.add_subcommand("sweep", "Classify and cross-check a parameter grid");
    sweep_cmd->add_option("grid", s.file, "Grid document (JSON)")->required();
    sweep_cmd->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    sweep_cmd->add_option("--seed", s.seed, "Seed for random axes");

    auto* render_cmd = app.add_subcommand("render", "Draw the characteristic foliation pair as SVG");
    render_cmd->add_option("file", s.file, "Connection spec")->required();
    render_cmd->add_option("--out", s.out_path, "Output SVG path")->required();
    render_cmd->add_option("--leaves", s.leaves, "Leaves per foliation")->check(CLI::Range(1, 10000));
    render_cmd->add_option("--radius", s.radius, "Half-width of the viewport")->check(CLI::PositiveNumber);
    render_cmd->add_flag("--no-shade", s.no_shade, "Do not shade the sector S0");

    auto* validate_cmd = app.add_subcommand("validate", "List genericity violations");
    validate_cmd->add_option("file", s.file, "Connection spec")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "saddlelink: " << e.what() << "\n";
        return exit_failure;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(s, out);
        if (compare_cmd->parsed()) return cmd_compare(s, out);
        if (sweep_cmd->parsed()) return cmd_sweep(s, out);
        if (render_cmd->parsed()) return cmd_render(s, out);
        if (validate_cmd->parsed()) return cmd_validate(s, out);
    } catch (const GenericityError& e) {
        return report_violations(out, "classify", e.violations());
    } catch (const std::exception& e) {
        err << "saddlelink: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}

} // namespace saddlelink
