// Command-line front end. Everything geometric happens behind the shared
// library's C interface; this translation unit only parses flags, formats
// output, and maps statuses to exit codes.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfrope.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitGate = 2; // not-coprime parameters or a failed gate
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

int exit_code_for(sfr_status st) {
    switch (st) {
        case SFR_OK: return kExitOk;
        case SFR_ERROR_IO: return kExitIo;
        case SFR_ERROR_NOT_COPRIME: return kExitGate;
        case SFR_ERROR_CONSTRUCTION: return kExitGate;
        case SFR_ERROR_INVALID_ARGUMENT: return kExitUsage;
        case SFR_ERROR_PARSE: return kExitParse;
        default: return kExitIo;
    }
}

int report_failure(sfr_status st) {
    std::fprintf(stderr, "error: %s\n", sfr_error_message());
    return exit_code_for(st);
}

struct CurveDeleter {
    void operator()(sfr_curve* c) const { sfr_curve_free(c); }
};
struct SamplesDeleter {
    void operator()(sfr_samples* s) const { sfr_samples_free(s); }
};
using CurvePtr = std::unique_ptr<sfr_curve, CurveDeleter>;
using SamplesPtr = std::unique_ptr<sfr_samples, SamplesDeleter>;

const double kPi = 3.14159265358979323846;

// ------------------------------------------------------------------ generate

int cmd_generate(const std::string& family, int n, int k, const std::string& format,
                 std::size_t samples_per_arc, const std::string& output) {
    sfr_curve* raw = nullptr;
    if (family == "closed") {
        int components = 0;
        sfr_status st = sfr_generate_closed(n, k, &raw, &components);
        if (st == SFR_ERROR_NOT_COPRIME) {
            std::fprintf(stderr, "error: %s\n", sfr_error_message());
            std::fprintf(stderr, "components: %d\n", components);
            return kExitGate;
        }
        if (st != SFR_OK) return report_failure(st);
    } else {
        sfr_status st = sfr_generate_open(n, k, &raw);
        if (st != SFR_OK) return report_failure(st);
    }
    CurvePtr curve(raw);

    sfr_status st;
    if (format == "json") st = sfr_curve_save_json(curve.get(), output.c_str());
    else if (format == "obj") st = sfr_curve_export_obj(curve.get(), output.c_str(), samples_per_arc);
    else if (format == "ply") st = sfr_curve_export_ply(curve.get(), output.c_str(), samples_per_arc);
    else st = sfr_curve_export_svg(curve.get(), output.c_str());
    if (st != SFR_OK) return report_failure(st);

    size_t arcs = 0;
    double length = 0.0;
    sfr_curve_arc_count(curve.get(), &arcs);
    sfr_curve_length(curve.get(), &length);
    std::printf("wrote %s solution n=%d k=%d (%zu arcs, length %.9f) to %s\n", family.c_str(), n,
                k, arcs, length, output.c_str());
    return kExitOk;
}

// -------------------------------------------------------------------- verify

int cmd_verify(const std::string& input, double theta_override, std::size_t grid_size,
               std::size_t samples_per_arc, std::uint64_t seed, std::size_t tube_area_points,
               bool as_json) {
    sfr_curve* raw = nullptr;
    sfr_status st = sfr_curve_load_json(input.c_str(), &raw);
    if (st != SFR_OK) return report_failure(st);
    CurvePtr curve(raw);

    int family = 0, n = 0, k = 0;
    sfr_curve_meta(curve.get(), &family, &n, &k);
    int closed = 0;
    sfr_curve_is_closed(curve.get(), &closed);
    size_t arcs = 0;
    sfr_curve_arc_count(curve.get(), &arcs);
    double length = 0.0;
    sfr_curve_length(curve.get(), &length);

    sfr_samples* sraw = nullptr;
    st = sfr_curve_sample_per_arc(curve.get(), samples_per_arc, &sraw);
    if (st != SFR_OK) return report_failure(st);
    SamplesPtr samples(sraw);
    size_t sample_count = 0;
    sfr_samples_count(samples.get(), &sample_count);

    sfr_thickness_report th{};
    st = sfr_thickness(samples.get(), SFR_ENGINE_ACCELERATED, &th);
    if (st != SFR_OK) return report_failure(st);

    double expected_delta = 0.0;
    if (family == 1) expected_delta = std::sin(kPi / (2.0 * n));
    if (family == 2) expected_delta = std::sin(kPi / n);

    double theta = theta_override > 0.0 ? theta_override
                   : family != 0       ? std::asin(expected_delta)
                                       : th.spherical_theta;

    sfr_coverage_report cov{};
    st = sfr_coverage(samples.get(), theta, grid_size, 2e-3, &cov);
    if (st != SFR_OK) return report_failure(st);

    int cs_pass = 0;
    double tangent_mismatch = 0.0, min_sep = 0.0;
    st = sfr_curve_check_c1_simplicity(curve.get(), 64, &cs_pass, &tangent_mismatch, &min_sep);
    if (st != SFR_OK) return report_failure(st);

    int end_kind = 0;
    double end_dist = 0.0;
    sfr_curve_endpoint_geometry(curve.get(), &end_kind, &end_dist);

    bool thickness_gate = family == 0 || std::abs(th.delta - expected_delta) <= 1e-3;
    bool coverage_gate = cov.sphere_filling != 0;
    bool structure_gate = cs_pass != 0;
    bool all_pass = thickness_gate && coverage_gate && structure_gate;

    double tube_rel_err = -1.0, tube_area = 0.0, tube_law = 0.0;
    if (tube_area_points > 0 && closed) {
        st = sfr_tube_area_check(samples.get(), theta, tube_area_points, seed, &tube_area,
                                 &tube_law, &tube_rel_err);
        if (st != SFR_OK) return report_failure(st);
    }

    const char* end_names[] = {"closed", "antipodal", "non-antipodal"};
    if (as_json) {
        nlohmann::json j;
        j["input"] = input;
        j["arcs"] = arcs;
        j["closed"] = closed != 0;
        if (family != 0) {
            j["family"] = family == 1 ? "closed" : "open";
            j["n"] = n;
            j["k"] = k;
            j["expected_delta"] = expected_delta;
        }
        j["samples"] = sample_count;
        j["delta"] = th.delta;
        j["spherical_theta"] = th.spherical_theta;
        j["witness"] = {th.witness[0], th.witness[1], th.witness[2]};
        j["length"] = length;
        j["coverage"] = {{"theta", theta},
                         {"grid_size", cov.grid_size},
                         {"max_gap", cov.max_gap},
                         {"covered_fraction", cov.covered_fraction},
                         {"tube_area_estimate", cov.tube_area_estimate},
                         {"sphere_filling", cov.sphere_filling != 0}};
        j["c1_simplicity"] = {{"pass", cs_pass != 0},
                              {"max_tangent_mismatch", tangent_mismatch},
                              {"min_nonadjacent_separation", min_sep}};
        j["endpoints"] = {{"kind", end_names[end_kind]}, {"distance", end_dist}};
        if (tube_rel_err >= 0.0)
            j["tube_area_law"] = {{"estimate", tube_area},
                                  {"law", tube_law},
                                  {"relative_error", tube_rel_err}};
        j["gates"] = {{"thickness", thickness_gate},
                      {"coverage", coverage_gate},
                      {"structure", structure_gate},
                      {"pass", all_pass}};
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("curve: %s (%zu arcs, %s)\n", input.c_str(), arcs,
                    closed ? "closed" : "open");
        if (family != 0)
            std::printf("family: %s n=%d k=%d, expected thickness %.9f\n",
                        family == 1 ? "closed" : "open", n, k, expected_delta);
        std::printf("samples: %zu (%zu per arc)\n", sample_count, samples_per_arc);
        std::printf("thickness delta: %.9f (witness %zu %zu %zu)%s\n", th.delta, th.witness[0],
                    th.witness[1], th.witness[2], thickness_gate ? "" : "  [GATE FAIL]");
        std::printf("spherical theta: %.9f\n", th.spherical_theta);
        std::printf("length: %.9f\n", length);
        std::printf("coverage: grid %zu, theta %.9f\n", cov.grid_size, theta);
        std::printf("  covered fraction: %.6f\n", cov.covered_fraction);
        std::printf("  max gap: %.9f (allowed %.9f) -> sphere-filling: %s%s\n", cov.max_gap,
                    theta + 2e-3, cov.sphere_filling ? "yes" : "no",
                    coverage_gate ? "" : "  [GATE FAIL]");
        std::printf("c1 junctions: max tangent mismatch %.3e\n", tangent_mismatch);
        std::printf("simplicity: min non-adjacent separation %.6f\n", min_sep);
        std::printf("structure: %s%s\n", cs_pass ? "pass" : "fail",
                    structure_gate ? "" : "  [GATE FAIL]");
        std::printf("endpoints: %s (distance %.9f)\n", end_names[end_kind], end_dist);
        if (tube_rel_err >= 0.0)
            std::printf("tube area: estimate %.6f vs law %.6f (rel err %.4f)\n", tube_area,
                        tube_law, tube_rel_err);
        std::printf("gates: %s\n", all_pass ? "PASS" : "FAIL");
    }
    return all_pass ? kExitOk : kExitGate;
}

// ----------------------------------------------------------------- thickness

int cmd_thickness(const std::string& input, std::size_t total_samples,
                  const std::string& engine) {
    sfr_curve* raw = nullptr;
    sfr_status st = sfr_curve_load_json(input.c_str(), &raw);
    if (st != SFR_OK) return report_failure(st);
    CurvePtr curve(raw);

    sfr_samples* sraw = nullptr;
    st = sfr_curve_sample(curve.get(), total_samples, &sraw);
    if (st != SFR_OK) return report_failure(st);
    SamplesPtr samples(sraw);

    auto run = [&](sfr_engine eng, sfr_thickness_report* rep) {
        return sfr_thickness(samples.get(), eng, rep);
    };
    if (engine == "both") {
        sfr_thickness_report a{}, b{};
        st = run(SFR_ENGINE_BRUTEFORCE, &a);
        if (st != SFR_OK) return report_failure(st);
        st = run(SFR_ENGINE_ACCELERATED, &b);
        if (st != SFR_OK) return report_failure(st);
        std::printf("bruteforce:  delta %.17g witness %zu %zu %zu\n", a.delta, a.witness[0],
                    a.witness[1], a.witness[2]);
        std::printf("accelerated: delta %.17g witness %zu %zu %zu\n", b.delta, b.witness[0],
                    b.witness[1], b.witness[2]);
        bool same = a.delta == b.delta && a.witness[0] == b.witness[0] &&
                    a.witness[1] == b.witness[1] && a.witness[2] == b.witness[2];
        std::printf("engines agree: %s\n", same ? "yes" : "no");
        return same ? kExitOk : kExitGate;
    }
    sfr_thickness_report rep{};
    st = run(engine == "brute" ? SFR_ENGINE_BRUTEFORCE : SFR_ENGINE_ACCELERATED, &rep);
    if (st != SFR_OK) return report_failure(st);
    std::printf("delta: %.9f\n", rep.delta);
    std::printf("spherical theta: %.9f\n", rep.spherical_theta);
    std::printf("witness: %zu %zu %zu\n", rep.witness[0], rep.witness[1], rep.witness[2]);
    return kExitOk;
}

// ----------------------------------------------------------------- enumerate

int cmd_enumerate(const std::string& range, bool as_json) {
    int lo = 0, hi = 0;
    auto dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(range);
        } else {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        std::fprintf(stderr, "error: cannot parse range '%s' (expected N or A..B)\n",
                     range.c_str());
        return kExitUsage;
    }
    if (lo < 1 || hi < lo) {
        std::fprintf(stderr, "error: invalid range %d..%d\n", lo, hi);
        return kExitUsage;
    }

    nlohmann::json rows = nlohmann::json::array();
    if (!as_json) std::printf("%6s  %8s  %-24s  %s\n", "n", "phi(n)", "admissible k", "length");
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> ks(static_cast<std::size_t>(n), 0);
        size_t count = 0;
        sfr_status st = sfr_admissible_k(n, ks.data(), ks.size(), &count);
        if (st != SFR_OK) return report_failure(st);
        ks.resize(count);
        double length = 0.0;
        sfr_analytic_length(0, n, &length);
        if (as_json) {
            nlohmann::json row;
            row["n"] = n;
            row["phi"] = count;
            row["k"] = ks;
            row["length"] = length;
            rows.push_back(std::move(row));
        } else {
            std::string klist;
            for (size_t i = 0; i < ks.size(); ++i)
                klist += (i ? "," : "") + std::to_string(ks[i]);
            std::printf("%6d  %8zu  %-24s  %.9f\n", n, count, klist.c_str(), length);
        }
    }
    if (as_json) std::printf("%s\n", rows.dump(2).c_str());
    return kExitOk;
}

// -------------------------------------------------------------------- export

int cmd_export(const std::string& input, const std::string& format, const std::string& output,
               std::size_t samples_per_arc) {
    sfr_curve* raw = nullptr;
    sfr_status st = sfr_curve_load_json(input.c_str(), &raw);
    if (st != SFR_OK) return report_failure(st);
    CurvePtr curve(raw);
    if (format == "obj") st = sfr_curve_export_obj(curve.get(), output.c_str(), samples_per_arc);
    else if (format == "ply") st = sfr_curve_export_ply(curve.get(), output.c_str(), samples_per_arc);
    else if (format == "svg") st = sfr_curve_export_svg(curve.get(), output.c_str());
    else st = sfr_curve_save_json(curve.get(), output.c_str());
    if (st != SFR_OK) return report_failure(st);
    std::printf("wrote %s to %s\n", format.c_str(), output.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sfrope: longest thick curves (ropes) on the unit sphere"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "construct a solution curve");
    std::string g_family = "closed", g_format = "json", g_output;
    int g_n = 1, g_k = 0;
    std::size_t g_spa = 500;
    gen->add_option("--family", g_family, "closed | open")
        ->check(CLI::IsMember({"closed", "open"}));
    gen->add_option("--n", g_n, "family index (thickness sin(pi/2n) closed, sin(pi/n) open)")
        ->required();
    gen->add_option("--k", g_k, "rotation index");
    gen->add_option("--format", g_format, "json | obj | ply | svg")
        ->check(CLI::IsMember({"json", "obj", "ply", "svg"}));
    gen->add_option("--samples-per-arc", g_spa, "sampling density for obj/ply export");
    gen->add_option("--output,-o", g_output, "output path")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "measure and gate-check a curve file");
    std::string v_input;
    double v_theta = -1.0;
    std::size_t v_grid = 100000, v_spa = 500, v_tube = 0;
    std::uint64_t v_seed = 20120;
    bool v_json = false;
    ver->add_option("input", v_input, "CurveFileV1 JSON path")->required();
    ver->add_option("--theta", v_theta, "coverage tube half-width override (radians)");
    ver->add_option("--grid-size", v_grid, "coverage grid size");
    ver->add_option("--samples-per-arc", v_spa, "sampling density");
    ver->add_option("--seed", v_seed, "Monte Carlo seed for --tube-area");
    ver->add_option("--tube-area", v_tube, "also run the tube-area law with this many MC points");
    ver->add_flag("--json", v_json, "machine-readable report");

    // thickness
    auto* thk = app.add_subcommand("thickness", "thickness of a curve file");
    std::string t_input, t_engine = "accel";
    std::size_t t_samples = 2000;
    thk->add_option("input", t_input, "CurveFileV1 JSON path")->required();
    thk->add_option("--samples", t_samples, "total sample count");
    thk->add_option("--engine", t_engine, "accel | brute | both")
        ->check(CLI::IsMember({"accel", "brute", "both"}));

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "solution count and length per family index");
    std::string e_range;
    bool e_json = false;
    enu->add_option("n", e_range, "index n or range A..B")->required();
    enu->add_flag("--json", e_json, "machine-readable output");

    // export
    auto* exp = app.add_subcommand("export", "convert a curve file to obj/ply/svg");
    std::string x_input, x_format = "obj", x_output;
    std::size_t x_spa = 500;
    exp->add_option("input", x_input, "CurveFileV1 JSON path")->required();
    exp->add_option("--format", x_format, "json | obj | ply | svg")
        ->check(CLI::IsMember({"json", "obj", "ply", "svg"}));
    exp->add_option("--output,-o", x_output, "output path")->required();
    exp->add_option("--samples-per-arc", x_spa, "sampling density for obj/ply");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    if (gen->parsed()) return cmd_generate(g_family, g_n, g_k, g_format, g_spa, g_output);
    if (ver->parsed()) return cmd_verify(v_input, v_theta, v_grid, v_spa, v_seed, v_tube, v_json);
    if (thk->parsed()) return cmd_thickness(t_input, t_samples, t_engine);
    if (enu->parsed()) return cmd_enumerate(e_range, e_json);
    if (exp->parsed()) return cmd_export(x_input, x_format, x_output, x_spa);
    return kExitUsage;
}
