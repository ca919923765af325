// SPDX-License-Identifier: Apache-2.0
//
// polyharm: analyze planar harmonic / biharmonic / polyharmonic mappings
// given as truncated power series.
//
// Exit codes: 0 pass, 1 certified fail, 2 parse error, 3 domain/range error,
// 4 I/O error, 5 inconclusive.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyharm/boundary.hpp"
#include "polyharm/classes.hpp"
#include "polyharm/config.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/io.hpp"
#include "polyharm/render.hpp"
#include "polyharm/univalence.hpp"

namespace {

using namespace polyharm;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;
constexpr int kExitInconclusive = 5;

std::vector<double> parse_real_list(const std::string& text, const char* flag) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        // start:stop:step range syntax
        double start = 0, stop = 0, step = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
            step <= 0)
            throw DomainError(std::string(flag) + ": expected start:stop:step");
        for (double v = start; v <= stop + 1e-15; v += step) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw DomainError(std::string(flag) + ": bad number '" + item + "'");
        }
    }
    if (out.empty()) throw DomainError(std::string(flag) + ": empty list");
    return out;
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Complex parse_complex(const std::string& text) {
    double re = 0, im = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf", &re, &im) == 2) return {re, im};
    if (std::sscanf(text.c_str(), "%lf", &re) == 1) return {re, 0.0};
    throw DomainError("--z: expected re or re,im");
}

void parse_grid_flag(const std::string& text, GridSpec* grid) {
    int radial = 0, angular = 0;
    if (std::sscanf(text.c_str(), "%dx%d", &radial, &angular) != 2)
        throw DomainError("--grid: expected RxA, e.g. 64x256");
    grid->radial_count = radial;
    grid->angular_count = angular;
}

std::string iso_utc_now() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json make_certificate(const std::string& command, const std::string& spec_text,
                      Json parameters, Json report) {
    Json j;
    j["command"] = command;
    j["input_digest"] = content_digest(spec_text);
    j["parameters"] = std::move(parameters);
    j["report"] = std::move(report);
    j["timestamp"] = iso_utc_now();
    return j;
}

struct Output {
    bool compact = false;
    std::string out_dir;

    void emit(const Json& report) const {
        if (compact)
            std::cout << report.dump() << "\n";
        else
            std::cout << report.dump(2) << "\n";
    }

    void persist(const std::string& command, const std::string& spec_text,
                 const Json& parameters, const Json& report) const {
        if (out_dir.empty()) return;
        std::filesystem::create_directories(out_dir);
        const Json cert = make_certificate(command, spec_text, parameters, report);
        write_file(out_dir + "/" + command + "-certificate.json",
                   cert.dump(2) + "\n");
    }
};

int verdict_exit(const Verdict& v) {
    switch (v.status) {
        case VerdictStatus::certified_pass: return kExitPass;
        case VerdictStatus::certified_fail: return kExitFail;
        case VerdictStatus::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

Json radii_json(const std::vector<double>& radii) {
    Json j = Json::array();
    for (double r : radii) j.push_back(r);
    return j;
}

int cmd_eval(const std::string& spec_text, const std::string& z_text,
             const Output& out) {
    const PolyharmonicMap f = parse_map_spec_string(spec_text);
    const Complex z = parse_complex(z_text);
    const Complex w = eval_polyharmonic(f, z);
    if (out.compact || !out.out_dir.empty()) {
        Json report;
        report["z"] = {z.real(), z.imag()};
        report["value"] = {w.real(), w.imag()};
        if (out.compact) out.emit(report);
        Json params;
        params["z"] = {z.real(), z.imag()};
        out.persist("eval", spec_text, params, report);
    }
    if (!out.compact)
        std::cout << std::setprecision(15) << w << "\n";
    return kExitPass;
}

int cmd_render(const std::string& spec_text, const std::string& which,
               const RenderSpec& rspec, const Output& out) {
    if (out.out_dir.empty()) throw IoError("render: --out DIR is required");
    const PolyharmonicMap f = parse_map_spec_string(spec_text);
    std::set<std::string> wanted;
    {
        std::stringstream ss(which);
        std::string item;
        while (std::getline(ss, item, ',')) wanted.insert(item);
    }
    static const RenderTarget all[] = {RenderTarget::slice_sum,
                                       RenderTarget::full_map,
                                       RenderTarget::dilatation};
    std::filesystem::create_directories(out.out_dir);
    Json report;
    Json files = Json::array();
    for (RenderTarget t : all) {
        const std::string name = render_target_name(t);
        if (!wanted.empty() && !wanted.count(name)) continue;
        const RenderProduct product = render_map(f, t, rspec);
        write_file(out.out_dir + "/" + name + ".csv", product.csv);
        write_file(out.out_dir + "/" + name + ".svg", product.svg);
        Json entry;
        entry["target"] = name;
        entry["csv_digest"] = content_digest(product.csv);
        entry["pole_skips"] = product.pole_skips;
        files.push_back(entry);
    }
    if (files.empty()) throw DomainError("render: --which matched no target");
    report["files"] = files;
    out.emit(report);
    Json params;
    params["which"] = which;
    params["circles"] = rspec.circles;
    params["rays"] = rspec.rays;
    params["samples_per_curve"] = rspec.samples_per_curve;
    params["max_radius"] = rspec.max_radius;
    out.persist("render", spec_text, params, report);
    return kExitPass;
}

int cmd_slice_test(const std::string& spec_text, const std::vector<double>& radii,
                   const GridSpec& grid, int curve_samples, const Output& out) {
    const PolyharmonicMap f = parse_map_spec_string(spec_text);
    const Verdict v = lemma1_slice_test(f, radii, grid, curve_samples);
    const Json report = to_json(v);
    out.emit(report);
    Json params;
    params["radii"] = radii_json(radii);
    params["grid"] = to_json(grid);
    params["curve_samples"] = curve_samples;
    out.persist("slice-test", spec_text, params, report);
    return verdict_exit(v);
}

int cmd_boundary(const std::string& spec_text, double theta0,
                 const std::vector<double>& radii, const Output& out) {
    const PolyharmonicMap f = parse_map_spec_string(spec_text);
    if (f.order() != 2)
        throw DomainError("boundary: requires a biharmonic spec (p = 2)");
    const HarmonicMap& F1 = f.components[0];
    const HarmonicMap& F2 = f.components[1];
    const SmallOReport small_o = small_o_probe(F2, theta0, radii);
    const JumpReport jump = jump_indicator(F1.h, F2.h, theta0, radii);
    Json report;
    report["theta0"] = theta0;
    report["small_o"] = to_json(small_o);
    report["small_o_advisory"] = !small_o.holds;
    report["jump"] = to_json(jump);
    out.emit(report);
    Json params;
    params["theta0"] = theta0;
    params["radii"] = radii_json(radii);
    out.persist("boundary", spec_text, params, report);
    switch (jump.verdict) {
        case JumpVerdict::continuous: return kExitPass;
        case JumpVerdict::jump: return kExitFail;
        case JumpVerdict::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int cmd_gamma_integral(const std::string& spec_text, double theta0, double m,
                       const std::vector<double>& cutoffs, int gamma_samples,
                       const Output& out) {
    const PolyharmonicMap f = parse_map_spec_string(spec_text);
    if (f.order() != 2)
        throw DomainError("gamma-integral: requires a biharmonic spec (p = 2)");
    if (!(m > 0.0) || !(m < 1.0 / std::numbers::pi))
        throw DomainError("gamma-integral: criterion requires 0 < m < 1/pi");
    const GammaCurve gamma = gamma_curve(m, theta0, gamma_samples);
    const DivergenceReport r =
        continuity_integral(f.components[0], f.components[1], gamma, cutoffs);
    const Json report = to_json(r);
    out.emit(report);
    Json params;
    params["theta0"] = theta0;
    params["m"] = m;
    params["cutoffs"] = radii_json(cutoffs);
    params["gamma_samples"] = gamma_samples;
    out.persist("gamma-integral", spec_text, params, report);
    switch (r.verdict) {
        case IntegralVerdict::divergent: return kExitPass;
        case IntegralVerdict::convergent: return kExitFail;
        case IntegralVerdict::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int cmd_certify_ctc(const std::string& spec_text, const std::vector<double>& radii,
                    const GridSpec& grid, int curve_samples, bool with_figure,
                    const RenderSpec& rspec, const Output& out) {
    const PolyharmonicMap spec_map = parse_map_spec_string(spec_text);
    if (spec_map.order() != 1)
        throw DomainError("certify-ctc: requires a harmonic spec (p = 1)");
    const HarmonicMap& F = spec_map.components[0];
    const CtcCertificate cert = certify_ctc(F, grid, radii, curve_samples);
    const Json report = to_json(cert);
    out.emit(report);
    Json params;
    params["radii"] = radii_json(radii);
    params["grid"] = to_json(grid);
    params["curve_samples"] = curve_samples;
    out.persist("certify-ctc", spec_text, params, report);
    if (with_figure) {
        if (out.out_dir.empty())
            throw IoError("certify-ctc: --figure requires --out DIR");
        const PolyharmonicMap lifted = build_ctc_biharmonic(F);
        static const RenderTarget all[] = {RenderTarget::slice_sum,
                                           RenderTarget::full_map,
                                           RenderTarget::dilatation};
        for (RenderTarget t : all) {
            const RenderProduct product = render_map(lifted, t, rspec);
            const std::string name = render_target_name(t);
            write_file(out.out_dir + "/" + name + ".csv", product.csv);
            write_file(out.out_dir + "/" + name + ".svg", product.svg);
        }
    }
    switch (cert.conclusion) {
        case CtcConclusion::fully_close_to_convex: return kExitPass;
        case CtcConclusion::failed: return kExitFail;
        case CtcConclusion::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polyharm: univalence, boundary-behavior, and convexity-class analysis "
        "of planar polyharmonic mappings given as truncated power series"};
    app.require_subcommand(1);

    Defaults defaults;
    try {
        defaults = load_config_from_env();
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    std::string spec_path;
    std::string out_dir;
    bool compact = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "map-spec JSON file")->required();
        cmd->add_option("--out", out_dir, "directory for persisted reports");
        cmd->add_flag("--json", compact, "compact JSON on stdout");
    };

    auto* eval = app.add_subcommand("eval", "evaluate f(z)");
    std::string z_text;
    add_common(eval);
    eval->add_option("--z", z_text, "evaluation point, re or re,im")->required();

    auto* render = app.add_subcommand("render", "image the polar grid as SVG+CSV");
    std::string which = "F1-sum,f,dilatation";
    RenderSpec rspec = defaults.render;
    add_common(render);
    render->add_option("--which", which, "subset of F1-sum,f,dilatation");
    render->add_option("--circles", rspec.circles, "concentric circles");
    render->add_option("--rays", rspec.rays, "radial lines");
    render->add_option("--samples", rspec.samples_per_curve, "samples per curve");
    render->add_option("--max-radius", rspec.max_radius, "outermost radius");
    render->add_option("--canvas", rspec.canvas, "canvas size");

    auto* slice_test =
        app.add_subcommand("slice-test", "slice univalence criterion");
    std::string radii_text, grid_text;
    GridSpec grid = defaults.grid;
    int curve_samples = defaults.curve_samples;
    add_common(slice_test);
    slice_test->add_option("--radii", radii_text, "list a,b,c or start:stop:step");
    slice_test->add_option("--grid", grid_text, "RxA, e.g. 64x256");
    slice_test->add_option("--max-radius", grid.max_radius, "grid max radius");
    slice_test->add_option("--curve-samples", curve_samples, "boundary samples");

    auto* boundary = app.add_subcommand("boundary", "jump criterion at e^{i theta0}");
    double theta0 = 0.0;
    add_common(boundary);
    boundary->add_option("--theta0", theta0, "boundary angle (radians)");
    boundary->add_option("--radii", radii_text, "radius sequence increasing to 1");

    auto* gamma = app.add_subcommand("gamma-integral",
                                     "continuity integral along Gamma_{m,theta0}");
    double m = 0.1;
    std::string cutoffs_text;
    int gamma_samples = defaults.gamma_samples;
    add_common(gamma);
    gamma->add_option("--theta0", theta0, "boundary angle (radians)");
    gamma->add_option("--m", m, "curve slope, 0 < m < 1/pi");
    gamma->add_option("--cutoffs", cutoffs_text, "decreasing cutoff list");
    gamma->add_option("--gamma-samples", gamma_samples, "samples per curve side");

    auto* certify = app.add_subcommand("certify-ctc",
                                       "certify the close-to-convex construction");
    bool with_figure = false;
    add_common(certify);
    certify->add_option("--radii", radii_text, "slice radii");
    certify->add_option("--grid", grid_text, "RxA");
    certify->add_option("--max-radius", grid.max_radius, "grid max radius");
    certify->add_option("--curve-samples", curve_samples, "boundary samples");
    certify->add_flag("--figure", with_figure, "also render the lifted map");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitParse;
    }

    try {
        const std::string spec_text = read_file(spec_path);
        const Output out{compact, out_dir};
        if (!grid_text.empty()) parse_grid_flag(grid_text, &grid);

        if (*eval) return cmd_eval(spec_text, z_text, out);
        if (*render) return cmd_render(spec_text, which, rspec, out);
        if (*slice_test) {
            const std::vector<double> radii =
                radii_text.empty()
                    ? defaults.radii
                    : sorted_unique(parse_real_list(radii_text, "--radii"));
            return cmd_slice_test(spec_text, radii, grid, curve_samples, out);
        }
        if (*boundary) {
            const std::vector<double> radii =
                radii_text.empty()
                    ? defaults.boundary_radii
                    : sorted_unique(parse_real_list(radii_text, "--radii"));
            return cmd_boundary(spec_text, theta0, radii, out);
        }
        if (*gamma) {
            std::vector<double> cutoffs =
                cutoffs_text.empty()
                    ? defaults.cutoffs
                    : parse_real_list(cutoffs_text, "--cutoffs");
            std::sort(cutoffs.begin(), cutoffs.end(), std::greater<>());
            cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()),
                          cutoffs.end());
            return cmd_gamma_integral(spec_text, theta0, m, cutoffs,
                                      gamma_samples, out);
        }
        if (*certify) {
            const std::vector<double> radii =
                radii_text.empty()
                    ? defaults.radii
                    : sorted_unique(parse_real_list(radii_text, "--radii"));
            return cmd_certify_ctc(spec_text, radii, grid, curve_samples,
                                   with_figure, rspec, out);
        }
        return kExitParse;
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
