#include "commands.hpp"

#include "output.hpp"

#include "subplanck/analysis.hpp"
#include "subplanck/conformance.hpp"
#include "subplanck/errors.hpp"
#include "subplanck/sensitivity.hpp"
#include "subplanck/wigner_analytic.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <ostream>
#include <sstream>

namespace subplanck::cli {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

ordered_json complex_json(complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json state_json(const NormalizedState& s) {
    const auto& p = s.params();
    return ordered_json{{"x0", p.x0},
                        {"p0", p.p0},
                        {"delta", p.delta},
                        {"hbar", p.hbar},
                        {"A", complex_json(p.A)},
                        {"B", complex_json(p.B)},
                        {"norm_const", s.norm_const()},
                        {"normalized_A", complex_json(s.weight_a())},
                        {"normalized_B", complex_json(s.weight_b())}};
}

ordered_json spec_json(const SectionSpec& spec) {
    const auto fixed = plane_fixed(spec.plane);
    auto name = [](Coord c) {
        switch (c) {
        case Coord::X1: return "x1";
        case Coord::P1: return "p1";
        case Coord::X2: return "x2";
        case Coord::P2: return "p2";
        }
        return "?";
    };
    const auto axes = plane_axes(spec.plane);
    return ordered_json{{"plane", std::string(to_string(spec.plane))},
                        {"axes", {name(axes[0]), name(axes[1])}},
                        {"fixed", {{name(fixed[0]), spec.fixed[0]}, {name(fixed[1]), spec.fixed[1]}}},
                        {"range1", {spec.range1.lo, spec.range1.hi}},
                        {"range2", {spec.range2.lo, spec.range2.hi}},
                        {"n1", spec.n1},
                        {"n2", spec.n2}};
}

// Gaussian centres of the two product terms, projected onto the section axes.
ordered_json markers_json(const SectionSpec& spec, const StateParams& p) {
    ordered_json out = ordered_json::array();
    const auto axes = plane_axes(spec.plane);
    auto add = [&](const char* term, const PhasePoint& c) {
        const double u = get(c, axes[0]);
        const double v = get(c, axes[1]);
        for (const auto& m : out) {
            if (m["term"] == term && m["axis1"] == u && m["axis2"] == v) return;
        }
        out.push_back({{"term", term}, {"axis1", u}, {"axis2", v}});
    };
    for (double sx : {-1.0, 1.0}) {
        for (double sp : {-1.0, 1.0}) {
            add("A", {sx * p.x0, 0.0, 0.0, sp * p.p0});
            add("B", {0.0, sp * p.p0, sx * p.x0, 0.0});
        }
    }
    return out;
}

void print(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string curve_csv(const std::vector<OverlapCurve>& curves) {
    std::string csv = "s,overlap,model\n";
    for (const auto& c : curves) {
        for (std::size_t i = 0; i < c.shifts.size(); ++i) {
            csv += format_real(c.shifts[i]) + ',' + format_real(c.overlaps[i]) + ',' + std::string(to_string(c.model)) + '\n';
        }
    }
    return csv;
}

std::optional<OverlapModel> parse_model(const std::string& name) {
    if (name == "entangled") return OverlapModel::EntangledEqualShift;
    if (name == "compass") return OverlapModel::ZurekCompass;
    if (name == "numeric") return OverlapModel::NumericGeneral;
    return std::nullopt;
}

} // namespace

int cmd_section(const RunConfig& config, std::ostream& out) {
    config.validate();
    const NormalizedState state(config.state);
    const Grid2D grid = section(config.section, state);

    std::size_t peak = 0;
    std::size_t low = 0;
    for (std::size_t k = 0; k < grid.values.size(); ++k) {
        if (std::abs(grid.values[k]) > std::abs(grid.values[peak])) peak = k;
        if (grid.values[k] < grid.values[low]) low = k;
    }
    const std::size_t n1 = grid.axis1.size();
    auto located = [&](std::size_t k) {
        return ordered_json{{"value", grid.values[k]}, {"axis1", grid.axis1[k % n1]}, {"axis2", grid.axis2[k / n1]}};
    };
    ordered_json summary{{"command", "section"},
                         {"state", state_json(state)},
                         {"section", spec_json(config.section)},
                         {"peak_abs", located(peak)},
                         {"min", located(low)},
                         {"gaussian_centres", markers_json(config.section, config.state)}};

    const std::string stem = "section_" + std::string(to_string(config.section.plane));
    const fs::path dir(config.out_dir);
    if (config.format == "csv") {
        std::string csv = "axis1,axis2,w\n";
        csv.reserve(grid.values.size() * 64);
        for (std::size_t j = 0; j < grid.axis2.size(); ++j) {
            for (std::size_t i = 0; i < n1; ++i) {
                csv += format_real(grid.axis1[i]) + ',' + format_real(grid.axis2[j]) + ',' + format_real(grid.at(i, j)) + '\n';
            }
        }
        write_atomic(dir / (stem + ".csv"), csv);
        write_atomic(dir / (stem + ".json"), summary.dump(2) + '\n');
    } else {
        ordered_json full = summary;
        full["axis1"] = grid.axis1;
        full["axis2"] = grid.axis2;
        full["values"] = grid.values;
        write_atomic(dir / (stem + ".json"), full.dump(2) + '\n');
    }
    print(out, summary);
    return kOk;
}

int cmd_tile(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
    config.validate();
    const NormalizedState state(config.state);
    const Grid2D grid = section(config.section, state);

    ordered_json report{{"command", "tile"}, {"state", state_json(state)}, {"section", spec_json(config.section)}};
    int code = kOk;
    try {
        const TileReport t = find_zero_lattice(grid, config.state);
        report["lattice"] = true;
        report["zeros_axis1"] = t.zeros_axis1;
        report["zeros_axis2"] = t.zeros_axis2;
        report["scan_line_axis1"] = t.line1;
        report["scan_line_axis2"] = t.line2;
        report["period1"] = t.period1;
        report["period2"] = t.period2;
        report["tile_area"] = t.tile_area;
        report["predicted_area"] = t.predicted_area;
        report["relative_error"] = t.relative_error;
    } catch (const NoLatticeError& e) {
        report["lattice"] = false;
        report["predicted_area"] = predicted_tile_area(config.state);
        report["error"] = e.what();
        if (options.expect_lattice) code = kExpectation;
    }
    const CheckerboardResult cb =
        checkerboard_detect(grid, config.state, {.window_periods = 2.0, .contrast_threshold = config.contrast_threshold});
    report["checkerboard"] = {{"detected", cb.detected},
                              {"contrast", cb.contrast},
                              {"contrast_threshold", config.contrast_threshold},
                              {"sign_changes_axis1", cb.sign_changes_axis1},
                              {"sign_changes_axis2", cb.sign_changes_axis2}};

    write_atomic(fs::path(config.out_dir) / ("tile_" + std::string(to_string(config.section.plane)) + ".json"),
                 report.dump(2) + '\n');
    print(out, report);
    return code;
}

int cmd_overlap(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
    config.validate();
    std::optional<OverlapModel> model;
    if (options.model) {
        model = parse_model(*options.model);
        if (!model) throw ConfigError("--model must be entangled, compass or numeric");
    }
    if (options.s && !std::isfinite(*options.s)) throw ConfigError("--s must be finite");
    const NormalizedState state(config.state);
    if (config.state.x0 == 0.0) throw ConfigError("overlap curves need x0 != 0");

    if (options.s) {
        const OverlapModel m = model.value_or(OverlapModel::EntangledEqualShift);
        const double v = overlap_value(m, state, *options.s);
        ordered_json j{{"command", "overlap"}, {"model", std::string(to_string(m))}, {"s", *options.s}, {"overlap", v}};
        print(out, j);
        return kOk;
    }

    const double s_max = config.s_max > 0.0 ? config.s_max : std::numbers::pi * config.state.hbar / std::abs(config.state.x0);
    std::vector<OverlapModel> models;
    if (model) {
        models = {*model};
    } else {
        models = {OverlapModel::EntangledEqualShift, OverlapModel::ZurekCompass, OverlapModel::NumericGeneral,
                  OverlapModel::NumericCompass};
    }
    std::vector<OverlapCurve> curves;
    ordered_json minima = ordered_json::object();
    for (const OverlapModel m : models) {
        curves.push_back(sweep_overlap(m, state, s_max, config.samples_per_period));
        minima[std::string(to_string(m))] = curves.back().minima;
    }

    ordered_json report{{"command", "overlap"}, {"state", state_json(state)}, {"s_max", s_max}, {"minima", minima}};
    auto first = [&](OverlapModel m) -> std::optional<double> {
        for (const auto& c : curves) {
            if (c.model == m) return find_minimum_shift(c);
        }
        return std::nullopt;
    };
    const auto add_ratio = [&](const char* key, OverlapModel entangled, OverlapModel compass) {
        const auto a = first(entangled);
        const auto b = first(compass);
        if (!a || !b) return;
        report[key] = {{"s_star", *a}, {"s1_star", *b}, {"ratio", *a / *b}};
    };
    add_ratio("quadrature", OverlapModel::NumericGeneral, OverlapModel::NumericCompass);
    add_ratio("closed_form", OverlapModel::EntangledEqualShift, OverlapModel::ZurekCompass);
    if (report.contains("quadrature")) {
        report["s_star"] = report["quadrature"]["s_star"];
        report["s1_star"] = report["quadrature"]["s1_star"];
        report["ratio"] = report["quadrature"]["ratio"];
    } else if (curves.size() == 1) {
        report["s_star"] = find_minimum_shift(curves.front());
    }

    const fs::path dir(config.out_dir);
    if (config.format == "csv") {
        write_atomic(dir / "overlap.csv", curve_csv(curves));
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& c : curves) {
            arr.push_back({{"model", std::string(to_string(c.model))}, {"s", c.shifts}, {"overlap", c.overlaps}});
        }
        write_atomic(dir / "overlap.json", arr.dump(2) + '\n');
    }
    write_atomic(dir / "overlap_minima.json", report.dump(2) + '\n');
    print(out, report);
    return kOk;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
    config.validate();
    const NormalizedState state(config.state);
    ConformanceOptions opts;
    opts.quad = config.quadrature();
    opts.oracle_points = config.oracle_points;
    opts.seed = config.seed;
    opts.normalization.nodes = config.normalization_nodes;
    const ConformanceReport r = run_conformance(state, opts);

    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"mandatory", c.mandatory},
                          {"passed", c.passed},
                          {"measured", std::isfinite(c.measured) ? ordered_json(c.measured) : ordered_json(nullptr)},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail}});
    }
    ordered_json report{{"command", "validate"},
                        {"state", state_json(state)},
                        {"quadrature", {{"half_width", opts.quad.half_width}, {"nodes", opts.quad.nodes}}},
                        {"mandatory_passed", r.mandatory_passed()},
                        {"checks", checks}};
    write_atomic(fs::path(config.out_dir) / "validate.json", report.dump(2) + '\n');
    print(out, report);
    return r.mandatory_passed() ? kOk : kConformance;
}

int cmd_witness(const RunConfig& config, std::ostream& out) {
    config.validate();
    const NormalizedState state(config.state);
    const WitnessReport w = variance_witness(state);
    ordered_json report{{"command", "witness"},
                        {"state", state_json(state)},
                        {"means", {{"x1", w.mean_x1}, {"p1", w.mean_p1}, {"x2", w.mean_x2}, {"p2", w.mean_p2}}},
                        {"var_xminus", w.var_xminus},
                        {"var_pplus", w.var_pplus},
                        {"var_xplus", w.var_xplus},
                        {"var_pminus", w.var_pminus},
                        {"duan_value", w.duan_value},
                        {"duan_parameter", w.duan_parameter},
                        {"threshold", w.threshold},
                        {"separable_consistent", w.separable_consistent},
                        {"quadratures", "u = x/delta, v = p delta/hbar"}};
    if (std::abs(state.norm_const() - 1.0) > 1e-12) {
        std::ostringstream note;
        note << "input weights rescaled by N = " << format_real(state.norm_const()) << "; normalized weights are N A and N B";
        report["note"] = note.str();
    }
    write_atomic(fs::path(config.out_dir) / "witness.json", report.dump(2) + '\n');
    print(out, report);
    return kOk;
}

} // namespace subplanck::cli
