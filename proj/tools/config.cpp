#include "config.hpp"

#include "subplanck/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace subplanck::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

double to_real(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) + "' is not a finite number");
    }
    return v;
}

std::size_t to_count(std::string_view key, std::string_view text) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) + "' is not a non-negative integer");
    }
    return v;
}

} // namespace

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys{
        "x0",        "p0",        "delta",     "hbar",       "A_re",       "A_im",
        "B_re",      "B_im",      "plane",     "fixed1",     "fixed2",     "range1_lo",
        "range1_hi", "range2_lo", "range2_hi", "n1",         "n2",         "half_width",
        "nodes",     "rule",      "out_dir",   "format",     "contrast_threshold",
        "samples_per_period",     "s_max",     "oracle_points",           "seed",
        "normalization_nodes",
    };
    return keys;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view raw) {
    const std::string_view value = unquote(trim(raw));
    if (key == "x0") c.state.x0 = to_real(key, value);
    else if (key == "p0") c.state.p0 = to_real(key, value);
    else if (key == "delta") c.state.delta = to_real(key, value);
    else if (key == "hbar") c.state.hbar = to_real(key, value);
    else if (key == "A_re") c.state.A.real(to_real(key, value));
    else if (key == "A_im") c.state.A.imag(to_real(key, value));
    else if (key == "B_re") c.state.B.real(to_real(key, value));
    else if (key == "B_im") c.state.B.imag(to_real(key, value));
    else if (key == "plane") {
        const auto plane = parse_plane(value);
        if (!plane) throw ConfigError("unknown plane '" + std::string(value) + "'");
        c.section.plane = *plane;
    }
    else if (key == "fixed1") c.section.fixed[0] = to_real(key, value);
    else if (key == "fixed2") c.section.fixed[1] = to_real(key, value);
    else if (key == "range1_lo") c.section.range1.lo = to_real(key, value);
    else if (key == "range1_hi") c.section.range1.hi = to_real(key, value);
    else if (key == "range2_lo") c.section.range2.lo = to_real(key, value);
    else if (key == "range2_hi") c.section.range2.hi = to_real(key, value);
    else if (key == "n1") c.section.n1 = to_count(key, value);
    else if (key == "n2") c.section.n2 = to_count(key, value);
    else if (key == "half_width") c.half_width = to_real(key, value);
    else if (key == "nodes") c.nodes = to_count(key, value);
    else if (key == "rule") {
        if (value == "gauss-legendre") c.rule = QuadratureSpec::Rule::GaussLegendre;
        else if (value == "gauss-hermite") c.rule = QuadratureSpec::Rule::GaussHermiteWeighted;
        else throw ConfigError("rule must be gauss-legendre or gauss-hermite");
    }
    else if (key == "out_dir") c.out_dir = std::string(value);
    else if (key == "format") c.format = std::string(value);
    else if (key == "contrast_threshold") c.contrast_threshold = to_real(key, value);
    else if (key == "samples_per_period") c.samples_per_period = to_count(key, value);
    else if (key == "s_max") c.s_max = to_real(key, value);
    else if (key == "oracle_points") c.oracle_points = to_count(key, value);
    else if (key == "seed") c.seed = to_count(key, value);
    else if (key == "normalization_nodes") c.normalization_nodes = to_count(key, value);
    else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

void apply_config_text(RunConfig& config, std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        try {
            apply_setting(config, key, line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void apply_override(RunConfig& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw ConfigError("--set expects KEY=VALUE, got '" + std::string(assignment) + "'");
    apply_setting(config, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_text(config, text.str());
}

void RunConfig::validate() const {
    try {
        state.validate();
        NormalizedState probe(state);
        section.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (half_width < 0.0) throw ConfigError("half_width must be positive (or 0 for the default)");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
    if (out_dir.empty()) throw ConfigError("out_dir must not be empty");
    if (!(contrast_threshold > 0.0 && contrast_threshold < 1.0)) {
        throw ConfigError("contrast_threshold must lie in (0, 1)");
    }
    if (samples_per_period < 4) throw ConfigError("samples_per_period must be at least 4");
    if (s_max < 0.0) throw ConfigError("s_max must be non-negative");
    if (oracle_points == 0) throw ConfigError("oracle_points must be positive");
    if (normalization_nodes < 3) throw ConfigError("normalization_nodes must be at least 3");
}

QuadratureSpec RunConfig::quadrature() const {
    QuadratureSpec q = QuadratureSpec::for_state(state);
    if (half_width > 0.0) q.half_width = half_width;
    if (nodes > 0) q.nodes = nodes;
    q.rule = rule;
    return q;
}

} // namespace subplanck::cli
