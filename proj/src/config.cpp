// config.cpp — JSON config parsing with named invariant checks

#include "tdpt/config.hpp"

#include "tdpt/errors.hpp"
#include "tdpt/fock.hpp"
#include "tdpt/modes.hpp"
#include "tdpt/numerics.hpp"
#include "tdpt/static_models.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace tdpt {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void allow_keys(const json& j, const std::string& where, const std::set<std::string>& keys) {
    if (!j.is_object()) fail(where + ": expected an object");
    for (const auto& [k, v] : j.items()) {
        if (!keys.count(k)) fail(where + ": unknown key '" + k + "'");
    }
}

double number(const json& j, const std::string& where, const std::string& key, double def) {
    if (!j.contains(key)) return def;
    const json& v = j.at(key);
    if (!v.is_number()) fail(where + "." + key + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where + "." + key + ": must be finite");
    return x;
}

double required_number(const json& j, const std::string& where, const std::string& key) {
    if (!j.contains(key)) fail(where + ": missing key '" + key + "'");
    return number(j, where, key, 0.0);
}

long long integer(const json& j, const std::string& where, const std::string& key, long long def) {
    if (!j.contains(key)) return def;
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(where + "." + key + ": expected an integer");
    return v.get<long long>();
}

std::vector<double> numbers(const json& j, const std::string& where, const std::string& key) {
    if (!j.contains(key)) fail(where + ": missing key '" + key + "'");
    const json& v = j.at(key);
    if (!v.is_array()) fail(where + "." + key + ": expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) fail(where + "." + key + ": expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

TimeProfile parse_profile_record(const json& j, const std::string& where, double t_max) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        fail(where + ": profile needs a string 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        allow_keys(j, where, {"kind", "value"});
        return TimeProfile::constant(required_number(j, where, "value"), t_max);
    }
    if (kind == "polynomial") {
        allow_keys(j, where, {"kind", "coeffs"});
        return TimeProfile::polynomial(numbers(j, where, "coeffs"), t_max);
    }
    if (kind == "sinusoid") {
        allow_keys(j, where, {"kind", "offset", "amplitude", "omega", "phase"});
        return TimeProfile::sinusoid(number(j, where, "offset", 0.0),
                                     required_number(j, where, "amplitude"),
                                     required_number(j, where, "omega"),
                                     number(j, where, "phase", 0.0), t_max);
    }
    if (kind == "exponential") {
        allow_keys(j, where, {"kind", "offset", "amplitude", "rate"});
        return TimeProfile::exponential(number(j, where, "offset", 0.0),
                                        required_number(j, where, "amplitude"),
                                        required_number(j, where, "rate"), t_max);
    }
    if (kind == "tabulated") {
        allow_keys(j, where, {"kind", "times", "values"});
        try {
            TimeProfile p = TimeProfile::tabulated(numbers(j, where, "times"),
                                                   numbers(j, where, "values"));
            if (p.t_max() < t_max)
                fail(where + ": tabulated nodes must cover [0, t_end] (last node < t_end)");
            return p;
        } catch (const std::invalid_argument& e) {
            fail(where + ": " + e.what());
        }
    }
    fail(where + ": unknown profile kind '" + kind + "'");
}

} // namespace

std::vector<double> TimeGrid::points() const { return num::linspace(t_start, t_end, samples); }

Config Config::defaults() {
    Config c;
    c.scenario.a = TimeProfile::sinusoid(1.0, 0.2, 2.0, 0.0, c.grid.t_end);
    c.scenario.lambda = TimeProfile::sinusoid(0.5, 0.3, 1.0, 0.0, c.grid.t_end);
    c.scenario.q1 = 0.0;
    c.scenario.ep = EPConstants(1.0, 0.4);
    c.scenario.kappa_plus = 0.5;
    c.scenario.kappa_minus = 0.5;
    return c;
}

RunProfile parse_profile(const std::string& name) {
    if (name == "fast") return RunProfile::fast;
    if (name == "slow") return RunProfile::slow;
    throw ConfigError("profile must be 'fast' or 'slow', got '" + name + "'");
}

void apply_profile(Config& c, RunProfile p) {
    if (p == RunProfile::slow && c.oracle.cutoff < 24) c.oracle.cutoff = 24;
}

Config parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    allow_keys(root, "config",
               {"scenario", "grid", "oracle", "invariant", "modes", "static", "tolerances", "seed",
                "output"});

    Config c;
    if (root.contains("grid")) {
        const json& g = root.at("grid");
        allow_keys(g, "grid", {"t_start", "t_end", "samples"});
        c.grid.t_start = number(g, "grid", "t_start", c.grid.t_start);
        c.grid.t_end = number(g, "grid", "t_end", c.grid.t_end);
        c.grid.samples = static_cast<int>(integer(g, "grid", "samples", c.grid.samples));
    }
    if (!(c.grid.t_end > c.grid.t_start)) fail("grid: t_end > t_start violated");
    if (c.grid.t_start < 0.0) fail("grid: t_start >= 0 violated (profiles start at t = 0)");
    if (c.grid.samples < 2) fail("grid: samples >= 2 violated");

    if (!root.contains("scenario")) fail("config: missing section 'scenario'");
    const json& s = root.at("scenario");
    allow_keys(s, "scenario",
               {"a", "lambda", "q1", "q2", "q3", "kappa_plus", "kappa_minus", "n", "m"});
    if (!s.contains("a") || !s.contains("lambda"))
        fail("scenario: profiles 'a' and 'lambda' are required");
    c.scenario.a = parse_profile_record(s.at("a"), "scenario.a", c.grid.t_end);
    c.scenario.lambda = parse_profile_record(s.at("lambda"), "scenario.lambda", c.grid.t_end);
    c.scenario.q1 = number(s, "scenario", "q1", 0.0);
    const double q2 = required_number(s, "scenario", "q2");
    const double q3 = required_number(s, "scenario", "q3");
    if (!(std::abs(q3) < 1.0)) {
        std::ostringstream os;
        os << "scenario.q3 = " << q3 << ": |q3| < 1 violated";
        fail(os.str());
    }
    c.scenario.ep = EPConstants(q2, q3);
    c.scenario.kappa_plus = number(s, "scenario", "kappa_plus", 0.0);
    c.scenario.kappa_minus = number(s, "scenario", "kappa_minus", 0.0);
    c.scenario.n = static_cast<int>(integer(s, "scenario", "n", 0));
    c.scenario.m = static_cast<int>(integer(s, "scenario", "m", 0));

    if (root.contains("oracle")) {
        const json& o = root.at("oracle");
        allow_keys(o, "oracle", {"cutoff", "buffer"});
        c.oracle.cutoff = static_cast<int>(integer(o, "oracle", "cutoff", c.oracle.cutoff));
        c.oracle.buffer = static_cast<int>(integer(o, "oracle", "buffer", c.oracle.buffer));
    }
    if (root.contains("invariant")) {
        const json& v = root.at("invariant");
        allow_keys(v, "invariant", {"c1", "c2_re", "c3_re", "branch"});
        c.invariant.c1 = number(v, "invariant", "c1", c.invariant.c1);
        c.invariant.c2r = number(v, "invariant", "c2_re", c.invariant.c2r);
        c.invariant.c3r = number(v, "invariant", "c3_re", c.invariant.c3r);
        c.invariant.branch = static_cast<int>(integer(v, "invariant", "branch", c.invariant.branch));
    }
    if (root.contains("modes")) {
        const json& m = root.at("modes");
        allow_keys(m, "modes", {"x_min", "x_max", "points", "times"});
        c.modes.x_min = number(m, "modes", "x_min", c.modes.x_min);
        c.modes.x_max = number(m, "modes", "x_max", c.modes.x_max);
        c.modes.points = static_cast<int>(integer(m, "modes", "points", c.modes.points));
        if (m.contains("times")) c.modes.times = numbers(m, "modes", "times");
    }
    if (root.contains("static")) {
        const json& v = root.at("static");
        StaticSettings& d = c.statics;
        allow_keys(v, "static", {"m", "omega_x", "omega_y", "kappa", "a", "b", "lambda", "levels"});
        d.m = number(v, "static", "m", d.m);
        d.omega_x = number(v, "static", "omega_x", d.omega_x);
        d.omega_y = number(v, "static", "omega_y", d.omega_y);
        d.kappa = number(v, "static", "kappa", d.kappa);
        d.a = number(v, "static", "a", d.a);
        d.b = number(v, "static", "b", d.b);
        d.lambda = number(v, "static", "lambda", d.lambda);
        d.levels = static_cast<int>(integer(v, "static", "levels", d.levels));
    }
    if (root.contains("tolerances")) {
        const json& t = root.at("tolerances");
        Tolerances& d = c.tol;
        const std::pair<const char*, double*> fields[] = {
            {"closure", &d.closure},           {"dyson_2x2", &d.dyson_2x2},
            {"dyson_fock", &d.dyson_fock},     {"route", &d.route},
            {"ermakov", &d.ermakov},           {"control_orders", &d.control_orders},
            {"conservation", &d.conservation}, {"fock_drift", &d.fock_drift},
            {"similarity", &d.similarity},     {"reality", &d.reality},
            {"spectrum", &d.spectrum},         {"orthonormality", &d.orthonormality},
            {"k1_constancy", &d.k1_constancy}, {"tdse", &d.tdse},
            {"energy_imag", &d.energy_imag},   {"energy_match", &d.energy_match},
            {"frame", &d.frame},               {"exceptional", &d.exceptional}};
        std::set<std::string> keys;
        for (const auto& f : fields) keys.insert(f.first);
        allow_keys(t, "tolerances", keys);
        for (const auto& f : fields) {
            *f.second = number(t, "tolerances", f.first, *f.second);
            if (!(*f.second > 0.0)) fail(std::string("tolerances.") + f.first + " > 0 violated");
        }
    }
    if (root.contains("seed")) {
        if (!root.at("seed").is_number_unsigned()) fail("seed: expected a non-negative integer");
        c.seed = root.at("seed").get<std::uint64_t>();
    }
    if (root.contains("output")) {
        const json& o = root.at("output");
        allow_keys(o, "output", {"dir"});
        if (o.contains("dir")) {
            if (!o.at("dir").is_string()) fail("output.dir: expected a string");
            c.out_dir = o.at("dir").get<std::string>();
        }
    }
    validate_config(c);
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

void validate_config(const Config& c) {
    if (!(std::abs(c.scenario.ep.q3()) < 1.0)) fail("scenario: |q3| < 1 violated");
    if (!(c.grid.t_end > c.grid.t_start)) fail("grid: t_end > t_start violated");
    if (c.grid.samples < 2) fail("grid: samples >= 2 violated");
    if (c.oracle.cutoff < fock::min_cutoff || c.oracle.cutoff > fock::max_cutoff)
        fail("oracle: " + std::to_string(fock::min_cutoff) + " <= cutoff <= " +
             std::to_string(fock::max_cutoff) + " violated");
    if (c.oracle.buffer < 0 || c.oracle.buffer >= c.oracle.cutoff)
        fail("oracle: 0 <= buffer < cutoff violated");
    if (c.scenario.n < 0 || c.scenario.m < 0 || c.scenario.n > hermite_max_degree ||
        c.scenario.m > hermite_max_degree)
        fail("scenario: 0 <= n, m <= " + std::to_string(hermite_max_degree) + " violated");
    if (c.invariant.branch != 1 && c.invariant.branch != -1)
        fail("invariant: branch in {+1, -1} violated");
    if (!(c.invariant.c3r > 0.0)) fail("invariant: c3_re > 0 violated");
    if (!(c.modes.x_max > c.modes.x_min)) fail("modes: x_max > x_min violated");
    if (c.modes.points < 2) fail("modes: points >= 2 violated");
    if (!(c.statics.m > 0.0)) fail("static: m > 0 violated");
    if (c.statics.levels < 0 || c.statics.levels > static_max_degree)
        fail("static: 0 <= levels <= " + std::to_string(static_max_degree) + " violated");
    for (double t : c.modes.times) {
        if (!(t >= 0.0 && t <= c.grid.t_end)) fail("modes: 0 <= times <= t_end violated");
    }
}

} // namespace tdpt
