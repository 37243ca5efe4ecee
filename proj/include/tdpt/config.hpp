// config.hpp — Run configuration for the command-line driver, read from JSON

#pragma once

#include "tdpt/energy.hpp"
#include "tdpt/profiles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tdpt {

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 10.0;
    int samples = 200;

    std::vector<double> points() const;
};

struct OracleSettings {
    int cutoff = 12;
    int buffer = 2;
};

// Integration constants of I_H used by `evolve` for the beta columns; the
// remaining constants follow from q2, q3.
struct InvariantSettings {
    double c1 = 1.0;
    double c2r = 0.3;
    double c3r = 0.5;
    int branch = 1;
};

struct ModeGrid {
    double x_min = -6.0;
    double x_max = 6.0;
    int points = 49;
    std::vector<double> times{0.0, 2.5, 5.0};
};

// Static models tabulated by `spectrum`.
struct StaticSettings {
    double m = 1.0;
    double omega_x = 1.0;
    double omega_y = 1.7320508075688772;
    double kappa = 0.5;
    double a = 1.0;
    double b = 1.0;
    double lambda = 0.4;
    int levels = 4;
};

// Pass thresholds for `validate`. Defaults are the acceptance tolerances.
struct Tolerances {
    double closure = 1e-14;
    double dyson_2x2 = 1e-8;
    double dyson_fock = 1e-6;
    double route = 1e-6;
    double ermakov = 1e-7;
    double control_orders = 3.0;
    double conservation = 1e-7;
    double fock_drift = 1e-8;
    double similarity = 1e-9;
    double reality = 1e-12;
    double spectrum = 1e-10;
    double orthonormality = 1e-8;
    double k1_constancy = 1e-7;
    double tdse = 1e-3;
    double energy_imag = 1e-10;
    double energy_match = 1e-5;
    double frame = 1e-8;
    double exceptional = 1e-12;
};

struct Config {
    Scenario scenario;
    TimeGrid grid;
    OracleSettings oracle;
    InvariantSettings invariant;
    ModeGrid modes;
    StaticSettings statics;
    Tolerances tol;
    std::uint64_t seed = 20240917;
    std::string out_dir = ".";

    // The bundled default (identical to configs/default.json).
    static Config defaults();
};

enum class RunProfile { fast, slow };

RunProfile parse_profile(const std::string& name);
// `slow` raises the Fock cutoff to 24 unless the file set a larger one.
void apply_profile(Config& c, RunProfile p);

// Parse and validate; throws ConfigError naming the violated invariant.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);
void validate_config(const Config& c);

} // namespace tdpt
