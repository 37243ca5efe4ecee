// cli.cpp — Config-driven batch runs with deterministic CSV output

#include "tdpt/cli.hpp"

#include "tdpt/dyson.hpp"
#include "tdpt/energy.hpp"
#include "tdpt/errors.hpp"
#include "tdpt/fock.hpp"
#include "tdpt/invariants.hpp"
#include "tdpt/modes.hpp"
#include "tdpt/numerics.hpp"
#include "tdpt/static_models.hpp"
#include "tdpt/validation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <variant>

namespace tdpt::cli {

namespace {

namespace fs = std::filesystem;

// CSV writer: header first, every number with 17 significant digits.
class Csv {
public:
    Csv(const std::string& path, const std::vector<std::string>& header) : out_(path) {
        if (!out_) throw Error("cannot write '" + path + "'");
        for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
        out_ << '\n';
    }

    void row(const std::vector<double>& v) {
        char buf[40];
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", v[i]);
            out_ << (i ? "," : "") << buf;
        }
        out_ << '\n';
    }

    void row(const std::string& label, const std::vector<double>& v) {
        out_ << label;
        char buf[40];
        for (double x : v) {
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out_ << ',' << buf;
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

std::string prepare(const std::string& dir, const std::string& file) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
    return (fs::path(dir) / file).string();
}

} // namespace

std::string run_evolve(const Config& c, const std::string& out_dir) {
    const Scenario& s = c.scenario;
    const InvariantCoeffs ic = InvariantCoeffs::for_dyson_constants(
        s.ep.q2(), s.ep.q3(), c.invariant.c1, c.invariant.c2r, c.invariant.c3r, c.invariant.branch);
    const std::string path = prepare(out_dir, "evolve.csv");
    Csv csv(path, {"t", "gamma3", "gamma4", "beta1", "beta2", "beta3", "beta4", "f_plus",
                   "f_minus", "energy", "dyson_residual"});
    for (double t : c.grid.points()) {
        const DysonParams p = s.params(t);
        const BetaVector b = beta_from_evolution(ic, s.lambda, t);
        const FPair f = f_pm(s, t);
        csv.row({t, p.g3, p.g4, b[0], b[1], b[2], b[3], f.plus, f.minus, energy_expectation(s, t),
                 dyson_residual(s.a, s.lambda, p, s.rates(t), t)});
    }
    return path;
}

std::string run_spectrum(const Config& c, const std::string& out_dir, std::ostream& report) {
    const StaticSettings& st = c.statics;
    const std::string path = prepare(out_dir, "spectrum.csv");
    Csv csv(path, {"model", "n", "m", "re_energy", "im_energy"});

    const XYModel xy{st.m, st.omega_x, st.omega_y, st.kappa};
    const double bound = exceptional_bound(xy);
    report << "xy model: m = " << st.m << ", Wx = " << st.omega_x << ", Wy = " << st.omega_y
           << ", kappa = " << st.kappa << "\n  exceptional point at |kappa| = " << bound << '\n';
    try {
        const XYDecoupling d = decouple_xy(xy);
        report << "  decoupled: theta = " << d.theta << ", wx = " << d.omega_x
               << ", wy = " << d.omega_y << '\n';
        for (const Level& l : spectrum_xy(d.omega_x, d.omega_y, st.levels, st.levels))
            csv.row("xy", {double(l.n), double(l.m), l.energy, 0.0});
    } catch (const ExceptionalPointError& e) {
        report << "  not decoupled: " << e.what() << '\n';
    }

    const KModel km{st.a, st.b, st.lambda};
    report << "K model: a = " << st.a << ", b = " << st.b << ", lambda = " << st.lambda << '\n';
    const auto dk = decouple_K(km);
    if (const auto* d = std::get_if<KDecoupling>(&dk)) {
        report << "  unbroken: theta = " << d->theta << ", h = " << d->h[0].real() << " K1 + "
               << d->h[1].real() << " K2\n";
        for (int n = 0; n <= st.levels; ++n)
            for (int m = 0; m <= st.levels; ++m) {
                const double e = d->h[0].real() * (n + 0.5) + d->h[1].real() * (m + 0.5);
                csv.row("K", {double(n), double(m), e, 0.0});
            }
    } else {
        const auto& b = std::get<BrokenRegime>(dk);
        report << "  broken regime: |lambda| = " << std::abs(b.lambda) << " >= |a - b| = " << b.gap
               << '\n';
        if (st.a == st.b) {
            for (int n = 0; n <= st.levels; ++n)
                for (int m = 0; m <= st.levels; ++m) {
                    const cplx e = broken_spectrum(st.a, st.lambda, n, m);
                    csv.row("K", {double(n), double(m), e.real(), e.imag()});
                }
        }
    }
    return path;
}

std::string run_modes(const Config& c, const std::string& out_dir) {
    const std::string path = prepare(out_dir, "modes.csv");
    Csv csv(path, {"x", "y", "t", "re_psi", "im_psi"});
    const std::vector<double> xs = num::linspace(c.modes.x_min, c.modes.x_max, c.modes.points);
    for (double t : c.modes.times)
        for (double x : xs)
            for (double y : xs) {
                const cplx v = product_state(c.scenario, x, y, t);
                csv.row({x, y, t, v.real(), v.imag()});
            }
    return path;
}

std::string run_oracle(const Config& c, const std::string& out_dir) {
    const fock::FockSpace sp(c.oracle.cutoff, c.oracle.buffer);
    const std::string path = prepare(out_dir, "oracle.csv");
    Csv csv(path, {"t", "dyson_residual", "quasi_hermiticity", "min_metric_eigenvalue"});
    for (double t : c.grid.points()) {
        csv.row({t, fock::verify_dyson(sp, c.scenario, t),
                 fock::verify_quasi_hermiticity(sp, c.scenario, t),
                 fock::to_double(fock::min_metric_eigenvalue(sp, c.scenario.params(t)))});
    }
    return path;
}

bool run_validate(const Config& c, const std::string& out_dir, std::ostream& os) {
    const auto results = run_acceptance(c, &os);
    print_summary(results, os);
    std::ofstream(prepare(out_dir, "validation.json")) << report_json(results);
    bool all = true;
    for (const auto& r : results) all = all && r.pass();
    return all;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Time-dependent Dyson maps for a non-Hermitian coupled oscillator"};
    app.require_subcommand(1);
    std::string config_path, out_dir, profile = "fast";
    app.add_option("--config", config_path, "JSON config (default: built-in scenario)");
    app.add_option("--out", out_dir, "output directory (overrides output.dir)");
    app.add_option("--profile", profile, "fast or slow")->check(CLI::IsMember({"fast", "slow"}));
    for (const char* name : {"evolve", "spectrum", "modes", "oracle", "validate"})
        app.add_subcommand(name)->fallthrough();
    app.get_subcommand("evolve")->description("time series of the Dyson map and energies");
    app.get_subcommand("spectrum")->description("static model spectra and exceptional point");
    app.get_subcommand("modes")->description("product-state wavefunction on a grid");
    app.get_subcommand("oracle")->description("Fock-space residuals over the time grid");
    app.get_subcommand("validate")->description("acceptance property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : config_error;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        Config c = config_path.empty() ? Config::defaults() : load_config(config_path);
        apply_profile(c, parse_profile(profile));
        const std::string dir = out_dir.empty() ? c.out_dir : out_dir;
        if (cmd == "evolve") out << run_evolve(c, dir) << '\n';
        if (cmd == "spectrum") out << run_spectrum(c, dir, out) << '\n';
        if (cmd == "modes") out << run_modes(c, dir) << '\n';
        if (cmd == "oracle") out << run_oracle(c, dir) << '\n';
        if (cmd == "validate") return run_validate(c, dir, out) ? ok : validation_failed;
        return ok;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return config_error;
    } catch (const std::exception& e) {
        err << "numerical failure in '" << cmd << "': " << e.what() << '\n';
        return numerical_failure;
    }
}

} // namespace tdpt::cli
