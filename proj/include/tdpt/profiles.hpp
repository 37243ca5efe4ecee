// profiles.hpp — Real time profiles a(t), lambda(t) with cumulative integrals

#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace tdpt {

enum class ProfileKind { constant, polynomial, sinusoid, exponential, tabulated };

std::string to_string(ProfileKind k);

// A real scalar function of time on [0, t_max]. Immutable once built.
class TimeProfile {
public:
    static constexpr double unbounded = std::numeric_limits<double>::infinity();

    static TimeProfile constant(double value, double t_max = unbounded);
    // sum_k coeffs[k] t^k
    static TimeProfile polynomial(std::vector<double> coeffs, double t_max = unbounded);
    // offset + amp sin(omega t + phase)
    static TimeProfile sinusoid(double offset, double amp, double omega, double phase = 0.0,
                                double t_max = unbounded);
    // offset + amp exp(rate t)
    static TimeProfile exponential(double offset, double amp, double rate,
                                   double t_max = unbounded);
    // Piecewise cubic (modified Akima) through (times[i], values[i]); times[0] must be 0.
    static TimeProfile tabulated(std::vector<double> times, std::vector<double> values);

    ProfileKind kind() const noexcept { return kind_; }
    double t_max() const noexcept { return t_max_; }
    const std::vector<double>& parameters() const noexcept { return par_; }

    double evaluate(double t) const;
    double operator()(double t) const { return evaluate(t); }
    // Integral from 0 to t.
    double cumulative(double t) const;
    double derivative(double t) const;

    // Same profile restricted to [0, t_max].
    TimeProfile with_domain(double t_max) const;

private:
    struct Table;

    TimeProfile(ProfileKind k, std::vector<double> par, double t_max)
        : kind_(k), par_(std::move(par)), t_max_(t_max) {}
    void check(double t) const;

    ProfileKind kind_;
    std::vector<double> par_;
    double t_max_;
    std::shared_ptr<const Table> table_;
};

// A scalar driver given by its value and its integral from 0. Used where a
// coefficient is not itself a TimeProfile (the decoupled frequencies f+, f-).
struct Driver {
    std::function<double(double)> value;
    std::function<double(double)> cumulative;
    double t_max = TimeProfile::unbounded;

    static Driver from_profile(const TimeProfile& p);
};

} // namespace tdpt
