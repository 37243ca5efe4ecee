// profiles.cpp — Closed-form antiderivatives and tabulated profiles with cached panel integrals

#include "tdpt/profiles.hpp"

#include "tdpt/errors.hpp"
#include "tdpt/numerics.hpp"

#include <boost/math/interpolators/makima.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tdpt {

std::string to_string(ProfileKind k) {
    switch (k) {
    case ProfileKind::constant: return "constant";
    case ProfileKind::polynomial: return "polynomial";
    case ProfileKind::sinusoid: return "sinusoid";
    case ProfileKind::exponential: return "exponential";
    case ProfileKind::tabulated: return "tabulated";
    }
    return "unknown";
}

struct TimeProfile::Table {
    std::vector<double> times;
    std::vector<double> values;
    boost::math::interpolators::makima<std::vector<double>> spline;
    // running[i] = integral from times[0] to times[i]
    std::vector<double> running;

    Table(std::vector<double> t, std::vector<double> v)
        : times(t), values(v), spline(std::move(t), std::move(v)) {
        running.assign(times.size(), 0.0);
        for (std::size_t i = 1; i < times.size(); ++i) {
            running[i] = running[i - 1] + panel(times[i - 1], times[i]);
        }
    }

    double panel(double a, double b) const {
        return num::integrate(std::function<double(double)>([this](double s) { return spline(s); }),
                              a, b, 1e-14, 8);
    }
};

namespace {

double relative_slack(double t_max) {
    return std::isfinite(t_max) ? 1e-12 * std::max(1.0, t_max) : 0.0;
}

} // namespace

TimeProfile TimeProfile::constant(double value, double t_max) {
    return TimeProfile(ProfileKind::constant, {value}, t_max);
}

TimeProfile TimeProfile::polynomial(std::vector<double> coeffs, double t_max) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    return TimeProfile(ProfileKind::polynomial, std::move(coeffs), t_max);
}

TimeProfile TimeProfile::sinusoid(double offset, double amp, double omega, double phase,
                                  double t_max) {
    return TimeProfile(ProfileKind::sinusoid, {offset, amp, omega, phase}, t_max);
}

TimeProfile TimeProfile::exponential(double offset, double amp, double rate, double t_max) {
    return TimeProfile(ProfileKind::exponential, {offset, amp, rate}, t_max);
}

TimeProfile TimeProfile::tabulated(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size())
        throw std::invalid_argument("tabulated profile: times and values differ in length");
    if (times.size() < 4)
        throw std::invalid_argument("tabulated profile: need at least four nodes");
    if (times.front() != 0.0)
        throw std::invalid_argument("tabulated profile: first node must be t = 0");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("tabulated profile: nodes must be strictly increasing");
    }
    const double t_max = times.back();
    TimeProfile p(ProfileKind::tabulated, {}, t_max);
    p.table_ = std::make_shared<const Table>(std::move(times), std::move(values));
    return p;
}

TimeProfile TimeProfile::with_domain(double t_max) const {
    if (kind_ == ProfileKind::tabulated) {
        if (t_max > t_max_ + relative_slack(t_max_))
            throw DomainError("tabulated profile cannot be extended beyond its last node");
        TimeProfile p = *this;
        return p;
    }
    TimeProfile p = *this;
    p.t_max_ = t_max;
    return p;
}

void TimeProfile::check(double t) const {
    const double slack = relative_slack(t_max_);
    if (!(t >= -slack && t <= t_max_ + slack)) {
        std::ostringstream os;
        os << to_string(kind_) << " profile evaluated at t = " << t << " outside [0, " << t_max_
           << "]";
        throw DomainError(os.str());
    }
}

double TimeProfile::evaluate(double t) const {
    check(t);
    switch (kind_) {
    case ProfileKind::constant: return par_[0];
    case ProfileKind::polynomial: {
        double v = 0.0;
        for (auto it = par_.rbegin(); it != par_.rend(); ++it) v = v * t + *it;
        return v;
    }
    case ProfileKind::sinusoid: return par_[0] + par_[1] * std::sin(par_[2] * t + par_[3]);
    case ProfileKind::exponential: return par_[0] + par_[1] * std::exp(par_[2] * t);
    case ProfileKind::tabulated:
        return table_->spline(std::clamp(t, table_->times.front(), table_->times.back()));
    }
    return 0.0;
}

double TimeProfile::cumulative(double t) const {
    check(t);
    switch (kind_) {
    case ProfileKind::constant: return par_[0] * t;
    case ProfileKind::polynomial: {
        double v = 0.0;
        for (std::size_t k = par_.size(); k-- > 0;) v = v * t + par_[k] / static_cast<double>(k + 1);
        return v * t;
    }
    case ProfileKind::sinusoid: {
        const double a = par_[0], b = par_[1], w = par_[2], ph = par_[3];
        if (w == 0.0) return (a + b * std::sin(ph)) * t;
        return a * t - (b / w) * (std::cos(w * t + ph) - std::cos(ph));
    }
    case ProfileKind::exponential: {
        const double a = par_[0], b = par_[1], r = par_[2];
        if (r == 0.0) return (a + b) * t;
        return a * t + b * std::expm1(r * t) / r;
    }
    case ProfileKind::tabulated: {
        const auto& tb = *table_;
        const double tc = std::clamp(t, tb.times.front(), tb.times.back());
        auto it = std::upper_bound(tb.times.begin(), tb.times.end(), tc);
        std::size_t i = static_cast<std::size_t>(std::distance(tb.times.begin(), it));
        i = (i == 0) ? 0 : i - 1;
        if (i >= tb.times.size() - 1) return tb.running.back();
        return tb.running[i] + tb.panel(tb.times[i], tc);
    }
    }
    return 0.0;
}

double TimeProfile::derivative(double t) const {
    check(t);
    switch (kind_) {
    case ProfileKind::constant: return 0.0;
    case ProfileKind::polynomial: {
        double v = 0.0;
        for (std::size_t k = par_.size(); k-- > 1;) v = v * t + static_cast<double>(k) * par_[k];
        return v;
    }
    case ProfileKind::sinusoid: return par_[1] * par_[2] * std::cos(par_[2] * t + par_[3]);
    case ProfileKind::exponential: return par_[1] * par_[2] * std::exp(par_[2] * t);
    case ProfileKind::tabulated:
        return table_->spline.prime(std::clamp(t, table_->times.front(), table_->times.back()));
    }
    return 0.0;
}

Driver Driver::from_profile(const TimeProfile& p) {
    return Driver{[p](double t) { return p.evaluate(t); },
                  [p](double t) { return p.cumulative(t); }, p.t_max()};
}

} // namespace tdpt
