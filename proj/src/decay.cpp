#include "polyheat/decay.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "polyheat/errors.hpp"
#include "polyheat/solver.hpp"

namespace polyheat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double sigma_theory(double m, int dimension, double p, int d) {
    if (!(m > 1.0)) throw std::domain_error("sigma_theory: requires m > 1");
    if (!(p >= 1.0)) throw std::domain_error("sigma_theory: requires p >= 1");
    double ip = std::isinf(p) ? 0.0 : 1.0 / p;
    return 1.0 / (m - 1.0) - dimension * ip / (2.0 * d);
}

bool PRange::contains(double p) const {
    if (std::isinf(p)) return upper_inclusive && std::isinf(upper);
    if (p < lower || (p == lower && !lower_inclusive)) return false;
    if (p > upper || (p == upper && !upper_inclusive)) return false;
    return true;
}

PRange admissible_p_range(double m, int dimension, int d) {
    const double N = dimension;
    const double regime = N * (m - 1.0) / (2.0 * d);
    if (regime < 2.0) {
        std::ostringstream os;
        os << "admissible_p_range: regime condition N(m-1)/(2d) >= 2 violated (got " << regime
           << ")";
        throw regime_error(os.str());
    }
    if (m < 2.0) throw regime_error("admissible_p_range: requires m >= 2");
    PRange r;
    r.upper = kInf;
    if (N >= 4.0 * d) {
        r.lower = N * (m - 1.0) / (2.0 * d);
        r.lower_inclusive = false;
        r.upper_inclusive = false; // p < infinity on this branch
        r.branch = "N >= 4d";
    } else {
        r.lower = std::max(m, 2.0 * N * (m - 1.0) / (4.0 * d - N));
        r.lower_inclusive = true;
        r.upper_inclusive = true;
        r.branch = "N < 4d";
    }
    return r;
}

DecayFit fit_decay_samples(const std::vector<double>& ts, const std::vector<double>& norms,
                           double t_lo, double t_hi) {
    DecayFit fit;
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    int n = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < t_lo || ts[i] > t_hi || ts[i] <= 0.0) continue;
        if (!(norms[i] > 0.0))
            throw std::domain_error("fit_decay: zero norm inside the fit window");
        double x = std::log(ts[i]), y = std::log(norms[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        ++n;
    }
    if (n < 8) throw std::domain_error("fit_decay: fewer than 8 samples inside the window");
    double denom = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / denom;
    double ss_tot = syy - sy * sy / n;
    double ss_res = 0.0;
    double intercept = (sy - slope * sx) / n;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < t_lo || ts[i] > t_hi || ts[i] <= 0.0) continue;
        double r = std::log(norms[i]) - (slope * std::log(ts[i]) + intercept);
        ss_res += r * r;
    }
    fit.sigma_hat = -slope;
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    fit.n_samples = n;
    return fit;
}

DecayFit fit_decay(const Trajectory& traj, double p, double t_lo, double t_hi,
                   bool mass_subtract) {
    std::vector<double> ns;
    ns.reserve(traj.times.size());
    if (mass_subtract) {
        if (!traj.store_fields)
            throw std::runtime_error("fit_decay: mass subtraction needs stored fields");
        for (std::size_t j = 0; j < traj.times.size(); ++j) {
            const GridField& u = traj.fields[j];
            GridField v(u.spec);
            double mean = mean_value(u);
            for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] - mean;
            ns.push_back(lp_norm(v, p));
        }
    } else {
        for (std::size_t j = 0; j < traj.times.size(); ++j) ns.push_back(traj.norm_at(j, p));
    }
    DecayFit fit = fit_decay_samples(traj.times, ns, t_lo, t_hi);
    fit.p = p;
    fit.mass_subtracted = mass_subtract;
    return fit;
}

double log_root_a() {
    // a = 2 log(a+1) has a single root in (2, 3)
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 100 && hi - lo > 1e-15; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid - 2.0 * std::log1p(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

LogCertificate log_inequality_certificate(int dimension, int d, const std::vector<double>& taus) {
    LogCertificate cert;
    cert.a_root = log_root_a();
    const double N = dimension;
    cert.threshold = std::pow(cert.a_root, -2.0 * d / N);
    cert.holds_all = true;
    cert.worst_margin = kInf;
    for (double tau : taus) {
        if (tau < cert.threshold * (1.0 - 1e-12)) {
            std::ostringstream os;
            os << "log_inequality_certificate: tau = " << tau << " below threshold a^(-2d/N) = "
               << cert.threshold;
            throw std::domain_error(os.str());
        }
        double x = std::pow(tau, -N / (2.0 * d));
        double lhs = 1.0 / std::sqrt(std::log1p(x));
        double rhs = std::sqrt(2.0) * std::pow(tau, N / (4.0 * d));
        cert.worst_margin = std::min(cert.worst_margin, rhs - lhs);
        if (lhs > rhs * (1.0 + 1e-9)) {
            cert.holds_all = false;
            ++cert.violations;
        }
    }
    return cert;
}

} // namespace polyheat
