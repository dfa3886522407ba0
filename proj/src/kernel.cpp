#include "polyheat/kernel.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "polyheat/errors.hpp"
#include "polyheat/quad.hpp"
#include "polyheat/specfun.hpp"

namespace polyheat {

namespace {

double sphere_area(int n) { // |S^{N-1}|
    return 2.0 * std::pow(M_PI, 0.5 * n) / gamma_fn(0.5 * n);
}

// (2 pi)^{-N} int e^{-t|xi|^{2d}} e^{i x xi} d xi, radial in |x| = r.
// Elementary forms for N = 1, 3; J_0 for N = 2.
double invert_symbol(double r, double t, int dim, int d, double rel_tol) {
    const double s_up = std::pow(70.0 / t, 1.0 / (2.0 * d));
    auto damp = [=](double s) { return std::exp(-t * std::pow(s, 2 * d)); };

    std::function<double(double)> integrand;
    double prefactor = 1.0;
    switch (dim) {
        case 1:
            integrand = [=](double s) { return std::cos(r * s) * damp(s); };
            prefactor = 1.0 / M_PI;
            break;
        case 2:
            integrand = [=](double s) { return s * std::cyl_bessel_j(0.0, r * s) * damp(s); };
            prefactor = 1.0 / (2.0 * M_PI);
            break;
        case 3:
            integrand = [=](double s) { return s * std::sin(r * s) * damp(s); };
            prefactor = 1.0 / (2.0 * M_PI * M_PI * r);
            break;
        default:
            throw std::domain_error("eval_profile: dimension must be 1, 2 or 3");
    }

    // panel between oscillation nodes, adaptive within each panel
    double total = 0.0, err = 0.0;
    if (r * s_up <= 2.0 * M_PI) {
        QuadResult q = integrate(integrand, 0.0, s_up, rel_tol, 1e-16);
        total = q.value;
        err = q.error;
    } else {
        const double step = M_PI / r;
        double a = 0.0;
        while (a < s_up) {
            double b = std::min(a + step, s_up);
            QuadResult q = integrate(integrand, a, b, rel_tol, 1e-16);
            total += q.value;
            err += q.error;
            a = b;
        }
    }
    if (err > 1e-6 * std::abs(total) + 1e-10)
        throw quadrature_error("kernel quadrature did not converge", err);
    return prefactor * total;
}

} // namespace

double eval_profile(double r, int dimension, int d, double rel_tol) {
    if (r < 0.0) throw std::domain_error("eval_profile: requires r >= 0");
    if (d < 1) throw std::domain_error("eval_profile: requires d >= 1");
    const double N = dimension;
    if (r == 0.0)
        return std::pow(2.0 * M_PI, -N) * sphere_area(dimension) *
               gamma_fn(N / (2.0 * d)) / (2.0 * d);
    return invert_symbol(r, 1.0, dimension, d, rel_tol);
}

bool KernelProfile::has_sign_change() const {
    int prev = 0;
    for (double v : values) {
        if (std::abs(v) < 1e-14) continue;
        int s = v > 0 ? 1 : -1;
        if (prev != 0 && s != prev) return true;
        prev = s;
    }
    return false;
}

KernelProfile tabulate_profile(int dimension, int d, double r_min, int n_radii) {
    KernelProfile prof;
    prof.d = d;
    prof.dimension = dimension;
    const double e0 = eval_profile(0.0, dimension, d);

    // extend until |E| < 1e-10 E(0)
    double r_max = 4.0;
    while (std::abs(eval_profile(r_max, dimension, d, 1e-9)) >= 1e-10 * e0) {
        r_max *= 1.3;
        if (r_max > 1e3) throw std::runtime_error("tabulate_profile: no decay cutoff found");
    }

    prof.radii.reserve(n_radii + 1);
    prof.values.reserve(n_radii + 1);
    prof.radii.push_back(0.0);
    prof.values.push_back(e0);
    prof.quad_error.push_back(0.0);
    const double ratio = std::pow(r_max / r_min, 1.0 / (n_radii - 1));
    for (int i = 0; i < n_radii; ++i) {
        double r = r_min * std::pow(ratio, i);
        prof.radii.push_back(r);
        prof.values.push_back(eval_profile(r, dimension, d));
        prof.quad_error.push_back(1e-11 * std::abs(prof.values.back()) + 1e-16);
    }
    if (!(prof.values.front() > 0.0) || !std::isfinite(prof.values.front()))
        throw std::runtime_error("tabulate_profile: profile value at r = 0 not positive");
    if (std::abs(prof.values.back()) >= 1e-6 * std::abs(prof.values.front()))
        throw std::runtime_error("tabulate_profile: insufficient decay at the largest radius");
    return prof;
}

ScalingCheck scaling_check(double t, double r, int dimension, int d) {
    if (!(t > 0.0)) throw std::domain_error("scaling_check: requires t > 0");
    ScalingCheck c;
    const double N = dimension;
    if (r == 0.0)
        c.lhs = std::pow(2.0 * M_PI, -N) * sphere_area(dimension) *
                gamma_fn(N / (2.0 * d)) / (2.0 * d) * std::pow(t, -N / (2.0 * d));
    else
        c.lhs = invert_symbol(r, t, dimension, d, 1e-11);
    const double scale = std::pow(t, -1.0 / (2.0 * d));
    c.rhs = std::pow(t, -N / (2.0 * d)) * eval_profile(scale * r, dimension, d);
    double denom = std::max(std::abs(c.lhs), std::abs(c.rhs));
    c.rel_err = denom > 0 ? std::abs(c.lhs - c.rhs) / denom : 0.0;
    return c;
}

double majorant_exponent(int d) { return 2.0 * d / (2.0 * d - 1.0); }

double majorant_omega(double mu, double beta, int dimension) {
    const double N = dimension;
    double inv = sphere_area(dimension) * gamma_fn(N / beta) / (beta * std::pow(mu, N / beta));
    return 1.0 / inv;
}

MajorantFit fit_majorant(const KernelProfile& profile, double beta, double k_cap) {
    if (beta <= 0.0) beta = majorant_exponent(profile.d);
    const double e0 = std::abs(profile.values.front());
    if (std::abs(profile.values.back()) >= 1e-10 * e0)
        throw std::domain_error("fit_majorant: profile not tabulated out to 1e-10 decay");

    MajorantFit best;
    best.K = std::numeric_limits<double>::infinity();
    const int n_mu = 160;
    const double r_max = profile.radii.back();
    for (int i = 0; i < n_mu; ++i) {
        double mu = 1e-3 * std::pow(4.0 / 1e-3, static_cast<double>(i) / (n_mu - 1));
        double lomega = std::log(majorant_omega(mu, beta, profile.dimension));
        // K(mu) = max |E| e^{mu r^beta} / omega, in logs
        double lk = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < profile.radii.size(); ++j) {
            double av = std::abs(profile.values[j]);
            if (av == 0.0) continue;
            lk = std::max(lk, std::log(av) + mu * std::pow(profile.radii[j], beta) - lomega);
        }
        double K = std::exp(lk) * (1.0 + 1e-12); // strict bound at the argmax
        // the fit must certify decay, not just boundedness: the majorant at
        // the table edge has to match the profile's own 1e-6 decay invariant
        double edge = lk + lomega - mu * std::pow(r_max, beta);
        if (edge > std::log(1e-6 * e0)) continue;
        if (K < best.K) {
            best.K = K;
            best.mu = mu;
            best.omega = std::exp(lomega);
        }
    }
    if (!(best.K <= k_cap))
        throw infeasible_error("fit_majorant: no (K, mu) in the search box satisfies the bound");
    best.K = std::max(best.K, 1.0 + 1e-9);
    best.beta = beta;
    best.max_ratio = 0.0;
    for (std::size_t j = 0; j < profile.radii.size(); ++j) {
        double bound = best.K * best.omega * std::exp(-best.mu * std::pow(profile.radii[j], beta));
        best.max_ratio = std::max(best.max_ratio, std::abs(profile.values[j]) / bound);
    }
    return best;
}

void export_profile_csv(const KernelProfile& profile, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_profile_csv: cannot open " + path);
    os << "r,E,quad_error\n";
    char buf[96];
    for (std::size_t j = 0; j < profile.radii.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.3g\n", profile.radii[j], profile.values[j],
                      profile.quad_error[j]);
        os << buf;
    }
}

void export_majorant_json(const MajorantFit& fit, const std::string& path) {
    nlohmann::json j = {{"K", fit.K},         {"mu", fit.mu},   {"omega", fit.omega},
                        {"beta", fit.beta},   {"max_ratio", fit.max_ratio}};
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_majorant_json: cannot open " + path);
    os << j.dump(2) << "\n";
}

} // namespace polyheat
