#include "polyheat/semigroup.hpp"

#include <cmath>
#include <stdexcept>

#include "polyheat/errors.hpp"
#include "polyheat/quad.hpp"

namespace polyheat {

Semigroup::Semigroup(const GridSpec& spec, int d) : tf_(spec), d_(d) {
    if (d < 1) throw std::domain_error("Semigroup: requires d >= 1");
}

GridField Semigroup::apply(const GridField& field, double t) const {
    if (!(field.spec == tf_.spec())) throw std::invalid_argument("Semigroup: spec mismatch");
    if (t < 0.0) throw std::domain_error("Semigroup: requires t >= 0");
    if (t == 0.0) return field;
    std::vector<std::complex<double>> hat;
    tf_.forward(field, hat);
    const auto& k2 = tf_.freq_sq();
    for (std::size_t i = 0; i < hat.size(); ++i)
        hat[i] *= std::exp(-t * std::pow(k2[i], d_));
    GridField out;
    tf_.inverse(hat, out);
    return out;
}

double smoothing_ratio(const Semigroup& sg, const GridField& field, double t, double p, double q) {
    if (p > q) throw std::domain_error("smoothing_ratio: requires p <= q");
    if (!(t > 0.0)) throw std::domain_error("smoothing_ratio: requires t > 0");
    const double N = sg.spec().dimension;
    const double ip = 1.0 / p;
    const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
    double denom = std::pow(t, -N / (2.0 * sg.order()) * (ip - iq)) * lp_norm(field, p);
    if (denom == 0.0) return 0.0;
    return lp_norm(sg.apply(field, t), q) / denom;
}

SmoothingSweep run_smoothing_sweep(const Semigroup& sg, const std::vector<GridField>& fields,
                                   const std::vector<double>& ps, const std::vector<double>& ts) {
    SmoothingSweep sweep;
    for (const auto& f : fields) {
        for (double t : ts) {
            GridField sf = sg.apply(f, t);
            const double N = sg.spec().dimension;
            for (double p : ps) {
                for (double q : ps) {
                    if (p > q) continue;
                    double ip = 1.0 / p, iq = std::isinf(q) ? 0.0 : 1.0 / q;
                    double denom =
                        std::pow(t, -N / (2.0 * sg.order()) * (ip - iq)) * lp_norm(f, p);
                    if (denom == 0.0) continue;
                    double ratio = lp_norm(sf, q) / denom;
                    sweep.rows.push_back({t, p, q, ratio});
                    sweep.H = std::max(sweep.H, ratio);
                }
            }
        }
    }
    return sweep;
}

InequalityCheck orlicz_smoothing_check(const Semigroup& sg, const GridField& field, double t,
                                       double p, double H) {
    if (!(p >= 1.0 && p <= 2.0))
        throw std::domain_error("orlicz_smoothing_check: requires 1 <= p <= 2");
    if (!(t > 0.0)) throw std::domain_error("orlicz_smoothing_check: requires t > 0");
    const double N = sg.spec().dimension;
    const double twod = 2.0 * sg.order();
    InequalityCheck c;
    c.lhs = luxemburg_norm(sg.apply(field, t), YoungFunction::expl2());
    double x = std::pow(t, -N / twod);
    c.rhs = H * std::pow(t, -N / (twod * p)) / std::sqrt(std::log1p(x)) * lp_norm(field, p);
    c.holds = c.lhs <= c.rhs * (1.0 + 1e-9);
    return c;
}

InequalityCheck orlicz_smoothing_check_iii(const Semigroup& sg, const GridField& field, double t,
                                           double q, double H) {
    if (!(q >= 1.0)) throw std::domain_error("orlicz_smoothing_check_iii: requires q >= 1");
    if (!(t > 0.0)) throw std::domain_error("orlicz_smoothing_check_iii: requires t > 0");
    const double N = sg.spec().dimension;
    const double twod = 2.0 * sg.order();
    InequalityCheck c;
    c.lhs = luxemburg_norm(sg.apply(field, t), YoungFunction::expl2());
    double iq = std::isinf(q) ? 0.0 : 1.0 / q;
    c.rhs = H / std::sqrt(std::log(2.0)) *
            (std::pow(t, -N / twod * iq) * lp_norm(field, q) + lp_norm(field, 2.0));
    c.holds = c.lhs <= c.rhs * (1.0 + 1e-9);
    return c;
}

double kappa(double t, int dimension, double q, double H) {
    if (dimension < 9) throw std::domain_error("kappa: requires N >= 9");
    if (!(q > dimension / 4.0)) throw std::domain_error("kappa: requires q > N/4");
    if (!(t > 0.0)) throw std::domain_error("kappa: requires t > 0");
    const double N = dimension;
    double b1 = std::pow(t, -N / (4.0 * q)) + 1.0;
    double x = std::pow(t, -N / 4.0);
    double b2 = x / std::sqrt(std::log1p(x));
    return 2.0 * H / std::sqrt(std::log(2.0)) * std::min(b1, b2);
}

double zeta(double t, double H) {
    if (!(t > 0.0)) throw std::domain_error("zeta: requires t > 0");
    double b1 = 1.0 + std::pow(t, -0.5);
    double x = std::pow(t, -2.0);
    double b2 = x * std::pow(std::log1p(x), -0.25);
    return H / std::sqrt(std::log(2.0)) * std::min(b1, b2);
}

namespace {
// integrate f over (0, inf) in log time; the integrands decay exponentially
// in y = log t on both sides
double log_time_integral(const std::function<double(double)>& f, double rel_tol) {
    auto g = [&](double y) {
        double t = std::exp(y);
        return f(t) * t;
    };
    QuadResult lo = integrate(g, -250.0, 0.0, rel_tol, 1e-12, 4000);
    QuadResult hi = integrate(g, 0.0, 500.0, rel_tol, 1e-12, 4000);
    if (!lo.converged || !hi.converged)
        throw quadrature_error("log_time_integral did not converge", lo.error + hi.error);
    return lo.value + hi.value;
}
} // namespace

double integral_kappa(int dimension, double q, double H, double rel_tol) {
    return log_time_integral([&](double t) { return kappa(t, dimension, q, H); }, rel_tol);
}

double integral_zeta(double H, double rel_tol) {
    return log_time_integral([&](double t) { return zeta(t, H); }, rel_tol);
}

std::vector<double> continuity_at_zero(const Semigroup& sg, const GridField& u0,
                                       const std::vector<double>& times) {
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times)
        out.push_back(luxemburg_norm(sg.apply(u0, t) - u0, YoungFunction::expl2()));
    return out;
}

} // namespace polyheat
