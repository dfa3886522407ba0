#include "polyheat/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyheat {

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
    return std::tgamma(x);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    return std::lgamma(x);
}

double beta_fn(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("beta_fn: requires x, y > 0");
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

double embedding_constant(double r) {
    return std::exp(log_gamma(0.5 * r + 1.0) / r);
}

GammaBoundsReport check_gamma_bounds(std::vector<double> xs) {
    GammaBoundsReport rep;
    std::sort(xs.begin(), xs.end());
    for (double x : xs) {
        if (x < 1.0) throw std::domain_error("check_gamma_bounds: samples must be >= 1");
        double lg = std::lgamma(x + 1.0);
        double stirling = x * (std::log(x) - 1.0) + 0.5 * std::log(2.0 * M_PI * x);
        double power = (x + 0.5) * std::log(x);
        rep.rows.push_back({x, std::exp(lg - stirling), std::exp(lg - power)});
    }
    for (const auto& row : rep.rows) rep.stirling_c = std::max(rep.stirling_c, row.power_ratio);
    // Gamma(x+1)/Stirling = 1 + 1/(12x) + ... : decreasing toward 1
    rep.ratio_trend_ok = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        if (rep.rows[i].stirling_ratio > rep.rows[i - 1].stirling_ratio * (1 + 1e-12))
            rep.ratio_trend_ok = false;
    }
    if (!rep.rows.empty() && rep.rows.back().stirling_ratio < 1.0) rep.ratio_trend_ok = false;
    return rep;
}

} // namespace polyheat
