#ifndef POLYHEAT_SPECFUN_HPP
#define POLYHEAT_SPECFUN_HPP

#include <vector>

namespace polyheat {

struct SpecFunConfig {
    double relative_tolerance = 1e-12;
    int max_quadrature_nodes = 4000;
};

// Gamma(x) for x > 0. Throws std::domain_error otherwise.
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), evaluated through log-Gamma so large
// arguments do not overflow. Symmetric in (x,y) as computed.
double beta_fn(double x, double y);

// Gamma(r/2+1)^(1/r), the embedding constant of L^r against exp L^2.
double embedding_constant(double r);

struct GammaBoundsRow {
    double x;
    double stirling_ratio;   // Gamma(x+1) / ((x/e)^x sqrt(2 pi x))
    double power_ratio;      // Gamma(x+1) / x^(x+1/2)
};

struct GammaBoundsReport {
    std::vector<GammaBoundsRow> rows;
    double stirling_c = 0.0;     // smallest C with Gamma(x+1) <= C x^(x+1/2) on the samples
    bool ratio_trend_ok = false; // stirling_ratio decreases toward 1 along sorted samples
};

// Checks the Stirling asymptotics and the power bound on samples >= 1.
GammaBoundsReport check_gamma_bounds(std::vector<double> x_samples);

} // namespace polyheat

#endif
