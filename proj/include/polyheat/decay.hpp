#ifndef POLYHEAT_DECAY_HPP
#define POLYHEAT_DECAY_HPP

#include <string>
#include <vector>

namespace polyheat {

struct Trajectory; // solver.hpp

// sigma = 1/(m-1) - N/(2dp); p = infinity contributes 0. Throws for m <= 1.
double sigma_theory(double m, int dimension, double p, int d);

struct PRange {
    double lower = 0.0;
    double upper = 0.0; // +inf for an unbounded-above range
    bool lower_inclusive = true;
    bool upper_inclusive = true; // p = infinity admitted
    std::string branch;
    bool contains(double p) const;
};

// Admissible p interval for the global decay estimate:
//   N >= 4d : ( N(m-1)/(2d), inf )           open, p = inf excluded
//   N <  4d : [ max(m, 2N(m-1)/(4d-N)), inf ] closed, p = inf included
// Requires N(m-1)/(2d) >= 2 and m >= 2; throws regime_error otherwise.
PRange admissible_p_range(double m, int dimension, int d);

struct DecayFit {
    double p = 0.0;
    double sigma_hat = 0.0;
    double sigma_theory = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
    double r_squared = 0.0;
    int n_samples = 0;
    bool mass_subtracted = false;
};

// Least-squares slope of log||u(t)||_p against log t on [t_lo, t_hi];
// sigma_hat is the negated slope. mass_subtract replaces u by u - mean(u)
// before taking norms (periodic boxes conserve the mean, which otherwise
// floors the decay). Needs >= 8 samples with nonzero norms.
DecayFit fit_decay(const Trajectory& traj, double p, double t_lo, double t_hi,
                   bool mass_subtract = false);

// Same regression on precomputed (t, norm) pairs.
DecayFit fit_decay_samples(const std::vector<double>& ts, const std::vector<double>& norms,
                           double t_lo, double t_hi);

// Root of a = 2 log(a+1) in (2, 3), bisected to 1e-14.
double log_root_a();

struct LogCertificate {
    double a_root = 0.0;
    double threshold = 0.0; // a^{-2d/N}
    bool holds_all = false;
    int violations = 0;
    double worst_margin = 0.0; // min over samples of rhs - lhs
};

// Checks (log(tau^{-N/(2d)}+1))^{-1/2} <= sqrt(2) tau^{N/(4d)} at each tau.
// Samples below the threshold a^{-2d/N} are rejected with a domain error.
LogCertificate log_inequality_certificate(int dimension, int d, const std::vector<double>& taus);

} // namespace polyheat

#endif
