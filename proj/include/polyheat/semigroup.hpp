#ifndef POLYHEAT_SEMIGROUP_HPP
#define POLYHEAT_SEMIGROUP_HPP

#include <vector>

#include "polyheat/fft.hpp"
#include "polyheat/grid.hpp"
#include "polyheat/orlicz.hpp"

namespace polyheat {

// Spectral realization of e^{-t(-Delta)^d} on a periodic grid.
class Semigroup {
  public:
    Semigroup(const GridSpec& spec, int d);

    const GridSpec& spec() const { return tf_.spec(); }
    int order() const { return d_; }

    // t = 0 returns the input unchanged (bit-identical).
    GridField apply(const GridField& field, double t) const;

    const SpectralTransform& transform() const { return tf_; }

  private:
    SpectralTransform tf_;
    int d_;
};

// ||S(t)f||_q / (t^{-N/(2d)(1/p-1/q)} ||f||_p); the empirical candidate for
// the (p,q)-uniform constant.
double smoothing_ratio(const Semigroup& sg, const GridField& field, double t, double p, double q);

struct SweepRow {
    double t = 0, p = 0, q = 0, ratio = 0;
};

struct SmoothingSweep {
    double H = 0.0; // max ratio over the sweep
    std::vector<SweepRow> rows;
};

// Max of smoothing_ratio over fields x (p,q) pairs x times.
SmoothingSweep run_smoothing_sweep(const Semigroup& sg, const std::vector<GridField>& fields,
                                   const std::vector<double>& ps, const std::vector<double>& ts);

// ||S(t)phi||_{exp L^2} <= H t^{-N/(2dp)} (log(t^{-N/(2d)}+1))^{-1/2} ||phi||_p,
// 1 <= p <= 2.
InequalityCheck orlicz_smoothing_check(const Semigroup& sg, const GridField& field, double t,
                                       double p, double H);

// ||S(t)phi||_{exp L^2} <= (H/sqrt(log 2)) (t^{-N/(2dq)} ||phi||_q + ||phi||_2).
InequalityCheck orlicz_smoothing_check_iii(const Semigroup& sg, const GridField& field, double t,
                                           double q, double H);

// kappa(t) = (2H/sqrt(log 2)) min{ t^{-N/4q} + 1, t^{-N/4} (log(t^{-N/4}+1))^{-1/2} },
// N >= 9, q > N/4 (d = 2 form).
double kappa(double t, int dimension, double q, double H);

// zeta(t) = (H/sqrt(log 2)) min{ 1 + t^{-1/2}, t^{-2} (log(t^{-2}+1))^{-1/4} }
// (the N = 8, q = 4 form).
double zeta(double t, double H);

// int_0^inf by adaptive quadrature in log time.
double integral_kappa(int dimension, double q, double H, double rel_tol = 1e-8);
double integral_zeta(double H, double rel_tol = 1e-8);

// ||S(t)u0 - u0||_{exp L^2} for each t.
std::vector<double> continuity_at_zero(const Semigroup& sg, const GridField& u0,
                                       const std::vector<double>& times);

} // namespace polyheat

#endif
