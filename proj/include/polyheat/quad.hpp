#ifndef POLYHEAT_QUAD_HPP
#define POLYHEAT_QUAD_HPP

#include <functional>

namespace polyheat {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    int evaluations = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod (7,15) on a finite interval. Splits the worst
// subinterval until the summed error estimate meets rel_tol*|value| + abs_tol
// or max_intervals is reached.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-12, double abs_tol = 0.0,
                     int max_intervals = 2000);

// Integral over [a, inf) via the substitution t = a + u/(1-u), u in [0,1).
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double rel_tol = 1e-12, double abs_tol = 0.0,
                                 int max_intervals = 2000);

} // namespace polyheat

#endif
