#ifndef POLYHEAT_KERNEL_HPP
#define POLYHEAT_KERNEL_HPP

#include <string>
#include <vector>

namespace polyheat {

// Radial profile of E_d(1, r), the kernel of e^{-t(-Delta)^d} at t = 1.
struct KernelProfile {
    int d = 2;
    int dimension = 1;
    std::vector<double> radii;
    std::vector<double> values;
    std::vector<double> quad_error;

    bool has_sign_change() const;
};

// E_d(1, r) by adaptive quadrature of the radial Fourier inversion
//   (2 pi)^{-N/2} r^{1-N/2} int_0^inf s^{N/2} J_{(N-2)/2}(r s) e^{-s^{2d}} ds,
// split at the oscillation nodes of the Bessel factor. At r = 0 the closed
// form (2 pi)^{-N} |S^{N-1}| Gamma(N/2d)/(2d) is used. N in {1,2,3}.
double eval_profile(double r, int dimension, int d, double rel_tol = 1e-11);

// 2048 log-spaced radii by default, from r_min out to the radius where
// |E| < 1e-10 |E(0)|.
KernelProfile tabulate_profile(int dimension, int d, double r_min = 1e-3, int n_radii = 2048);

struct ScalingCheck {
    double lhs = 0.0; // kernel at (t, x) via the symbol e^{-t |xi|^{2d}}
    double rhs = 0.0; // t^{-N/2d} E_d(1, t^{-1/2d} |x|)
    double rel_err = 0.0;
};

ScalingCheck scaling_check(double t, double r, int dimension, int d);

// |E_d(1,r)| <= K * omega * e^{-mu r^beta} with beta = 2d/(2d-1)
// (4/3 for the biharmonic case) and omega^{-1} = int e^{-mu |eta|^beta} d eta.
struct MajorantFit {
    double K = 0.0;
    double mu = 0.0;
    double omega = 0.0;
    double beta = 4.0 / 3.0;
    double max_ratio = 0.0; // max |E| / (K omega e^{-mu r^beta}) over the table
};

double majorant_exponent(int d);
double majorant_omega(double mu, double beta, int dimension);

// Grid search over mu minimizing the K that certifies the bound at every
// tabulated radius. Throws infeasible_error when no K <= k_cap works for any
// mu in the box (a bump in the far tail, i.e. a quadrature bug).
MajorantFit fit_majorant(const KernelProfile& profile, double beta = 0.0, double k_cap = 1e3);

void export_profile_csv(const KernelProfile& profile, const std::string& path);
void export_majorant_json(const MajorantFit& fit, const std::string& path);

} // namespace polyheat

#endif
