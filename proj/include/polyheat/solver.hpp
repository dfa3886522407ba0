#ifndef POLYHEAT_SOLVER_HPP
#define POLYHEAT_SOLVER_HPP

#include <functional>
#include <string>
#include <vector>

#include "polyheat/grid.hpp"
#include "polyheat/semigroup.hpp"

namespace polyheat {

// f(u) = sign |u|^{m-1} u e^{lambda u^2}. sign = 0 switches the nonlinearity
// off entirely (the degenerate f == 0 case).
struct NonlinearitySpec {
    double m = 2.0;
    double lambda = 0.0;
    int sign = +1;
};

// Pointwise evaluation; throws overflow_error naming the node when
// lambda u^2 > 700.
GridField eval_nonlinearity(const NonlinearitySpec& nl, const GridField& u);

// t_0 = 0 then `steps` nodes: geometric from T/steps^2 up to T/2, uniform to T.
std::vector<double> make_time_grid(double T, int steps);

struct Trajectory {
    GridSpec spec;
    std::vector<double> times;            // starts at 0
    std::vector<GridField> fields;        // u at each node
    std::vector<GridField> duhamel;       // integral part u - S(t)u0 at each node
    std::vector<double> tracked_p;        // p columns of `norms`
    std::vector<std::vector<double>> norms; // per time: ||u||_p ... then ||u||_{exp L^2}
    bool store_fields = true;

    double norm_at(std::size_t time_index, double p) const; // throws if p untracked
    double lux_at(std::size_t time_index) const;
};

struct PicardReport {
    int iterations = 0;
    std::vector<double> contraction_factors; // successive distance ratios
    bool converged = false;
    double final_residual = 0.0;
    std::string overflow_context; // nonempty when an iterate overflowed
};

enum class PicardMetric {
    GlobalSigmaP, // sup_t t^sigma ||.||_p  (global small-data runs)
    LocalExpL2    // sup_t ||.||_{exp L^2}  (local runs)
};

struct SolveOptions {
    double T = 1.0;
    int steps = 64;
    double tol = 1e-10;
    int max_iter = 25;
    PicardMetric metric = PicardMetric::GlobalSigmaP;
    double metric_p = 2.0;  // p* for the weighted metric
    double sigma = 0.0;     // weight exponent, from decay::sigma_theory
    std::vector<double> track_p = {2.0};
    bool store_fields = true;
};

// Picard iteration of the Duhamel map
//   Phi(u)(t_j) = S(t_j)u0 + sum_{i<j} (t_{i+1}-t_i) S(t_j-t_i) f(u(t_i))
// (left endpoint rule, semigroup factors exact, 2/3-rule dealiasing after
// each nonlinearity evaluation). Non-convergence within max_iter returns
// converged = false; an overflow after the first sweep is recorded in the
// report rather than thrown.
std::pair<Trajectory, PicardReport> duhamel_solve(const Semigroup& sg, const GridField& u0,
                                                  const NonlinearitySpec& nl,
                                                  const SolveOptions& opts);

// Same iteration with a general source g(node index, w) in place of f(w);
// used by the perturbed problem of the splitting mode.
std::pair<Trajectory, PicardReport> duhamel_solve_source(
    const Semigroup& sg, const GridField& w0,
    const std::function<GridField(std::size_t, const GridField&)>& source,
    const SolveOptions& opts);

struct SplitData {
    GridField v0; // low-pass part
    GridField w0; // remainder, ||w0||_{exp L^2} <= eps
    int cutoff = 0;
    double w0_lux = 0.0;
};

// u0 = v0 + w0 with v0 a Fourier low-pass truncation; the cutoff is raised
// until the remainder's Luxemburg norm is <= eps. Throws when even the full
// spectrum leaves ||w0|| > eps.
SplitData split_initial_data(const SpectralTransform& tf, const GridField& u0, double eps);

struct SplitSolveResult {
    Trajectory v;          // solution of (P1) from v0 with f
    Trajectory w;          // solution of (P2) from w0 with source f(w+v)-f(v)
    PicardReport report_v;
    PicardReport report_w;
    double residual = 0.0; // sup_t ||(v+w)-u_direct||_2 / sup_t ||u_direct||_2
};

SplitSolveResult split_solve(const Semigroup& sg, const GridField& u0, const NonlinearitySpec& nl,
                             double eps, const SolveOptions& opts);

struct YmCheck {
    double value = 0.0;
    bool holds = false;
};

// sup_j t_j^sigma ||u(t_j)||_p + max_j ||u(t_j)||_{exp L^2} <= M.
YmCheck ym_membership(const Trajectory& traj, double M, double p, double sigma);

// ||u(t_j) - S(t_j)u0||_{exp L^2} per node (t = 0 excluded).
std::vector<double> continuity_residual(const Semigroup& sg, const Trajectory& traj,
                                        const GridField& u0);

// Trajectory persistence: directory with manifest.json + norms.csv
// (+ fields/snap_*.bin when fields are stored and snapshots requested).
void save_trajectory(const Trajectory& traj, const PicardReport& report, const std::string& dir,
                     const std::string& config_echo_json, bool snapshots = false);

} // namespace polyheat

#endif
