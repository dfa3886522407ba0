#ifndef POLYHEAT_ORLICZ_HPP
#define POLYHEAT_ORLICZ_HPP

#include <string>
#include <vector>

#include "polyheat/grid.hpp"

namespace polyheat {

// Young function phi: convex increasing, phi(0) = 0.
struct YoungFunction {
    enum class Kind { ExpL2, Phi8, Power };
    Kind kind = Kind::ExpL2;
    double exponent = 2.0; // for Kind::Power

    static YoungFunction expl2() { return {Kind::ExpL2, 0.0}; }
    static YoungFunction phi8() { return {Kind::Phi8, 0.0}; }
    static YoungFunction power(double p) { return {Kind::Power, p}; }

    // phi(s); returns +inf instead of overflowing.
    double operator()(double s) const;
    std::string name() const;
};

// sum phi(|u_i|/alpha) h^N; +inf when any cell overflows double range.
double orlicz_integral(const GridField& u, const YoungFunction& phi, double alpha);

// Luxemburg norm inf{alpha > 0 : integral <= 1}; 0 for the zero field.
// Geometric bracketing then bisection to relative width 1e-11; the returned
// alpha sits on the <= 1 side of the bracket.
double luxemburg_norm(const GridField& u, const YoungFunction& phi);

struct InequalityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;
};

// ||u||_r <= Gamma(r/2+1)^(1/r) ||u||_{exp L^2}, r >= 2.
InequalityCheck embedding_check(const GridField& u, double r);

// Lemma-style exponential moment bound: ||e^{lambda u^2}-1||_p <= (lambda p K^2)^(1/p)
// under ||u||_{exp L^2} <= K and lambda p K^2 <= 1; hypothesis violations throw.
InequalityCheck exp_moment_bound(const GridField& u, double lambda, double p, double K);

// ||u||_{exp L^2} <= (||u||_2 + ||u||_inf)/sqrt(log 2).
InequalityCheck log2_bound(const GridField& u);

// Decreasing rearrangement in cell-measure coordinates plus its running mean.
struct RearrangementProfile {
    std::vector<double> radii;        // j * h^N
    std::vector<double> u_sharp;      // sorted descending |u|
    std::vector<double> u_sharpsharp; // prefix means
};

RearrangementProfile rearrange(const GridField& u);

// L^p(0,infinity) norm of u_sharp (equimeasurability partner of lp_norm).
double rearranged_lp_norm(const RearrangementProfile& prof, const GridSpec& spec, double p);

void export_rearrangement_csv(const RearrangementProfile& prof, const std::string& path);

// sup_{0<r<1} u##(r)/sqrt(log(e/r)) together with the norms entering the
// lower bound sup + ||u||_2 <= C ||u||_{exp L^2}; C is empirical.
struct SharpNormBound {
    double sup_quotient = 0.0;
    double l2 = 0.0;
    double lux = 0.0;
    // (sup_quotient + l2)/lux; 0 for the zero field
    double ratio() const { return lux > 0 ? (sup_quotient + l2) / lux : 0.0; }
    bool holds(double c) const { return sup_quotient + l2 <= c * lux * (1 + 1e-9) || lux == 0.0; }
};

SharpNormBound sharp_norm_lower_bound(const GridField& u);

enum class Witness { OrlLebI, OrlLebII, OrlLebIII, Discontinuity };

// Sampled witness functions from the Orlicz/Lebesgue comparison lemmas, with
// the singular radius clipped at h/2. OrlLebIII takes r in [1,2).
// The discontinuity witness is the positive part of
// (1-2log(w_N |x|^N)) / (2 sqrt(1-log(w_N |x|^N))) on 0<|x|<1; the formula
// goes negative (then complex) once w_N |x|^N passes sqrt(e) (resp. e), so the
// sampled field is cut to 0 there.
GridField witness_function(Witness which, const GridSpec& spec, double r = 0.0);

// Volume of the unit ball in R^N.
double unit_ball_volume(int n);

} // namespace polyheat

#endif
