#include "polyheat/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "polyheat/errors.hpp"
#include "polyheat/specfun.hpp"

namespace polyheat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOverflowS2 = 700.0; // e^700 is near the double ceiling
} // namespace

double YoungFunction::operator()(double s) const {
    s = std::abs(s);
    switch (kind) {
        case Kind::ExpL2: {
            double s2 = s * s;
            if (s2 > kOverflowS2) return kInf;
            return std::expm1(s2);
        }
        case Kind::Phi8: {
            double x = s * s;
            if (x > kOverflowS2) return kInf;
            if (x < 1e-3) return 0.5 * x * x * (1.0 + x / 3.0 + x * x / 12.0);
            return std::expm1(x) - x;
        }
        case Kind::Power:
            return std::pow(s, exponent);
    }
    return 0.0;
}

std::string YoungFunction::name() const {
    switch (kind) {
        case Kind::ExpL2: return "expl2";
        case Kind::Phi8: return "phi8";
        case Kind::Power: return "power:" + std::to_string(exponent);
    }
    return "?";
}

double orlicz_integral(const GridField& u, const YoungFunction& phi, double alpha) {
    const double cell = u.spec.cell_volume();
    long double acc = 0.0L;
    for (double v : u.values) {
        double t = phi(std::abs(v) / alpha);
        if (t == kInf) return kInf;
        acc += t;
    }
    return static_cast<double>(acc * cell);
}

double luxemburg_norm(const GridField& u, const YoungFunction& phi) {
    double umax = 0.0;
    for (double v : u.values) umax = std::max(umax, std::abs(v));
    if (umax == 0.0) return 0.0;

    const double vol = u.spec.cell_volume() * static_cast<double>(u.size());
    double alpha0 = umax;
    if (phi.kind == YoungFunction::Kind::ExpL2 || phi.kind == YoungFunction::Kind::Phi8)
        alpha0 = umax / std::sqrt(std::log1p(1.0 / vol));

    double hi = alpha0, lo = alpha0;
    int guard = 0;
    while (orlicz_integral(u, phi, hi) > 1.0) {
        hi *= 2.0;
        if (++guard > 2000) throw std::runtime_error("luxemburg_norm: bracket expansion failed");
    }
    guard = 0;
    while (orlicz_integral(u, phi, lo) <= 1.0) {
        lo *= 0.5;
        if (++guard > 2000) break; // integral stays <= 1 down to denormals: norm ~ 0
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-11 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (orlicz_integral(u, phi, mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

InequalityCheck embedding_check(const GridField& u, double r) {
    if (!(r >= 2.0)) throw std::domain_error("embedding_check: requires r >= 2");
    InequalityCheck c;
    c.lhs = lp_norm(u, r);
    c.rhs = embedding_constant(r) * luxemburg_norm(u, YoungFunction::expl2());
    c.holds = c.lhs <= c.rhs * (1.0 + 1e-9);
    return c;
}

InequalityCheck exp_moment_bound(const GridField& u, double lambda, double p, double K) {
    if (!(lambda > 0.0) || !(p >= 1.0) || !(K > 0.0))
        throw std::domain_error("exp_moment_bound: requires lambda > 0, p >= 1, K > 0");
    if (lambda * p * K * K > 1.0 + 1e-12)
        throw hypothesis_error("exp_moment_bound: lambda*p*K^2 > 1");
    double lux = luxemburg_norm(u, YoungFunction::expl2());
    if (lux > K * (1.0 + 1e-12))
        throw hypothesis_error("exp_moment_bound: ||u||_{exp L^2} > K");
    GridField g(u.spec);
    for (std::size_t i = 0; i < u.size(); ++i) {
        double x = lambda * u[i] * u[i];
        if (x > kOverflowS2) throw overflow_error("exp_moment_bound: overflow", i, x);
        g[i] = std::expm1(x);
    }
    InequalityCheck c;
    c.lhs = lp_norm(g, p);
    c.rhs = std::pow(lambda * p * K * K, 1.0 / p);
    c.holds = c.lhs <= c.rhs * (1.0 + 1e-9);
    return c;
}

InequalityCheck log2_bound(const GridField& u) {
    InequalityCheck c;
    c.lhs = luxemburg_norm(u, YoungFunction::expl2());
    c.rhs = (lp_norm(u, 2.0) + lp_norm(u, kInf)) / std::sqrt(std::log(2.0));
    c.holds = c.lhs <= c.rhs * (1.0 + 1e-9);
    return c;
}

RearrangementProfile rearrange(const GridField& u) {
    RearrangementProfile prof;
    const double cell = u.spec.cell_volume();
    prof.u_sharp.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) prof.u_sharp[i] = std::abs(u[i]);
    std::sort(prof.u_sharp.begin(), prof.u_sharp.end(), std::greater<double>());
    prof.radii.resize(u.size());
    prof.u_sharpsharp.resize(u.size());
    long double csum = 0.0L;
    for (std::size_t j = 0; j < u.size(); ++j) {
        csum += prof.u_sharp[j];
        prof.radii[j] = cell * static_cast<double>(j + 1);
        // (1/r_j) int_0^{r_j} u# with exact piecewise-constant integration
        prof.u_sharpsharp[j] = static_cast<double>(csum * cell / prof.radii[j]);
    }
    return prof;
}

double rearranged_lp_norm(const RearrangementProfile& prof, const GridSpec& spec, double p) {
    if (std::isinf(p)) return prof.u_sharp.empty() ? 0.0 : prof.u_sharp.front();
    if (!(p >= 1.0)) throw std::domain_error("rearranged_lp_norm: requires p >= 1");
    long double acc = 0.0L;
    for (double v : prof.u_sharp) acc += std::pow(static_cast<long double>(v), p);
    acc *= spec.cell_volume();
    return static_cast<double>(std::pow(acc, 1.0L / p));
}

void export_rearrangement_csv(const RearrangementProfile& prof, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_rearrangement_csv: cannot open " + path);
    os << "r,u_sharp,u_sharpsharp\n";
    char buf[96];
    for (std::size_t j = 0; j < prof.radii.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", prof.radii[j], prof.u_sharp[j],
                      prof.u_sharpsharp[j]);
        os << buf;
    }
}

SharpNormBound sharp_norm_lower_bound(const GridField& u) {
    SharpNormBound out;
    out.l2 = lp_norm(u, 2.0);
    out.lux = luxemburg_norm(u, YoungFunction::expl2());
    RearrangementProfile prof = rearrange(u);
    for (std::size_t j = 0; j < prof.radii.size(); ++j) {
        double r = prof.radii[j];
        if (r >= 1.0) {
            // the sup runs over 0 < r < 1; sample just inside the endpoint
            r = 1.0 - 1e-12;
            double q = prof.u_sharpsharp[j] / std::sqrt(std::log(M_E / r));
            out.sup_quotient = std::max(out.sup_quotient, q);
            break;
        }
        double q = prof.u_sharpsharp[j] / std::sqrt(std::log(M_E / r));
        out.sup_quotient = std::max(out.sup_quotient, q);
    }
    return out;
}

double unit_ball_volume(int n) {
    return std::pow(M_PI, 0.5 * n) / gamma_fn(0.5 * n + 1.0);
}

GridField witness_function(Witness which, const GridSpec& spec, double r) {
    if (which == Witness::OrlLebIII && !(r >= 1.0 && r < 2.0))
        throw std::domain_error("witness_function: OrlLebIII requires r in [1,2)");
    const double clip = 0.5 * spec.h();
    const double wn = unit_ball_volume(spec.dimension);
    const int nn = spec.dimension;
    auto f = [&](const Point& x) -> double {
        double rad = 0.0;
        for (int a = 0; a < nn; ++a) rad += x[a] * x[a];
        rad = std::sqrt(rad);
        double rc = std::max(rad, clip);
        switch (which) {
            case Witness::OrlLebI:
                return rad <= 1.0 ? std::sqrt(-std::log(std::min(rc, 1.0))) : 0.0;
            case Witness::OrlLebII:
                return rad <= 1.0 ? std::sqrt(std::log(1.0 - std::log(std::min(rc, 1.0)))) : 0.0;
            case Witness::OrlLebIII:
                return rad >= 1.0 ? std::pow(rad, -static_cast<double>(nn) / r) : 0.0;
            case Witness::Discontinuity: {
                if (rad >= 1.0) return 0.0;
                double s = wn * std::pow(rc, nn);
                double ls = std::log(s);
                if (1.0 - ls <= 0.0) return 0.0; // formula leaves the reals past s = e
                double v = (1.0 - 2.0 * ls) / (2.0 * std::sqrt(1.0 - ls));
                return std::max(v, 0.0); // negative branch (s > sqrt(e)) cut to 0
            }
        }
        return 0.0;
    };
    return sample_function(spec, f);
}

} // namespace polyheat
