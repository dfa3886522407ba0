#include "polyheat/solver.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "polyheat/errors.hpp"

namespace polyheat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GridField eval_nonlinearity(const NonlinearitySpec& nl, const GridField& u) {
    GridField out(u.spec);
    if (nl.sign == 0) return out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        double v = u[i];
        double x = nl.lambda * v * v;
        if (x > 700.0) {
            std::ostringstream os;
            os << "eval_nonlinearity: lambda*u^2 = " << x << " overflows at node " << i;
            throw overflow_error(os.str(), i, x);
        }
        out[i] = nl.sign * std::copysign(std::pow(std::abs(v), nl.m), v) * std::exp(x);
    }
    return out;
}

// Quadratic ramp t_j = T (j/steps)^2: first node T/steps^2, spacing shrinking
// toward 0 (resolves the t^sigma weights) and asymptotically uniform at the
// far end. Halving the step count nests the nodes, so Richardson triplets see
// clean first-order behavior of the left-endpoint rule.
std::vector<double> make_time_grid(double T, int steps) {
    if (steps < 8) throw std::domain_error("make_time_grid: requires steps >= 8");
    if (!(T > 0.0)) throw std::domain_error("make_time_grid: requires T > 0");
    std::vector<double> ts;
    ts.reserve(steps + 1);
    for (int j = 0; j <= steps; ++j) {
        double x = static_cast<double>(j) / steps;
        ts.push_back(T * x * x);
    }
    ts[steps] = T;
    return ts;
}

double Trajectory::norm_at(std::size_t ti, double p) const {
    for (std::size_t c = 0; c < tracked_p.size(); ++c) {
        if (tracked_p[c] == p || (std::isinf(tracked_p[c]) && std::isinf(p)))
            return norms[ti][c];
    }
    throw std::domain_error("Trajectory: norm index p not tracked");
}

double Trajectory::lux_at(std::size_t ti) const { return norms[ti].back(); }

namespace {

struct IterationState {
    // Duhamel parts in physical space, one per node; the full iterate is
    // linear_orbit[j] + duhamel[j].
    std::vector<GridField> duhamel;
};

double metric_distance(const std::vector<double>& ts, const std::vector<GridField>& a,
                       const std::vector<GridField>& b, const SolveOptions& opts) {
    double dd = 0.0;
    for (std::size_t j = 1; j < ts.size(); ++j) {
        GridField diff = a[j] - b[j];
        double nrm;
        if (opts.metric == PicardMetric::GlobalSigmaP)
            nrm = std::pow(ts[j], opts.sigma) * lp_norm(diff, opts.metric_p);
        else
            nrm = luxemburg_norm(diff, YoungFunction::expl2());
        dd = std::max(dd, nrm);
    }
    return dd;
}

std::pair<Trajectory, PicardReport> picard_iterate(
    const Semigroup& sg, const GridField& u0,
    const std::function<GridField(std::size_t, const GridField&)>& source,
    const SolveOptions& opts) {
    const auto& tf = sg.transform();
    const auto& k2 = tf.freq_sq();
    const auto& mask = tf.dealias_mask();
    const int d = sg.order();
    std::vector<double> ts = make_time_grid(opts.T, opts.steps);
    const std::size_t J = ts.size();

    // linear part S(t_j) u0, computed once
    std::vector<GridField> lin;
    lin.reserve(J);
    for (double t : ts) lin.push_back(sg.apply(u0, t));

    std::vector<GridField> duh(J, GridField(u0.spec));
    std::vector<GridField> iterate = lin;

    PicardReport report;
    double d_prev = -1.0;
    std::vector<std::complex<double>> acc(tf.spectral_size(), {0.0, 0.0});
    std::vector<std::complex<double>> fhat;

    for (int it = 0; it < opts.max_iter; ++it) {
        report.iterations = it + 1;
        std::vector<GridField> duh_new(J, GridField(u0.spec));
        std::fill(acc.begin(), acc.end(), std::complex<double>(0.0, 0.0));
        try {
            for (std::size_t j = 1; j < J; ++j) {
                const double dt = ts[j] - ts[j - 1];
                GridField fv;
                try {
                    fv = source(j - 1, iterate[j - 1]);
                } catch (const overflow_error& e) {
                    std::ostringstream os;
                    os << e.what() << " (iterate " << it + 1 << ", time node t = " << ts[j - 1]
                       << ")";
                    throw overflow_error(os.str(), e.node, e.value);
                }
                tf.forward(fv, fhat);
                for (std::size_t i = 0; i < fhat.size(); ++i) {
                    if (!mask[i]) fhat[i] = 0.0; // 2/3-rule: e^{lambda u^2} is broadband
                    acc[i] = std::exp(-dt * std::pow(k2[i], d)) * (acc[i] + dt * fhat[i]);
                }
                tf.inverse(acc, duh_new[j]);
            }
        } catch (const overflow_error& e) {
            if (it == 0) throw; // the data itself is inadmissible
            report.contraction_factors.push_back(kInf);
            report.converged = false;
            report.final_residual = kInf;
            report.overflow_context = e.what();
            break;
        }
        double dd = metric_distance(ts, duh_new, duh, opts);
        duh = std::move(duh_new);
        for (std::size_t j = 0; j < J; ++j) iterate[j] = lin[j] + duh[j];
        if (d_prev > 0.0) report.contraction_factors.push_back(dd / d_prev);
        report.final_residual = dd;
        if (dd < opts.tol) {
            report.converged = true;
            break;
        }
        d_prev = dd;
    }

    Trajectory traj;
    traj.spec = u0.spec;
    traj.times = ts;
    traj.tracked_p = opts.track_p;
    traj.store_fields = opts.store_fields;
    if (opts.store_fields) {
        traj.fields = iterate;
        traj.duhamel = duh;
    }
    traj.norms.resize(J);
    for (std::size_t j = 0; j < J; ++j) {
        for (double p : opts.track_p) traj.norms[j].push_back(lp_norm(iterate[j], p));
        traj.norms[j].push_back(luxemburg_norm(iterate[j], YoungFunction::expl2()));
    }
    return {std::move(traj), std::move(report)};
}

} // namespace

std::pair<Trajectory, PicardReport> duhamel_solve(const Semigroup& sg, const GridField& u0,
                                                  const NonlinearitySpec& nl,
                                                  const SolveOptions& opts) {
    auto source = [&nl](std::size_t, const GridField& u) { return eval_nonlinearity(nl, u); };
    return picard_iterate(sg, u0, source, opts);
}

std::pair<Trajectory, PicardReport> duhamel_solve_source(
    const Semigroup& sg, const GridField& w0,
    const std::function<GridField(std::size_t, const GridField&)>& source,
    const SolveOptions& opts) {
    return picard_iterate(sg, w0, source, opts);
}

SplitData split_initial_data(const SpectralTransform& tf, const GridField& u0, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("split_initial_data: requires eps > 0");
    std::vector<std::complex<double>> hat;
    tf.forward(u0, hat);
    const int n = tf.spec().points_per_axis;
    const double k0 = 2.0 * M_PI / tf.spec().box_length;
    const auto& k2 = tf.freq_sq();

    for (int c = 0; c <= n / 2; ++c) {
        // keep |xi| <= c * 2pi/L on every axis; freq_sq is the squared total
        double kcut = (static_cast<double>(c) + 0.5) * k0;
        std::vector<std::complex<double>> low(hat.size());
        for (std::size_t i = 0; i < hat.size(); ++i)
            low[i] = (k2[i] <= kcut * kcut * tf.spec().dimension) ? hat[i]
                                                                  : std::complex<double>(0.0);
        GridField v0;
        tf.inverse(low, v0);
        GridField w0 = u0 - v0;
        double wl = luxemburg_norm(w0, YoungFunction::expl2());
        if (wl <= eps) return {std::move(v0), std::move(w0), c, wl};
    }
    throw std::runtime_error(
        "split_initial_data: even the full spectrum leaves ||w0|| > eps "
        "(data effectively outside exp L^2_0 at this resolution)");
}

SplitSolveResult split_solve(const Semigroup& sg, const GridField& u0, const NonlinearitySpec& nl,
                             double eps, const SolveOptions& opts) {
    SplitData parts = split_initial_data(sg.transform(), u0, eps);
    SplitSolveResult out;

    auto [v_traj, v_rep] = duhamel_solve(sg, parts.v0, nl, opts);
    if (!v_traj.store_fields)
        throw std::runtime_error("split_solve: needs stored fields (set store_fields)");

    // (P2): dw/dt + (-Delta)^d w = f(w + v) - f(v)
    auto source = [&](std::size_t node, const GridField& w) {
        const GridField& v = v_traj.fields[node];
        return eval_nonlinearity(nl, w + v) - eval_nonlinearity(nl, v);
    };
    auto [w_traj, w_rep] = duhamel_solve_source(sg, parts.w0, source, opts);

    auto [direct, direct_rep] = duhamel_solve(sg, u0, nl, opts);
    double sup_diff = 0.0, sup_ref = 0.0;
    for (std::size_t j = 0; j < direct.times.size(); ++j) {
        GridField combined = v_traj.fields[j] + w_traj.fields[j];
        sup_diff = std::max(sup_diff, lp_norm(combined - direct.fields[j], 2.0));
        sup_ref = std::max(sup_ref, lp_norm(direct.fields[j], 2.0));
    }
    out.v = std::move(v_traj);
    out.w = std::move(w_traj);
    out.report_v = std::move(v_rep);
    out.report_w = std::move(w_rep);
    out.residual = sup_ref > 0.0 ? sup_diff / sup_ref : sup_diff;
    return out;
}

YmCheck ym_membership(const Trajectory& traj, double M, double p, double sigma) {
    YmCheck c;
    double sup_weighted = 0.0, sup_lux = 0.0;
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
        if (traj.times[j] > 0.0)
            sup_weighted =
                std::max(sup_weighted, std::pow(traj.times[j], sigma) * traj.norm_at(j, p));
        sup_lux = std::max(sup_lux, traj.lux_at(j));
    }
    c.value = sup_weighted + sup_lux;
    c.holds = c.value <= M;
    return c;
}

std::vector<double> continuity_residual(const Semigroup& sg, const Trajectory& traj,
                                        const GridField& u0) {
    if (!traj.store_fields)
        throw std::runtime_error("continuity_residual: trajectory has no stored fields");
    std::vector<double> out;
    for (std::size_t j = 1; j < traj.times.size(); ++j) {
        GridField lin = sg.apply(u0, traj.times[j]);
        out.push_back(luxemburg_norm(traj.fields[j] - lin, YoungFunction::expl2()));
    }
    return out;
}

void save_trajectory(const Trajectory& traj, const PicardReport& report, const std::string& dir,
                     const std::string& config_echo_json, bool snapshots) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    std::ofstream csv(dir + "/norms.csv");
    if (!csv) throw std::runtime_error("save_trajectory: cannot open norms.csv");
    csv << "t";
    for (double p : traj.tracked_p) {
        if (std::isinf(p))
            csv << ",lp_inf";
        else
            csv << ",lp_" << p;
    }
    csv << ",expl2\n";
    char buf[64];
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", traj.times[j]);
        csv << buf;
        for (double v : traj.norms[j]) {
            std::snprintf(buf, sizeof buf, ",%.17g", v);
            csv << buf;
        }
        csv << "\n";
    }

    nlohmann::json manifest;
    manifest["schema_version"] = 1;
    manifest["config"] = nlohmann::json::parse(config_echo_json.empty() ? "{}" : config_echo_json);
    manifest["report"] = {{"iterations", report.iterations},
                          {"converged", report.converged},
                          {"final_residual", report.final_residual},
                          {"contraction_factors", report.contraction_factors},
                          {"overflow_context", report.overflow_context}};
    std::ofstream mf(dir + "/manifest.json");
    mf << manifest.dump(2) << "\n";

    if (snapshots && traj.store_fields) {
        fs::create_directories(dir + "/fields");
        for (std::size_t j = 0; j < traj.fields.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%s/fields/snap_%04zu.bin", dir.c_str(), j);
            save_field(traj.fields[j], buf);
        }
    }
}

} // namespace polyheat
