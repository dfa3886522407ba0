#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polyheat/kernel.hpp"
#include "polyheat/semigroup.hpp"

using namespace polyheat;

TEST_CASE("t = 0 is the bit-identical identity") {
    GridSpec spec(1, 128, 4.0);
    std::mt19937_64 rng(1);
    GridField f = oracles::random_field(spec, rng);
    Semigroup sg(spec, 2);
    GridField g = sg.apply(f, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == g[i]);
}

TEST_CASE("single Fourier mode is an eigenfunction of the symbol") {
    GridSpec spec(1, 256, 2.0);
    const int k = 5;
    const double xi = 2.0 * M_PI * k / spec.box_length;
    GridField f = sample_function(
        spec, [&](const Point& x) { return std::cos(xi * x[0] + 0.3); });
    for (int d : {1, 2, 3}) {
        Semigroup sg(spec, d);
        double t = 0.37;
        double factor = std::exp(-t * std::pow(xi * xi, d));
        GridField g = sg.apply(f, t);
        for (std::size_t i = 0; i < f.size(); i += 17)
            CHECK(g[i] == doctest::Approx(factor * f[i]).epsilon(1e-11));
    }
}

TEST_CASE("apply agrees with direct convolution against the kernel profile") {
    GridSpec spec(1, 512, 40.0);
    GridField f = oracles::bump(spec, 1.0, 0.5);
    Semigroup sg(spec, 2);
    const double t = 1.0;
    GridField spectral = sg.apply(f, t);

    // oracle: discrete periodic convolution with E_1(|x_i - x_j|) h
    const int n = spec.points_per_axis;
    const double h = spec.h();
    std::vector<double> kvals(n);
    for (int i = 0; i < n; ++i) {
        double dx = std::abs(i * h);
        dx = std::min(dx, spec.box_length - dx); // periodic distance
        kvals[i] = eval_profile(dx, 1, 2, 1e-10);
    }
    GridField conv(spec);
    for (int i = 0; i < n; ++i) {
        long double acc = 0.0L;
        for (int j = 0; j < n; ++j) acc += kvals[(i - j + n) % n] * f[j];
        conv[i] = static_cast<double>(acc * h);
    }
    double rel = lp_norm(spectral - conv, 2.0) / lp_norm(conv, 2.0);
    CHECK(rel < 1e-6);
}

TEST_CASE("semigroup law and mass conservation") {
    GridSpec spec(1, 512, 8.0);
    std::mt19937_64 rng(2);
    GridField f = oracles::random_field(spec, rng);
    for (int d : {1, 2}) {
        Semigroup sg(spec, d);
        GridField a = sg.apply(sg.apply(f, 0.3), 0.45);
        GridField b = sg.apply(f, 0.75);
        CHECK(lp_norm(a - b, 2.0) <= 1e-12 * lp_norm(b, 2.0));
        CHECK(mean_value(sg.apply(f, 1.7)) == doctest::Approx(mean_value(f)).epsilon(1e-12));
    }
}

TEST_CASE("positivity: preserved for d = 1, violated for d = 2") {
    GridSpec spec(1, 1024, 20.0);
    GridField f = oracles::bump(spec, 1.0, 0.15);
    Semigroup heat(spec, 1), bi(spec, 2);
    GridField g1 = heat.apply(f, 2.0);
    double min1 = 1e300, min2 = 1e300;
    for (double v : g1.values) min1 = std::min(min1, v);
    GridField g2 = bi.apply(f, 0.2);
    for (double v : g2.values) min2 = std::min(min2, v);
    CHECK(min1 >= -1e-12 * lp_norm(g1, INFINITY));
    CHECK(min2 < -1e-6 * lp_norm(g2, INFINITY)); // kernel sign change shows up
}

TEST_CASE("p = q contraction for the heat semigroup; narrow-bump sup ratio") {
    GridSpec spec(1, 2048, 40.0);
    GridField f = oracles::bump(spec, 1.0, 0.8);
    Semigroup heat(spec, 1);
    for (double t : {0.1, 1.0, 10.0})
        for (double p : std::vector<double>{1.0, 2.0, INFINITY})
            CHECK(smoothing_ratio(heat, f, t, p, p) <= 1.0 + 1e-12);

    // delta-like data: ratio at p=1, q=inf approaches ||E_1||_inf = E_1(0)
    Semigroup bi(spec, 2);
    GridField delta = oracles::indicator(spec, 1.0, 1, 1024);
    double ratio = smoothing_ratio(bi, delta, 1.0, 1.0, INFINITY);
    CHECK(ratio == doctest::Approx(eval_profile(0.0, 1, 2)).epsilon(1e-2));
}

TEST_CASE("smoothing ratio is nonincreasing in t on the damped cases") {
    GridSpec spec(1, 512, 16.0);
    std::mt19937_64 rng(3);
    GridField f = oracles::random_field(spec, rng);
    Semigroup heat(spec, 1), bi(spec, 2);
    double prev = 1e300;
    for (double t : {0.01, 0.1, 1.0, 10.0}) { // d=1, any p: Young with mass-1 kernel
        double r = smoothing_ratio(heat, f, t, 2.0, 2.0);
        CHECK(r <= prev * (1 + 1e-12));
        prev = r;
    }
    prev = 1e300;
    for (double t : {0.01, 0.1, 1.0, 10.0}) { // d=2, p=2: Plancherel damping
        double r = smoothing_ratio(bi, f, t, 2.0, 2.0);
        CHECK(r <= prev * (1 + 1e-12));
        prev = r;
    }
}

TEST_CASE("sweep produces a finite H and the Orlicz smoothing checks hold with it") {
    GridSpec spec(1, 1024, 48.0);
    Semigroup sg(spec, 2);
    std::mt19937_64 rng(4);
    std::vector<GridField> fields;
    for (int i = 0; i < 12; ++i) fields.push_back(oracles::random_field(spec, rng));
    std::vector<double> ps = {1.0, 2.0, 4.0, INFINITY};
    std::vector<double> ts;
    for (int i = 0; i < 8; ++i) ts.push_back(std::pow(10.0, -2.0 + 3.0 * i / 7.0));
    SmoothingSweep sweep = run_smoothing_sweep(sg, fields, ps, ts);
    CHECK(std::isfinite(sweep.H));
    CHECK(sweep.H > 0.0);
    CHECK(sweep.rows.size() == fields.size() * ts.size() * 10); // 10 ordered pairs

    int checked = 0;
    for (const auto& f : fields) {
        for (double t : ts) {
            for (double p : {1.0, 2.0}) {
                auto c2 = orlicz_smoothing_check(sg, f, t, p, sweep.H);
                CHECK(c2.holds);
                ++checked;
            }
            for (double q : {2.0, 4.0}) {
                auto c3 = orlicz_smoothing_check_iii(sg, f, t, q, sweep.H);
                CHECK(c3.holds);
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("kappa and zeta") {
    const double H = 1.0;
    CHECK_THROWS_AS(kappa(1.0, 5, 3.0, H), std::domain_error);  // N < 9
    CHECK_THROWS_AS(kappa(1.0, 9, 2.0, H), std::domain_error);  // q <= N/4

    // large t: the second branch wins and goes to 0
    CHECK(kappa(1e8, 9, 3.0, H) < kappa(1e4, 9, 3.0, H));
    CHECK(kappa(1e12, 9, 3.0, H) < 1e-2);
    CHECK(zeta(1e12, H) < 1e-4);

    double ik1 = integral_kappa(9, 3.0, H, 1e-7);
    double ik2 = integral_kappa(9, 3.0, H, 1e-10);
    CHECK(std::isfinite(ik1));
    CHECK(std::abs(ik1 - ik2) <= 1e-6 * ik2);

    double iz1 = integral_zeta(H, 1e-7);
    double iz2 = integral_zeta(H, 1e-10);
    CHECK(std::isfinite(iz1));
    CHECK(std::abs(iz1 - iz2) <= 1e-6 * iz2);
}

TEST_CASE("continuity at zero: smooth data decays, witness does not") {
    // compactly supported mollifier bump: norms decrease to < 1e-3 at t = 1e-6
    GridSpec spec(1, 4096, 8.0);
    GridField bump = sample_function(spec, [](const Point& x) {
        double s = x[0] / 2.0;
        return std::abs(s) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s * s)) : 0.0;
    });
    Semigroup sg(spec, 2);
    std::vector<double> times = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    auto norms = continuity_at_zero(sg, bump, times);
    for (std::size_t i = 1; i < norms.size(); ++i) CHECK(norms[i] < norms[i - 1]);
    CHECK(norms.back() < 1e-3);

    GridField zero(spec);
    for (double v : continuity_at_zero(sg, zero, times)) CHECK(v == 0.0);

    // discontinuity witness: no decay over t in [1e-4, 1e-1]
    GridSpec wspec(1, 8192, 4.0);
    Semigroup wsg(wspec, 2);
    GridField u0 = witness_function(Witness::Discontinuity, wspec);
    std::vector<double> wt = {1e-1, 1e-2, 1e-3, 1e-4};
    auto wnorms = continuity_at_zero(wsg, u0, wt);
    double mn = 1e300, mx = 0.0;
    for (double v : wnorms) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    CHECK(mn >= 0.5 * mx);
}
