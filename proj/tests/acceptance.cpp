// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <annulus/error_harness.hpp>
#include <annulus/torsion.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace annulus;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> body;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Outcome exact_d4()
{
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> inner(0.05, 5.0), ratio(1.01, 20.0);
    double worst = 0;
    for(int i = 0; i < 20; ++i) {
        const double r = inner(gen), R = r * ratio(gen);
        const double c = torsion_constant(Annulus::make(r, R, 4)).c_value;
        worst = std::max(worst, rel(c, (R - r) * (R - r) / 8));
    }
    return {worst <= 1e-10, fmt("max relative error %.3g", worst)};
}

Outcome grid_oracle()
{
    const int n = 1000000;
    double worst = 0;
    for(int d : {2, 3, 5, 6})
        for(double rho : {0.1, 0.5, 0.9}) {
            const Annulus a{rho, 1.0, d};
            double m = 0;
            for(int i = 0; i < n; ++i)
                m = std::max(m, torsion_function(rho + (1 - rho) * i / (n - 1), a));
            worst = std::max(worst, rel(torsion_constant(a).c_value, m));
        }
    return {worst <= 1e-6, fmt("max relative deviation from grid max %.3g", worst)};
}

Outcome limits_and_shapes()
{
    const double near_one = 1 - 1e-9;
    double dev = 0;
    dev = std::max(dev, std::abs(h_d(0.0, 3) - 1));
    dev = std::max(dev, std::abs(h_d(near_one, 3) - 0.75));
    dev = std::max(dev, std::abs(h_d(0.0, 2) - 1));
    dev = std::max(dev, std::abs(h_d(near_one, 2) - 0.5));
    for(int d = 3; d <= 8; ++d)
        dev = std::max(dev, std::abs(b_d(near_one, d) - 2.0 / (d - 2)));

    bool shapes = true;
    for(int d = 2; d <= 12; ++d) {
        const auto expected = d <= 3 ? Monotonicity::decreasing
                              : d == 4 ? Monotonicity::constant
                                       : Monotonicity::increasing;
        shapes = shapes && verify_hd_shape(d, 1000).shape == expected;
    }
    return {dev <= 1e-6 && shapes,
            fmt("max limit deviation %.3g, shapes ", dev) + (shapes ? "as expected" : "WRONG")};
}

Outcome two_sided()
{
    // the d = 4 bounds coincide with c, so allow rounding of the product
    const double tol = 1e-12;
    int violations = 0;
    for(int d = 2; d <= 10; ++d)
        for(int i = 0; i < 100; ++i) {
            const double rho = (i + 1) / 101.0;
            const auto rep = torsion_constant(Annulus{rho, 1.0, d});
            const double w = (1 - rho) * (1 - rho);
            const double lo = std::min(1.0 / (2 * d), 0.125) * w, hi = std::max(1.0 / (2 * d), 0.125) * w;
            if(rep.c_value < lo * (1 - tol) || rep.c_value > hi * (1 + tol))
                ++violations;
        }
    return {violations == 0, fmt("%.0f violations over 900 annuli", violations)};
}

Outcome reproduction()
{
    const AnnularPartition p({1.0, 1.5, 2.0});
    double worst = 0;
    int checked = 0;
    for(int d : {2, 3, 4})
        for(const auto& F : standard_suite(d)) {
            if(F.harmonic) {
                worst = std::max(worst, sup_norm_error(F, build_spline(F, p, 2)));
                ++checked;
            }
            if(F.biharmonic) {
                worst = std::max(worst, sup_norm_error(F, build_spline(F, p, 4)));
                ++checked;
            }
        }
    return {worst < 1e-8, fmt("%.0f reproductions, worst grid-sup %.3g", checked, worst)};
}

Outcome sharpness()
{
    const AnnularPartition p({1.0, 2.0});
    double sup_dev = 0, point_dev = 0;
    for(int d : {2, 3, 4}) {
        const auto F = standard_field("r2", d);
        const auto S = build_spline(F, p, 2);
        const Annulus a{1.0, 2.0, d};
        const double c = torsion_constant(a).c_value;
        sup_dev = std::max(sup_dev, rel(sup_norm_error(F, S), 2 * d * c));

        const auto dirs = sup_directions(d, {});
        std::vector<double> x(d);
        for(int i = 0; i <= 20; ++i) {
            const double r = 1.0 + i / 20.0;
            const double T = torsion_function(r, a);
            for(std::size_t j = 0; j < dirs.size(); j += d) {
                for(int m = 0; m < d; ++m)
                    x[m] = r * dirs[j + m];
                point_dev = std::max(point_dev, std::abs(F.value(x) - eval_expansion(S, x) + 2 * d * T));
            }
        }
    }
    return {sup_dev <= 1e-6 && point_dev <= 1e-7,
            fmt("sup vs 2d c relative %.3g, pointwise vs -2d T0 %.3g", sup_dev, point_dev)};
}

Outcome rates()
{
    const AnnularPartition base({1.0, 2.0});
    double harm_dev = 0, bi_lo = 1e300, bi_hi = -1e300;
    bool complete = true;
    for(int d : {2, 3}) {
        for(const auto& row : convergence_study(standard_field("r2", d), base, 4, StudyKind::harmonic_sup))
            if(row.level > 0) {
                complete = complete && row.rate.has_value();
                harm_dev = std::max(harm_dev, std::abs(row.rate.value_or(0) - 2.0));
            }
        const auto bi = convergence_study(standard_field("r4", d), base, 4, StudyKind::biharmonic_l2);
        complete = complete && bi.back().rate.has_value();
        bi_lo = std::min(bi_lo, bi.back().rate.value_or(0));
        bi_hi = std::max(bi_hi, bi.back().rate.value_or(0));
    }
    return {complete && harm_dev <= 0.05 && bi_lo >= 3.7 && bi_hi <= 4.5,
            fmt("harmonic max |rate - 2| %.4f, biharmonic terminal rates in [%.4f, %.4f]", harm_dev, bi_lo, bi_hi)};
}

Outcome certificates()
{
    const std::vector<std::vector<double>> partitions{{1, 2}, {1, 1.5, 2}, {1, 1.25, 1.5, 1.75, 2}};
    double worst = 0;
    int count = 0, failed = 0;
    for(int d : {2, 3})
        for(const auto& radii : partitions) {
            const AnnularPartition p(radii);
            for(const auto& F : standard_suite(d))
                for(auto kind : {BoundKind::harmonic_sup, BoundKind::biharmonic_l2}) {
                    const auto c = bound_certificate(F, p, kind);
                    ++count;
                    worst = std::max(worst, c.ratio);
                    if(!c.passed || c.ratio > 1 + kCertificateSlack)
                        ++failed;
                }
        }
    return {failed == 0, fmt("%.0f certificates, %.0f failed, worst ratio %.4f", count, failed, worst)};
}

Outcome orthogonality()
{
    double worst = 0;
    for(int d : {2, 3})
        for(const auto& radii : {std::vector<double>{1, 1.5, 2}, std::vector<double>{1, 1.25, 1.5, 1.75, 2}})
            for(const char* name : {"r4", "r2x1"}) {
                const auto rep = orthogonality_check(standard_field(name, d), AnnularPartition(radii), modes_up_to(4, d));
                worst = std::max(worst, rep.max_residual);
            }
    return {worst <= 1e-8, fmt("max normalized residual %.3g", worst)};
}

Outcome lk_consistency()
{
    const Segment dom{1.0, 2.0};
    const std::vector<double> samples{1.1, 1.3, 1.5, 1.7, 1.9};
    double worst = 0;
    for(int d : {2, 3})
        for(const auto& F : standard_suite(d))
            for(const auto& mode : modes_up_to(3, d))
                worst = std::max(worst, lk_consistency_check(F, mode, samples, dom));
    return {worst <= 1e-5, fmt("max relative deviation %.3g", worst)};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "exact constant in d=4", 1, exact_d4},
        {2, "closed form matches grid maximization", 5, grid_oracle},
        {3, "H_d and B_d limits, H_d monotonicity", 2, limits_and_shapes},
        {4, "two-sided bounds on c_d", 2, two_sided},
        {5, "reproduction of harmonic and biharmonic fields", 30, reproduction},
        {6, "sharpness identity for |x|^2", 10, sharpness},
        {7, "convergence rates", 60, rates},
        {8, "error bound certificates", 60, certificates},
        {9, "orthogonality of the Laplacian error", 30, orthogonality},
        {10, "L_k consistency", 10, lk_consistency},
    };

    int failures = 0;
    for(const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch(const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = o.ok && secs < c.limit_s;
        failures += !ok;
        std::printf("AC%-2d %s  %s: %s [%.2f s, limit %.0f s]\n", c.id, ok ? "PASS" : "FAIL", c.title,
                    o.detail.c_str(), secs, c.limit_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
