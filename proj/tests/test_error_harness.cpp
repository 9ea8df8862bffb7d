#include <doctest.h>

#include <annulus/error_harness.hpp>
#include <annulus/errors.hpp>

#include <cmath>
#include <numbers>

using namespace annulus;
using std::numbers::pi;

TEST_CASE("L2 norm closed forms")
{
    const AnnularPartition p({1.0, 2.0});
    const PointFunction one = [](std::span<const double>) { return 1.0; };
    CHECK(l2_norm(one, p, 3) == doctest::Approx(std::sqrt(4 * pi / 3 * 7)).epsilon(1e-10));

    const PointFunction radius = [](std::span<const double> x) { return std::hypot(x[0], x[1]); };
    CHECK(l2_norm(radius, p, 2) == doctest::Approx(std::sqrt(2 * pi * 15 / 4)).epsilon(1e-10));

    // the norm does not depend on how the annulus is split
    CHECK(l2_norm(one, AnnularPartition({1.0, 1.2, 1.7, 2.0}), 3) == doctest::Approx(l2_norm(one, p, 3)).epsilon(1e-13));
}

TEST_CASE("L2 norm of r^2 Y agrees with its radial coefficient")
{
    // ||r^2 Y_{2,1}||^2 = int_1^2 r^4 r^{d-1} dr
    for(int d : {2, 3}) {
        const auto F = standard_field("solid2", d);
        const double expected = std::sqrt((std::pow(2.0, d + 4) - 1) / (d + 4));
        CHECK(l2_norm(F.value, AnnularPartition({1.0, 2.0}), d) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("sup-norm error")
{
    const AnnularPartition p({1.0, 2.0});
    const SplineSettings s;
    const auto x1 = standard_field("x1", 3);
    CHECK(sup_norm_error(x1, build_spline(x1, p, 2, s)) < 1e-9);

    const auto r2 = standard_field("r2", 3);
    const double c = torsion_constant(Annulus{1, 2, 3}).c_value;
    CHECK(sup_norm_error(r2, build_spline(r2, p, 2, s)) == doctest::Approx(6 * c).epsilon(1e-6));

    // grid refinement barely moves the value for a smooth field
    const auto e = standard_field("exp_radial", 3);
    const auto S = build_spline(e, AnnularPartition({1.0, 1.5, 2.0}), 2, s);
    SupGrid fine;
    fine.radial_per_segment = 400;
    fine.angular = 48;
    CHECK(std::abs(sup_norm_error(e, S) - sup_norm_error(e, S, fine)) < 1e-6);

    SupGrid bad;
    bad.radial_per_segment = 1;
    CHECK_THROWS_AS(sup_norm_error(e, S, bad), ValidationError);
}

TEST_CASE("sup norm of a known function")
{
    const PointFunction f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
    CHECK(sup_norm(f, AnnularPartition({1.0, 3.0}), 2) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(sup_directions(2, {}).size() == 2 * 64);
    CHECK(sup_directions(3, {}).size() == 3 * 24 * 48);
}

TEST_CASE("convergence studies")
{
    const AnnularPartition base({1.0, 2.0});
    const auto rows = convergence_study(standard_field("r2", 3), base, 4, StudyKind::harmonic_sup);
    REQUIRE(rows.size() == 4);
    CHECK_FALSE(rows[0].rate.has_value());
    for(std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].rate.has_value());
        CHECK(std::abs(*rows[i].rate - 2.0) <= 0.05);
        CHECK(rows[i].h_max == doctest::Approx(rows[i - 1].h_max / 2));
    }
    CHECK(std::abs(*rows.back().rate - 2.0) <= 0.01);

    const auto bi = convergence_study(standard_field("r4", 3), base, 4, StudyKind::biharmonic_l2);
    REQUIRE(bi.back().rate.has_value());
    CHECK(*bi.back().rate >= 3.7);
    CHECK(*bi.back().rate <= 4.5);

    const auto l2 = convergence_study(standard_field("exp_radial", 2), base, 3, StudyKind::harmonic_l2);
    CHECK(*l2.back().rate == doctest::Approx(2.0).epsilon(0.15));

    const auto flat = convergence_study(standard_field("x1", 3), base, 3, StudyKind::harmonic_sup);
    for(const auto& r : flat) {
        CHECK(r.error < 1e-12);
        CHECK_FALSE(r.rate.has_value());
    }
    CHECK_THROWS_AS(convergence_study(standard_field("r2", 3), base, 1, StudyKind::harmonic_sup), ValidationError);

    CHECK(parse_study_kind("biharmonic_l2") == StudyKind::biharmonic_l2);
    CHECK_FALSE(parse_study_kind("l3").has_value());
    CHECK(study_order(StudyKind::harmonic_l2) == 2);
}

TEST_CASE("bound certificates")
{
    const AnnularPartition p({1.0, 2.0});
    const auto c4 = bound_certificate(standard_field("r2", 4), p, BoundKind::harmonic_sup);
    CHECK(c4.ratio == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(c4.passed);

    // d = 3, rho = 1/2: lhs = 6 c = (R - r)^2 H_3(1/2), rhs = C_3 (R - r)^2 sup|Delta F| = 6 C_3 (R - r)^2
    const auto c3 = bound_certificate(standard_field("r2", 3), p, BoundKind::harmonic_sup);
    CHECK(c3.ratio < 1.0);
    CHECK(c3.ratio == doctest::Approx(h_d(0.5, 3) / (6 * error_constant(3))).epsilon(1e-4));

    for(auto kind : {BoundKind::harmonic_sup, BoundKind::biharmonic_l2}) {
        const auto t = bound_certificate(standard_field("solid2", 3), p, kind);
        CHECK(t.trivial);
        CHECK(t.passed);
        CHECK(t.lhs < 1e-10);
    }

    const auto b = bound_certificate(standard_field("r4", 3), AnnularPartition({1.0, 1.5, 2.0}), BoundKind::biharmonic_l2);
    CHECK_FALSE(b.trivial);
    CHECK(b.ratio < 1.0 + kCertificateSlack);
    CHECK(b.sup_ratio.has_value());

    // truncating below the field's degree drops the whole field and the estimate fails
    SplineSettings low;
    low.truncation = 0;
    const auto f = bound_certificate(standard_field("r2x1", 3), p, BoundKind::harmonic_sup, low);
    CHECK_FALSE(f.passed);

    CHECK(parse_bound_kind("harmonic_sup") == BoundKind::harmonic_sup);
    CHECK_FALSE(parse_bound_kind("sup").has_value());
}

TEST_CASE("orthogonality of the Laplacian error to harmonic splines")
{
    const AnnularPartition p({1.0, 1.5, 2.0});
    const std::vector<ModeIndex> probes{{0, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 3}, {2, 5}};
    const auto rep = orthogonality_check(standard_field("r4", 3), p, probes);
    CHECK_FALSE(rep.trivially_orthogonal);
    CHECK(rep.residuals.size() == probes.size());
    CHECK(rep.max_residual < 1e-8);

    const auto triv = orthogonality_check(standard_field("r2x1", 3), p, probes);
    CHECK(triv.trivially_orthogonal);
    CHECK(triv.max_residual == 0.0);

    std::vector<Probe> with_zero = random_probes(probes, p);
    with_zero.push_back({{1, 1}, std::vector<double>(3, 0.0)});
    const auto skip = orthogonality_check(standard_field("exp_radial", 3), p, with_zero);
    CHECK(skip.skipped.size() == 1);
    CHECK(skip.residuals.size() == probes.size());
    CHECK(skip.max_residual < 1e-8);

    // probes are reproducible from the seed
    const auto a = random_probes(probes, p, 1), b = random_probes(probes, p, 1);
    CHECK(a[3].node_values == b[3].node_values);
    CHECK(random_probes(probes, p, 2)[3].node_values != a[3].node_values);
}

TEST_CASE("L_k consistency")
{
    const Segment dom{1.0, 2.0};
    const std::vector<double> samples{1.1, 1.5, 1.9};
    CHECK(lk_consistency_check(standard_field("r4", 3), {0, 1}, samples, dom) < 1e-5);
    CHECK(lk_consistency_check(standard_field("solid2", 3), {2, 1}, samples, dom) < 1e-5);
    CHECK(lk_consistency_check(standard_field("r2x1", 3), {1, 2}, samples, dom) < 1e-5);
    CHECK_THROWS_AS(lk_consistency_check(standard_field("r4", 3), {0, 1}, {1.001}, dom), DomainError);
}
