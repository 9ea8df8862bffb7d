#include <annulus/error_harness.hpp>

#include <annulus/errors.hpp>
#include <annulus/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

namespace annulus {

namespace {

using std::numbers::pi;

// Y_{k,ell} for every mode with k <= K at a fixed set of directions.
struct DirectionTable {
    int d = 0;
    std::size_t count = 0;
    std::size_t modes = 0;
    std::vector<double> dirs;  // row-major
    std::vector<double> Y;     // direction-major

    DirectionTable(int dim, int K, std::vector<double> directions)
        : d(dim), dirs(std::move(directions))
    {
        count = dirs.size() / static_cast<std::size_t>(d);
        modes = mode_count(K, d);
        Y.resize(count * modes);
        for(std::size_t i = 0; i < count; ++i)
            eval_harmonics(K, dir(i), d, std::span<double>(Y.data() + i * modes, modes));
    }

    std::span<const double> dir(std::size_t i) const
    {
        return {dirs.data() + i * static_cast<std::size_t>(d), static_cast<std::size_t>(d)};
    }

    double combine(std::size_t i, const std::vector<double>& radial) const
    {
        const double* y = Y.data() + i * modes;
        double s = 0.0;
        for(std::size_t m = 0; m < modes; ++m)
            s += radial[m] * y[m];
        return s;
    }
};

// Golden-section maximization of a unimodal-looking g on [a, b].
double golden_max(const std::function<double(double)>& g, double a, double b)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), e = a + inv_phi * (b - a);
    double gc = g(c), ge = g(e);
    double best = std::max({g(a), g(b), gc, ge});
    for(int it = 0; it < 80 && (b - a) > 1e-14 * b; ++it) {
        if(gc > ge) {
            b = e; e = c; ge = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c; c = e; gc = ge;
            e = a + inv_phi * (b - a);
            ge = g(e);
        }
        best = std::max({best, gc, ge});
    }
    return best;
}

std::vector<double> radial_grid(const AnnularPartition& part, int per_segment)
{
    if(per_segment < 2)
        throw ValidationError("sup grid needs at least 2 radial points per segment");
    std::vector<double> r;
    for(std::size_t j = 0; j < part.segment_count(); ++j) {
        const Segment s = part.segment(j);
        for(int i = 0; i < per_segment - 1; ++i)
            r.push_back(s.r_lo + s.width() * i / (per_segment - 1));
    }
    r.push_back(part.outer());
    return r;
}

// Grid-sup of |g(r, i)| over radii x directions, with an optional golden-section
// polish in r along the ray of the largest sample.
double grid_sup(const std::vector<double>& radii, std::size_t n_dirs,
                const std::function<void(double, std::vector<double>&)>& eval_ray, bool polish)
{
    std::vector<double> vals(n_dirs);
    double best = 0.0;
    std::size_t best_r = 0, best_dir = 0;
    for(std::size_t ir = 0; ir < radii.size(); ++ir) {
        eval_ray(radii[ir], vals);
        for(std::size_t i = 0; i < n_dirs; ++i) {
            const double a = std::abs(vals[i]);
            if(a > best) {
                best = a;
                best_r = ir;
                best_dir = i;
            }
        }
    }
    if(!polish || radii.size() < 3 || best == 0.0)
        return best;
    const double lo = radii[best_r == 0 ? 0 : best_r - 1];
    const double hi = radii[std::min(best_r + 1, radii.size() - 1)];
    const auto g = [&](double r) {
        eval_ray(r, vals);
        return std::abs(vals[best_dir]);
    };
    return std::max(best, golden_max(g, lo, hi));
}

// Composite Gauss-Legendre nodes in r with weights including r^{d-1}.
void radial_rule(const AnnularPartition& part, int d, int n, std::vector<double>& r, std::vector<double>& w)
{
    if(n < 1)
        throw ValidationError("L2 rule needs at least one radial point per segment");
    r.clear();
    w.clear();
    for(std::size_t j = 0; j < part.segment_count(); ++j) {
        const Segment s = part.segment(j);
        const GaussRule g = gauss_legendre(n, s.r_lo, s.r_hi);
        for(int i = 0; i < n; ++i) {
            r.push_back(g.nodes[i]);
            w.push_back(g.weights[i] * std::pow(g.nodes[i], d - 1));
        }
    }
}

int field_degree(const TestField& F, int fallback)
{
    return F.angular_degree >= 0 ? F.angular_degree : fallback;
}

int resolve_truncation(const SplineSettings& s, int d)
{
    const int K = s.truncation < 0 ? default_truncation(d) : s.truncation;
    if(d > 3 && K > 0)
        throw ValidationError("only truncation 0 is available for d > 3");
    return K;
}

double field_scale(const TestField& F, const AnnularPartition& part, const SupGrid& grid)
{
    SupGrid coarse = grid;
    coarse.radial_per_segment = std::min(grid.radial_per_segment, 20);
    coarse.polish = false;
    return sup_norm(F.value, part, F.dimension, coarse);
}

}  // namespace

// ---------------------------------------------------------------------------
// norms

double l2_norm(const PointFunction& f, const AnnularPartition& part, int d, const L2Rule& rule)
{
    std::vector<double> r, w;
    radial_rule(part, d, rule.radial_points, r, w);
    const SphereQuadrature quad = sphere_quadrature(d, rule.sphere_exactness);
    std::vector<double> x(d);
    double sum = 0.0;
    for(std::size_t q = 0; q < r.size(); ++q)
        for(std::size_t i = 0; i < quad.size(); ++i) {
            const auto th = quad.node(i);
            for(int c = 0; c < d; ++c)
                x[c] = r[q] * th[c];
            const double v = f(x);
            sum += w[q] * quad.weights[i] * v * v;
        }
    return std::sqrt(sum);
}

double l2_error(const TestField& F, const SplineExpansion& S, const L2Rule& rule)
{
    const int d = S.dimension();
    if(F.dimension != d)
        throw ValidationError("l2_error: dimension mismatch");
    const int K = S.truncation();
    const int deg = std::max(K, field_degree(F, K));
    const SphereQuadrature quad = sphere_quadrature(d, std::max(rule.sphere_exactness, 2 * deg + 4));
    const DirectionTable table(d, K, quad.nodes);

    std::vector<double> r, w;
    radial_rule(S.partition(), d, rule.radial_points, r, w);
    std::vector<double> radial(table.modes), x(d);
    double sum = 0.0;
    for(std::size_t q = 0; q < r.size(); ++q) {
        S.radial_values(r[q], radial);
        for(std::size_t i = 0; i < quad.size(); ++i) {
            const auto th = quad.node(i);
            for(int c = 0; c < d; ++c)
                x[c] = r[q] * th[c];
            const double e = F.value(x) - table.combine(i, radial);
            sum += w[q] * quad.weights[i] * e * e;
        }
    }
    return std::sqrt(sum);
}

std::vector<double> sup_directions(int d, const SupGrid& grid)
{
    std::vector<double> dirs;
    if(d == 2) {
        const int n = grid.angular > 0 ? grid.angular : 64;
        for(int i = 0; i < n; ++i) {
            dirs.push_back(std::cos(2.0 * pi * i / n));
            dirs.push_back(std::sin(2.0 * pi * i / n));
        }
    } else if(d == 3) {
        const int n = grid.angular > 0 ? grid.angular : 24;
        for(int i = 0; i < n; ++i) {
            const double th = (i + 0.5) * pi / n;
            for(int j = 0; j < 2 * n; ++j) {
                const double ph = pi * j / n;
                dirs.push_back(std::sin(th) * std::cos(ph));
                dirs.push_back(std::sin(th) * std::sin(ph));
                dirs.push_back(std::cos(th));
            }
        }
    } else {
        dirs = sphere_quadrature(d, 4).nodes;
    }
    return dirs;
}

double sup_norm_error(const TestField& F, const SplineExpansion& S, const SupGrid& grid)
{
    const int d = S.dimension();
    if(F.dimension != d)
        throw ValidationError("sup_norm_error: dimension mismatch");
    const DirectionTable table(d, S.truncation(), sup_directions(d, grid));
    std::vector<double> radial(table.modes), x(d);
    const auto ray = [&](double r, std::vector<double>& out) {
        S.radial_values(r, radial);
        for(std::size_t i = 0; i < table.count; ++i) {
            const auto th = table.dir(i);
            for(int c = 0; c < d; ++c)
                x[c] = r * th[c];
            out[i] = F.value(x) - table.combine(i, radial);
        }
    };
    return grid_sup(radial_grid(S.partition(), grid.radial_per_segment), table.count, ray, grid.polish);
}

double sup_norm(const PointFunction& f, const AnnularPartition& part, int d, const SupGrid& grid)
{
    const std::vector<double> dirs = sup_directions(d, grid);
    const std::size_t n = dirs.size() / static_cast<std::size_t>(d);
    std::vector<double> x(d);
    const auto ray = [&](double r, std::vector<double>& out) {
        for(std::size_t i = 0; i < n; ++i) {
            for(int c = 0; c < d; ++c)
                x[c] = r * dirs[i * d + c];
            out[i] = f(x);
        }
    };
    return grid_sup(radial_grid(part, grid.radial_per_segment), n, ray, grid.polish);
}

// ---------------------------------------------------------------------------
// studies and certificates

const char* to_string(StudyKind k)
{
    switch(k) {
    case StudyKind::harmonic_sup: return "harmonic_sup";
    case StudyKind::harmonic_l2: return "harmonic_l2";
    case StudyKind::biharmonic_l2: return "biharmonic_l2";
    }
    return "?";
}

std::optional<StudyKind> parse_study_kind(std::string_view s)
{
    for(auto k : {StudyKind::harmonic_sup, StudyKind::harmonic_l2, StudyKind::biharmonic_l2})
        if(s == to_string(k))
            return k;
    return std::nullopt;
}

int study_order(StudyKind k) { return k == StudyKind::biharmonic_l2 ? 4 : 2; }

const char* to_string(BoundKind k)
{
    return k == BoundKind::harmonic_sup ? "harmonic_sup" : "biharmonic_l2";
}

std::optional<BoundKind> parse_bound_kind(std::string_view s)
{
    if(s == "harmonic_sup")
        return BoundKind::harmonic_sup;
    if(s == "biharmonic_l2")
        return BoundKind::biharmonic_l2;
    return std::nullopt;
}

SplineExpansion build_spline(const TestField& F, const AnnularPartition& part, int order,
                             const SplineSettings& settings)
{
    const int d = F.dimension;
    const int K = resolve_truncation(settings, d);
    const int exactness = settings.exactness < 0 ? default_exactness(K) : settings.exactness;
    const SphereQuadrature quad = sphere_quadrature(d, exactness);
    if(order == 2)
        return interpolate_harmonic(F, part, d, K, quad);
    if(order == 4)
        return interpolate_biharmonic(F, part, d, K, quad);
    throw ValidationError("spline order must be 2 or 4, got " + std::to_string(order));
}

std::vector<ConvergenceRow> convergence_study(const TestField& F, const AnnularPartition& base, int levels,
                                              StudyKind which, const SplineSettings& settings)
{
    if(levels < 3)
        throw ValidationError("convergence study needs at least 3 levels");
    const double floor = 1e-10 * std::max(1.0, field_scale(F, base, settings.sup_grid));

    std::vector<ConvergenceRow> rows;
    AnnularPartition part = base;
    for(int level = 0; level < levels; ++level) {
        const SplineExpansion S = build_spline(F, part, study_order(which), settings);
        ConvergenceRow row;
        row.level = level;
        row.h_max = part.h_max();
        row.error = which == StudyKind::harmonic_sup ? sup_norm_error(F, S, settings.sup_grid)
                                                     : l2_error(F, S, settings.l2_rule);
        if(!rows.empty()) {
            const auto& prev = rows.back();
            if(prev.error > floor && row.error > floor)
                row.rate = std::log(prev.error / row.error) / std::log(prev.h_max / row.h_max);
        }
        rows.push_back(row);
        if(level + 1 < levels)
            part = part.bisected();
    }
    return rows;
}

BoundCertificate bound_certificate(const TestField& F, const AnnularPartition& part, BoundKind which,
                                   const SplineSettings& settings)
{
    const int d = F.dimension;
    const double C = error_constant(d);
    const double h = part.h_max();
    const double scale = std::max(1.0, field_scale(F, part, settings.sup_grid));

    BoundCertificate cert;
    cert.kind = which;
    if(which == BoundKind::harmonic_sup) {
        const SplineExpansion S = build_spline(F, part, 2, settings);
        cert.lhs = sup_norm_error(F, S, settings.sup_grid);
        cert.rhs = C * h * h * sup_norm(F.laplacian, part, d, settings.sup_grid);
    } else {
        const SplineExpansion S = build_spline(F, part, 4, settings);
        cert.lhs = l2_error(F, S, settings.l2_rule);
        const double h4 = C * C * h * h * h * h;
        cert.rhs = h4 * l2_norm(F.bilaplacian, part, d, settings.l2_rule);
        const double sup_rhs = h4 * sup_norm(F.bilaplacian, part, d, settings.sup_grid);
        if(sup_rhs > 0.0)
            cert.sup_ratio = sup_norm_error(F, S, settings.sup_grid) / sup_rhs;
    }
    cert.trivial = cert.rhs <= 1e-12 * scale;
    if(cert.trivial) {
        cert.passed = cert.lhs <= 1e-8 * scale;
        cert.ratio = cert.passed ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
        cert.ratio = cert.lhs / cert.rhs;
        cert.passed = cert.ratio <= 1.0 + kCertificateSlack;
    }
    return cert;
}

// ---------------------------------------------------------------------------
// orthogonality and L_k consistency

std::vector<Probe> random_probes(const std::vector<ModeIndex>& modes, const AnnularPartition& part,
                                 std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Probe> out;
    out.reserve(modes.size());
    for(const auto& m : modes) {
        Probe p{m, std::vector<double>(part.node_count())};
        for(double& v : p.node_values)
            v = dist(rng);
        out.push_back(std::move(p));
    }
    return out;
}

OrthogonalityReport orthogonality_check(const TestField& F, const AnnularPartition& part,
                                        const std::vector<Probe>& probes, const SplineSettings& settings)
{
    const int d = F.dimension;
    const SplineExpansion S = build_spline(F, part, 4, settings);
    const SplineExpansion LS = laplacian(S);
    const int K = S.truncation();

    int probe_degree = 0;
    for(const auto& p : probes)
        probe_degree = std::max(probe_degree, p.mode.k);
    const int deg = std::max({K, probe_degree, field_degree(F, K)});
    const SphereQuadrature quad = sphere_quadrature(d, std::max(settings.l2_rule.sphere_exactness, 2 * deg + 4));
    const DirectionTable spline_table(d, K, quad.nodes);
    const DirectionTable probe_table(d, probe_degree, quad.nodes);

    std::vector<double> r, w;
    radial_rule(part, d, settings.l2_rule.radial_points, r, w);

    // e = Delta F - Delta I4 F at every quadrature point, point-major.
    std::vector<double> e(r.size() * quad.size());
    double e2 = 0.0, lap2 = 0.0, f2 = 0.0;
    {
        std::vector<double> radial(spline_table.modes), x(d);
        for(std::size_t q = 0; q < r.size(); ++q) {
            LS.radial_values(r[q], radial);
            for(std::size_t i = 0; i < quad.size(); ++i) {
                const auto th = quad.node(i);
                for(int c = 0; c < d; ++c)
                    x[c] = r[q] * th[c];
                const double lap = F.laplacian(x);
                const double f = F.value(x);
                const double v = lap - spline_table.combine(i, radial);
                const double wt = w[q] * quad.weights[i];
                e[q * quad.size() + i] = v;
                e2 += wt * v * v;
                lap2 += wt * lap * lap;
                f2 += wt * f * f;
            }
        }
    }

    OrthogonalityReport rep;
    rep.error_norm = std::sqrt(e2);
    const double outer2 = part.outer() * part.outer();
    rep.trivially_orthogonal = rep.error_norm <= 1e-9 * std::max(std::sqrt(lap2), std::sqrt(f2) / outer2);

    for(const auto& p : probes) {
        const RadialSpline u = fit_harmonic_mode(p.node_values, p.mode.k, d, part, p.mode.ell);
        const std::size_t m = flat_index(p.mode, d);
        double dot = 0.0, phi2 = 0.0;
        for(std::size_t q = 0; q < r.size(); ++q) {
            const double ur = u(r[q]);
            for(std::size_t i = 0; i < quad.size(); ++i) {
                const double phi = ur * probe_table.Y[i * probe_table.modes + m];
                const double wt = w[q] * quad.weights[i];
                dot += wt * e[q * quad.size() + i] * phi;
                phi2 += wt * phi * phi;
            }
        }
        if(phi2 == 0.0) {
            rep.skipped.push_back(p.mode);
            continue;
        }
        const double res = rep.trivially_orthogonal ? 0.0 : std::abs(dot) / (rep.error_norm * std::sqrt(phi2));
        rep.residuals.push_back(res);
        rep.max_residual = std::max(rep.max_residual, res);
    }
    return rep;
}

OrthogonalityReport orthogonality_check(const TestField& F, const AnnularPartition& part,
                                        const std::vector<ModeIndex>& probe_modes,
                                        const SplineSettings& settings, std::uint64_t seed)
{
    return orthogonality_check(F, part, random_probes(probe_modes, part, seed), settings);
}

double lk_consistency_check(const TestField& F, ModeIndex mode, const std::vector<double>& r_samples,
                            const Segment& domain, int exactness)
{
    const int d = F.dimension;
    flat_index(mode, d);
    const int deg = std::max(mode.k, field_degree(F, 8));
    const SphereQuadrature quad = sphere_quadrature(d, exactness < 0 ? default_exactness(deg) : exactness);

    TestField lapF = F;
    lapF.value = F.laplacian;
    const SampledRadialFunction g{[&](double s) { return fourier_laplace_coefficient(F, mode, s, quad); },
                                  domain.r_lo, domain.r_hi};
    const double h = default_fd_step(domain.width());

    double worst = 0.0;
    std::vector<double> x(d);
    for(double r : r_samples) {
        const double b = fourier_laplace_coefficient(lapF, mode, r, quad);
        double nf = 0.0, nl = 0.0;
        for(std::size_t i = 0; i < quad.size(); ++i) {
            const auto th = quad.node(i);
            for(int c = 0; c < d; ++c)
                x[c] = r * th[c];
            nf += quad.weights[i] * std::pow(F.value(x), 2);
            nl += quad.weights[i] * std::pow(F.laplacian(x), 2);
        }
        const double scale = std::max(std::abs(b), std::sqrt(nf) / (r * r) + std::sqrt(nl));

        double a = lk_apply(g, mode.k, d, r, h);
        // Two step sizes disagreeing means truncation error is visible: extrapolate.
        if(std::abs(a - lk_apply(g, mode.k, d, r, 0.5 * h)) > 1e-7 * scale)
            a = lk_apply_richardson(g, mode.k, d, r, h);
        worst = std::max(worst, scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b));
    }
    return worst;
}

}  // namespace annulus
