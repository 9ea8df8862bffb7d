#include <annulus/spherical_harmonics.hpp>

#include <annulus/errors.hpp>
#include <annulus/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace annulus {

namespace {

constexpr double kUnitTolerance = 1e-12;

void check_dimension(int d)
{
    if(d < 2)
        throw ValidationError("spherical harmonics: unsupported dimension " + std::to_string(d));
}

// Degree >= 1 harmonics are implemented for the circle and the 2-sphere only;
// higher dimensions support the constant (degree 0) channel.
void check_degree(int k, int d)
{
    check_dimension(d);
    if(k < 0)
        throw ValidationError("spherical harmonics: negative degree");
    if(k > 0 && d > 3)
        throw ValidationError("spherical harmonics: degree " + std::to_string(k) +
                              " unsupported in dimension " + std::to_string(d));
}

}  // namespace

double sphere_area(int d)
{
    check_dimension(d);
    return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

int basis_dimension(int k, int d)
{
    check_degree(k, d);
    if(d == 2)
        return k == 0 ? 1 : 2;
    return 2 * k + 1;
}

std::size_t mode_count(int K, int d)
{
    check_degree(K, d);
    if(d == 2)
        return static_cast<std::size_t>(2 * K + 1);
    return static_cast<std::size_t>((K + 1) * (K + 1));
}

std::size_t flat_index(ModeIndex mode, int d)
{
    const int a = basis_dimension(mode.k, d);
    if(mode.ell < 1 || mode.ell > a)
        throw ValidationError("mode index ell=" + std::to_string(mode.ell) +
                              " out of range for k=" + std::to_string(mode.k));
    if(d == 2)
        return mode.k == 0 ? 0 : static_cast<std::size_t>(2 * mode.k - 2 + mode.ell);
    return static_cast<std::size_t>(mode.k * mode.k + mode.ell - 1);
}

std::vector<ModeIndex> modes_up_to(int K, int d)
{
    std::vector<ModeIndex> out;
    out.reserve(mode_count(K, d));
    for(int k = 0; k <= K; ++k)
        for(int ell = 1; ell <= basis_dimension(k, d); ++ell)
            out.push_back({k, ell});
    return out;
}

namespace {

double check_unit(std::span<const double> theta, int d)
{
    check_dimension(d);
    if(theta.size() < static_cast<std::size_t>(d))
        throw ValidationError("direction has fewer components than the dimension");
    double norm2 = 0.0;
    for(int i = 0; i < d; ++i)
        norm2 += theta[i] * theta[i];
    const double norm = std::sqrt(norm2);
    if(!(std::abs(norm - 1.0) <= kUnitTolerance))
        throw ValidationError("direction is not a unit vector (|theta| = " + std::to_string(norm) + ")");
    return norm;
}

}  // namespace

std::array<double, 3> unit_direction(std::span<const double> theta, int d)
{
    if(d > 3)
        throw ValidationError("unit_direction: dimension above 3");
    const double norm = check_unit(theta, d);
    std::array<double, 3> u{0.0, 0.0, 0.0};
    for(int i = 0; i < d; ++i)
        u[i] = theta[i] / norm;
    return u;
}

void eval_harmonics(int K, std::span<const double> theta, int d, std::span<double> out)
{
    const std::size_t n = mode_count(K, d);
    if(out.size() < n)
        throw ValidationError("eval_harmonics: output buffer too small");
    if(d > 3) {
        check_unit(theta, d);
        out[0] = 1.0 / std::sqrt(sphere_area(d));
        return;
    }
    const auto u = unit_direction(theta, d);
    const double phi = std::atan2(u[1], u[0]);

    if(d == 2) {
        const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
        out[0] = 1.0 / std::sqrt(2.0 * std::numbers::pi);
        for(int k = 1; k <= K; ++k) {
            out[2 * k - 1] = std::cos(k * phi) * inv_sqrt_pi;
            out[2 * k] = std::sin(k * phi) * inv_sqrt_pi;
        }
        return;
    }

    // Fully normalized associated Legendre functions, p(k, m) with
    // int_{-1}^{1} p(k, m)^2 dz = 1 / (2 pi).
    const double z = u[2];
    const double s = std::sqrt(u[0] * u[0] + u[1] * u[1]);
    std::vector<double> p(static_cast<std::size_t>((K + 1) * (K + 1)), 0.0);
    auto P = [&](int k, int m) -> double& { return p[static_cast<std::size_t>(k * (K + 1) + m)]; };

    P(0, 0) = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    for(int m = 1; m <= K; ++m)
        P(m, m) = P(m - 1, m - 1) * std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
    for(int m = 0; m < K; ++m)
        P(m + 1, m) = std::sqrt(2.0 * m + 3.0) * z * P(m, m);
    for(int m = 0; m <= K; ++m) {
        for(int k = m + 2; k <= K; ++k) {
            const double kk = k, mm = m;
            const double a = std::sqrt((4.0 * kk * kk - 1.0) / (kk * kk - mm * mm));
            const double b = std::sqrt(((kk - 1.0) * (kk - 1.0) - mm * mm) /
                                       (4.0 * (kk - 1.0) * (kk - 1.0) - 1.0));
            P(k, m) = a * (z * P(k - 1, m) - b * P(k - 2, m));
        }
    }

    const double sqrt2 = std::numbers::sqrt2;
    for(int k = 0; k <= K; ++k) {
        const std::size_t base = static_cast<std::size_t>(k * k);
        out[base] = P(k, 0);
        for(int m = 1; m <= k; ++m) {
            out[base + 2 * m - 1] = sqrt2 * P(k, m) * std::cos(m * phi);
            out[base + 2 * m] = sqrt2 * P(k, m) * std::sin(m * phi);
        }
    }
}

std::vector<double> eval_harmonics(int K, std::span<const double> theta, int d)
{
    std::vector<double> out(mode_count(K, d));
    eval_harmonics(K, theta, d, out);
    return out;
}

double eval_harmonic(ModeIndex mode, std::span<const double> theta, int d)
{
    const std::size_t idx = flat_index(mode, d);
    return eval_harmonics(mode.k, theta, d)[idx];
}

SphereQuadrature sphere_quadrature(int d, int exactness)
{
    check_dimension(d);
    if(exactness < 0)
        throw ValidationError("sphere_quadrature: exactness must be nonnegative");

    SphereQuadrature q;
    q.dimension = d;
    q.exactness = exactness;

    if(d == 2) {
        // n equispaced azimuths integrate trigonometric polynomials of degree <= n - 1
        const int n_phi = exactness + 2;
        const double dphi = 2.0 * std::numbers::pi / n_phi;
        q.nodes.reserve(2 * n_phi);
        for(int i = 0; i < n_phi; ++i) {
            q.nodes.push_back(std::cos(i * dphi));
            q.nodes.push_back(std::sin(i * dphi));
        }
        q.weights.assign(n_phi, dphi);
        return q;
    }

    // x = (sqrt(1 - z^2) y, z) with y on S^{d-2}; dsigma = (1 - z^2)^{(d-3)/2} dz dsigma_{d-2}.
    // A degree-n polynomial in x restricts to degree <= n in z after the y integration.
    const SphereQuadrature sub = sphere_quadrature(d - 1, exactness);
    std::vector<double> z, wz;
    if(d % 2 == 1) {
        // integer power (1 - z^2)^m folded into a Gauss-Legendre rule
        const int m = (d - 3) / 2;
        const int n = (exactness + 2 * m) / 2 + 1;
        const GaussRule gl = gauss_legendre(n);
        for(int i = 0; i < n; ++i) {
            z.push_back(gl.nodes[i]);
            wz.push_back(gl.weights[i] * std::pow(1.0 - gl.nodes[i] * gl.nodes[i], m));
        }
    } else {
        // Gauss-Chebyshev of the second kind for the sqrt(1 - z^2) factor
        const int m = (d - 4) / 2;
        const int n = (exactness + 2 * m) / 2 + 1;
        for(int i = n; i >= 1; --i) {
            const double a = i * std::numbers::pi / (n + 1);
            const double zi = std::cos(a);
            z.push_back(zi);
            wz.push_back(std::numbers::pi / (n + 1) * std::sin(a) * std::sin(a) *
                         std::pow(1.0 - zi * zi, m));
        }
    }
    q.nodes.reserve(z.size() * sub.size() * d);
    q.weights.reserve(z.size() * sub.size());
    for(std::size_t i = 0; i < z.size(); ++i) {
        const double s = std::sqrt(std::max(0.0, 1.0 - z[i] * z[i]));
        for(std::size_t j = 0; j < sub.size(); ++j) {
            const auto y = sub.node(j);
            for(int c = 0; c < d - 1; ++c)
                q.nodes.push_back(s * y[c]);
            q.nodes.push_back(z[i]);
            q.weights.push_back(wz[i] * sub.weights[j]);
        }
    }
    return q;
}

double fourier_laplace_coefficient(const TestField& F, ModeIndex mode, double r,
                                   const SphereQuadrature& quad)
{
    const int d = quad.dimension;
    flat_index(mode, d);
    if(!(r > 0.0) || r < F.r_min || r > F.r_max)
        throw DomainError("fourier_laplace_coefficient: radius " + std::to_string(r) +
                          " outside the field's domain");
    double sum = 0.0;
    std::vector<double> x(d);
    for(std::size_t i = 0; i < quad.size(); ++i) {
        const auto th = quad.node(i);
        for(int c = 0; c < d; ++c)
            x[c] = r * th[c];
        sum += quad.weights[i] * F.value(x) * eval_harmonic(mode, th, d);
    }
    return sum;
}

ModeProjector::ModeProjector(const SphereQuadrature& quad, int K)
    : quad_(quad), K_(K), n_modes_(mode_count(K, quad.dimension))
{
    table_.resize(quad_.size() * n_modes_);
    for(std::size_t i = 0; i < quad_.size(); ++i)
        eval_harmonics(K_, quad_.node(i), quad_.dimension,
                       std::span<double>(table_.data() + i * n_modes_, n_modes_));
}

std::vector<double> ModeProjector::project(std::span<const double> samples) const
{
    if(samples.size() != quad_.size())
        throw ValidationError("ModeProjector: sample count does not match quadrature");
    std::vector<double> coef(n_modes_, 0.0);
    for(std::size_t i = 0; i < quad_.size(); ++i) {
        const double wf = quad_.weights[i] * samples[i];
        const double* row = table_.data() + i * n_modes_;
        for(std::size_t m = 0; m < n_modes_; ++m)
            coef[m] += wf * row[m];
    }
    return coef;
}

std::vector<double> ModeProjector::project(const PointFunction& F, double r) const
{
    const int d = quad_.dimension;
    std::vector<double> samples(quad_.size());
    std::vector<double> x(d);
    for(std::size_t i = 0; i < quad_.size(); ++i) {
        const auto th = quad_.node(i);
        for(int c = 0; c < d; ++c)
            x[c] = r * th[c];
        samples[i] = F(x);
    }
    return project(samples);
}

}  // namespace annulus
