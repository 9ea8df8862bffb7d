#pragma once

#include <annulus/field.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace annulus {

/// Spherical-harmonic channel: degree k and basis index ell in [1, a_k(d)].
struct ModeIndex {
    int k = 0;
    int ell = 1;
    auto operator<=>(const ModeIndex&) const = default;
};

/// Surface area of S^{d-1}.
double sphere_area(int d);

/// a_k(d), the dimension of the degree-k harmonic polynomials.
/// Degrees k >= 1 are supported for d = 2, 3; for d >= 4 only k = 0 is.
int basis_dimension(int k, int d);

/// Number of modes with degree <= K.
std::size_t mode_count(int K, int d);

/// Position of a mode in the (k, ell) lexicographic ordering used everywhere.
std::size_t flat_index(ModeIndex mode, int d);

/// All modes with degree <= K in flat order.
std::vector<ModeIndex> modes_up_to(int K, int d);

/// Checks |theta| = 1 to within 1e-12, renormalizes, and returns a length-3
/// buffer whose first d entries hold the unit vector (d = 2, 3).
std::array<double, 3> unit_direction(std::span<const double> theta, int d);

/// Real orthonormal Y_{k,ell}(theta) on S^{d-1}.
///
/// d = 2: ell = 1 is cos(k phi)/sqrt(pi) (or 1/sqrt(2 pi) for k = 0), ell = 2 is
/// sin(k phi)/sqrt(pi).
/// d = 3: ell = 1 is the zonal m = 0 function; ell = 2m and ell = 2m + 1 are the
/// cos(m phi) and sin(m phi) tesseral functions. No Condon-Shortley phase.
double eval_harmonic(ModeIndex mode, std::span<const double> theta, int d);

/// Evaluates every Y_{k,ell} with k <= K at theta, in flat order.
void eval_harmonics(int K, std::span<const double> theta, int d, std::span<double> out);
std::vector<double> eval_harmonics(int K, std::span<const double> theta, int d);

/// Quadrature rule on S^{d-1}. Nodes are stored row-major, d values per node.
struct SphereQuadrature {
    int dimension = 3;
    int exactness = 0;
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return weights.size(); }
    std::span<const double> node(std::size_t i) const {
        return {nodes.data() + i * static_cast<std::size_t>(dimension),
                static_cast<std::size_t>(dimension)};
    }
};

/// Rule exact for spherical polynomials of degree <= exactness.
/// d = 2: exactness + 2 equispaced nodes. d = 3: Gauss-Legendre in cos(theta)
/// times equispaced azimuth. d >= 4: the same construction applied recursively
/// in the last coordinate.
SphereQuadrature sphere_quadrature(int d, int exactness);

/// Exactness used when the caller does not pick one: 2 K + 4.
constexpr int default_exactness(int K) { return 2 * K + 4; }

/// f_{k,ell}(r) = sum_i w_i F(r theta_i) Y_{k,ell}(theta_i).
double fourier_laplace_coefficient(const TestField& F, ModeIndex mode, double r,
                                   const SphereQuadrature& quad);

/// Precomputed Y table for one quadrature rule, used to extract all modes with
/// degree <= K from one set of samples on a sphere.
class ModeProjector {
public:
    ModeProjector(const SphereQuadrature& quad, int K);

    int truncation() const noexcept { return K_; }
    int dimension() const noexcept { return quad_.dimension; }
    const SphereQuadrature& quadrature() const noexcept { return quad_; }
    std::size_t modes() const noexcept { return n_modes_; }

    /// Coefficients of the samples g(theta_i), one per mode.
    std::vector<double> project(std::span<const double> samples) const;

    /// Coefficients of F restricted to the sphere of radius r.
    std::vector<double> project(const PointFunction& F, double r) const;

private:
    SphereQuadrature quad_;
    int K_;
    std::size_t n_modes_;
    std::vector<double> table_;  // node-major: table_[i * n_modes_ + m]
};

}  // namespace annulus
