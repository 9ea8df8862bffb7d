#pragma once

#include <annulus/field.hpp>
#include <annulus/radial_solver.hpp>
#include <annulus/spherical_harmonics.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace annulus {

/// Radii r_1 < ... < r_N (N >= 2) splitting A(r_1, r_N) into concentric annuli.
class AnnularPartition {
public:
    explicit AnnularPartition(std::vector<double> radii);

    const std::vector<double>& radii() const noexcept { return radii_; }
    std::size_t node_count() const noexcept { return radii_.size(); }
    std::size_t segment_count() const noexcept { return radii_.size() - 1; }
    Segment segment(std::size_t j) const { return {radii_.at(j), radii_.at(j + 1)}; }
    double inner() const noexcept { return radii_.front(); }
    double outer() const noexcept { return radii_.back(); }
    double h_max() const noexcept;

    /// Segment containing r; interior nodes belong to the segment on their right.
    /// Radii within 1e-12 relative of the closed annulus are accepted.
    std::size_t locate(double r) const;
    bool contains(double r) const noexcept;

    /// Every segment bisected; original nodes are kept.
    AnnularPartition bisected() const;

    bool operator==(const AnnularPartition&) const = default;

private:
    std::vector<double> radii_;
};

/// Piecewise radial function of one mode: on segment j it equals pieces()[j],
/// a combination of that segment's radial basis.
class RadialSpline {
public:
    RadialSpline() = default;
    RadialSpline(ModeIndex mode, std::vector<double> radii, std::vector<RadialExpr> pieces);

    ModeIndex mode() const noexcept { return mode_; }
    const std::vector<double>& radii() const noexcept { return radii_; }
    const std::vector<RadialExpr>& pieces() const noexcept { return pieces_; }
    const RadialExpr& piece(std::size_t j) const { return pieces_.at(j); }

    double operator()(double r) const;
    /// Derivative of the given order, taken from the segment that owns r.
    double derivative(double r, int order) const;
    /// Value of segment j at r (r may be an endpoint of j).
    double eval_on(std::size_t j, double r, int order = 0) const;

    /// Applies L_k (with this mode's k) to every piece.
    RadialSpline apply_lk(int d) const;

    RadialSpline& operator*=(double s);
    RadialSpline& operator+=(const RadialSpline& other);

private:
    std::size_t locate(double r) const;

    ModeIndex mode_{};
    std::vector<double> radii_;
    std::vector<RadialExpr> pieces_;
};

/// Truncated Fourier-Laplace representation sum_{k<=K} sum_ell u_{k,ell}(r) Y_{k,ell}(theta)
/// of a harmonic (order 2) or biharmonic (order 4) spline. Modes are stored in flat order.
class SplineExpansion {
public:
    SplineExpansion(int dimension, AnnularPartition partition, int truncation, int order,
                    std::vector<RadialSpline> modes);

    int dimension() const noexcept { return d_; }
    const AnnularPartition& partition() const noexcept { return part_; }
    int truncation() const noexcept { return K_; }
    int order() const noexcept { return order_; }
    const std::vector<RadialSpline>& modes() const noexcept { return modes_; }
    const RadialSpline& mode(ModeIndex m) const;

    /// All mode radial values (or derivatives) at radius r, in flat order.
    void radial_values(double r, std::span<double> out, int derivative_order = 0) const;

private:
    int d_;
    AnnularPartition part_;
    int K_;
    int order_;
    std::vector<RadialSpline> modes_;
};

/// Per segment, the L_k solution through (r_j, v_j) and (r_{j+1}, v_{j+1}).
RadialSpline fit_harmonic_mode(std::span<const double> values, int k, int d,
                               const AnnularPartition& part, int ell = 1);

/// Harmonic spline I_2(F) restricted to degrees <= K: every mode interpolates the
/// Fourier-Laplace coefficients of F on the node spheres.
SplineExpansion interpolate_harmonic(const TestField& F, const AnnularPartition& part, int d, int K,
                                     const SphereQuadrature& quad);

/// Fourier-Laplace coefficients of F at every node radius, node-major.
std::vector<std::vector<double>> node_coefficients(const PointFunction& F, const AnnularPartition& part,
                                                   const ModeProjector& projector);

/// sum_k sum_ell u_{k,ell}(|x|) Y_{k,ell}(x/|x|) for r_1 <= |x| <= r_N.
double eval_expansion(const SplineExpansion& S, std::span<const double> x);

/// Mode-wise L_k applied to the closed forms: the Laplacian of the spline.
SplineExpansion laplacian(const SplineExpansion& S);

/// a S1 + b S2 for expansions on the same partition, dimension and order.
SplineExpansion linear_combination(double a, const SplineExpansion& S1, double b, const SplineExpansion& S2);

/// Default truncation: 16 on the circle, 8 on the sphere, 0 in higher dimensions.
constexpr int default_truncation(int d) { return d == 2 ? 16 : (d == 3 ? 8 : 0); }

}  // namespace annulus
