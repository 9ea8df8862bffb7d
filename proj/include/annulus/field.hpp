#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace annulus {

using PointFunction = std::function<double(std::span<const double>)>;

/// Scalar field on a closed annulus together with its analytic derivatives.
///
/// All evaluators take a point of length `dimension`. `radial_derivative`
/// is the derivative along x/|x|, which on the spheres |x| = r is the normal
/// derivative up to orientation.
struct TestField {
    std::string name;
    int dimension = 3;
    PointFunction value;
    PointFunction laplacian;
    PointFunction bilaplacian;
    PointFunction radial_derivative;
    /// Largest spherical-harmonic degree present in F(r·), or -1 when unbounded.
    int angular_degree = -1;
    bool harmonic = false;
    bool biharmonic = false;
    /// Radii where the evaluators are valid.
    double r_min = 0.0;
    double r_max = std::numeric_limits<double>::infinity();
};

/// Names accepted by `standard_field`, in suite order.
const std::vector<std::string>& standard_field_names();

/// Builds one of the suite fields for dimension d (2 or 3).
///
///   r2          |x|^2
///   r4          |x|^4
///   x1          x_1
///   solid0..2   |x|^k Y_{k,1}(x/|x|)  (solid harmonics of the real basis)
///   r2x1        |x|^2 x_1
///   exp_radial  exp(-|x|)
TestField standard_field(std::string_view name, int d);

/// Returns the full standard suite for dimension d.
std::vector<TestField> standard_suite(int d);

}  // namespace annulus
