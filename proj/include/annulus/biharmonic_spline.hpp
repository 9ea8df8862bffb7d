#pragma once

#include <annulus/harmonic_spline.hpp>

#include <Eigen/Dense>

#include <array>
#include <span>
#include <vector>

namespace annulus {

/// Radial derivatives prescribed at the inner and outer sphere.
struct EndDerivatives {
    double inner = 0.0;
    double outer = 0.0;
};

/// Linear system for one biharmonic mode. Unknowns are 4 coefficients per
/// segment, segments in order. Row layout:
///   0                      h_0 u_0'(r_1) = h_0 s_1
///   then per segment j     u_j(r_j) = v_j,  u_j(r_{j+1}) = v_{j+1}
///   then per interior node  h (u_{j-1}' - u_j')(r_j) = 0,  h^2 (u_{j-1}'' - u_j'')(r_j) = 0
///   last                   h_M u_M'(r_N) = h_M s_N
/// Derivative rows are scaled by the local width so all rows are O(1).
struct ModeSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
    std::vector<std::array<RadialBasisFunction, 4>> basis;
};

ModeSystem assemble_mode_system(std::span<const double> values, EndDerivatives ends, int k, int d,
                                const AnnularPartition& part);

/// Piecewise L_k^2 solution that interpolates the node values, is C^2 at the
/// interior nodes and matches the two end derivatives.
/// Throws SingularSystemError when the solve misses the 1e-9 relative residual.
RadialSpline fit_biharmonic_mode(std::span<const double> values, EndDerivatives ends, int k, int d,
                                 const AnnularPartition& part, int ell = 1);

/// Biharmonic spline I_4(F) restricted to degrees <= K, with the radial
/// derivative of F matched on the innermost and outermost spheres.
SplineExpansion interpolate_biharmonic(const TestField& F, const AnnularPartition& part, int d, int K,
                                       const SphereQuadrature& quad);

}  // namespace annulus
