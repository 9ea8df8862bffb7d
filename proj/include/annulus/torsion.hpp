#pragma once

#include <cstddef>

namespace annulus {

/// A(r, R) = {x in R^d : r < |x| < R}.
struct Annulus {
    double r = 1.0;
    double R = 2.0;
    int d = 3;

    /// Validates 0 < r < R (finite) and d >= 2.
    static Annulus make(double r, double R, int d);
    double ratio() const noexcept { return r / R; }
    double width() const noexcept { return R - r; }
};

struct TorsionReport {
    double c_value = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    /// Maximizer of T0 in the variable u = |x|^2 / R^2.
    double u_critical = 0.0;
    double H_value = 0.0;
};

/// T0(|x|) on A(r, R): the solution of Delta T0 = -1 vanishing on both spheres.
double torsion_function(double x_norm, const Annulus& ann);

/// B_d(rho) = rho^{2D} (1 - rho^2) / (1 - rho^{2D}), D = (d - 2)/2, for d >= 3.
double b_d(double rho, int d);

/// H_d(rho) for 0 <= rho < 1, so that c_d(A(r, R)) = (R - r)^2 / (2d) H_d(r / R).
double h_d(double rho, int d);

/// lim_{rho -> 1} H_d(rho) = (D + 1) / 2.
double h_d_limit_at_one(int d);

/// max{1/(2d), 1/8}, the constant in the harmonic-spline sup-norm estimate.
double error_constant(int d);

TorsionReport torsion_constant(const Annulus& ann);

enum class Monotonicity { decreasing, constant, increasing, mixed };

const char* to_string(Monotonicity m);

struct ShapeReport {
    int dimension = 0;
    std::size_t grid_size = 0;
    Monotonicity shape = Monotonicity::mixed;
    double value_at_zero = 0.0;
    double value_at_one = 0.0;
    double min_value = 0.0;
    double max_value = 0.0;
    double max_deviation_from_one = 0.0;
};

/// Samples H_d on rho_i = i / (n - 1), i = 0..n-1 (endpoints take their limits)
/// and classifies the successive differences. "constant" means
/// max |H_d - 1| <= 1e-10 over the grid.
ShapeReport verify_hd_shape(int d, std::size_t grid_size);

}  // namespace annulus
