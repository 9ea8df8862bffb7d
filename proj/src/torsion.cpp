#include <annulus/torsion.hpp>

#include <annulus/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace annulus {

// The closed forms are evaluated through
//   t = -log(rho),  D = (d - 2)/2,  phi(y) = (1 - e^{-y}) / y,
//   lambda = log(D B_d) = -2 D t + log phi(2t) - log phi(2 D t)
// (for d = 2, lambda = log phi(2t) = log u0). Neither term cancels as rho -> 1,
// so H_d = G(lambda) / (1 - rho)^2 keeps full relative accuracy there and no
// switch between formulas is needed except inside log phi and G themselves.

namespace {

double half_dim(int d) { return 0.5 * (d - 2); }

void check_dim(int d)
{
    if(d < 2)
        throw ValidationError("dimension must be >= 2, got " + std::to_string(d));
}

// log((1 - e^{-y}) / y) for y >= 0.
double log_phi(double y)
{
    const double z = 0.5 * y;
    if(z < 1e-2) {
        const double z2 = z * z;
        return -z + z2 * (1.0 / 6 + z2 * (-1.0 / 180 + z2 * (1.0 / 2835 - z2 / 37800)));
    }
    return std::log(-std::expm1(-y) / y);
}

double lambda_of(double t, double D)
{
    return -2.0 * D * t + log_phi(2.0 * t) - log_phi(2.0 * D * t);
}

// G(lambda) = 1 + B - ((D+1)/D) (D B)^{1/(D+1)} with D B = e^lambda, or
// 1 + (lambda - 1) e^lambda when D = 0. Both vanish to second order at 0.
double g_of(double lambda, double D)
{
    if(std::abs(lambda) < 0.5) {
        // sum_{n>=2} c_n lambda^n, c_n = (1 - (D+1)^{1-n}) / (n! D)  ((n-1)/n! for D = 0)
        double sum = 0.0;
        double pw = lambda;       // lambda^n / n!
        double inv = 1.0;         // (D+1)^{1-n}
        for(int n = 2; n <= 30; ++n) {
            pw *= lambda / n;
            inv /= (D + 1.0);
            const double c = D == 0.0 ? (n - 1.0) : (1.0 - inv) / D;
            sum += c * pw;
        }
        return sum;
    }
    if(D == 0.0)
        return 1.0 + (lambda - 1.0) * std::exp(lambda);
    const auto e2 = [](double y) { return std::expm1(y) - y; };
    return e2(lambda) / D - (D + 1.0) / D * e2(lambda / (D + 1.0));
}

}  // namespace

Annulus Annulus::make(double r, double R, int d)
{
    check_dim(d);
    if(!(r > 0.0) || !(R > r) || !std::isfinite(R))
        throw ValidationError("annulus radii must satisfy 0 < r < R");
    return {r, R, d};
}

double torsion_function(double x_norm, const Annulus& ann)
{
    const auto [r, R, d] = Annulus::make(ann.r, ann.R, ann.d);
    const double slack = 1e-12 * R;
    if(!(x_norm >= r - slack && x_norm <= R + slack))
        throw DomainError("|x| = " + std::to_string(x_norm) + " outside [r, R]");
    const double rho = r / R;
    const double u = (x_norm / R) * (x_norm / R);
    // h_d(x) / h_d(r), with h_d(s) = (s/R)^{2-d} - 1 or log(s/R).
    double q;
    if(d == 2)
        q = std::log(x_norm / R) / std::log(rho);
    else
        q = std::expm1((2.0 - d) * std::log(x_norm / R)) / std::expm1((2.0 - d) * std::log(rho));
    return R * R / (2.0 * d) * (1.0 - u - (1.0 - rho * rho) * q);
}

double b_d(double rho, int d)
{
    check_dim(d);
    if(d < 3)
        throw ValidationError("B_d needs d >= 3");
    if(!(rho > 0.0 && rho < 1.0))
        throw ValidationError("B_d needs 0 < rho < 1");
    const double D = half_dim(d);
    return std::exp(lambda_of(-std::log(rho), D)) / D;
}

double h_d_limit_at_one(int d)
{
    check_dim(d);
    return 0.5 * (half_dim(d) + 1.0);
}

double h_d(double rho, int d)
{
    check_dim(d);
    if(!(rho >= 0.0 && rho < 1.0))
        throw ValidationError("H_d needs 0 <= rho < 1");
    if(rho == 0.0 || d == 4)
        return 1.0;
    const double D = half_dim(d);
    const double one_minus = 1.0 - rho;
    return g_of(lambda_of(-std::log(rho), D), D) / (one_minus * one_minus);
}

double error_constant(int d)
{
    check_dim(d);
    return std::max(1.0 / (2.0 * d), 1.0 / 8.0);
}

TorsionReport torsion_constant(const Annulus& ann)
{
    const auto [r, R, d] = Annulus::make(ann.r, ann.R, ann.d);
    const double D = half_dim(d);
    const double rho = r / R;
    const double w2 = (R - r) * (R - r);
    TorsionReport rep;
    rep.H_value = h_d(rho, d);
    rep.c_value = w2 / (2.0 * d) * rep.H_value;
    rep.lower_bound = std::min(1.0 / (2.0 * d), 1.0 / 8.0) * w2;
    rep.upper_bound = std::max(1.0 / (2.0 * d), 1.0 / 8.0) * w2;
    rep.u_critical = std::exp(lambda_of(-std::log(rho), D) / (D + 1.0));
    return rep;
}

const char* to_string(Monotonicity m)
{
    switch(m) {
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::constant: return "constant";
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::mixed: break;
    }
    return "mixed";
}

ShapeReport verify_hd_shape(int d, std::size_t grid_size)
{
    check_dim(d);
    if(grid_size < 100)
        throw ValidationError("verify_hd_shape needs at least 100 grid points");
    ShapeReport rep;
    rep.dimension = d;
    rep.grid_size = grid_size;
    rep.min_value = std::numeric_limits<double>::infinity();
    rep.max_value = -std::numeric_limits<double>::infinity();

    bool up = true, down = true;
    double prev = 0.0;
    for(std::size_t i = 0; i < grid_size; ++i) {
        const double rho = static_cast<double>(i) / static_cast<double>(grid_size - 1);
        const double H = i + 1 == grid_size ? h_d_limit_at_one(d) : h_d(rho, d);
        if(i == 0)
            rep.value_at_zero = H;
        else {
            up = up && H > prev;
            down = down && H < prev;
        }
        rep.min_value = std::min(rep.min_value, H);
        rep.max_value = std::max(rep.max_value, H);
        rep.max_deviation_from_one = std::max(rep.max_deviation_from_one, std::abs(H - 1.0));
        prev = H;
    }
    rep.value_at_one = prev;
    if(rep.max_deviation_from_one <= 1e-10)
        rep.shape = Monotonicity::constant;
    else if(up)
        rep.shape = Monotonicity::increasing;
    else if(down)
        rep.shape = Monotonicity::decreasing;
    else
        rep.shape = Monotonicity::mixed;
    return rep;
}

}  // namespace annulus
