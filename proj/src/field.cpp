#include <annulus/field.hpp>

#include <annulus/errors.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace annulus {

namespace {

using std::numbers::pi;

double norm2(std::span<const double> x)
{
    double s = 0.0;
    for(double c : x)
        s += c * c;
    return s;
}

double norm(std::span<const double> x) { return std::sqrt(norm2(x)); }

PointFunction constant(double c)
{
    return [c](std::span<const double>) { return c; };
}

TestField make_r2(int d)
{
    TestField F;
    F.value = [](std::span<const double> x) { return norm2(x); };
    F.laplacian = constant(2.0 * d);
    F.bilaplacian = constant(0.0);
    F.radial_derivative = [](std::span<const double> x) { return 2.0 * norm(x); };
    F.angular_degree = 0;
    F.biharmonic = true;
    return F;
}

TestField make_r4(int d)
{
    TestField F;
    F.value = [](std::span<const double> x) { const double s = norm2(x); return s * s; };
    F.laplacian = [d](std::span<const double> x) { return 4.0 * (d + 2) * norm2(x); };
    F.bilaplacian = constant(8.0 * d * (d + 2));
    F.radial_derivative = [](std::span<const double> x) { const double r = norm(x); return 4.0 * r * r * r; };
    F.angular_degree = 0;
    return F;
}

TestField make_x1()
{
    TestField F;
    F.value = [](std::span<const double> x) { return x[0]; };
    F.laplacian = constant(0.0);
    F.bilaplacian = constant(0.0);
    F.radial_derivative = [](std::span<const double> x) { return x[0] / norm(x); };
    F.angular_degree = 1;
    F.harmonic = F.biharmonic = true;
    return F;
}

TestField make_r2x1(int d)
{
    TestField F;
    F.value = [](std::span<const double> x) { return norm2(x) * x[0]; };
    F.laplacian = [d](std::span<const double> x) { return (2.0 * d + 4.0) * x[0]; };
    F.bilaplacian = constant(0.0);
    F.radial_derivative = [](std::span<const double> x) { return 3.0 * norm(x) * x[0]; };
    F.angular_degree = 1;
    F.biharmonic = true;
    return F;
}

// F = exp(-r). With a = d - 1:
//   lap F  = e^{-r} (1 - a/r)
//   lap2 F = e^{-r} (1 - 2a/r + (a^2 - 2a)/r^2 + (a^2 - 2a)/r^3)
TestField make_exp_radial(int d)
{
    const double a = d - 1.0;
    TestField F;
    F.value = [](std::span<const double> x) { return std::exp(-norm(x)); };
    F.laplacian = [a](std::span<const double> x) {
        const double r = norm(x);
        return std::exp(-r) * (1.0 - a / r);
    };
    F.bilaplacian = [a](std::span<const double> x) {
        const double r = norm(x);
        const double q = a * a - 2.0 * a;
        return std::exp(-r) * (1.0 - 2.0 * a / r + q / (r * r) + q / (r * r * r));
    };
    F.radial_derivative = [](std::span<const double> x) { return -std::exp(-norm(x)); };
    F.angular_degree = 0;
    F.r_min = 1e-300;
    return F;
}

// r^k Y_{k,1}(x/r) written as polynomials. The polar axis on S^2 is x_3.
TestField make_solid(int k, int d)
{
    if(d != 2 && d != 3)
        throw ValidationError("solid harmonic fields need d = 2 or 3");
    TestField F;
    if(d == 2) {
        switch(k) {
        case 0: F.value = constant(1.0 / std::sqrt(2.0 * pi)); break;
        case 1: F.value = [](std::span<const double> x) { return x[0] / std::sqrt(pi); }; break;
        default: F.value = [](std::span<const double> x) { return (x[0] * x[0] - x[1] * x[1]) / std::sqrt(pi); };
        }
    } else {
        switch(k) {
        case 0: F.value = constant(1.0 / std::sqrt(4.0 * pi)); break;
        case 1: F.value = [](std::span<const double> x) { return std::sqrt(3.0 / (4.0 * pi)) * x[2]; }; break;
        default:
            F.value = [](std::span<const double> x) {
                return std::sqrt(5.0 / (16.0 * pi)) * (2.0 * x[2] * x[2] - x[0] * x[0] - x[1] * x[1]);
            };
        }
    }
    F.laplacian = constant(0.0);
    F.bilaplacian = constant(0.0);
    // Homogeneous of degree k, so dF/dr = k F / r.
    F.radial_derivative = [k, v = F.value](std::span<const double> x) { return k * v(x) / norm(x); };
    F.angular_degree = k;
    F.harmonic = F.biharmonic = true;
    return F;
}

}  // namespace

const std::vector<std::string>& standard_field_names()
{
    static const std::vector<std::string> names{"r2", "r4", "x1", "solid0", "solid1", "solid2", "r2x1", "exp_radial"};
    return names;
}

TestField standard_field(std::string_view name, int d)
{
    if(d < 2)
        throw ValidationError("field dimension must be >= 2");
    TestField F;
    if(name == "r2")
        F = make_r2(d);
    else if(name == "r4")
        F = make_r4(d);
    else if(name == "x1")
        F = make_x1();
    else if(name == "r2x1")
        F = make_r2x1(d);
    else if(name == "exp_radial")
        F = make_exp_radial(d);
    else if(name == "solid0")
        F = make_solid(0, d);
    else if(name == "solid1")
        F = make_solid(1, d);
    else if(name == "solid2")
        F = make_solid(2, d);
    else
        throw ValidationError("unknown field '" + std::string(name) + "'");
    F.name = std::string(name);
    F.dimension = d;
    return F;
}

std::vector<TestField> standard_suite(int d)
{
    std::vector<TestField> out;
    // Beyond d = 3 only the degree-0 channel exists, so only radial fields remain.
    for(const auto& name : standard_field_names()) {
        if(d > 3 && name != "r2" && name != "r4" && name != "exp_radial")
            continue;
        out.push_back(standard_field(name, d));
    }
    return out;
}

}  // namespace annulus
