#pragma once

#include <vector>

namespace annulus {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n - 1.
GaussRule gauss_legendre(int n);

/// The same rule mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

}  // namespace annulus
