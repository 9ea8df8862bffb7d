#pragma once

#include <array>
#include <functional>
#include <vector>

namespace annulus {

/// Radial interval [r_lo, r_hi] with 0 < r_lo < r_hi.
struct Segment {
    double r_lo = 1.0;
    double r_hi = 2.0;

    static Segment make(double r_lo, double r_hi);
    double width() const noexcept { return r_hi - r_lo; }
};

enum class RadialKind { power, power_log };

/// (r / scale)^exponent * log(r / scale)^log_power.
///
/// Growing powers are scaled by the outer radius and decaying ones by the
/// inner radius of their segment, so values stay O(1) on that segment.
struct RadialBasisFunction {
    double exponent = 0.0;
    int log_power = 0;
    double scale_radius = 1.0;

    RadialKind kind() const noexcept { return log_power == 0 ? RadialKind::power : RadialKind::power_log; }
    double operator()(double r) const;
};

/// Finite linear combination of scaled power/log terms. Closed under d/dr and
/// division by r, which is all L_k needs.
class RadialExpr {
public:
    struct Term {
        double coefficient;
        RadialBasisFunction fn;
    };

    RadialExpr() = default;
    explicit RadialExpr(std::vector<Term> terms) : terms_(std::move(terms)) {}

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    double operator()(double r) const;
    /// sum |c_i f_i(r)|, the scale against which cancellation in operator() is judged.
    double magnitude(double r) const;

    RadialExpr derivative() const;
    RadialExpr divided_by_r() const;
    /// n-th derivative evaluated at r.
    double derivative(double r, int order) const;

    RadialExpr& operator+=(const RadialExpr& other);
    RadialExpr& operator*=(double s);
    friend RadialExpr operator+(RadialExpr a, const RadialExpr& b) { return a += b; }
    friend RadialExpr operator*(double s, RadialExpr a) { return a *= s; }

private:
    std::vector<Term> terms_;
};

/// k (k + d - 2), the angular eigenvalue in L_k.
constexpr double lk_eigenvalue(int k, int d) { return static_cast<double>(k) * (k + d - 2); }

/// L_k f = f'' + (d - 1)/r f' - k (k + d - 2)/r^2 f, applied term by term.
RadialExpr apply_lk(const RadialExpr& f, int k, int d);

/// Fundamental solutions of L_k u = 0 on the segment: {r^k, r^{2-d-k}}, or
/// {1, log r} when the two exponents coincide (d = 2, k = 0).
std::array<RadialBasisFunction, 2> harmonic_radial_basis(int k, int d, Segment seg);

/// Fundamental solutions of L_k^2 u = 0: exponents {k, 2-d-k, k+2, 4-d-k}; a
/// repeated exponent p contributes r^p and r^p log r.
std::array<RadialBasisFunction, 4> biharmonic_radial_basis(int k, int d, Segment seg);

/// Radial function known only through evaluations, on [lo, hi].
struct SampledRadialFunction {
    std::function<double(double)> f;
    double lo = 0.0;
    double hi = 0.0;
};

/// L_k g(r) from fourth-order centered differences with step h. The stencil
/// [r - 2h, r + 2h] must lie inside [g.lo, g.hi].
double lk_apply(const SampledRadialFunction& g, int k, int d, double r, double h);

/// Richardson combination (16 L(h/2) - L(h)) / 15 of two lk_apply calls.
double lk_apply_richardson(const SampledRadialFunction& g, int k, int d, double r, double h);

/// Step used when none is given: 1e-3 of the segment width.
constexpr double default_fd_step(double width) { return 1e-3 * width; }

}  // namespace annulus
