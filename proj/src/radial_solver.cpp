#include <annulus/radial_solver.hpp>

#include <annulus/errors.hpp>

#include <cmath>
#include <string>

namespace annulus {

Segment Segment::make(double r_lo, double r_hi)
{
    if(!(r_lo > 0.0) || !(r_hi > r_lo) || !std::isfinite(r_hi))
        throw ValidationError("segment radii must satisfy 0 < r_lo < r_hi");
    return {r_lo, r_hi};
}

double RadialBasisFunction::operator()(double r) const
{
    const double x = r / scale_radius;
    double v = exponent == 0.0 ? 1.0 : std::pow(x, exponent);
    for(int i = 0; i < log_power; ++i)
        v *= std::log(x);
    return v;
}

double RadialExpr::operator()(double r) const
{
    double sum = 0.0;
    for(const auto& t : terms_)
        sum += t.coefficient * t.fn(r);
    return sum;
}

double RadialExpr::magnitude(double r) const
{
    double sum = 0.0;
    for(const auto& t : terms_)
        sum += std::abs(t.coefficient * t.fn(r));
    return sum;
}

// d/dr [c (r/s)^p L^q] = (c/s) [p (r/s)^{p-1} L^q + q (r/s)^{p-1} L^{q-1}],  L = log(r/s)
RadialExpr RadialExpr::derivative() const
{
    std::vector<Term> out;
    out.reserve(2 * terms_.size());
    for(const auto& t : terms_) {
        const double s = t.fn.scale_radius;
        if(t.fn.exponent != 0.0)
            out.push_back({t.coefficient * t.fn.exponent / s,
                           {t.fn.exponent - 1.0, t.fn.log_power, s}});
        if(t.fn.log_power > 0)
            out.push_back({t.coefficient * t.fn.log_power / s,
                           {t.fn.exponent - 1.0, t.fn.log_power - 1, s}});
    }
    return RadialExpr(std::move(out));
}

RadialExpr RadialExpr::divided_by_r() const
{
    std::vector<Term> out = terms_;
    for(auto& t : out) {
        t.coefficient /= t.fn.scale_radius;
        t.fn.exponent -= 1.0;
    }
    return RadialExpr(std::move(out));
}

double RadialExpr::derivative(double r, int order) const
{
    if(order < 0)
        throw ValidationError("derivative order must be nonnegative");
    RadialExpr e = *this;
    for(int i = 0; i < order; ++i)
        e = e.derivative();
    return e(r);
}

RadialExpr& RadialExpr::operator+=(const RadialExpr& other)
{
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

RadialExpr& RadialExpr::operator*=(double s)
{
    for(auto& t : terms_)
        t.coefficient *= s;
    return *this;
}

RadialExpr apply_lk(const RadialExpr& f, int k, int d)
{
    const RadialExpr df = f.derivative();
    RadialExpr out = df.derivative();
    out += static_cast<double>(d - 1) * df.divided_by_r();
    const double lam = lk_eigenvalue(k, d);
    if(lam != 0.0)
        out += (-lam) * f.divided_by_r().divided_by_r();
    return out;
}

namespace {

void check_kd(int k, int d)
{
    if(d < 2)
        throw ValidationError("radial basis: dimension must be >= 2");
    if(k < 0)
        throw ValidationError("radial basis: negative degree");
}

RadialBasisFunction scaled(int exponent, int log_power, Segment seg)
{
    return {static_cast<double>(exponent), log_power, exponent < 0 ? seg.r_lo : seg.r_hi};
}

// Exponents are integers, so coincidences are detected exactly.
template <std::size_t N>
std::array<RadialBasisFunction, N> basis_from_exponents(const std::array<int, N>& exps, Segment seg)
{
    std::array<RadialBasisFunction, N> out{};
    for(std::size_t i = 0; i < N; ++i) {
        int repeats = 0;
        for(std::size_t j = 0; j < i; ++j)
            repeats += exps[j] == exps[i];
        out[i] = scaled(exps[i], repeats, seg);
    }
    return out;
}

}  // namespace

std::array<RadialBasisFunction, 2> harmonic_radial_basis(int k, int d, Segment seg)
{
    check_kd(k, d);
    return basis_from_exponents<2>({k, 2 - d - k}, seg);
}

std::array<RadialBasisFunction, 4> biharmonic_radial_basis(int k, int d, Segment seg)
{
    check_kd(k, d);
    return basis_from_exponents<4>({k, 2 - d - k, k + 2, 4 - d - k}, seg);
}

double lk_apply(const SampledRadialFunction& g, int k, int d, double r, double h)
{
    if(!(h > 0.0))
        throw ValidationError("lk_apply: step must be positive");
    if(r - 2.0 * h < g.lo || r + 2.0 * h > g.hi)
        throw DomainError("lk_apply: stencil [" + std::to_string(r - 2.0 * h) + ", " +
                          std::to_string(r + 2.0 * h) + "] leaves the domain");
    const double fm2 = g.f(r - 2.0 * h), fm1 = g.f(r - h), f0 = g.f(r);
    const double fp1 = g.f(r + h), fp2 = g.f(r + 2.0 * h);
    const double d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    const double d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    return d2 + (d - 1) / r * d1 - lk_eigenvalue(k, d) / (r * r) * f0;
}

double lk_apply_richardson(const SampledRadialFunction& g, int k, int d, double r, double h)
{
    const double coarse = lk_apply(g, k, d, r, h);
    const double fine = lk_apply(g, k, d, r, 0.5 * h);
    return (16.0 * fine - coarse) / 15.0;
}

}  // namespace annulus
