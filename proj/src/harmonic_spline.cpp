#include <annulus/harmonic_spline.hpp>

#include <annulus/errors.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace annulus {

namespace {

constexpr double kRadiusSlack = 1e-12;

}  // namespace

// ---------------------------------------------------------------------------
// AnnularPartition

AnnularPartition::AnnularPartition(std::vector<double> radii) : radii_(std::move(radii))
{
    if(radii_.size() < 2)
        throw ValidationError("partition needs at least two radii");
    if(!(radii_.front() > 0.0))
        throw ValidationError("partition radii must be positive");
    for(std::size_t j = 0; j + 1 < radii_.size(); ++j)
        if(!(radii_[j + 1] > radii_[j]) || !std::isfinite(radii_[j + 1]))
            throw ValidationError("partition radii must be strictly increasing and finite");
}

double AnnularPartition::h_max() const noexcept
{
    double h = 0.0;
    for(std::size_t j = 0; j + 1 < radii_.size(); ++j)
        h = std::max(h, radii_[j + 1] - radii_[j]);
    return h;
}

bool AnnularPartition::contains(double r) const noexcept
{
    return r >= inner() * (1.0 - kRadiusSlack) && r <= outer() * (1.0 + kRadiusSlack);
}

std::size_t AnnularPartition::locate(double r) const
{
    if(!contains(r))
        throw DomainError("radius " + std::to_string(r) + " outside the closed annulus [" +
                          std::to_string(inner()) + ", " + std::to_string(outer()) + "]");
    const auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
    const auto j = static_cast<std::ptrdiff_t>(it - radii_.begin()) - 1;
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j, 0, static_cast<std::ptrdiff_t>(segment_count()) - 1));
}

AnnularPartition AnnularPartition::bisected() const
{
    std::vector<double> r;
    r.reserve(2 * radii_.size() - 1);
    for(std::size_t j = 0; j + 1 < radii_.size(); ++j) {
        r.push_back(radii_[j]);
        r.push_back(0.5 * (radii_[j] + radii_[j + 1]));
    }
    r.push_back(radii_.back());
    return AnnularPartition(std::move(r));
}

// ---------------------------------------------------------------------------
// RadialSpline

RadialSpline::RadialSpline(ModeIndex mode, std::vector<double> radii, std::vector<RadialExpr> pieces)
    : mode_(mode), radii_(std::move(radii)), pieces_(std::move(pieces))
{
    if(radii_.size() < 2 || pieces_.size() + 1 != radii_.size())
        throw ValidationError("radial spline: need one piece per segment");
}

std::size_t RadialSpline::locate(double r) const
{
    const auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
    const auto j = static_cast<std::ptrdiff_t>(it - radii_.begin()) - 1;
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j, 0, static_cast<std::ptrdiff_t>(pieces_.size()) - 1));
}

double RadialSpline::operator()(double r) const
{
    return pieces_[locate(r)](r);
}

double RadialSpline::derivative(double r, int order) const
{
    return pieces_[locate(r)].derivative(r, order);
}

double RadialSpline::eval_on(std::size_t j, double r, int order) const
{
    return order == 0 ? pieces_.at(j)(r) : pieces_.at(j).derivative(r, order);
}

RadialSpline RadialSpline::apply_lk(int d) const
{
    std::vector<RadialExpr> out;
    out.reserve(pieces_.size());
    for(const auto& p : pieces_)
        out.push_back(annulus::apply_lk(p, mode_.k, d));
    return RadialSpline(mode_, radii_, std::move(out));
}

RadialSpline& RadialSpline::operator*=(double s)
{
    for(auto& p : pieces_)
        p *= s;
    return *this;
}

RadialSpline& RadialSpline::operator+=(const RadialSpline& other)
{
    if(other.radii_ != radii_ || other.mode_ != mode_)
        throw ValidationError("radial splines live on different partitions or modes");
    for(std::size_t j = 0; j < pieces_.size(); ++j)
        pieces_[j] += other.pieces_[j];
    return *this;
}

// ---------------------------------------------------------------------------
// SplineExpansion

SplineExpansion::SplineExpansion(int dimension, AnnularPartition partition, int truncation, int order,
                                 std::vector<RadialSpline> modes)
    : d_(dimension), part_(std::move(partition)), K_(truncation), order_(order), modes_(std::move(modes))
{
    if(modes_.size() != mode_count(K_, d_))
        throw ValidationError("expansion must hold every mode with k <= K");
    for(std::size_t m = 0; m < modes_.size(); ++m)
        if(flat_index(modes_[m].mode(), d_) != m)
            throw ValidationError("expansion modes out of order");
}

const RadialSpline& SplineExpansion::mode(ModeIndex m) const
{
    if(m.k > K_)
        throw ValidationError("mode degree exceeds the truncation");
    return modes_[flat_index(m, d_)];
}

void SplineExpansion::radial_values(double r, std::span<double> out, int derivative_order) const
{
    const std::size_t j = part_.locate(r);
    for(std::size_t m = 0; m < modes_.size(); ++m)
        out[m] = modes_[m].eval_on(j, r, derivative_order);
}

// ---------------------------------------------------------------------------
// fitting

RadialSpline fit_harmonic_mode(std::span<const double> values, int k, int d,
                               const AnnularPartition& part, int ell)
{
    if(values.size() != part.node_count())
        throw ValidationError("fit_harmonic_mode: need one value per node");
    std::vector<RadialExpr> pieces;
    pieces.reserve(part.segment_count());
    for(std::size_t j = 0; j < part.segment_count(); ++j) {
        const Segment seg = part.segment(j);
        const auto basis = harmonic_radial_basis(k, d, seg);
        Eigen::Matrix2d A;
        A << basis[0](seg.r_lo), basis[1](seg.r_lo),
             basis[0](seg.r_hi), basis[1](seg.r_hi);
        const Eigen::Vector2d b(values[j], values[j + 1]);
        const Eigen::Vector2d c = A.fullPivLu().solve(b);
        const double resid = (A * c - b).norm();
        if(!c.allFinite() || resid > 1e-10 * std::max(1.0, b.norm()))
            throw SingularSystemError("harmonic mode system singular on segment " + std::to_string(j) +
                                      " (k=" + std::to_string(k) + ")", k, ell);
        pieces.emplace_back(std::vector<RadialExpr::Term>{{c[0], basis[0]}, {c[1], basis[1]}});
    }
    return RadialSpline({k, ell}, part.radii(), std::move(pieces));
}

std::vector<std::vector<double>> node_coefficients(const PointFunction& F, const AnnularPartition& part,
                                                   const ModeProjector& projector)
{
    std::vector<std::vector<double>> out;
    out.reserve(part.node_count());
    for(double r : part.radii())
        out.push_back(projector.project(F, r));
    return out;
}

namespace {

void check_interpolation_inputs(const TestField& F, const AnnularPartition& part, int d, int K,
                                const SphereQuadrature& quad)
{
    if(quad.dimension != d)
        throw ValidationError("quadrature dimension does not match d");
    if(K < 0)
        throw ValidationError("truncation must be nonnegative");
    if(quad.exactness < 2 * K + 2)
        throw ValidationError("quadrature exactness " + std::to_string(quad.exactness) +
                              " below 2K + 2 = " + std::to_string(2 * K + 2));
    if(F.dimension != d)
        throw ValidationError("field '" + F.name + "' has dimension " + std::to_string(F.dimension));
    if(part.inner() < F.r_min || part.outer() > F.r_max)
        throw DomainError("partition leaves the domain of field '" + F.name + "'");
}

}  // namespace

SplineExpansion interpolate_harmonic(const TestField& F, const AnnularPartition& part, int d, int K,
                                     const SphereQuadrature& quad)
{
    check_interpolation_inputs(F, part, d, K, quad);
    const ModeProjector projector(quad, K);
    const auto coef = node_coefficients(F.value, part, projector);
    const auto modes = modes_up_to(K, d);

    std::vector<RadialSpline> splines;
    splines.reserve(modes.size());
    std::vector<double> values(part.node_count());
    for(std::size_t m = 0; m < modes.size(); ++m) {
        for(std::size_t j = 0; j < part.node_count(); ++j)
            values[j] = coef[j][m];
        splines.push_back(fit_harmonic_mode(values, modes[m].k, d, part, modes[m].ell));
    }
    return SplineExpansion(d, part, K, 2, std::move(splines));
}

double eval_expansion(const SplineExpansion& S, std::span<const double> x)
{
    const int d = S.dimension();
    if(x.size() != static_cast<std::size_t>(d))
        throw ValidationError("eval_expansion: point has wrong dimension");
    double r2 = 0.0;
    for(double c : x)
        r2 += c * c;
    const double r = std::sqrt(r2);
    if(!S.partition().contains(r))
        throw DomainError("eval_expansion: |x| = " + std::to_string(r) + " outside the closed annulus");
    std::vector<double> theta(x.begin(), x.end());
    for(double& c : theta)
        c /= r;
    const auto Y = eval_harmonics(S.truncation(), theta, d);
    std::vector<double> radial(Y.size());
    S.radial_values(r, radial);
    double sum = 0.0;
    for(std::size_t m = 0; m < Y.size(); ++m)
        sum += radial[m] * Y[m];
    return sum;
}

SplineExpansion laplacian(const SplineExpansion& S)
{
    std::vector<RadialSpline> modes;
    modes.reserve(S.modes().size());
    for(const auto& m : S.modes())
        modes.push_back(m.apply_lk(S.dimension()));
    return SplineExpansion(S.dimension(), S.partition(), S.truncation(), S.order(), std::move(modes));
}

SplineExpansion linear_combination(double a, const SplineExpansion& S1, double b, const SplineExpansion& S2)
{
    if(S1.dimension() != S2.dimension() || !(S1.partition() == S2.partition()) || S1.order() != S2.order())
        throw ValidationError("linear_combination: incompatible expansions");
    const SplineExpansion& big = S1.truncation() >= S2.truncation() ? S1 : S2;
    const SplineExpansion& small = S1.truncation() >= S2.truncation() ? S2 : S1;
    const double a_big = &big == &S1 ? a : b;
    const double a_small = &big == &S1 ? b : a;

    std::vector<RadialSpline> modes = big.modes();
    for(std::size_t m = 0; m < modes.size(); ++m) {
        modes[m] *= a_big;
        if(m < small.modes().size()) {
            RadialSpline t = small.modes()[m];
            t *= a_small;
            modes[m] += t;
        }
    }
    return SplineExpansion(big.dimension(), big.partition(), big.truncation(), big.order(), std::move(modes));
}

}  // namespace annulus
