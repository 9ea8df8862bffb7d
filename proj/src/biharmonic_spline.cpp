#include <annulus/biharmonic_spline.hpp>

#include <annulus/errors.hpp>

#include <cmath>
#include <string>

namespace annulus {

namespace {

// Value, first and second derivative of every basis function at r.
struct BasisJet {
    std::array<double, 4> v, d1, d2;
};

BasisJet jet(const std::array<RadialBasisFunction, 4>& basis, double r)
{
    BasisJet out{};
    for(std::size_t i = 0; i < 4; ++i) {
        const RadialExpr e({{1.0, basis[i]}});
        const RadialExpr de = e.derivative();
        out.v[i] = e(r);
        out.d1[i] = de(r);
        out.d2[i] = de.derivative()(r);
    }
    return out;
}

}  // namespace

ModeSystem assemble_mode_system(std::span<const double> values, EndDerivatives ends, int k, int d,
                                const AnnularPartition& part)
{
    if(values.size() != part.node_count())
        throw ValidationError("fit_biharmonic_mode: need one value per node");
    const auto M = static_cast<Eigen::Index>(part.segment_count());
    const Eigen::Index n = 4 * M;

    ModeSystem sys;
    sys.matrix = Eigen::MatrixXd::Zero(n, n);
    sys.rhs = Eigen::VectorXd::Zero(n);
    sys.basis.reserve(static_cast<std::size_t>(M));
    for(Eigen::Index j = 0; j < M; ++j)
        sys.basis.push_back(biharmonic_radial_basis(k, d, part.segment(static_cast<std::size_t>(j))));

    auto& A = sys.matrix;
    auto& b = sys.rhs;
    const auto& r = part.radii();
    Eigen::Index row = 0;

    {
        const double h = r[1] - r[0];
        const BasisJet J = jet(sys.basis[0], r[0]);
        for(int i = 0; i < 4; ++i)
            A(row, i) = h * J.d1[i];
        b(row++) = h * ends.inner;
    }
    for(Eigen::Index j = 0; j < M; ++j) {
        const auto js = static_cast<std::size_t>(j);
        const BasisJet lo = jet(sys.basis[js], r[js]);
        const BasisJet hi = jet(sys.basis[js], r[js + 1]);
        for(int i = 0; i < 4; ++i) {
            A(row, 4 * j + i) = lo.v[i];
            A(row + 1, 4 * j + i) = hi.v[i];
        }
        b(row) = values[js];
        b(row + 1) = values[js + 1];
        row += 2;
    }
    for(Eigen::Index j = 1; j < M; ++j) {
        const auto js = static_cast<std::size_t>(j);
        const double h = 0.5 * (r[js + 1] - r[js - 1]);
        const BasisJet left = jet(sys.basis[js - 1], r[js]);
        const BasisJet right = jet(sys.basis[js], r[js]);
        for(int i = 0; i < 4; ++i) {
            A(row, 4 * (j - 1) + i) = h * left.d1[i];
            A(row, 4 * j + i) = -h * right.d1[i];
            A(row + 1, 4 * (j - 1) + i) = h * h * left.d2[i];
            A(row + 1, 4 * j + i) = -h * h * right.d2[i];
        }
        row += 2;
    }
    {
        const auto last = static_cast<std::size_t>(M - 1);
        const double h = r[last + 1] - r[last];
        const BasisJet J = jet(sys.basis[last], r[last + 1]);
        for(int i = 0; i < 4; ++i)
            A(row, 4 * (M - 1) + i) = h * J.d1[i];
        b(row++) = h * ends.outer;
    }
    return sys;
}

RadialSpline fit_biharmonic_mode(std::span<const double> values, EndDerivatives ends, int k, int d,
                                 const AnnularPartition& part, int ell)
{
    const ModeSystem sys = assemble_mode_system(values, ends, k, d, part);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.matrix);
    const Eigen::VectorXd x = lu.solve(sys.rhs);
    const double bnorm = sys.rhs.norm();
    const double resid = (sys.matrix * x - sys.rhs).norm();
    if(!x.allFinite() || resid > 1e-9 * bnorm || (bnorm == 0.0 && x.norm() != 0.0))
        throw SingularSystemError("biharmonic mode system (k=" + std::to_string(k) + ", ell=" +
                                  std::to_string(ell) + ") residual " + std::to_string(resid), k, ell);

    std::vector<RadialExpr> pieces;
    pieces.reserve(part.segment_count());
    for(std::size_t j = 0; j < part.segment_count(); ++j) {
        std::vector<RadialExpr::Term> terms;
        for(std::size_t i = 0; i < 4; ++i)
            terms.push_back({x(static_cast<Eigen::Index>(4 * j + i)), sys.basis[j][i]});
        pieces.emplace_back(std::move(terms));
    }
    return RadialSpline({k, ell}, part.radii(), std::move(pieces));
}

SplineExpansion interpolate_biharmonic(const TestField& F, const AnnularPartition& part, int d, int K,
                                       const SphereQuadrature& quad)
{
    if(quad.dimension != d || F.dimension != d)
        throw ValidationError("interpolate_biharmonic: dimension mismatch");
    if(K < 0)
        throw ValidationError("truncation must be nonnegative");
    if(quad.exactness < 2 * K + 2)
        throw ValidationError("quadrature exactness below 2K + 2");
    if(!F.radial_derivative)
        throw ValidationError("field '" + F.name + "' has no radial derivative");
    if(part.inner() < F.r_min || part.outer() > F.r_max)
        throw DomainError("partition leaves the domain of field '" + F.name + "'");

    const ModeProjector projector(quad, K);
    const auto coef = node_coefficients(F.value, part, projector);
    const auto d_inner = projector.project(F.radial_derivative, part.inner());
    const auto d_outer = projector.project(F.radial_derivative, part.outer());
    const auto modes = modes_up_to(K, d);

    std::vector<RadialSpline> splines;
    splines.reserve(modes.size());
    std::vector<double> values(part.node_count());
    for(std::size_t m = 0; m < modes.size(); ++m) {
        for(std::size_t j = 0; j < part.node_count(); ++j)
            values[j] = coef[j][m];
        splines.push_back(fit_biharmonic_mode(values, {d_inner[m], d_outer[m]}, modes[m].k, d, part,
                                              modes[m].ell));
    }
    return SplineExpansion(d, part, K, 4, std::move(splines));
}

}  // namespace annulus
