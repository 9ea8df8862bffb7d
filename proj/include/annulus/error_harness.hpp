#pragma once

#include <annulus/biharmonic_spline.hpp>
#include <annulus/harmonic_spline.hpp>
#include <annulus/torsion.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace annulus {

/// Headroom allowed on every asserted inequality.
inline constexpr double kCertificateSlack = 0.01;

/// Seed for randomized probes unless the caller picks another.
inline constexpr std::uint64_t kDefaultProbeSeed = 0xA5F1;

/// Composite Gauss-Legendre in r (weight r^{d-1}) times a sphere rule.
struct L2Rule {
    int radial_points = 20;   // per segment
    int sphere_exactness = 12;
};

/// ||f||_{L^2(A(r_1, r_N))}.
double l2_norm(const PointFunction& f, const AnnularPartition& part, int d, const L2Rule& rule = {});

/// ||F - S||_{L^2} on the partition of S. The sphere rule is raised to cover
/// the degrees of F and S.
double l2_error(const TestField& F, const SplineExpansion& S, const L2Rule& rule = {});

/// Tensor grid for sup norms: radial points per segment (both ends included)
/// times a fixed set of directions.
///   d = 2   `angular` equispaced angles (default 64)
///   d = 3   `angular` polar midpoints times 2 `angular` azimuths (default 24 x 48)
///   d >= 4  the nodes of a degree-4 sphere rule
/// When `polish` is set the radius of the largest sample is refined by a
/// golden-section search along its ray; the result stays a lower bound of
/// the true sup.
struct SupGrid {
    int radial_per_segment = 200;
    int angular = 0;
    bool polish = true;
};

/// Directions of the sup grid, row-major, d values each.
std::vector<double> sup_directions(int d, const SupGrid& grid);

/// Grid-sup of |F - S| over the closed annulus of S.
double sup_norm_error(const TestField& F, const SplineExpansion& S, const SupGrid& grid = {});

/// Grid-sup of |f| over the annulus of a partition.
double sup_norm(const PointFunction& f, const AnnularPartition& part, int d, const SupGrid& grid = {});

enum class StudyKind { harmonic_sup, harmonic_l2, biharmonic_l2 };

const char* to_string(StudyKind k);
std::optional<StudyKind> parse_study_kind(std::string_view s);

/// Spline order and norm exponent p of a study: 2 for the harmonic ones, 4 for biharmonic.
int study_order(StudyKind k);

struct ConvergenceRow {
    int level = 0;
    double h_max = 0.0;
    double error = 0.0;
    /// log(e_{i-1}/e_i) / log(h_{i-1}/h_i); empty on the first row and when
    /// either error sits at the rounding floor.
    std::optional<double> rate;
};

/// Interpolation settings shared by the harness operations.
struct SplineSettings {
    int truncation = -1;   // -1: default_truncation(d)
    int exactness = -1;    // -1: default_exactness(K)
    SupGrid sup_grid{};
    L2Rule l2_rule{};
};

SplineExpansion build_spline(const TestField& F, const AnnularPartition& part, int order,
                             const SplineSettings& settings = {});

/// One row per level; level 0 is `base`, every further level bisects all segments.
std::vector<ConvergenceRow> convergence_study(const TestField& F, const AnnularPartition& base, int levels,
                                              StudyKind which, const SplineSettings& settings = {});

enum class BoundKind {
    harmonic_sup,   // ||F - I2 F||_sup <= C_d h^2 sup|Delta F|
    biharmonic_l2,  // ||F - I4 F||_L2  <= C_d^2 h^4 ||Delta^2 F||_L2
};

const char* to_string(BoundKind k);
std::optional<BoundKind> parse_bound_kind(std::string_view s);

struct BoundCertificate {
    BoundKind kind = BoundKind::harmonic_sup;
    double lhs = 0.0;
    double rhs = 0.0;
    /// lhs / rhs, or 0 for a trivial certificate whose lhs is at the rounding floor.
    double ratio = 0.0;
    /// rhs vanishes (F is harmonic, resp. biharmonic), so only lhs ~ 0 is checked.
    bool trivial = false;
    bool passed = false;
    /// sup-norm analogue of the L2 estimate, measured for the biharmonic kind only.
    std::optional<double> sup_ratio;
};

BoundCertificate bound_certificate(const TestField& F, const AnnularPartition& part, BoundKind which,
                                   const SplineSettings& settings = {});

struct Probe {
    ModeIndex mode;
    std::vector<double> node_values;
};

/// Probes with node values drawn uniformly from [-1, 1] (mt19937_64).
std::vector<Probe> random_probes(const std::vector<ModeIndex>& modes, const AnnularPartition& part,
                                 std::uint64_t seed = kDefaultProbeSeed);

struct OrthogonalityReport {
    double max_residual = 0.0;
    std::vector<double> residuals;    // one per evaluated probe
    std::vector<ModeIndex> skipped;   // probes with zero norm
    /// ||Delta F - Delta I4 F|| is at the rounding floor, so every probe is orthogonal.
    bool trivially_orthogonal = false;
    double error_norm = 0.0;
};

/// max |<Delta F - Delta I4 F, phi>| / (||Delta F - Delta I4 F|| ||phi||) over
/// harmonic splines phi fitted to the probes. Delta I4 F comes from the closed forms.
OrthogonalityReport orthogonality_check(const TestField& F, const AnnularPartition& part,
                                        const std::vector<Probe>& probes, const SplineSettings& settings = {});

OrthogonalityReport orthogonality_check(const TestField& F, const AnnularPartition& part,
                                        const std::vector<ModeIndex>& probe_modes,
                                        const SplineSettings& settings = {},
                                        std::uint64_t seed = kDefaultProbeSeed);

/// Max over r in r_samples of |L_k f_{k,ell}(r) - (Delta F)_{k,ell}(r)| / max(|(Delta F)_{k,ell}(r)|, s(r)),
/// with f_{k,ell} sampled by quadrature and L_k applied by finite differences
/// (step 1e-3 of the domain width). s(r) = ||F(r.)||/r^2 + ||Delta F(r.)|| on the
/// sphere keeps the relative measure meaningful when the coefficient vanishes.
double lk_consistency_check(const TestField& F, ModeIndex mode, const std::vector<double>& r_samples,
                            const Segment& domain, int exactness = -1);

}  // namespace annulus
