#include <annulus/error_harness.hpp>
#include <annulus/errors.hpp>
#include <annulus/torsion.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace annulus;

namespace {

SplineSettings settings_for(int truncation)
{
    SplineSettings s;
    s.truncation = truncation;
    return s;
}

py::dict certificate_dict(const BoundCertificate& c)
{
    py::dict d;
    d["bound"] = to_string(c.kind);
    d["lhs"] = c.lhs;
    d["rhs"] = c.rhs;
    d["ratio"] = c.ratio;
    d["trivial"] = c.trivial;
    d["passed"] = c.passed;
    d["sup_ratio"] = c.sup_ratio ? py::cast(*c.sup_ratio) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Harmonic and biharmonic splines on annuli, torsion constants and error certificates.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularSystemError>(m, "SingularSystemError", PyExc_RuntimeError);

    m.def("sphere_area", &sphere_area, py::arg("d"));
    m.def("basis_dimension", &basis_dimension, py::arg("k"), py::arg("d"));
    m.def(
        "eval_harmonic",
        [](int k, int ell, const std::vector<double>& theta, int d) { return eval_harmonic({k, ell}, theta, d); },
        py::arg("k"), py::arg("ell"), py::arg("theta"), py::arg("d"));
    m.def("standard_field_names", &standard_field_names);

    m.def(
        "torsion_function",
        [](double x_norm, double r, double R, int d) { return torsion_function(x_norm, Annulus::make(r, R, d)); },
        py::arg("x_norm"), py::arg("r"), py::arg("R"), py::arg("d"));
    m.def("b_d", &b_d, py::arg("rho"), py::arg("d"));
    m.def("h_d", &h_d, py::arg("rho"), py::arg("d"));
    m.def(
        "torsion_constant",
        [](double r, double R, int d) {
            const TorsionReport rep = torsion_constant(Annulus::make(r, R, d));
            py::dict out;
            out["c_value"] = rep.c_value;
            out["H_value"] = rep.H_value;
            out["u_critical"] = rep.u_critical;
            out["lower_bound"] = rep.lower_bound;
            out["upper_bound"] = rep.upper_bound;
            return out;
        },
        py::arg("r"), py::arg("R"), py::arg("d"));
    m.def(
        "verify_hd_shape",
        [](int d, std::size_t n) {
            const ShapeReport rep = verify_hd_shape(d, n);
            py::dict out;
            out["shape"] = to_string(rep.shape);
            out["value_at_zero"] = rep.value_at_zero;
            out["value_at_one"] = rep.value_at_one;
            out["min_value"] = rep.min_value;
            out["max_value"] = rep.max_value;
            return out;
        },
        py::arg("d"), py::arg("grid_size") = 1000);

    py::class_<SplineExpansion>(m, "SplineExpansion")
        .def_property_readonly("dimension", &SplineExpansion::dimension)
        .def_property_readonly("truncation", &SplineExpansion::truncation)
        .def_property_readonly("order", &SplineExpansion::order)
        .def_property_readonly("radii", [](const SplineExpansion& s) { return s.partition().radii(); })
        .def("__call__", [](const SplineExpansion& s, const std::vector<double>& x) { return eval_expansion(s, x); },
             py::arg("x"));

    m.def(
        "interpolate",
        [](const std::string& field, const std::vector<double>& radii, int d, int order, int truncation) {
            return build_spline(standard_field(field, d), AnnularPartition(radii), order, settings_for(truncation));
        },
        py::arg("field"), py::arg("radii"), py::arg("d") = 3, py::arg("order") = 2, py::arg("truncation") = -1,
        "Harmonic (order 2) or biharmonic (order 4) spline of a standard field.");
    m.def(
        "sup_norm_error",
        [](const std::string& field, const SplineExpansion& s) {
            return sup_norm_error(standard_field(field, s.dimension()), s);
        },
        py::arg("field"), py::arg("spline"));
    m.def(
        "l2_error",
        [](const std::string& field, const SplineExpansion& s) {
            return l2_error(standard_field(field, s.dimension()), s);
        },
        py::arg("field"), py::arg("spline"));

    m.def(
        "bound_certificate",
        [](const std::string& field, const std::vector<double>& radii, int d, const std::string& bound,
           int truncation) {
            const auto kind = parse_bound_kind(bound);
            if(!kind)
                throw ValidationError("unknown bound '" + bound + "'");
            return certificate_dict(
                bound_certificate(standard_field(field, d), AnnularPartition(radii), *kind, settings_for(truncation)));
        },
        py::arg("field"), py::arg("radii"), py::arg("d") = 3, py::arg("bound") = "harmonic_sup",
        py::arg("truncation") = -1);

    m.def(
        "convergence_study",
        [](const std::string& field, const std::vector<double>& radii, int d, int levels, const std::string& which,
           int truncation) {
            const auto kind = parse_study_kind(which);
            if(!kind)
                throw ValidationError("unknown study '" + which + "'");
            py::list rows;
            for(const auto& r : convergence_study(standard_field(field, d), AnnularPartition(radii), levels, *kind,
                                                  settings_for(truncation))) {
                py::dict row;
                row["level"] = r.level;
                row["h_max"] = r.h_max;
                row["error"] = r.error;
                row["rate"] = r.rate ? py::cast(*r.rate) : py::none();
                rows.append(row);
            }
            return rows;
        },
        py::arg("field"), py::arg("radii"), py::arg("d") = 3, py::arg("levels") = 4,
        py::arg("which") = "harmonic_sup", py::arg("truncation") = -1);

    m.def(
        "orthogonality_check",
        [](const std::string& field, const std::vector<double>& radii, int d, int max_probe_degree,
           std::uint64_t seed) {
            const auto rep = orthogonality_check(standard_field(field, d), AnnularPartition(radii),
                                                 modes_up_to(max_probe_degree, d), SplineSettings{}, seed);
            py::dict out;
            out["max_residual"] = rep.max_residual;
            out["trivially_orthogonal"] = rep.trivially_orthogonal;
            out["probes"] = rep.residuals.size();
            out["skipped"] = rep.skipped.size();
            return out;
        },
        py::arg("field"), py::arg("radii"), py::arg("d") = 3, py::arg("max_probe_degree") = 4,
        py::arg("seed") = kDefaultProbeSeed);

    m.def(
        "lk_consistency_check",
        [](const std::string& field, int k, int ell, const std::vector<double>& r_samples, double r_lo, double r_hi,
           int d) {
            return lk_consistency_check(standard_field(field, d), {k, ell}, r_samples, Segment::make(r_lo, r_hi));
        },
        py::arg("field"), py::arg("k"), py::arg("ell"), py::arg("r_samples"), py::arg("r_lo"), py::arg("r_hi"),
        py::arg("d") = 3);
}
