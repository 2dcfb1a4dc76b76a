#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nradii/bounds.hpp"
#include "nradii/oracle.hpp"
#include "nradii/radii.hpp"
#include "nradii/sums.hpp"
#include "nradii/tables.hpp"
#include "nradii/zeros.hpp"

namespace py = pybind11;
using namespace nradii;

PYBIND11_MODULE(_core, m) {
    m.doc() = "radii of starlikeness and convexity for combinations "
              "a z^2 J'' + b z J' + c J of Bessel functions";

    py::register_exception<InvalidParameters>(m, "InvalidParameters",
                                              PyExc_ValueError);
    py::register_exception<TruncationFailure>(m, "TruncationFailure",
                                              PyExc_ArithmeticError);
    py::register_exception<ScanExhausted>(m, "ScanExhausted",
                                          PyExc_ArithmeticError);
    py::register_exception<ZeroDenominator>(m, "ZeroDenominator",
                                            PyExc_ZeroDivisionError);

    py::class_<CoefficientTriple>(m, "CoefficientTriple")
        .def(py::init<double, double, double>(), py::arg("a"), py::arg("b"),
             py::arg("c"))
        .def_readwrite("a", &CoefficientTriple::a)
        .def_readwrite("b", &CoefficientTriple::b)
        .def_readwrite("c", &CoefficientTriple::c)
        .def_property_readonly("q", &CoefficientTriple::q)
        .def("admissible", &CoefficientTriple::admissible)
        .def("__repr__", [](const CoefficientTriple& k) {
            return "CoefficientTriple(a=" + std::to_string(k.a) +
                   ", b=" + std::to_string(k.b) + ", c=" + std::to_string(k.c) +
                   ")";
        });

    m.def("eval_q", &eval_q, py::arg("coeffs"), py::arg("t"),
          "Q(t) = a t(t-1) + b t + c");

    py::class_<OrderThreshold>(m, "OrderThreshold")
        .def_readonly("nu0", &OrderThreshold::nu0)
        .def_readonly("threshold", &OrderThreshold::threshold);
    m.def("largest_root", &largest_root, py::arg("coeffs"));

    py::class_<EvaluationPolicy>(m, "EvaluationPolicy")
        .def(py::init<>())
        .def_readwrite("tolerance", &EvaluationPolicy::tolerance)
        .def_readwrite("max_terms", &EvaluationPolicy::max_terms)
        .def_readwrite("domain_cap", &EvaluationPolicy::domain_cap)
        .def_readwrite("allow_unverified", &EvaluationPolicy::allow_unverified);

    py::class_<EvaluationContext>(m, "EvaluationContext")
        .def(py::init<CoefficientTriple, double, EvaluationPolicy>(),
             py::arg("coeffs"), py::arg("nu"),
             py::arg("policy") = EvaluationPolicy{})
        .def(py::init([](double a, double b, double c, double nu) {
                 return EvaluationContext({a, b, c}, nu);
             }),
             py::arg("a"), py::arg("b"), py::arg("c"), py::arg("nu"))
        .def_property_readonly("nu", &EvaluationContext::nu)
        .def_property_readonly("threshold", &EvaluationContext::threshold)
        .def_property_readonly("verified", &EvaluationContext::verified)
        .def_property_readonly("q_at_nu", &EvaluationContext::q_at_nu);

    py::enum_<FamilyKind>(m, "FamilyKind")
        .value("psi", FamilyKind::psi)
        .value("psi1", FamilyKind::psi1)
        .value("gprime", FamilyKind::gprime)
        .value("hprime", FamilyKind::hprime)
        .value("delta", FamilyKind::delta)
        .value("theta", FamilyKind::theta);

    py::class_<RatioValue>(m, "RatioValue")
        .def_readonly("value", &RatioValue::value)
        .def_readonly("terms_used", &RatioValue::terms_used)
        .def_readonly("cancellation", &RatioValue::cancellation)
        .def("__float__", [](const RatioValue& v) { return v.value; });

    py::class_<SeriesFamily>(m, "SeriesFamily")
        .def(py::init<EvaluationContext, FamilyKind>(), py::arg("context"),
             py::arg("kind"))
        .def("coefficient", &SeriesFamily::coefficient, py::arg("n"))
        .def("eval",
             [](const SeriesFamily& f, double z) { return f.eval(z); },
             py::arg("z"))
        .def("eval_complex",
             [](const SeriesFamily& f, std::complex<double> z) {
                 return f.eval(z).value;
             },
             py::arg("z"))
        .def("eval_zdz",
             [](const SeriesFamily& f, double z) { return f.eval_zdz(z); },
             py::arg("z"));

    m.def("log_deriv_n",
          [](const EvaluationContext& ctx, double z) {
              return log_deriv_n(ctx, z).value;
          },
          py::arg("context"), py::arg("z"), "z N'(z)/N(z)");
    m.def("log_deriv_np",
          [](const EvaluationContext& ctx, double z) {
              return log_deriv_np(ctx, z).value;
          },
          py::arg("context"), py::arg("z"), "z N''(z)/N'(z)");

    py::class_<ZeroCatalog>(m, "ZeroCatalog")
        .def_readonly("zeros", &ZeroCatalog::zeros)
        .def_readonly("refined_tol", &ZeroCatalog::refined_tol)
        .def_readonly("scan_ceiling", &ZeroCatalog::scan_ceiling);
    m.def("find_zeros", &find_zeros, py::arg("family"), py::arg("count"),
          py::arg("tol") = 1e-12);

    py::class_<InterlacingReport>(m, "InterlacingReport")
        .def_readonly("pass_", &InterlacingReport::pass)
        .def_readonly("violation_index", &InterlacingReport::violation_index)
        .def_readonly("message", &InterlacingReport::message);
    m.def("interlacing_check", &interlacing_check, py::arg("psi_catalog"),
          py::arg("psi1_catalog"));

    py::enum_<Normalization>(m, "Normalization")
        .value("f", Normalization::f)
        .value("g", Normalization::g)
        .value("h", Normalization::h);
    py::enum_<RadiusKind>(m, "RadiusKind")
        .value("starlike", RadiusKind::starlike)
        .value("convex", RadiusKind::convex);

    py::class_<RadiusResult>(m, "RadiusResult")
        .def_readonly("radius", &RadiusResult::radius)
        .def_readonly("bracket_lo", &RadiusResult::bracket_lo)
        .def_readonly("bracket_hi", &RadiusResult::bracket_hi)
        .def_readonly("residual", &RadiusResult::residual)
        .def_readonly("upper_limit", &RadiusResult::upper_limit)
        .def("__float__", [](const RadiusResult& r) { return r.radius; });

    m.def("starlike_radius", &starlike_radius, py::arg("context"),
          py::arg("norm"), py::arg("beta") = 0.0);
    m.def("convex_radius", &convex_radius, py::arg("context"), py::arg("norm"),
          py::arg("beta") = 0.0);
    m.def("defining_function",
          [](const EvaluationContext& ctx, Normalization norm, RadiusKind kind,
             double beta, double r) {
              return defining_function(ctx, RadiusQuery{norm, kind, beta}, r);
          },
          py::arg("context"), py::arg("norm"), py::arg("kind"), py::arg("beta"),
          py::arg("r"));

    m.def("rayleigh_sums", &rayleigh_sums, py::arg("context"));

    py::class_<EulerRayleighSums>(m, "EulerRayleighSums")
        .def_readonly("newton", &EulerRayleighSums::newton)
        .def_readonly("published", &EulerRayleighSums::published)
        .def_readonly("precision_loss", &EulerRayleighSums::precision_loss);
    m.def("coefficient_sums", &coefficient_sums, py::arg("family"),
          py::arg("kmax"));

    py::enum_<BoundTarget>(m, "BoundTarget")
        .value("starlike_g", BoundTarget::starlike_g)
        .value("starlike_h", BoundTarget::starlike_h)
        .value("convex_g", BoundTarget::convex_g)
        .value("convex_h", BoundTarget::convex_h);

    py::class_<BoundBracket>(m, "BoundBracket")
        .def_readonly("k", &BoundBracket::k)
        .def_readonly("lower", &BoundBracket::lower)
        .def_readonly("upper", &BoundBracket::upper);
    py::class_<BoundBracketSet>(m, "BoundBracketSet")
        .def_readonly("brackets", &BoundBracketSet::brackets)
        .def_readonly("kreyszig_todd", &BoundBracketSet::kreyszig_todd);
    m.def("bound_brackets", &bound_brackets, py::arg("context"),
          py::arg("target"), py::arg("kmax") = 4);

    py::class_<AuditEntry>(m, "AuditEntry")
        .def_readonly("name", &AuditEntry::name)
        .def_readonly("published_value", &AuditEntry::published_value)
        .def_readonly("newton_value", &AuditEntry::newton_value)
        .def_readonly("match", &AuditEntry::match)
        .def_readonly("note", &AuditEntry::note);
    m.def("published_form_audit", &published_form_audit, py::arg("context"));
    m.def("format_audit_report", &format_audit_report, py::arg("context"));

    m.def("elementary_sums", &elementary_sums, py::arg("context"),
          py::arg("nmax"));
    py::class_<SymmetricData>(m, "SymmetricData")
        .def_readonly("e", &SymmetricData::e)
        .def_readonly("s_newton", &SymmetricData::s_newton)
        .def_readonly("s_det", &SymmetricData::s_det)
        .def_readonly("s_closed", &SymmetricData::s_closed)
        .def_readonly("precision_loss", &SymmetricData::precision_loss);
    m.def("power_sums_det", &power_sums_det, py::arg("context"), py::arg("nmax"),
          py::arg("alternating") = false);

    // test-oracle surface
    m.def("oracle_zero_catalog", &oracle::zero_catalog, py::arg("context"),
          py::arg("kind"), py::arg("count"), py::arg("tol") = 1e-12);
    m.def("direct_zero_sum", &oracle::direct_zero_sum, py::arg("catalog"),
          py::arg("power"), py::arg("tail") = true);
    py::class_<oracle::CircleScan>(m, "CircleScan")
        .def_readonly("min_re", &oracle::CircleScan::min_re)
        .def_readonly("theta_at_min", &oracle::CircleScan::theta_at_min);
    m.def("sample_min_re_ratio", &oracle::sample_min_re_ratio,
          py::arg("context"), py::arg("norm"), py::arg("r"),
          py::arg("samples") = 720);

    py::class_<TableCellResult>(m, "TableCellResult")
        .def_readonly("coeffs", &TableCellResult::coeffs)
        .def_readonly("nu", &TableCellResult::nu)
        .def_readonly("beta", &TableCellResult::beta)
        .def_readonly("result", &TableCellResult::result);
    m.def("generate_table", &generate_table, py::arg("table"),
          py::arg("policy") = EvaluationPolicy{});

    m.attr("__version__") = "0.1.0";
}
