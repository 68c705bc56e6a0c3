#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sixmoment/arith.hpp"
#include "sixmoment/error.hpp"
#include "sixmoment/estermann.hpp"
#include "sixmoment/expsums.hpp"
#include "sixmoment/lemmas.hpp"
#include "sixmoment/moment.hpp"
#include "sixmoment/report.hpp"
#include "sixmoment/special.hpp"

namespace py = pybind11;
using namespace sixmoment;

namespace {

py::dict scan_dict(const scan::ScanReport& r) {
  return py::module_::import("json").attr("loads")(report::entry(r).body.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Verification kernels for the sixth-moment bound";
  m.attr("__version__") = report::kToolVersion;

  static py::exception<Error> exc(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::handle(exc.ptr())(e.what());
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(exc.ptr(), err.ptr());
    }
  });

  // arithmetic
  m.def("factorize", [](arith::u64 n) {
    std::vector<std::pair<arith::u64, int>> out;
    const auto f = arith::factorize(n);
    for (const auto& pp : f.factors()) out.emplace_back(pp.prime, pp.exponent);
    return out;
  });
  m.def("tau_k", py::overload_cast<arith::u64, unsigned>(&arith::tau_k), py::arg("n"), py::arg("k"));
  m.def("mobius", py::overload_cast<arith::u64>(&arith::mobius));
  m.def("euler_phi", py::overload_cast<arith::u64>(&arith::euler_phi));
  m.def("mod_inverse", &arith::mod_inverse, py::arg("a"), py::arg("c"));
  m.def("primitive_root", &arith::primitive_root);

  // special functions
  m.def("riemann_zeta", &special::riemann_zeta);
  m.def("hurwitz_zeta", &special::hurwitz_zeta, py::arg("s"), py::arg("r"));
  m.def("stieltjes_gamma", [](int j, double r) { return special::stieltjes_gamma(j, r); }, py::arg("j"),
        py::arg("r"));
  m.def("bessel_j", &special::bessel_j, py::arg("nu"), py::arg("x"));
  m.def("hankel_moment", &special::hankel_moment, py::arg("mu"), py::arg("nu"), py::arg("a"), py::arg("j"));

  // exponential sums
  m.def("kloosterman", [](arith::i64 a, arith::i64 b, arith::u64 c) { return expsums::kloosterman(a, b, c).value; },
        py::arg("m"), py::arg("n"), py::arg("c"));
  m.def("orthogonality_avg",
        [](arith::i64 a, arith::i64 b, arith::u64 q, int k) {
          return expsums::orthogonality_avg(a, b, expsums::CharacterTable(q), k);
        },
        py::arg("m"), py::arg("n"), py::arg("q"), py::arg("k"));
  m.def("orthogonality_expected", &expsums::orthogonality_expected, py::arg("m"), py::arg("n"), py::arg("q"),
        py::arg("k"));

  // Estermann Laurent data
  m.def("d_coeffs", [](arith::u64 eta) {
    const auto t = estermann::d_coeffs_direct(eta);
    return py::make_tuple(t.d3, t.d2, t.d1);
  }, py::arg("eta"));
  m.def("d_coeffs_cauchy", [](arith::i64 lambda, arith::u64 eta) {
    const auto t = estermann::laurent_via_cauchy(lambda, eta);
    return py::make_tuple(t.d3, t.d2, t.d1);
  }, py::arg("lam"), py::arg("eta"));
  m.def("d3_closed_form", py::overload_cast<arith::u64>(&estermann::d3_closed_form));

  // lemma kernels
  m.def("kappa_apply", &lemmas::kappa_apply, py::arg("g"), py::arg("k"));
  m.def("y_exponent", [](int a1, int b1, int a2, int b2, double eps) {
    return lemmas::y_exponent(a1, b1, a2, b2, eps).y;
  }, py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"), py::arg("eps") = 0.25);
  m.def("cfunc", &lemmas::cfunc, py::arg("variant"), py::arg("n"), py::arg("z"), py::arg("j1"), py::arg("j2"));

  // moment objects
  m.def("u_weight", [](double y, int k) { return moment::u_weight(y, k); }, py::arg("y"), py::arg("k") = 3);
  m.def("h_factor_check", [](arith::u64 p, int order, arith::u64 q) { return moment::h_factor_check(p, order, q); },
        py::arg("p"), py::arg("order"), py::arg("q") = 0);
  m.def("r1_leading", [](arith::u64 q, int k) { return moment::r1_leading(q, k).value; }, py::arg("q"),
        py::arg("k") = 3);
  m.def("moment_bound_estimate", [](arith::u64 q, int k) {
    moment::MomentConfig cfg;
    cfg.q = q;
    cfg.k = k;
    cfg.validate();
    return py::module_::import("json").attr("loads")(report::entry(moment::moment_bound_estimate(cfg)).body.dump());
  }, py::arg("q"), py::arg("k") = 3);

  // suites
  m.def("suite_names", &report::suite_names);
  m.def("run_suite", [](const std::string& name, arith::u64 q, arith::u64 n_max, arith::u64 c_max, arith::u64 seed) {
    report::SuiteOptions opt;
    opt.q = q;
    opt.n_max = n_max;
    opt.c_max = c_max;
    opt.seed = seed;
    py::list out;
    for (const auto& r : report::run_suite(name, opt)) out.append(scan_dict(r));
    return out;
  }, py::arg("name"), py::arg("q") = 0, py::arg("n_max") = 0, py::arg("c_max") = 0, py::arg("seed") = 1);
}
