#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wmnorm/certificates.hpp"
#include "wmnorm/error.hpp"
#include "wmnorm/matrices.hpp"
#include "wmnorm/report.hpp"
#include "wmnorm/spectral.hpp"
#include "wmnorm/weights.hpp"
#include "wmnorm/wirtinger.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace wmnorm;

namespace {

WeightSequence weights_from(const std::string& spec, std::size_t n) {
  return make_weights(parse_family(spec), n);
}

WeightSequence weights_from_values(std::vector<double> values) {
  auto family = Family::custom(values);
  return WeightSequence(std::move(values), std::move(family));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
    l2 operator norms of weighted mean matrices
    -------------------------------------------

    Weight sequences, matrix-free products with B_N, the tridiagonal
    A^{-1}, Sturm bisection and power iteration, the multiplier
    certificate and the tridiagonal Toeplitz (Wirtinger-type) checks.
  )pbdoc";

  py::register_exception<InvalidWeight>(m, "InvalidWeight", PyExc_ValueError);
  py::register_exception<ConditionViolated>(m, "ConditionViolated",
                                            PyExc_ValueError);
  py::register_exception<DenseSizeExceeded>(m, "DenseSizeExceeded",
                                            PyExc_ValueError);

  py::class_<WeightSequence>(m, "WeightSequence")
      .def("__len__", &WeightSequence::size)
      .def_property_readonly("lambdas", [](const WeightSequence& w) {
        return std::vector<double>(w.lambdas().begin(), w.lambdas().end());
      })
      .def_property_readonly("cumsums", [](const WeightSequence& w) {
        return std::vector<double>(w.cumsums().begin(), w.cumsums().end());
      })
      .def_property_readonly("ratios", &WeightSequence::ratios)
      .def_property_readonly("family",
                             [](const WeightSequence& w) {
                               return w.family().describe();
                             })
      .def("scaled", &WeightSequence::scaled, py::arg("factor"));

  m.def("make_weights", &weights_from, py::arg("spec"), py::arg("n"),
        "Weights from a family spec string such as 'power:alpha=1'.");
  m.def("weights_from_values", &weights_from_values, py::arg("values"));

  py::class_<RatioProfile>(m, "RatioProfile")
      .def_readonly("ratios", &RatioProfile::ratios)
      .def_readonly("diffs", &RatioProfile::diffs)
      .def_readonly("l_trunc", &RatioProfile::l_trunc);
  m.def("ratio_profile", &ratio_profile, py::arg("weights"));

  py::class_<TridiagonalSym>(m, "TridiagonalSym")
      .def(py::init<std::vector<double>, std::vector<double>>(),
           py::arg("diag"), py::arg("offdiag"))
      .def_property_readonly("diag", &TridiagonalSym::diag)
      .def_property_readonly("offdiag", &TridiagonalSym::offdiag)
      .def("__len__", &TridiagonalSym::size);

  m.def("apply_B",
        [](const WeightSequence& w, const std::vector<double>& x) {
          return LowerTriangularMean(w).apply(x);
        },
        py::arg("weights"), py::arg("x"));
  m.def("apply_Bt",
        [](const WeightSequence& w, const std::vector<double>& x) {
          return LowerTriangularMean(w).apply_transpose(x);
        },
        py::arg("weights"), py::arg("x"));
  m.def("build_gram_inverse", &build_gram_inverse, py::arg("weights"));
  m.def("dense_mean",
        [](const WeightSequence& w) { return dense_mean(w); },
        py::arg("weights"));
  m.def("quadratic_form",
        [](const WeightSequence& w) { return build_quadratic_form(w).alpha; },
        py::arg("weights"));

  py::enum_<Method>(m, "Method")
      .value("sturm_bisection", Method::sturm_bisection)
      .value("power_iteration", Method::power_iteration)
      .value("dense_charpoly", Method::dense_charpoly);

  py::class_<SpectralResult>(m, "SpectralResult")
      .def_readonly("value", &SpectralResult::value)
      .def_readonly("method", &SpectralResult::method)
      .def_readonly("iterations", &SpectralResult::iterations)
      .def_readonly("uncertainty", &SpectralResult::uncertainty)
      .def_readonly("converged", &SpectralResult::converged);

  m.def("sturm_count", &sturm_count, py::arg("t"), py::arg("x"));
  m.def("eigen_extreme",
        [](const TridiagonalSym& t, const std::string& which, double tol) {
          if (which != "min" && which != "max") {
            throw py::value_error("which must be 'min' or 'max'");
          }
          return eigen_extreme(t, which == "min" ? Extreme::min : Extreme::max,
                               tol);
        },
        py::arg("t"), py::arg("which") = "min", py::arg("tol") = 1e-12);
  m.def("power_norm",
        [](const WeightSequence& w, double tol, std::size_t max_iter) {
          return power_norm(LowerTriangularMean(w), tol, max_iter);
        },
        py::arg("weights"), py::arg("tol") = 1e-10,
        py::arg("max_iter") = 100000);

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("l", &Certificate::l)
      .def_readonly("k", &Certificate::k)
      .def_readonly("c", &Certificate::c)
      .def_readonly("mu", &Certificate::mu)
      .def_readonly("slack34", &Certificate::slack34)
      .def_readonly("tail_slack", &Certificate::tail_slack);
  m.def("build_certificate",
        [](const WeightSequence& w, std::optional<double> l) {
          return l ? build_certificate(w, *l) : build_certificate(w);
        },
        py::arg("weights"), py::arg("l") = py::none());

  // Full certify report as a JSON string; the package wrapper decodes it.
  m.def("certify_json",
        [](const WeightSequence& w, std::optional<double> l,
           std::size_t trials, std::uint64_t seed) {
          const Certificate cert =
              l ? build_certificate(w, *l) : build_certificate(w);
          const ChainReport chain = verify_34_chain(cert, w);
          const QuadraticBoundReport bound =
              verify_quadratic_bound(w, cert.l, trials, seed);
          return certify_json(cert, chain, bound).dump();
        },
        py::arg("weights"), py::arg("l") = py::none(),
        py::arg("trials") = 1000, py::arg("seed") = 0);

  m.def("reduction_coefficient", &reduction_coefficient, py::arg("l"));
  m.def("reduction_constant", &reduction_constant, py::arg("l"));
  m.def("check_vertex_lemma",
        [](double alpha, double beta, double mu, double a_next,
           std::size_t samples, std::uint64_t seed) {
          return check_vertex_lemma(VertexLemmaCase{alpha, beta, mu, a_next},
                                    samples, seed);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("mu"), py::arg("a_next"),
        py::arg("samples") = 1000, py::arg("seed") = 0);

  m.def("ftt_eigenvalues_closed_form", &ftt_eigenvalues_closed_form,
        py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("ftt_matrix",
        [](double a, double b, std::size_t n) {
          return make_ftt_matrix(a, b, n).matrix;
        },
        py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("verify_ftt_inequalities",
        [](std::size_t n, double a, double b, std::size_t trials,
           std::uint64_t seed) {
          return to_json(verify_ftt_inequalities(n, a, b, trials, seed)).dump();
        },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("trials") = 1000,
        py::arg("seed") = 0);
  m.def("sine_certificate_check",
        [](double a, double b, std::size_t n, const std::string& sign) {
          if (sign != "plus" && sign != "minus") {
            throw py::value_error("sign must be 'plus' or 'minus'");
          }
          return to_json(sine_certificate_check(
                             a, b, n,
                             sign == "plus" ? SineSign::plus : SineSign::minus))
              .dump();
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("sign") = "plus");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
