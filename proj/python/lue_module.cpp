#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lue/airyfred.hpp"
#include "lue/asymptotics.hpp"
#include "lue/errors.hpp"
#include "lue/exactprob.hpp"
#include "lue/mcsample.hpp"
#include "lue/painleve.hpp"
#include "lue/specfun.hpp"
#include "lue/version.hpp"

namespace py = pybind11;
using namespace lue;

namespace {

exact::EnsembleParams ep(int n, double gamma) { return {n, gamma}; }

py::dict sigma_dict(const exact::SigmaValue& s) {
  py::dict d;
  d["t"] = s.t;
  d["sigma"] = s.sigma;
  d["sigma_prime"] = s.sigma_prime;
  d["sigma_double_prime"] = s.sigma_double_prime;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lue, m) {
  m.doc() = "Largest-eigenvalue distribution of the Laguerre unitary ensemble";
  m.attr("__version__") = kVersion;

  // DomainError derives from std::domain_error, which pybind11 maps to ValueError
  py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_ArithmeticError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_ValueError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);
  py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

  m.def("log_gamma", &specfun::log_gamma);
  m.def("barnes_ln_g", &specfun::barnes_ln_g);
  m.def("zeta_prime_minus_one", &specfun::zeta_prime_minus_one);
  m.def("airy", [](double x) {
    const auto a = specfun::airy(x);
    return py::make_tuple(a.ai, a.ai_prime);
  });

  m.def("dn_infinity_log", [](int n, double g) { return exact::dn_infinity_log(ep(n, g)); }, py::arg("n"),
        py::arg("gamma"));
  m.def("phat_projection", [](int n, double g, double t) { return exact::phat_projection(ep(n, g), t).log_value; },
        py::arg("n"), py::arg("gamma"), py::arg("t"), "ln P^(n, gamma, t)");
  m.def("phat_hankel_oracle",
        [](int n, double g, double t) { return exact::phat_hankel_oracle(ep(n, g), t).log_value; }, py::arg("n"),
        py::arg("gamma"), py::arg("t"));
  m.def("p_scaled", [](int n, double g, double a) { return exact::p_scaled(ep(n, g), a).log_value; }, py::arg("n"),
        py::arg("gamma"), py::arg("alpha"), "ln P(n, gamma, alpha)");
  m.def("sigma_exact", [](int n, double g, double t) { return sigma_dict(exact::sigma_exact(ep(n, g), t)); },
        py::arg("n"), py::arg("gamma"), py::arg("t"));

  m.def("cubic_root_f_tilde", &asympt::cubic_root_f_tilde, py::arg("n"), py::arg("gamma"), py::arg("alpha"));
  m.def("dlnp_dalpha", [](int n, double g, double a) { return asympt::dlnp_dalpha(n, g, a).value; }, py::arg("n"),
        py::arg("gamma"), py::arg("alpha"));
  m.def("lnp_theorem", [](int n, double g, double a) { return asympt::lnp_theorem(n, g, a).value; }, py::arg("n"),
        py::arg("gamma"), py::arg("alpha"));
  m.def("lnp_small_alpha", &asympt::lnp_small_alpha, py::arg("n"), py::arg("gamma"), py::arg("alpha"));
  m.def("airy_tail", &asympt::airy_tail, py::arg("s"));
  m.def("tracy_widom_constant", &asympt::tracy_widom_constant);
  m.def("soft_edge_alpha", &asympt::soft_edge_alpha, py::arg("n"), py::arg("s"));
  m.def("level_density", &asympt::level_density, py::arg("n"), py::arg("x"));

  m.def("sigma_form_residual",
        [](int n, double g, double t, double s, double sp, double spp) {
          return painleve::sigma_form_residual({t, s, sp, spp}, n, g);
        },
        py::arg("n"), py::arg("gamma"), py::arg("t"), py::arg("sigma"), py::arg("sigma_prime"),
        py::arg("sigma_double_prime"));
  m.def("pv_residual",
        [](int n, double g, double t, double S, double Sp, double Spp) {
          return painleve::pv_residual({t, S, Sp, Spp}, n, g);
        },
        py::arg("n"), py::arg("gamma"), py::arg("t"), py::arg("S"), py::arg("S_prime"), py::arg("S_double_prime"));
  m.def("sigma_from_s", &painleve::sigma_from_s, py::arg("t"), py::arg("S"), py::arg("S_prime"), py::arg("n"),
        py::arg("gamma"));
  m.def("integrate_sigma_form",
        [](int n, double g, double t0, double t1, const std::vector<double>& grid) {
          const auto init = exact::sigma_exact(ep(n, g), t0);
          const auto path = painleve::integrate_sigma_form(n, g, init, t1, grid);
          std::vector<double> out;
          for (const auto& s : path.samples) out.push_back(s.sigma);
          return out;
        },
        py::arg("n"), py::arg("gamma"), py::arg("t0"), py::arg("t1"), py::arg("grid"),
        "sigma on `grid`, integrated from exact data at t0");

  m.def("airy_kernel", &airy::airy_kernel, py::arg("u"), py::arg("v"));
  m.def("airy_fredholm_logdet",
        [](double s, std::size_t nodes) {
          py::gil_scoped_release release;
          return airy::airy_fredholm_logdet(s, nodes).log_det;
        },
        py::arg("s"), py::arg("node_count") = 80);
  m.def("extract_tw_constant",
        [](const std::vector<double>& s, std::size_t nodes) {
          const auto fit = airy::extract_tw_constant(s, nodes);
          return py::make_tuple(fit.c0, fit.b);
        },
        py::arg("s_values"), py::arg("node_count") = 80, "(c0, b) of c(s) = c0 + b s^-3");

  m.def("sample_largest",
        [](int n, double g, std::size_t count, std::uint64_t seed, bool scaled, unsigned threads) {
          py::gil_scoped_release release;
          return mc::draw_largest({ep(n, g), count, seed, scaled ? mc::Scaling::scaled : mc::Scaling::unscaled},
                                  threads);
        },
        py::arg("n"), py::arg("gamma"), py::arg("sample_count"), py::arg("seed"), py::arg("scaled") = false,
        py::arg("threads") = 1, "largest eigenvalue per draw, in draw order");
}
