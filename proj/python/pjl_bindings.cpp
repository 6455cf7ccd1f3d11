#include "pjl/asymptotics.hpp"
#include "pjl/cli.hpp"
#include "pjl/counting.hpp"
#include "pjl/infinite.hpp"
#include "pjl/oracle.hpp"
#include "pjl/partitions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

py::object to_py(const pjl::BigInt& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::object to_py(const pjl::Rational& x) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(x)), to_py(denominator(x)));
}

}  // namespace

PYBIND11_MODULE(_pjl, m) {
  m.doc() = "Prime juggling pattern counts and checks";

  m.def("c", [](int t, int n) { return to_py(pjl::c(t, n)); }, py::arg("t"), py::arg("n"));
  m.def("count_normal_prime_2", [](int n) { return to_py(pjl::count_normal_prime_2(n)); }, py::arg("n"));
  m.def("count_multiplex_prime_2", [](int n) { return to_py(pjl::count_multiplex_prime_2(n)); }, py::arg("n"));
  m.def("count_strict_multiplex_2", [](int n) { return to_py(pjl::count_strict_multiplex_2(n)); }, py::arg("n"));
  m.def("count_colored_prime_2", [](int n) { return to_py(pjl::count_colored_prime_2(n)); }, py::arg("n"));
  m.def("count_passing_prime_1", [](int n, int k) { return to_py(pjl::count_passing_prime_1(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("count_base_state_2", [](int n) { return to_py(pjl::count_base_state_2(n)); }, py::arg("n"));
  m.def("lower_bound_normal_b", [](int b, int n) { return to_py(pjl::lower_bound_normal_b(b, n)); }, py::arg("b"),
        py::arg("n"));

  m.def(
      "oracle_count",
      [](const std::string& variant, int balls, int period, int k, bool quotient_colors, int jobs) {
        pjl::OracleQuery q;
        q.variant = pjl::parse_variant(variant);
        q.balls = balls;
        q.period = period;
        q.k = k;
        q.quotient_colors = quotient_colors;
        q.jobs = jobs;
        py::gil_scoped_release release;
        return pjl::enumerate_prime_cycles(q).count;
      },
      py::arg("variant"), py::arg("balls"), py::arg("period"), py::arg("k") = 1, py::arg("quotient_colors") = false,
      py::arg("jobs") = 1);

  m.def(
      "gamma",
      [](const std::string& weight, int terms, int k, int b) {
        pjl::GammaSpec s;
        s.weight = pjl::parse_weight(weight);
        s.terms = terms;
        s.k = k;
        s.b = b;
        return to_py(pjl::gamma(s).partial);
      },
      py::arg("weight") = "one", py::arg("terms") = 12, py::arg("k") = 2, py::arg("b") = 3);
  m.def("q", [](int t) { return to_py(pjl::q(t)); }, py::arg("t"));

  m.def("fr", &pjl::fr, py::arg("state"));
  m.def("successors_inf", &pjl::successors_inf, py::arg("state"), py::arg("max_len"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = pjl::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line front end; returns (exit code, stdout, stderr).");
}
