#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phaseless/adaptive.hpp"
#include "phaseless/error.hpp"
#include "phaseless/hardness.hpp"
#include "phaseless/io.hpp"
#include "phaseless/oracle.hpp"
#include "phaseless/roots.hpp"
#include "phaseless/solver.hpp"

namespace py = pybind11;
using namespace phaseless;

// Rationals cross the boundary as fractions.Fraction (ints and "p/q"
// strings are accepted on input).
namespace pybind11::detail {
template <>
struct type_caster<Rat> {
  PYBIND11_TYPE_CASTER(Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (py::isinstance<py::bool_>(src)) return false;
    if (py::isinstance<py::float_>(src)) return false;
    try {
      value = Rat::parse(py::str(src).cast<std::string>());
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  static handle cast(const Rat& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str()).release();
  }
};
}  // namespace pybind11::detail

namespace {

Instance make_instance(int n, const std::vector<std::pair<Rat, Rat>>& points) {
  Instance inst{n, {}};
  for (const auto& [x, y] : points) inst.points.push_back({x, y});
  return inst;
}

std::vector<std::vector<Rat>> coeff_lists(const SolutionSet& set) {
  std::vector<std::vector<Rat>> out;
  for (const UPoly& p : set.polys) out.push_back(p.coeffs());
  return out;
}

std::vector<std::pair<Rat, Rat>> point_pairs(const std::vector<Point>& pts) {
  std::vector<std::pair<Rat, Rat>> out;
  for (const Point& p : pts) out.emplace_back(p.x, p.y);
  return out;
}

}  // namespace

PYBIND11_MODULE(_phaseless, m) {
  m.doc() = "Exact phaseless polynomial interpolation over the rationals";

  static py::exception<Error> error_type(m, "PhaselessError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type.ptr(),
                    (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "solve",
      [](int n, const std::vector<std::pair<Rat, Rat>>& points) {
        return coeff_lists(solve(make_instance(n, points)));
      },
      py::arg("n"), py::arg("points"),
      "All q of degree <= n with |q(x)| = y at every (x, y), up to sign.\n"
      "Returns canonical coefficient lists (index = power).");

  m.def(
      "oracle_enumerate",
      [](int n, const std::vector<std::pair<Rat, Rat>>& points) {
        return coeff_lists(oracle_enumerate(make_instance(n, points)));
      },
      py::arg("n"), py::arg("points"));

  m.def(
      "is_ambiguous",
      [](int n, const std::vector<std::pair<Rat, Rat>>& points) {
        return is_ambiguous(make_instance(n, points));
      },
      py::arg("n"), py::arg("points"));

  m.def(
      "groebner_basis",
      [](int n, const std::vector<std::pair<Rat, Rat>>& points) {
        std::vector<std::string> out;
        for (const MPoly& g : instance_basis(make_instance(n, points)).elements) {
          out.push_back(g.str());
        }
        return out;
      },
      py::arg("n"), py::arg("points"));

  m.def(
      "rational_roots",
      [](const std::vector<Rat>& coeffs) {
        return rational_roots(UPoly(coeffs)).roots;
      },
      py::arg("coeffs"));

  m.def(
      "select_next_point",
      [](const std::vector<std::pair<Rat, Rat>>& points, int n) {
        return select_next_point(make_instance(n, points).points, n);
      },
      py::arg("points"), py::arg("n"));

  m.def(
      "counterexample_pair",
      [](const std::vector<Rat>& nodes) {
        const auto [p, q] = counterexample_pair(nodes);
        return std::make_pair(p.coeffs(), q.coeffs());
      },
      py::arg("nodes"));

  py::class_<ReductionInstance>(m, "ReductionInstance")
      .def_readonly("n", &ReductionInstance::n)
      .def_readonly("k", &ReductionInstance::k)
      .def_property_readonly("exact_points",
                             [](const ReductionInstance& r) { return point_pairs(r.exact_points); })
      .def_property_readonly("phaseless_points",
                             [](const ReductionInstance& r) { return point_pairs(r.phaseless_points); })
      .def_readonly("weights", &ReductionInstance::weights)
      .def_readonly("decode_signs", &ReductionInstance::decode_signs)
      .def_readonly("S", &ReductionInstance::s)
      .def("to_json",
           [](const ReductionInstance& r) { return io::reduction_to_json(r).dump(); });

  m.def(
      "reduce_partition",
      [](const std::vector<long long>& t, int n, int k,
         std::optional<std::vector<Rat>> nodes,
         std::optional<std::vector<Rat>> exact_values) {
        std::vector<Integer> weights;
        for (long long v : t) weights.emplace_back(std::to_string(v));
        return reduce_partition(weights, n, k, nodes, exact_values);
      },
      py::arg("weights"), py::arg("n"), py::arg("k"),
      py::arg("nodes") = py::none(), py::arg("exact_values") = py::none());

  m.def("decode_solution", &decode_solution, py::arg("instance"), py::arg("signs"));
  m.def("feasibility_residual", &feasibility_residual, py::arg("instance"),
        py::arg("signs"));
  m.def("zero_residual_signs", &zero_residual_signs, py::arg("instance"));
}
