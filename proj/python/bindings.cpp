#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "causal2d/cylinder.hpp"
#include "causal2d/embedding.hpp"
#include "causal2d/errors.hpp"
#include "causal2d/json_io.hpp"
#include "causal2d/oracle.hpp"
#include "causal2d/smoothconf.hpp"

namespace py = pybind11;
using namespace causal2d;

// Rationals cross the boundary as fractions.Fraction; int and "p/q" strings are accepted too.
namespace pybind11::detail {

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      if (PyBool_Check(src.ptr())) return false;
      if (py::isinstance<py::int_>(src)) {
        value = mpq_class(mpz_class(py::str(src).cast<std::string>()));
        return true;
      }
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") && !PyFloat_Check(src.ptr())) {
        const auto num = py::str(src.attr("numerator")).cast<std::string>();
        const auto den = py::str(src.attr("denominator")).cast<std::string>();
        value = mpq_class(mpz_class(num), mpz_class(den));
        value.canonicalize();
        return true;
      }
    } catch (const Error&) {
      return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
    return false;
  }

  static handle cast(const mpq_class& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    const py::object num = py::reinterpret_steal<py::object>(
        PyLong_FromString(r.get_num().get_str().c_str(), nullptr, 10));
    const py::object den = py::reinterpret_steal<py::object>(
        PyLong_FromString(r.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

// Owned by the module for the life of the interpreter.
PyObject* error_type = nullptr;

std::vector<Anchor> to_anchors(const std::vector<std::pair<Rational, Rational>>& pts) {
  std::vector<Anchor> out;
  out.reserve(pts.size());
  for (const auto& [x, y] : pts) out.push_back(Anchor{x, y});
  return out;
}

std::vector<std::pair<Rational, Rational>> from_anchors(const std::vector<Anchor>& anchors) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& a : anchors) out.emplace_back(a.x, a.y);
  return out;
}

py::dict report_dict(const OrderReport& r) {
  py::list failures;
  for (const auto& f : r.failures) failures.append(py::make_tuple(f.p, f.q, f.relation));
  py::dict d;
  d["checked"] = r.checked;
  d["failures"] = failures;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact causal automorphisms of 1+1 Minkowski space and the Einstein cylinder";

  error_type = PyErr_NewException("causal2d._core.Causal2dError", PyExc_ValueError, nullptr);
  m.add_object("Causal2dError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.detail());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::enum_<Direction>(m, "Direction")
      .value("Increasing", Direction::Increasing)
      .value("Decreasing", Direction::Decreasing);
  py::enum_<AutoKind>(m, "AutoKind").value("Proper", AutoKind::Proper).value("Flip", AutoKind::Flip);
  py::enum_<DescentVerdict>(m, "DescentVerdict")
      .value("Automorphism", DescentVerdict::Automorphism)
      .value("WellDefinedNotInjective", DescentVerdict::WellDefinedNotInjective)
      .value("NotWellDefined", DescentVerdict::NotWellDefined);

  // Maps of the line.
  py::class_<MonotoneMap>(m, "MonotoneMap")
      .def(py::init([](const std::vector<std::pair<Rational, Rational>>& anchors, const Rational& left,
                       const Rational& right, Direction d) { return MonotoneMap(to_anchors(anchors), left, right, d); }),
           py::arg("anchors"), py::arg("left_slope"), py::arg("right_slope"), py::arg("direction"))
      .def_static("affine", &MonotoneMap::affine, py::arg("slope"), py::arg("intercept"))
      .def_static("identity", &MonotoneMap::identity)
      .def_static("translation", &MonotoneMap::translation)
      .def("__call__", &MonotoneMap::operator())
      .def("inverse_at", &MonotoneMap::inverse_at)
      .def_property_readonly("anchors", [](const MonotoneMap& f) { return from_anchors(f.anchors()); })
      .def_property_readonly("left_slope", &MonotoneMap::left_slope)
      .def_property_readonly("right_slope", &MonotoneMap::right_slope)
      .def_property_readonly("direction", &MonotoneMap::direction)
      .def(py::self == py::self);

  py::class_<QuasiPeriodicMap>(m, "QuasiPeriodicMap")
      .def_static("from_fundamental",
                  [](const std::vector<std::pair<Rational, Rational>>& anchors, const Rational& c) {
                    return QuasiPeriodicMap::from_fundamental(to_anchors(anchors), c);
                  }, py::arg("anchors"), py::arg("c"))
      .def("__call__", &QuasiPeriodicMap::operator())
      .def("inverse_at", &QuasiPeriodicMap::inverse_at)
      .def_property_readonly("fundamental", [](const QuasiPeriodicMap& f) { return from_anchors(f.fundamental()); })
      .def_property_readonly("c", &QuasiPeriodicMap::c)
      .def_property_readonly("direction", &QuasiPeriodicMap::direction)
      .def(py::self == py::self);

  py::class_<LineMap>(m, "LineMap")
      .def(py::init<MonotoneMap>())
      .def(py::init<QuasiPeriodicMap>())
      .def_static("identity", &LineMap::identity)
      .def("__call__", &LineMap::operator())
      .def("inverse_at", &LineMap::inverse_at)
      .def_property_readonly("direction", &LineMap::direction)
      .def_property_readonly("is_periodic", [](const LineMap& f) { return f.periodic() != nullptr; })
      .def(py::self == py::self);
  py::implicitly_convertible<MonotoneMap, LineMap>();
  py::implicitly_convertible<QuasiPeriodicMap, LineMap>();

  m.def("pl_compose", &pl_compose);
  m.def("pl_invert", &pl_invert);
  m.def("qp_compose", &qp_compose);
  m.def("qp_invert", &qp_invert);
  m.def("qp_quasi_period", py::overload_cast<const LineMap&>(&qp_quasi_period));
  m.def("compose", py::overload_cast<const LineMap&, const LineMap&>(&compose));
  m.def("invert", py::overload_cast<const LineMap&>(&invert));

  // Flat spacetime.
  py::class_<Event>(m, "Event")
      .def(py::init<Rational, Rational>(), py::arg("x"), py::arg("t"))
      .def_readwrite("x", &Event::x)
      .def_readwrite("t", &Event::t)
      .def(py::self == py::self)
      .def("__repr__", [](const Event& e) { return "Event(" + to_string(e.x) + ", " + to_string(e.t) + ")"; });
  py::class_<NullEvent>(m, "NullEvent")
      .def(py::init<Rational, Rational>(), py::arg("u"), py::arg("v"))
      .def_readwrite("u", &NullEvent::u)
      .def_readwrite("v", &NullEvent::v)
      .def(py::self == py::self);
  m.def("null_coords", &null_coords);
  m.def("event_coords", &event_coords);
  m.def("causally_leq", &causally_leq);
  m.def("chronologically_ll", &chronologically_ll);

  py::class_<CausalAutomorphism>(m, "CausalAutomorphism")
      .def(py::init<AutoKind, LineMap, LineMap>(), py::arg("kind"), py::arg("phi"), py::arg("psi"))
      .def_static("identity", &CausalAutomorphism::identity)
      .def("__call__", &CausalAutomorphism::operator())
      .def("inverse_at", &CausalAutomorphism::inverse_at)
      .def_property_readonly("kind", &CausalAutomorphism::kind)
      .def_property_readonly("phi", &CausalAutomorphism::phi)
      .def_property_readonly("psi", &CausalAutomorphism::psi)
      .def(py::self == py::self);
  m.def("auto_compose", &auto_compose);
  m.def("auto_invert", &auto_invert);
  m.def(
      "verify_order_iso",
      [](const CausalAutomorphism& F, std::uint64_t seed, std::size_t pairs) {
        SampleSpec spec;
        spec.seed = seed;
        spec.pairs = pairs;
        return report_dict(verify_order_iso(F, spec));
      },
      py::arg("F"), py::arg("seed") = 1, py::arg("pairs") = 1000);
  m.def(
      "verify_point_map",
      [](const PointMap& map, std::uint64_t seed, std::size_t pairs) {
        SampleSpec spec;
        spec.seed = seed;
        spec.pairs = pairs;
        return report_dict(verify_order_iso(map, spec));
      },
      py::arg("map"), py::arg("seed") = 1, py::arg("pairs") = 1000);

  // Cylinder.
  py::class_<CylPoint>(m, "CylPoint")
      .def(py::init(&CylPoint::make), py::arg("theta"), py::arg("t"))
      .def_readonly("theta", &CylPoint::theta)
      .def_readonly("t", &CylPoint::t)
      .def(py::self == py::self);
  m.def("project", &project);
  m.def("cyl_leq", &cyl_leq);
  m.def("cyl_ll", &cyl_ll);
  m.def("deck", &deck);
  m.def("conjugate_deck", &conjugate_deck);
  m.def("satisfies_paper_condition", &satisfies_paper_condition);
  m.def("descends", &descends);

  py::class_<CylinderAutomorphism>(m, "CylinderAutomorphism")
      .def(py::init<CausalAutomorphism>())
      .def_static("identity", &CylinderAutomorphism::identity)
      .def_property_readonly("rep", &CylinderAutomorphism::rep)
      .def_property_readonly("c", &CylinderAutomorphism::c)
      .def_property_readonly("canonical", &CylinderAutomorphism::canonical)
      .def(py::self == py::self);
  m.def("descend_apply", &descend_apply);
  m.def("canonical_rep", py::overload_cast<const CausalAutomorphism&>(&canonical_rep));
  m.def("quotient_compose", &quotient_compose);
  m.def("quotient_invert", &quotient_invert);

  // Embeddings.
  py::class_<Domain>(m, "Domain")
      .def_static("plane", &Domain::plane)
      .def_static("strip", &Domain::strip, py::arg("half_height"))
      .def_static("diamond", &Domain::diamond, py::arg("a"))
      .def("contains", py::overload_cast<const Event&>(&Domain::contains, py::const_))
      .def(py::self == py::self);
  m.def("shadow", [](const Event& p, const Domain& d) {
    const ShadowInterval s = shadow(p, d);
    return py::make_tuple(s.left, s.right);
  });
  py::class_<EmbeddingMap>(m, "EmbeddingMap")
      .def("__call__", &EmbeddingMap::operator())
      .def("via_shadow", &EmbeddingMap::via_shadow);
  m.def("extend_embedding", &extend_embedding);
  m.def("image_domain", &image_domain);
  m.def("conjugating_auto", &conjugating_auto);
  m.def(
      "verify_cauchy_axis",
      [](const Domain& d, std::uint64_t seed, std::size_t samples) {
        SampleSpec spec;
        spec.seed = seed;
        spec.pairs = samples;
        const CauchyReport r = verify_cauchy_axis(d, spec);
        py::dict out;
        out["checked"] = r.checked;
        out["failures"] = r.failures;
        out["passed"] = r.passed();
        return out;
      },
      py::arg("domain"), py::arg("seed") = 1, py::arg("samples") = 1000);

  // Smooth maps.
  py::class_<SmoothMonotoneMap>(m, "SmoothMonotoneMap")
      .def_static("affine", &SmoothMonotoneMap::affine, py::arg("a"), py::arg("b"))
      .def_static("cubic_plus", &SmoothMonotoneMap::cubic_plus, py::arg("a"), py::arg("b"), py::arg("c0"), py::arg("d"));
  m.def("sm_eval_deriv", &sm_eval_deriv);
  m.def("sm_inverse", &sm_inverse, py::arg("f"), py::arg("y"), py::arg("tol"));
  py::class_<SmoothAutomorphism>(m, "SmoothAutomorphism")
      .def(py::init<AutoKind, SmoothMonotoneMap, SmoothMonotoneMap>(), py::arg("kind"), py::arg("phi"), py::arg("psi"))
      .def("__call__", &SmoothAutomorphism::operator())
      .def("inverse", &SmoothAutomorphism::inverse, py::arg("x"), py::arg("t"), py::arg("tol"))
      .def("exact_lambda", &SmoothAutomorphism::exact_lambda);
  m.def(
      "conformal_defect",
      [](const SmoothAutomorphism& F, double x, double t, double h, bool richardson) {
        const ConformalReport r = conformal_defect(F, x, t, h, richardson);
        py::dict out;
        out["lambda"] = r.lambda;
        out["defect"] = r.defect;
        out["null_preserved"] = r.null_preserved;
        out["reference_lambda"] = r.reference_lambda;
        out["reference_defect"] = r.reference_defect;
        return out;
      },
      py::arg("F"), py::arg("x"), py::arg("t"), py::arg("h") = 1e-4, py::arg("richardson") = true);
  m.def("inverse_axis_slope", &inverse_axis_slope);

  // Oracle.
  py::class_<CausalGrid>(m, "CausalGrid")
      .def("__len__", &CausalGrid::size)
      .def("leq", &CausalGrid::leq)
      .def("successors", &CausalGrid::successors)
      .def_property_readonly("edge_count", &CausalGrid::edge_count)
      .def("is_partial_order", &CausalGrid::is_partial_order);
  m.def("build_flat_grid", [](long n) { return build_flat_grid(n); }, py::arg("n"));
  m.def("build_cyl_grid", &build_cyl_grid, py::arg("n"));
  m.def("check_descent_brute", [](const CausalAutomorphism& g, long n) {
    const BruteDescentResult r = check_descent_brute(g, n);
    return py::make_tuple(r.verdict, r.order_iso);
  });

  // JSON round trip, in the CLI's format.
  m.def("automorphism_to_json", [](const CausalAutomorphism& F) { return json::to_json(F).dump(); });
  m.def("automorphism_from_json",
        [](const std::string& text) { return json::automorphism_from(json::json::parse(text), ""); });
}
