#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphere_search/curve_io.hpp"
#include "sphere_search/geometry.hpp"
#include "sphere_search/search.hpp"
#include "sphere_search/tour.hpp"
#include "sphere_search/verification.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace sphere_search;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sphere inspection tours and competitive hyperplane search.";

  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<SearchError>(m, "SearchError", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  m.attr("NORM_TOLERANCE") = kNormTolerance;
  m.attr("GEOMETRY_TOLERANCE") = kGeometryTolerance;

  py::class_<UnitDirection>(m, "UnitDirection")
      .def(py::init<Vector>(), "coords"_a)
      .def_static("normalize", [](const Vector& v) { return UnitDirection::normalize(v); })
      .def_property_readonly("coords", &UnitDirection::coords)
      .def_property_readonly("dim", &UnitDirection::dim)
      .def("__neg__", [](const UnitDirection& u) { return -u; })
      .def("__repr__", [](const UnitDirection& u) {
        return "UnitDirection(" + py::repr(py::cast(u.coords())).cast<std::string>() + ")";
      });

  py::class_<Hyperplane>(m, "Hyperplane")
      .def(py::init<UnitDirection, double>(), "normal"_a, "offset"_a)
      .def_property_readonly("normal", &Hyperplane::normal)
      .def_property_readonly("offset", &Hyperplane::offset)
      .def("signed_distance", [](const Hyperplane& h, const Vector& x) { return h.signed_distance(x); })
      .def("contains", [](const Hyperplane& h, const Vector& x) { return h.contains(x); });

  py::class_<PolylineCurve>(m, "PolylineCurve")
      .def(py::init<std::vector<Vector>, bool>(), "vertices"_a, "closed"_a)
      .def_property_readonly("vertices", &PolylineCurve::vertices)
      .def_property_readonly("closed", &PolylineCurve::closed)
      .def_property_readonly("dim", &PolylineCurve::dim)
      .def_property_readonly("length", &PolylineCurve::length)
      .def("prefix", &PolylineCurve::prefix, "arc_length"_a)
      .def("scaled", &PolylineCurve::scaled, "factor"_a)
      .def("to_json", [](const PolylineCurve& c) { return curve_to_json(c); })
      .def_static("from_json", &curve_from_json, "text"_a);

  m.def("norm2", [](const Vector& v) { return norm2(v); }, "v"_a);
  m.def("sees", [](const Vector& p, const UnitDirection& q) { return sees(p, q); }, "p"_a, "q"_a,
        "True iff the segment from p to q meets the closed unit ball only at q.");
  m.def(
      "first_hit",
      [](const PolylineCurve& curve, const Hyperplane& h) -> std::optional<std::pair<double, Vector>> {
        if (auto hit = first_hit(curve, h)) return std::pair{hit->arc_length, hit->point};
        return std::nullopt;
      },
      "curve"_a, "hyperplane"_a, "(arc_length, point) of the first contact, or None.");
  m.def(
      "sample_unit_direction",
      [](std::size_t dim, std::uint64_t seed) {
        Rng rng(seed);
        return sample_unit_direction(dim, rng);
      },
      "dim"_a, "seed"_a);

  // Tour
  m.def(
      "cross_polytope_vertices",
      [](std::size_t dim, std::optional<double> scale) {
        auto spec = CrossPolytopeSpec::inspecting(dim);
        if (scale) spec.scale = *scale;
        return cross_polytope_vertices(spec);
      },
      "dim"_a, "scale"_a = py::none());
  m.def("hamiltonian_cycle", [](std::size_t d) { return hamiltonian_cycle(d).labels(); }, "dim"_a);
  m.def("inductive_hamiltonian_cycle",
        [](std::size_t d) { return inductive_hamiltonian_cycle(d).labels(); }, "dim"_a);
  m.def("build_inspection_tour", &build_inspection_tour, "dim"_a, "scale"_a = py::none());
  m.def("inspection_tour_length", &inspection_tour_length, "dim"_a);

  // Verification
  py::class_<CoverReport>(m, "CoverReport")
      .def_readonly("covered", &CoverReport::covered)
      .def_readonly("witness", &CoverReport::witness)
      .def_readonly("samples_used", &CoverReport::samples_used);

  m.def(
      "vertex_set_sees_all",
      [](const std::vector<Vector>& points, std::size_t samples, std::uint64_t seed) {
        Rng rng(seed);
        return vertex_set_sees_all(points, samples, rng);
      },
      "points"_a, "samples"_a, "seed"_a = 1);
  m.def(
      "hull_contains_sphere",
      [](const std::vector<Vector>& points, std::size_t samples, std::uint64_t seed) {
        Rng rng(seed);
        return hull_contains_sphere(points, samples, rng);
      },
      "points"_a, "samples"_a, "seed"_a = 1);
  m.def(
      "lemma_aux_equivalence",
      [](const std::vector<Vector>& points, std::size_t samples, std::uint64_t seed) {
        Rng rng(seed);
        return lemma_aux_equivalence(points, samples, rng);
      },
      "points"_a, "samples"_a, "seed"_a = 1);
  m.def(
      "simplex_cover",
      [](std::size_t dim) {
        std::vector<UnitDirection> poles;
        for (auto& h : simplex_cover(dim)) poles.push_back(h.pole);
        return poles;
      },
      "dim"_a, "Poles of d + 1 open hemispheres covering the sphere.");
  m.def(
      "refute_cover",
      [](const std::vector<UnitDirection>& poles, std::uint64_t seed) {
        Rng rng(seed);
        return refute_cover(poles, rng);
      },
      "poles"_a, "seed"_a = 1);
  m.def(
      "find_uncovered_witness",
      [](const PolylineCurve& curve, std::size_t samples, std::uint64_t seed, unsigned depth) {
        Rng rng(seed);
        WitnessSearchOptions options;
        options.subdivision_depth = depth;
        return find_uncovered_witness(curve, samples, rng, options);
      },
      "curve"_a, "samples"_a, "seed"_a = 1, "depth"_a = 6);

  // Search
  py::class_<DoublingStrategy>(m, "DoublingStrategy")
      .def(py::init<PolylineCurve, int>(), "base"_a, "max_phases"_a = kDefaultMaxPhases)
      .def_property_readonly("anchor", &DoublingStrategy::anchor)
      .def_property_readonly("base_length", &DoublingStrategy::base_length)
      .def_property_readonly("max_phases", &DoublingStrategy::max_phases)
      .def("phase_path", &DoublingStrategy::phase_path, "phase"_a)
      .def("phase_length", &DoublingStrategy::phase_length, "phase"_a)
      .def("path", &DoublingStrategy::path, "phases"_a);

  py::class_<SearchTranscript>(m, "SearchTranscript")
      .def_readonly("target", &SearchTranscript::target)
      .def_readonly("traversed_length", &SearchTranscript::traversed_length)
      .def_readonly("hit_point", &SearchTranscript::hit_point)
      .def_readonly("phase", &SearchTranscript::phase)
      .def_readonly("ratio", &SearchTranscript::ratio);

  py::class_<ExtractedCurve>(m, "ExtractedCurve")
      .def_readonly("curve", &ExtractedCurve::curve)
      .def_readonly("prefix_length", &ExtractedCurve::prefix_length)
      .def_readonly("within_bound", &ExtractedCurve::within_bound);

  m.def("build_doubling_strategy", &build_doubling_strategy, "base"_a,
        "max_phases"_a = kDefaultMaxPhases);
  m.def("simulate_search", &simulate_search, "strategy"_a, "target"_a);
  m.def("check_envelope",
        [](const std::vector<SearchTranscript>& ts, double length) { return check_envelope(ts, length); },
        "transcripts"_a, "base_length"_a);
  m.def(
      "extract_inspection_curve",
      [](const PolylineCurve& path, double c, double alpha, double eps,
         const std::vector<UnitDirection>& directions) {
        return extract_inspection_curve(path, c, alpha, eps, directions);
      },
      "path"_a, "competitive_ratio"_a, "additive"_a, "epsilon"_a, "directions"_a);
}
