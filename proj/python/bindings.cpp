#include <memory>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric/engine.hpp"
#include "toric/oracle.hpp"
#include "toric/report.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

// Vertex sets cross the boundary as sorted lists of 1-based indices.
std::vector<VertexSet> sets_from_lists(const std::vector<std::vector<int>>& lists, int n) {
  std::vector<VertexSet> out;
  for (const auto& l : lists) {
    VertexSet s = 0;
    for (int i : l) {
      if (i < 1 || i > n) throw ModelError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
      s |= VertexSet{1} << (i - 1);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<std::vector<int>> lists_from_sets(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (VertexSet s : sets) {
    std::vector<int> l;
    for (int i : set_indices(s)) l.push_back(i + 1);
    out.push_back(std::move(l));
  }
  return out;
}

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.get_str())); }

py::list dims_to_py(const std::vector<BigInt>& dims) {
  py::list out;
  for (const auto& v : dims) out.append(to_py(v));
  return out;
}

DivisorClass to_class(const std::vector<std::int64_t>& alpha) { return DivisorClass{alpha}; }

std::optional<std::vector<VertexSet>> optional_sets(const std::optional<std::vector<std::vector<int>>>& lists, int n) {
  if (!lists) return std::nullopt;
  return sets_from_lists(*lists, n);
}

}  // namespace

PYBIND11_MODULE(_toriccohom, m) {
  m.doc() = "Line bundle cohomology on simplicial projective toric varieties";

  static py::exception<NonFiniteCohomology> non_finite(m, "NonFiniteCohomology", PyExc_ArithmeticError);
  static py::exception<ResourceLimitError> resource(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NonFiniteCohomology& e) {
      py::set_error(non_finite, e.what());
    } catch (const ResourceLimitError& e) {
      py::set_error(resource, e.what());
    } catch (const ModelError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<ToricVarietyModel>(m, "Model")
      .def(py::init([](std::vector<std::string> coordinates, int dimension, std::vector<std::vector<std::int64_t>> charges,
                       std::optional<std::vector<std::vector<int>>> sr_ideal,
                       std::optional<std::vector<std::vector<int>>> max_cones) {
             const int n = static_cast<int>(coordinates.size());
             return ToricVarietyModel(std::move(coordinates), dimension, std::move(charges), optional_sets(sr_ideal, n),
                                      optional_sets(max_cones, n));
           }),
           py::arg("coordinates"), py::arg("dimension"), py::arg("charges"), py::arg("sr_ideal") = py::none(),
           py::arg("max_cones") = py::none())
      .def_static("from_json", [](const std::string& text) { return parse_variety(text); })
      .def_static("load", [](const std::string& path) { return load_variety(path); })
      .def("to_json", &variety_to_json)
      .def_property_readonly("coordinates", &ToricVarietyModel::coordinate_names)
      .def_property_readonly("n", &ToricVarietyModel::n)
      .def_property_readonly("dimension", &ToricVarietyModel::d)
      .def_property_readonly("class_rank", &ToricVarietyModel::class_rank)
      .def_property_readonly("charges", &ToricVarietyModel::charges)
      .def_property_readonly("sr_ideal", [](const ToricVarietyModel& v) { return lists_from_sets(v.sr_generators()); })
      .def_property_readonly("max_cones",
                             [](const ToricVarietyModel& v) -> std::optional<std::vector<std::vector<int>>> {
                               if (!v.has_fan()) return std::nullopt;
                               return lists_from_sets(*v.max_cones());
                             })
      .def("canonical_class", [](const ToricVarietyModel& v) { return canonical_class(v).coords; })
      .def("appears_smooth", &appears_smooth);

  m.def(
      "sr_from_max_cones",
      [](const std::vector<std::vector<int>>& cones, int n) {
        return lists_from_sets(sr_from_max_cones(sets_from_lists(cones, n), n));
      },
      py::arg("max_cones"), py::arg("n"));

  py::class_<CohomologyEngine>(m, "Engine")
      .def(py::init([](const ToricVarietyModel& model, bool unfiltered, int generator_cap, unsigned threads) {
             return std::make_unique<CohomologyEngine>(
                 model, EngineOptions{unfiltered ? Summation::kUnfiltered : Summation::kFiltered, generator_cap, threads});
           }),
           py::arg("model"), py::arg("unfiltered") = false, py::arg("generator_cap") = kDefaultGeneratorCap,
           py::arg("threads") = 0)
      .def_property_readonly("filter_sound", &CohomologyEngine::filter_sound)
      .def_property_readonly("degree_count", [](const CohomologyEngine& e) { return e.degrees().entries().size(); })
      .def(
          "cohomology",
          [](const CohomologyEngine& e, const std::vector<std::int64_t>& alpha) {
            CohomologyResult r;
            {
              py::gil_scoped_release release;
              r = e.cohomology(to_class(alpha));
            }
            return dims_to_py(r.dims);
          },
          py::arg("alpha"))
      .def(
          "report",
          [](const CohomologyEngine& e, const std::vector<std::int64_t>& alpha) {
            const auto j = result_to_json(e.cohomology(to_class(alpha)), e.model().n());
            return py::module_::import("json").attr("loads")(j.dump());
          },
          py::arg("alpha"), "JSON-shaped report: alpha, h and the per-degree breakdown")
      .def(
          "cohomology_all",
          [](const CohomologyEngine& e, const std::vector<std::vector<std::int64_t>>& alphas) {
            std::vector<DivisorClass> classes;
            for (const auto& a : alphas) classes.push_back(to_class(a));
            std::vector<BatchEntry> batch;
            {
              py::gil_scoped_release release;
              batch = e.cohomology_all(classes);
            }
            py::list out;
            for (const auto& entry : batch) {
              if (entry.result) out.append(dims_to_py(entry.result->dims));
              else out.append(py::none());
            }
            return out;
          },
          py::arg("alphas"), "Per-class dims; None where the computation failed")
      .def(
          "serre_check",
          [](const CohomologyEngine& e, const std::vector<std::int64_t>& alpha) {
            const auto r = serre_check(e, to_class(alpha));
            return py::make_tuple(r.pass, r.report);
          },
          py::arg("alpha"));

  m.def(
      "cohomology_via_fan",
      [](const ToricVarietyModel& model, const std::vector<std::int64_t>& alpha) {
        return dims_to_py(cohomology_via_fan(model, to_class(alpha)));
      },
      py::arg("model"), py::arg("alpha"));

  m.def(
      "hochster_check",
      [](const ToricVarietyModel& model) {
        const auto r = hochster_check(model);
        py::dict out;
        out["degrees_checked"] = r.degrees_checked;
        out["vanishing_checked"] = r.vanishing_checked;
        out["mismatches"] = r.mismatches;
        return out;
      },
      py::arg("model"));

  m.def(
      "reduced_homology",
      [](int n, const std::vector<std::vector<int>>& faces) {
        const auto h = reduced_homology(FaceSet(n, sets_from_lists(faces, n)));
        py::dict out;
        for (int k = -1; k <= h.top_degree(); ++k) {
          if (h[k] != 0) out[py::int_(k)] = h[k];
        }
        return out;
      },
      py::arg("n"), py::arg("faces"), "Nonzero reduced Betti numbers keyed by degree");

  m.def(
      "alexander_dual",
      [](int n, const std::vector<std::vector<int>>& faces) {
        return lists_from_sets(alexander_dual(FaceSet(n, sets_from_lists(faces, n))).faces());
      },
      py::arg("n"), py::arg("faces"));
}
