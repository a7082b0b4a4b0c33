#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cfs/direct.hpp"
#include "cfs/report.hpp"
#include "cfs/series1d.hpp"
#include "cfs/series2d.hpp"

namespace py = pybind11;
using namespace cfs;

namespace {

SeriesKind1D kind1d_from(const std::string& name) {
  if (name == "full_range") return SeriesKind1D::FullRange;
  if (name == "half_cosine") return SeriesKind1D::HalfCosine;
  if (name == "half_sine") return SeriesKind1D::HalfSine;
  throw ConfigError("unknown 1D series kind: " + name);
}

SeriesKind2D kind2d_from(const std::string& name) {
  if (name == "full_range") return SeriesKind2D::FullRange;
  if (name == "cos_cos") return SeriesKind2D::CosCos;
  if (name == "sin_cos") return SeriesKind2D::SinCos;
  if (name == "cos_sin") return SeriesKind2D::CosSin;
  if (name == "sin_sin") return SeriesKind2D::SinSin;
  throw ConfigError("unknown 2D series kind: " + name);
}

Method method_from(const std::string& name) {
  if (name == "composite") return Method::Composite;
  if (name == "direct") return Method::Direct;
  throw ConfigError("unknown method: " + name);
}

std::vector<std::pair<int, int>> to_pairs(const std::vector<MultiIndex>& v) {
  std::vector<std::pair<int, int>> out;
  out.reserve(v.size());
  for (const MultiIndex& k : v) out.emplace_back(k.k1, k.k2);
  return out;
}

} // namespace

PYBIND11_MODULE(_cfs, m) {
  m.doc() = "Composite Fourier series approximation of functions and their derivatives";

  py::register_exception<Error>(m, "CfsError");

  m.def(
      "enumerate_graded",
      [](int max_total) { return to_pairs(enumerate_graded(max_total)); },
      py::arg("max_total"));
  m.def(
      "enumerate_sinsin_corner_set",
      [](int r) { return to_pairs(enumerate_sinsin_corner_set(SmoothnessOrder(r))); },
      py::arg("r"));

  py::class_<FunctionSpec1D>(m, "FunctionSpec1D")
      .def(py::init([](double a, bool symmetric, std::function<double(int, double)> deriv) {
             const Domain1D d = symmetric ? symmetric_interval(a) : nonnegative_interval(a);
             return FunctionSpec1D{d, std::move(deriv)};
           }),
           py::arg("a"), py::arg("symmetric"), py::arg("deriv"))
      .def("deriv", [](const FunctionSpec1D& f, int k, double x) { return f.deriv(k, x); });

  py::class_<FunctionSpec2D>(m, "FunctionSpec2D")
      .def(py::init([](double a, double b, bool symmetric,
                       std::function<double(int, int, double, double)> deriv) {
             const Domain2D d = symmetric ? symmetric_rectangle(a, b) : nonnegative_rectangle(a, b);
             return FunctionSpec2D{d, std::move(deriv)};
           }),
           py::arg("a"), py::arg("b"), py::arg("symmetric"), py::arg("deriv"))
      .def("deriv", [](const FunctionSpec2D& f, int k1, int k2, double x1, double x2) {
        return f.deriv(k1, k2, x1, x2);
      });

  py::class_<SampleCase>(m, "SampleCase")
      .def_readonly("id", &SampleCase::id)
      .def_readonly("two_dim", &SampleCase::two_dim)
      .def_readonly("description", &SampleCase::description)
      .def_property_readonly("kind",
                             [](const SampleCase& s) {
                               return std::string(s.two_dim ? to_string(s.kind2d)
                                                            : to_string(s.kind1d));
                             })
      .def_property_readonly("spec1d", [](const SampleCase& s) { return s.f1; })
      .def_property_readonly("spec2d", [](const SampleCase& s) { return s.f2; });
  m.def("get_sample", &get_sample, py::arg("id"));

  py::class_<CompositeSeries1D>(m, "CompositeSeries1D")
      .def("evaluate", &CompositeSeries1D::evaluate, py::arg("k"), py::arg("x"))
      .def("boundary_part", &CompositeSeries1D::boundary_part)
      .def("internal_part", &CompositeSeries1D::internal_part)
      .def_property_readonly("q1",
                             [](const CompositeSeries1D& s) { return s.boundary_data().q1; })
      .def_property_readonly(
          "q0_cosine", [](const CompositeSeries1D& s) { return s.internal_coefficients().cosine; })
      .def_property_readonly(
          "q0_sine", [](const CompositeSeries1D& s) { return s.internal_coefficients().sine; })
      .def_property_readonly("truncation", &CompositeSeries1D::truncation);
  m.def(
      "build_composite_1d",
      [](const FunctionSpec1D& f, const std::string& kind, int r, int truncation) {
        return build_composite_1d(f, kind1d_from(kind), SmoothnessOrder(r), truncation);
      },
      py::arg("f"), py::arg("kind"), py::arg("r"), py::arg("truncation"));

  py::class_<CompositeSeries2D>(m, "CompositeSeries2D")
      .def("evaluate", &CompositeSeries2D::evaluate, py::arg("k1"), py::arg("k2"), py::arg("x1"),
           py::arg("x2"))
      .def("evaluate_grid", &CompositeSeries2D::evaluate_grid)
      .def("corner_part", &CompositeSeries2D::corner_part)
      .def("boundary1_part", &CompositeSeries2D::boundary1_part)
      .def("boundary2_part", &CompositeSeries2D::boundary2_part)
      .def("internal_part", &CompositeSeries2D::internal_part)
      .def_property_readonly("q3",
                             [](const CompositeSeries2D& s) { return s.corner().data.q3; })
      .def_property_readonly("truncation_m", &CompositeSeries2D::truncation_m)
      .def_property_readonly("truncation_n", &CompositeSeries2D::truncation_n);
  m.def(
      "build_composite_2d",
      [](const FunctionSpec2D& f, const std::string& kind, int r, int M, int N) {
        return build_composite_2d(f, kind2d_from(kind), SmoothnessOrder(r), M, N);
      },
      py::arg("f"), py::arg("kind"), py::arg("r"), py::arg("M"), py::arg("N"));

  py::class_<DirectExpansion1D>(m, "DirectExpansion1D")
      .def("evaluate", &DirectExpansion1D::evaluate, py::arg("k"), py::arg("x"));
  m.def(
      "build_direct_1d",
      [](const FunctionSpec1D& f, const std::string& kind, int r, int truncation) {
        return build_direct_1d(f, kind1d_from(kind), SmoothnessOrder(r), truncation);
      },
      py::arg("f"), py::arg("kind"), py::arg("r"), py::arg("truncation"));

  py::class_<DirectExpansion2D>(m, "DirectExpansion2D")
      .def("evaluate", &DirectExpansion2D::evaluate, py::arg("k1"), py::arg("k2"), py::arg("x1"),
           py::arg("x2"));
  m.def(
      "build_direct_2d",
      [](const FunctionSpec2D& f, const std::string& kind, int r, int M, int N) {
        return build_direct_2d(f, kind2d_from(kind), SmoothnessOrder(r), M, N);
      },
      py::arg("f"), py::arg("kind"), py::arg("r"), py::arg("M"), py::arg("N"));

  m.def(
      "grid_counts",
      [](int n1, int n2) {
        const SamplingGrid2D g = make_grid(symmetric_rectangle(1.0, 1.0), n1, n2);
        return std::make_tuple(g.total_count(), g.interior_count(), g.boundary_count(),
                               g.corner_count());
      },
      py::arg("n1"), py::arg("n2"));

  m.def(
      "error_records",
      [](int sample_id, const std::string& method, int truncation, int grid, int r) {
        const ErrorReport report = compute_error_report(get_sample(sample_id), method_from(method),
                                                        truncation, grid, SmoothnessOrder(r));
        py::list out;
        for (const ErrorRecord& rec : records_from_report(report)) {
          py::dict d;
          d["sample"] = rec.sample;
          d["method"] = rec.method;
          d["M"] = rec.M;
          d["N"] = rec.N;
          d["index_name"] = rec.index_name;
          d["subset"] = rec.subset;
          d["value"] = rec.value;
          out.append(d);
        }
        return out;
      },
      py::arg("sample_id"), py::arg("method"), py::arg("truncation"), py::arg("grid") = 101,
      py::arg("r") = 3);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
