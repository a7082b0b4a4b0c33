#include "cfs/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"

#include "cfs/direct.hpp"
#include "cfs/series1d.hpp"
#include "cfs/series2d.hpp"

namespace cfs {

namespace fs = std::filesystem;
using nlohmann::json;

const char* to_string(Method method) {
  return method == Method::Composite ? "composite" : "direct";
}

void StudyConfig::validate() const {
  if (samples.empty()) throw ConfigError("no samples selected");
  for (int id : samples)
    if (id < 1 || id > 8) throw ConfigError("sample id must be 1..8 or 'all'");
  if (r < 1) throw ConfigError("r must be >= 1");
  if (2 * r > kSampleMaxOrder)
    throw ConfigError("built-in samples provide derivatives up to order 6 (r <= 3)");
  if (terms.empty()) throw ConfigError("terms list must be nonempty");
  int prev = -1;
  for (int t : terms) {
    if (t < 0) throw ConfigError("terms must be >= 0");
    if (t <= prev) throw ConfigError("terms list must be strictly ascending");
    prev = t;
  }
  if (grid != 0 && grid < 3) throw ConfigError("grid must be >= 3 (or 0 for auto)");
  if (out_dir.empty()) throw ConfigError("output directory must be set");
}

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.5E", v);
  return buf;
}

namespace {

std::string index_name(MultiIndex k, bool two_dim) {
  if (two_dim) return "e(" + std::to_string(k.k1) + "," + std::to_string(k.k2) + ")";
  return "e(" + std::to_string(k.k1) + ")";
}

std::string order_name(int p) { return "|e|^" + std::to_string(p); }
std::string up_to_name(int p) { return "||e||^" + std::to_string(p); }

std::vector<Subset> subsets_for(bool two_dim) {
  if (two_dim) return {Subset::All, Subset::Interior, Subset::Boundary, Subset::Corner};
  return {Subset::All, Subset::Interior, Subset::Boundary};
}

ComponentErrors nan_errors() {
  const double nan = std::nan("");
  return ComponentErrors{nan, nan, nan, nan, 0.0};
}

} // namespace

ErrorReport compute_error_report(const SampleCase& sample, Method method, int truncation,
                                 int grid_n, SmoothnessOrder r, const QuadratureRule& rule) {
  ErrorReport report;
  report.sample_id = sample.id;
  report.method = to_string(method);
  report.M = truncation;
  report.two_dim = sample.two_dim;
  report.grid_n = grid_n;

  if (!sample.two_dim) {
    report.N = 0;
    const SamplingGrid1D grid = make_grid(sample.f1.domain, grid_n);
    const int n = grid.total_count();
    std::vector<double> approx(n), exact(n);
    auto fill_and_store = [&](int k, const std::function<double(double)>& eval) {
      for (int i = 0; i < n; ++i) {
        approx[i] = eval(grid.points[i]);
        exact[i] = sample.f1.deriv(k, grid.points[i]);
      }
      ErrorReport::Entry entry;
      entry.k = MultiIndex{k, 0};
      try {
        entry.errors = component_errors(approx, exact, grid);
      } catch (const DegenerateNormalizerError&) {
        entry.errors = nan_errors();
      }
      report.singles.push_back(entry);
    };
    if (method == Method::Composite) {
      const CompositeSeries1D series =
          build_composite_1d(sample.f1, sample.kind1d, r, truncation, rule);
      for (int k = 0; k <= r.two_r(); ++k)
        fill_and_store(k, [&series, k](double x) { return series.evaluate(k, x); });
    } else {
      const DirectExpansion1D direct =
          build_direct_1d(sample.f1, sample.kind1d, r, truncation, rule);
      for (int k = 0; k <= r.two_r(); ++k)
        fill_and_store(k, [&direct, k](double x) { return direct.evaluate(k, x); });
    }
    return report;
  }

  report.N = truncation;
  const SamplingGrid2D grid = make_grid(sample.f2.domain, grid_n, grid_n);
  const int n1 = grid.n1(), n2 = grid.n2();
  std::vector<double> exact(static_cast<size_t>(n1) * n2);
  auto store = [&](MultiIndex k, const std::vector<double>& approx) {
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j)
        exact[static_cast<size_t>(i) * n2 + j] = sample.f2.deriv(k.k1, k.k2, grid.x1[i], grid.x2[j]);
    ErrorReport::Entry entry;
    entry.k = k;
    try {
      entry.errors = component_errors(approx, exact, grid);
    } catch (const DegenerateNormalizerError&) {
      entry.errors = nan_errors();
    }
    report.singles.push_back(entry);
  };
  if (method == Method::Composite) {
    const CompositeSeries2D series =
        build_composite_2d(sample.f2, sample.kind2d, r, truncation, truncation, rule);
    for (const MultiIndex& k : enumerate_graded(r.two_r()))
      store(k, series.evaluate_grid(k.k1, k.k2, grid.x1, grid.x2));
  } else {
    const DirectExpansion2D direct =
        build_direct_2d(sample.f2, sample.kind2d, r, truncation, truncation, rule);
    for (const MultiIndex& k : enumerate_graded(r.two_r()))
      store(k, direct.evaluate_grid(k.k1, k.k2, grid.x1, grid.x2));
  }
  return report;
}

std::vector<ErrorRecord> records_from_report(const ErrorReport& report) {
  std::vector<ErrorRecord> out;
  const std::vector<Subset> subsets = subsets_for(report.two_dim);
  auto push = [&](const std::string& name, Subset subset, double value) {
    out.push_back(ErrorRecord{report.sample_id, report.method, report.M, report.N, name,
                              to_string(subset), value});
  };
  for (const auto& entry : report.singles)
    for (Subset s : subsets) push(index_name(entry.k, report.two_dim), s, entry.errors.get(s));
  const int top = report.max_order();
  if (report.two_dim)
    for (int p = 0; p <= top; ++p)
      for (Subset s : subsets) push(order_name(p), s, report.order_aggregate(p, s));
  for (int p = 0; p <= top; ++p)
    for (Subset s : subsets) push(up_to_name(p), s, report.up_to_aggregate(p, s));
  return out;
}

std::vector<ErrorRecord> comparison_records(const ErrorReport& report) {
  std::vector<ErrorRecord> out;
  const std::vector<Subset> subsets = subsets_for(report.two_dim);
  auto push = [&](const std::string& name, Subset subset, double value) {
    out.push_back(ErrorRecord{report.sample_id, report.method, report.M, report.N, name,
                              to_string(subset), value});
  };
  for (Subset s : subsets) push(up_to_name(4), s, report.up_to_aggregate(4, s));
  for (int p : {5, 6}) {
    if (p > report.max_order()) continue;
    for (Subset s : subsets) {
      if (report.two_dim)
        push(order_name(p), s, report.order_aggregate(p, s));
      else
        push(index_name(MultiIndex{p, 0}, false), s, report.single(MultiIndex{p, 0}, s));
    }
  }
  return out;
}

namespace {

void write_csv(const std::string& path, const std::vector<ErrorRecord>& records) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << "sample,method,M,N,index_name,subset,value\n";
  for (const ErrorRecord& r : records) {
    out << r.sample << ',' << r.method << ',' << r.M << ',' << r.N << ',' << r.index_name << ','
        << r.subset << ',';
    if (std::isnan(r.value))
      out << "degenerate";
    else
      out << format_sci(r.value);
    out << '\n';
  }
}

json record_json(const ErrorRecord& r) {
  json j{{"sample", r.sample}, {"method", r.method},       {"M", r.M},
         {"N", r.N},           {"index_name", r.index_name}, {"subset", r.subset}};
  if (std::isnan(r.value))
    j["value"] = "degenerate";
  else
    j["value"] = r.value;
  return j;
}

void write_json_records(const std::string& path, const StudyConfig& config,
                        const std::vector<ErrorRecord>& records) {
  json j;
  j["r"] = config.r;
  j["grid"] = config.grid;
  j["records"] = json::array();
  for (const ErrorRecord& r : records) j["records"].push_back(record_json(r));
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (c == '|')
      out += (out.empty() || out.back() != '_') ? "_" : "";
    else if (out.empty() || out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

int env_thread_count() {
  const char* env = std::getenv("CFS_THREADS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

void run_jobs(std::vector<std::function<void()>>& jobs) {
  const int threads = std::min<int>(env_thread_count(), static_cast<int>(jobs.size()));
  if (threads <= 1) {
    for (auto& job : jobs) job();
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) jobs[i]();
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

std::vector<Method> selected_methods(StudyConfig::MethodSel sel) {
  switch (sel) {
    case StudyConfig::MethodSel::Composite: return {Method::Composite};
    case StudyConfig::MethodSel::Direct: return {Method::Direct};
    default: return {Method::Composite, Method::Direct};
  }
}

json vector_json(const std::vector<double>& v) { return json(v); }

json table_json(const std::vector<std::vector<double>>& rows) {
  json j = json::array();
  for (const auto& row : rows) j.push_back(row);
  return j;
}

json matrix_json(const std::vector<double>& flat, int rows, int cols) {
  json j = json::array();
  for (int i = 0; i < rows; ++i) {
    json row = json::array();
    for (int c = 0; c < cols; ++c) row.push_back(flat[static_cast<size_t>(i) * cols + c]);
    j.push_back(row);
  }
  return j;
}

} // namespace

int thread_count_from_env() { return env_thread_count(); }

std::vector<std::string> run_approximate(const StudyConfig& config) {
  config.validate();
  fs::create_directories(config.out_dir);
  const SmoothnessOrder r(config.r);
  const int M = config.terms.back();
  std::vector<std::string> written;
  for (int id : config.samples) {
    const SampleCase sample = get_sample(id);
    json j;
    j["sample"] = id;
    j["description"] = sample.description;
    j["r"] = config.r;
    j["M"] = M;
    if (!sample.two_dim) {
      const CompositeSeries1D s = build_composite_1d(sample.f1, sample.kind1d, r, M);
      j["kind"] = to_string(sample.kind1d);
      j["N"] = 0;
      const char* ordering = sample.kind1d == SeriesKind1D::FullRange
                                 ? "k = 0..2r-1: u^(k)(a) - u^(k)(-a)"
                                 : "constrained orders at x = a, then the same orders at x = 0";
      j["q1"] = {{"ordering", ordering}, {"values", vector_json(s.boundary_data().q1)}};
      j["q0"] = {{"cosine", vector_json(s.internal_coefficients().cosine)},
                 {"sine", vector_json(s.internal_coefficients().sine)},
                 {"ordering", "mode index m = 0..M"}};
    } else {
      const CompositeSeries2D s = build_composite_2d(sample.f2, sample.kind2d, r, M, M);
      j["kind"] = to_string(sample.kind2d);
      j["N"] = M;
      const char* q3_ordering =
          sample.kind2d == SeriesKind2D::FullRange
              ? "(k1,k2) graded by k1+k2 <= 2r-2, k1 descending within a grade; "
                "four-corner alternating sums"
              : "corner-major over (a,b),(a,0),(0,b),(0,0); per corner the even-even "
                "(k1,k2) with k1+k2 <= 2r-2, graded, k1 descending";
      j["q3"] = {{"ordering", q3_ordering}, {"values", vector_json(s.corner().data.q3)}};
      const char* edge_ordering =
          sample.kind2d == SeriesKind2D::FullRange
              ? "per mode: k = 0..2r-1 opposite-edge differences of the residual trace"
              : "per mode: even k = 0..2r-2 at the far edge, then the same at the near edge";
      j["q1"] = {{"ordering", edge_ordering},
                 {"cos_modes", table_json(s.edge1_table().cos_modes)},
                 {"sin_modes", table_json(s.edge1_table().sin_modes)}};
      j["q2"] = {{"ordering", edge_ordering},
                 {"cos_modes", table_json(s.edge2_table().cos_modes)},
                 {"sin_modes", table_json(s.edge2_table().sin_modes)}};
      const InternalCoefficients2D& q0 = s.internal_coefficients();
      json q0j;
      q0j["ordering"] = "rows m = 0..M, columns n = 0..N";
      if (!q0.cc.empty()) q0j["cc"] = matrix_json(q0.cc, M + 1, M + 1);
      if (!q0.sc.empty()) q0j["sc"] = matrix_json(q0.sc, M + 1, M + 1);
      if (!q0.cs.empty()) q0j["cs"] = matrix_json(q0.cs, M + 1, M + 1);
      if (!q0.ss.empty()) q0j["ss"] = matrix_json(q0.ss, M + 1, M + 1);
      j["q0"] = q0j;
    }
    const std::string path = (fs::path(config.out_dir) / ("approximate_sample" + std::to_string(id) + ".json")).string();
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    written.push_back(path);
  }
  return written;
}

std::vector<std::string> run_convergence(const StudyConfig& config) {
  config.validate();
  fs::create_directories(config.out_dir);
  const SmoothnessOrder r(config.r);
  std::vector<std::string> written;
  for (int id : config.samples) {
    const SampleCase sample = get_sample(id);
    for (Method method : selected_methods(config.method)) {
      std::vector<ErrorReport> reports(config.terms.size());
      std::vector<std::function<void()>> jobs;
      for (size_t i = 0; i < config.terms.size(); ++i)
        jobs.push_back([&, i] {
          reports[i] = compute_error_report(sample, method, config.terms[i],
                                            config.effective_grid(sample.two_dim), r);
        });
      run_jobs(jobs);

      std::vector<ErrorRecord> records;
      for (const ErrorReport& rep : reports) {
        const std::vector<ErrorRecord> batch = records_from_report(rep);
        records.insert(records.end(), batch.begin(), batch.end());
      }
      const std::string stem =
          "convergence_sample" + std::to_string(id) + "_" + to_string(method);
      if (config.format != StudyConfig::Format::Json) {
        const std::string path = (fs::path(config.out_dir) / (stem + ".csv")).string();
        write_csv(path, records);
        written.push_back(path);
      }
      if (config.format != StudyConfig::Format::Csv) {
        const std::string path = (fs::path(config.out_dir) / (stem + ".json")).string();
        write_json_records(path, config, records);
        written.push_back(path);
      }
      // Plot data: one two-column file per curve, matching the figure style
      // (single components for 1D, order-p aggregates for 2D).
      struct Curve {
        std::string name;
        int order;
      };
      std::vector<Curve> curves;
      for (int p = 0; p <= 2 * config.r; ++p)
        curves.push_back(
            {sample.two_dim ? order_name(p) : index_name(MultiIndex{p, 0}, false), p});
      for (const Curve& curve : curves)
        for (Subset s : subsets_for(sample.two_dim)) {
          const std::string path =
              (fs::path(config.out_dir) /
               (stem + "_" + sanitize(curve.name) + "_" + to_string(s) + ".dat"))
                  .string();
          std::ofstream out(path);
          if (!out) throw Error("cannot open " + path + " for writing");
          for (size_t i = 0; i < config.terms.size(); ++i) {
            const double v = sample.two_dim ? reports[i].order_aggregate(curve.order, s)
                                            : reports[i].single(MultiIndex{curve.order, 0}, s);
            out << config.terms[i] << ' ' << format_sci(v) << '\n';
          }
          written.push_back(path);
        }
    }
  }
  return written;
}

std::vector<std::string> run_compare(const StudyConfig& config) {
  config.validate();
  if (config.method != StudyConfig::MethodSel::Both)
    throw ConfigError("compare requires --method both");
  fs::create_directories(config.out_dir);
  const SmoothnessOrder r(config.r);
  const int M = config.terms.back();
  std::vector<std::string> written;
  for (int id : config.samples) {
    const SampleCase sample = get_sample(id);
    std::vector<ErrorReport> reports(2);
    std::vector<std::function<void()>> jobs;
    const int grid_n = config.effective_grid(sample.two_dim);
    jobs.push_back([&] { reports[0] = compute_error_report(sample, Method::Composite, M, grid_n, r); });
    jobs.push_back([&] { reports[1] = compute_error_report(sample, Method::Direct, M, grid_n, r); });
    run_jobs(jobs);
    std::vector<ErrorRecord> records;
    for (const ErrorReport& rep : reports) {
      const std::vector<ErrorRecord> batch = comparison_records(rep);
      records.insert(records.end(), batch.begin(), batch.end());
    }
    const std::string stem = "compare_sample" + std::to_string(id);
    if (config.format != StudyConfig::Format::Json) {
      const std::string path = (fs::path(config.out_dir) / (stem + ".csv")).string();
      write_csv(path, records);
      written.push_back(path);
    }
    if (config.format != StudyConfig::Format::Csv) {
      const std::string path = (fs::path(config.out_dir) / (stem + ".json")).string();
      write_json_records(path, config, records);
      written.push_back(path);
    }
  }
  return written;
}

} // namespace cfs
