#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cfs/report.hpp"

namespace cfs {

namespace {

std::vector<int> parse_terms(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    int v;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("invalid terms entry: " + item);
    }
    if (used != item.size()) throw ConfigError("invalid terms entry: " + item);
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_samples(const std::string& text) {
  if (text == "all") return {1, 2, 3, 4, 5, 6, 7, 8};
  size_t used = 0;
  int id;
  try {
    id = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("sample must be 1..8 or 'all'");
  }
  if (used != text.size()) throw ConfigError("sample must be 1..8 or 'all'");
  return {id};
}

StudyConfig::MethodSel parse_method(const std::string& text) {
  if (text == "composite") return StudyConfig::MethodSel::Composite;
  if (text == "direct") return StudyConfig::MethodSel::Direct;
  if (text == "both") return StudyConfig::MethodSel::Both;
  throw ConfigError("method must be composite, direct or both");
}

StudyConfig::Format parse_format(const std::string& text) {
  if (text == "csv") return StudyConfig::Format::Csv;
  if (text == "json") return StudyConfig::Format::Json;
  if (text == "both") return StudyConfig::Format::Both;
  throw ConfigError("format must be csv, json or both");
}

struct RawOptions {
  std::string sample = "1";
  std::string method;
  int r = 3;
  std::string terms = "2,3,5,10,20,30,40";
  int grid = 0;
  std::string out = ".";
  std::string format = "csv";
  std::string config_file;
};

// key=value file; values here override command-line flags.
void apply_config_file(RawOptions& raw) {
  if (raw.config_file.empty()) return;
  std::ifstream in(raw.config_file);
  if (!in) throw ConfigError("cannot read config file " + raw.config_file);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + " is not key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "sample")
      raw.sample = value;
    else if (key == "method")
      raw.method = value;
    else if (key == "r")
      raw.r = std::stoi(value);
    else if (key == "terms")
      raw.terms = value;
    else if (key == "grid")
      raw.grid = std::stoi(value);
    else if (key == "out")
      raw.out = value;
    else if (key == "format")
      raw.format = value;
    else
      throw ConfigError("unknown config key: " + key);
  }
}

StudyConfig to_config(const RawOptions& raw, StudyConfig::MethodSel default_method) {
  StudyConfig config;
  config.samples = parse_samples(raw.sample);
  config.method = raw.method.empty() ? default_method : parse_method(raw.method);
  config.r = raw.r;
  config.terms = parse_terms(raw.terms);
  config.grid = raw.grid;
  config.out_dir = raw.out;
  config.format = parse_format(raw.format);
  config.validate();
  return config;
}

void add_common_options(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--sample", raw.sample, "sample id 1..8 or 'all'");
  cmd->add_option("--method", raw.method, "composite, direct or both");
  cmd->add_option("--r", raw.r, "smoothness order r (derivatives to 2r)");
  cmd->add_option("--terms", raw.terms, "comma-separated ascending truncations");
  cmd->add_option("--grid", raw.grid, "sampling points per axis (0 = auto: 101 for 2D, 10001 for 1D)");
  cmd->add_option("--out", raw.out, "output directory");
  cmd->add_option("--format", raw.format, "csv, json or both");
  cmd->add_option("--config", raw.config_file, "key=value file overriding flags");
}

} // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Composite Fourier series approximation toolkit"};
  app.require_subcommand(1);

  RawOptions raw_approx, raw_conv, raw_comp;
  CLI::App* approx = app.add_subcommand("approximate", "dump the solved coefficient bundles");
  add_common_options(approx, raw_approx);
  CLI::App* conv = app.add_subcommand("convergence", "error indexes across truncations");
  add_common_options(conv, raw_conv);
  CLI::App* comp = app.add_subcommand("compare", "composite vs direct at the top truncation");
  add_common_options(comp, raw_comp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<std::string> written;
    if (approx->parsed()) {
      apply_config_file(raw_approx);
      written = run_approximate(to_config(raw_approx, StudyConfig::MethodSel::Composite));
    } else if (conv->parsed()) {
      apply_config_file(raw_conv);
      written = run_convergence(to_config(raw_conv, StudyConfig::MethodSel::Composite));
    } else {
      apply_config_file(raw_comp);
      RawOptions raw = raw_comp;
      if (raw.method.empty()) raw.method = "both";
      written = run_compare(to_config(raw, StudyConfig::MethodSel::Both));
    }
    for (const std::string& path : written) std::cout << path << '\n';
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownSampleError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

} // namespace cfs
