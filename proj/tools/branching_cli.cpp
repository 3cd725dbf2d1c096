#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "branching/errors.hpp"
#include "branching/json_io.hpp"
#include "branching/verify/suites.hpp"

namespace fs = std::filesystem;
using namespace branching;

namespace {

struct RunConfig {
  std::string model;
  std::string numerator;
  std::vector<std::string> paths;
  std::string w_end;
  double T = 40.0;
  double tol = 1e-11;
  std::string out;
  std::string suite = "all";
  double t_norm = 1.0;
  double alpha = 0.5;
  double sigma_from = 3.0;
  double sigma_to = -3.0;
  double step = 0.01;
  bool verbose = false;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

// Flat "key = value" lines; values are JSON when they parse as JSON, bare text otherwise.
std::map<std::string, json> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open config " + path);
  std::map<std::string, json> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::parse_error, path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    for (char& c : key)
      if (c == '-') c = '_';
    const std::string value = trim(line.substr(eq + 1));
    json parsed = json::parse(value, nullptr, false);
    out[key] = parsed.is_discarded() ? json(value) : parsed;
  }
  return out;
}

std::string as_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void apply_config(const std::map<std::string, json>& cfg, CLI::App& cmd, RunConfig& rc) {
  auto unset = [&](const char* flag) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    return opt == nullptr || opt->count() == 0;
  };
  auto number = [](const json& j, const std::string& key) {
    if (j.is_number()) return j.get<double>();
    throw Error(ErrorKind::parse_error, "config key '" + key + "' must be a number");
  };
  for (const auto& [key, value] : cfg) {
    if (key == "model" && unset("--model")) rc.model = as_text(value);
    else if (key == "numerator" && unset("--numerator")) rc.numerator = as_text(value);
    else if (key == "path" && unset("--path")) {
      rc.paths.clear();
      if (value.is_array())
        for (const auto& p : value) rc.paths.push_back(as_text(p));
      else
        rc.paths.push_back(as_text(value));
    } else if (key == "w_end" && unset("--w-end")) rc.w_end = as_text(value);
    else if (key == "T" && unset("--T")) rc.T = number(value, key);
    else if (key == "tol" && unset("--tol")) rc.tol = number(value, key);
    else if (key == "out" && unset("--out")) rc.out = as_text(value);
    else if (key == "suite" && unset("--suite")) rc.suite = as_text(value);
    else if (key == "t_norm" && unset("--t-norm")) rc.t_norm = number(value, key);
    else if (key == "alpha" && unset("--alpha")) rc.alpha = number(value, key);
    else if (key == "sigma_from" && unset("--sigma-from")) rc.sigma_from = number(value, key);
    else if (key == "sigma_to" && unset("--sigma-to")) rc.sigma_to = number(value, key);
    else if (key == "step" && unset("--step")) rc.step = number(value, key);
  }
}

// Descriptor given inline as JSON or as a file name.
json descriptor(const std::string& text, const char* what) {
  if (text.empty()) throw Error(ErrorKind::invalid_argument, std::string("--") + what + " is required");
  if (text.front() == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorKind::parse_error, std::string("malformed inline ") + what);
    return j;
  }
  return read_json_file(text);
}

void write_atomic(const fs::path& target, const std::string& content) {
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + tmp.string());
    out << content;
    if (!out) throw Error(ErrorKind::internal, "short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

void emit(const RunConfig& rc, const std::string& name, const json& j) {
  const std::string text = dump_json(j);
  std::cout << text;
  if (!rc.out.empty()) write_atomic(fs::path(rc.out) / name, text);
}

void check_positive(const RunConfig& rc) {
  if (!(rc.T > 0.0)) throw Error(ErrorKind::invalid_argument, "T must be positive");
  if (!(rc.tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tol must be positive");
}

std::string number_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int cmd_branch_points(const RunConfig& rc) {
  const SpectralModel model = model_from_json(descriptor(rc.model, "model"));
  const auto [lo, hi] = branch_points(model);
  const cplx offset = hi - 0.5;
  if (offset.real() == 0.0 && hi.real() == 0.5)
    std::cout << number_text(0.5) << " ± " << number_text(offset.imag()) << "i\n";
  else
    std::cout << number_text(lo.real()) << (lo.imag() < 0 ? "" : "+") << number_text(lo.imag()) << "i, "
              << number_text(hi.real()) << (hi.imag() < 0 ? "" : "+") << number_text(hi.imag()) << "i\n";
  return 0;
}

ContinuationOptions continuation_options(const RunConfig& rc) {
  ContinuationOptions opts;
  opts.T = rc.T;
  opts.tol = rc.tol;
  return opts;
}

WPath single_path(const RunConfig& rc) {
  if (rc.paths.size() != 1) throw Error(ErrorKind::invalid_path, "exactly one --path is required");
  return parse_path(rc.paths[0], "path");
}

int cmd_trace(const RunConfig& rc) {
  const SpectralModel model = model_from_json(descriptor(rc.model, "model"));
  const WPath path = single_path(rc);
  const BranchTrace trace = continue_pole(model, path, continuation_options(rc));
  json j = trace_to_json(trace);
  j["model"] = model_to_json(model);
  emit(rc, "trace.json", j);
  if (!rc.out.empty()) {
    CurveSamples s = trace.sqrt_samples;
    for (cplx& z : s.samples) z += 0.5;
    std::ostringstream csv;
    write_csv(csv, s);
    write_atomic(fs::path(rc.out) / "trace.csv", csv.str());
  }
  return 0;
}

int cmd_continue(const RunConfig& rc) {
  check_positive(rc);
  const SpectralModel model = model_from_json(descriptor(rc.model, "model"));
  const Numerator num = numerator_from_json(descriptor(rc.numerator, "numerator"));
  const ContinuationResult r = continue_integral(num, model, single_path(rc), continuation_options(rc));
  emit(rc, "continue.json", continuation_to_json(r));
  return 0;
}

int cmd_diff(const RunConfig& rc) {
  check_positive(rc);
  const SpectralModel model = model_from_json(descriptor(rc.model, "model"));
  const Numerator num = numerator_from_json(descriptor(rc.numerator, "numerator"));
  if (rc.paths.size() != 2) throw Error(ErrorKind::invalid_path_pair, "diff needs two --path values");
  if (rc.w_end.empty()) throw Error(ErrorKind::invalid_argument, "--w-end is required");
  const cplx w_end = parse_complex(rc.w_end);
  BranchingOptions opts;
  opts.continuation = continuation_options(rc);
  const BranchingDifference d = branching_difference(num, model, w_end, parse_path(rc.paths[0], "path1"),
                                                     parse_path(rc.paths[1], "path2"), opts);
  json j;
  j["difference"] = complex_to_json(d.difference);
  j["closed_form"] = correction_to_json(d.expected);
  j["relative_agreement"] = d.relative_agreement;
  j["first"] = continuation_to_json(d.first);
  j["second"] = continuation_to_json(d.second);
  emit(rc, "diff.json", j);
  return 0;
}

int cmd_verify(const RunConfig& rc) {
  const std::vector<int> ids = verify::suite_criteria(rc.suite);
  if (ids.empty()) {
    std::cerr << "unknown suite '" << rc.suite << "'; available:";
    for (const auto& n : verify::suite_names()) std::cerr << ' ' << n;
    std::cerr << '\n';
    return 1;
  }
  bool ok = true;
  json report = json::array();
  for (int id : ids) {
    const verify::CriterionReport r = verify::run_criterion(id);
    std::cout << r.status_line() << '\n';
    if (rc.verbose || !r.passed)
      for (const auto& line : r.details) std::cout << "    " << line << '\n';
    std::cout.flush();
    ok = ok && r.passed;
    report.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"summary", r.summary},
                      {"details", r.details}});
  }
  if (!rc.out.empty()) write_atomic(fs::path(rc.out) / ("verify-" + rc.suite + ".json"), dump_json(report));
  return ok ? 0 : 2;
}

int cmd_curve(const RunConfig& rc) {
  if (!(rc.step > 0.0)) throw Error(ErrorKind::invalid_argument, "step must be positive");
  const RadicandCurve c = radicand_curve(rc.t_norm, rc.alpha, {rc.sigma_from, rc.sigma_to}, rc.step);
  const BranchTrace trace = track_sqrt(c.curve, +1);
  json j;
  j["t_norm"] = rc.t_norm;
  j["alpha"] = rc.alpha;
  j["parabola"] = {{"a2", c.parabola.a2}, {"c0", c.parabola.c0}};
  j["samples"] = c.curve.size();
  j["cut_crossings"] = trace.cut_crossings;
  j["final_sign"] = trace.final_sign;
  j["crosses_origin"] = std::abs(std::abs(rc.alpha) - 1.0) > 1e-9 ? json(crosses_origin(rc.t_norm, rc.alpha))
                                                                   : json(nullptr);
  std::cout << dump_json(j);
  if (!rc.out.empty()) {
    const std::string stem = "curve_t" + number_text(rc.t_norm) + "_a" + number_text(rc.alpha);
    std::ostringstream csv;
    write_csv(csv, c.curve);
    write_atomic(fs::path(rc.out) / (stem + ".csv"), csv.str());
    write_atomic(fs::path(rc.out) / (stem + ".svg"), polyline_svg(c.curve));
    write_atomic(fs::path(rc.out) / (stem + ".json"), dump_json(j));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pole continuation and branching checks for spectral integrals"};
  app.require_subcommand(1);
  RunConfig rc;
  std::string config;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config, "key = value file; command-line flags win");
    cmd->add_option("--out", rc.out, "output directory");
  };
  auto with_model = [&](CLI::App* cmd) { cmd->add_option("--model", rc.model, "model descriptor (JSON file)"); };
  auto with_integral = [&](CLI::App* cmd) {
    cmd->add_option("--numerator", rc.numerator, "numerator descriptor (JSON file)");
    cmd->add_option("--T", rc.T, "line truncation height");
    cmd->add_option("--tol", rc.tol, "quadrature tolerance");
  };

  CLI::App* bp = app.add_subcommand("branch-points", "print 1/2 +- i sqrt(c)");
  with_model(bp);
  common(bp);
  CLI::App* trace = app.add_subcommand("trace", "continue the pole s(w) along a path");
  with_model(trace);
  trace->add_option("--path", rc.paths, "waypoints re,im;re,im;...");
  trace->add_option("--T", rc.T);
  trace->add_option("--tol", rc.tol);
  common(trace);
  CLI::App* cont = app.add_subcommand("continue", "continue the spectral integral along a path");
  with_model(cont);
  with_integral(cont);
  cont->add_option("--path", rc.paths, "waypoints re,im;re,im;...");
  common(cont);
  CLI::App* diff = app.add_subcommand("diff", "difference of two continuations to the same endpoint");
  with_model(diff);
  with_integral(diff);
  diff->add_option("--path", rc.paths, "two paths, each re,im;re,im;...");
  diff->add_option("--w-end", rc.w_end, "common endpoint re,im");
  common(diff);
  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--suite", rc.suite, "suite name (default all)");
  verify->add_flag("-v,--verbose", rc.verbose, "print every table row");
  common(verify);
  CLI::App* curve = app.add_subcommand("curve", "radicand parabola of a horizontal crossing");
  curve->add_option("--t-norm", rc.t_norm, "|t|");
  curve->add_option("--alpha", rc.alpha, "crossing height in units of |t|");
  curve->add_option("--sigma-from", rc.sigma_from);
  curve->add_option("--sigma-to", rc.sigma_to);
  curve->add_option("--step", rc.step);
  common(curve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    if (!config.empty()) apply_config(read_config(config), *cmd, rc);
    const std::string name = cmd->get_name();
    if (name == "branch-points") return cmd_branch_points(rc);
    if (name == "trace") return cmd_trace(rc);
    if (name == "continue") return cmd_continue(rc);
    if (name == "diff") return cmd_diff(rc);
    if (name == "verify") return cmd_verify(rc);
    return cmd_curve(rc);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_numerical_failure(e.kind()) ? 2 : 1;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
