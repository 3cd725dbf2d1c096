#include "branching/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "branching/errors.hpp"

namespace branching {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorKind::parse_error, std::string(what) + " must be a number");
  return j.get<double>();
}

void expect_close(const json& j, const char* key, cplx actual) {
  if (!j.contains(key)) return;
  const cplx given = complex_from_json(j.at(key));
  if (std::abs(given - actual) > 1e-12 * (1.0 + std::abs(actual)))
    throw Error(ErrorKind::invalid_argument, std::string("descriptor field '") + key + "' contradicts the model");
}

void write(std::ostringstream& out, const json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* newline = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out << buf;
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Short numeric arrays (complex pairs, points) stay on one line.
      bool flat = j.size() <= 4;
      for (const auto& e : j) flat = flat && e.is_number();
      out << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out << (flat ? ", " : ",");
        first = false;
        if (!flat) out << newline << pad;
        write(out, e, indent, depth + 1);
      }
      if (!flat) out << newline << close_pad;
      out << ']';
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',';
        first = false;
        out << newline << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
        write(out, it.value(), indent, depth + 1);
      }
      out << newline << close_pad << '}';
      return;
    }
    default: out << j.dump(); return;
  }
}

}  // namespace

cplx complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  throw Error(ErrorKind::parse_error, "expected a number or a [re, im] pair");
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

SpectralModel model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorKind::parse_error, "model descriptor needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  SpectralModel model;
  if (kind == "GL2Q") {
    model = SpectralModel::gl2q();
  } else if (kind == "HilbertMaass") {
    if (!j.contains("t") || !j.at("t").is_array()) throw Error(ErrorKind::parse_error, "HilbertMaass needs 't'");
    std::vector<double> t;
    for (const auto& e : j.at("t")) t.push_back(number(e, "t_j"));
    model = SpectralModel::hilbert_maass(GrossencharParams{std::move(t)});
  } else if (kind == "GL3Cuspidal") {
    if (!j.contains("t_f")) throw Error(ErrorKind::parse_error, "GL3Cuspidal needs 't_f'");
    model = SpectralModel::gl3_cuspidal(complex_from_json(j.at("t_f")));
  } else if (kind == "GL3MinParabolic") {
    model = SpectralModel::gl3_min_parabolic(j.contains("rho_norm_sq") ? number(j.at("rho_norm_sq"), "rho_norm_sq")
                                                                       : 0.0);
  } else {
    throw Error(ErrorKind::parse_error, "unknown model kind '" + kind + "'");
  }
  expect_close(j, "a", model.leading_coeff());
  expect_close(j, "c", model.radicand_offset());
  expect_close(j, "nu", static_cast<double>(model.pole_order()));
  return model;
}

json model_to_json(const SpectralModel& model) {
  json j;
  j["kind"] = to_string(model.kind());
  j["a"] = model.leading_coeff();
  j["c"] = complex_to_json(model.radicand_offset());
  j["nu"] = model.pole_order();
  switch (model.kind()) {
    case ModelKind::hilbert_maass: j["t"] = model.character().t; break;
    case ModelKind::gl3_cuspidal: j["t_f"] = complex_to_json(model.t_f()); break;
    case ModelKind::gl3_min_parabolic: j["rho_norm_sq"] = model.rho_norm_sq(); break;
    case ModelKind::gl2q: break;
  }
  return j;
}

Numerator numerator_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorKind::parse_error, "numerator descriptor needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const cplx scale = j.contains("scale") ? complex_from_json(j.at("scale")) : cplx(1.0);
  if (kind == "gaussian") {
    if (!j.contains("width")) throw Error(ErrorKind::parse_error, "gaussian numerator needs 'width'");
    return Numerator::gaussian(number(j.at("width"), "width"), scale);
  }
  if (kind == "eisenstein_product_gl2") {
    auto point = [&](const char* key) {
      const cplx z = j.contains(key) ? complex_from_json(j.at(key)) : cplx(0.0, 1.0);
      return UpperHalfPoint::from(z.real(), z.imag());
    };
    const int n_terms = j.contains("n_terms") ? j.at("n_terms").get<int>() : 30;
    return Numerator::eisenstein_product(point("z0"), point("z"), n_terms, scale);
  }
  if (kind == "constant") {
    if (!j.contains("value")) throw Error(ErrorKind::parse_error, "constant numerator needs 'value'");
    return Numerator::constant(complex_from_json(j.at("value")));
  }
  throw Error(ErrorKind::parse_error, "unknown numerator kind '" + kind + "'");
}

json numerator_to_json(const Numerator& n) {
  json j;
  switch (n.kind()) {
    case NumeratorKind::gaussian:
      j["kind"] = "gaussian";
      j["width"] = n.width();
      j["scale"] = complex_to_json(n.scale());
      break;
    case NumeratorKind::eisenstein_product:
      j["kind"] = "eisenstein_product_gl2";
      j["z0"] = json::array({n.z0().x, n.z0().y});
      j["z"] = json::array({n.z().x, n.z().y});
      j["n_terms"] = n.n_terms();
      j["scale"] = complex_to_json(n.scale());
      break;
    case NumeratorKind::constant:
      j["kind"] = "constant";
      j["value"] = complex_to_json(n.scale());
      break;
  }
  return j;
}

json correction_to_json(const CorrectionTerm& t) {
  json j;
  j["s_star"] = complex_to_json(t.s_star);
  j["nu"] = t.order;
  j["coefficient"] = complex_to_json(t.coefficient);
  j["numerator_value"] = complex_to_json(t.numerator_value);
  if (t.order == 2) {
    j["derivative_coefficient"] = complex_to_json(t.derivative_coefficient);
    j["numerator_derivative"] = complex_to_json(t.numerator_derivative);
  }
  j["term_value"] = complex_to_json(t.term_value);
  return j;
}

json continuation_to_json(const ContinuationResult& r) {
  json j;
  j["endpoint"] = complex_to_json(r.endpoint_value);
  j["corrections"] = json::array();
  for (const auto& c : r.corrections) j["corrections"].push_back(correction_to_json(c));
  j["crossings"] = r.trace.cut_crossings;
  j["final_sign"] = r.trace.final_sign;
  j["s_end"] = complex_to_json(r.s_end());
  j["est_error"] = r.est_error;
  return j;
}

json trace_to_json(const BranchTrace& t) {
  json j;
  j["cut_crossings"] = t.cut_crossings;
  j["final_sign"] = t.final_sign;
  j["samples"] = t.sqrt_samples.size();
  j["max_square_defect"] = t.max_square_defect();
  if (t.w_samples.size() > 0) {
    j["w_start"] = complex_to_json(t.w_samples.samples.front());
    j["w_end"] = complex_to_json(t.w_samples.samples.back());
  }
  j["s_start"] = complex_to_json(0.5 + t.sqrt_samples.samples.front());
  j["s_end"] = complex_to_json(0.5 + t.sqrt_samples.samples.back());
  return j;
}

WPath parse_path(const std::string& text, const std::string& label) {
  std::vector<cplx> points;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (item.find_first_not_of(" \t") != std::string::npos) points.push_back(parse_complex(item));
  return WPath::from_points(std::move(points), label);
}

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (text.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(text);
      return re;
    }
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (a.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(a);
    const double im = std::stod(b, &used);
    if (b.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(b);
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse_error, "cannot read a complex number from '" + text + "'");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse_error, path + ": " + e.what());
  }
}

std::string dump_json(const json& j, int indent) {
  std::ostringstream out;
  write(out, j, indent, 0);
  out << '\n';
  return out.str();
}

}  // namespace branching
