#include "branching/spectral_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "branching/errors.hpp"

namespace branching {

GrossencharParams GrossencharParams::from(std::vector<double> t) {
  if (t.empty()) throw Error(ErrorKind::invalid_character, "a character needs at least one parameter");
  double sum = 0.0, scale = 0.0;
  for (double tj : t) {
    if (!std::isfinite(tj)) throw Error(ErrorKind::invalid_character, "non-finite character parameter");
    sum += tj;
    scale = std::max(scale, std::abs(tj));
  }
  if (std::abs(sum) > 1e-14 * std::max(1.0, scale))
    throw Error(ErrorKind::invalid_character, "character parameters must sum to zero");
  return GrossencharParams{std::move(t)};
}

double GrossencharParams::norm_sq() const {
  if (t.empty()) return 0.0;
  double acc = 0.0;
  for (double tj : t) acc += tj * tj;
  return acc / static_cast<double>(t.size());
}

bool GrossencharParams::trivial() const {
  for (double tj : t)
    if (tj != 0.0) return false;
  return true;
}

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::gl2q: return "GL2Q";
    case ModelKind::hilbert_maass: return "HilbertMaass";
    case ModelKind::gl3_cuspidal: return "GL3Cuspidal";
    case ModelKind::gl3_min_parabolic: return "GL3MinParabolic";
  }
  return "?";
}

SpectralModel SpectralModel::gl2q() {
  SpectralModel m;
  m.chi_ = GrossencharParams{{0.0}};
  return m;
}

SpectralModel SpectralModel::hilbert_maass(GrossencharParams params) {
  params = GrossencharParams::from(std::move(params.t));
  SpectralModel m;
  m.kind_ = ModelKind::hilbert_maass;
  m.c_ = params.norm_sq();
  m.chi_ = std::move(params);
  return m;
}

SpectralModel SpectralModel::gl3_cuspidal(cplx t_f) {
  const bool real = t_f.imag() == 0.0;
  const bool exceptional = t_f.real() == 0.0 && t_f.imag() <= 0.0 && t_f.imag() >= -0.5;
  if (!real && !exceptional)
    throw Error(ErrorKind::invalid_argument, "t_f must be real or lie in -i[0, 1/2]");
  SpectralModel m;
  m.kind_ = ModelKind::gl3_cuspidal;
  m.a_ = 6.0;
  m.nu_ = 2;
  m.t_f_ = t_f;
  m.c_ = cplx((t_f * t_f).real() + 0.25, 0.0) / 3.0;
  return m;
}

SpectralModel SpectralModel::gl3_min_parabolic(double rho_norm_sq) {
  if (!(rho_norm_sq >= 0.0)) throw Error(ErrorKind::invalid_argument, "|rho|^2 must be nonnegative");
  SpectralModel m;
  m.kind_ = ModelKind::gl3_min_parabolic;
  m.nu_ = 2;
  m.rho_norm_sq_ = rho_norm_sq;
  return m;
}

cplx eigenvalue(const SpectralModel& model, cplx s) {
  switch (model.kind()) {
    case ModelKind::gl2q: return s * (s - 1.0);
    case ModelKind::hilbert_maass: {
      const auto& t = model.character().t;
      cplx acc = 0.0;
      for (double tj : t) {
        const cplx u = s + cplx(0.0, tj);
        acc += u * (u - 1.0);
      }
      return acc / static_cast<double>(t.size());
    }
    case ModelKind::gl3_cuspidal: {
      const cplx sf = 0.5 + cplx(0.0, 1.0) * model.t_f();
      return 2.0 * (sf * (sf - 1.0) + 3.0 * s * (s - 1.0));
    }
    case ModelKind::gl3_min_parabolic: break;
  }
  throw Error(ErrorKind::invalid_argument, "minimal-parabolic eigenvalues take a character, use the planar form");
}

cplx lambda_w(const SpectralModel& model, cplx w) {
  switch (model.kind()) {
    case ModelKind::gl2q:
    case ModelKind::hilbert_maass: return w * (w - 1.0);
    case ModelKind::gl3_cuspidal: return 6.0 * w * (w - 1.0);
    case ModelKind::gl3_min_parabolic: return w * w - model.rho_norm_sq();
  }
  return 0.0;
}

cplx eigenvalue_minparabolic_power(cplx s1, cplx s2, cplx s3, double tol) {
  const double scale = std::max({1.0, std::abs(s1), std::abs(s2), std::abs(s3)});
  if (std::abs(s1 + s2 + s3) > tol * scale)
    throw Error(ErrorKind::invalid_character, "s1 + s2 + s3 must vanish");
  return 2.0 * (s1 * s1 + s1 * s2 + s2 * s2 - 2.0 * s1 - s2);
}

cplx eigenvalue_minparabolic_root(cplx sa, cplx sb, cplx sab) {
  return 2.0 * (sa * sa + sb * sb - sa * sb + sa * sab + sb * sab - sa - sb - 2.0 * sab);
}

double eigenvalue_minparabolic_planar(double eta_norm_sq, double rho_norm_sq) {
  return -(eta_norm_sq + rho_norm_sq);
}

cplx radicand(const SpectralModel& model, cplx w) {
  if (model.kind() == ModelKind::gl3_min_parabolic)
    throw Error(ErrorKind::invalid_argument, "the minimal-parabolic model has no pole radicand");
  const cplx u = w - 0.5;
  return u * u + model.radicand_offset();
}

PolePair poles(const SpectralModel& model, cplx w) {
  if (!(w.real() > 0.5))
    throw Error(ErrorKind::invalid_argument, "poles() uses the reference branch, which needs Re(w) > 1/2");
  const cplx r = radicand(model, w);
  if (r.imag() == 0.0 && r.real() <= 0.0)
    throw Error(ErrorKind::branch_ambiguity, "radicand on the branch cut; continue the pole along a path");
  const cplx q = std::sqrt(r);
  return {0.5 + q, 0.5 - q};
}

std::pair<cplx, cplx> branch_points(const SpectralModel& model) {
  if (model.kind() == ModelKind::gl3_min_parabolic)
    throw Error(ErrorKind::invalid_argument, "the minimal-parabolic model has no branch points");
  const cplx q = std::sqrt(model.radicand_offset());
  const cplx i(0.0, 1.0);
  return {0.5 - i * q, 0.5 + i * q};
}

GrossencharParams grossenchar_from_unit(double log_eps, int m, int n) {
  if (!(log_eps > 0.0)) throw Error(ErrorKind::invalid_argument, "log of the unit must be positive");
  if (n != 2) throw Error(ErrorKind::invalid_argument, "only real quadratic fields are supported");
  const double t = std::numbers::pi * m / log_eps;
  return GrossencharParams{{t, -t}};
}

}  // namespace branching
