#pragma once

#include <utility>
#include <vector>

#include "branching/complex_paths.hpp"

namespace branching {

struct GrossencharParams {
  std::vector<double> t;

  /// Validates the zero-sum condition (scaled tolerance 1e-14).
  static GrossencharParams from(std::vector<double> t);

  int degree() const { return static_cast<int>(t.size()); }
  double norm_sq() const;  // (1/n) sum t_j^2
  bool trivial() const;
};

enum class ModelKind { gl2q, hilbert_maass, gl3_cuspidal, gl3_min_parabolic };

const char* to_string(ModelKind kind);

class SpectralModel {
 public:
  static SpectralModel gl2q();
  static SpectralModel hilbert_maass(GrossencharParams params);
  /// t_f real, or purely imaginary in -i[0, 1/2].
  static SpectralModel gl3_cuspidal(cplx t_f);
  static SpectralModel gl3_min_parabolic(double rho_norm_sq);

  ModelKind kind() const { return kind_; }
  double leading_coeff() const { return a_; }
  cplx radicand_offset() const { return c_; }
  int pole_order() const { return nu_; }
  const GrossencharParams& character() const { return chi_; }
  cplx t_f() const { return t_f_; }
  double rho_norm_sq() const { return rho_norm_sq_; }

 private:
  ModelKind kind_ = ModelKind::gl2q;
  double a_ = 1.0;
  cplx c_ = 0.0;
  int nu_ = 1;
  GrossencharParams chi_;
  cplx t_f_ = 0.0;
  double rho_norm_sq_ = 0.0;
};

/// lambda(s) in the model's own normalization.
cplx eigenvalue(const SpectralModel& model, cplx s);
/// lambda_w: w(w-1), 6w(w-1) for GL3 cuspidal data, w^2 - |rho|^2 for the minimal parabolic.
cplx lambda_w(const SpectralModel& model, cplx w);

cplx eigenvalue_minparabolic_power(cplx s1, cplx s2, cplx s3, double tol = 1e-12);
cplx eigenvalue_minparabolic_root(cplx s_alpha, cplx s_beta, cplx s_alphabeta);
/// -(|eta|^2 + |rho|^2) on the planar spectral parameter.
double eigenvalue_minparabolic_planar(double eta_norm_sq, double rho_norm_sq);

/// (w - 1/2)^2 + c
cplx radicand(const SpectralModel& model, cplx w);

struct PolePair {
  cplx s_plus;
  cplx s_minus;
};

PolePair poles(const SpectralModel& model, cplx w);

/// 1/2 - i sqrt(c), 1/2 + i sqrt(c)
std::pair<cplx, cplx> branch_points(const SpectralModel& model);

GrossencharParams grossenchar_from_unit(double log_eps, int m, int n = 2);

}  // namespace branching
