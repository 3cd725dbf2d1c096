#pragma once

#include <vector>

#include "branching/complex_paths.hpp"
#include "branching/eisenstein.hpp"

namespace branching {

enum class NumeratorKind { gaussian, eisenstein_product, constant };

/// Integrand numerator N(s) with N(s) = N(1 - s).
class Numerator {
 public:
  /// scale * exp((s - 1/2)^2 / width^2); decays like exp(-tau^2 / width^2) on the line.
  static Numerator gaussian(double width, cplx scale = 1.0);
  /// scale * E*(1 - s, z0) E*(s, z) with the completed series E* = xi(2s) E.
  static Numerator eisenstein_product(UpperHalfPoint z0, UpperHalfPoint z, int n_terms = 30, cplx scale = 1.0);
  static Numerator constant(cplx value);

  cplx operator()(cplx s) const;
  cplx derivative(cplx s) const;

  NumeratorKind kind() const { return kind_; }
  double width() const { return width_; }
  cplx scale() const { return scale_; }
  UpperHalfPoint z0() const { return z0_; }
  UpperHalfPoint z() const { return z_; }
  int n_terms() const { return n_terms_; }

  /// False only for constants, whose line integrals need the analytic tail.
  bool decays() const { return kind_ != NumeratorKind::constant; }
  /// Isolated singularities of N itself.
  std::vector<cplx> poles() const;
  /// max over a tau grid of |N(1/2 + i tau) - N(1/2 - i tau)|, and max |N| on the same grid.
  std::pair<double, double> symmetry_defect(double T, int samples = 65) const;

 private:
  NumeratorKind kind_ = NumeratorKind::constant;
  double width_ = 1.0;
  cplx scale_ = 1.0;
  UpperHalfPoint z0_{};
  UpperHalfPoint z_{};
  int n_terms_ = 30;
};

}  // namespace branching
