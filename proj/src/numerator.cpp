#include "branching/numerator.hpp"

#include <algorithm>
#include <cmath>

#include "branching/errors.hpp"

namespace branching {

Numerator Numerator::gaussian(double width, cplx scale) {
  if (!(width > 0.0)) throw Error(ErrorKind::invalid_argument, "gaussian width must be positive");
  Numerator n;
  n.kind_ = NumeratorKind::gaussian;
  n.width_ = width;
  n.scale_ = scale;
  return n;
}

Numerator Numerator::eisenstein_product(UpperHalfPoint z0, UpperHalfPoint z, int n_terms, cplx scale) {
  if (n_terms < 0) throw Error(ErrorKind::invalid_argument, "n_terms must be nonnegative");
  Numerator n;
  n.kind_ = NumeratorKind::eisenstein_product;
  n.z0_ = UpperHalfPoint::from(z0.x, z0.y);
  n.z_ = UpperHalfPoint::from(z.x, z.y);
  n.n_terms_ = n_terms;
  n.scale_ = scale;
  return n;
}

Numerator Numerator::constant(cplx value) {
  Numerator n;
  n.scale_ = value;
  return n;
}

cplx Numerator::operator()(cplx s) const {
  switch (kind_) {
    case NumeratorKind::gaussian: {
      const cplx u = s - 0.5;
      return scale_ * std::exp(u * u / (width_ * width_));
    }
    case NumeratorKind::eisenstein_product:
      return scale_ * eisenstein_completed(1.0 - s, z0_, n_terms_) * eisenstein_completed(s, z_, n_terms_);
    case NumeratorKind::constant: return scale_;
  }
  return 0.0;
}

cplx Numerator::derivative(cplx s) const {
  switch (kind_) {
    case NumeratorKind::gaussian: return 2.0 * (s - 0.5) / (width_ * width_) * (*this)(s);
    case NumeratorKind::eisenstein_product: {
      // Five-point stencil; the product is analytic away from s = 0, 1.
      const double h = 1e-3;
      const auto& f = *this;
      return (f(s - 2.0 * h) - 8.0 * f(s - h) + 8.0 * f(s + h) - f(s + 2.0 * h)) / (12.0 * h);
    }
    case NumeratorKind::constant: return 0.0;
  }
  return 0.0;
}

std::vector<cplx> Numerator::poles() const {
  if (kind_ == NumeratorKind::eisenstein_product) return {0.0, 1.0};
  return {};
}

std::pair<double, double> Numerator::symmetry_defect(double T, int samples) const {
  double defect = 0.0, peak = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double tau = T * k / std::max(1, samples - 1);
    const cplx up = (*this)(cplx(0.5, tau));
    const cplx down = (*this)(cplx(0.5, -tau));
    defect = std::max(defect, std::abs(up - down));
    peak = std::max({peak, std::abs(up), std::abs(down)});
  }
  return {defect, peak};
}

}  // namespace branching
