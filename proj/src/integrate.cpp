#include "branching/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>

#include "branching/errors.hpp"

namespace branching {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double error;
  double resabs;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel qk15(const std::function<cplx(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  cplx fv1[7], fv2[7];
  const cplx fc = f(centr);
  cplx resg = fc * wg[3];
  cplx resk = fc * wgk[7];
  double resabs = std::abs(fc) * wgk[7];
  for (int j = 0; j < 7; ++j) {
    const double absc = hlgth * xgk[j];
    fv1[j] = f(centr - absc);
    fv2[j] = f(centr + absc);
    const cplx fsum = fv1[j] + fv2[j];
    resk += wgk[j] * fsum;
    resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += wg[j / 2] * fsum;
  }
  const cplx reskh = resk * 0.5;
  double resasc = wgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const cplx result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) abserr = std::max(eps * 50.0 * resabs, abserr);
  return {a, b, result, abserr, resabs};
}

}  // namespace

QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b, const QuadratureOptions& opts) {
  return integrate(f, std::vector<double>{a, b}, opts);
}

QuadratureResult integrate(const std::function<cplx(double)>& f, const std::vector<double>& breakpoints,
                           const QuadratureOptions& opts) {
  if (breakpoints.size() < 2) throw Error(ErrorKind::invalid_argument, "integration needs two endpoints");
  for (double x : breakpoints)
    if (!std::isfinite(x)) throw Error(ErrorKind::invalid_argument, "non-finite integration limit");

  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  cplx total = 0.0;
  double error = 0.0, resabs = 0.0;
  int evaluations = 0;
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    if (breakpoints[k] == breakpoints[k + 1]) continue;
    Panel p = qk15(f, breakpoints[k], breakpoints[k + 1]);
    evaluations += 15;
    total += p.value;
    error += p.error;
    resabs += p.resabs;
    heap.push(p);
  }

  constexpr double roundoff = 100.0 * std::numeric_limits<double>::epsilon();
  auto target = [&] { return std::max({opts.abs_tol, opts.rel_tol * std::abs(total), roundoff * resabs}); };

  while (!heap.empty() && error > target()) {
    if (static_cast<int>(heap.size()) >= opts.max_intervals) {
      const Panel& worst = heap.top();
      char msg[200];
      std::snprintf(msg, sizeof msg, "no convergence after %d intervals; worst [%.6g, %.6g] error %.3g",
                    static_cast<int>(heap.size()), worst.a, worst.b, worst.error);
      throw Error(ErrorKind::quadrature_failure, msg);
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      char msg[200];
      std::snprintf(msg, sizeof msg, "interval [%.17g, %.17g] cannot be subdivided further", worst.a, worst.b);
      throw Error(ErrorKind::quadrature_failure, msg);
    }
    const Panel left = qk15(f, worst.a, mid);
    const Panel right = qk15(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    resabs += left.resabs + right.resabs - worst.resabs;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum in a fixed order so the value does not depend on the refinement history.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  QuadratureResult out;
  for (const Panel& p : panels) {
    out.value += p.value;
    out.est_error += p.error;
  }
  out.evaluations = evaluations;
  out.intervals = static_cast<int>(panels.size());
  return out;
}

}  // namespace branching
