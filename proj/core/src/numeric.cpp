#include "weylq/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylq {

IndexWindow gaussian_window(double center, double alpha, double tol, double pad) {
  const double half = std::sqrt(std::log(1.0 / tol) / alpha) + pad;
  return {static_cast<long long>(std::floor(center - half)),
          static_cast<long long>(std::ceil(center + half))};
}

IndexWindow half_lattice_window(double x, Level lvl, double tol) {
  const double r = lvl.r();
  const double half = std::sqrt(std::log(1.0 / tol) / (2.0 * kPi * r)) + 1.0;
  return {static_cast<long long>(std::floor(2.0 * r * (x - half))),
          static_cast<long long>(std::ceil(2.0 * r * (x + half)))};
}

ScalarFit fit_scalar(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("fit_scalar: sample sets must be non-empty and equal in size");
  }
  cplx num{0.0, 0.0};
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = 1.0 / std::abs(a[i]);
    const cplx an = a[i] * w;
    const cplx bn = b[i] * w;
    num += std::conj(bn) * an;
    den += std::norm(bn);
  }
  ScalarFit fit;
  fit.scale = den > 0.0 ? num / den : cplx{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    fit.residual = std::max(fit.residual, std::abs(a[i] - fit.scale * b[i]) / std::abs(a[i]));
  }
  return fit;
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace weylq
