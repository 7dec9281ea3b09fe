#pragma once

#include <cmath>
#include <cstddef>

namespace pseirs::quadrature {

/// Composite Simpson rule on [a, b] with an even number of panels.
template <class F>
double simpson(F&& f, double a, double b, std::size_t panels) {
  if (panels < 2) panels = 2;
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t k = 1; k < panels; ++k) {
    const double v = f(a + static_cast<double>(k) * h);
    if (k % 2 == 1) {
      odd += v;
    } else {
      even += v;
    }
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

struct Options {
  std::size_t min_panels = 64;
  std::size_t max_panels = std::size_t{1} << 22;
  double rel_tol = 1e-6;
};

/// Simpson with panel doubling until two successive estimates agree to rel_tol.
template <class F>
double simpson_converged(F&& f, double a, double b, const Options& opt = {}) {
  std::size_t panels = opt.min_panels;
  double prev = simpson(f, a, b, panels);
  while (panels < opt.max_panels) {
    panels *= 2;
    const double next = simpson(f, a, b, panels);
    const double scale = std::fabs(next);
    if (std::fabs(next - prev) <= opt.rel_tol * scale || (scale == 0.0 && prev == 0.0)) {
      return next;
    }
    prev = next;
  }
  return prev;
}

}  // namespace pseirs::quadrature
