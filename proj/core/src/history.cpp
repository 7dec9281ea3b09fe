#include "pseirs/history.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pseirs/error.hpp"

namespace pseirs {

namespace {

bool non_negative(const CompartmentState& x) {
  return x.s >= 0.0 && x.e >= 0.0 && x.i >= 0.0 && x.r >= 0.0;
}

}  // namespace

HistoryFunction::HistoryFunction(SampledHistory sampled) {
  const auto& t = sampled.times;
  if (t.empty() || t.size() != sampled.states.size()) {
    throw InvalidParameter("history.times", static_cast<double>(t.size()),
                           "one state per time and at least one sample");
  }
  if (t.back() != 0.0) {
    throw InvalidParameter("history.times.back", t.back(), "last history time == 0");
  }
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (!(t[k] > t[k - 1])) {
      throw InvalidParameter("history.times", t[k], "strictly increasing");
    }
  }
  for (const auto& x : sampled.states) {
    if (!non_negative(x)) throw InvalidParameter("history.state", std::min({x.s, x.e, x.i, x.r}), ">= 0");
  }
  repr_ = std::move(sampled);
}

bool HistoryFunction::covers(double span) const noexcept { return lower_bound() <= -span; }

double HistoryFunction::lower_bound() const noexcept {
  if (const auto* s = as_sampled()) return s->times.front();
  return -std::numeric_limits<double>::infinity();
}

CompartmentState HistoryFunction::operator()(double t) const {
  if (const auto* c = as_constant()) {
    if (t > 0.0) {
      throw Error(ErrorKind::OutOfDomain, "history evaluated at positive time");
    }
    return c->state;
  }
  const auto& h = *as_sampled();
  if (t > 0.0 || t < h.times.front()) {
    std::ostringstream os;
    os << "history evaluated at t = " << t << " outside [" << h.times.front() << ", 0]";
    throw Error(ErrorKind::OutOfDomain, os.str());
  }
  const auto it = std::lower_bound(h.times.begin(), h.times.end(), t);
  const auto k = static_cast<std::size_t>(it - h.times.begin());
  if (*it == t) return h.states[k];
  const double t0 = h.times[k - 1];
  const double w = (t - t0) / (h.times[k] - t0);
  const auto& a = h.states[k - 1];
  const auto& b = h.states[k];
  return {a.s + w * (b.s - a.s), a.e + w * (b.e - a.e), a.i + w * (b.i - a.i),
          a.r + w * (b.r - a.r)};
}

}  // namespace pseirs
