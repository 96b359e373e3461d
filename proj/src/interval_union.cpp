#include "lpvar/interval_union.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lpvar {

IntervalUnion::IntervalUnion(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
      throw std::invalid_argument("IntervalUnion: non-finite endpoint");
    }
    if (iv.lo < 0.0 || iv.hi > 1.0) {
      throw std::invalid_argument(
          "IntervalUnion: intervals must lie within (0,1]");
    }
  }
  std::erase_if(intervals_, [](const Interval& iv) { return iv.lo >= iv.hi; });
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  // Merge overlapping and touching intervals; (a,b] followed by (b,c]
  // collapses to (a,c].
  std::vector<Interval> merged;
  merged.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  intervals_ = std::move(merged);
}

IntervalUnion IntervalUnion::single(double lo, double hi) {
  return IntervalUnion(std::vector<Interval>{{lo, hi}});
}

IntervalUnion IntervalUnion::full() { return single(0.0, 1.0); }

double IntervalUnion::measure() const {
  long double acc = 0.0L;
  for (const auto& iv : intervals_) acc += iv.hi - iv.lo;
  return static_cast<double>(acc);
}

bool IntervalUnion::contains(double omega) const {
  auto it = std::lower_bound(
      intervals_.begin(), intervals_.end(), omega,
      [](const Interval& iv, double w) { return iv.hi < w; });
  return it != intervals_.end() && it->lo < omega && omega <= it->hi;
}

IntervalUnion set_union(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<IntervalUnion::Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalUnion(std::move(all));
}

IntervalUnion set_intersection(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<IntervalUnion::Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& xs = a.intervals();
  const auto& ys = b.intervals();
  while (i < xs.size() && j < ys.size()) {
    const double lo = std::max(xs[i].lo, ys[j].lo);
    const double hi = std::min(xs[i].hi, ys[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (xs[i].hi < ys[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion set_difference(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<IntervalUnion::Interval> out;
  const auto& ys = b.intervals();
  std::size_t j = 0;
  for (const auto& x : a.intervals()) {
    double cursor = x.lo;
    while (j < ys.size() && ys[j].hi <= cursor) ++j;
    std::size_t jj = j;
    while (jj < ys.size() && ys[jj].lo < x.hi) {
      if (ys[jj].lo > cursor) out.push_back({cursor, ys[jj].lo});
      cursor = std::max(cursor, ys[jj].hi);
      if (cursor >= x.hi) break;
      ++jj;
    }
    if (cursor < x.hi) out.push_back({cursor, x.hi});
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion set_complement(const IntervalUnion& a) {
  return set_difference(IntervalUnion::full(), a);
}

}  // namespace lpvar
