#pragma once

#include <cstddef>
#include <vector>

namespace lpvar {

// A finite union of disjoint, sorted, nonempty half-open intervals
// (lo, hi] contained in (0,1]. Canonical form merges overlapping and
// touching intervals, so set equality is member comparison.
class IntervalUnion {
 public:
  struct Interval {
    double lo;
    double hi;
    bool operator==(const Interval&) const = default;
  };

  IntervalUnion() = default;  // empty set
  explicit IntervalUnion(std::vector<Interval> intervals);

  static IntervalUnion single(double lo, double hi);
  static IntervalUnion full();  // (0,1]

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool is_empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  double measure() const;
  bool contains(double omega) const;  // lo < omega <= hi for some interval

  bool operator==(const IntervalUnion&) const = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalUnion set_union(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion set_intersection(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion set_difference(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion set_complement(const IntervalUnion& a);  // within (0,1]

}  // namespace lpvar
