#include "lpvar/rv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "lpvar/format.hpp"

namespace lpvar {

SimpleLpRV::SimpleLpRV(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) {
    throw std::invalid_argument("SimpleLpRV: at least one cell required");
  }
  lookup_.clear();
  long double total = 0.0L;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (const auto& iv : cells_[c].set.intervals()) {
      lookup_.push_back({iv.lo, iv.hi, c});
      total += iv.hi - iv.lo;
    }
  }
  std::sort(lookup_.begin(), lookup_.end(),
            [](const Slot& a, const Slot& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i + 1 < lookup_.size(); ++i) {
    if (lookup_[i + 1].lo < lookup_[i].hi) {
      throw std::invalid_argument("SimpleLpRV: cells overlap");
    }
  }
  if (std::fabs(static_cast<double>(total) - 1.0) > kBreakpointMergeTol) {
    throw std::invalid_argument(
        "SimpleLpRV: cell measures sum to " +
        format_double(static_cast<double>(total)) + ", expected 1");
  }
}

const StepFunction& SimpleLpRV::value_at(double omega) const {
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), omega,
      [](const Slot& s, double w) { return s.hi < w; });
  if (it == lookup_.end() || !(it->lo < omega && omega <= it->hi)) {
    throw std::runtime_error(
        "SimpleLpRV: omega = " + format_double(omega) +
        " falls in a partition gap");
  }
  return cells_[it->cell].value;
}

LpRandomVariable::LpRandomVariable(Kind kind, double prefix_coef,
                                   SimpleLpRV base)
    : kind_(kind), prefix_coef_(prefix_coef), base_(std::move(base)) {}

LpRandomVariable LpRandomVariable::indicator_process() {
  return LpRandomVariable(
      Kind::IndicatorProcess, 1.0,
      SimpleLpRV({{IntervalUnion::full(), StepFunction()}}));
}

LpRandomVariable LpRandomVariable::simple(SimpleLpRV rv) {
  return LpRandomVariable(Kind::Simple, 0.0, std::move(rv));
}

namespace {

SimpleLpRV combine_step_parts(std::span<const double> coeffs,
                              std::span<const LpRandomVariable> parts) {
  // Refine all partitions into atoms, combine values per atom, then group
  // atoms carrying the same combined value into one cell.
  std::vector<double> cuts{0.0, 1.0};
  for (const auto& part : parts) {
    for (const auto& cell : part.step_part().cells()) {
      for (const auto& iv : cell.set.intervals()) {
        cuts.push_back(iv.lo);
        cuts.push_back(iv.hi);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<StepFunction> distinct;
  std::vector<std::vector<IntervalUnion::Interval>> groups;
  std::vector<StepFunction> atom_parts(parts.size());
  for (std::size_t a = 0; a + 1 < cuts.size(); ++a) {
    const double lo = cuts[a];
    const double hi = cuts[a + 1];
    if (!(lo < hi)) continue;
    const double mid = lo + (hi - lo) / 2.0;
    for (std::size_t n = 0; n < parts.size(); ++n) {
      atom_parts[n] = parts[n].step_part().value_at(mid);
    }
    StepFunction combined = linear_combine(coeffs, atom_parts);
    auto found = std::find(distinct.begin(), distinct.end(), combined);
    if (found == distinct.end()) {
      distinct.push_back(std::move(combined));
      groups.push_back({{lo, hi}});
    } else {
      groups[static_cast<std::size_t>(found - distinct.begin())].push_back(
          {lo, hi});
    }
  }

  std::vector<SimpleLpRV::Cell> cells;
  cells.reserve(distinct.size());
  for (std::size_t g = 0; g < distinct.size(); ++g) {
    cells.push_back({IntervalUnion(std::move(groups[g])), std::move(distinct[g])});
  }
  return SimpleLpRV(std::move(cells));
}

}  // namespace

LpRandomVariable LpRandomVariable::combination(
    std::span<const double> coeffs, std::span<const LpRandomVariable> parts) {
  if (coeffs.empty() || coeffs.size() != parts.size()) {
    throw std::invalid_argument(
        "LpRandomVariable::combination: coefficient and part lists must be "
        "nonempty and of equal length");
  }
  long double prefix = 0.0L;
  for (std::size_t n = 0; n < parts.size(); ++n) {
    prefix += static_cast<long double>(coeffs[n]) *
              parts[n].prefix_coefficient();
  }
  return LpRandomVariable(Kind::Composite, static_cast<double>(prefix),
                          combine_step_parts(coeffs, parts));
}

StepFunction LpRandomVariable::evaluate(double omega) const {
  if (!(omega > 0.0 && omega < 1.0)) {
    throw std::domain_error(
        "LpRandomVariable::evaluate: omega must lie in (0,1)");
  }
  const StepFunction& base_value = base_.value_at(omega);
  if (prefix_coef_ == 0.0) return base_value;
  const double coeffs[] = {prefix_coef_, 1.0};
  const StepFunction fns[] = {StepFunction::prefix_indicator(omega),
                              base_value};
  return linear_combine(coeffs, fns);
}

SimpleLpRV dyadic_approximation(int level) {
  if (level < 1 || level > 30) {
    throw std::domain_error(
        "dyadic_approximation: level must lie in [1, 30]");
  }
  const int count = 1 << level;
  std::vector<SimpleLpRV::Cell> cells;
  cells.reserve(count);
  for (int j = 1; j <= count; ++j) {
    const double lo = std::ldexp(double(j - 1), -level);
    const double hi = std::ldexp(double(j), -level);
    cells.push_back(
        {IntervalUnion::single(lo, hi), StepFunction::prefix_indicator(hi)});
  }
  return SimpleLpRV(std::move(cells));
}

IntervalUnion ball_preimage(const LpRandomVariable& xi,
                            const StepFunction& center, double radius,
                            const Exponent& e) {
  if (!(radius > 0.0)) {
    throw std::domain_error("ball_preimage: radius must be positive");
  }
  const double threshold = pow_abs(radius, e.p());
  const double c = xi.prefix_coefficient();

  std::vector<IntervalUnion::Interval> pieces;
  for (const auto& cell : xi.step_part().cells()) {
    // For omega inside this cell, xi(omega) = c*1_(0,omega] + value, so
    //   g(w) = ||xi(w) - center||_p^p
    //        = int_0^w |d(t)+c|^p dt + int_w^1 |d(t)|^p dt,  d = value-center,
    // which is affine in w on each cell of d with slope |d+c|^p - |d|^p.
    const StepFunction diff = cell.value - center;
    const auto& bp = diff.breakpoints();
    const auto& vals = diff.values();
    const std::size_t m = vals.size();

    std::vector<double> slope(m);
    long double g = 0.0L;
    for (std::size_t i = 0; i < m; ++i) {
      const double base_pow = pow_abs(vals[i], e.p());
      slope[i] = pow_abs(vals[i] + c, e.p()) - base_pow;
      g += static_cast<long double>(base_pow) * (bp[i + 1] - bp[i]);
    }

    std::vector<IntervalUnion::Interval> sols;
    for (std::size_t i = 0; i < m; ++i) {
      const double t0 = bp[i];
      const double t1 = bp[i + 1];
      const double g_left = static_cast<double>(g);
      if (slope[i] == 0.0) {
        if (g_left < threshold) sols.push_back({t0, t1});
      } else {
        const double root = t0 + (threshold - g_left) / slope[i];
        if (slope[i] > 0.0) {
          const double hi = std::min(t1, root);
          if (hi > t0) sols.push_back({t0, hi});
        } else {
          const double lo = std::max(t0, root);
          if (lo < t1) sols.push_back({lo, t1});
        }
      }
      g += static_cast<long double>(slope[i]) * (t1 - t0);
    }

    const IntervalUnion clipped =
        set_intersection(IntervalUnion(std::move(sols)), cell.set);
    pieces.insert(pieces.end(), clipped.intervals().begin(),
                  clipped.intervals().end());
  }
  return IntervalUnion(std::move(pieces));
}

SimpleLpRV pettis_disjointify(const LpRandomVariable& xi,
                              const DenseFamily& fam, int k,
                              const Exponent& e) {
  if (k < 1 || k > 60) {
    throw std::domain_error("pettis_disjointify: k must lie in [1, 60]");
  }
  const double eps = std::ldexp(1.0, -k);
  const auto& members = fam.members();

  // First-index-wins: A_j = E_j \ (E_1 u ... u E_{j-1}).
  std::vector<IntervalUnion> disjoint;
  std::vector<double> measures;
  disjoint.reserve(members.size());
  measures.reserve(members.size());
  IntervalUnion covered;
  for (const auto& member : members) {
    const IntervalUnion ball = ball_preimage(xi, member, eps, e);
    disjoint.push_back(set_difference(ball, covered));
    measures.push_back(disjoint.back().measure());
    covered = set_union(covered, ball);
  }
  const IntervalUnion uncovered = set_complement(covered);
  const double uncovered_measure = uncovered.measure();
  if (uncovered_measure > eps) {
    throw CoverageError(
        "pettis_disjointify: family balls cover only measure " +
            format_double(covered.measure()) + " of (0,1); uncovered " +
            format_double(uncovered_measure) + " exceeds 2^-k = " +
            format_double(eps),
        uncovered_measure);
  }

  // Smallest truncation point whose tail mass (everything reassigned to the
  // first member, uncovered remainder included) stays below 2^-k.
  std::vector<long double> tail(members.size() + 1, 0.0L);
  tail[members.size()] = uncovered_measure;
  for (std::size_t j = members.size(); j > 0; --j) {
    tail[j - 1] = tail[j] + measures[j - 1];
  }
  std::size_t keep = members.size() + 1;
  for (std::size_t n = 1; n <= members.size(); ++n) {
    if (static_cast<double>(tail[n]) < eps) {
      keep = n;
      break;
    }
  }
  if (keep > members.size()) {
    throw CoverageError(
        "pettis_disjointify: no truncation point keeps the tail below 2^-k = " +
            format_double(eps) + "; uncovered measure is " +
            format_double(uncovered_measure),
        uncovered_measure);
  }

  IntervalUnion first_set = disjoint[0];
  for (std::size_t j = keep; j < members.size(); ++j) {
    first_set = set_union(first_set, disjoint[j]);
  }
  first_set = set_union(first_set, uncovered);

  std::vector<SimpleLpRV::Cell> cells;
  cells.reserve(keep);
  if (!first_set.is_empty()) cells.push_back({first_set, members[0]});
  for (std::size_t j = 1; j < keep; ++j) {
    if (!disjoint[j].is_empty()) cells.push_back({disjoint[j], members[j]});
  }
  return SimpleLpRV(std::move(cells));
}

}  // namespace lpvar
