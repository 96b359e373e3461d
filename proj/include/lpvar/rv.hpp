#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpvar/duality.hpp"
#include "lpvar/lpspace.hpp"

namespace lpvar {

// A step function attached to each cell of a finite measurable partition of
// (0,1]. Cells are pairwise disjoint and their measures sum to 1 (within
// kBreakpointMergeTol).
class SimpleLpRV {
 public:
  struct Cell {
    IntervalUnion set;
    StepFunction value;
  };

  explicit SimpleLpRV(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }

  // The value of the unique cell containing omega. Throws if omega falls in
  // a gap left by an (tolerated) imperfect partition.
  const StepFunction& value_at(double omega) const;

 private:
  std::vector<Cell> cells_;

  struct Slot {
    double lo;
    double hi;
    std::size_t cell;
  };
  std::vector<Slot> lookup_;
};

// Thrown by pettis_disjointify when the family's balls fail to cover enough
// of (0,1).
class CoverageError : public std::runtime_error {
 public:
  CoverageError(const std::string& what, double uncovered)
      : std::runtime_error(what), uncovered_(uncovered) {}
  double uncovered_measure() const { return uncovered_; }

 private:
  double uncovered_;
};

// An evaluable map omega -> L^p(0,1). Internally every variable is kept in
// the normal form  c * 1_(0,omega] + simple part, which is closed under
// linear combination.
class LpRandomVariable {
 public:
  enum class Kind { IndicatorProcess, Simple, Composite };

  // The process omega -> 1_(0, omega].
  static LpRandomVariable indicator_process();
  static LpRandomVariable simple(SimpleLpRV rv);
  static LpRandomVariable combination(std::span<const double> coeffs,
                                      std::span<const LpRandomVariable> parts);

  Kind kind() const { return kind_; }
  double prefix_coefficient() const { return prefix_coef_; }
  const SimpleLpRV& step_part() const { return base_; }

  StepFunction evaluate(double omega) const;  // omega in (0,1)

 private:
  LpRandomVariable(Kind kind, double prefix_coef, SimpleLpRV base);

  Kind kind_;
  double prefix_coef_;
  SimpleLpRV base_;
};

// Cells (((j-1)/2^level, j/2^level], 1_(0, j/2^level]) for j = 1..2^level.
// Approximates the indicator process with sup error at most 2^(-level/p).
SimpleLpRV dyadic_approximation(int level);

// The exact set {omega : ||xi(omega) - center||_p < radius}. Piecewise
// affine root finding cell by cell; strict inequality at the boundary.
IntervalUnion ball_preimage(const LpRandomVariable& xi,
                            const StepFunction& center, double radius,
                            const Exponent& e);

// Greedy first-index-wins disjointification of the radius-2^(-k) ball
// preimages of the family members, truncated at the smallest prefix whose
// tail (plus any uncovered remainder, both reassigned to the first member)
// has measure below 2^(-k). The result xi_k satisfies
//   measure{omega : ||xi_k(omega) - xi(omega)||_p >= 2^(-k)} < 2^(-k).
SimpleLpRV pettis_disjointify(const LpRandomVariable& xi,
                              const DenseFamily& fam, int k,
                              const Exponent& e);

}  // namespace lpvar
