#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qcat/rational.hpp"

namespace qcat {

/**
 * Left-continuous monotone step function [0,oo] -> [0,1] with finitely many
 * rational jumps, kept in canonical form: breakpoints delta_i strictly
 * increasing (finite, >= 0), values u_i strictly increasing in (0,1].
 * Denotation: f(t) = max{u_i : delta_i < t} (0 when none), f(oo) = u_n.
 * The empty list is the constant-zero function (bottom).
 */
class StepFn {
public:
  struct Gen {
    Rat delta;
    Rat value;
    bool operator==(const Gen&) const = default;
  };

  StepFn() = default;

  static StepFn bottom() { return StepFn(); }
  /** Unit and top element: jumps to 1 immediately after 0. */
  static StepFn epsilon();
  /** Canonical form of the single-jump function f_{delta,value}. */
  static StepFn generator(const Rat& delta, const Rat& value);
  /** Join of arbitrary generators, canonicalized. Rejects out-of-range data. */
  static StepFn from_generators(std::vector<Gen> gens);
  /** Checks that the given list is already canonical; throws otherwise. */
  static StepFn from_canonical(std::vector<Gen> gens);

  const std::vector<Gen>& generators() const { return gens_; }
  bool is_bottom() const { return gens_.empty(); }
  bool operator==(const StepFn&) const = default;

  /** Value at a finite argument t >= 0. */
  Rat at(const Rat& t) const;
  /** Value at oo: the overall supremum. */
  Rat at_infinity() const;
  /** Value immediately to the right of t: max{u_i : delta_i <= t}. */
  Rat just_after(const Rat& t) const;

private:
  std::vector<Gen> gens_;
};

bool d_leq(const StepFn& f, const StepFn& g);
StepFn d_tensor(const StepFn& f, const StepFn& g);
/** Residual: largest h with d_tensor(f, h) <= g. */
StepFn d_hom(const StepFn& f, const StepFn& g);
StepFn d_join(std::span<const StepFn> fs);
StepFn d_meet(std::span<const StepFn> fs);
StepFn d_join2(const StepFn& f, const StepFn& g);
StepFn d_meet2(const StepFn& f, const StepFn& g);
/** Largest h with d_meet2(f, h) <= g. */
StepFn d_heyting(const StepFn& f, const StepFn& g);
/** Every jump of f stays strictly under g at its own breakpoint. */
bool d_totally_below(const StepFn& f, const StepFn& g);
/** True when f(oo) = 1. */
bool is_finite_distribution(const StepFn& f);

}  // namespace qcat
