#pragma once

#include <array>

#include "qcat/category.hpp"

namespace qcat {

enum class ExpStatus { counterexample, passed_on_family, passed_exhaustively };

struct ExpWitness {
  size_t x0 = 0;
  size_t x2 = 0;
  QValue v0;
  QValue v1;
  std::string lhs;  // rendered join side
  std::string rhs;  // rendered meet side
};

struct ExpVerdict {
  ExpStatus status = ExpStatus::passed_on_family;
  std::optional<ExpWitness> witness;
  size_t family_size = 0;
  std::string note;
};

/**
 * Candidate value family for the exponentiability test: hom entries plus
 * unit/bottom/top, per-instance seed values (cost: truncated differences of
 * entries and their halves; delta: single jumps built from breakpoint
 * sums/differences and value products/quotients), closed under tensor, meet
 * and hom to the given depth. bool2 ignores the depth and returns all of 2.
 */
std::vector<QValue> exponentiability_family(const VCategory& c, unsigned depth);

/**
 * Tests, over all object pairs and all family value pairs (v0, v1), that
 *   join_x (a(x0,x) meet v0) tensor (a(x,x2) meet v1) >= a(x0,x2) meet (v0 tensor v1).
 * Counterexamples are re-evaluated before emission. Exhaustive for bool2.
 */
ExpVerdict check_exponentiable(const VCategory& c, unsigned depth);

/**
 * cost only: for every pair at finite distance and every critical split
 * u0 + u1 = a(x0,x2) (crossings of the piecewise-linear midpoint defect,
 * including half-sums), decides whether approximate midpoints exist:
 * min_x max(a(x0,x) - u0, a(x,x2) - u1) <= 0. A failing split is returned
 * with the corresponding two-variable witness cross-checked.
 */
ExpVerdict check_exponentiable_metric(const VCategory& c);

struct InterpolationWitness {
  QValue u_prime;
  QValue v_prime;
  bool operator==(const InterpolationWitness&) const = default;
};

struct InterpolationResult {
  bool ok = false;
  /** u'_i <= u, v'_i <= v, and join_i (u'_i tensor v'_i) = meet(w, u tensor v).
   *  A single witness when the instance admits one (chains; delta jumps). */
  std::vector<InterpolationWitness> witnesses;
  QValue target;  // meet(w, tensor(u, v)), for reference
  std::string note;
};

InterpolationResult quantale_interpolation(const QValue& u, const QValue& v,
                                           const QValue& w);

struct DeltaExpReport {
  size_t total = 0;
  std::array<size_t, 4> case_counts{0, 0, 0, 0};
  bool all_ok = true;
  std::string failure;
};

/** Runs interpolation over single-jump triples and verifies each witness
 *  product against an independently computed meet; counts the four
 *  shape/height cases. */
DeltaExpReport delta_exponentiability_suite(
    std::span<const std::array<QValue, 3>> triples);

}  // namespace qcat
