#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcat/qvalue.hpp"

namespace qcat {

bool leq(const QValue& u, const QValue& v);
QValue tensor(const QValue& u, const QValue& v);
/** Residual: largest w with tensor(u, w) <= v. */
QValue hom(const QValue& u, const QValue& v);
/** Relative pseudocomplement: largest w with meet(u, w) <= v. */
QValue heyting(const QValue& u, const QValue& v);
QValue join(QuantaleId q, std::span<const QValue> vs);
QValue meet(QuantaleId q, std::span<const QValue> vs);
QValue join2(const QValue& u, const QValue& v);
QValue meet2(const QValue& u, const QValue& v);
QValue unit_of(QuantaleId q);
QValue bottom_of(QuantaleId q);
QValue top_of(QuantaleId q);
/** Holds in all four instances; operations that rely on it say so in reports. */
bool unit_is_top(QuantaleId q);
bool totally_below(const QValue& u, const QValue& v);
/** Increasing family u_n totally below the unit whose sup is the unit. */
QValue approximating_unit(QuantaleId q, unsigned n);

/** One-line exact rendering, e.g. "3/2", "inf", "f(t)=1 for t>0". */
std::string value_to_string(const QValue& v);

/** Deterministic sample set: the instance staples (bottom, unit, a few
 *  landmarks) padded with seeded pseudo-random values, sorted and deduped.
 *  bool2 always yields its two values. */
std::vector<QValue> sample_values(QuantaleId q, size_t count,
                                  uint64_t seed = 20260817);

struct LawCheck {
  std::string law;
  bool passed = false;
  std::string counterexample;  // empty when passed
};

struct LawReport {
  QuantaleId q;
  std::vector<LawCheck> checks;
  uint64_t pair_count = 0;
  uint64_t triple_count = 0;
  bool exhaustive_triples = false;
  bool all_passed() const;
};

/**
 * Checks associativity, commutativity and unit of tensor, distributivity of
 * tensor over finite joins, the residuation contract for hom, the frame law
 * and the heyting contract, plus lattice sanity for join/meet. Pairwise laws
 * run over all sample pairs; three-variable laws run exhaustively when
 * |samples|^3 <= max_triples and over a seeded deterministic subsample
 * otherwise. Failures carry a rendered counterexample with both sides.
 */
LawReport quantale_law_suite(QuantaleId q, std::span<const QValue> samples,
                             uint64_t max_triples = 60000);

}  // namespace qcat
