#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcat/quantale.hpp"

namespace qcat {

using Matrix = std::vector<std::vector<QValue>>;

/** Finite category enriched in one quantale instance; hom is row-major with
 *  the first argument selecting the row. */
struct VCategory {
  QuantaleId q = QuantaleId::bool2;
  std::vector<std::string> objects;
  Matrix hom;

  size_t size() const { return objects.size(); }
  const QValue& a(size_t x, size_t y) const { return hom[x][y]; }
  std::optional<size_t> index_of(const std::string& name) const;
  bool operator==(const VCategory&) const = default;
};

/** Shape and per-entry quantale checks; throws StructuralError on failure. */
void check_shape(const VCategory& c);

struct LawViolation {
  std::string law;
  std::vector<std::string> at;  // object names involved
  std::string lhs;
  std::string rhs;
};

struct CategoryCheck {
  bool ok = false;
  std::optional<LawViolation> violation;
};

/** Reflexivity and transitivity; first violated instance is reported. */
CategoryCheck validate_category(const VCategory& c);

/**
 * Least category structure above the given entry matrix: iterates
 * r -> r v (r;r) v diag(k) by repeated squaring, capped at |X|^2 rounds with a
 * certified stability check. Throws ClosureDivergence when the cap is hit.
 */
VCategory path_closure(const VCategory& c, std::optional<size_t> cap = std::nullopt);

VCategory dual(const VCategory& c);
bool is_symmetric(const VCategory& c);
bool is_separated(const VCategory& c);
/** delta only: every hom entry reaches 1 at infinity. */
bool is_finitary(const VCategory& c);
/** bool2 category of the induced preorder k <= a(x,y). */
VCategory underlying_order(const VCategory& c);
/** Cartesian product: hom = meet of components. */
VCategory product(const VCategory& x, const VCategory& y);
/** Tensor product: hom = tensor of components. */
VCategory tensor_product(const VCategory& x, const VCategory& y);
/** One object with hom = k. */
VCategory unit_category(QuantaleId q);

struct VFunctor {
  VCategory source;
  VCategory target;
  std::vector<size_t> map;  // object index in target per source object
};

struct FunctorCheck {
  bool ok = false;
  std::vector<LawViolation> violations;  // one per failing pair
};

FunctorCheck check_functor(const VFunctor& f);
bool is_fully_faithful(const VFunctor& f);
VFunctor compose_functors(const VFunctor& g, const VFunctor& f);
/** Pointwise distance: meet over x of b(f(x), g(x)). */
QValue functor_distance(const VFunctor& f, const VFunctor& g);
/** Exponential distance: meet over pairs of heyting(a(x1,x2), c(f(x1), g(x2))). */
QValue exp_distance(const VFunctor& f, const VFunctor& g);

/** x lies in the closure of M iff k <= join over y in M of a(x,y) tensor a(y,x). */
std::vector<size_t> closure(const VCategory& c, const std::vector<size_t>& subset);

/** delta only: the basic neighborhood of x at radius delta, level u. */
std::vector<size_t> basic_open(const VCategory& c, size_t x, const Rat& radius,
                               const Rat& level);

/** Eventually periodic sequence: preamble then cycle repeated forever. */
struct EPSequence {
  VCategory base;
  std::vector<size_t> preamble;
  std::vector<size_t> cycle;  // nonempty
};

void check_sequence(const EPSequence& s);
/** Distinct objects appearing in the cycle, ascending. */
std::vector<size_t> cycle_support(const EPSequence& s);

/**
 * True when x lies in the closure of every set of values the sequence visits
 * infinitely often, i.e. of every nonempty subset of the cycle support.
 */
bool sequence_converges_topologically(const EPSequence& s, size_t x);

}  // namespace qcat
