#pragma once

#include "qcat/category.hpp"

namespace qcat {

/** Module (bimodule/profunctor) phi: X -|-> Y, entries phi[x][y]. */
struct VModule {
  VCategory source;  // X
  VCategory target;  // Y
  Matrix phi;

  const QValue& at(size_t x, size_t y) const { return phi[x][y]; }
  bool operator==(const VModule&) const = default;
};

void check_module_shape(const VModule& m);

struct ModuleCheck {
  bool ok = false;
  std::optional<LawViolation> violation;
};

/** Both action laws: a(x',x) ; phi(x,y) <= phi(x',y) and
 *  phi(x,y) ; b(y,y') <= phi(x,y'). */
ModuleCheck validate_module(const VModule& m);

/** Entrywise order between parallel modules. */
bool module_leq(const VModule& m1, const VModule& m2);

/** Identity module of X: the hom matrix itself. */
VModule identity_module(const VCategory& x);

/** compose(psi: Y -|-> Z, phi: X -|-> Y): (x,z) -> join_y phi(x,y) ; psi(y,z). */
VModule compose(const VModule& psi, const VModule& phi);

/** extension(psi: X -|-> Z, phi: X -|-> Y) -> Y -|-> Z, the largest chi with
 *  compose(chi, phi) <= psi: (y,z) -> meet_x hom(phi(x,y), psi(x,z)). */
VModule extension(const VModule& psi, const VModule& phi);

/** lifting(phi: X -|-> Y, psi: Z -|-> Y) -> Z -|-> X, the largest chi with
 *  compose(phi, chi) <= psi: (z,x) -> meet_y hom(phi(x,y), psi(z,y)). */
VModule lifting(const VModule& phi, const VModule& psi);

/** Graph modules of a functor: lower(x,y) = b(f(x),y), upper(y,x) = b(y,f(x)). */
std::pair<VModule, VModule> functor_graph(const VFunctor& f);

struct AdjointCheck {
  bool ok = false;
  std::optional<LawViolation> witness;
};

/** phi: X -|-> Y left adjoint to psi: Y -|-> X:
 *  a <= compose(psi, phi) and compose(phi, psi) <= b. */
AdjointCheck check_adjoint(const VModule& phi, const VModule& psi);

bool is_fully_faithful_mod(const VFunctor& f);
bool is_fully_dense_mod(const VFunctor& f);

enum class SqueezeVerdict { equal, not_applicable, refuted };

struct SqueezeResult {
  SqueezeVerdict verdict = SqueezeVerdict::not_applicable;
  std::string detail;
};

/** Two adjunctions phi -| psi and phi2 -| psi2 with phi <= phi2 and
 *  psi <= psi2 force phi = phi2 and psi = psi2; a refutation is a bug. */
SqueezeResult check_dominated_adjoints_equal(const VModule& phi,
                                             const VModule& phi2,
                                             const VModule& psi,
                                             const VModule& psi2);

}  // namespace qcat
