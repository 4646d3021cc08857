#include "qcat/module.hpp"

namespace qcat {

void check_module_shape(const VModule& m) {
  check_shape(m.source);
  check_shape(m.target);
  if (m.source.q != m.target.q)
    throw QuantaleMismatch("module endpoints over mixed quantales");
  if (m.phi.size() != m.source.size())
    throw StructuralError("phi must have one row per source object");
  for (const auto& row : m.phi) {
    if (row.size() != m.target.size())
      throw StructuralError("phi must have one column per target object");
    for (const QValue& v : row)
      if (v.id() != m.source.q)
        throw QuantaleMismatch("phi entry from " + quantale_name(v.id()) +
                               " in a " + quantale_name(m.source.q) + " module");
  }
}

ModuleCheck validate_module(const VModule& m) {
  check_module_shape(m);
  const VCategory& X = m.source;
  const VCategory& Y = m.target;
  for (size_t x2 = 0; x2 < X.size(); ++x2)
    for (size_t x = 0; x < X.size(); ++x)
      for (size_t y = 0; y < Y.size(); ++y) {
        QValue lhs = tensor(X.a(x2, x), m.at(x, y));
        if (!leq(lhs, m.at(x2, y)))
          return {false,
                  LawViolation{"left action",
                               {X.objects[x2], X.objects[x], Y.objects[y]},
                               value_to_string(lhs),
                               value_to_string(m.at(x2, y))}};
      }
  for (size_t x = 0; x < X.size(); ++x)
    for (size_t y = 0; y < Y.size(); ++y)
      for (size_t y2 = 0; y2 < Y.size(); ++y2) {
        QValue lhs = tensor(m.at(x, y), Y.a(y, y2));
        if (!leq(lhs, m.at(x, y2)))
          return {false,
                  LawViolation{"right action",
                               {X.objects[x], Y.objects[y], Y.objects[y2]},
                               value_to_string(lhs),
                               value_to_string(m.at(x, y2))}};
      }
  return {true, std::nullopt};
}

bool module_leq(const VModule& m1, const VModule& m2) {
  if (!(m1.source == m2.source) || !(m1.target == m2.target))
    throw StructuralError("module order needs parallel modules");
  for (size_t x = 0; x < m1.source.size(); ++x)
    for (size_t y = 0; y < m1.target.size(); ++y)
      if (!leq(m1.at(x, y), m2.at(x, y))) return false;
  return true;
}

VModule identity_module(const VCategory& x) {
  check_shape(x);
  return VModule{x, x, x.hom};
}

VModule compose(const VModule& psi, const VModule& phi) {
  check_module_shape(psi);
  check_module_shape(phi);
  if (!(phi.target == psi.source))
    throw StructuralError("compose needs phi: X-|->Y and psi: Y-|->Z");
  const size_t nx = phi.source.size();
  const size_t ny = phi.target.size();
  const size_t nz = psi.target.size();
  VModule out{phi.source, psi.target, {}};
  out.phi.assign(nx, std::vector<QValue>(nz, bottom_of(phi.source.q)));
  for (size_t x = 0; x < nx; ++x)
    for (size_t z = 0; z < nz; ++z) {
      std::vector<QValue> terms;
      terms.reserve(ny);
      for (size_t y = 0; y < ny; ++y)
        terms.push_back(tensor(phi.at(x, y), psi.at(y, z)));
      out.phi[x][z] = join(phi.source.q, terms);
    }
  return out;
}

VModule extension(const VModule& psi, const VModule& phi) {
  check_module_shape(psi);
  check_module_shape(phi);
  if (!(psi.source == phi.source))
    throw StructuralError("extension needs psi: X-|->Z and phi: X-|->Y");
  const size_t nx = phi.source.size();
  const size_t ny = phi.target.size();
  const size_t nz = psi.target.size();
  VModule out{phi.target, psi.target, {}};
  out.phi.assign(ny, std::vector<QValue>(nz, top_of(phi.source.q)));
  for (size_t y = 0; y < ny; ++y)
    for (size_t z = 0; z < nz; ++z) {
      std::vector<QValue> terms;
      terms.reserve(nx);
      for (size_t x = 0; x < nx; ++x)
        terms.push_back(hom(phi.at(x, y), psi.at(x, z)));
      out.phi[y][z] = meet(phi.source.q, terms);
    }
  return out;
}

VModule lifting(const VModule& phi, const VModule& psi) {
  check_module_shape(phi);
  check_module_shape(psi);
  if (!(phi.target == psi.target))
    throw StructuralError("lifting needs phi: X-|->Y and psi: Z-|->Y");
  const size_t nx = phi.source.size();
  const size_t ny = phi.target.size();
  const size_t nz = psi.source.size();
  VModule out{psi.source, phi.source, {}};
  out.phi.assign(nz, std::vector<QValue>(nx, top_of(phi.source.q)));
  for (size_t z = 0; z < nz; ++z)
    for (size_t x = 0; x < nx; ++x) {
      std::vector<QValue> terms;
      terms.reserve(ny);
      for (size_t y = 0; y < ny; ++y)
        terms.push_back(hom(phi.at(x, y), psi.at(z, y)));
      out.phi[z][x] = meet(phi.source.q, terms);
    }
  return out;
}

std::pair<VModule, VModule> functor_graph(const VFunctor& f) {
  FunctorCheck fc = check_functor(f);
  if (!fc.ok) throw StructuralError("functor_graph needs a functor; law fails");
  VModule lower{f.source, f.target, {}};
  VModule upper{f.target, f.source, {}};
  lower.phi.assign(f.source.size(),
                   std::vector<QValue>(f.target.size(), bottom_of(f.source.q)));
  upper.phi.assign(f.target.size(),
                   std::vector<QValue>(f.source.size(), bottom_of(f.source.q)));
  for (size_t x = 0; x < f.source.size(); ++x)
    for (size_t y = 0; y < f.target.size(); ++y) {
      lower.phi[x][y] = f.target.a(f.map[x], y);
      upper.phi[y][x] = f.target.a(y, f.map[x]);
    }
  return {lower, upper};
}

AdjointCheck check_adjoint(const VModule& phi, const VModule& psi) {
  check_module_shape(phi);
  check_module_shape(psi);
  if (!(phi.source == psi.target) || !(phi.target == psi.source))
    throw StructuralError("adjoint check needs phi: X-|->Y and psi: Y-|->X");
  const VCategory& X = phi.source;
  const VCategory& Y = phi.target;
  VModule unit = compose(psi, phi);   // X -|-> X
  VModule counit = compose(phi, psi); // Y -|-> Y
  for (size_t x = 0; x < X.size(); ++x)
    for (size_t x2 = 0; x2 < X.size(); ++x2)
      if (!leq(X.a(x, x2), unit.at(x, x2)))
        return {false,
                LawViolation{"unit inequality",
                             {X.objects[x], X.objects[x2]},
                             value_to_string(X.a(x, x2)),
                             value_to_string(unit.at(x, x2))}};
  for (size_t y = 0; y < Y.size(); ++y)
    for (size_t y2 = 0; y2 < Y.size(); ++y2)
      if (!leq(counit.at(y, y2), Y.a(y, y2)))
        return {false,
                LawViolation{"counit inequality",
                             {Y.objects[y], Y.objects[y2]},
                             value_to_string(counit.at(y, y2)),
                             value_to_string(Y.a(y, y2))}};
  return {true, std::nullopt};
}

bool is_fully_faithful_mod(const VFunctor& f) {
  auto [lower, upper] = functor_graph(f);
  VModule round = compose(upper, lower);  // X -|-> X
  return round.phi == f.source.hom;
}

bool is_fully_dense_mod(const VFunctor& f) {
  auto [lower, upper] = functor_graph(f);
  VModule round = compose(lower, upper);  // Y -|-> Y
  return round.phi == f.target.hom;
}

SqueezeResult check_dominated_adjoints_equal(const VModule& phi,
                                             const VModule& phi2,
                                             const VModule& psi,
                                             const VModule& psi2) {
  if (!check_adjoint(phi, psi).ok || !check_adjoint(phi2, psi2).ok)
    return {SqueezeVerdict::not_applicable, "inputs are not adjoint pairs"};
  if (!module_leq(phi, phi2) || !module_leq(psi, psi2))
    return {SqueezeVerdict::not_applicable, "inputs are not ordered"};
  if (phi.phi == phi2.phi && psi.phi == psi2.phi)
    return {SqueezeVerdict::equal, ""};
  return {SqueezeVerdict::refuted,
          "ordered adjoint pairs differ; this indicates a library bug"};
}

}  // namespace qcat
