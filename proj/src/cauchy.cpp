#include "qcat/cauchy.hpp"

#include <algorithm>

namespace qcat {

namespace {

void check_values(const VCategory& base, const std::vector<QValue>& values,
                  const char* what) {
  check_shape(base);
  if (values.size() != base.size())
    throw StructuralError(std::string(what) + " needs one value per object");
  for (const QValue& v : values)
    if (v.id() != base.q)
      throw QuantaleMismatch(std::string(what) + " entry from " +
                             quantale_name(v.id()) + " over a " +
                             quantale_name(base.q) + " base");
}

}  // namespace

ModuleCheck validate_presheaf(const Presheaf& p) {
  check_values(p.base, p.values, "presheaf");
  return validate_module(to_module(p));
}

ModuleCheck validate_copresheaf(const Copresheaf& p) {
  check_values(p.base, p.values, "copresheaf");
  return validate_module(to_module(p));
}

VModule to_module(const Presheaf& p) {
  check_values(p.base, p.values, "presheaf");
  VModule m{p.base, unit_category(p.base.q), {}};
  m.phi.assign(p.base.size(), std::vector<QValue>(1, bottom_of(p.base.q)));
  for (size_t x = 0; x < p.base.size(); ++x) m.phi[x][0] = p.values[x];
  return m;
}

VModule to_module(const Copresheaf& p) {
  check_values(p.base, p.values, "copresheaf");
  VModule m{unit_category(p.base.q), p.base, {}};
  m.phi.assign(1, p.values);
  return m;
}

Presheaf yoneda(const VCategory& c, size_t x) {
  check_shape(c);
  if (x >= c.size()) throw StructuralError("yoneda object out of range");
  Presheaf p{c, {}};
  p.values.reserve(c.size());
  for (size_t y = 0; y < c.size(); ++y) p.values.push_back(c.a(y, x));
  return p;
}

QValue presheaf_dist(const Presheaf& psi, const Presheaf& psi2) {
  if (!(psi.base == psi2.base))
    throw StructuralError("presheaf distance needs a shared base");
  std::vector<QValue> terms;
  terms.reserve(psi.values.size());
  for (size_t x = 0; x < psi.values.size(); ++x)
    terms.push_back(hom(psi.values[x], psi2.values[x]));
  return meet(psi.base.q, terms);
}

Copresheaf candidate_left_adjoint(const Presheaf& psi) {
  check_values(psi.base, psi.values, "presheaf");
  const VCategory& X = psi.base;
  Copresheaf phi{X, {}};
  phi.values.reserve(X.size());
  for (size_t x = 0; x < X.size(); ++x) {
    std::vector<QValue> terms;
    terms.reserve(X.size());
    for (size_t y = 0; y < X.size(); ++y)
      terms.push_back(hom(psi.values[y], X.a(y, x)));
    phi.values.push_back(meet(X.q, terms));
  }
  return phi;
}

AdjointPresheafResult is_right_adjoint(const Presheaf& psi) {
  AdjointPresheafResult out;
  out.candidate = candidate_left_adjoint(psi);
  AdjointCheck ac = check_adjoint(to_module(out.candidate), to_module(psi));
  out.adjoint = ac.ok;
  if (!ac.ok) {
    out.refutation = ac.witness;
    out.refutation->law += " (fails even for the maximal candidate left adjoint)";
  }
  return out;
}

std::optional<size_t> is_representable(const Presheaf& psi) {
  check_values(psi.base, psi.values, "presheaf");
  for (size_t x = 0; x < psi.base.size(); ++x)
    if (yoneda(psi.base, x).values == psi.values) return x;
  return std::nullopt;
}

CompletenessReport is_cauchy_complete_bool2(const VCategory& c) {
  check_shape(c);
  if (c.q != QuantaleId::bool2)
    throw StructuralError(
        "exhaustive completeness check is bool2 only; use the certificate route");
  CompletenessReport rep;
  rep.complete = true;
  size_t n = c.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    Presheaf p{c, {}};
    for (size_t i = 0; i < n; ++i)
      p.values.push_back(QValue::bool2((mask >> i) & 1));
    if (!validate_presheaf(p).ok) continue;
    ++rep.presheaf_count;
    if (is_right_adjoint(p).adjoint && !is_representable(p)) {
      rep.complete = false;
      rep.witnesses.push_back(p);
    }
  }
  return rep;
}

QValue cauchy_measure(const EPSequence& s) {
  check_sequence(s);
  std::vector<size_t> support = cycle_support(s);
  std::vector<QValue> terms;
  terms.reserve(support.size() * support.size());
  for (size_t cidx : support)
    for (size_t didx : support) terms.push_back(s.base.a(cidx, didx));
  return meet(s.base.q, terms);
}

bool is_cauchy(const EPSequence& s) {
  return leq(unit_of(s.base.q), cauchy_measure(s));
}

std::pair<Copresheaf, Presheaf> sequence_modules(const EPSequence& s) {
  check_sequence(s);
  const VCategory& X = s.base;
  std::vector<size_t> support = cycle_support(s);
  Copresheaf phi{X, {}};
  Presheaf psi{X, {}};
  for (size_t x = 0; x < X.size(); ++x) {
    std::vector<QValue> from_c, to_c;
    from_c.reserve(support.size());
    to_c.reserve(support.size());
    for (size_t cidx : support) {
      from_c.push_back(X.a(cidx, x));
      to_c.push_back(X.a(x, cidx));
    }
    phi.values.push_back(meet(X.q, from_c));
    psi.values.push_back(meet(X.q, to_c));
  }
  return {phi, psi};
}

ConvergenceResult converges_module(const EPSequence& s, size_t x) {
  check_sequence(s);
  if (x >= s.base.size()) throw StructuralError("limit index out of range");
  auto [phi, psi] = sequence_modules(s);
  ConvergenceResult out;
  out.cauchy = is_cauchy(s);
  // graphs of the point x: lower(x,-) = a(x,-), upper(-,x) = a(-,x)
  bool phi_ok = true, psi_ok = true;
  for (size_t y = 0; y < s.base.size(); ++y) {
    if (!(phi.values[y] == s.base.a(x, y))) phi_ok = false;
    if (!(psi.values[y] == s.base.a(y, x))) psi_ok = false;
  }
  out.converges = phi_ok && psi_ok;
  return out;
}

CompletionCertificate completion_certificate(const VCategory& c,
                                             const std::vector<Presheaf>& candidates) {
  check_shape(c);
  CompletionCertificate cert;
  std::vector<Presheaf> objects;
  std::vector<std::string> labels;
  for (size_t x = 0; x < c.size(); ++x) {
    objects.push_back(yoneda(c, x));
    labels.push_back("y(" + c.objects[x] + ")");
    cert.yoneda_objects.push_back(x);
  }
  size_t ci = 0;
  for (const Presheaf& p : candidates) {
    if (!(p.base == c))
      throw StructuralError("certificate candidate over a different base");
    CandidateVerdict v;
    v.valid_presheaf = validate_presheaf(p).ok;
    if (v.valid_presheaf) {
      v.adjoint = is_right_adjoint(p).adjoint;
      v.representable = is_representable(p);
      if (v.adjoint && !v.representable) cert.incomplete_witness = true;
      if (v.adjoint) {
        bool dup = false;
        for (const Presheaf& o : objects)
          if (o.values == p.values) dup = true;
        if (!dup) {
          objects.push_back(p);
          labels.push_back("c" + std::to_string(ci));
        }
      }
    }
    cert.candidates.push_back(v);
    ++ci;
  }
  VCategory d;
  d.q = c.q;
  d.objects = labels;
  d.hom.assign(objects.size(), std::vector<QValue>(objects.size(), bottom_of(c.q)));
  for (size_t i = 0; i < objects.size(); ++i)
    for (size_t j = 0; j < objects.size(); ++j)
      d.hom[i][j] = presheaf_dist(objects[i], objects[j]);
  cert.distances = d;
  cert.labels = labels;
  std::vector<size_t> cl = closure(d, cert.yoneda_objects);
  cert.yoneda_closed_dense = cl.size() == objects.size();
  cert.symmetric = is_symmetric(d);
  if (c.q == QuantaleId::delta) cert.finitary = is_finitary(d);
  return cert;
}

}  // namespace qcat
