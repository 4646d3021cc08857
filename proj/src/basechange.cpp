#include "qcat/basechange.hpp"

#include <cmath>

namespace qcat {

const std::vector<QMorphism>& morphism_table() {
  static const std::vector<QMorphism> table = {
      {"I", QuantaleId::bool2, QuantaleId::cost, MorphKind::strict, false},
      {"I", QuantaleId::bool2, QuantaleId::unit, MorphKind::strict, false},
      {"I", QuantaleId::bool2, QuantaleId::delta, MorphKind::strict, false},
      {"O", QuantaleId::cost, QuantaleId::bool2, MorphKind::strict, false},
      {"O", QuantaleId::unit, QuantaleId::bool2, MorphKind::strict, false},
      {"O", QuantaleId::delta, QuantaleId::bool2, MorphKind::strict, false},
      {"P", QuantaleId::cost, QuantaleId::bool2, MorphKind::lax, false},
      {"P", QuantaleId::unit, QuantaleId::bool2, MorphKind::lax, false},
      {"P", QuantaleId::delta, QuantaleId::bool2, MorphKind::lax, false},
      {"I_inf", QuantaleId::cost, QuantaleId::delta, MorphKind::strict, false},
      {"O_inf", QuantaleId::delta, QuantaleId::cost, MorphKind::strict, false},
      {"P_inf", QuantaleId::delta, QuantaleId::cost, MorphKind::lax, false},
      {"E", QuantaleId::cost, QuantaleId::unit, MorphKind::strict, true},
      {"L", QuantaleId::unit, QuantaleId::cost, MorphKind::strict, true},
  };
  return table;
}

std::optional<QMorphism> morphism_by_name(const std::string& name,
                                          std::optional<QuantaleId> to) {
  std::optional<QMorphism> found;
  for (const QMorphism& m : morphism_table()) {
    if (m.name != name) continue;
    if (to && m.target != *to) continue;
    if (found) return std::nullopt;  // ambiguous without `to`
    found = m;
  }
  return found;
}

namespace {

Rat approx_rat(double d) {
  const long long den = 1000000000000LL;
  double scaled = d * static_cast<double>(den);
  long long num = static_cast<long long>(std::llround(scaled));
  return Rat(num, den);
}

QValue apply_value_impl(const QMorphism& m, const QValue& v) {
  if (m.name == "I")
    return v.as_bool() ? unit_of(m.target) : bottom_of(m.target);
  if (m.name == "O")
    return QValue::bool2(!(v == bottom_of(m.source)));
  if (m.name == "P")
    return QValue::bool2(leq(unit_of(m.source), v));
  if (m.name == "I_inf") {
    const CostVal& c = v.as_cost();
    if (c.infinite) return QValue::delta(StepFn::bottom());
    return QValue::delta(StepFn::generator(c.q, Rat(1)));
  }
  if (m.name == "O_inf") {
    const StepFn& f = v.as_delta();
    if (f.is_bottom()) return QValue::cost_inf();
    return QValue::cost(f.generators().front().delta);
  }
  if (m.name == "P_inf") {
    const StepFn& f = v.as_delta();
    if (f.at_infinity() == 1) return QValue::cost(f.generators().back().delta);
    return QValue::cost_inf();
  }
  if (m.name == "E") {
    const CostVal& c = v.as_cost();
    if (c.infinite) return QValue::unit(Rat(0));
    double x = static_cast<double>(c.q);
    Rat r = approx_rat(std::exp(-x));
    if (r < 0) r = 0;
    if (r > 1) r = 1;
    return QValue::unit(r);
  }
  if (m.name == "L") {
    const Rat& u = v.as_unit().u;
    if (u == 0) return QValue::cost_inf();
    double x = -std::log(static_cast<double>(u));
    Rat r = approx_rat(x);
    if (r < 0) r = 0;
    return QValue::cost(r);
  }
  throw StructuralError("unknown morphism: " + m.name);
}

}  // namespace

QValue apply_value(const QMorphism& m, const QValue& v, bool allow_inexact) {
  if (m.inexact && !allow_inexact)
    throw StructuralError("morphism " + m.name +
                          " is inexact; pass the inexact flag to use it");
  if (v.id() != m.source)
    throw QuantaleMismatch("morphism " + m.name + " expects " +
                           quantale_name(m.source) + " values");
  return apply_value_impl(m, v);
}

VCategory apply_category(const QMorphism& m, const VCategory& c, bool allow_inexact) {
  check_shape(c);
  VCategory out = c;
  out.q = m.target;
  for (auto& row : out.hom)
    for (QValue& v : row) v = apply_value(m, v, allow_inexact);
  if (!m.inexact) {
    CategoryCheck cc = validate_category(out);
    if (!cc.ok)
      throw std::logic_error("image of a category under " + m.name +
                             " failed validation; this is a bug");
  }
  return out;
}

VModule apply_module(const QMorphism& m, const VModule& mod, bool allow_inexact) {
  check_module_shape(mod);
  VModule out{apply_category(m, mod.source, allow_inexact),
              apply_category(m, mod.target, allow_inexact), mod.phi};
  for (auto& row : out.phi)
    for (QValue& v : row) v = apply_value(m, v, allow_inexact);
  if (!m.inexact) {
    ModuleCheck mc = validate_module(out);
    if (!mc.ok)
      throw std::logic_error("image of a module under " + m.name +
                             " failed validation; this is a bug");
  }
  return out;
}

bool MorphismLawReport::as_expected() const {
  for (const MorphismLawCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

std::vector<QValue> default_samples(QuantaleId q) {
  switch (q) {
    case QuantaleId::bool2:
      return {QValue::bool2(false), QValue::bool2(true)};
    case QuantaleId::cost:
      return {QValue::cost(Rat(0)),    QValue::cost(Rat(1)),
              QValue::cost(Rat(1, 2)), QValue::cost(Rat(2)),
              QValue::cost(Rat(3, 2)), QValue::cost_inf()};
    case QuantaleId::unit:
      return {QValue::unit(Rat(0)), QValue::unit(Rat(1, 4)),
              QValue::unit(Rat(1, 2)), QValue::unit(Rat(1))};
    case QuantaleId::delta:
      return {QValue::delta(StepFn::bottom()),
              QValue::delta(StepFn::epsilon()),
              QValue::delta(StepFn::generator(Rat(1), Rat(1, 2))),
              QValue::delta(StepFn::generator(Rat(1, 2), Rat(1, 4))),
              QValue::delta(StepFn::generator(Rat(2), Rat(1)))};
  }
  return {};
}

struct AdjPair {
  const char* left;
  const char* right;
  QuantaleId v;  // source of left
  QuantaleId w;  // target of left
};

QMorphism morphism_exact(const std::string& name, QuantaleId source,
                         QuantaleId target) {
  for (const QMorphism& m : morphism_table())
    if (m.name == name && m.source == source && m.target == target) return m;
  throw std::logic_error("morphism table lookup failed for " + name);
}

std::vector<AdjPair> adjoint_pairs() {
  std::vector<AdjPair> ps;
  for (QuantaleId q : {QuantaleId::cost, QuantaleId::unit, QuantaleId::delta}) {
    ps.push_back({"O", "I", q, QuantaleId::bool2});
    ps.push_back({"I", "P", QuantaleId::bool2, q});
  }
  ps.push_back({"O_inf", "I_inf", QuantaleId::delta, QuantaleId::cost});
  ps.push_back({"I_inf", "P_inf", QuantaleId::cost, QuantaleId::delta});
  return ps;
}

/** Witness family with non-preserved supremum for the lax kernel maps. */
struct InfinitaryWitness {
  std::string family;
  QValue sup;
  QValue (*member_fn)(unsigned);
  QValue member(unsigned n) const { return member_fn(n); }
};

InfinitaryWitness infinitary_witness(const QMorphism& m) {
  if (m.name == "P" && m.source == QuantaleId::cost)
    return {"u_n = 1/n", QValue::cost(Rat(0)),
            [](unsigned n) { return QValue::cost(Rat(1, n)); }};
  if (m.name == "P" && m.source == QuantaleId::unit)
    return {"u_n = 1 - 1/n", QValue::unit(Rat(1)),
            [](unsigned n) { return QValue::unit(Rat(1) - Rat(1, n)); }};
  if (m.name == "P" && m.source == QuantaleId::delta)
    return {"u_n = step(1/n -> 1-1/n)", QValue::delta(StepFn::epsilon()),
            [](unsigned n) {
              return QValue::delta(StepFn::generator(Rat(1, n), Rat(1) - Rat(1, n)));
            }};
  if (m.name == "P_inf")
    return {"u_n = step(1 -> 1-1/n)",
            QValue::delta(StepFn::generator(Rat(1), Rat(1))), [](unsigned n) {
              return QValue::delta(StepFn::generator(Rat(1), Rat(1) - Rat(1, n)));
            }};
  throw StructuralError("no infinitary witness registered for " + m.name);
}

}  // namespace

MorphismLawReport morphism_law_suite(const QMorphism& m,
                                     std::span<const QValue> samples) {
  MorphismLawReport rep;
  rep.morphism = m;
  if (m.inexact) {
    rep.checks.push_back({"exact laws", true, false,
                          "inexact utility; excluded from exact reasoning"});
    return rep;
  }
  std::vector<QValue> src(samples.begin(), samples.end());
  for (const QValue& v : default_samples(m.source)) {
    bool seen = false;
    for (const QValue& u : src) seen = seen || u == v;
    if (!seen) src.push_back(v);
  }
  for (const QValue& v : src)
    if (v.id() != m.source)
      throw QuantaleMismatch("law suite samples must come from " +
                             quantale_name(m.source));
  auto F = [&](const QValue& v) { return apply_value_impl(m, v); };

  MorphismLawCheck mono{"monotone", true, false, ""};
  for (const QValue& u : src)
    for (const QValue& v : src)
      if (leq(u, v) && !leq(F(u), F(v))) {
        mono.passed = false;
        mono.detail = "u=" + value_to_string(u) + "; v=" + value_to_string(v);
      }
  rep.checks.push_back(mono);

  bool strict = m.kind == MorphKind::strict;
  MorphismLawCheck unit_c{strict ? "unit preserved" : "unit (lax)", true, false, ""};
  {
    QValue fu = F(unit_of(m.source));
    QValue l = unit_of(m.target);
    bool ok = strict ? fu == l : leq(l, fu);
    if (!ok) {
      unit_c.passed = false;
      unit_c.detail = "F(k)=" + value_to_string(fu);
    } else if (!strict && fu == l) {
      unit_c.detail = "equality observed";
    }
  }
  rep.checks.push_back(unit_c);

  MorphismLawCheck bot_c{"bottom preserved", true, false, ""};
  if (strict) {
    QValue fb = F(bottom_of(m.source));
    if (!(fb == bottom_of(m.target))) {
      bot_c.passed = false;
      bot_c.detail = "F(bottom)=" + value_to_string(fb);
    }
    rep.checks.push_back(bot_c);
  }

  MorphismLawCheck tens{strict ? "tensor preserved" : "tensor (lax)", true, false, ""};
  bool tensor_equal = true;
  for (const QValue& u : src)
    for (const QValue& v : src) {
      QValue a = F(tensor(u, v));
      QValue b = tensor(F(u), F(v));
      if (!(a == b)) tensor_equal = false;
      bool ok = strict ? a == b : leq(b, a);
      if (!ok) {
        tens.passed = false;
        tens.detail = "u=" + value_to_string(u) + "; v=" + value_to_string(v) +
                      "; F(u tensor v)=" + value_to_string(a) +
                      "; F(u) tensor F(v)=" + value_to_string(b);
      }
    }
  if (tens.passed && !strict && tensor_equal) tens.detail = "equality observed";
  rep.checks.push_back(tens);

  MorphismLawCheck joins{strict ? "binary joins preserved" : "binary joins (observed)",
                         true, false, strict ? "" : "finite joins only"};
  for (const QValue& u : src)
    for (const QValue& v : src) {
      QValue a = F(join2(u, v));
      QValue b = join2(F(u), F(v));
      if (!(a == b)) {
        joins.passed = false;
        joins.detail = "u=" + value_to_string(u) + "; v=" + value_to_string(v);
      }
    }
  rep.checks.push_back(joins);

  for (const AdjPair& p : adjoint_pairs()) {
    bool involved = (m.name == p.left && m.source == p.v && m.target == p.w) ||
                    (m.name == p.right && m.source == p.w && m.target == p.v);
    if (!involved) continue;
    QMorphism left = morphism_exact(p.left, p.v, p.w);
    QMorphism right = morphism_exact(p.right, p.w, p.v);
    MorphismLawCheck adj{std::string("adjunction ") + p.left + " -| " + p.right,
                         true, false, ""};
    std::vector<QValue> vs = m.source == p.v ? src : default_samples(p.v);
    std::vector<QValue> ws = m.source == p.w ? src : default_samples(p.w);
    for (const QValue& u : vs)
      for (const QValue& w : ws) {
        bool a = leq(apply_value_impl(left, u), w);
        bool b = leq(u, apply_value_impl(right, w));
        if (a != b) {
          adj.passed = false;
          adj.detail = "u=" + value_to_string(u) + "; w=" + value_to_string(w);
        }
      }
    rep.checks.push_back(adj);
  }

  if (!strict) {
    MorphismLawCheck inf{"join preservation (infinitary family)", false, true, ""};
    InfinitaryWitness w = infinitary_witness(m);
    QValue f_sup = F(w.sup);
    bool members_map_below = true;
    std::vector<QValue> images;
    for (unsigned n = 1; n <= 8; ++n) {
      if (!leq(w.member(n), w.sup)) members_map_below = false;
      images.push_back(F(w.member(n)));
    }
    QValue image_join = join(m.target, images);
    // the failure is exhibited when the image join stays strictly under F(sup)
    bool exhibited = members_map_below && !(image_join == f_sup) &&
                     leq(image_join, f_sup);
    inf.passed = exhibited;
    inf.detail = "family " + w.family + "; sup=" + value_to_string(w.sup) +
                 "; F(sup)=" + value_to_string(f_sup) +
                 "; join of member images=" + value_to_string(image_join);
    rep.checks.push_back(inf);
  }

  return rep;
}

}  // namespace qcat
