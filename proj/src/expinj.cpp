#include "qcat/expinj.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcat {

namespace {

struct ValueLess {
  bool operator()(const QValue& a, const QValue& b) const {
    return value_less(a, b);
  }
};

}  // namespace

std::vector<QValue> exponentiability_family(const VCategory& c, unsigned depth) {
  check_shape(c);
  if (c.q == QuantaleId::bool2)
    return {QValue::bool2(false), QValue::bool2(true)};

  std::set<QValue, ValueLess> family;
  family.insert(unit_of(c.q));
  family.insert(bottom_of(c.q));
  family.insert(top_of(c.q));
  for (const auto& row : c.hom)
    for (const QValue& v : row) family.insert(v);

  if (c.q == QuantaleId::cost) {
    std::vector<Rat> finite;
    for (const auto& row : c.hom)
      for (const QValue& v : row)
        if (!v.as_cost().infinite) finite.push_back(v.as_cost().q);
    // truncated differences and their midpoints seed the split candidates
    for (const Rat& a : finite)
      for (const Rat& b : finite)
        if (a > b) {
          family.insert(QValue::cost(a - b));
          family.insert(QValue::cost((a - b) / 2));
        }
  } else if (c.q == QuantaleId::delta) {
    std::set<Rat> deltas, values;
    values.insert(Rat(1));
    deltas.insert(Rat(0));
    for (const auto& row : c.hom)
      for (const QValue& v : row)
        for (const StepFn::Gen& g : v.as_delta().generators()) {
          deltas.insert(g.delta);
          values.insert(g.value);
        }
    std::set<Rat> dset = deltas, vset = values;
    for (const Rat& a : deltas)
      for (const Rat& b : deltas) {
        dset.insert(a + b);
        if (a > b) dset.insert(a - b);
      }
    for (const Rat& a : values)
      for (const Rat& b : values) {
        vset.insert(a * b);
        if (a < b && b != 0) vset.insert(a / b);
      }
    for (const Rat& d : dset)
      for (const Rat& v : vset) family.insert(QValue::delta(StepFn::generator(d, v)));
  }

  for (unsigned round = 0; round < depth; ++round) {
    std::vector<QValue> cur(family.begin(), family.end());
    for (const QValue& a : cur)
      for (const QValue& b : cur) {
        family.insert(tensor(a, b));
        family.insert(meet2(a, b));
        family.insert(hom(a, b));
      }
  }
  return {family.begin(), family.end()};
}

namespace {

QValue exp_lhs(const VCategory& c, size_t x0, size_t x2, const QValue& v0,
               const QValue& v1) {
  std::vector<QValue> terms;
  terms.reserve(c.size());
  for (size_t x = 0; x < c.size(); ++x)
    terms.push_back(
        tensor(meet2(c.a(x0, x), v0), meet2(c.a(x, x2), v1)));
  return join(c.q, terms);
}

QValue exp_rhs(const VCategory& c, size_t x0, size_t x2, const QValue& v0,
               const QValue& v1) {
  return meet2(c.a(x0, x2), tensor(v0, v1));
}

}  // namespace

ExpVerdict check_exponentiable(const VCategory& c, unsigned depth) {
  CategoryCheck cc = validate_category(c);
  if (!cc.ok) throw StructuralError("exponentiability check needs a valid category");
  std::vector<QValue> family = exponentiability_family(c, depth);
  ExpVerdict out;
  out.family_size = family.size();
  for (size_t x0 = 0; x0 < c.size(); ++x0)
    for (size_t x2 = 0; x2 < c.size(); ++x2)
      for (const QValue& v0 : family)
        for (const QValue& v1 : family) {
          QValue lhs = exp_lhs(c, x0, x2, v0, v1);
          QValue rhs = exp_rhs(c, x0, x2, v0, v1);
          if (!leq(rhs, lhs)) {
            // re-evaluate before emission
            QValue lhs2 = exp_lhs(c, x0, x2, v0, v1);
            QValue rhs2 = exp_rhs(c, x0, x2, v0, v1);
            if (leq(rhs2, lhs2))
              throw std::logic_error("unstable exponentiability witness");
            out.status = ExpStatus::counterexample;
            out.witness = ExpWitness{x0,
                                     x2,
                                     v0,
                                     v1,
                                     value_to_string(lhs2),
                                     value_to_string(rhs2)};
            return out;
          }
        }
  out.status = c.q == QuantaleId::bool2 ? ExpStatus::passed_exhaustively
                                        : ExpStatus::passed_on_family;
  out.note = c.q == QuantaleId::bool2
                 ? "all value pairs of the two-element quantale tested"
                 : "tested on the derived family at depth " + std::to_string(depth);
  return out;
}

namespace {

/** Finite entries as signed rationals; infinite entries flagged. */
struct ExtRat {
  bool inf = false;
  Rat r{0};
};

ExtRat entry(const VCategory& c, size_t i, size_t j) {
  const CostVal& v = c.a(i, j).as_cost();
  return {v.infinite, v.infinite ? Rat(0) : v.q};
}

}  // namespace

ExpVerdict check_exponentiable_metric(const VCategory& c) {
  if (c.q != QuantaleId::cost)
    throw StructuralError("the metric midpoint criterion applies to cost only");
  CategoryCheck cc = validate_category(c);
  if (!cc.ok) throw StructuralError("exponentiability check needs a valid category");
  ExpVerdict out;
  size_t n = c.size();
  size_t splits_checked = 0;
  // widest finite pairs first: a missing midpoint shows up soonest there
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t x0 = 0; x0 < n; ++x0)
    for (size_t x2 = 0; x2 < n; ++x2)
      if (!entry(c, x0, x2).inf) pairs.push_back({x0, x2});
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const auto& p, const auto& q) {
                     return entry(c, p.first, p.second).r >
                            entry(c, q.first, q.second).r;
                   });
  for (const auto& [x0, x2] : pairs) {
    const Rat dist = entry(c, x0, x2).r;
    std::set<Rat> crit{Rat(0), dist};
    for (size_t x = 0; x < n; ++x)
      for (size_t x1 = 0; x1 < n; ++x1) {
        ExtRat a = entry(c, x0, x);
        ExtRat b = entry(c, x1, x2);
        if (a.inf || b.inf) continue;
        Rat u0 = (a.r - b.r + dist) / 2;
        if (u0 >= 0 && u0 <= dist) crit.insert(u0);
      }
    for (const Rat& u0 : crit) {
      Rat u1 = dist - u0;
      ++splits_checked;
      // defect of the best approximate midpoint for this split
      bool seen = false;
      Rat best(0);
      for (size_t x = 0; x < n; ++x) {
        ExtRat a = entry(c, x0, x);
        ExtRat b = entry(c, x, x2);
        if (a.inf || b.inf) continue;
        Rat branch = std::max(Rat(a.r - u0), Rat(b.r - u1));
        if (!seen || branch < best) {
          best = branch;
          seen = true;
        }
      }
      if (!seen || best > 0) {
        QValue v0 = QValue::cost(u0);
        QValue v1 = QValue::cost(u1);
        QValue lhs = exp_lhs(c, x0, x2, v0, v1);
        QValue rhs = exp_rhs(c, x0, x2, v0, v1);
        if (leq(rhs, lhs))
          throw std::logic_error("split defect disagrees with the value test");
        out.status = ExpStatus::counterexample;
        out.witness = ExpWitness{x0,
                                 x2,
                                 v0,
                                 v1,
                                 value_to_string(lhs),
                                 value_to_string(rhs)};
        out.note = "no approximate midpoint at split (" + rat_to_string(u0) +
                   ", " + rat_to_string(u1) + ")";
        out.family_size = splits_checked;
        return out;
      }
    }
  }
  out.status = ExpStatus::passed_exhaustively;
  out.family_size = splits_checked;
  out.note = "every split decided over its critical set";
  return out;
}

namespace {

struct GenTriple {
  Rat d1, a1, d2, a2, d3, a3;
};

/** Four-case single-jump interpolation; returns (u', case index 0..3). */
std::pair<StepFn, int> interpolate_generators(const GenTriple& t) {
  bool shape_ge = t.d1 + t.d2 >= t.d3;
  bool height_le = t.a1 * t.a2 <= t.a3;
  int case_idx = (shape_ge ? 0 : 2) + (height_le ? 0 : 1);
  Rat d = shape_ge ? t.d1 : Rat(t.d3 - t.d2);
  Rat a = height_le ? t.a1 : Rat(t.a3 / t.a2);
  return {StepFn::generator(d, a), case_idx};
}

}  // namespace

InterpolationResult quantale_interpolation(const QValue& u, const QValue& v,
                                           const QValue& w) {
  if (u.id() != v.id() || u.id() != w.id())
    throw QuantaleMismatch("interpolation needs three values of one quantale");
  InterpolationResult res;
  res.target = meet2(w, tensor(u, v));

  auto finish_single = [&](const QValue& up, const QValue& vp) {
    res.witnesses = {InterpolationWitness{up, vp}};
    res.ok = leq(up, u) && leq(vp, v) && tensor(up, vp) == res.target;
    if (!res.ok) res.note = "witness identity failed; this is a bug";
  };

  switch (u.id()) {
    case QuantaleId::bool2:
      finish_single(res.target, res.target);
      return res;
    case QuantaleId::cost: {
      const CostVal& tv = res.target.as_cost();
      if (tv.infinite) {
        finish_single(QValue::cost_inf(), v);
      } else {
        // target is finite, hence v is finite and target >= u + v numerically
        finish_single(QValue::cost(Rat(tv.q - v.as_cost().q)), v);
      }
      return res;
    }
    case QuantaleId::unit: {
      const Rat& uu = u.as_unit().u;
      if (uu == 0) {
        finish_single(u, v);
      } else {
        finish_single(u, QValue::unit(Rat(res.target.as_unit().u / uu)));
      }
      return res;
    }
    case QuantaleId::delta:
      break;
  }

  const StepFn& fu = u.as_delta();
  const StepFn& fv = v.as_delta();
  const StepFn& fw = w.as_delta();
  if (fu.generators().size() == 1 && fv.generators().size() == 1 &&
      fw.generators().size() == 1) {
    GenTriple t{fu.generators()[0].delta, fu.generators()[0].value,
                fv.generators()[0].delta, fv.generators()[0].value,
                fw.generators()[0].delta, fw.generators()[0].value};
    auto [up, case_idx] = interpolate_generators(t);
    res.note = "case " + std::to_string(case_idx + 1);
    finish_single(QValue::delta(up), v);
    return res;
  }

  // general step functions reduce jump-by-jump through the frame law
  std::vector<StepFn> products;
  for (const StepFn::Gen& gu : fu.generators())
    for (const StepFn::Gen& gv : fv.generators())
      for (const StepFn::Gen& gw : fw.generators()) {
        GenTriple t{gu.delta, gu.value, gv.delta, gv.value, gw.delta, gw.value};
        auto [up, case_idx] = interpolate_generators(t);
        (void)case_idx;
        StepFn vp = StepFn::generator(gv.delta, gv.value);
        res.witnesses.push_back(
            InterpolationWitness{QValue::delta(up), QValue::delta(vp)});
        products.push_back(d_tensor(up, vp));
      }
  res.ok = true;
  for (const InterpolationWitness& wit : res.witnesses)
    res.ok = res.ok && leq(wit.u_prime, u) && leq(wit.v_prime, v);
  res.ok = res.ok && QValue::delta(d_join(products)) == res.target;
  res.note = "reduced to " + std::to_string(res.witnesses.size()) +
             " single-jump witnesses";
  if (!res.ok) res.note += "; witness identity failed; this is a bug";
  return res;
}

DeltaExpReport delta_exponentiability_suite(
    std::span<const std::array<QValue, 3>> triples) {
  DeltaExpReport rep;
  for (const auto& t : triples) {
    const StepFn& fu = t[0].as_delta();
    const StepFn& fv = t[1].as_delta();
    const StepFn& fw = t[2].as_delta();
    if (fu.generators().size() != 1 || fv.generators().size() != 1 ||
        fw.generators().size() != 1)
      throw StructuralError("suite triples must be single jumps");
    GenTriple g{fu.generators()[0].delta, fu.generators()[0].value,
                fv.generators()[0].delta, fv.generators()[0].value,
                fw.generators()[0].delta, fw.generators()[0].value};
    auto [up, case_idx] = interpolate_generators(g);
    ++rep.case_counts[static_cast<size_t>(case_idx)];
    ++rep.total;
    InterpolationResult r = quantale_interpolation(t[0], t[1], t[2]);
    StepFn independent = d_meet2(fw, d_tensor(fu, fv));
    bool ok = r.ok && r.witnesses.size() == 1 &&
              r.witnesses[0].u_prime == QValue::delta(up) &&
              tensor(r.witnesses[0].u_prime, r.witnesses[0].v_prime) ==
                  QValue::delta(independent);
    if (!ok && rep.all_ok) {
      rep.all_ok = false;
      rep.failure = "u=" + value_to_string(t[0]) + "; v=" + value_to_string(t[1]) +
                    "; w=" + value_to_string(t[2]);
    }
  }
  return rep;
}

}  // namespace qcat
