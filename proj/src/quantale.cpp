#include "qcat/quantale.hpp"

#include <algorithm>
#include <random>

namespace qcat {

std::string quantale_name(QuantaleId q) {
  switch (q) {
    case QuantaleId::bool2: return "bool2";
    case QuantaleId::cost: return "cost";
    case QuantaleId::unit: return "unit";
    case QuantaleId::delta: return "delta";
  }
  return "?";
}

QuantaleId quantale_from_name(const std::string& name) {
  if (name == "bool2") return QuantaleId::bool2;
  if (name == "cost") return QuantaleId::cost;
  if (name == "unit") return QuantaleId::unit;
  if (name == "delta") return QuantaleId::delta;
  throw StructuralError("unknown quantale tag: " + name);
}

QValue QValue::cost(const Rat& q) {
  if (q < 0) throw StructuralError("cost value must be >= 0");
  return QValue(CostVal{false, q});
}

QValue QValue::unit(const Rat& u) {
  if (u < 0 || u > 1) throw StructuralError("unit value must lie in [0,1]");
  return QValue(UnitVal{u});
}

namespace {

void same(const QValue& u, const QValue& v) {
  if (u.id() != v.id())
    throw QuantaleMismatch("mixed quantale values: " + quantale_name(u.id()) +
                           " vs " + quantale_name(v.id()));
}

}  // namespace

bool leq(const QValue& u, const QValue& v) {
  same(u, v);
  switch (u.id()) {
    case QuantaleId::bool2:
      return !u.as_bool() || v.as_bool();
    case QuantaleId::cost: {
      // order is reversed: smaller distance is larger in the quantale
      const CostVal& a = u.as_cost();
      const CostVal& b = v.as_cost();
      if (a.infinite) return true;
      if (b.infinite) return false;
      return a.q >= b.q;
    }
    case QuantaleId::unit:
      return u.as_unit().u <= v.as_unit().u;
    case QuantaleId::delta:
      return d_leq(u.as_delta(), v.as_delta());
  }
  return false;
}

QValue tensor(const QValue& u, const QValue& v) {
  same(u, v);
  switch (u.id()) {
    case QuantaleId::bool2:
      return QValue::bool2(u.as_bool() && v.as_bool());
    case QuantaleId::cost: {
      const CostVal& a = u.as_cost();
      const CostVal& b = v.as_cost();
      if (a.infinite || b.infinite) return QValue::cost_inf();
      return QValue::cost(a.q + b.q);
    }
    case QuantaleId::unit:
      return QValue::unit(u.as_unit().u * v.as_unit().u);
    case QuantaleId::delta:
      return QValue::delta(d_tensor(u.as_delta(), v.as_delta()));
  }
  return u;
}

QValue hom(const QValue& u, const QValue& v) {
  same(u, v);
  switch (u.id()) {
    case QuantaleId::bool2:
      return QValue::bool2(!u.as_bool() || v.as_bool());
    case QuantaleId::cost: {
      // truncated difference v - u, with v - inf = 0 and inf - u = inf
      const CostVal& a = u.as_cost();
      const CostVal& b = v.as_cost();
      if (a.infinite) return QValue::cost(Rat(0));
      if (b.infinite) return QValue::cost_inf();
      return QValue::cost(b.q > a.q ? Rat(b.q - a.q) : Rat(0));
    }
    case QuantaleId::unit: {
      const Rat& a = u.as_unit().u;
      const Rat& b = v.as_unit().u;
      if (a == 0) return QValue::unit(Rat(1));
      return QValue::unit(b >= a ? Rat(1) : Rat(b / a));
    }
    case QuantaleId::delta:
      return QValue::delta(d_hom(u.as_delta(), v.as_delta()));
  }
  return u;
}

QValue heyting(const QValue& u, const QValue& v) {
  same(u, v);
  if (u.id() == QuantaleId::delta)
    return QValue::delta(d_heyting(u.as_delta(), v.as_delta()));
  // the other three instances are chains
  return leq(u, v) ? top_of(u.id()) : v;
}

QValue join(QuantaleId q, std::span<const QValue> vs) {
  for (const QValue& v : vs)
    if (v.id() != q) throw QuantaleMismatch("join over mixed quantale values");
  switch (q) {
    case QuantaleId::bool2: {
      bool b = false;
      for (const QValue& v : vs) b = b || v.as_bool();
      return QValue::bool2(b);
    }
    case QuantaleId::cost: {
      QValue best = QValue::cost_inf();  // bottom
      for (const QValue& v : vs)
        if (leq(best, v)) best = v;
      return best;
    }
    case QuantaleId::unit: {
      Rat b(0);
      for (const QValue& v : vs) b = std::max(b, v.as_unit().u);
      return QValue::unit(b);
    }
    case QuantaleId::delta: {
      std::vector<StepFn> fs;
      fs.reserve(vs.size());
      for (const QValue& v : vs) fs.push_back(v.as_delta());
      return QValue::delta(d_join(fs));
    }
  }
  return bottom_of(q);
}

QValue meet(QuantaleId q, std::span<const QValue> vs) {
  for (const QValue& v : vs)
    if (v.id() != q) throw QuantaleMismatch("meet over mixed quantale values");
  switch (q) {
    case QuantaleId::bool2: {
      bool b = true;
      for (const QValue& v : vs) b = b && v.as_bool();
      return QValue::bool2(b);
    }
    case QuantaleId::cost: {
      QValue best = QValue::cost(Rat(0));  // top
      for (const QValue& v : vs)
        if (leq(v, best)) best = v;
      return best;
    }
    case QuantaleId::unit: {
      Rat b(1);
      for (const QValue& v : vs) b = std::min(b, v.as_unit().u);
      return QValue::unit(b);
    }
    case QuantaleId::delta: {
      std::vector<StepFn> fs;
      fs.reserve(vs.size());
      for (const QValue& v : vs) fs.push_back(v.as_delta());
      return QValue::delta(d_meet(fs));
    }
  }
  return top_of(q);
}

QValue join2(const QValue& u, const QValue& v) {
  same(u, v);
  QValue vs[2] = {u, v};
  return join(u.id(), vs);
}

QValue meet2(const QValue& u, const QValue& v) {
  same(u, v);
  QValue vs[2] = {u, v};
  return meet(u.id(), vs);
}

QValue unit_of(QuantaleId q) {
  switch (q) {
    case QuantaleId::bool2: return QValue::bool2(true);
    case QuantaleId::cost: return QValue::cost(Rat(0));
    case QuantaleId::unit: return QValue::unit(Rat(1));
    case QuantaleId::delta: return QValue::delta(StepFn::epsilon());
  }
  return QValue::bool2(true);
}

QValue bottom_of(QuantaleId q) {
  switch (q) {
    case QuantaleId::bool2: return QValue::bool2(false);
    case QuantaleId::cost: return QValue::cost_inf();
    case QuantaleId::unit: return QValue::unit(Rat(0));
    case QuantaleId::delta: return QValue::delta(StepFn::bottom());
  }
  return QValue::bool2(false);
}

QValue top_of(QuantaleId q) { return unit_of(q); }

bool unit_is_top(QuantaleId q) {
  std::vector<QValue> none;
  return unit_of(q) == meet(q, none);
}

bool totally_below(const QValue& u, const QValue& v) {
  same(u, v);
  switch (u.id()) {
    case QuantaleId::bool2:
      return !u.as_bool() || v.as_bool();
    case QuantaleId::cost: {
      const CostVal& a = u.as_cost();
      const CostVal& b = v.as_cost();
      if (a.infinite) return true;
      if (b.infinite) return false;
      return a.q > b.q;  // strictly below in the reversed order
    }
    case QuantaleId::unit: {
      const Rat& a = u.as_unit().u;
      return a == 0 || a < v.as_unit().u;
    }
    case QuantaleId::delta:
      return d_totally_below(u.as_delta(), v.as_delta());
  }
  return false;
}

QValue approximating_unit(QuantaleId q, unsigned n) {
  if (n == 0) throw StructuralError("approximating_unit needs n >= 1");
  switch (q) {
    case QuantaleId::bool2: return QValue::bool2(true);
    case QuantaleId::cost: return QValue::cost(Rat(1, n));
    case QuantaleId::unit: return QValue::unit(Rat(1) - Rat(1, n));
    case QuantaleId::delta:
      return QValue::delta(StepFn::generator(Rat(1, n), Rat(1) - Rat(1, n)));
  }
  return unit_of(q);
}

std::string value_to_string(const QValue& v) {
  switch (v.id()) {
    case QuantaleId::bool2:
      return v.as_bool() ? "true" : "false";
    case QuantaleId::cost:
      return v.as_cost().infinite ? "inf" : rat_to_string(v.as_cost().q);
    case QuantaleId::unit:
      return rat_to_string(v.as_unit().u);
    case QuantaleId::delta: {
      const StepFn& f = v.as_delta();
      const auto& gens = f.generators();
      if (gens.empty()) return "f(t)=0 for all t";
      std::string s = "f(t)=";
      bool first = true;
      auto add = [&](const std::string& piece) {
        if (!first) s += ", ";
        s += piece;
        first = false;
      };
      if (gens[0].delta > 0) add("0 for t<=" + rat_to_string(gens[0].delta));
      for (size_t i = 0; i + 1 < gens.size(); ++i)
        add(rat_to_string(gens[i].value) + " for " + rat_to_string(gens[i].delta) +
            "<t<=" + rat_to_string(gens[i + 1].delta));
      add(rat_to_string(gens.back().value) + " for t>" +
          rat_to_string(gens.back().delta));
      return s;
    }
  }
  return "?";
}

bool value_less(const QValue& a, const QValue& b) {
  if (a.id() != b.id()) return a.id() < b.id();
  switch (a.id()) {
    case QuantaleId::bool2:
      return a.as_bool() < b.as_bool();
    case QuantaleId::cost: {
      const CostVal& x = a.as_cost();
      const CostVal& y = b.as_cost();
      if (x.infinite != y.infinite) return !x.infinite;
      if (x.infinite) return false;
      return x.q < y.q;
    }
    case QuantaleId::unit:
      return a.as_unit().u < b.as_unit().u;
    case QuantaleId::delta: {
      const auto& x = a.as_delta().generators();
      const auto& y = b.as_delta().generators();
      for (size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i].delta != y[i].delta) return x[i].delta < y[i].delta;
        if (x[i].value != y[i].value) return x[i].value < y[i].value;
      }
      return x.size() < y.size();
    }
  }
  return false;
}

bool LawReport::all_passed() const {
  for (const LawCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

std::string cx2(const QValue& u, const QValue& v, const QValue& lhs,
                const QValue& rhs) {
  return "u=" + value_to_string(u) + "; v=" + value_to_string(v) +
         "; lhs=" + value_to_string(lhs) + "; rhs=" + value_to_string(rhs);
}

std::string cx3(const QValue& u, const QValue& v, const QValue& w,
                const std::string& lhs, const std::string& rhs) {
  return "u=" + value_to_string(u) + "; v=" + value_to_string(v) +
         "; w=" + value_to_string(w) + "; lhs=" + lhs + "; rhs=" + rhs;
}

}  // namespace

LawReport quantale_law_suite(QuantaleId q, std::span<const QValue> samples,
                             uint64_t max_triples) {
  LawReport rep;
  rep.q = q;
  const QValue k = unit_of(q);
  const QValue bot = bottom_of(q);
  const size_t n = samples.size();

  LawCheck comm{"tensor commutativity", true, ""};
  LawCheck unit_law{"tensor unit", true, ""};
  LawCheck bot_law{"bottom absorbing", true, ""};
  LawCheck lattice{"join/meet bounds", true, ""};
  for (size_t i = 0; i < n && comm.passed; ++i)
    for (size_t j = 0; j < n; ++j) {
      QValue a = tensor(samples[i], samples[j]);
      QValue b = tensor(samples[j], samples[i]);
      ++rep.pair_count;
      if (!(a == b)) {
        comm.passed = false;
        comm.counterexample = cx2(samples[i], samples[j], a, b);
        break;
      }
    }
  for (size_t i = 0; i < n; ++i) {
    QValue a = tensor(samples[i], k);
    QValue b = tensor(k, samples[i]);
    if (!(a == samples[i]) || !(b == samples[i])) {
      unit_law.passed = false;
      unit_law.counterexample = cx2(samples[i], k, a, samples[i]);
      break;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    QValue a = tensor(samples[i], bot);
    if (!(a == bot)) {
      bot_law.passed = false;
      bot_law.counterexample = cx2(samples[i], bot, a, bot);
      break;
    }
  }
  for (size_t i = 0; i < n && lattice.passed; ++i)
    for (size_t j = 0; j < n; ++j) {
      QValue m = meet2(samples[i], samples[j]);
      QValue jn = join2(samples[i], samples[j]);
      if (!leq(m, samples[i]) || !leq(m, samples[j]) || !leq(samples[i], jn) ||
          !leq(samples[j], jn) || !(jn == join2(samples[j], samples[i])) ||
          !(m == meet2(samples[j], samples[i]))) {
        lattice.passed = false;
        lattice.counterexample = cx2(samples[i], samples[j], m, jn);
        break;
      }
    }

  LawCheck assoc{"tensor associativity", true, ""};
  LawCheck distr{"tensor distributes over join", true, ""};
  LawCheck resid{"residuation contract", true, ""};
  LawCheck frame{"meet distributes over join", true, ""};
  LawCheck heyt{"heyting contract", true, ""};

  auto run_triple = [&](size_t i, size_t j, size_t l) {
    const QValue &u = samples[i], &v = samples[j], &w = samples[l];
    ++rep.triple_count;
    if (assoc.passed) {
      QValue a = tensor(tensor(u, v), w);
      QValue b = tensor(u, tensor(v, w));
      if (!(a == b)) {
        assoc.passed = false;
        assoc.counterexample = cx3(u, v, w, value_to_string(a), value_to_string(b));
      }
    }
    if (distr.passed) {
      QValue a = tensor(u, join2(v, w));
      QValue b = join2(tensor(u, v), tensor(u, w));
      if (!(a == b)) {
        distr.passed = false;
        distr.counterexample = cx3(u, v, w, value_to_string(a), value_to_string(b));
      }
    }
    if (resid.passed) {
      bool a = leq(tensor(u, v), w);
      bool b = leq(v, hom(u, w));
      if (a != b) {
        resid.passed = false;
        resid.counterexample =
            cx3(u, v, w, a ? "tensor(u,v)<=w" : "not tensor(u,v)<=w",
                b ? "v<=hom(u,w)" : "not v<=hom(u,w)");
      }
    }
    if (frame.passed) {
      QValue a = meet2(u, join2(v, w));
      QValue b = join2(meet2(u, v), meet2(u, w));
      if (!(a == b)) {
        frame.passed = false;
        frame.counterexample = cx3(u, v, w, value_to_string(a), value_to_string(b));
      }
    }
    if (heyt.passed) {
      bool a = leq(meet2(u, v), w);
      bool b = leq(v, heyting(u, w));
      if (a != b) {
        heyt.passed = false;
        heyt.counterexample =
            cx3(u, v, w, a ? "meet(u,v)<=w" : "not meet(u,v)<=w",
                b ? "v<=heyting(u,w)" : "not v<=heyting(u,w)");
      }
    }
  };

  uint64_t total = static_cast<uint64_t>(n) * n * n;
  if (n > 0 && total <= max_triples) {
    rep.exhaustive_triples = true;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) run_triple(i, j, l);
  } else if (n > 0) {
    std::mt19937_64 rng(20260817u);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    for (uint64_t t = 0; t < max_triples; ++t)
      run_triple(pick(rng), pick(rng), pick(rng));
  }

  rep.checks = {comm, unit_law, bot_law, lattice, assoc, distr, resid, frame, heyt};
  return rep;
}

std::vector<QValue> sample_values(QuantaleId q, size_t count, uint64_t seed) {
  if (q == QuantaleId::bool2) return {QValue::bool2(false), QValue::bool2(true)};

  std::vector<QValue> out;
  std::mt19937_64 rng(seed);
  uint64_t num_range = 24, den_range = 6;
  auto rnd_rat = [&] {
    Rat num(static_cast<uint64_t>(rng() % num_range));
    Rat den(static_cast<uint64_t>(1 + rng() % den_range));
    return Rat(num / den);
  };
  auto dedup = [&] {
    std::sort(out.begin(), out.end(), value_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
  };
  auto fill = [&](auto&& push) {
    // every round widens the ranges, so the distinct pool keeps growing
    while (true) {
      for (size_t i = out.size() + out.size() / 2 + 8; i > 0; --i) push();
      dedup();
      if (out.size() >= count) return;
      num_range *= 2;
      den_range += 2;
    }
  };
  switch (q) {
    case QuantaleId::bool2:
      break;
    case QuantaleId::cost:
      out = {QValue::cost(Rat(0)), QValue::cost(Rat(1)), QValue::cost(Rat(1) / 2),
             QValue::cost(Rat(3) / 2), QValue::cost_inf()};
      fill([&] {
        if (rng() % 8 == 0)
          out.push_back(QValue::cost_inf());
        else
          out.push_back(QValue::cost(rnd_rat()));
      });
      break;
    case QuantaleId::unit: {
      den_range = 12;
      // numerator bounded by the denominator: always lands in [0,1]
      auto unit_rat = [&] {
        uint64_t den = 1 + rng() % den_range;
        uint64_t num = rng() % (den + 1);
        return Rat(Int(num), Int(den));
      };
      out = {QValue::unit(Rat(0)), QValue::unit(Rat(1)), QValue::unit(Rat(1) / 2),
             QValue::unit(Rat(1) / 3)};
      fill([&] { out.push_back(QValue::unit(unit_rat())); });
      break;
    }
    case QuantaleId::delta: {
      num_range = 11;
      den_range = 8;
      auto jump_height = [&] {
        uint64_t den = 1 + rng() % den_range;
        uint64_t num = 1 + rng() % den;
        return Rat(Int(num), Int(den));
      };
      out = {QValue::delta(StepFn::bottom()), QValue::delta(StepFn::epsilon()),
             QValue::delta(StepFn::generator(Rat(1), Rat(1) / 2))};
      fill([&] {
        size_t jumps = 1 + rng() % 3;
        std::vector<StepFn::Gen> gens;
        for (size_t i = 0; i < jumps; ++i)
          gens.push_back({rnd_rat(), jump_height()});
        out.push_back(QValue::delta(StepFn::from_generators(std::move(gens))));
      });
      break;
    }
  }
  dedup();
  return out;
}

}  // namespace qcat
