#include "qcat/stepfn.hpp"

#include <algorithm>

#include "qcat/errors.hpp"

namespace qcat {

StepFn StepFn::epsilon() { return generator(Rat(0), Rat(1)); }

StepFn StepFn::generator(const Rat& delta, const Rat& value) {
  return from_generators({Gen{delta, value}});
}

StepFn StepFn::from_generators(std::vector<Gen> gens) {
  for (const Gen& g : gens) {
    if (g.delta < 0) throw StructuralError("step function breakpoint must be >= 0");
    if (g.value < 0 || g.value > 1)
      throw StructuralError("step function value must lie in [0,1]");
  }
  std::sort(gens.begin(), gens.end(), [](const Gen& a, const Gen& b) {
    return a.delta < b.delta || (a.delta == b.delta && a.value < b.value);
  });
  StepFn f;
  Rat best(0);
  for (const Gen& g : gens) {
    // keep only jumps that raise the running maximum; at a repeated
    // breakpoint the largest value wins
    if (g.value > best) {
      if (!f.gens_.empty() && f.gens_.back().delta == g.delta)
        f.gens_.back().value = g.value;
      else
        f.gens_.push_back(g);
      best = g.value;
    }
  }
  return f;
}

StepFn StepFn::from_canonical(std::vector<Gen> gens) {
  StepFn canon = from_generators(gens);
  if (canon.gens_ != gens)
    throw StructuralError("step function list is not canonical");
  return canon;
}

Rat StepFn::at(const Rat& t) const {
  Rat v(0);
  for (const Gen& g : gens_) {
    if (g.delta < t)
      v = g.value;
    else
      break;
  }
  return v;
}

Rat StepFn::at_infinity() const {
  return gens_.empty() ? Rat(0) : gens_.back().value;
}

Rat StepFn::just_after(const Rat& t) const {
  Rat v(0);
  for (const Gen& g : gens_) {
    if (g.delta <= t)
      v = g.value;
    else
      break;
  }
  return v;
}

bool d_leq(const StepFn& f, const StepFn& g) {
  // f <= g pointwise iff each jump of f is dominated just after its breakpoint
  for (const StepFn::Gen& c : f.generators())
    if (c.value > g.just_after(c.delta)) return false;
  return true;
}

StepFn d_tensor(const StepFn& f, const StepFn& g) {
  std::vector<StepFn::Gen> out;
  out.reserve(f.generators().size() * g.generators().size());
  for (const StepFn::Gen& a : f.generators())
    for (const StepFn::Gen& b : g.generators())
      out.push_back({a.delta + b.delta, a.value * b.value});
  return StepFn::from_generators(std::move(out));
}

namespace {

// largest h with f_{delta,u} tensor h <= g, i.e. h(s) <= g(s + delta) / u
StepFn shift_divide(const Rat& delta, const Rat& u, const StepFn& g) {
  std::vector<StepFn::Gen> out;
  out.reserve(g.generators().size());
  for (const StepFn::Gen& b : g.generators()) {
    Rat d = b.delta > delta ? Rat(b.delta - delta) : Rat(0);
    Rat v = b.value >= u ? Rat(1) : Rat(b.value / u);
    out.push_back({d, v});
  }
  return StepFn::from_generators(std::move(out));
}

}  // namespace

StepFn d_hom(const StepFn& f, const StepFn& g) {
  if (f.is_bottom()) return StepFn::epsilon();
  StepFn h = shift_divide(f.generators()[0].delta, f.generators()[0].value, g);
  for (size_t i = 1; i < f.generators().size(); ++i)
    h = d_meet2(h, shift_divide(f.generators()[i].delta, f.generators()[i].value, g));
  return h;
}

StepFn d_join(std::span<const StepFn> fs) {
  std::vector<StepFn::Gen> all;
  for (const StepFn& f : fs)
    all.insert(all.end(), f.generators().begin(), f.generators().end());
  return StepFn::from_generators(std::move(all));
}

StepFn d_join2(const StepFn& f, const StepFn& g) {
  StepFn fs[2] = {f, g};
  return d_join(fs);
}

StepFn d_meet2(const StepFn& f, const StepFn& g) {
  // pointwise min is again a step function over the merged breakpoints
  std::vector<Rat> points;
  for (const StepFn::Gen& c : f.generators()) points.push_back(c.delta);
  for (const StepFn::Gen& c : g.generators()) points.push_back(c.delta);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<StepFn::Gen> out;
  for (const Rat& p : points)
    out.push_back({p, std::min(f.just_after(p), g.just_after(p))});
  return StepFn::from_generators(std::move(out));
}

StepFn d_meet(std::span<const StepFn> fs) {
  if (fs.empty()) return StepFn::epsilon();
  StepFn m = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) m = d_meet2(m, fs[i]);
  return m;
}

StepFn d_heyting(const StepFn& f, const StepFn& g) {
  // pointwise implication on merged intervals, then suffix-min for monotonicity
  std::vector<Rat> points{Rat(0)};
  for (const StepFn::Gen& c : f.generators()) points.push_back(c.delta);
  for (const StepFn::Gen& c : g.generators()) points.push_back(c.delta);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Rat> impl(points.size());
  for (size_t j = 0; j < points.size(); ++j) {
    Rat fv = f.just_after(points[j]);
    Rat gv = g.just_after(points[j]);
    impl[j] = fv <= gv ? Rat(1) : gv;
  }
  for (size_t j = points.size() - 1; j-- > 0;)
    impl[j] = std::min(impl[j], impl[j + 1]);
  std::vector<StepFn::Gen> out;
  for (size_t j = 0; j < points.size(); ++j) out.push_back({points[j], impl[j]});
  return StepFn::from_generators(std::move(out));
}

bool d_totally_below(const StepFn& f, const StepFn& g) {
  for (const StepFn::Gen& c : f.generators())
    if (c.value >= g.at(c.delta)) return false;
  return true;
}

bool is_finite_distribution(const StepFn& f) { return f.at_infinity() == 1; }

}  // namespace qcat
