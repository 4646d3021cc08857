#include "qcat/category.hpp"

#include <algorithm>

namespace qcat {

std::optional<size_t> VCategory::index_of(const std::string& name) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  return std::nullopt;
}

void check_shape(const VCategory& c) {
  if (c.hom.size() != c.objects.size())
    throw StructuralError("hom matrix must have one row per object");
  for (const auto& row : c.hom) {
    if (row.size() != c.objects.size())
      throw StructuralError("hom matrix must be square");
    for (const QValue& v : row)
      if (v.id() != c.q)
        throw QuantaleMismatch("hom entry from " + quantale_name(v.id()) +
                               " in a " + quantale_name(c.q) + " category");
  }
  for (size_t i = 0; i < c.objects.size(); ++i)
    for (size_t j = i + 1; j < c.objects.size(); ++j)
      if (c.objects[i] == c.objects[j])
        throw StructuralError("duplicate object name: " + c.objects[i]);
}

CategoryCheck validate_category(const VCategory& c) {
  check_shape(c);
  const QValue k = unit_of(c.q);
  for (size_t x = 0; x < c.size(); ++x)
    if (!leq(k, c.a(x, x)))
      return {false,
              LawViolation{"reflexivity",
                           {c.objects[x]},
                           value_to_string(k),
                           value_to_string(c.a(x, x))}};
  for (size_t x = 0; x < c.size(); ++x)
    for (size_t y = 0; y < c.size(); ++y)
      for (size_t z = 0; z < c.size(); ++z) {
        QValue lhs = tensor(c.a(x, y), c.a(y, z));
        if (!leq(lhs, c.a(x, z)))
          return {false,
                  LawViolation{"transitivity",
                               {c.objects[x], c.objects[y], c.objects[z]},
                               value_to_string(lhs),
                               value_to_string(c.a(x, z))}};
      }
  return {true, std::nullopt};
}

namespace {

Matrix square_step(QuantaleId q, const Matrix& r) {
  size_t n = r.size();
  Matrix out = r;
  for (size_t x = 0; x < n; ++x)
    for (size_t z = 0; z < n; ++z) {
      std::vector<QValue> terms;
      terms.reserve(n + 1);
      terms.push_back(r[x][z]);
      for (size_t y = 0; y < n; ++y) terms.push_back(tensor(r[x][y], r[y][z]));
      out[x][z] = join(q, terms);
    }
  return out;
}

}  // namespace

VCategory path_closure(const VCategory& c, std::optional<size_t> cap) {
  check_shape(c);
  size_t n = c.size();
  size_t rounds = cap.value_or(n * n);
  VCategory out = c;
  const QValue k = unit_of(c.q);
  for (size_t x = 0; x < n; ++x) out.hom[x][x] = join2(out.hom[x][x], k);
  for (size_t round = 0; round <= rounds; ++round) {
    Matrix next = square_step(c.q, out.hom);
    if (next == out.hom) return out;
    if (round == rounds)
      throw ClosureDivergence("path closure not stable after " +
                              std::to_string(rounds) + " rounds");
    out.hom = std::move(next);
  }
  return out;
}

VCategory dual(const VCategory& c) {
  check_shape(c);
  VCategory out = c;
  for (size_t x = 0; x < c.size(); ++x)
    for (size_t y = 0; y < c.size(); ++y) out.hom[x][y] = c.a(y, x);
  return out;
}

bool is_symmetric(const VCategory& c) {
  for (size_t x = 0; x < c.size(); ++x)
    for (size_t y = x + 1; y < c.size(); ++y)
      if (!(c.a(x, y) == c.a(y, x))) return false;
  return true;
}

bool is_separated(const VCategory& c) {
  const QValue k = unit_of(c.q);
  for (size_t x = 0; x < c.size(); ++x)
    for (size_t y = 0; y < c.size(); ++y)
      if (x != y && leq(k, c.a(x, y)) && leq(k, c.a(y, x))) return false;
  return true;
}

bool is_finitary(const VCategory& c) {
  if (c.q != QuantaleId::delta)
    throw StructuralError("is_finitary applies to delta categories only");
  for (size_t x = 0; x < c.size(); ++x)
    for (size_t y = 0; y < c.size(); ++y)
      if (!is_finite_distribution(c.a(x, y).as_delta())) return false;
  return true;
}

VCategory underlying_order(const VCategory& c) {
  const QValue k = unit_of(c.q);
  VCategory out;
  out.q = QuantaleId::bool2;
  out.objects = c.objects;
  out.hom.assign(c.size(), std::vector<QValue>(c.size(), QValue::bool2(false)));
  for (size_t x = 0; x < c.size(); ++x)
    for (size_t y = 0; y < c.size(); ++y)
      out.hom[x][y] = QValue::bool2(leq(k, c.a(x, y)));
  return out;
}

namespace {

VCategory pair_category(const VCategory& x, const VCategory& y, bool use_meet) {
  if (x.q != y.q) throw QuantaleMismatch("product of categories over mixed quantales");
  VCategory out;
  out.q = x.q;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j)
      out.objects.push_back("(" + x.objects[i] + "," + y.objects[j] + ")");
  size_t n = out.objects.size();
  out.hom.assign(n, std::vector<QValue>(n, bottom_of(x.q)));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j)
      for (size_t k = 0; k < x.size(); ++k)
        for (size_t l = 0; l < y.size(); ++l) {
          QValue v = use_meet ? meet2(x.a(i, k), y.a(j, l))
                              : tensor(x.a(i, k), y.a(j, l));
          out.hom[i * y.size() + j][k * y.size() + l] = v;
        }
  return out;
}

}  // namespace

VCategory product(const VCategory& x, const VCategory& y) {
  return pair_category(x, y, true);
}

VCategory tensor_product(const VCategory& x, const VCategory& y) {
  return pair_category(x, y, false);
}

VCategory unit_category(QuantaleId q) {
  VCategory e;
  e.q = q;
  e.objects = {"*"};
  e.hom = {{unit_of(q)}};
  return e;
}

FunctorCheck check_functor(const VFunctor& f) {
  check_shape(f.source);
  check_shape(f.target);
  if (f.source.q != f.target.q)
    throw QuantaleMismatch("functor endpoints over mixed quantales");
  if (f.map.size() != f.source.size())
    throw StructuralError("functor map must cover every source object");
  for (size_t i : f.map)
    if (i >= f.target.size()) throw StructuralError("functor map index out of range");
  FunctorCheck out;
  out.ok = true;
  for (size_t x = 0; x < f.source.size(); ++x)
    for (size_t y = 0; y < f.source.size(); ++y) {
      const QValue& lhs = f.source.a(x, y);
      const QValue& rhs = f.target.a(f.map[x], f.map[y]);
      if (!leq(lhs, rhs)) {
        out.ok = false;
        out.violations.push_back(LawViolation{
            "functoriality",
            {f.source.objects[x], f.source.objects[y]},
            value_to_string(lhs),
            value_to_string(rhs)});
      }
    }
  return out;
}

bool is_fully_faithful(const VFunctor& f) {
  for (size_t x = 0; x < f.source.size(); ++x)
    for (size_t y = 0; y < f.source.size(); ++y)
      if (!(f.source.a(x, y) == f.target.a(f.map[x], f.map[y]))) return false;
  return true;
}

VFunctor compose_functors(const VFunctor& g, const VFunctor& f) {
  if (!(f.target == g.source))
    throw StructuralError("functor composition endpoint mismatch");
  VFunctor out{f.source, g.target, {}};
  out.map.reserve(f.map.size());
  for (size_t i : f.map) out.map.push_back(g.map[i]);
  return out;
}

QValue functor_distance(const VFunctor& f, const VFunctor& g) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw StructuralError("functor distance needs parallel functors");
  std::vector<QValue> terms;
  terms.reserve(f.source.size());
  for (size_t x = 0; x < f.source.size(); ++x)
    terms.push_back(f.target.a(f.map[x], g.map[x]));
  return meet(f.target.q, terms);
}

QValue exp_distance(const VFunctor& f, const VFunctor& g) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw StructuralError("exp distance needs parallel functors");
  std::vector<QValue> terms;
  for (size_t x1 = 0; x1 < f.source.size(); ++x1)
    for (size_t x2 = 0; x2 < f.source.size(); ++x2)
      terms.push_back(
          heyting(f.source.a(x1, x2), f.target.a(f.map[x1], g.map[x2])));
  return meet(f.target.q, terms);
}

std::vector<size_t> closure(const VCategory& c, const std::vector<size_t>& subset) {
  for (size_t i : subset)
    if (i >= c.size()) throw StructuralError("closure subset index out of range");
  const QValue k = unit_of(c.q);
  std::vector<size_t> out;
  for (size_t x = 0; x < c.size(); ++x) {
    std::vector<QValue> terms;
    terms.reserve(subset.size());
    for (size_t y : subset) terms.push_back(tensor(c.a(x, y), c.a(y, x)));
    if (leq(k, join(c.q, terms))) out.push_back(x);
  }
  return out;
}

std::vector<size_t> basic_open(const VCategory& c, size_t x, const Rat& radius,
                               const Rat& level) {
  if (c.q != QuantaleId::delta)
    throw StructuralError("basic_open applies to delta categories only");
  if (x >= c.size()) throw StructuralError("basic_open center out of range");
  std::vector<size_t> out;
  for (size_t y = 0; y < c.size(); ++y)
    if (c.a(x, y).as_delta().at(radius) > level &&
        c.a(y, x).as_delta().at(radius) > level)
      out.push_back(y);
  return out;
}

void check_sequence(const EPSequence& s) {
  check_shape(s.base);
  if (s.cycle.empty()) throw StructuralError("sequence cycle must be nonempty");
  for (size_t i : s.preamble)
    if (i >= s.base.size()) throw StructuralError("preamble index out of range");
  for (size_t i : s.cycle)
    if (i >= s.base.size()) throw StructuralError("cycle index out of range");
}

std::vector<size_t> cycle_support(const EPSequence& s) {
  std::vector<size_t> out = s.cycle;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool sequence_converges_topologically(const EPSequence& s, size_t x) {
  check_sequence(s);
  if (x >= s.base.size()) throw StructuralError("limit index out of range");
  std::vector<size_t> support = cycle_support(s);
  size_t m = support.size();
  // every infinite index set visits some nonempty subset of the cycle support
  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    std::vector<size_t> sub;
    for (size_t i = 0; i < m; ++i)
      if (mask & (size_t(1) << i)) sub.push_back(support[i]);
    std::vector<size_t> cl = closure(s.base, sub);
    if (!std::binary_search(cl.begin(), cl.end(), x)) return false;
  }
  return true;
}

}  // namespace qcat
