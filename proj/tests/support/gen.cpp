#include "support/gen.hpp"

#include <algorithm>

namespace qcat::testgen {

Rat TestRng::rat(unsigned num_range, unsigned den_range) {
  unsigned num = static_cast<unsigned>(eng() % num_range);
  unsigned den = 1 + static_cast<unsigned>(eng() % den_range);
  return Rat(num, den);
}

Rat TestRng::unit_rat(unsigned den_range) {
  unsigned den = 1 + static_cast<unsigned>(eng() % den_range);
  unsigned num = static_cast<unsigned>(eng() % (den + 1));
  return Rat(num, den);
}

Rat TestRng::pos_unit_rat(unsigned den_range) {
  unsigned den = 1 + static_cast<unsigned>(eng() % den_range);
  unsigned num = 1 + static_cast<unsigned>(eng() % den);
  return Rat(num, den);
}

StepFn random_stepfn(TestRng& r, size_t max_jumps, unsigned den_range) {
  size_t jumps = r.below(max_jumps + 1);
  std::vector<StepFn::Gen> gens;
  for (size_t i = 0; i < jumps; ++i)
    gens.push_back({r.rat(6, den_range), r.pos_unit_rat(den_range)});
  return StepFn::from_generators(std::move(gens));
}

QValue random_value(QuantaleId q, TestRng& r) {
  switch (q) {
    case QuantaleId::bool2:
      return QValue::bool2(r.coin());
    case QuantaleId::cost:
      if (r.below(8) == 0) return QValue::cost_inf();
      return QValue::cost(r.rat(12, 4));
    case QuantaleId::unit:
      return QValue::unit(r.unit_rat());
    case QuantaleId::delta:
      return QValue::delta(random_stepfn(r));
  }
  throw std::logic_error("unreachable quantale id");
}

namespace {

std::vector<std::string> object_names(size_t n) {
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

/** Category-sized entries: smaller denominators so closures stay small. */
QValue entry_value(QuantaleId q, TestRng& r) {
  switch (q) {
    case QuantaleId::bool2:
      return QValue::bool2(r.coin());
    case QuantaleId::cost:
      if (r.below(6) == 0) return QValue::cost_inf();
      return QValue::cost(r.rat(8, 3));
    case QuantaleId::unit:
      return QValue::unit(r.unit_rat(6));
    case QuantaleId::delta:
      return QValue::delta(random_stepfn(r, 2, 4));
  }
  throw std::logic_error("unreachable quantale id");
}

}  // namespace

VCategory random_raw_matrix(QuantaleId q, size_t n, TestRng& r) {
  VCategory c;
  c.q = q;
  c.objects = object_names(n);
  c.hom.assign(n, std::vector<QValue>(n, bottom_of(q)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c.hom[i][j] = entry_value(q, r);
  return c;
}

VCategory random_category(QuantaleId q, size_t n, TestRng& r) {
  return path_closure(random_raw_matrix(q, n, r));
}

VCategory random_symmetric_category(QuantaleId q, size_t n, TestRng& r) {
  VCategory c = random_raw_matrix(q, n, r);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) c.hom[j][i] = c.hom[i][j];
  VCategory closed = path_closure(c);
  // closure of a symmetric matrix is symmetric; keep the guarantee explicit
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!(closed.hom[i][j] == closed.hom[j][i]))
        throw std::logic_error("symmetric closure lost symmetry");
  return closed;
}

VFunctor random_functor(QuantaleId q, size_t nx, size_t ny, TestRng& r) {
  VFunctor f;
  f.target = random_category(q, ny, r);
  f.map.resize(nx);
  for (size_t i = 0; i < nx; ++i) f.map[i] = r.below(ny);

  VCategory extra = random_category(q, nx, r);
  f.source.q = q;
  f.source.objects = object_names(nx);
  f.source.hom.assign(nx, std::vector<QValue>(nx, bottom_of(q)));
  // meet of two category structures is one, and stays below the pullback
  for (size_t i = 0; i < nx; ++i)
    for (size_t j = 0; j < nx; ++j)
      f.source.hom[i][j] =
          meet2(f.target.hom[f.map[i]][f.map[j]], extra.hom[i][j]);
  return f;
}

VModule random_module(const VCategory& x, const VCategory& y, TestRng& r) {
  size_t nx = x.size(), ny = y.size();
  Matrix raw(nx, std::vector<QValue>(ny, bottom_of(x.q)));
  for (size_t i = 0; i < nx; ++i)
    for (size_t j = 0; j < ny; ++j) raw[i][j] = entry_value(x.q, r);

  VModule m{x, y, Matrix(nx, std::vector<QValue>(ny, bottom_of(x.q)))};
  for (size_t i = 0; i < nx; ++i)
    for (size_t j = 0; j < ny; ++j) {
      std::vector<QValue> parts;
      for (size_t i2 = 0; i2 < nx; ++i2)
        for (size_t j2 = 0; j2 < ny; ++j2)
          parts.push_back(
              tensor(x.a(i, i2), tensor(raw[i2][j2], y.a(j2, j))));
      m.phi[i][j] = join(x.q, parts);
    }
  return m;
}

Presheaf random_presheaf(const VCategory& c, TestRng& r) {
  size_t n = c.size();
  std::vector<QValue> seed(n);
  for (size_t i = 0; i < n; ++i) seed[i] = entry_value(c.q, r);
  Presheaf p{c, std::vector<QValue>(n, bottom_of(c.q))};
  for (size_t i = 0; i < n; ++i) {
    std::vector<QValue> parts;
    for (size_t j = 0; j < n; ++j) parts.push_back(tensor(c.a(i, j), seed[j]));
    p.values[i] = join(c.q, parts);
  }
  return p;
}

Copresheaf random_copresheaf(const VCategory& c, TestRng& r) {
  size_t n = c.size();
  std::vector<QValue> seed(n);
  for (size_t i = 0; i < n; ++i) seed[i] = entry_value(c.q, r);
  Copresheaf p{c, std::vector<QValue>(n, bottom_of(c.q))};
  for (size_t i = 0; i < n; ++i) {
    std::vector<QValue> parts;
    for (size_t j = 0; j < n; ++j) parts.push_back(tensor(seed[j], c.a(j, i)));
    p.values[i] = join(c.q, parts);
  }
  return p;
}

EPSequence random_sequence(const VCategory& c, TestRng& r, size_t max_preamble,
                           size_t max_cycle) {
  EPSequence s;
  s.base = c;
  size_t pre = r.below(max_preamble + 1);
  size_t cyc = 1 + r.below(max_cycle);
  for (size_t i = 0; i < pre; ++i) s.preamble.push_back(r.below(c.size()));
  for (size_t i = 0; i < cyc; ++i) s.cycle.push_back(r.below(c.size()));
  return s;
}

const std::vector<VCategory>& bool2_preorders_upto3() {
  static const std::vector<VCategory> corpus = [] {
    std::vector<VCategory> out;
    for (size_t n = 1; n <= 3; ++n) {
      size_t cells = n * n;
      for (uint64_t mask = 0; mask < (uint64_t(1) << cells); ++mask) {
        auto bit = [&](size_t i, size_t j) {
          return ((mask >> (i * n + j)) & 1) != 0;
        };
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) ok = bit(i, i);
        for (size_t i = 0; i < n && ok; ++i)
          for (size_t j = 0; j < n && ok; ++j)
            for (size_t k = 0; k < n && ok; ++k)
              if (bit(i, j) && bit(j, k) && !bit(i, k)) ok = false;
        if (!ok) continue;
        VCategory c;
        c.q = QuantaleId::bool2;
        c.objects = object_names(n);
        c.hom.assign(n, std::vector<QValue>(n, QValue::bool2(false)));
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) c.hom[i][j] = QValue::bool2(bit(i, j));
        out.push_back(std::move(c));
      }
    }
    return out;
  }();
  return corpus;
}

}  // namespace qcat::testgen
