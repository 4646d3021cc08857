#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcat/basechange.hpp"
#include "support/gen.hpp"

using namespace qcat;

namespace {

QMorphism mo(const std::string& name, QuantaleId to) {
  std::optional<QMorphism> m = morphism_by_name(name, to);
  REQUIRE(m.has_value());
  return *m;
}

QMorphism mo(const std::string& name) {
  std::optional<QMorphism> m = morphism_by_name(name);
  REQUIRE(m.has_value());
  return *m;
}

}  // namespace

TEST_CASE("the morphism table lists every implemented map once") {
  const auto& table = morphism_table();
  CHECK(table.size() == 14);
  size_t lax = 0, inexact = 0;
  for (const QMorphism& m : table) {
    if (m.kind == MorphKind::lax) ++lax;
    if (m.inexact) ++inexact;
  }
  CHECK(lax == 4);
  CHECK(inexact == 2);
}

TEST_CASE("name lookup disambiguates by target") {
  CHECK(!morphism_by_name("I").has_value());
  CHECK(mo("I", QuantaleId::cost).target == QuantaleId::cost);
  CHECK(mo("I_inf").source == QuantaleId::cost);
  CHECK(mo("O_inf").target == QuantaleId::cost);
  CHECK(!morphism_by_name("missing").has_value());
}

TEST_CASE("embeddings send truth to the unit") {
  for (QuantaleId q : {QuantaleId::cost, QuantaleId::unit, QuantaleId::delta}) {
    QMorphism i = mo("I", q);
    CHECK(apply_value(i, QValue::bool2(true)) == unit_of(q));
    CHECK(apply_value(i, QValue::bool2(false)) == bottom_of(q));
  }
}

TEST_CASE("support and kernel maps split values at the bottom and the unit") {
  for (const QMorphism& m : morphism_table()) {
    if (m.name == "O") {
      CHECK(apply_value(m, bottom_of(m.source)) == QValue::bool2(false));
      CHECK(apply_value(m, unit_of(m.source)) == QValue::bool2(true));
      if (m.source == QuantaleId::cost)
        CHECK(apply_value(m, QValue::cost(Rat(5))) == QValue::bool2(true));
    }
    if (m.name == "P") {
      CHECK(apply_value(m, unit_of(m.source)) == QValue::bool2(true));
      CHECK(apply_value(m, bottom_of(m.source)) == QValue::bool2(false));
      // strictly below the unit maps to false even when positive
      if (m.source == QuantaleId::cost)
        CHECK(apply_value(m, QValue::cost(Rat(1, 3))) == QValue::bool2(false));
      if (m.source == QuantaleId::unit)
        CHECK(apply_value(m, QValue::unit(Rat(2, 3))) == QValue::bool2(false));
    }
  }
}

TEST_CASE("the infinite scale maps move jumps, not heights") {
  QMorphism ii = mo("I_inf"), oi = mo("O_inf"), pi = mo("P_inf");
  CHECK(apply_value(ii, QValue::cost(Rat(3, 2))) ==
        QValue::delta(StepFn::generator(Rat(3, 2), Rat(1))));
  CHECK(apply_value(ii, QValue::cost_inf()) == bottom_of(QuantaleId::delta));

  CHECK(apply_value(oi, QValue::delta(StepFn::generator(Rat(2), Rat(1, 2)))) ==
        QValue::cost(Rat(2)));
  CHECK(apply_value(oi, bottom_of(QuantaleId::delta)) == QValue::cost_inf());

  // the kernel map sees only distributions that reach one
  CHECK(apply_value(pi, QValue::delta(StepFn::generator(Rat(2), Rat(1, 2)))) ==
        QValue::cost_inf());
  CHECK(apply_value(pi, QValue::delta(StepFn::generator(Rat(2), Rat(1)))) ==
        QValue::cost(Rat(2)));

  testgen::TestRng r(71);
  for (int i = 0; i < 60; ++i) {
    QValue x = testgen::random_value(QuantaleId::cost, r);
    QValue f = apply_value(ii, x);
    CHECK(apply_value(oi, f) == x);
    CHECK(apply_value(pi, f) == x);
  }
}

TEST_CASE("inexact maps are gated") {
  QMorphism e = mo("E"), l = mo("L");
  CHECK_THROWS_AS(apply_value(e, QValue::cost(Rat(1))), StructuralError);
  CHECK_THROWS_AS(apply_value(l, QValue::unit(Rat(1, 2))), StructuralError);
  CHECK(apply_value(e, QValue::cost(Rat(0)), true) == QValue::unit(Rat(1)));
  CHECK(apply_value(e, QValue::cost_inf(), true) == QValue::unit(Rat(0)));
  CHECK(apply_value(l, QValue::unit(Rat(1)), true) == QValue::cost(Rat(0)));
  CHECK(apply_value(l, QValue::unit(Rat(0)), true) == QValue::cost_inf());
}

TEST_CASE("every table row behaves as its kind prescribes") {
  for (const QMorphism& m : morphism_table()) {
    CAPTURE(m.name);
    CAPTURE(quantale_name(m.source));
    MorphismLawReport rep = morphism_law_suite(m, sample_values(m.source, 40));
    for (const MorphismLawCheck& c : rep.checks) {
      CAPTURE(c.law);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK(rep.as_expected());
    if (m.kind == MorphKind::lax && !m.inexact) {
      bool has_expected_failure = false;
      for (const MorphismLawCheck& c : rep.checks)
        if (c.expected_failure) {
          has_expected_failure = true;
          CHECK(c.passed);
          CHECK(c.detail.find("sup=") != std::string::npos);
        }
      CHECK(has_expected_failure);
    }
  }
}

TEST_CASE("adjunction triples hold on samples") {
  for (QuantaleId v : {QuantaleId::cost, QuantaleId::unit, QuantaleId::delta}) {
    QMorphism i = mo("I", v);
    std::optional<QMorphism> o;
    for (const QMorphism& m : morphism_table())
      if (m.name == "O" && m.source == v) o = m;
    REQUIRE(o.has_value());
    std::vector<QValue> vs = sample_values(v, 25);
    for (const QValue& x : vs)
      for (bool b : {false, true}) {
        CHECK(leq(apply_value(*o, x), QValue::bool2(b)) ==
              leq(x, apply_value(i, QValue::bool2(b))));
      }
  }
  QMorphism ii = mo("I_inf"), oi = mo("O_inf"), pi = mo("P_inf");
  std::vector<QValue> cs = sample_values(QuantaleId::cost, 25);
  std::vector<QValue> ds = sample_values(QuantaleId::delta, 25);
  for (const QValue& f : ds)
    for (const QValue& x : cs) {
      CHECK(leq(apply_value(oi, f), x) == leq(f, apply_value(ii, x)));
      CHECK(leq(apply_value(ii, x), f) == leq(x, apply_value(pi, f)));
    }
}

TEST_CASE("categories transport along exact morphisms") {
  testgen::TestRng r(72);
  for (const QMorphism& m : morphism_table()) {
    if (m.inexact) continue;
    VCategory c = testgen::random_category(m.source, 3, r);
    VCategory image = apply_category(m, c);
    CHECK(image.q == m.target);
    CHECK(validate_category(image).ok);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        CHECK(image.a(i, j) == apply_value(m, c.a(i, j)));
  }
}

TEST_CASE("graph adjunctions survive transport") {
  testgen::TestRng r(73);
  for (const QMorphism& m : morphism_table()) {
    if (m.inexact) continue;
    for (int i = 0; i < 5; ++i) {
      VFunctor f = testgen::random_functor(m.source, 2, 2, r);
      auto [lower, upper] = functor_graph(f);
      VModule tl = apply_module(m, lower), tu = apply_module(m, upper);
      CHECK(validate_module(tl).ok);
      CHECK(validate_module(tu).ok);
      CAPTURE(m.name);
      CHECK(check_adjoint(tl, tu).ok);
    }
  }
}

TEST_CASE("transported functors keep their graphs") {
  testgen::TestRng r(74);
  for (const QMorphism& m : morphism_table()) {
    if (m.inexact) continue;
    VFunctor f = testgen::random_functor(m.source, 2, 3, r);
    VFunctor tf{apply_category(m, f.source), apply_category(m, f.target), f.map};
    CHECK(check_functor(tf).ok);
    auto [lower, upper] = functor_graph(f);
    auto [tlower, tupper] = functor_graph(tf);
    CHECK(apply_module(m, lower) == tlower);
    CHECK(apply_module(m, upper) == tupper);
  }
}
