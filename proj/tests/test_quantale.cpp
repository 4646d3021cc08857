#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcat/quantale.hpp"
#include "support/gen.hpp"

using namespace qcat;

namespace {

const QuantaleId kAll[] = {QuantaleId::bool2, QuantaleId::cost, QuantaleId::unit,
                           QuantaleId::delta};

Rat R(const char* s) { return *rat_from_string(s); }

}  // namespace

TEST_CASE("rational parsing accepts integers, fractions and exact decimals") {
  CHECK(R("25") == Rat(25));
  CHECK(R("-3") == Rat(-3));
  CHECK(R("3/4") == Rat(3, 4));
  CHECK(R("1.25") == Rat(5, 4));
  CHECK(R("2e-3") == Rat(1, 500));
  CHECK(R("1e2") == Rat(100));
  CHECK(rat_to_string(Rat(7, 2)) == "7/2");
  CHECK(rat_to_string(Rat(-7)) == "-7");
}

TEST_CASE("digits with leading zeros are decimal") {
  // 0.25 concatenates "0" and "25"; the integer parser must not read octal
  CHECK(R("0.25") == Rat(1, 4));
  CHECK(R("0.5") == Rat(1, 2));
  CHECK(R("007") == Rat(7));
  CHECK(R("0.007") == Rat(7, 1000));
  CHECK(R("10.08") == Rat(252, 25));
}

TEST_CASE("rational parsing rejects garbage") {
  CHECK(!rat_from_string("").has_value());
  CHECK(!rat_from_string("abc").has_value());
  CHECK(!rat_from_string("1/0").has_value());
  CHECK(!rat_from_string("1..2").has_value());
  CHECK(!rat_from_string("1 /2").has_value());
}

TEST_CASE("cost order is reversed") {
  QValue two = QValue::cost(Rat(2)), one = QValue::cost(Rat(1));
  CHECK(leq(two, one));
  CHECK(!leq(one, two));
  CHECK(leq(QValue::cost_inf(), two));
  CHECK(unit_of(QuantaleId::cost) == QValue::cost(Rat(0)));
  CHECK(bottom_of(QuantaleId::cost) == QValue::cost_inf());
  CHECK(top_of(QuantaleId::cost) == QValue::cost(Rat(0)));
  CHECK(join2(two, one) == one);
  CHECK(meet2(two, one) == two);
}

TEST_CASE("cost residuals are truncated differences") {
  auto c = [](long n) { return QValue::cost(Rat(n)); };
  CHECK(hom(c(1), c(3)) == c(2));
  CHECK(hom(c(3), c(1)) == c(0));
  CHECK(hom(QValue::cost_inf(), c(5)) == c(0));
  CHECK(hom(c(1), QValue::cost_inf()) == QValue::cost_inf());
  CHECK(hom(QValue::cost_inf(), QValue::cost_inf()) == c(0));
  CHECK(heyting(c(3), c(2)) == c(0));
  CHECK(heyting(c(1), c(2)) == c(2));
  CHECK(tensor(QValue::cost_inf(), c(0)) == QValue::cost_inf());
}

TEST_CASE("unit residuals are truncated quotients") {
  auto u = [](int p, int q) { return QValue::unit(Rat(p, q)); };
  CHECK(hom(u(1, 2), u(1, 4)) == u(1, 2));
  CHECK(hom(u(1, 4), u(1, 2)) == u(1, 1));
  CHECK(hom(u(0, 1), u(1, 3)) == u(1, 1));
  CHECK(heyting(u(1, 2), u(1, 4)) == u(1, 4));
  CHECK(heyting(u(1, 4), u(1, 2)) == u(1, 1));
}

TEST_CASE("empty joins and meets are the lattice bounds") {
  for (QuantaleId q : kAll) {
    CAPTURE(quantale_name(q));
    CHECK(join(q, {}) == bottom_of(q));
    CHECK(meet(q, {}) == top_of(q));
    CHECK(unit_is_top(q));
  }
}

TEST_CASE("residuation and heyting contracts hold on samples") {
  for (QuantaleId q : kAll) {
    CAPTURE(quantale_name(q));
    std::vector<QValue> vs = sample_values(q, 14);
    for (const QValue& u : vs)
      for (const QValue& v : vs) {
        QValue r = hom(u, v);
        CHECK(leq(tensor(u, r), v));
        QValue h = heyting(u, v);
        CHECK(leq(meet2(u, h), v));
        for (const QValue& w : vs) {
          CHECK(leq(tensor(u, w), v) == leq(w, r));
          CHECK(leq(meet2(u, w), v) == leq(w, h));
        }
      }
  }
}

TEST_CASE("law suite passes on every instance") {
  for (QuantaleId q : kAll) {
    CAPTURE(quantale_name(q));
    LawReport rep = quantale_law_suite(q, sample_values(q, 40));
    for (const LawCheck& c : rep.checks) {
      CAPTURE(c.law);
      CAPTURE(c.counterexample);
      CHECK(c.passed);
    }
    CHECK(rep.all_passed());
    if (q == QuantaleId::bool2) CHECK(rep.exhaustive_triples);
  }
}

TEST_CASE("sample_values is deterministic and rich") {
  for (QuantaleId q : kAll) {
    std::vector<QValue> a = sample_values(q, 200);
    std::vector<QValue> b = sample_values(q, 200);
    CHECK(a == b);
    if (q == QuantaleId::bool2)
      CHECK(a.size() == 2);
    else
      CHECK(a.size() >= 200);
    for (size_t i = 0; i + 1 < a.size(); ++i) CHECK(value_less(a[i], a[i + 1]));
  }
}

TEST_CASE("approximating units rise toward the unit from totally below") {
  for (QuantaleId q : kAll) {
    CAPTURE(quantale_name(q));
    for (unsigned n = 1; n <= 6; ++n) {
      QValue un = approximating_unit(q, n);
      CHECK(leq(approximating_unit(q, n), approximating_unit(q, n + 1)));
      CHECK(totally_below(un, unit_of(q)));
    }
  }
}

TEST_CASE("totally below is stricter than the order") {
  testgen::TestRng r(7);
  for (QuantaleId q : kAll)
    for (int i = 0; i < 60; ++i) {
      QValue u = testgen::random_value(q, r);
      QValue v = testgen::random_value(q, r);
      if (totally_below(u, v)) CHECK(leq(u, v));
    }
  CHECK(totally_below(QValue::cost(Rat(2)), QValue::cost(Rat(1))));
  CHECK(!totally_below(QValue::cost(Rat(1)), QValue::cost(Rat(1))));
  CHECK(totally_below(bottom_of(QuantaleId::unit), bottom_of(QuantaleId::unit)));
}
