#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcat/cauchy.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace qcat;

namespace {

const QuantaleId kAll[] = {QuantaleId::bool2, QuantaleId::cost, QuantaleId::unit,
                           QuantaleId::delta};

VCategory cost_pair(long dist) {
  VCategory c;
  c.q = QuantaleId::cost;
  c.objects = {"a", "b"};
  auto d = [](long n) { return QValue::cost(Rat(n)); };
  c.hom = {{d(0), d(dist)}, {d(dist), d(0)}};
  return c;
}

}  // namespace

TEST_CASE("yoneda presheaves are valid and reproduce the hom") {
  testgen::TestRng r(61);
  for (QuantaleId q : kAll)
    for (int i = 0; i < 10; ++i) {
      VCategory c = testgen::random_category(q, 1 + r.below(4), r);
      for (size_t x = 0; x < c.size(); ++x) {
        Presheaf yx = yoneda(c, x);
        CHECK(validate_presheaf(yx).ok);
        for (size_t y = 0; y < c.size(); ++y)
          CHECK(presheaf_dist(yx, yoneda(c, y)) == c.a(x, y));
      }
    }
}

TEST_CASE("presheaf distance computes the yoneda pairing") {
  testgen::TestRng r(62);
  for (QuantaleId q : kAll)
    for (int i = 0; i < 20; ++i) {
      VCategory c = testgen::random_category(q, 1 + r.below(5), r);
      Presheaf psi = testgen::random_presheaf(c, r);
      REQUIRE(validate_presheaf(psi).ok);
      for (size_t x = 0; x < c.size(); ++x)
        CHECK(presheaf_dist(yoneda(c, x), psi) == psi.values[x]);
    }
}

TEST_CASE("candidate left adjoints are copresheaves") {
  testgen::TestRng r(63);
  for (QuantaleId q : kAll)
    for (int i = 0; i < 10; ++i) {
      VCategory c = testgen::random_category(q, 1 + r.below(4), r);
      Presheaf psi = testgen::random_presheaf(c, r);
      Copresheaf cand = candidate_left_adjoint(psi);
      CHECK(validate_copresheaf(cand).ok);
    }
}

TEST_CASE("representables are right adjoints") {
  testgen::TestRng r(64);
  for (QuantaleId q : kAll)
    for (int i = 0; i < 8; ++i) {
      VCategory c = testgen::random_category(q, 1 + r.below(4), r);
      size_t x = r.below(c.size());
      Presheaf yx = yoneda(c, x);
      AdjointPresheafResult res = is_right_adjoint(yx);
      CHECK(res.adjoint);
      std::optional<size_t> rep = is_representable(yx);
      REQUIRE(rep.has_value());
      CHECK(yoneda(c, *rep).values == yx.values);
    }
}

TEST_CASE("the halfway presheaf on a unit gap is not adjoint") {
  VCategory c = cost_pair(1);
  Presheaf psi{c, {QValue::cost(Rat(1, 2)), QValue::cost(Rat(1, 2))}};
  REQUIRE(validate_presheaf(psi).ok);
  AdjointPresheafResult res = is_right_adjoint(psi);
  CHECK(!res.adjoint);
  REQUIRE(res.refutation.has_value());
  CHECK(res.refutation->law.find("maximal candidate") != std::string::npos);
  CHECK(!is_representable(psi).has_value());
}

TEST_CASE("completeness agrees with the relational brute force") {
  const auto& corpus = testgen::bool2_preorders_upto3();
  REQUIRE(corpus.size() == 34);
  for (const VCategory& c : corpus) {
    CompletenessReport lib = is_cauchy_complete_bool2(c);
    oracle::BruteCompleteness ora = oracle::brute_cauchy_complete(c);
    CHECK(lib.complete == ora.complete);
    CHECK(lib.presheaf_count == ora.presheaf_count);
    CHECK(lib.complete == lib.witnesses.empty());
  }
}

TEST_CASE("adjoint enumeration agrees with the relational brute force") {
  testgen::TestRng r(65);
  const auto& corpus = testgen::bool2_preorders_upto3();
  for (const VCategory& c : corpus)
    for (int i = 0; i < 4; ++i) {
      Presheaf psi = testgen::random_presheaf(c, r);
      std::vector<char> raw(c.size());
      for (size_t j = 0; j < c.size(); ++j) raw[j] = psi.values[j].as_bool() ? 1 : 0;
      oracle::BruteAdjointness ora = oracle::brute_presheaf_adjoint(c, raw);
      AdjointPresheafResult lib = is_right_adjoint(psi);
      CHECK(lib.adjoint == ora.adjoint);
      if (ora.adjoint) {
        REQUIRE(ora.valid_left_adjoints.size() == 1);
        for (size_t j = 0; j < c.size(); ++j)
          CHECK(lib.candidate.values[j].as_bool() ==
                (ora.valid_left_adjoints[0][j] != 0));
      }
    }
}

TEST_CASE("cauchy measure closed form equals truncation") {
  testgen::TestRng r(66);
  for (QuantaleId q : kAll)
    for (int i = 0; i < 12; ++i) {
      VCategory c = testgen::random_category(q, 1 + r.below(4), r);
      EPSequence s = testgen::random_sequence(c, r);
      CHECK(cauchy_measure(s) == oracle::truncated_cauchy_measure(s, 50));
    }
}

TEST_CASE("constant sequences are cauchy and converge to their value") {
  VCategory c = cost_pair(3);
  EPSequence s{c, {1}, {0}};
  CHECK(is_cauchy(s));
  CHECK(cauchy_measure(s) == QValue::cost(Rat(0)));
  ConvergenceResult at0 = converges_module(s, 0);
  CHECK(at0.converges);
  CHECK(at0.cauchy);
  CHECK(!converges_module(s, 1).converges);
}

TEST_CASE("spread cycles are not cauchy") {
  VCategory c = cost_pair(3);
  EPSequence s{c, {}, {0, 1}};
  CHECK(!is_cauchy(s));
  CHECK(cauchy_measure(s) == QValue::cost(Rat(3)));
  ConvergenceResult res = converges_module(s, 0);
  CHECK(!res.converges);
  CHECK(!res.cauchy);
}

TEST_CASE("sequence modules are adjoint for cauchy sequences") {
  testgen::TestRng r(67);
  size_t cauchy_seen = 0;
  for (QuantaleId q : kAll)
    for (int i = 0; i < 25; ++i) {
      VCategory c = testgen::random_category(q, 1 + r.below(4), r);
      EPSequence s = testgen::random_sequence(c, r);
      if (!is_cauchy(s)) continue;
      ++cauchy_seen;
      auto [phi, psi] = sequence_modules(s);
      CHECK(validate_copresheaf(phi).ok);
      CHECK(validate_presheaf(psi).ok);
      CHECK(check_adjoint(to_module(phi), to_module(psi)).ok);
    }
  CHECK(cauchy_seen > 0);
}

TEST_CASE("symmetric bases give equal sequence modules") {
  testgen::TestRng r(68);
  for (QuantaleId q : kAll)
    for (int i = 0; i < 10; ++i) {
      VCategory c = testgen::random_symmetric_category(q, 1 + r.below(4), r);
      EPSequence s = testgen::random_sequence(c, r);
      auto [phi, psi] = sequence_modules(s);
      CHECK(phi.values == psi.values);
    }
}

TEST_CASE("module convergence implies topological convergence") {
  testgen::TestRng r(69);
  for (QuantaleId q : kAll)
    for (int i = 0; i < 20; ++i) {
      VCategory c = testgen::random_category(q, 1 + r.below(4), r);
      EPSequence s = testgen::random_sequence(c, r);
      for (size_t x = 0; x < c.size(); ++x)
        if (converges_module(s, x).converges)
          CHECK(sequence_converges_topologically(s, x));
    }
}

TEST_CASE("completion certificates describe the candidate field") {
  VCategory c = cost_pair(1);
  Presheaf half{c, {QValue::cost(Rat(1, 2)), QValue::cost(Rat(1, 2))}};
  CompletionCertificate cert = completion_certificate(c, {half});
  REQUIRE(cert.candidates.size() == 1);
  CHECK(cert.candidates[0].valid_presheaf);
  CHECK(!cert.candidates[0].adjoint);
  CHECK(!cert.candidates[0].representable.has_value());
  CHECK(!cert.incomplete_witness);
  CHECK(cert.yoneda_objects.size() == 2);
  CHECK(validate_category(cert.distances).ok);
  CHECK(cert.symmetric);

  Presheaf rep{c, {QValue::cost(Rat(1)), QValue::cost(Rat(0))}};
  CompletionCertificate cert2 = completion_certificate(c, {rep});
  REQUIRE(cert2.candidates.size() == 1);
  CHECK(cert2.candidates[0].adjoint);
  CHECK(cert2.candidates[0].representable == size_t{1});
  CHECK(!cert2.incomplete_witness);
}
