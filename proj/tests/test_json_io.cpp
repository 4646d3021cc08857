#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qcat/json_io.hpp"
#include "support/gen.hpp"

using namespace qcat;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("qcat_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(reinterpret_cast<uintptr_t>(this)));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  fs::path write(const std::string& name, const std::string& text) {
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
  }
};

const char* kLine2 = R"({
  "quantale": "cost",
  "objects": ["a", "b"],
  "hom": [[0, 1], [1, 0]]
})";

}  // namespace

TEST_CASE("floats are rejected with a repair hint unless allowed") {
  CHECK_THROWS_WITH_AS(parse_document("{\"x\": 0.5}"),
                       doctest::Contains("inexact numeric literal"), ParseError);
  json j = parse_document("{\"x\": 0.5}", {.allow_float = true});
  CHECK(j["x"] == "1/2");
  json k = parse_document("{\"x\": 2e-3}", {.allow_float = true});
  CHECK(k["x"] == "1/500");
}

TEST_CASE("exact decimals stay exact through the float path") {
  json j = parse_document("[0.25, 0.1, 1.25]", {.allow_float = true});
  CHECK(j[0] == "1/4");
  CHECK(j[1] == "1/10");
  CHECK(j[2] == "5/4");
}

TEST_CASE("oversized integers never lose precision") {
  std::string big = "123456789012345678901234567890";
  json j = parse_document("{\"x\": " + big + "}");
  CHECK(j["x"] == big);
  CHECK(rat_from_json(j["x"]) == Rat(Int(big)));
}

TEST_CASE("bad json is a parse error") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document("[1,]"), ParseError);
  CHECK_THROWS_AS(parse_document(""), ParseError);
}

TEST_CASE("values round trip through json") {
  testgen::TestRng r(91);
  const QuantaleId all[] = {QuantaleId::bool2, QuantaleId::cost, QuantaleId::unit,
                            QuantaleId::delta};
  for (QuantaleId q : all)
    for (int i = 0; i < 40; ++i) {
      QValue v = testgen::random_value(q, r);
      CHECK(q_value_from_json(q, q_value_to_json(v)) == v);
    }
  CHECK(q_value_from_json(QuantaleId::cost, json("inf")) == QValue::cost_inf());
  CHECK(q_value_to_json(QValue::cost_inf()) == json("inf"));
  CHECK(q_value_from_json(QuantaleId::cost, json("3/2")) == QValue::cost(Rat(3, 2)));
}

TEST_CASE("non canonical distributions are rejected with the repaired form") {
  json bad = json::array({json::array({2, "1/2"}), json::array({1, "1/2"})});
  CHECK_THROWS_WITH_AS(q_value_from_json(QuantaleId::delta, bad),
                       doctest::Contains("canonical form is [[1,\"1/2\"]]"),
                       ParseError);
}

TEST_CASE("value kind mismatches are parse errors") {
  CHECK_THROWS_AS(q_value_from_json(QuantaleId::bool2, json(1)), ParseError);
  CHECK_THROWS_AS(q_value_from_json(QuantaleId::unit, json("x")), ParseError);
  CHECK_THROWS_AS(q_value_from_json(QuantaleId::delta, json("x")), ParseError);
  CHECK_THROWS_AS(q_value_from_json(QuantaleId::cost, json(nullptr)), ParseError);
}

TEST_CASE("category documents parse, print and reject unknown fields") {
  VCategory c = category_from_json(parse_document(kLine2));
  CHECK(c.q == QuantaleId::cost);
  CHECK(c.objects == std::vector<std::string>{"a", "b"});
  CHECK(c.a(0, 1) == QValue::cost(Rat(1)));
  CHECK(category_from_json(category_to_json(c)) == c);

  json extra = parse_document(kLine2);
  extra["comment"] = "hi";
  CHECK_THROWS_WITH_AS(category_from_json(extra),
                       doctest::Contains("unknown field"), ParseError);
  json missing = parse_document(kLine2);
  missing.erase("hom");
  CHECK_THROWS_AS(category_from_json(missing), ParseError);
}

TEST_CASE("documents round trip for every kind") {
  testgen::TestRng r(92);
  const QuantaleId all[] = {QuantaleId::bool2, QuantaleId::cost, QuantaleId::unit,
                            QuantaleId::delta};
  for (QuantaleId q : all) {
    VCategory x = testgen::random_category(q, 3, r);
    VCategory y = testgen::random_category(q, 2, r);
    CHECK(category_from_json(category_to_json(x)) == x);

    VModule m = testgen::random_module(x, y, r);
    CHECK(module_from_json(module_to_json(m)) == m);

    Presheaf p = testgen::random_presheaf(x, r);
    Presheaf p2 = presheaf_from_json(presheaf_to_json(p));
    CHECK(p2.base == p.base);
    CHECK(p2.values == p.values);

    VFunctor f = testgen::random_functor(q, 2, 2, r);
    VFunctor f2 = functor_from_json(functor_to_json(f));
    CHECK(f2.source == f.source);
    CHECK(f2.target == f.target);
    CHECK(f2.map == f.map);

    EPSequence s = testgen::random_sequence(x, r);
    EPSequence s2 = sequence_from_json(sequence_to_json(s));
    CHECK(s2.base == s.base);
    CHECK(s2.preamble == s.preamble);
    CHECK(s2.cycle == s.cycle);

    std::vector<QValue> vals = sample_values(q, 8);
    CHECK(value_list_from_json(value_list_to_json(q, vals)) == vals);
  }
}

TEST_CASE("embedded categories resolve as file paths") {
  TempDir tmp;
  tmp.write("base.json", kLine2);
  tmp.write("mod.json", R"({
    "source": "base.json",
    "target": "base.json",
    "phi": [[0, 1], [1, 0]]
  })");
  ParseOptions opt;
  opt.base_dir = tmp.dir;
  VModule m = module_from_json(load_document(tmp.dir / "mod.json", opt), opt);
  CHECK(m.source.objects == std::vector<std::string>{"a", "b"});
  CHECK(m.target == m.source);
  CHECK(validate_module(m).ok);

  SUBCASE("paths resolve relative to the referring document") {
    fs::create_directories(tmp.dir / "sub");
    tmp.write("sub/inner.json", kLine2);
    tmp.write("sub/mod2.json", R"({
      "source": "inner.json",
      "target": "inner.json",
      "phi": [[0, 1], [1, 0]]
    })");
    ParseOptions sub;
    sub.base_dir = tmp.dir / "sub";
    VModule m2 =
        module_from_json(load_document(tmp.dir / "sub" / "mod2.json", sub), sub);
    CHECK(m2.source.objects.size() == 2);
  }

  SUBCASE("missing files are parse errors") {
    tmp.write("dangling.json", R"({
      "source": "nowhere.json",
      "target": "nowhere.json",
      "phi": [[0]]
    })");
    ParseOptions opt2;
    opt2.base_dir = tmp.dir;
    CHECK_THROWS_AS(
        module_from_json(load_document(tmp.dir / "dangling.json", opt2), opt2),
        ParseError);
  }
}

TEST_CASE("malformed documents name the offending field") {
  CHECK_THROWS_WITH_AS(
      category_from_json(parse_document(
          R"({"quantale": "river", "objects": ["a"], "hom": [[true]]})")),
      doctest::Contains("river"), StructuralError);
  CHECK_THROWS_AS(category_from_json(parse_document(
                      R"({"quantale": "cost", "objects": ["a", "a"],
                          "hom": [[0, 0], [0, 0]]})")),
                  StructuralError);
  CHECK_THROWS_AS(category_from_json(parse_document(
                      R"({"quantale": "cost", "objects": ["a", "b"],
                          "hom": [[0], [0]]})")),
                  StructuralError);
}
