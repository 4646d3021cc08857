#include "qcat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace qcat {

namespace {

bool looks_integral(const std::string& raw) {
  return raw.find_first_of(".eE") == std::string::npos;
}

/**
 * DOM builder that keeps every numeric literal exact. Plain integers pass
 * through; anything the lexer routes to the float callback (decimals,
 * exponents, oversized integers) is re-read from its raw spelling. Oversized
 * integers are always accepted; genuine float spellings need allow_float and
 * become exact rational strings.
 */
class ExactNumberSax {
public:
  ExactNumberSax(json& out, bool allow_float)
      : dom_(out, true), allow_float_(allow_float) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return dom_.number_unsigned(v); }

  bool number_float(json::number_float_t, const std::string& raw) {
    if (!allow_float_ && !looks_integral(raw)) {
      error_ = "inexact numeric literal " + raw +
               "; write an exact rational string \"p/q\" or pass allow_float";
      return false;
    }
    std::optional<Rat> r = rat_from_string(raw);
    if (!r) {
      error_ = "cannot read numeric literal " + raw;
      return false;
    }
    std::string s = rat_to_string(*r);
    return dom_.string(s);
  }

  bool string(std::string& v) { return dom_.string(v); }
  bool binary(json::binary_t& v) { return dom_.binary(v); }
  bool start_object(size_t n) { return dom_.start_object(n); }
  bool key(std::string& v) { return dom_.key(v); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  bool parse_error(size_t pos, const std::string& tok,
                   const nlohmann::detail::exception& ex) {
    return dom_.parse_error(pos, tok, ex);
  }

  const std::string& error() const { return error_; }

private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
  bool allow_float_;
  std::string error_;
};

}  // namespace

json parse_document(const std::string& text, const ParseOptions& opt) {
  json out;
  ExactNumberSax sax(out, opt.allow_float);
  try {
    if (!json::sax_parse(text, &sax)) {
      throw ParseError(sax.error().empty() ? "unreadable JSON document"
                                           : sax.error());
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return out;
}

json load_document(const std::filesystem::path& file, const ParseOptions& opt) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), opt);
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rat(j.get<std::uint64_t>());
  if (j.is_string()) {
    std::optional<Rat> r = rat_from_string(j.get<std::string>());
    if (!r) throw ParseError("cannot read rational " + j.dump());
    return *r;
  }
  if (j.is_number_float())
    throw ParseError("inexact number " + j.dump() +
                     "; write an exact rational string \"p/q\"");
  throw ParseError("expected a rational, got " + j.dump());
}

json rat_to_json(const Rat& r) {
  if (rat_is_integer(r)) {
    Int n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return n.convert_to<std::int64_t>();
  }
  return rat_to_string(r);
}

QValue q_value_from_json(QuantaleId q, const json& j) {
  switch (q) {
    case QuantaleId::bool2:
      if (!j.is_boolean())
        throw ParseError("expected true or false, got " + j.dump());
      return QValue::bool2(j.get<bool>());
    case QuantaleId::cost:
      if (j.is_string() && j.get<std::string>() == "inf") return QValue::cost_inf();
      return QValue::cost(rat_from_json(j));
    case QuantaleId::unit:
      return QValue::unit(rat_from_json(j));
    case QuantaleId::delta:
      break;
  }
  if (!j.is_array())
    throw ParseError("expected an array of [breakpoint, value] pairs, got " +
                     j.dump());
  std::vector<StepFn::Gen> gens;
  gens.reserve(j.size());
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("expected a [breakpoint, value] pair, got " + pair.dump());
    gens.push_back({rat_from_json(pair[0]), rat_from_json(pair[1])});
  }
  try {
    return QValue::delta(StepFn::from_canonical(gens));
  } catch (const StructuralError&) {
    QValue repaired = QValue::delta(StepFn::from_generators(std::move(gens)));
    throw ParseError("distribution " + j.dump() +
                     " is not canonical; its canonical form is " +
                     q_value_to_json(repaired).dump());
  }
}

json q_value_to_json(const QValue& v) {
  switch (v.id()) {
    case QuantaleId::bool2:
      return v.as_bool();
    case QuantaleId::cost:
      return v.as_cost().infinite ? json("inf") : rat_to_json(v.as_cost().q);
    case QuantaleId::unit:
      return rat_to_json(v.as_unit().u);
    case QuantaleId::delta:
      break;
  }
  json arr = json::array();
  for (const StepFn::Gen& g : v.as_delta().generators())
    arr.push_back(json::array({rat_to_json(g.delta), rat_to_json(g.value)}));
  return arr;
}

namespace {

void require_keys(const json& j, const char* what,
                  std::initializer_list<const char*> keys) {
  if (!j.is_object())
    throw ParseError(std::string(what) + " document must be a JSON object");
  for (const char* k : keys)
    if (!j.contains(k))
      throw ParseError(std::string(what) + " document lacks \"" + k + "\"");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known)
      throw ParseError(std::string(what) + " document has unknown field \"" +
                       item.key() + "\"");
  }
}

std::string get_string(const json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string("expected a string for ") + what + ", got " +
                     j.dump());
  return j.get<std::string>();
}

/** Inline category document or a file path string. */
VCategory category_ref(const json& j, const ParseOptions& opt) {
  if (j.is_string()) {
    std::filesystem::path p = opt.base_dir / j.get<std::string>();
    ParseOptions sub = opt;
    sub.base_dir = p.parent_path();
    return category_from_json(load_document(p, opt), sub);
  }
  return category_from_json(j, opt);
}

Matrix matrix_from_json(QuantaleId q, const json& j, size_t rows, size_t cols,
                        const char* what) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(std::string(what) + " must have " + std::to_string(rows) +
                     " rows");
  Matrix m;
  m.reserve(rows);
  for (const json& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw ParseError(std::string(what) + " rows must have " +
                       std::to_string(cols) + " entries");
    std::vector<QValue> out;
    out.reserve(cols);
    for (const json& cell : row) out.push_back(q_value_from_json(q, cell));
    m.push_back(std::move(out));
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const QValue& v : row) r.push_back(q_value_to_json(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

size_t object_index(const VCategory& c, const std::string& name) {
  std::optional<size_t> i = c.index_of(name);
  if (!i) throw ParseError("unknown object \"" + name + "\"");
  return *i;
}

std::vector<std::string> names_from_json(const json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const json& n : j) out.push_back(get_string(n, what));
  return out;
}

}  // namespace

VCategory category_from_json(const json& j, const ParseOptions& opt) {
  (void)opt;
  require_keys(j, "category", {"quantale", "objects", "hom"});
  VCategory c;
  c.q = quantale_from_name(get_string(j.at("quantale"), "quantale"));
  c.objects = names_from_json(j.at("objects"), "objects");
  c.hom = matrix_from_json(c.q, j.at("hom"), c.objects.size(), c.objects.size(),
                           "hom");
  check_shape(c);
  return c;
}

json category_to_json(const VCategory& c) {
  return json{{"quantale", quantale_name(c.q)},
              {"objects", c.objects},
              {"hom", matrix_to_json(c.hom)}};
}

VModule module_from_json(const json& j, const ParseOptions& opt) {
  require_keys(j, "module", {"source", "target", "phi"});
  VModule m;
  m.source = category_ref(j.at("source"), opt);
  m.target = category_ref(j.at("target"), opt);
  if (m.source.q != m.target.q)
    throw QuantaleMismatch("module endpoints use different quantales");
  m.phi = matrix_from_json(m.source.q, j.at("phi"), m.source.size(),
                           m.target.size(), "phi");
  check_module_shape(m);
  return m;
}

json module_to_json(const VModule& m) {
  return json{{"source", category_to_json(m.source)},
              {"target", category_to_json(m.target)},
              {"phi", matrix_to_json(m.phi)}};
}

Presheaf presheaf_from_json(const json& j, const ParseOptions& opt) {
  require_keys(j, "presheaf", {"base", "psi"});
  Presheaf p;
  p.base = category_ref(j.at("base"), opt);
  const json& vals = j.at("psi");
  if (!vals.is_array() || vals.size() != p.base.size())
    throw ParseError("psi must list one value per base object");
  for (const json& v : vals) p.values.push_back(q_value_from_json(p.base.q, v));
  return p;
}

json presheaf_to_json(const Presheaf& p) {
  json vals = json::array();
  for (const QValue& v : p.values) vals.push_back(q_value_to_json(v));
  return json{{"base", category_to_json(p.base)}, {"psi", std::move(vals)}};
}

VFunctor functor_from_json(const json& j, const ParseOptions& opt) {
  require_keys(j, "functor", {"source", "target", "map"});
  VFunctor f;
  f.source = category_ref(j.at("source"), opt);
  f.target = category_ref(j.at("target"), opt);
  const json& map = j.at("map");
  if (!map.is_object()) throw ParseError("map must be an object of name pairs");
  for (const auto& item : map.items())
    if (std::find(f.source.objects.begin(), f.source.objects.end(),
                  item.key()) == f.source.objects.end())
      throw ParseError("map mentions unknown source object \"" + item.key() +
                       "\"");
  for (const std::string& name : f.source.objects) {
    if (!map.contains(name))
      throw ParseError("map lacks source object \"" + name + "\"");
    f.map.push_back(object_index(f.target, get_string(map.at(name), "map value")));
  }
  return f;
}

json functor_to_json(const VFunctor& f) {
  json map = json::object();
  for (size_t i = 0; i < f.source.size(); ++i)
    map[f.source.objects[i]] = f.target.objects[f.map[i]];
  return json{{"source", category_to_json(f.source)},
              {"target", category_to_json(f.target)},
              {"map", std::move(map)}};
}

EPSequence sequence_from_json(const json& j, const ParseOptions& opt) {
  require_keys(j, "sequence", {"base", "preamble", "cycle"});
  EPSequence s;
  s.base = category_ref(j.at("base"), opt);
  for (const std::string& n : names_from_json(j.at("preamble"), "preamble"))
    s.preamble.push_back(object_index(s.base, n));
  for (const std::string& n : names_from_json(j.at("cycle"), "cycle"))
    s.cycle.push_back(object_index(s.base, n));
  check_sequence(s);
  return s;
}

json sequence_to_json(const EPSequence& s) {
  json pre = json::array(), cyc = json::array();
  for (size_t i : s.preamble) pre.push_back(s.base.objects[i]);
  for (size_t i : s.cycle) cyc.push_back(s.base.objects[i]);
  return json{{"base", category_to_json(s.base)},
              {"preamble", std::move(pre)},
              {"cycle", std::move(cyc)}};
}

std::vector<QValue> value_list_from_json(const json& j) {
  require_keys(j, "value list", {"quantale", "values"});
  QuantaleId q = quantale_from_name(get_string(j.at("quantale"), "quantale"));
  const json& vals = j.at("values");
  if (!vals.is_array()) throw ParseError("values must be an array");
  std::vector<QValue> out;
  out.reserve(vals.size());
  for (const json& v : vals) out.push_back(q_value_from_json(q, v));
  return out;
}

json value_list_to_json(QuantaleId q, std::span<const QValue> values) {
  json vals = json::array();
  for (const QValue& v : values) vals.push_back(q_value_to_json(v));
  return json{{"quantale", quantale_name(q)}, {"values", std::move(vals)}};
}

}  // namespace qcat
