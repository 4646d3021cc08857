#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

#include "qcat/cauchy.hpp"

namespace qcat {

using json = nlohmann::json;

struct ParseOptions {
  /** Convert floating point literals to the exact rational they spell.
   *  Off by default: floats are rejected with a re-encoding hint. */
  bool allow_float = false;
  /** Directory against which file references inside documents resolve. */
  std::filesystem::path base_dir = ".";
};

/** Parses JSON text. All numbers stay exact; see ParseOptions::allow_float. */
json parse_document(const std::string& text, const ParseOptions& opt = {});
json load_document(const std::filesystem::path& file, const ParseOptions& opt = {});

Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

QValue q_value_from_json(QuantaleId q, const json& j);
json q_value_to_json(const QValue& v);

// Document shapes. A category is {"quantale", "objects", "hom"} with hom rows
// indexed by the first argument. Wherever a category is embedded (module
// source/target, presheaf base, ...) a JSON string is read as a file path
// relative to ParseOptions::base_dir.
VCategory category_from_json(const json& j, const ParseOptions& opt = {});
json category_to_json(const VCategory& c);

/** {"source", "target", "phi"}; phi rows are indexed by source objects. */
VModule module_from_json(const json& j, const ParseOptions& opt = {});
json module_to_json(const VModule& m);

/** {"base", "psi"}; one value per base object. */
Presheaf presheaf_from_json(const json& j, const ParseOptions& opt = {});
json presheaf_to_json(const Presheaf& p);

/** {"source", "target", "map"}; map sends source object names to target names. */
VFunctor functor_from_json(const json& j, const ParseOptions& opt = {});
json functor_to_json(const VFunctor& f);

/** {"base", "preamble", "cycle"}; object names, cycle nonempty. */
EPSequence sequence_from_json(const json& j, const ParseOptions& opt = {});
json sequence_to_json(const EPSequence& s);

/** {"quantale", "values"}. */
std::vector<QValue> value_list_from_json(const json& j);
json value_list_to_json(QuantaleId q, std::span<const QValue> values);

}  // namespace qcat
