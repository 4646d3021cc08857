#include <CLI11.hpp>
#include <filesystem>
#include <functional>
#include <iostream>
#include <utility>

#include "qcat/basechange.hpp"
#include "qcat/expinj.hpp"
#include "qcat/json_io.hpp"

namespace {

using namespace qcat;

struct Result {
  int code = 0;
  json doc;
};

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

bool is_flat_array(const json& j) {
  if (!j.is_array()) return false;
  for (const json& e : j)
    if (!is_scalar(e)) return false;
  return true;
}

std::string inline_str(const json& j) {
  if (is_scalar(j)) return scalar_str(j);
  std::string s = "[";
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += scalar_str(j[i]);
  }
  return s + "]";
}

void render_text(const json& j, std::ostream& os, int indent = 0) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& it : j.items()) {
      const json& v = it.value();
      if (is_scalar(v))
        os << pad << it.key() << ": " << scalar_str(v) << "\n";
      else if (is_flat_array(v))
        os << pad << it.key() << ": " << inline_str(v) << "\n";
      else {
        os << pad << it.key() << ":\n";
        render_text(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const json& e : j) {
      if (is_scalar(e) || is_flat_array(e))
        os << pad << "- " << inline_str(e) << "\n";
      else {
        os << pad << "-\n";
        render_text(e, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_str(j) << "\n";
  }
}

json violation_to_json(const LawViolation& v) {
  return json{{"law", v.law}, {"at", v.at}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

json value_out(const QValue& v) {
  return json{{"value", q_value_to_json(v)}, {"rendered", value_to_string(v)}};
}

enum class DocKind { category, module, presheaf, values };

DocKind detect_kind(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object document");
  if (j.contains("hom")) return DocKind::category;
  if (j.contains("phi")) return DocKind::module;
  if (j.contains("psi")) return DocKind::presheaf;
  if (j.contains("values")) return DocKind::values;
  throw ParseError("cannot tell what this document is: no hom/phi/psi/values");
}

size_t object_index(const VCategory& c, const std::string& name) {
  std::optional<size_t> i = c.index_of(name);
  if (!i) throw ParseError("unknown object \"" + name + "\"");
  return *i;
}

QMorphism resolve_morphism(const std::string& name,
                           std::optional<QuantaleId> from,
                           std::optional<QuantaleId> to) {
  std::vector<QMorphism> found;
  for (const QMorphism& m : morphism_table()) {
    if (m.name != name) continue;
    if (from && m.source != *from) continue;
    if (to && m.target != *to) continue;
    found.push_back(m);
  }
  if (found.size() > 1) {
    std::vector<QMorphism> prefer;
    for (const QMorphism& m : found)
      if (m.source == QuantaleId::cost || m.target == QuantaleId::cost)
        prefer.push_back(m);
    if (prefer.size() == 1) found = prefer;
  }
  if (found.empty())
    throw ParseError("no morphism named " + name + " fits here");
  if (found.size() > 1)
    throw ParseError("morphism " + name + " is ambiguous; pass --to or --from");
  return found[0];
}

std::string exp_status_str(ExpStatus s) {
  switch (s) {
    case ExpStatus::counterexample: return "counterexample";
    case ExpStatus::passed_on_family: return "passed on family";
    case ExpStatus::passed_exhaustively: return "passed exhaustively";
  }
  return "?";
}

json exp_verdict_json(const ExpVerdict& v, const VCategory& c) {
  json out{{"status", exp_status_str(v.status)},
           {"family_size", v.family_size},
           {"note", v.note}};
  if (v.witness) {
    out["witness"] = json{{"x0", c.objects[v.witness->x0]},
                          {"x2", c.objects[v.witness->x2]},
                          {"v0", q_value_to_json(v.witness->v0)},
                          {"v1", q_value_to_json(v.witness->v1)},
                          {"join_side", v.witness->lhs},
                          {"meet_side", v.witness->rhs}};
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for categories enriched in a quantale"};
  app.require_subcommand(1);

  bool json_out = false;
  bool text_out = false;
  ParseOptions popt;
  auto* jf = app.add_flag("--json", json_out, "machine readable JSON output");
  app.add_flag("--text", text_out, "plain text output (default)")->excludes(jf);
  app.add_flag("--allow-float", popt.allow_float,
               "read float literals as the exact rational they spell");

  std::function<Result()> action;

  auto load = [&popt](const std::string& path) {
    ParseOptions opt = popt;
    opt.base_dir = std::filesystem::path(path).parent_path();
    json doc = load_document(path, opt);
    return std::pair<json, ParseOptions>(std::move(doc), std::move(opt));
  };
  auto load_category = [load](const std::string& path) {
    auto [doc, opt] = load(path);
    return category_from_json(doc, opt);
  };
  auto load_module = [load](const std::string& path) {
    auto [doc, opt] = load(path);
    return module_from_json(doc, opt);
  };
  auto load_presheaf = [load](const std::string& path) {
    auto [doc, opt] = load(path);
    return presheaf_from_json(doc, opt);
  };
  auto load_sequence = [load](const std::string& path) {
    auto [doc, opt] = load(path);
    return sequence_from_json(doc, opt);
  };

  // validate
  {
    auto* sub = app.add_subcommand(
        "validate", "check the laws of a category, module or presheaf document");
    auto path = std::make_shared<std::string>();
    sub->add_option("doc", *path, "document file")->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        auto [doc, opt] = load(*path);
        json out;
        bool valid = false;
        std::optional<LawViolation> violation;
        switch (detect_kind(doc)) {
          case DocKind::category: {
            CategoryCheck ck = validate_category(category_from_json(doc, opt));
            out["kind"] = "category";
            valid = ck.ok;
            violation = ck.violation;
            break;
          }
          case DocKind::module: {
            ModuleCheck ck = validate_module(module_from_json(doc, opt));
            out["kind"] = "module";
            valid = ck.ok;
            violation = ck.violation;
            break;
          }
          case DocKind::presheaf: {
            ModuleCheck ck = validate_presheaf(presheaf_from_json(doc, opt));
            out["kind"] = "presheaf";
            valid = ck.ok;
            violation = ck.violation;
            break;
          }
          case DocKind::values:
            throw ParseError("validate expects a category, module or presheaf");
        }
        out["valid"] = valid;
        if (violation) out["violation"] = violation_to_json(*violation);
        return {valid ? 0 : 1, out};
      };
    });
  }

  // close
  {
    auto* sub = app.add_subcommand(
        "close", "least category structure above the given entries");
    auto path = std::make_shared<std::string>();
    sub->add_option("category", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        return {0, category_to_json(path_closure(load_category(*path)))};
      };
    });
  }

  // dual
  {
    auto* sub = app.add_subcommand("dual", "swap the two arguments of hom");
    auto path = std::make_shared<std::string>();
    sub->add_option("category", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        return {0, category_to_json(dual(load_category(*path)))};
      };
    });
  }

  // order
  {
    auto* sub = app.add_subcommand(
        "order", "underlying order: x <= y when the unit is below hom(x,y)");
    auto path = std::make_shared<std::string>();
    sub->add_option("category", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        return {0, category_to_json(underlying_order(load_category(*path)))};
      };
    });
  }

  // product / tensor
  for (const char* name : {"product", "tensor"}) {
    auto* sub = app.add_subcommand(
        name, std::string(name) == "product"
                  ? "cartesian product category (hom = meet)"
                  : "tensor product category (hom = tensor)");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("left", *a)->required();
    sub->add_option("right", *b)->required();
    bool is_product = std::string(name) == "product";
    sub->callback([&, a, b, is_product] {
      action = [&, a, b, is_product]() -> Result {
        VCategory x = load_category(*a);
        VCategory y = load_category(*b);
        return {0, category_to_json(is_product ? product(x, y)
                                               : tensor_product(x, y))};
      };
    });
  }

  // compose
  {
    auto* sub = app.add_subcommand(
        "compose", "compose modules: psi after phi");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("psi", *a, "module Y -|-> Z")->required();
    sub->add_option("phi", *b, "module X -|-> Y")->required();
    sub->callback([&, a, b] {
      action = [&, a, b]() -> Result {
        return {0, module_to_json(compose(load_module(*a), load_module(*b)))};
      };
    });
  }

  // ext
  {
    auto* sub = app.add_subcommand(
        "ext", "right extension: largest chi with chi after phi <= psi");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("psi", *a, "module X -|-> Z")->required();
    sub->add_option("phi", *b, "module X -|-> Y")->required();
    sub->callback([&, a, b] {
      action = [&, a, b]() -> Result {
        return {0, module_to_json(extension(load_module(*a), load_module(*b)))};
      };
    });
  }

  // lift
  {
    auto* sub = app.add_subcommand(
        "lift", "right lifting: largest chi with phi after chi <= psi");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("phi", *a, "module X -|-> Y")->required();
    sub->add_option("psi", *b, "module Z -|-> Y")->required();
    sub->callback([&, a, b] {
      action = [&, a, b]() -> Result {
        return {0, module_to_json(lifting(load_module(*a), load_module(*b)))};
      };
    });
  }

  // graph
  {
    auto* sub = app.add_subcommand(
        "graph", "lower and upper graph modules of a functor");
    auto path = std::make_shared<std::string>();
    sub->add_option("functor", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        auto [doc, opt] = load(*path);
        auto [lower, upper] = functor_graph(functor_from_json(doc, opt));
        return {0, json{{"lower", module_to_json(lower)},
                        {"upper", module_to_json(upper)}}};
      };
    });
  }

  // adjoint-check
  {
    auto* sub = app.add_subcommand(
        "adjoint-check", "is phi left adjoint to psi in the module sense");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("phi", *a, "module X -|-> Y")->required();
    sub->add_option("psi", *b, "module Y -|-> X")->required();
    sub->callback([&, a, b] {
      action = [&, a, b]() -> Result {
        AdjointCheck ck = check_adjoint(load_module(*a), load_module(*b));
        json out{{"adjoint", ck.ok}};
        if (ck.witness) out["violation"] = violation_to_json(*ck.witness);
        return {ck.ok ? 0 : 1, out};
      };
    });
  }

  // yoneda
  {
    auto* sub = app.add_subcommand("yoneda", "presheaf of distances into x");
    auto path = std::make_shared<std::string>();
    auto obj = std::make_shared<std::string>();
    sub->add_option("category", *path)->required();
    sub->add_option("object", *obj)->required();
    sub->callback([&, path, obj] {
      action = [&, path, obj]() -> Result {
        VCategory c = load_category(*path);
        return {0, presheaf_to_json(yoneda(c, object_index(c, *obj)))};
      };
    });
  }

  // presheaf-dist
  {
    auto* sub = app.add_subcommand(
        "presheaf-dist", "distance between presheaves over one base");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("psi1", *a)->required();
    sub->add_option("psi2", *b)->required();
    sub->callback([&, a, b] {
      action = [&, a, b]() -> Result {
        Presheaf p1 = load_presheaf(*a);
        Presheaf p2 = load_presheaf(*b);
        if (!(p1.base == p2.base))
          throw StructuralError("presheaves live over different bases");
        return {0, json{{"distance", value_out(presheaf_dist(p1, p2))}}};
      };
    });
  }

  // right-adjoint
  {
    auto* sub = app.add_subcommand(
        "right-adjoint", "is the presheaf a right adjoint; shows the only "
                         "possible left adjoint");
    auto path = std::make_shared<std::string>();
    sub->add_option("psi", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        Presheaf p = load_presheaf(*path);
        ModuleCheck ck = validate_presheaf(p);
        if (!ck.ok)
          throw StructuralError(
              "not a presheaf: " +
              (ck.violation ? ck.violation->law : std::string("action law")));
        AdjointPresheafResult r = is_right_adjoint(p);
        json cand = json::array();
        for (const QValue& v : r.candidate.values)
          cand.push_back(q_value_to_json(v));
        json out{{"adjoint", r.adjoint}, {"candidate", cand}};
        if (r.refutation) out["refutation"] = violation_to_json(*r.refutation);
        return {r.adjoint ? 0 : 1, out};
      };
    });
  }

  // representable
  {
    auto* sub = app.add_subcommand(
        "representable", "object whose distance presheaf equals psi");
    auto path = std::make_shared<std::string>();
    sub->add_option("psi", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        Presheaf p = load_presheaf(*path);
        std::optional<size_t> i = is_representable(p);
        json out{{"representable", i.has_value()}};
        if (i) out["object"] = p.base.objects[*i];
        return {i ? 0 : 1, out};
      };
    });
  }

  // complete-check
  {
    auto* sub = app.add_subcommand(
        "complete-check",
        "over bool2: exhaustive completeness check; otherwise a certificate "
        "from the yoneda presheaves and the given candidates");
    auto path = std::make_shared<std::string>();
    auto cands = std::make_shared<std::vector<std::string>>();
    sub->add_option("category", *path)->required();
    sub->add_option("candidates", *cands,
                    "presheaf documents over the same category");
    sub->callback([&, path, cands] {
      action = [&, path, cands]() -> Result {
        VCategory c = load_category(*path);
        if (c.q == QuantaleId::bool2 && cands->empty()) {
          CompletenessReport rep = is_cauchy_complete_bool2(c);
          json ws = json::array();
          for (const Presheaf& p : rep.witnesses) {
            json vals = json::array();
            for (const QValue& v : p.values) vals.push_back(q_value_to_json(v));
            ws.push_back(json{{"psi", vals}});
          }
          json out{{"complete", rep.complete},
                   {"presheaf_count", rep.presheaf_count},
                   {"witnesses", ws}};
          return {rep.complete ? 0 : 1, out};
        }
        std::vector<Presheaf> ps;
        for (const std::string& f : *cands) {
          Presheaf p = load_presheaf(f);
          if (!(p.base == c))
            throw StructuralError("candidate in " + f +
                                  " lives over a different category");
          ps.push_back(std::move(p));
        }
        CompletionCertificate cert = completion_certificate(c, ps);
        json cs = json::array();
        for (size_t i = 0; i < cert.candidates.size(); ++i) {
          const CandidateVerdict& v = cert.candidates[i];
          json e{{"valid", v.valid_presheaf}, {"adjoint", v.adjoint}};
          e["representable"] =
              v.representable ? json(c.objects[*v.representable]) : json(nullptr);
          cs.push_back(std::move(e));
        }
        json out{{"complete", !cert.incomplete_witness},
                 {"yoneda_closed_dense", cert.yoneda_closed_dense},
                 {"symmetric", cert.symmetric},
                 {"objects", cert.labels},
                 {"candidates", cs}};
        if (cert.finitary) out["finitary"] = *cert.finitary;
        return {cert.incomplete_witness ? 1 : 0, out};
      };
    });
  }

  // cauchy-measure
  {
    auto* sub = app.add_subcommand(
        "cauchy-measure", "tail tightness of an eventually periodic sequence");
    auto path = std::make_shared<std::string>();
    sub->add_option("sequence", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        EPSequence s = load_sequence(*path);
        bool cauchy = is_cauchy(s);
        json out{{"measure", value_out(cauchy_measure(s))}, {"cauchy", cauchy}};
        return {cauchy ? 0 : 1, out};
      };
    });
  }

  // seq-converges
  {
    auto* sub = app.add_subcommand(
        "seq-converges", "does the sequence converge to the object");
    auto path = std::make_shared<std::string>();
    auto obj = std::make_shared<std::string>();
    sub->add_option("sequence", *path)->required();
    sub->add_option("object", *obj)->required();
    sub->callback([&, path, obj] {
      action = [&, path, obj]() -> Result {
        EPSequence s = load_sequence(*path);
        size_t x = object_index(s.base, *obj);
        ConvergenceResult mod = converges_module(s, x);
        bool topo = sequence_converges_topologically(s, x);
        json out{{"object", *obj},
                 {"cauchy", mod.cauchy},
                 {"module", mod.converges},
                 {"topological", topo},
                 {"converges", mod.converges}};
        return {mod.converges ? 0 : 1, out};
      };
    });
  }

  // base-change
  {
    auto* sub = app.add_subcommand(
        "base-change", "move a document along a quantale morphism, or audit "
                       "the morphism laws with --laws");
    auto name = std::make_shared<std::string>();
    auto path = std::make_shared<std::string>();
    auto to_name = std::make_shared<std::string>();
    auto from_name = std::make_shared<std::string>();
    auto laws = std::make_shared<bool>(false);
    auto inexact = std::make_shared<bool>(false);
    auto samples = std::make_shared<unsigned>(40);
    sub->add_option("morphism", *name, "I, O, P, I_inf, O_inf, P_inf, E, L")
        ->required();
    sub->add_option("doc", *path, "category, module or value list document");
    sub->add_option("--to", *to_name, "target quantale of the morphism");
    sub->add_option("--from", *from_name, "source quantale of the morphism");
    sub->add_flag("--laws", *laws, "run the morphism law audit instead");
    sub->add_flag("--inexact", *inexact,
                  "allow the approximate exp/log morphisms");
    sub->add_option("--samples", *samples, "sample count for --laws");
    sub->callback([&, name, path, to_name, from_name, laws, inexact, samples] {
      action = [&, name, path, to_name, from_name, laws, inexact,
                samples]() -> Result {
        std::optional<QuantaleId> to, from;
        if (!to_name->empty()) to = quantale_from_name(*to_name);
        if (!from_name->empty()) from = quantale_from_name(*from_name);
        if (*laws) {
          QMorphism m = resolve_morphism(*name, from, to);
          MorphismLawReport rep =
              morphism_law_suite(m, sample_values(m.source, *samples));
          json checks = json::array();
          for (const MorphismLawCheck& ck : rep.checks) {
            json e{{"law", ck.law}, {"passed", ck.passed}};
            if (ck.expected_failure) e["expected_failure"] = true;
            if (!ck.detail.empty()) e["detail"] = ck.detail;
            checks.push_back(std::move(e));
          }
          json out{{"morphism", m.name},
                   {"source", quantale_name(m.source)},
                   {"target", quantale_name(m.target)},
                   {"as_expected", rep.as_expected()},
                   {"checks", checks}};
          return {rep.as_expected() ? 0 : 1, out};
        }
        if (path->empty())
          throw ParseError("base-change needs a document (or --laws)");
        auto [doc, opt] = load(*path);
        switch (detect_kind(doc)) {
          case DocKind::category: {
            VCategory c = category_from_json(doc, opt);
            QMorphism m = resolve_morphism(*name, c.q, to);
            return {0, category_to_json(apply_category(m, c, *inexact))};
          }
          case DocKind::module: {
            VModule mod = module_from_json(doc, opt);
            QMorphism m = resolve_morphism(*name, mod.source.q, to);
            return {0, module_to_json(apply_module(m, mod, *inexact))};
          }
          case DocKind::values: {
            std::vector<QValue> vs = value_list_from_json(doc);
            QuantaleId q =
                vs.empty() ? quantale_from_name(doc.at("quantale")
                                                    .get<std::string>())
                           : vs[0].id();
            QMorphism m = resolve_morphism(*name, q, to);
            std::vector<QValue> out;
            out.reserve(vs.size());
            for (const QValue& v : vs)
              out.push_back(apply_value(m, v, *inexact));
            return {0, value_list_to_json(m.target, out)};
          }
          case DocKind::presheaf:
            throw ParseError("base-change takes a category, module or values");
        }
        throw std::logic_error("unreachable");
      };
    });
  }

  // exp-check
  {
    auto* sub = app.add_subcommand(
        "exp-check", "test the two-variable meet/tensor exchange inequality "
                     "over a derived value family");
    auto path = std::make_shared<std::string>();
    auto depth = std::make_shared<unsigned>(1);
    auto dump_family = std::make_shared<bool>(false);
    sub->add_option("category", *path)->required();
    sub->add_option("--depth", *depth, "closure rounds for the value family")
        ->envname("QCAT_DEPTH");
    sub->add_flag("--family-dump", *dump_family, "include the value family");
    sub->callback([&, path, depth, dump_family] {
      action = [&, path, depth, dump_family]() -> Result {
        VCategory c = load_category(*path);
        ExpVerdict v = check_exponentiable(c, *depth);
        json out = exp_verdict_json(v, c);
        if (*dump_family) {
          json fam = json::array();
          for (const QValue& f : exponentiability_family(c, *depth))
            fam.push_back(q_value_to_json(f));
          out["family"] = std::move(fam);
        }
        return {v.status == ExpStatus::counterexample ? 1 : 0, out};
      };
    });
  }

  // exp-check-metric
  {
    auto* sub = app.add_subcommand(
        "exp-check-metric", "decide the exchange inequality for a cost "
                            "category through midpoint splits");
    auto path = std::make_shared<std::string>();
    sub->add_option("category", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        VCategory c = load_category(*path);
        ExpVerdict v = check_exponentiable_metric(c);
        return {v.status == ExpStatus::counterexample ? 1 : 0,
                exp_verdict_json(v, c)};
      };
    });
  }

  // interpolate
  {
    auto* sub = app.add_subcommand(
        "interpolate", "witnesses u' <= u, v' <= v whose products join to "
                       "meet(w, u tensor v); values document lists u, v, w");
    auto path = std::make_shared<std::string>();
    sub->add_option("values", *path)->required();
    sub->callback([&, path] {
      action = [&, path]() -> Result {
        auto [doc, opt] = load(*path);
        (void)opt;
        std::vector<QValue> vs = value_list_from_json(doc);
        if (vs.size() != 3)
          throw ParseError("interpolate needs exactly three values: u, v, w");
        InterpolationResult r = quantale_interpolation(vs[0], vs[1], vs[2]);
        json ws = json::array();
        for (const InterpolationWitness& w : r.witnesses)
          ws.push_back(json{{"u_prime", q_value_to_json(w.u_prime)},
                            {"v_prime", q_value_to_json(w.v_prime)}});
        json out{{"ok", r.ok},
                 {"target", value_out(r.target)},
                 {"witnesses", ws}};
        if (!r.note.empty()) out["note"] = r.note;
        return {r.ok ? 0 : 1, out};
      };
    });
  }

  // quantale-test
  {
    auto* sub = app.add_subcommand(
        "quantale-test", "law audit of one quantale instance over a "
                         "deterministic sample set");
    auto qname = std::make_shared<std::string>();
    auto samples = std::make_shared<unsigned>(40);
    sub->add_option("quantale", *qname, "bool2, cost, unit or delta")
        ->required();
    sub->add_option("--samples", *samples, "sample count");
    sub->callback([&, qname, samples] {
      action = [&, qname, samples]() -> Result {
        QuantaleId q = quantale_from_name(*qname);
        LawReport rep = quantale_law_suite(q, sample_values(q, *samples));
        json checks = json::array();
        for (const LawCheck& ck : rep.checks) {
          json e{{"law", ck.law}, {"passed", ck.passed}};
          if (!ck.counterexample.empty()) e["counterexample"] = ck.counterexample;
          checks.push_back(std::move(e));
        }
        json out{{"quantale", quantale_name(rep.q)},
                 {"passed", rep.all_passed()},
                 {"pair_count", rep.pair_count},
                 {"triple_count", rep.triple_count},
                 {"exhaustive_triples", rep.exhaustive_triples},
                 {"checks", checks}};
        return {rep.all_passed() ? 0 : 1, out};
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Result r = action();
    if (json_out)
      std::cout << r.doc.dump(2) << "\n";
    else
      render_text(r.doc, std::cout);
    return r.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ClosureDivergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
