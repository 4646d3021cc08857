#include <pybind11/pybind11.h>

#include "qcat/basechange.hpp"
#include "qcat/expinj.hpp"
#include "qcat/json_io.hpp"

namespace py = pybind11;

namespace {

using namespace qcat;

json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) {
    // arbitrary precision: go through the decimal spelling when needed
    try {
      return obj.cast<std::int64_t>();
    } catch (const py::cast_error&) {
      return py::str(obj).cast<std::string>();
    }
  }
  if (py::isinstance<py::float_>(obj)) {
    std::string spelling = py::str(py::repr(obj)).cast<std::string>();
    std::optional<Rat> r = rat_from_string(spelling);
    if (!r) throw ParseError("cannot read float " + spelling + " exactly");
    return rat_to_string(*r);
  }
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    json out = json::object();
    for (const auto& item : obj.cast<py::dict>())
      out[py::str(item.first).cast<std::string>()] = py_to_json(item.second);
    return out;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    json out = json::array();
    for (const auto& item : obj.cast<py::sequence>())
      out.push_back(py_to_json(item));
    return out;
  }
  throw ParseError("cannot encode python object " +
                   py::str(py::repr(obj)).cast<std::string>());
}

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& e : j) out.append(json_to_py(e));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& it : j.items())
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

VCategory cat_arg(const py::handle& obj) {
  return category_from_json(py_to_json(obj));
}

VModule mod_arg(const py::handle& obj) {
  return module_from_json(py_to_json(obj));
}

Presheaf psi_arg(const py::handle& obj) {
  return presheaf_from_json(py_to_json(obj));
}

QValue value_arg(const std::string& q, const py::handle& obj) {
  return q_value_from_json(quantale_from_name(q), py_to_json(obj));
}

json violation_json(const LawViolation& v) {
  return json{{"law", v.law}, {"at", v.at}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

size_t obj_index(const VCategory& c, const std::string& name) {
  std::optional<size_t> i = c.index_of(name);
  if (!i) throw StructuralError("unknown object \"" + name + "\"");
  return *i;
}

}  // namespace

PYBIND11_MODULE(_qcat, m) {
  m.doc() = "exact computations in categories enriched in a quantale";

  py::register_exception<StructuralError>(m, "StructuralError",
                                          PyExc_ValueError);
  py::register_exception<ClosureDivergence>(m, "ClosureDivergence",
                                            PyExc_RuntimeError);

  m.def("validate", [](const py::handle& doc) {
    json j = py_to_json(doc);
    json out;
    bool valid = false;
    std::optional<LawViolation> violation;
    if (j.contains("hom")) {
      CategoryCheck ck = validate_category(category_from_json(j));
      out["kind"] = "category";
      valid = ck.ok;
      violation = ck.violation;
    } else if (j.contains("phi")) {
      ModuleCheck ck = validate_module(module_from_json(j));
      out["kind"] = "module";
      valid = ck.ok;
      violation = ck.violation;
    } else if (j.contains("psi")) {
      ModuleCheck ck = validate_presheaf(presheaf_from_json(j));
      out["kind"] = "presheaf";
      valid = ck.ok;
      violation = ck.violation;
    } else {
      throw StructuralError("expected a category, module or presheaf");
    }
    out["valid"] = valid;
    if (violation) out["violation"] = violation_json(*violation);
    return json_to_py(out);
  });

  m.def("close", [](const py::handle& c) {
    return json_to_py(category_to_json(path_closure(cat_arg(c))));
  });
  m.def("dual", [](const py::handle& c) {
    return json_to_py(category_to_json(dual(cat_arg(c))));
  });
  m.def("order", [](const py::handle& c) {
    return json_to_py(category_to_json(underlying_order(cat_arg(c))));
  });
  m.def("product", [](const py::handle& a, const py::handle& b) {
    return json_to_py(category_to_json(product(cat_arg(a), cat_arg(b))));
  });
  m.def("tensor", [](const py::handle& a, const py::handle& b) {
    return json_to_py(category_to_json(tensor_product(cat_arg(a), cat_arg(b))));
  });

  m.def("compose", [](const py::handle& psi, const py::handle& phi) {
    return json_to_py(module_to_json(compose(mod_arg(psi), mod_arg(phi))));
  });
  m.def("ext", [](const py::handle& psi, const py::handle& phi) {
    return json_to_py(module_to_json(extension(mod_arg(psi), mod_arg(phi))));
  });
  m.def("lift", [](const py::handle& phi, const py::handle& psi) {
    return json_to_py(module_to_json(lifting(mod_arg(phi), mod_arg(psi))));
  });
  m.def("graph", [](const py::handle& f) {
    auto [lower, upper] = functor_graph(functor_from_json(py_to_json(f)));
    return json_to_py(json{{"lower", module_to_json(lower)},
                           {"upper", module_to_json(upper)}});
  });
  m.def("adjoint_check", [](const py::handle& phi, const py::handle& psi) {
    AdjointCheck ck = check_adjoint(mod_arg(phi), mod_arg(psi));
    json out{{"adjoint", ck.ok}};
    if (ck.witness) out["violation"] = violation_json(*ck.witness);
    return json_to_py(out);
  });

  m.def("yoneda", [](const py::handle& c, const std::string& obj) {
    VCategory cat = cat_arg(c);
    return json_to_py(presheaf_to_json(yoneda(cat, obj_index(cat, obj))));
  });
  m.def("presheaf_dist", [](const py::handle& a, const py::handle& b) {
    Presheaf p1 = psi_arg(a);
    Presheaf p2 = psi_arg(b);
    if (!(p1.base == p2.base))
      throw StructuralError("presheaves live over different bases");
    return json_to_py(q_value_to_json(presheaf_dist(p1, p2)));
  });
  m.def("right_adjoint", [](const py::handle& p) {
    AdjointPresheafResult r = is_right_adjoint(psi_arg(p));
    json cand = json::array();
    for (const QValue& v : r.candidate.values) cand.push_back(q_value_to_json(v));
    json out{{"adjoint", r.adjoint}, {"candidate", cand}};
    if (r.refutation) out["refutation"] = violation_json(*r.refutation);
    return json_to_py(out);
  });
  m.def("representable", [](const py::handle& p) {
    Presheaf psi = psi_arg(p);
    std::optional<size_t> i = is_representable(psi);
    json out{{"representable", i.has_value()}};
    if (i) out["object"] = psi.base.objects[*i];
    return json_to_py(out);
  });
  m.def("complete_check", [](const py::handle& c) {
    VCategory cat = cat_arg(c);
    if (cat.q != QuantaleId::bool2)
      throw StructuralError("exhaustive completeness check needs bool2");
    CompletenessReport rep = is_cauchy_complete_bool2(cat);
    json ws = json::array();
    for (const Presheaf& p : rep.witnesses) {
      json vals = json::array();
      for (const QValue& v : p.values) vals.push_back(q_value_to_json(v));
      ws.push_back(json{{"psi", vals}});
    }
    return json_to_py(json{{"complete", rep.complete},
                           {"presheaf_count", rep.presheaf_count},
                           {"witnesses", ws}});
  });
  m.def("cauchy_measure", [](const py::handle& s) {
    EPSequence seq = sequence_from_json(py_to_json(s));
    return json_to_py(json{{"measure", q_value_to_json(cauchy_measure(seq))},
                           {"cauchy", is_cauchy(seq)}});
  });
  m.def("seq_converges", [](const py::handle& s, const std::string& obj) {
    EPSequence seq = sequence_from_json(py_to_json(s));
    size_t x = obj_index(seq.base, obj);
    ConvergenceResult mod = converges_module(seq, x);
    return json_to_py(
        json{{"cauchy", mod.cauchy},
             {"module", mod.converges},
             {"topological", sequence_converges_topologically(seq, x)},
             {"converges", mod.converges}});
  });

  m.def(
      "base_change",
      [](const std::string& name, const py::handle& doc, const std::string& to,
         bool inexact) {
        json j = py_to_json(doc);
        std::optional<QuantaleId> to_id;
        if (!to.empty()) to_id = quantale_from_name(to);
        auto resolve = [&](QuantaleId from) {
          std::optional<QMorphism> m = morphism_by_name(name, to_id);
          if (!m) {
            for (const QMorphism& cand : morphism_table())
              if (cand.name == name && cand.source == from &&
                  (!to_id || cand.target == *to_id))
                return cand;
            throw StructuralError("no morphism named " + name + " fits here");
          }
          return *m;
        };
        if (j.contains("hom")) {
          VCategory c = category_from_json(j);
          return json_to_py(
              category_to_json(apply_category(resolve(c.q), c, inexact)));
        }
        if (j.contains("phi")) {
          VModule mod = module_from_json(j);
          return json_to_py(
              module_to_json(apply_module(resolve(mod.source.q), mod, inexact)));
        }
        throw StructuralError("base_change takes a category or module");
      },
      py::arg("morphism"), py::arg("doc"), py::arg("to") = "",
      py::arg("inexact") = false);

  m.def(
      "exp_check",
      [](const py::handle& c, unsigned depth) {
        VCategory cat = cat_arg(c);
        ExpVerdict v = check_exponentiable(cat, depth);
        json out{{"counterexample", v.status == ExpStatus::counterexample},
                 {"family_size", v.family_size},
                 {"note", v.note}};
        if (v.witness)
          out["witness"] = json{{"x0", cat.objects[v.witness->x0]},
                                {"x2", cat.objects[v.witness->x2]},
                                {"v0", q_value_to_json(v.witness->v0)},
                                {"v1", q_value_to_json(v.witness->v1)}};
        return json_to_py(out);
      },
      py::arg("category"), py::arg("depth") = 1);
  m.def("exp_check_metric", [](const py::handle& c) {
    VCategory cat = cat_arg(c);
    ExpVerdict v = check_exponentiable_metric(cat);
    json out{{"counterexample", v.status == ExpStatus::counterexample},
             {"note", v.note}};
    if (v.witness)
      out["witness"] = json{{"x0", cat.objects[v.witness->x0]},
                            {"x2", cat.objects[v.witness->x2]},
                            {"v0", q_value_to_json(v.witness->v0)},
                            {"v1", q_value_to_json(v.witness->v1)}};
    return json_to_py(out);
  });
  m.def("interpolate", [](const std::string& q, const py::handle& u,
                          const py::handle& v, const py::handle& w) {
    InterpolationResult r =
        quantale_interpolation(value_arg(q, u), value_arg(q, v), value_arg(q, w));
    json ws = json::array();
    for (const InterpolationWitness& wit : r.witnesses)
      ws.push_back(json{{"u_prime", q_value_to_json(wit.u_prime)},
                        {"v_prime", q_value_to_json(wit.v_prime)}});
    return json_to_py(json{{"ok", r.ok},
                           {"target", q_value_to_json(r.target)},
                           {"witnesses", ws},
                           {"note", r.note}});
  });

  m.def(
      "quantale_test",
      [](const std::string& q, unsigned samples) {
        QuantaleId id = quantale_from_name(q);
        LawReport rep = quantale_law_suite(id, sample_values(id, samples));
        json checks = json::array();
        for (const LawCheck& ck : rep.checks) {
          json e{{"law", ck.law}, {"passed", ck.passed}};
          if (!ck.counterexample.empty())
            e["counterexample"] = ck.counterexample;
          checks.push_back(std::move(e));
        }
        return json_to_py(json{{"quantale", quantale_name(rep.q)},
                               {"passed", rep.all_passed()},
                               {"checks", checks}});
      },
      py::arg("quantale"), py::arg("samples") = 40);

  m.def("value_leq", [](const std::string& q, const py::handle& u,
                        const py::handle& v) {
    return leq(value_arg(q, u), value_arg(q, v));
  });
  m.def("value_tensor", [](const std::string& q, const py::handle& u,
                           const py::handle& v) {
    return json_to_py(q_value_to_json(tensor(value_arg(q, u), value_arg(q, v))));
  });
  m.def("value_hom", [](const std::string& q, const py::handle& u,
                        const py::handle& v) {
    return json_to_py(q_value_to_json(hom(value_arg(q, u), value_arg(q, v))));
  });
  m.def("value_heyting", [](const std::string& q, const py::handle& u,
                            const py::handle& v) {
    return json_to_py(
        q_value_to_json(heyting(value_arg(q, u), value_arg(q, v))));
  });
  m.def("value_str", [](const std::string& q, const py::handle& u) {
    return value_to_string(value_arg(q, u));
  });
}
