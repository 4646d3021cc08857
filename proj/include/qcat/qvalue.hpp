#pragma once

#include <compare>
#include <string>
#include <variant>

#include "qcat/errors.hpp"
#include "qcat/stepfn.hpp"

namespace qcat {

enum class QuantaleId { bool2, cost, unit, delta };

std::string quantale_name(QuantaleId q);
QuantaleId quantale_from_name(const std::string& name);

struct Bool2Val {
  bool b = false;
  bool operator==(const Bool2Val&) const = default;
};

/** Extended nonnegative rational: a point of [0,oo]. */
struct CostVal {
  bool infinite = false;
  Rat q{0};  // meaningful only when finite
  bool operator==(const CostVal& o) const {
    return infinite == o.infinite && (infinite || q == o.q);
  }
};

struct UnitVal {
  Rat u{0};
  bool operator==(const UnitVal&) const = default;
};

/** A value of one of the four closed-world quantale instances. */
class QValue {
public:
  QValue() : v_(Bool2Val{false}) {}

  static QValue bool2(bool b) { return QValue(Bool2Val{b}); }
  static QValue cost(const Rat& q);
  static QValue cost_inf() { return QValue(CostVal{true, Rat(0)}); }
  static QValue unit(const Rat& u);
  static QValue delta(StepFn f) { return QValue(std::move(f)); }

  QuantaleId id() const { return static_cast<QuantaleId>(v_.index()); }

  bool as_bool() const { return get<Bool2Val>("bool2").b; }
  const CostVal& as_cost() const { return get<CostVal>("cost"); }
  const UnitVal& as_unit() const { return get<UnitVal>("unit"); }
  const StepFn& as_delta() const { return get<StepFn>("delta"); }

  bool operator==(const QValue&) const = default;

private:
  explicit QValue(Bool2Val v) : v_(v) {}
  explicit QValue(CostVal v) : v_(std::move(v)) {}
  explicit QValue(UnitVal v) : v_(std::move(v)) {}
  explicit QValue(StepFn v) : v_(std::move(v)) {}

  template <class T>
  const T& get(const char* want) const {
    const T* p = std::get_if<T>(&v_);
    if (!p)
      throw QuantaleMismatch(std::string("expected a ") + want + " value, got " +
                             quantale_name(id()));
    return *p;
  }

  std::variant<Bool2Val, CostVal, UnitVal, StepFn> v_;
};

/** Deterministic total order used for dedup and stable enumeration. */
bool value_less(const QValue& a, const QValue& b);

}  // namespace qcat
