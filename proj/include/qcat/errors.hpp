#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

/** Malformed input: schema violations, non-canonical data, incompatible shapes. */
class StructuralError : public std::runtime_error {
public:
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Values from different quantale instances were mixed in one operation. */
class QuantaleMismatch : public StructuralError {
public:
  explicit QuantaleMismatch(const std::string& msg) : StructuralError(msg) {}
};

/** Unreadable document: bad JSON, rejected float literal, unknown field. */
class ParseError : public StructuralError {
public:
  explicit ParseError(const std::string& msg) : StructuralError(msg) {}
};

/** Transitive closure failed to stabilize within its iteration cap. */
class ClosureDivergence : public std::runtime_error {
public:
  explicit ClosureDivergence(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qcat
