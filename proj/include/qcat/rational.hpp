#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qcat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

/** "p" when integral, "p/q" otherwise. */
std::string rat_to_string(const Rat& r);

/** Accepts "p", "-p", "p/q" and exact decimal forms like "1.25" or "2e-3". */
std::optional<Rat> rat_from_string(std::string_view s);

}  // namespace qcat
