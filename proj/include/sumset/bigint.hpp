#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sumset {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp with exp >= 0, exact.
BigInt ipow(const BigInt& base, int exp);

/// Largest m >= 0 with m^k <= value. Requires value >= 0, k >= 1.
BigInt iroot_floor(const BigInt& value, int k);

/// Checked narrowing for container sizing; throws std::overflow_error when
/// the value does not fit in size_t (or is negative).
std::size_t to_index(const BigInt& value);

/// Strict decimal parse (optional leading '-', digits only).
BigInt parse_bigint(const std::string& text);

}  // namespace sumset
