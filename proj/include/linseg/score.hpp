#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace linseg {

/// Exact rational used for every paragraph score, so per-term zero sums hold
/// exactly rather than to within rounding.
using Score = boost::multiprecision::cpp_rational;

double to_double(const Score& s);

/// Parses an integer, decimal or fraction literal ("10", "-3", "2.5",
/// "+0.125", "-1/3") exactly. Returns false on anything else.
bool parse_score(std::string_view text, Score& out);

/// Fixed-point rendering with `digits` fractional digits, rounded half away
/// from zero.
std::string format_score(const Score& s, int digits = 4);

/// Exact rendering that parse_score reads back: integers and terminating
/// decimals in decimal form ("10", "-2.5"), anything else as a fraction
/// ("1/3").
std::string exact_string(const Score& s);

}  // namespace linseg
