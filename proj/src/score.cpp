#include "linseg/score.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace linseg {

using boost::multiprecision::cpp_int;

double to_double(const Score& s) { return s.convert_to<double>(); }

bool parse_score(std::string_view text, Score& out) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    Score num;
    Score den;
    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.find_first_not_of("0123456789") != std::string_view::npos) return false;
    if (!parse_score(text.substr(0, slash), num) || denominator(num) != 1) return false;
    if (!parse_score(den_text, den) || den == 0) return false;
    out = num / den;
    return true;
  }
  if (text.empty()) return false;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    ++i;
  }
  cpp_int num = 0;
  cpp_int den = 1;
  bool digits = false;
  bool point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !point) {
      point = true;
      continue;
    }
    if (c < '0' || c > '9') return false;
    digits = true;
    num = num * 10 + (c - '0');
    if (point) den *= 10;
  }
  if (!digits) return false;
  out = Score(negative ? cpp_int(-num) : num, den);
  return true;
}

std::string format_score(const Score& s, int digits) {
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const cpp_int num = numerator(s) * scale;
  const cpp_int den = denominator(s);
  cpp_int q = num / den;
  const cpp_int r = num % den;
  if (2 * abs(r) >= den) q += (num < 0 ? -1 : 1);

  const bool negative = q < 0;
  std::string mag = (negative ? cpp_int(-q) : q).str();
  if (digits > 0) {
    if (mag.size() <= static_cast<std::size_t>(digits)) mag.insert(0, digits + 1 - mag.size(), '0');
    mag.insert(mag.size() - digits, ".");
  }
  return (negative ? "-" : "") + mag;
}

std::string exact_string(const Score& s) {
  const cpp_int den = denominator(s);
  if (den == 1) return numerator(s).str();
  cpp_int rest = den;
  int digits = 0;
  while (rest % 10 == 0 || rest % 2 == 0 || rest % 5 == 0) {
    rest /= rest % 10 == 0 ? 10 : rest % 2 == 0 ? 2 : 5;
    ++digits;
  }
  if (rest != 1) return numerator(s).str() + "/" + den.str();
  std::string text = format_score(s, digits);
  while (text.back() == '0') text.pop_back();
  return text;
}

}  // namespace linseg
