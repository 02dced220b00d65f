#include "eigenframe/exactla/value.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "eigenframe/error.hpp"

namespace eigenframe {

const char* to_string(Backend backend) {
  return backend == Backend::exact ? "exact" : "floating";
}

const mpq_class& Value::exact() const {
  if (!exact_) throw InvalidArgument("value " + str() + " is not exact");
  return *exact_;
}

std::string Value::str() const { return exact_ ? format_rational(*exact_) : format_double(approx_); }

std::string format_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty rational");
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) {
      mpq_class q(text, 10);
      if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
      q.canonicalize();
      return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw InvalidArgument("bad decimal");
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
}

}  // namespace eigenframe
