#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace eigenframe {

enum class Backend { exact, floating };

const char* to_string(Backend backend);

/// A scalar that is either an exact rational or a floating approximation.
/// Exact values also carry their double approximation.
class Value {
 public:
  Value() : approx_(0.0) {}
  explicit Value(const mpq_class& q) : exact_(q), approx_(q.get_d()) {}
  explicit Value(double x) : approx_(x) {}
  static Value integer(long v) { return Value(mpq_class(v)); }

  bool is_exact() const noexcept { return exact_.has_value(); }
  /// Throws InvalidArgument on a floating value.
  const mpq_class& exact() const;
  double approx() const noexcept { return approx_; }

  /// "num/den" (or "num" when the denominator is 1) for exact values, 12
  /// significant digits for floating ones.
  std::string str() const;

 private:
  std::optional<mpq_class> exact_;
  double approx_;
};

/// Canonical rational text: "num/den", or just "num" for integers.
std::string format_rational(const mpq_class& q);

/// Fixed 12-significant-digit rendering used in every report.
std::string format_double(double x);

/// `x` rounded to 12 significant digits.
double round12(double x);

/// Parses "a", "-a/b" or a decimal literal ("2.5") into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace eigenframe
