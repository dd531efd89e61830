#pragma once

#include <cstdint>
#include <string>

namespace ashg {

/// A welfare quantity (SW, CW, TV, bounds) computed on one game.
///
/// In integer mode the value is kept as an exact rational
/// `doubled / (2 * unit)`, where `unit` is the game's weight unit. The extra
/// factor two makes correlation welfare exact even when it is a half-integer.
/// In real mode the value is a double and comparisons use `kRealTolerance`.
class Welfare {
 public:
  static constexpr double kRealTolerance = 1e-9;

  Welfare() = default;

  static Welfare exact_doubled(std::int64_t doubled, std::int64_t unit = 1);
  static Welfare exact(std::int64_t value, std::int64_t unit = 1) {
    return exact_doubled(2 * value, unit);
  }
  static Welfare real(double value);

  bool is_exact() const { return exact_; }
  std::int64_t doubled() const { return doubled_; }
  std::int64_t unit() const { return unit_; }

  /// True when the exact value is an integer (in natural units).
  bool is_integral() const;
  /// Integer value in natural units; throws if not integral or not exact.
  std::int64_t as_integer() const;
  double to_double() const;

  /// Decimal rendering: integers print without a fraction, otherwise the
  /// shortest round-trip double.
  std::string to_string() const;

  /// Exactly half of this value (integer mode widens the unit).
  Welfare half() const;

  Welfare operator-() const;
  friend Welfare operator+(const Welfare& a, const Welfare& b);
  friend Welfare operator-(const Welfare& a, const Welfare& b);
  friend Welfare operator*(std::int64_t c, const Welfare& w);

  /// -1, 0, +1. Mixed exact/real operands are compared as doubles.
  friend int compare(const Welfare& a, const Welfare& b);

  friend bool operator==(const Welfare& a, const Welfare& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Welfare& a, const Welfare& b) { return compare(a, b) != 0; }
  friend bool operator<(const Welfare& a, const Welfare& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Welfare& a, const Welfare& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Welfare& a, const Welfare& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Welfare& a, const Welfare& b) { return compare(a, b) >= 0; }

 private:
  bool exact_ = true;
  std::int64_t doubled_ = 0;
  std::int64_t unit_ = 1;
  double real_ = 0.0;
};

}  // namespace ashg
