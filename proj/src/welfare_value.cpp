#include "ashg/welfare_value.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "ashg/error.hpp"

namespace ashg {

namespace {

// Brings two exact values onto a common unit.
std::pair<__int128, __int128> common_numerators(const Welfare& a, const Welfare& b) {
  if (a.unit() == b.unit()) return {a.doubled(), b.doubled()};
  return {static_cast<__int128>(a.doubled()) * b.unit(),
          static_cast<__int128>(b.doubled()) * a.unit()};
}

std::int64_t lcm_unit(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace

Welfare Welfare::exact_doubled(std::int64_t doubled, std::int64_t unit) {
  if (unit <= 0) throw ParameterError("welfare unit must be positive");
  Welfare w;
  w.exact_ = true;
  w.doubled_ = doubled;
  w.unit_ = unit;
  return w;
}

Welfare Welfare::real(double value) {
  Welfare w;
  w.exact_ = false;
  w.real_ = value;
  return w;
}

bool Welfare::is_integral() const {
  if (!exact_) return std::nearbyint(real_) == real_;
  return doubled_ % (2 * unit_) == 0;
}

std::int64_t Welfare::as_integer() const {
  if (!exact_ || !is_integral()) throw ModeError("welfare value is not an exact integer");
  return doubled_ / (2 * unit_);
}

double Welfare::to_double() const {
  if (!exact_) return real_;
  return static_cast<double>(doubled_) / (2.0 * static_cast<double>(unit_));
}

std::string Welfare::to_string() const {
  if (exact_ && is_integral()) return std::to_string(as_integer());
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, to_double());
  return std::string(buf, res.ptr);
}

Welfare Welfare::half() const {
  if (!exact_) return real(real_ / 2.0);
  if (doubled_ % 2 == 0) return exact_doubled(doubled_ / 2, unit_);
  return exact_doubled(doubled_, 2 * unit_);
}

Welfare Welfare::operator-() const {
  Welfare w = *this;
  w.doubled_ = -doubled_;
  w.real_ = -real_;
  return w;
}

Welfare operator+(const Welfare& a, const Welfare& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.unit() == b.unit()) return Welfare::exact_doubled(a.doubled() + b.doubled(), a.unit());
    const std::int64_t u = lcm_unit(a.unit(), b.unit());
    return Welfare::exact_doubled(a.doubled() * (u / a.unit()) + b.doubled() * (u / b.unit()), u);
  }
  return Welfare::real(a.to_double() + b.to_double());
}

Welfare operator-(const Welfare& a, const Welfare& b) { return a + (-b); }

Welfare operator*(std::int64_t c, const Welfare& w) {
  if (w.is_exact()) return Welfare::exact_doubled(c * w.doubled(), w.unit());
  return Welfare::real(static_cast<double>(c) * w.to_double());
}

int compare(const Welfare& a, const Welfare& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto [x, y] = common_numerators(a, b);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  const double x = a.to_double();
  const double y = b.to_double();
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  if (std::abs(x - y) <= Welfare::kRealTolerance * scale) return 0;
  return x < y ? -1 : 1;
}

}  // namespace ashg
