#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

#include "entropic/error.hpp"

namespace entropic {

/// Exact half-integer (spin, weight) stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int whole) : doubled_(2 * whole) {}

  static constexpr HalfInt from_doubled(int doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }

  /// Accepts values whose double is an integer (1.5, -0.5, 2.0).
  static HalfInt from_real(double value) {
    const double d = 2.0 * value;
    if (!std::isfinite(d) || std::abs(d - std::round(d)) > 1e-12 || std::abs(d) > 1e9) {
      throw DomainError("not a half-integer: " + std::to_string(value));
    }
    return from_doubled(static_cast<int>(std::lround(d)));
  }

  /// Parses "3/2", "-1/2", "2", "1.5".
  static HalfInt parse(std::string_view text) {
    const auto fail = [&] { return DomainError("cannot parse half-integer '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      int num = 0;
      int den = 0;
      const auto num_text = text.substr(0, slash);
      const auto den_text = text.substr(slash + 1);
      auto r1 = std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
      auto r2 = std::from_chars(den_text.data(), den_text.data() + den_text.size(), den);
      if (r1.ec != std::errc{} || r1.ptr != num_text.data() + num_text.size() || r2.ec != std::errc{} ||
          r2.ptr != den_text.data() + den_text.size()) {
        throw fail();
      }
      if (den == 1) return HalfInt(num);
      if (den == 2) return from_doubled(num);
      throw fail();
    }
    std::string owned(text);
    char* end = nullptr;
    const double value = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size()) throw fail();
    return from_real(value);
  }

  constexpr int doubled() const { return doubled_; }
  constexpr double value() const { return 0.5 * doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  int to_int() const {
    if (!is_integer()) throw DomainError("half-integer " + to_string() + " is not an integer");
    return doubled_ / 2;
  }

  /// Same parity class: the difference is an integer.
  constexpr bool same_class(HalfInt other) const { return (doubled_ - other.doubled_) % 2 == 0; }

  std::string to_string() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }
  constexpr HalfInt operator+(int n) const { return from_doubled(doubled_ + 2 * n); }
  constexpr HalfInt operator-(int n) const { return from_doubled(doubled_ - 2 * n); }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  int doubled_ = 0;
};

inline std::string to_string(HalfInt h) { return h.to_string(); }

/// Integer-valued difference a - b; throws if a and b are in different classes.
inline int integer_difference(HalfInt a, HalfInt b) { return (a - b).to_int(); }

/// (-1)^n for an integer n.
constexpr double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace entropic
