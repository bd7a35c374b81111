#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "degratio/error.hpp"

namespace degratio {

__extension__ typedef __int128 wide_int;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Every degree ratio is a fraction with denominator at most n, so 64-bit
/// storage is plenty; intermediate products go through 128 bits and any result
/// that does not fit is reported instead of wrapping.
class Ratio {
 public:
  constexpr Ratio() = default;

  constexpr Ratio(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw parameter_error("ratio with zero denominator");
    assign(static_cast<wide_int>(num), static_cast<wide_int>(den));
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  /// Parses `a/b` or a bare integer `a`.
  static Ratio parse(std::string_view text) {
    auto read = [&](std::string_view part) {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
        throw parameter_error("malformed ratio '" + std::string(text) + "'");
      return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Ratio(read(text));
    return Ratio(read(text.substr(0, slash)), read(text.substr(slash + 1)));
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const Ratio&, const Ratio&) = default;

  friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
    wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend constexpr Ratio operator+(const Ratio& a, const Ratio& b) {
    return from_wide(static_cast<wide_int>(a.num_) * b.den_ + static_cast<wide_int>(b.num_) * a.den_,
                     static_cast<wide_int>(a.den_) * b.den_);
  }
  friend constexpr Ratio operator-(const Ratio& a, const Ratio& b) {
    return from_wide(static_cast<wide_int>(a.num_) * b.den_ - static_cast<wide_int>(b.num_) * a.den_,
                     static_cast<wide_int>(a.den_) * b.den_);
  }
  friend constexpr Ratio operator*(const Ratio& a, const Ratio& b) {
    return from_wide(static_cast<wide_int>(a.num_) * b.num_, static_cast<wide_int>(a.den_) * b.den_);
  }
  friend constexpr Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.num_ == 0) throw parameter_error("ratio division by zero");
    return from_wide(static_cast<wide_int>(a.num_) * b.den_, static_cast<wide_int>(a.den_) * b.num_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

 private:
  static constexpr wide_int abs128(wide_int x) { return x < 0 ? -x : x; }

  static constexpr wide_int gcd128(wide_int a, wide_int b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      wide_int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static constexpr Ratio from_wide(wide_int num, wide_int den) {
    Ratio r;
    r.assign(num, den);
    return r;
  }

  constexpr void assign(wide_int num, wide_int den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    wide_int g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr wide_int lo = INT64_MIN;
    constexpr wide_int hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw std::overflow_error("ratio does not fit in 64 bits");
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace degratio
