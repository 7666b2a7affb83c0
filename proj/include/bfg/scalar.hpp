#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace bfg {

/// Exact decimal with four fractional digits, stored as an integer count of
/// 1/10000 units. Sums and equality are exact; the library contains no
/// floating point at all.
class scalar {
 public:
  static constexpr std::int64_t scale = 10000;

  constexpr scalar() = default;

  static constexpr scalar from_raw(std::int64_t raw) {
    scalar s;
    s.raw_ = raw;
    return s;
  }

  /// Parses `-?digits(.digits)?`. Throws syntax_error on malformed input and
  /// precision_error when more than four fractional digits are given.
  static constexpr scalar parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
      negative = true;
      ++i;
    }
    if (i == text.size() || !is_digit(text[i]))
      throw syntax_error("not a decimal: '" + std::string(text) + "'");
    std::int64_t whole = 0;
    int digits = 0;
    for (; i < text.size() && is_digit(text[i]); ++i) {
      if (++digits > 12)
        throw syntax_error("decimal too long: '" + std::string(text) + "'");
      whole = whole * 10 + (text[i] - '0');
    }
    std::int64_t frac = 0;
    if (i < text.size() && text[i] == '.') {
      ++i;
      if (i == text.size() || !is_digit(text[i]))
        throw syntax_error("not a decimal: '" + std::string(text) + "'");
      int fdigits = 0;
      for (; i < text.size() && is_digit(text[i]); ++i) {
        if (++fdigits > 4)
          throw precision_error("more than four fractional digits: '" +
                                std::string(text) + "'");
        frac = frac * 10 + (text[i] - '0');
      }
      for (; fdigits < 4; ++fdigits) frac *= 10;
    }
    if (i != text.size())
      throw syntax_error("not a decimal: '" + std::string(text) + "'");
    std::int64_t raw = whole * scale + frac;
    return from_raw(negative ? -raw : raw);
  }

  constexpr std::int64_t raw() const { return raw_; }

  friend constexpr scalar operator+(scalar a, scalar b) {
    return from_raw(a.raw_ + b.raw_);
  }
  friend constexpr scalar operator-(scalar a, scalar b) {
    return from_raw(a.raw_ - b.raw_);
  }
  constexpr scalar operator-() const { return from_raw(-raw_); }
  friend constexpr scalar operator*(std::int64_t k, scalar s) {
    return from_raw(k * s.raw_);
  }
  friend constexpr scalar operator*(scalar s, std::int64_t k) { return k * s; }
  constexpr scalar& operator+=(scalar o) {
    raw_ += o.raw_;
    return *this;
  }
  constexpr scalar& operator-=(scalar o) {
    raw_ -= o.raw_;
    return *this;
  }

  friend constexpr auto operator<=>(scalar, scalar) = default;

  /// Minimal rendering: no trailing zeros, never "-0", leading zero kept
  /// ("0.4", "-1", "0.25").
  std::string str() const {
    std::int64_t r = raw_;
    std::string out;
    if (r < 0) {
      out += '-';
      r = -r;
    }
    out += std::to_string(r / scale);
    std::int64_t frac = r % scale;
    if (frac != 0) {
      std::string f = std::to_string(frac);
      f.insert(0, 4 - f.size(), '0');
      while (f.back() == '0') f.pop_back();
      out += '.';
      out += f;
    }
    return out;
  }

 private:
  static constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::int64_t raw_ = 0;
};

inline std::string to_string(scalar s) { return s.str(); }

inline namespace literals {
/// `0.4_s` parses the literal's own spelling, so the value is exact.
constexpr scalar operator""_s(const char* text) { return scalar::parse(text); }
constexpr scalar operator""_s(const char* text, std::size_t len) {
  return scalar::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace bfg
