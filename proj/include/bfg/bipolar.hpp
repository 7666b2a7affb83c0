#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "scalar.hpp"

namespace bfg {

/// A (positive, negative) pair of exact scalars with no range restriction.
/// Degrees, orders and sizes are bivalues; memberships are the range-checked
/// `bipolar` below.
struct bivalue {
  scalar pos{};
  scalar neg{};

  friend constexpr bool operator==(const bivalue&, const bivalue&) = default;
  friend constexpr auto operator<=>(const bivalue&, const bivalue&) = default;

  friend constexpr bivalue operator+(bivalue a, bivalue b) {
    return {a.pos + b.pos, a.neg + b.neg};
  }
  friend constexpr bivalue operator-(bivalue a, bivalue b) {
    return {a.pos - b.pos, a.neg - b.neg};
  }
  friend constexpr bivalue operator*(std::int64_t k, bivalue v) {
    return {k * v.pos, k * v.neg};
  }
  constexpr bivalue& operator+=(bivalue o) {
    pos += o.pos;
    neg += o.neg;
    return *this;
  }
};

inline std::string to_string(bivalue v) {
  return "(" + v.pos.str() + "," + v.neg.str() + ")";
}

/// Membership pair: pos in [0,1], neg in [-1,0]. (0,0) marks irrelevance.
class bipolar {
 public:
  constexpr bipolar() = default;

  constexpr bipolar(scalar pos, scalar neg) : pos_(pos), neg_(neg) {
    if (pos < scalar{} || one() < pos)
      throw range_error("positive membership " + pos.str() +
                        " outside [0,1]");
    if (neg < -one() || scalar{} < neg)
      throw range_error("negative membership " + neg.str() +
                        " outside [-1,0]");
  }

  constexpr scalar pos() const { return pos_; }
  constexpr scalar neg() const { return neg_; }
  constexpr bivalue value() const { return {pos_, neg_}; }

  friend constexpr bool operator==(const bipolar&, const bipolar&) = default;

 private:
  static constexpr scalar one() { return scalar::from_raw(scalar::scale); }

  scalar pos_{};
  scalar neg_{};
};

inline std::string to_string(bipolar m) { return to_string(m.value()); }

/// Builds a membership from two decimal strings.
inline bipolar make_bipolar(std::string_view pos, std::string_view neg) {
  return bipolar(scalar::parse(pos), scalar::parse(neg));
}

constexpr bipolar make_bipolar(scalar pos, scalar neg) {
  return bipolar(pos, neg);
}

/// (min of positives, max of negatives).
constexpr bipolar bipolar_intersection(bipolar a, bipolar b) {
  return bipolar(std::min(a.pos(), b.pos()), std::max(a.neg(), b.neg()));
}

/// (max of positives, min of negatives).
constexpr bipolar bipolar_union(bipolar a, bipolar b) {
  return bipolar(std::max(a.pos(), b.pos()), std::min(a.neg(), b.neg()));
}

}  // namespace bfg
