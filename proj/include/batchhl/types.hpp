#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace batchhl {

using Vertex = std::uint32_t;
using LandmarkIndex = std::uint32_t;

/// Hop count; kInfDist marks "unreachable" and is also the on-disk sentinel.
using Dist = std::uint32_t;

inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();

constexpr bool is_finite(Dist d) noexcept { return d != kInfDist; }

/// Saturating addition: anything plus infinity stays infinite.
constexpr Dist dist_add(Dist a, Dist b) noexcept {
  if (a == kInfDist || b == kInfDist) return kInfDist;
  return a + b;
}

/// Ordering key for a boolean flag where True sorts before False.
constexpr int flag_rank(bool flag) noexcept { return flag ? 0 : 1; }

/// Path length paired with whether the path passes through another landmark.
/// Ordered lexicographically with True < False on the flag.
struct LandmarkLength {
  Dist d = kInfDist;
  bool via_landmark = false;

  friend constexpr std::strong_ordering operator<=>(const LandmarkLength& a,
                                                    const LandmarkLength& b) noexcept {
    if (auto c = a.d <=> b.d; c != 0) return c;
    return flag_rank(a.via_landmark) <=> flag_rank(b.via_landmark);
  }
  friend constexpr bool operator==(const LandmarkLength&, const LandmarkLength&) = default;
};

/// Landmark length plus a flag recording passage through a deleted edge.
/// Ordered lexicographically on (d, via_landmark, via_deleted), True < False on both flags.
struct ExtendedLandmarkLength {
  Dist d = kInfDist;
  bool via_landmark = false;
  bool via_deleted = false;

  constexpr LandmarkLength landmark_length() const noexcept { return {d, via_landmark}; }

  friend constexpr std::strong_ordering operator<=>(const ExtendedLandmarkLength& a,
                                                    const ExtendedLandmarkLength& b) noexcept {
    if (auto c = a.d <=> b.d; c != 0) return c;
    if (auto c = flag_rank(a.via_landmark) <=> flag_rank(b.via_landmark); c != 0) return c;
    return flag_rank(a.via_deleted) <=> flag_rank(b.via_deleted);
  }
  friend constexpr bool operator==(const ExtendedLandmarkLength&,
                                   const ExtendedLandmarkLength&) = default;
};

/// Appends one vertex to a path: (d,l) -> (d+1, l or next_is_landmark). Infinity is absorbing.
constexpr LandmarkLength extend(LandmarkLength ll, bool next_is_landmark) noexcept {
  if (!is_finite(ll.d)) return ll;
  return {ll.d + 1, ll.via_landmark || next_is_landmark};
}

inline std::ostream& operator<<(std::ostream& os, const LandmarkLength& ll) {
  os << '(';
  if (is_finite(ll.d)) os << ll.d; else os << "inf";
  return os << ',' << (ll.via_landmark ? "True" : "False") << ')';
}

inline std::ostream& operator<<(std::ostream& os, const ExtendedLandmarkLength& el) {
  os << '(';
  if (is_finite(el.d)) os << el.d; else os << "inf";
  return os << ',' << (el.via_landmark ? "True" : "False") << ','
            << (el.via_deleted ? "True" : "False") << ')';
}

}  // namespace batchhl
