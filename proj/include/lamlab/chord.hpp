#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lamlab/angle.hpp"

namespace lamlab {

// Unordered pair of circle points, stored with a() <= b().
class Chord {
 public:
  Chord() = default;
  Chord(Angle x, Angle y);

  // "p/q-r/s"; the two angles may come in either order.
  static Chord parse(std::string_view text);

  const Angle& a() const noexcept { return a_; }
  const Angle& b() const noexcept { return b_; }

  bool degenerate() const noexcept { return a_ == b_; }
  bool has_endpoint(const Angle& x) const noexcept { return a_ == x || b_ == x; }
  bool shares_endpoint(const Chord& other) const noexcept {
    return has_endpoint(other.a_) || has_endpoint(other.b_);
  }

  std::string str() const;

  friend bool operator==(const Chord&, const Chord&) = default;
  friend std::strong_ordering operator<=>(const Chord& x, const Chord& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

 private:
  Angle a_;
  Angle b_;
};

std::ostream& operator<<(std::ostream& os, const Chord& c);

// Image chord {sigma(a), sigma(b)}; may be degenerate.
Chord image(const Chord& c, unsigned d = 3);

// Length of the shorter of the two circle arcs cut off by the chord.
Rational chord_length(const Chord& c);

// Interior intersection: endpoints strictly interleave. Touching at a circle
// point is not a crossing, and degenerate chords cross nothing.
bool chords_cross(const Chord& x, const Chord& y);

// Both chords share no point of the closed disk.
bool chords_disjoint(const Chord& x, const Chord& y);

// sigma_d(a) == sigma_d(b). Throws InvalidArgument for degenerate chords.
bool is_critical(const Chord& c, unsigned d = 3);

// Positively oriented arc from start to end with explicit endpoint
// membership. start == end denotes the empty arc when either flag is off and
// the single point start when both are on; the full circle is not an Arc.
struct Arc {
  Angle start;
  Angle end;
  bool includes_start = false;
  bool includes_end = false;

  static Arc open(Angle s, Angle e) { return {std::move(s), std::move(e), false, false}; }
  static Arc closed(Angle s, Angle e) { return {std::move(s), std::move(e), true, true}; }

  Rational length() const { return arc_length(start, end); }

  std::string str() const;

  friend bool operator==(const Arc&, const Arc&) = default;
};

bool in_arc(const Angle& x, const Arc& arc);

// Point strictly inside the arc (exact midpoint along the positive direction).
Angle arc_midpoint(const Arc& arc);

}  // namespace lamlab
