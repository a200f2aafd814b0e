#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lamlab/angle.hpp"
#include "lamlab/chord.hpp"

namespace lamlab {

// The sigma_3-critical chord {t, t + 1/3}. The parametrization is a bijection
// from the circle onto the set of critical chords.
Chord critical_chord(const Angle& t);

// Inverse of critical_chord: the endpoint t with chord == {t, t + 1/3}.
// Throws NotCriticalError.
Angle critical_parameter(const Chord& c);

// Unordered pair of non-crossing sigma_3-critical chords (shared endpoints and
// coincident chords allowed), stored in canonical chord order.
class CriticalPortrait {
 public:
  // Throws NotCriticalError or CrossingError.
  CriticalPortrait(Chord c, Chord y);

  static CriticalPortrait from_params(const Angle& t, const Angle& s);

  // "p/q-r/s,p/q-r/s"
  static CriticalPortrait parse(std::string_view text);

  const Chord& first() const noexcept { return first_; }
  const Chord& second() const noexcept { return second_; }

  std::string str() const { return first_.str() + "," + second_.str(); }

  friend bool operator==(const CriticalPortrait&, const CriticalPortrait&) = default;

 private:
  Chord first_;
  Chord second_;
};

// For a critical chord: the closed arc L of length 2/3 and the open arc I of
// length 1/3, both bounded by the chord's endpoints.
struct CriticalArcs {
  Arc long_arc;
  Arc short_arc;
};

// Throws NotCriticalError.
CriticalArcs critical_arcs(const Chord& c);

// Common image of the endpoints of a critical chord.
Angle critical_value(const Chord& c);

enum class Verdict { Weak, Strong };

// Which chord's critical orbit avoids the other chord's short arc.
enum class WeakSide { First, Second, Both };

struct WeakStrongVerdict {
  Verdict kind = Verdict::Strong;
  std::optional<WeakSide> weak_side;
  // Strong only: least n >= 0 with sigma^n(value of first) in I(second),
  // and least n with sigma^n(value of second) in I(first).
  std::optional<std::size_t> witness_first;
  std::optional<std::size_t> witness_second;

  bool weak() const noexcept { return kind == Verdict::Weak; }
};

// Least n >= 0 with sigma^n(value) inside the arc, if the orbit ever enters it.
std::optional<std::size_t> first_entry(const Angle& value, const Arc& arc);

// Exact weak/strong decision. The forward orbit of a critical chord is the
// orbit of its critical value, starting at n = 0.
WeakStrongVerdict classify(const CriticalPortrait& k);

std::string to_string(Verdict v);
std::string to_string(WeakSide side);

}  // namespace lamlab
