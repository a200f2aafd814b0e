#include "lamlab/chord.hpp"

#include <cctype>
#include <ostream>

#include "lamlab/errors.hpp"

namespace lamlab {

Chord::Chord(Angle x, Angle y) {
  if (y < x) std::swap(x, y);
  a_ = std::move(x);
  b_ = std::move(y);
}

Chord Chord::parse(std::string_view text) {
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] == '-' && std::isdigit(static_cast<unsigned char>(text[i - 1]))) {
      return Chord(Angle::parse(text.substr(0, i)), Angle::parse(text.substr(i + 1)));
    }
  }
  throw ParseError("malformed chord '" + std::string(text) + "' (expected p/q-r/s)");
}

std::string Chord::str() const { return a_.str() + "-" + b_.str(); }

std::ostream& operator<<(std::ostream& os, const Chord& c) { return os << c.str(); }

Chord image(const Chord& c, unsigned d) { return Chord(sigma(c.a(), d), sigma(c.b(), d)); }

Rational chord_length(const Chord& c) { return circle_distance(c.a(), c.b()); }

bool chords_cross(const Chord& x, const Chord& y) {
  if (x.a() < y.a()) return y.a() < x.b() && x.b() < y.b();
  if (y.a() < x.a()) return x.a() < y.b() && y.b() < x.b();
  return false;
}

bool chords_disjoint(const Chord& x, const Chord& y) {
  return !x.shares_endpoint(y) && !chords_cross(x, y);
}

bool is_critical(const Chord& c, unsigned d) {
  if (c.degenerate()) throw InvalidArgument("degenerate chord " + c.str() + " has no criticality");
  return sigma(c.a(), d) == sigma(c.b(), d);
}

std::string Arc::str() const {
  return std::string(includes_start ? "[" : "(") + start.str() + ", " + end.str() +
         (includes_end ? "]" : ")");
}

bool in_arc(const Angle& x, const Arc& arc) {
  if (arc.start == arc.end) return x == arc.start && arc.includes_start && arc.includes_end;
  if (x == arc.start) return arc.includes_start;
  if (x == arc.end) return arc.includes_end;
  if (arc.start < arc.end) return arc.start < x && x < arc.end;
  return arc.start < x || x < arc.end;
}

Angle arc_midpoint(const Arc& arc) {
  return arc.start + Angle::from_rational(arc.length() / 2);
}

}  // namespace lamlab
