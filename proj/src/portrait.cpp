#include "lamlab/portrait.hpp"

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

const Angle& one_third() {
  static const Angle third(1, 3);
  return third;
}

void require_critical(const Chord& c) {
  if (c.degenerate() || !is_critical(c)) throw NotCriticalError("chord " + c.str() + " is not critical");
}

}  // namespace

Chord critical_chord(const Angle& t) { return Chord(t, t + one_third()); }

Angle critical_parameter(const Chord& c) {
  require_critical(c);
  if (c.a() + one_third() == c.b()) return c.a();
  return c.b();
}

CriticalPortrait::CriticalPortrait(Chord c, Chord y) {
  require_critical(c);
  require_critical(y);
  if (chords_cross(c, y)) {
    throw CrossingError("critical chords " + c.str() + " and " + y.str() + " cross");
  }
  if (y < c) std::swap(c, y);
  first_ = std::move(c);
  second_ = std::move(y);
}

CriticalPortrait CriticalPortrait::from_params(const Angle& t, const Angle& s) {
  return CriticalPortrait(critical_chord(t), critical_chord(s));
}

CriticalPortrait CriticalPortrait::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("malformed portrait '" + std::string(text) + "' (expected p/q-r/s,p/q-r/s)");
  }
  return CriticalPortrait(Chord::parse(text.substr(0, comma)), Chord::parse(text.substr(comma + 1)));
}

CriticalArcs critical_arcs(const Chord& c) {
  require_critical(c);
  if (c.a() + one_third() == c.b()) {
    return {Arc::closed(c.b(), c.a()), Arc::open(c.a(), c.b())};
  }
  return {Arc::closed(c.a(), c.b()), Arc::open(c.b(), c.a())};
}

Angle critical_value(const Chord& c) {
  require_critical(c);
  return sigma(c.a());
}

std::optional<std::size_t> first_entry(const Angle& value, const Arc& arc) {
  OrbitSummary orb = orbit(value);
  for (std::size_t n = 0; n < orb.points.size(); ++n) {
    if (in_arc(orb.points[n], arc)) return n;
  }
  return std::nullopt;
}

WeakStrongVerdict classify(const CriticalPortrait& k) {
  auto into_second = first_entry(critical_value(k.first()), critical_arcs(k.second()).short_arc);
  auto into_first = first_entry(critical_value(k.second()), critical_arcs(k.first()).short_arc);

  WeakStrongVerdict v;
  if (into_second && into_first) {
    v.kind = Verdict::Strong;
    v.witness_first = into_second;
    v.witness_second = into_first;
    return v;
  }
  v.kind = Verdict::Weak;
  if (!into_second && !into_first) {
    v.weak_side = WeakSide::Both;
  } else {
    v.weak_side = into_second ? WeakSide::Second : WeakSide::First;
  }
  return v;
}

std::string to_string(Verdict v) { return v == Verdict::Weak ? "weak" : "strong"; }

std::string to_string(WeakSide side) {
  switch (side) {
    case WeakSide::First: return "first";
    case WeakSide::Second: return "second";
    case WeakSide::Both: return "both";
  }
  return "";
}

}  // namespace lamlab
