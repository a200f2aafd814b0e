#include "lamlab/pullback.hpp"

#include <algorithm>
#include <map>

#include "lamlab/errors.hpp"

namespace lamlab {

RegionPartition::RegionPartition(CriticalPortrait k)
    : portrait_(std::move(k)),
      short_first_(critical_arcs(portrait_.first()).short_arc),
      short_second_(critical_arcs(portrait_.second()).short_arc) {
  if (portrait_.first() == portrait_.second()) {
    throw AmbiguousBoundary("portrait chords coincide (" + portrait_.first().str() +
                            "); pullback regions are undefined");
  }
}

std::vector<Arc> RegionPartition::arcs(int region) const {
  switch (region) {
    case 0: return {short_first_};
    case 1: return {short_second_};
    default: break;
  }
  // Between the chords: from the end of each short arc to the start of the
  // other one. Zero-length pieces occur when the chords share an endpoint.
  std::vector<Arc> out;
  if (short_first_.end != short_second_.start) out.push_back(Arc::open(short_first_.end, short_second_.start));
  if (short_second_.end != short_first_.start) out.push_back(Arc::open(short_second_.end, short_first_.start));
  return out;
}

bool RegionPartition::in_closure(const Angle& x, int region) const {
  switch (region) {
    case 0: return in_arc(x, Arc::closed(short_first_.start, short_first_.end));
    case 1: return in_arc(x, Arc::closed(short_second_.start, short_second_.end));
    default: return !in_arc(x, short_first_) && !in_arc(x, short_second_);
  }
}

RegionLocation region_of(const Angle& x, const RegionPartition& p) {
  const auto& k = p.portrait();
  if (k.first().has_endpoint(x) || k.second().has_endpoint(x)) return BoundaryPoint{x};
  for (int r = 0; r < 2; ++r) {
    if (p.in_closure(x, r)) return r;
  }
  return 2;
}

namespace {

// The lifts of y in the closure of region r that may carry a pullback of a
// leaf from y to other. Off the portrait this is the single preimage. When y
// is a critical value its preimages at the two ends of a portrait chord both
// lie in the closure; leaves from y are then split by where their other end
// lies, the short-arc region and the middle region taking opposite ends so
// that the lifts in different regions stay pairwise disjoint. A split point
// itself keeps both ends.
std::vector<Angle> allowed_lifts(const Angle& y, const std::array<Angle, 3>& preimages, const Angle& other, int r,
                                 const RegionPartition& p) {
  std::vector<Angle> pre;
  for (const Angle& x : preimages) {
    if (p.in_closure(x, r)) pre.push_back(x);
  }
  if (pre.size() < 2) return pre;

  const auto& kp = p.portrait();
  const Angle v1 = critical_value(kp.first());
  const Angle v2 = critical_value(kp.second());
  Angle start;
  Angle end;
  enum { Start, End, Both } pick;
  if (v1 != v2) {
    const int i = y == v1 ? 0 : 1;
    const Angle& w = i == 0 ? v2 : v1;
    const Arc shrt = p.arcs(i).front();
    start = shrt.start;
    end = shrt.end;
    if (other == w) {
      pick = Both;
    } else {
      const bool near = in_arc(other, Arc::open(y, w));
      pick = (near == (r == i)) ? Start : End;
    }
  } else {
    // Chords sharing an endpoint: three arcs of length 1/3, each region
    // holding two of the three preimages at its ends.
    const Arc a = p.arcs(r).front();
    start = a.start;
    end = a.end;
    const Rational u = arc_length(y, other);
    pick = u * 2 < 1 ? Start : (u * 2 > 1 ? End : Both);
  }
  std::vector<Angle> out;
  if (pick != End) out.push_back(start);
  if (pick != Start) out.push_back(end);
  return out;
}

}  // namespace

std::array<std::vector<Chord>, 3> pull_back_chord(const Chord& leaf, const RegionPartition& p) {
  const auto& k = p.portrait();
  const std::array<Angle, 3> pre_a{leaf.a().preimage(0), leaf.a().preimage(1), leaf.a().preimage(2)};
  const std::array<Angle, 3> pre_b{leaf.b().preimage(0), leaf.b().preimage(1), leaf.b().preimage(2)};
  std::array<std::vector<Chord>, 3> out;
  for (int r = 0; r < 3; ++r) {
    std::vector<Chord> cands;
    if (leaf.degenerate()) {
      for (const Angle& x : pre_a) {
        if (p.in_closure(x, r)) cands.emplace_back(x, x);
      }
    } else {
      for (const Angle& x : allowed_lifts(leaf.a(), pre_a, leaf.b(), r, p)) {
        for (const Angle& y : allowed_lifts(leaf.b(), pre_b, leaf.a(), r, p)) {
          Chord c(x, y);
          if (!chords_cross(c, k.first()) && !chords_cross(c, k.second())) cands.push_back(std::move(c));
        }
      }
    }
    for (const Chord& c : cands) {
      bool clear = std::none_of(cands.begin(), cands.end(), [&](const Chord& o) { return chords_cross(c, o); });
      if (clear) out[r].push_back(c);
    }
    if (out[r].empty()) {
      throw AmbiguousBoundary("no pullback of " + leaf.str() + " in region " + std::to_string(r) +
                              " of portrait " + k.str());
    }
    std::sort(out[r].begin(), out[r].end());
  }
  return out;
}

FiniteLamination build_pullback_from(const CriticalPortrait& k, const std::vector<Chord>& seeds, unsigned depth) {
  const RegionPartition partition(k);
  std::map<Chord, unsigned> seen;
  std::vector<Chord> frontier;
  for (const Chord& s : seeds) {
    if (!s.degenerate() && seen.emplace(s, 0).second) frontier.push_back(s);
  }
  for (unsigned gen = 1; gen <= depth && !frontier.empty(); ++gen) {
    std::vector<Chord> next;
    for (const Chord& leaf : frontier) {
      for (auto& region : pull_back_chord(leaf, partition)) {
        for (Chord& c : region) {
          if (!c.degenerate() && seen.emplace(c, gen).second) next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<Chord, unsigned>> leaves(seen.begin(), seen.end());
  return FiniteLamination::with_generations(std::move(leaves), depth, "pullback:" + k.str());
}

FiniteLamination build_pullback(const CriticalPortrait& k, unsigned depth) {
  return build_pullback_from(k, {k.first(), k.second()}, depth);
}

}  // namespace lamlab
