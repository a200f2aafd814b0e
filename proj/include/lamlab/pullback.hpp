#pragma once

#include <array>
#include <variant>
#include <vector>

#include "lamlab/chord.hpp"
#include "lamlab/lamination.hpp"
#include "lamlab/portrait.hpp"

namespace lamlab {

// The three components of the disk minus the chords of a portrait. Region 0
// lies behind the first chord (its short arc), region 1 behind the second,
// region 2 between them. Each circular part has total length 1/3 and is
// mapped by sigma_3 onto the whole circle.
class RegionPartition {
 public:
  // Throws AmbiguousBoundary when the two chords coincide: the disk then has
  // only two complementary regions and the pullback is not defined.
  explicit RegionPartition(CriticalPortrait k);

  const CriticalPortrait& portrait() const noexcept { return portrait_; }

  // Open circle arcs making up the circular part of region r.
  std::vector<Arc> arcs(int region) const;

  // x lies in the closure of region r's circular part.
  bool in_closure(const Angle& x, int region) const;

 private:
  CriticalPortrait portrait_;
  Arc short_first_;
  Arc short_second_;
};

struct BoundaryPoint {
  Angle endpoint;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

using RegionLocation = std::variant<int, BoundaryPoint>;

RegionLocation region_of(const Angle& x, const RegionPartition& p);

// Per region, the chords joining the sigma_3-preimages of the endpoints of
// the chord that lie in that region's closure.
//
// When a preimage is a portrait endpoint the closure holds two lifts. Leaves
// from that critical value are split by the position of their other end: the
// short-arc region and the middle region attach them to opposite ends of the
// portrait chord, and a leaf at the split point keeps both. Candidates never
// cross the portrait; one crossing another candidate is dropped. A
// degenerate chord pulls back to the degenerate chords at its preimages.
// Throws AmbiguousBoundary if a region ends up with no chord.
std::array<std::vector<Chord>, 3> pull_back_chord(const Chord& leaf, const RegionPartition& p);

// Generation 0 is the seed set; generation n+1 adds the pullbacks of the
// leaves first seen in generation n. Leaves record their first generation.
FiniteLamination build_pullback_from(const CriticalPortrait& k, const std::vector<Chord>& seeds, unsigned depth);

// Depth-bounded Thurston pullback lamination seeded with the portrait chords.
FiniteLamination build_pullback(const CriticalPortrait& k, unsigned depth);

}  // namespace lamlab
