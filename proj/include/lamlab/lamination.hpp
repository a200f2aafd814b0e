#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamlab/angle.hpp"
#include "lamlab/chord.hpp"
#include "lamlab/errors.hpp"
#include "lamlab/portrait.hpp"

namespace lamlab {

class CrossingPairError : public CrossingError {
 public:
  CrossingPairError(Chord first, Chord second)
      : CrossingError("leaves " + first.str() + " and " + second.str() + " cross"),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const Chord& first() const noexcept { return first_; }
  const Chord& second() const noexcept { return second_; }

 private:
  Chord first_;
  Chord second_;
};

// Index pair (i, j) of some crossing pair, or nothing when the chords are
// pairwise unlinked. O(n log n): sweep over left endpoints with a stack of
// nested chords.
std::optional<std::pair<std::size_t, std::size_t>> find_crossing(const std::vector<Chord>& chords);

// A finite set of pairwise unlinked nondegenerate chords. Degenerate chords
// are implicit and dropped on construction.
//
// Laminations built by pullback also record, per leaf, the generation at
// which the leaf first appeared; depth() is then the last generation built.
class FiniteLamination {
 public:
  FiniteLamination() = default;

  // Throws CrossingPairError naming a crossing pair.
  explicit FiniteLamination(std::vector<Chord> chords, std::optional<unsigned> depth = std::nullopt,
                            std::string source = {});

  // Same, with a generation per chord. Duplicates keep the smallest one.
  static FiniteLamination with_generations(std::vector<std::pair<Chord, unsigned>> chords, unsigned depth,
                                           std::string source = {});

  const std::vector<Chord>& leaves() const noexcept { return leaves_; }
  std::size_t size() const noexcept { return leaves_.size(); }
  bool empty() const noexcept { return leaves_.empty(); }

  bool contains(const Chord& c) const;
  std::optional<std::size_t> index_of(const Chord& c) const;

  bool has_generations() const noexcept { return !generations_.empty(); }
  // Generation of the i-th leaf; requires has_generations().
  unsigned generation(std::size_t i) const { return generations_.at(i); }

  const std::optional<unsigned>& depth() const noexcept { return depth_; }
  const std::string& source() const noexcept { return source_; }

  // Leaves of generation <= depth. Requires has_generations().
  FiniteLamination truncated(unsigned depth) const;

  friend bool operator==(const FiniteLamination& x, const FiniteLamination& y) {
    return x.leaves_ == y.leaves_ && x.depth_ == y.depth_ && x.source_ == y.source_;
  }

 private:
  std::vector<Chord> leaves_;
  std::vector<unsigned> generations_;
  std::optional<unsigned> depth_;
  std::string source_;
};

// Adds sigma_3 images until the set is closed under the map.
// Throws CrossingPairError if an image crosses an existing leaf.
FiniteLamination forward_closure(const FiniteLamination& lam);

struct SiblingViolation {
  int condition = 0;  // 1, 2 or 3
  Chord leaf;
};

struct SiblingReport {
  // Per condition 1..3 (index 0 unused).
  std::size_t checked[4] = {0, 0, 0, 0};
  std::size_t skipped[4] = {0, 0, 0, 0};
  std::vector<SiblingViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

// Checks the three sibling-invariance conditions on a finite set:
//  (1) the image of every leaf is a leaf or degenerate;
//  (2) every leaf has a pullback in the set;
//  (3) every leaf with nondegenerate image has d pairwise disjoint siblings
//      (itself included) in the set.
// Leaves of the last generation are skipped for (2), since their pullbacks
// lie beyond the truncation.
SiblingReport sibling_check(const FiniteLamination& lam, unsigned d = 3);

// Neither chord of the portrait crosses a leaf.
bool compat(const CriticalPortrait& k, const FiniteLamination& lam);

// First (portrait chord, leaf) crossing pair, in canonical leaf order.
std::optional<std::pair<Chord, Chord>> first_crossing(const CriticalPortrait& k, const FiniteLamination& lam);

// A closed subset of the parameter circle: either everything or a finite
// union of closed arcs (single points allowed), sorted by start.
struct ParameterSet {
  bool full_circle = false;
  std::vector<Arc> arcs;

  bool contains(const Angle& t) const;
};

// All t for which critical_chord(t) crosses no leaf.
ParameterSet compatible_intervals(const FiniteLamination& lam);

// Max of the circle distances between matched endpoints, minimized over the
// two matchings.
Rational chord_distance(const Chord& x, const Chord& y);

// Repeatedly removes leaves with no other leaf within chord_distance <= eps.
// Throws InvalidArgument for eps <= 0.
FiniteLamination perfect_prune(const FiniteLamination& lam, const Rational& eps);

// Grand-orbit closure of a leaf inside the set: its iterated images present
// in the set, then everything in the set mapping onto those through leaves of
// the set. Throws InvalidArgument if the leaf is not in the set.
FiniteLamination chief_approx(const FiniteLamination& lam, const Chord& leaf);

// Some leaf of length >= 1/(d+1): the longest one.
std::optional<Chord> exists_long_leaf(const FiniteLamination& lam, unsigned d = 3);

struct BoundaryPiece {
  enum class Kind { CircleArc, Leaf, FullCircle };
  Kind kind = Kind::CircleArc;
  Angle from;
  Angle to;
};

// One complementary region of the disk, walked counterclockwise: circle arcs
// alternating with leaves. Zero-length arcs at shared endpoints are omitted.
struct BoundaryWord {
  std::vector<BoundaryPiece> pieces;
  Angle smallest;  // smallest circle angle on the boundary

  std::string str() const;
};

// Complementary regions, leaves + 1 of them, in cyclic order of their smallest
// boundary angle; ties put the outer region first.
std::vector<BoundaryWord> gaps_extract(const FiniteLamination& lam);

}  // namespace lamlab
