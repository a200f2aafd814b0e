#pragma once

#include <optional>
#include <vector>

#include "lamlab/angle.hpp"
#include "lamlab/chord.hpp"

namespace lamlab {

// Finite approximation from below of the set of points whose whole forward
// orbit stays in the closed long arc of a critical chord. Only points of
// preperiod <= preperiod_bound and period <= period_bound are considered.
struct PiApproximation {
  Chord chord;
  unsigned period_bound = 1;
  unsigned preperiod_bound = 0;
  std::vector<Angle> points;  // sorted
};

// Brute-force scan of all k / (3^a (3^b - 1)) with a <= preperiod_bound and
// 1 <= b <= period_bound. Throws NotCriticalError, or InvalidArgument when
// period_bound == 0 or the grid is too large to scan.
PiApproximation pi_points(const Chord& c, unsigned period_bound, unsigned preperiod_bound);

// Convex hull of a finite circle set, given by its cyclically sorted vertices.
class Gap {
 public:
  // Sorts the vertices. Throws InvalidArgument on repeats or fewer than 2.
  explicit Gap(std::vector<Angle> vertices);

  const std::vector<Angle>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  // Chords between cyclically adjacent vertices. A two-vertex gap is a leaf
  // and has the single edge between them.
  std::vector<Chord> edges() const;

  std::optional<unsigned> period;
  std::optional<unsigned> degree;

 private:
  std::vector<Angle> vertices_;
};

// Throws InvalidArgument when the approximation is empty or has one point.
Gap gap_from_pi(const PiApproximation& pi);

// sigma_3 maps the vertex set into itself.
bool is_forward_invariant(const Gap& g);

struct Major {
  Chord edge;
  // Critical chords off an endpoint of the edge lying in the closure of the
  // circle arc cut off by the edge, hence outside the gap's interior.
  std::vector<Chord> witnesses;
};

// Edges that admit a critical chord from one of their endpoints avoiding the
// interior of the gap. Verdicts are relative to the given vertex list.
// Throws InvalidArgument for gaps that are not forward invariant.
std::vector<Major> invariant_gap_majors(const Gap& g);

// sigma_3 permutes the vertices with a constant index shift. Throws
// InvalidArgument unless sigma_3 maps the vertex set onto itself.
bool is_rotational(const Gap& g);

}  // namespace lamlab
