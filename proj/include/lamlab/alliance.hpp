#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamlab/angle.hpp"
#include "lamlab/chord.hpp"
#include "lamlab/portrait.hpp"

namespace lamlab {

// Friendship is probed through finite pullback truncations only. An
// obstruction is a concrete crossing; its absence proves nothing beyond the
// depth searched.
struct FriendVerdict {
  enum class Kind { PullbackObstruction, NoObstructionToDepth };

  Kind kind = Kind::NoObstructionToDepth;
  unsigned depth = 0;
  // Obstruction only: a chord of one portrait and the leaf of the other
  // portrait's pullback it crosses.
  std::optional<std::pair<Chord, Chord>> witness;

  bool obstructed() const noexcept { return kind == Kind::PullbackObstruction; }
};

FriendVerdict friends_probe(const CriticalPortrait& k1, const CriticalPortrait& k2, unsigned depth);

struct PrimeVerdict {
  enum class Kind { PrimeCertified, CandidateRegular };

  Kind kind = Kind::CandidateRegular;
  unsigned depth = 0;
  // PrimeCertified only: the weak portrait closing the friend-of-friend chain.
  std::optional<CriticalPortrait> certificate;
  // Parameters tried from the compatible-interval frontier (endpoints and
  // midpoints); zero when the portrait is weak itself.
  std::size_t frontier_size = 0;

  bool certified() const noexcept { return kind == Kind::PrimeCertified; }
};

// Weak portraits certify themselves. Otherwise search the endpoints and
// midpoints of the compatible parameter intervals of the depth-bounded
// pullback for a weak portrait.
PrimeVerdict prime_probe(const CriticalPortrait& k, unsigned depth);

// One classified portrait of the (t, s) survey grid, in parameter terms:
// weak_side names the parameter(s) whose critical orbit avoids the other
// chord's short arc; witness_t / witness_s are the entry iterates of the
// t- and s-chord critical values for strong portraits.
struct SurveyRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  Angle t;
  Angle s;
  Verdict verdict = Verdict::Strong;
  std::string weak_side;  // "t", "s", "both", or empty
  std::optional<std::size_t> witness_t;
  std::optional<std::size_t> witness_s;
};

// Classifies the portrait of critical_chord(t) and critical_chord(s).
// Throws CrossingError for crossing parameters.
SurveyRecord classify_params(const Angle& t, const Angle& s);

struct SurveySummary {
  std::size_t grid_q = 0;
  std::size_t valid = 0;
  std::size_t weak = 0;
  std::size_t strong = 0;

  Rational weak_fraction() const { return valid == 0 ? Rational(0) : Rational(weak, valid); }
};

// Every non-crossing (i/q, j/q) with i, j < q, ordered by (i, j).
std::vector<SurveyRecord> survey_records(unsigned grid_q);

// Streams one CSV row per valid portrait (header included) and returns the
// counts. Throws InvalidArgument for grid_q < 2 and Error if the sink fails.
SurveySummary weak_survey(unsigned grid_q, std::ostream& out);

}  // namespace lamlab
