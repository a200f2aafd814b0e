#include "lamlab/alliance.hpp"

#include <algorithm>
#include <ostream>

#include "lamlab/errors.hpp"
#include "lamlab/io.hpp"
#include "lamlab/lamination.hpp"
#include "lamlab/pullback.hpp"

namespace lamlab {

FriendVerdict friends_probe(const CriticalPortrait& k1, const CriticalPortrait& k2, unsigned depth) {
  FriendVerdict v;
  v.depth = depth;
  if (auto hit = first_crossing(k2, build_pullback(k1, depth))) {
    v.kind = FriendVerdict::Kind::PullbackObstruction;
    v.witness = std::move(hit);
    return v;
  }
  if (auto hit = first_crossing(k1, build_pullback(k2, depth))) {
    v.kind = FriendVerdict::Kind::PullbackObstruction;
    v.witness = std::move(hit);
  }
  return v;
}

PrimeVerdict prime_probe(const CriticalPortrait& k, unsigned depth) {
  PrimeVerdict v;
  v.depth = depth;
  if (classify(k).weak()) {
    // K is compatible with its own pullback, so it is its own weak friend.
    v.kind = PrimeVerdict::Kind::PrimeCertified;
    v.certificate = k;
    return v;
  }

  const FiniteLamination lam = build_pullback(k, depth);
  const ParameterSet allowed = compatible_intervals(lam);
  std::vector<Angle> frontier;
  if (allowed.full_circle) {
    for (int i = 0; i < 6; ++i) frontier.emplace_back(i, 6);
  }
  for (const Arc& a : allowed.arcs) {
    frontier.push_back(a.start);
    if (a.start != a.end) {
      frontier.push_back(arc_midpoint(a));
      frontier.push_back(a.end);
    }
  }
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
  v.frontier_size = frontier.size();

  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (std::size_t j = i; j < frontier.size(); ++j) {
      const Chord c = critical_chord(frontier[i]);
      const Chord y = critical_chord(frontier[j]);
      if (chords_cross(c, y)) continue;
      CriticalPortrait candidate(c, y);
      if (!compat(candidate, lam) || !classify(candidate).weak()) continue;
      v.kind = PrimeVerdict::Kind::PrimeCertified;
      v.certificate = std::move(candidate);
      return v;
    }
  }
  return v;
}

SurveyRecord classify_params(const Angle& t, const Angle& s) {
  const Chord ct = critical_chord(t);
  const Chord cs = critical_chord(s);
  if (chords_cross(ct, cs)) {
    throw CrossingError("critical chords " + ct.str() + " and " + cs.str() + " cross");
  }
  auto t_enters = first_entry(critical_value(ct), critical_arcs(cs).short_arc);
  auto s_enters = first_entry(critical_value(cs), critical_arcs(ct).short_arc);

  SurveyRecord r;
  r.t = t;
  r.s = s;
  if (t_enters && s_enters) {
    r.verdict = Verdict::Strong;
    r.witness_t = t_enters;
    r.witness_s = s_enters;
  } else {
    r.verdict = Verdict::Weak;
    r.weak_side = (!t_enters && !s_enters) ? "both" : (!t_enters ? "t" : "s");
  }
  return r;
}

std::vector<SurveyRecord> survey_records(unsigned grid_q) {
  if (grid_q < 2) throw InvalidArgument("survey grid must have at least 2 points per axis");
  std::vector<SurveyRecord> out;
  for (std::size_t i = 0; i < grid_q; ++i) {
    const Angle t(i, grid_q);
    for (std::size_t j = 0; j < grid_q; ++j) {
      const Angle s(j, grid_q);
      if (chords_cross(critical_chord(t), critical_chord(s))) continue;
      SurveyRecord r = classify_params(t, s);
      r.i = i;
      r.j = j;
      out.push_back(std::move(r));
    }
  }
  return out;
}

SurveySummary weak_survey(unsigned grid_q, std::ostream& out) {
  SurveySummary sum;
  sum.grid_q = grid_q;
  const auto records = survey_records(grid_q);
  write_survey_header(out);
  for (const auto& r : records) {
    write_survey_row(out, r);
    ++sum.valid;
    if (r.verdict == Verdict::Weak) {
      ++sum.weak;
    } else {
      ++sum.strong;
    }
  }
  out.flush();
  if (!out) throw Error("failed to write survey output");
  return sum;
}

}  // namespace lamlab
