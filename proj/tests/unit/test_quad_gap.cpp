#include <cstdint>
#include <set>

#include <gtest/gtest.h>

#include "lamlab/errors.hpp"
#include "lamlab/portrait.hpp"
#include "lamlab/quad_gap.hpp"

using namespace lamlab;

namespace {

Chord ch(const char* text) { return Chord::parse(text); }

std::vector<Angle> angles(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Angle> out;
  for (auto [p, q] : xs) out.emplace_back(p, q);
  return out;
}

// Every angle of preperiod <= pre and period dividing some n <= per whose
// whole orbit stays in the closed long arc, found by direct iteration.
std::set<Angle> pi_oracle(const Chord& c, unsigned per, unsigned pre) {
  const Arc L = critical_arcs(c).long_arc;
  std::set<Angle> out;
  for (unsigned n = 1; n <= per; ++n) {
    std::int64_t den = 1;
    for (unsigned i = 0; i < n; ++i) den *= 3;
    den -= 1;
    std::int64_t scale = 1;
    for (unsigned a = 0; a <= pre; ++a) {
      const std::int64_t q = den * scale;
      for (std::int64_t k = 0; k < q; ++k) {
        const Angle x(k, q);
        const auto o = orbit(x);
        if (o.preperiod > pre || o.period > per) continue;
        bool inside = true;
        for (const Angle& p : o.points) inside = inside && in_arc(p, L);
        if (inside) out.insert(x);
      }
      scale *= 3;
    }
  }
  return out;
}

}  // namespace

TEST(Pi, Examples) {
  EXPECT_EQ(pi_points(ch("0-1/3"), 2, 0).points, angles({{0, 1}, {1, 2}, {5, 8}, {7, 8}}));
  EXPECT_EQ(pi_points(ch("1/2-5/6"), 2, 0).points, angles({{0, 1}, {1, 8}, {3, 8}, {1, 2}}));
  // 2/3 lies in [1/3, 1] and maps to the fixed point 0, so it belongs too.
  EXPECT_EQ(pi_points(ch("0-1/3"), 1, 1).points, angles({{0, 1}, {1, 3}, {1, 2}, {2, 3}, {5, 6}}));
}

TEST(Pi, MatchesBruteForce) {
  for (const char* c : {"0-1/3", "1/2-5/6", "1/12-5/12", "1/4-7/12", "1/9-4/9"}) {
    for (unsigned per = 1; per <= 3; ++per) {
      for (unsigned pre = 0; pre <= 2; ++pre) {
        const auto got = pi_points(ch(c), per, pre).points;
        const auto want = pi_oracle(ch(c), per, pre);
        EXPECT_EQ(std::set<Angle>(got.begin(), got.end()), want) << c << " " << per << " " << pre;
      }
    }
  }
}

TEST(Pi, RejectsNonCritical) { EXPECT_THROW(pi_points(ch("0-1/2"), 1, 0), NotCriticalError); }

TEST(Gap, FromPi) {
  const Gap g = gap_from_pi(pi_points(ch("0-1/3"), 2, 0));
  EXPECT_EQ(g.vertices(), angles({{0, 1}, {1, 2}, {5, 8}, {7, 8}}));
  EXPECT_EQ(g.degree, 2u);
  EXPECT_EQ(g.edges().size(), 4u);
  const Gap d = gap_from_pi(pi_points(ch("0-1/3"), 1, 0));
  EXPECT_EQ(d.vertices(), angles({{0, 1}, {1, 2}}));
  EXPECT_EQ(d.edges(), std::vector<Chord>{ch("0-1/2")});
  EXPECT_THROW(Gap({}), InvalidArgument);
  EXPECT_THROW(Gap(angles({{1, 2}})), InvalidArgument);
}

TEST(Gap, Majors) {
  const auto m4 = invariant_gap_majors(gap_from_pi(pi_points(ch("0-1/3"), 2, 0)));
  ASSERT_EQ(m4.size(), 1u);
  EXPECT_EQ(m4[0].edge, ch("0-1/2"));
  EXPECT_NE(std::find(m4[0].witnesses.begin(), m4[0].witnesses.end(), ch("0-1/3")), m4[0].witnesses.end());

  const auto md = invariant_gap_majors(Gap(angles({{0, 1}, {1, 2}})));
  ASSERT_EQ(md.size(), 1u);
  EXPECT_EQ(md[0].edge, ch("0-1/2"));

  const auto mq = invariant_gap_majors(Gap(angles({{1, 4}, {3, 4}})));
  ASSERT_EQ(mq.size(), 1u);
  EXPECT_EQ(mq[0].edge, ch("1/4-3/4"));
  EXPECT_NE(std::find(mq[0].witnesses.begin(), mq[0].witnesses.end(), ch("1/4-7/12")), mq[0].witnesses.end());
}

TEST(Gap, MajorsRequireInvariance) {
  EXPECT_THROW(invariant_gap_majors(Gap(angles({{1, 5}, {2, 5}}))), InvalidArgument);
}

TEST(Gap, Rotational) {
  EXPECT_TRUE(is_rotational(Gap(angles({{1, 13}, {3, 13}, {9, 13}}))));
  EXPECT_FALSE(is_rotational(Gap(angles({{1, 8}, {3, 8}, {5, 8}, {7, 8}}))));
  EXPECT_TRUE(is_rotational(Gap(angles({{1, 4}, {3, 4}}))));
  EXPECT_THROW(is_rotational(Gap(angles({{0, 1}, {1, 3}}))), InvalidArgument);
}

TEST(Gap, EdgesAvoidWeakPortraitChords) {
  for (int q : {6, 12}) {
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) {
        const Chord c = critical_chord(Angle(i, q));
        const Chord y = critical_chord(Angle(j, q));
        if (chords_cross(c, y)) continue;
        const CriticalPortrait k(c, y);
        const auto v = classify(k);
        if (!v.weak()) continue;
        // The chord whose short arc the other critical orbit avoids.
        const Chord& w = *v.weak_side == WeakSide::Second ? k.first() : k.second();
        const Gap g = gap_from_pi(pi_points(w, 4, 2));
        EXPECT_TRUE(is_forward_invariant(g));
        for (const Chord& e : g.edges()) {
          EXPECT_FALSE(chords_cross(e, k.first())) << k.str() << " " << e.str();
          EXPECT_FALSE(chords_cross(e, k.second())) << k.str() << " " << e.str();
        }
      }
    }
  }
}
