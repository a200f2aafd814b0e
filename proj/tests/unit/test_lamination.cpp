#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "lamlab/errors.hpp"
#include "lamlab/lamination.hpp"
#include "lamlab/pullback.hpp"

using namespace lamlab;

namespace {

Chord ch(const char* text) { return Chord::parse(text); }

FiniteLamination lam(std::initializer_list<const char*> xs) {
  std::vector<Chord> cs;
  for (const char* x : xs) cs.push_back(ch(x));
  return FiniteLamination(cs);
}

bool any_crossing_quadratic(const std::vector<Chord>& cs) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (chords_cross(cs[i], cs[j])) return true;
  return false;
}

const CriticalPortrait kStrong = CriticalPortrait::parse("1/12-5/12,7/12-11/12");

}  // namespace

TEST(Lamination, Construction) {
  EXPECT_EQ(lam({"0-1/3", "1/2-5/6"}).size(), 2u);
  EXPECT_THROW(lam({"0-1/2", "1/4-3/4"}), CrossingPairError);
  EXPECT_TRUE(FiniteLamination().empty());
  EXPECT_EQ(lam({"1/3-1/3", "0-1/2", "1/2-0"}).size(), 1u);
  try {
    lam({"0-1/2", "1/4-3/4"});
    FAIL();
  } catch (const CrossingPairError& e) {
    EXPECT_TRUE(chords_cross(e.first(), e.second()));
  }
}

TEST(Lamination, FindCrossingAgreesWithQuadraticScan) {
  std::mt19937 rng(12345);
  for (int round = 0; round < 400; ++round) {
    const int q = 5 + round % 20;
    std::uniform_int_distribution<int> pick(0, q - 1);
    std::vector<Chord> cs;
    const int n = 1 + round % 9;
    for (int i = 0; i < n; ++i) {
      const int a = pick(rng);
      int b = pick(rng);
      if (a == b) b = (b + 1) % q;
      cs.emplace_back(Angle(a, q), Angle(b, q));
    }
    const auto hit = find_crossing(cs);
    ASSERT_EQ(hit.has_value(), any_crossing_quadratic(cs));
    if (hit) EXPECT_TRUE(chords_cross(cs[hit->first], cs[hit->second]));
  }
}

TEST(Sibling, EmptyPasses) { EXPECT_TRUE(sibling_check(FiniteLamination()).passed()); }

TEST(Sibling, LoneDiameter) {
  // {0,1/2} is its own image and its own pullback; what is missing is a
  // full collection of three disjoint siblings.
  const auto r = sibling_check(lam({"0-1/2"}));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].condition, 3);
  EXPECT_EQ(r.violations[0].leaf, ch("0-1/2"));
}

TEST(Sibling, MissingImage) {
  const auto r = sibling_check(lam({"1/4-1/2"}));
  bool saw1 = false;
  for (const auto& v : r.violations) saw1 = saw1 || v.condition == 1;
  EXPECT_TRUE(saw1);
}

TEST(Sibling, ForwardClosedPullbackPasses) {
  const FiniteLamination t = build_pullback(kStrong, 3);
  const FiniteLamination closed = forward_closure(t);
  EXPECT_EQ(closed.size(), t.size());
  const auto r = sibling_check(t);
  EXPECT_TRUE(r.passed()) << r.violations.size();
  EXPECT_GT(r.checked[3], 0u);
}

TEST(Lamination, ForwardClosure) {
  const auto f = forward_closure(lam({"1/4-1/2"}));
  EXPECT_TRUE(f.contains(ch("1/2-3/4")));
  EXPECT_TRUE(f.contains(ch("1/4-1/2")));
  EXPECT_EQ(f.size(), 2u);
}

TEST(Compat, Examples) {
  EXPECT_TRUE(compat(CriticalPortrait::parse("0-1/3,1/2-5/6"), lam({"0-1/2"})));
  EXPECT_TRUE(compat(kStrong, lam({"0-1/2"})));
  EXPECT_FALSE(compat(CriticalPortrait::parse("1/4-7/12,1/4-11/12"), lam({"0-1/2"})));
  const auto hit = first_crossing(CriticalPortrait::parse("1/4-7/12,1/4-11/12"), lam({"0-1/2"}));
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->first, ch("1/4-7/12"));
}

TEST(Intervals, Examples) {
  const auto d = compatible_intervals(lam({"0-1/2"}));
  EXPECT_FALSE(d.full_circle);
  EXPECT_EQ(d.arcs, (std::vector<Arc>{Arc::closed(Angle(0, 1), Angle(1, 6)), Arc::closed(Angle(1, 2), Angle(2, 3))}));
  EXPECT_TRUE(compatible_intervals(FiniteLamination()).full_circle);
  const auto t = compatible_intervals(lam({"0-1/3"}));
  EXPECT_EQ(t.arcs, (std::vector<Arc>{Arc::closed(Angle(0, 1), Angle(0, 1)), Arc::closed(Angle(1, 3), Angle(2, 3))}));
}

TEST(Intervals, AgreeWithPointwiseCompat) {
  std::vector<FiniteLamination> cases = {lam({"0-1/2"}), lam({"0-1/3"}), lam({"1/8-5/8", "1/4-1/2"}),
                                         build_pullback(kStrong, 2),
                                         build_pullback(CriticalPortrait::parse("0-1/3,1/2-5/6"), 2)};
  for (const auto& l : cases) {
    const ParameterSet set = compatible_intervals(l);
    std::vector<Angle> samples;
    for (int k = 0; k < 1000; ++k) samples.emplace_back(k, 1000);
    for (const Arc& a : set.arcs) {
      samples.push_back(a.start);
      samples.push_back(a.end);
      samples.push_back(a.start - Angle(1, 100000));
      samples.push_back(a.end + Angle(1, 100000));
    }
    for (const Angle& t : samples) {
      bool ok = true;
      for (const Chord& leaf : l.leaves()) ok = ok && !chords_cross(critical_chord(t), leaf);
      ASSERT_EQ(set.contains(t), ok) << t.str();
    }
  }
}

TEST(Prune, Examples) {
  EXPECT_TRUE(perfect_prune(lam({"0-1/2"}), Rational(1, 100)).empty());
  EXPECT_TRUE(perfect_prune(FiniteLamination(), Rational(1, 100)).empty());
  EXPECT_THROW(perfect_prune(FiniteLamination(), Rational(0)), InvalidArgument);
  EXPECT_EQ(chord_distance(ch("0-1/2"), ch("1/2-0")), Rational(0));
  EXPECT_EQ(chord_distance(ch("1/100-1/2"), ch("0-51/100")), Rational(1, 100));
}

TEST(Prune, DeepPullbackSurvivesAndIsStable) {
  const FiniteLamination t = build_pullback(kStrong, 8);
  const Rational eps(1, 50);
  const FiniteLamination p = perfect_prune(t, eps);
  EXPECT_FALSE(p.empty());
  EXPECT_EQ(p.size(), 19682u);  // regression value from the pilot run
  EXPECT_EQ(perfect_prune(p, eps), p);
  for (const Chord& c : p.leaves()) EXPECT_TRUE(t.contains(c));
  // Every survivor has a neighbour within eps.
  for (std::size_t i = 0; i < p.size(); i += 997) {
    bool near = false;
    for (std::size_t j = 0; j < p.size() && !near; ++j)
      near = j != i && chord_distance(p.leaves()[i], p.leaves()[j]) <= eps;
    EXPECT_TRUE(near) << p.leaves()[i];
  }
}

TEST(Chief, DiameterPreimages) {
  const FiniteLamination t = build_pullback_from(kStrong, {ch("0-1/2")}, 3);
  const FiniteLamination c = chief_approx(t, ch("0-1/2"));
  // Oracle: leaves whose iterated images reach {0,1/2} within the set.
  std::size_t expect = 0;
  for (const Chord& leaf : t.leaves()) {
    Chord x = leaf;
    bool hit = false;
    for (int n = 0; n < 8 && !hit && !x.degenerate() && t.contains(x); ++n) {
      hit = x == ch("0-1/2");
      x = image(x);
    }
    if (hit) {
      ++expect;
      EXPECT_TRUE(c.contains(leaf)) << leaf;
    }
  }
  EXPECT_EQ(c.size(), expect);
  EXPECT_EQ(chief_approx(c, ch("0-1/2")), c);
  EXPECT_THROW(chief_approx(t, ch("1/7-2/7")), InvalidArgument);
}

TEST(LongLeaf, Examples) {
  const auto p = exists_long_leaf(lam({"0-1/3", "1/2-5/6"}));
  ASSERT_TRUE(p);
  EXPECT_EQ(chord_length(*p), Rational(1, 3));
  EXPECT_FALSE(exists_long_leaf(FiniteLamination()));
  const auto deep = exists_long_leaf(build_pullback(kStrong, 6));
  ASSERT_TRUE(deep);
  EXPECT_GE(chord_length(*deep), Rational(1, 4));
}

TEST(Gaps, Counts) {
  EXPECT_EQ(gaps_extract(lam({"0-1/3"})).size(), 2u);
  EXPECT_EQ(gaps_extract(lam({"0-1/3", "1/2-5/6"})).size(), 3u);
  const auto whole = gaps_extract(FiniteLamination());
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0].pieces.at(0).kind, BoundaryPiece::Kind::FullCircle);
}

TEST(Gaps, EveryLeafBoundsTwoRegions) {
  const FiniteLamination t = build_pullback(kStrong, 3);
  const auto words = gaps_extract(t);
  EXPECT_EQ(words.size(), t.size() + 1);
  std::map<Chord, int> seen;
  Rational arc_total = 0;
  for (const auto& w : words) {
    for (const auto& p : w.pieces) {
      if (p.kind == BoundaryPiece::Kind::Leaf) ++seen[Chord(p.from, p.to)];
      if (p.kind == BoundaryPiece::Kind::CircleArc) arc_total += arc_length(p.from, p.to);
    }
  }
  EXPECT_EQ(arc_total, Rational(1));
  EXPECT_EQ(seen.size(), t.size());
  for (const auto& [c, n] : seen) EXPECT_EQ(n, 2) << c;
}

TEST(Prune, AgreesWithQuadraticOracle) {
  const FiniteLamination a = build_pullback(kStrong, 4);
  const FiniteLamination b = build_pullback(CriticalPortrait::parse("0-1/3,1/2-5/6"), 3);
  std::vector<Chord> pool(a.leaves().begin(), a.leaves().end());
  pool.insert(pool.end(), b.leaves().begin(), b.leaves().end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  // Keep an unlinked subset: greedily add what crosses nothing kept so far.
  std::vector<Chord> kept;
  for (const Chord& c : pool) {
    if (std::none_of(kept.begin(), kept.end(), [&](const Chord& k) { return chords_cross(c, k); })) kept.push_back(c);
  }
  const FiniteLamination l(kept);
  for (const Rational eps : {Rational(1, 1000), Rational(1, 200), Rational(1, 50), Rational(1, 7), Rational(2)}) {
    std::vector<bool> alive(kept.size(), true);
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::size_t> drop;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (!alive[i]) continue;
        bool near = false;
        for (std::size_t j = 0; j < kept.size() && !near; ++j)
          near = j != i && alive[j] && chord_distance(kept[i], kept[j]) <= eps;
        if (!near) drop.push_back(i);
      }
      for (std::size_t i : drop) alive[i] = false;
      changed = !drop.empty();
    }
    std::vector<Chord> want;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (alive[i]) want.push_back(l.leaves()[i]);
    EXPECT_EQ(perfect_prune(l, eps).leaves(), want) << eps;
  }
}
