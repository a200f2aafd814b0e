#include <gtest/gtest.h>

#include "lamlab/chord.hpp"
#include "lamlab/errors.hpp"

using namespace lamlab;

namespace {

Chord ch(const char* text) { return Chord::parse(text); }

// Numeric interleaving test on a dense sample, used as an oracle.
bool interleave_oracle(double a, double b, double c, double d) {
  auto between = [](double lo, double hi, double x) { return lo < x && x < hi; };
  if (a > b) std::swap(a, b);
  return between(a, b, c) != between(a, b, d) && c != a && c != b && d != a && d != b;
}

}  // namespace

TEST(Chord, CanonicalForm) {
  const Chord c(Angle(7, 8), Angle(1, 8));
  EXPECT_EQ(c.a(), Angle(1, 8));
  EXPECT_EQ(c.b(), Angle(7, 8));
  EXPECT_EQ(c.str(), "1/8-7/8");
  EXPECT_EQ(ch("2/6-1/2").str(), "1/3-1/2");
  EXPECT_EQ(ch("1/2-2/6"), ch("1/3-1/2"));
  EXPECT_THROW(ch("1/3"), ParseError);
  EXPECT_THROW(ch("1/3-"), Error);
}

TEST(Chord, Length) {
  EXPECT_EQ(chord_length(ch("0-1/3")), Rational(1, 3));
  EXPECT_EQ(chord_length(ch("0-1/2")), Rational(1, 2));
  EXPECT_EQ(chord_length(ch("1/8-7/8")), Rational(1, 4));
}

TEST(Chord, Crossing) {
  EXPECT_TRUE(chords_cross(ch("0-1/2"), ch("1/4-3/4")));
  EXPECT_FALSE(chords_cross(ch("0-1/3"), ch("1/3-2/3")));
  EXPECT_FALSE(chords_cross(ch("0-1/3"), ch("1/2-5/6")));
  EXPECT_FALSE(chords_cross(ch("0-1/2"), ch("0-1/2")));
  EXPECT_FALSE(chords_disjoint(ch("0-1/3"), ch("1/3-2/3")));
  EXPECT_TRUE(chords_disjoint(ch("0-1/3"), ch("1/2-5/6")));
}

TEST(Chord, CrossingAgreesWithNumericOracle) {
  const int q = 13;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = c + 1; d < q; ++d) {
          const Chord x(Angle(a, q), Angle(b, q));
          const Chord y(Angle(c, q), Angle(d, q));
          EXPECT_EQ(chords_cross(x, y), interleave_oracle(a, b, c, d));
          EXPECT_EQ(chords_cross(x, y), chords_cross(y, x));
        }
}

TEST(Chord, Critical) {
  EXPECT_TRUE(is_critical(ch("0-1/3")));
  EXPECT_TRUE(is_critical(ch("1/12-5/12")));
  EXPECT_FALSE(is_critical(ch("0-1/2")));
  EXPECT_THROW(is_critical(ch("1/5-1/5")), InvalidArgument);
}

TEST(Chord, Image) {
  EXPECT_EQ(image(ch("1/4-1/2")), ch("1/2-3/4"));
  EXPECT_TRUE(image(ch("0-1/3")).degenerate());
}

TEST(Arc, Membership) {
  EXPECT_TRUE(in_arc(Angle(3, 4), Arc::open(Angle(7, 12), Angle(11, 12))));
  EXPECT_FALSE(in_arc(Angle(0, 1), Arc::open(Angle(7, 12), Angle(11, 12))));
  EXPECT_TRUE(in_arc(Angle(1, 12), Arc::open(Angle(11, 12), Angle(1, 3))));
  EXPECT_FALSE(in_arc(Angle(7, 12), Arc::open(Angle(7, 12), Angle(11, 12))));
  EXPECT_TRUE(in_arc(Angle(7, 12), Arc::closed(Angle(7, 12), Angle(11, 12))));
  EXPECT_TRUE(in_arc(Angle(0, 1), Arc::closed(Angle(1, 3), Angle(0, 1))));
}

TEST(Arc, Midpoint) {
  EXPECT_EQ(arc_midpoint(Arc::open(Angle(11, 12), Angle(1, 12))), Angle(0, 1));
  EXPECT_EQ(arc_midpoint(Arc::open(Angle(0, 1), Angle(1, 2))), Angle(1, 4));
}
