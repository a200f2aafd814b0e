#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "lamlab/errors.hpp"
#include "lamlab/io.hpp"
#include "lamlab/pullback.hpp"
#include "lamlab/render.hpp"

using namespace lamlab;

namespace {

Chord ch(const char* text) { return Chord::parse(text); }

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

const CriticalPortrait kStrong = CriticalPortrait::parse("1/12-5/12,7/12-11/12");

}  // namespace

TEST(LamFile, EmptyHeaderOnly) {
  EXPECT_EQ(lam_to_string(FiniteLamination()), "LAM d=3 depth=none count=0 source=\n");
}

TEST(LamFile, PortraitLamination) {
  const FiniteLamination l({ch("0-1/3"), ch("1/2-5/6")}, std::nullopt, "portrait");
  const std::string text = lam_to_string(l);
  EXPECT_EQ(text, "LAM d=3 depth=none count=2 source=portrait\n0/1-1/3\n1/2-5/6\n");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  std::ostringstream out;
  EXPECT_EQ(write_lam(l, out), text.size());
}

TEST(LamFile, RoundTrip) {
  for (unsigned d = 0; d <= 4; ++d) {
    const auto l = build_pullback(kStrong, d);
    const auto back = lam_from_string(lam_to_string(l));
    EXPECT_EQ(back, l);
    EXPECT_EQ(lam_to_string(back), lam_to_string(l));
  }
}

TEST(LamFile, CommentsAndCanonicalization) {
  const auto l = lam_from_string("# note\n\nLAM d=3 depth=2 count=1 source=hand\n# chord\n2/6-1/2\n");
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l.leaves()[0].str(), "1/3-1/2");
  EXPECT_EQ(l.depth(), 2u);
  EXPECT_EQ(l.source(), "hand");
}

TEST(LamFile, CrossingNamesBothLines) {
  try {
    lam_from_string("LAM d=3 depth=none count=3 source=x\n0/1-1/2\n1/8-1/4\n1/4-3/4\n");
    FAIL();
  } catch (const LamCrossingError& e) {
    EXPECT_EQ(e.first_line(), 2u);
    EXPECT_EQ(e.second_line(), 4u);
  }
}

TEST(LamFile, ParseErrorsCarryLines) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      lam_from_string(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("LAM d=3 depth=none count=1 source=x\n1/2-x\n"), 2u);
  EXPECT_EQ(line_of("LAM d=2 depth=none count=0 source=x\n"), 1u);
  EXPECT_EQ(line_of("\nLAM d=3 depth=none count=1 source=x\r\n0-1/2\n"), 2u);
  EXPECT_EQ(line_of("HEAD\n"), 1u);
  EXPECT_THROW(lam_from_string("LAM d=3 depth=none count=2 source=x\n0-1/2\n"), ParseError);
  EXPECT_THROW(lam_from_string(""), ParseError);
}

TEST(Svg, EmptyIsCircleOnly) {
  const std::string svg = to_svg(FiniteLamination());
  EXPECT_EQ(count_of(svg, "<circle"), 1u);
  EXPECT_EQ(count_of(svg, "<path"), 0u);
  EXPECT_NE(svg.find("viewBox=\"-1.1 -1.1 2.2 2.2\""), std::string::npos);
  EXPECT_EQ(svg.size(), 273u);
}

TEST(Svg, Deterministic) {
  const auto l = build_pullback(kStrong, 4);
  RenderOptions h;
  h.geometry = RenderOptions::Geometry::Hyperbolic;
  EXPECT_EQ(to_svg(l), to_svg(l));
  EXPECT_EQ(to_svg(l, h), to_svg(lam_from_string(lam_to_string(l)), h));
  EXPECT_EQ(count_of(to_svg(l), "<path"), l.size());
}

TEST(Svg, DiameterIsStraightWhenHyperbolic) {
  RenderOptions h;
  h.geometry = RenderOptions::Geometry::Hyperbolic;
  const std::string svg = to_svg(FiniteLamination({ch("0-1/2")}), h);
  EXPECT_NE(svg.find("M 1.000000000 0.000000000 L -1.000000000 0.000000000"), std::string::npos);
  EXPECT_EQ(count_of(svg, " A "), 0u);
  const std::string bent = to_svg(FiniteLamination({ch("0-1/3")}), h);
  EXPECT_EQ(count_of(bent, " A "), 1u);
}

TEST(Raster, SingleWeakCell) {
  // Grid 6 with only (0, 1/2) reported weak: relabel every other record strong.
  auto recs = survey_records(6);
  for (auto& r : recs) {
    if (!(r.t == Angle(0, 1) && r.s == Angle(1, 2))) r.verdict = Verdict::Strong;
  }
  const std::string svg = survey_raster(recs, 6);
  EXPECT_EQ(count_of(svg, "fill=\"#c0392b\""), 1u);
  EXPECT_EQ(count_of(svg, "<rect"), 36u);
  EXPECT_EQ(survey_raster(recs, 6), svg);
}

TEST(Raster, CrossingBand) {
  const auto recs = survey_records(6);
  const std::string svg = survey_raster(recs, 6);
  std::size_t crossing = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (chords_cross(critical_chord(Angle(i, 6)), critical_chord(Angle(j, 6)))) ++crossing;
  EXPECT_EQ(count_of(svg, "fill=\"#7f8c8d\""), crossing);
  // s = t + 1/6 always crosses.
  for (int i = 0; i < 6; ++i) {
    const std::string cell = "<rect x=\"" + std::to_string(i) + "\" y=\"" + std::to_string(5 - (i + 1) % 6) + "\"";
    const auto pos = svg.find(cell);
    ASSERT_NE(pos, std::string::npos);
    EXPECT_EQ(svg.substr(svg.find("fill=", pos), 15), "fill=\"#7f8c8d\"/");
  }
}

TEST(Raster, Errors) {
  EXPECT_THROW(survey_raster({}, 6), InvalidArgument);
  auto recs = survey_records(6);
  recs.pop_back();
  EXPECT_THROW(survey_raster(recs, 6), InvalidArgument);
}

TEST(SurveyCsv, RoundTrip) {
  const auto recs = survey_records(12);
  std::ostringstream out;
  write_survey_header(out);
  for (const auto& r : recs) write_survey_row(out, r);
  std::istringstream in(out.str());
  const auto back = read_survey_csv(in);
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(back[i].t, recs[i].t);
    EXPECT_EQ(back[i].s, recs[i].s);
    EXPECT_EQ(back[i].verdict, recs[i].verdict);
    EXPECT_EQ(back[i].weak_side, recs[i].weak_side);
    EXPECT_EQ(back[i].witness_t, recs[i].witness_t);
    EXPECT_EQ(back[i].witness_s, recs[i].witness_s);
  }
}
