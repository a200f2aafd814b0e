#include "lamlab/io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

std::string sanitize_tag(const std::string& tag) {
  std::string out = tag;
  for (char& ch : out) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return out;
}

bool skippable(const std::string& line) { return line.empty() || line.front() == '#'; }

std::string take_field(std::istringstream& in, const std::string& key, std::size_t line) {
  std::string token;
  if (!(in >> token) || token.rfind(key + "=", 0) != 0) {
    throw ParseError("header field '" + key + "=' expected", line);
  }
  return token.substr(key.size() + 1);
}

std::size_t parse_count(const std::string& text, const std::string& what, std::size_t line) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("malformed " + what + " '" + text + "'", line);
  }
  try {
    return static_cast<std::size_t>(std::stoull(text));
  } catch (const std::exception&) {
    throw ParseError(what + " out of range", line);
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  for (char ch : line) {
    if (ch == ',') {
      out.emplace_back();
    } else {
      out.back().push_back(ch);
    }
  }
  return out;
}

}  // namespace

std::size_t write_lam(const FiniteLamination& lam, std::ostream& out) {
  const std::string text = lam_to_string(lam);
  out << text;
  if (!out) throw Error("failed to write lamination");
  return text.size();
}

std::string lam_to_string(const FiniteLamination& lam) {
  std::string out = "LAM d=3 depth=";
  out += lam.depth() ? std::to_string(*lam.depth()) : "none";
  out += " count=" + std::to_string(lam.size());
  out += " source=" + sanitize_tag(lam.source()) + "\n";
  for (const Chord& c : lam.leaves()) out += c.str() + "\n";
  return out;
}

LamCrossingError::LamCrossingError(Chord first, std::size_t first_line, Chord second, std::size_t second_line)
    : CrossingPairError(std::move(first), std::move(second)),
      first_line_(first_line),
      second_line_(second_line) {}

FiniteLamination read_lam(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<unsigned> depth;
  std::string source;
  std::size_t count = 0;
  bool have_header = false;
  std::vector<Chord> chords;
  std::vector<std::size_t> lines;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ParseError("CR line ending", lineno);
    if (skippable(line)) continue;
    if (!have_header) {
      std::istringstream h(line);
      std::string magic;
      h >> magic;
      if (magic != "LAM") throw ParseError("missing LAM header", lineno);
      if (take_field(h, "d", lineno) != "3") throw ParseError("only d=3 laminations are supported", lineno);
      std::string depth_text = take_field(h, "depth", lineno);
      if (depth_text != "none") depth = static_cast<unsigned>(parse_count(depth_text, "depth", lineno));
      count = parse_count(take_field(h, "count", lineno), "count", lineno);
      auto pos = line.find(" source=");
      if (pos == std::string::npos) throw ParseError("header field 'source=' expected", lineno);
      source = line.substr(pos + 8);
      have_header = true;
      continue;
    }
    try {
      chords.push_back(Chord::parse(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), lineno);
    }
    lines.push_back(lineno);
  }
  if (!have_header) throw ParseError("empty lamination file");
  if (chords.size() != count) {
    throw ParseError("header declares " + std::to_string(count) + " chords, found " + std::to_string(chords.size()));
  }
  if (auto hit = find_crossing(chords)) {
    throw LamCrossingError(chords[hit->first], lines[hit->first], chords[hit->second], lines[hit->second]);
  }
  return FiniteLamination(std::move(chords), depth, std::move(source));
}

FiniteLamination lam_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_lam(in);
}

void write_survey_header(std::ostream& out) { out << "t,s,verdict,weak_side,witness_m,witness_n\n"; }

void write_survey_row(std::ostream& out, const SurveyRecord& r) {
  out << r.t << ',' << r.s << ',' << to_string(r.verdict) << ',' << r.weak_side << ',';
  if (r.witness_t) out << *r.witness_t;
  out << ',';
  if (r.witness_s) out << *r.witness_s;
  out << '\n';
}

std::vector<SurveyRecord> read_survey_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<SurveyRecord> out;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!header) {
      if (line != "t,s,verdict,weak_side,witness_m,witness_n") throw ParseError("unexpected CSV header", lineno);
      header = true;
      continue;
    }
    auto f = split_csv(line);
    if (f.size() != 6) throw ParseError("expected 6 fields", lineno);
    SurveyRecord r;
    try {
      r.t = Angle::parse(f[0]);
      r.s = Angle::parse(f[1]);
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
    if (f[2] == "weak") {
      r.verdict = Verdict::Weak;
    } else if (f[2] == "strong") {
      r.verdict = Verdict::Strong;
    } else {
      throw ParseError("verdict must be weak or strong", lineno);
    }
    r.weak_side = f[3];
    if (!f[4].empty()) r.witness_t = parse_count(f[4], "witness", lineno);
    if (!f[5].empty()) r.witness_s = parse_count(f[5], "witness", lineno);
    out.push_back(std::move(r));
  }
  if (!header) throw ParseError("empty survey file");
  return out;
}

}  // namespace lamlab
