#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lamlab/alliance.hpp"
#include "lamlab/lamination.hpp"

namespace lamlab {

// .lam files (UTF-8, LF line endings):
//
//   LAM d=3 depth=<N|none> count=<M> source=<tag>
//   <M lines, one canonical chord p/q-r/s each, sorted>
//
// Lines starting with '#' and empty lines are ignored on read.

// Writes the canonical form; returns the number of bytes written.
// Throws Error if the sink fails.
std::size_t write_lam(const FiniteLamination& lam, std::ostream& out);
std::string lam_to_string(const FiniteLamination& lam);

class LamCrossingError : public CrossingPairError {
 public:
  LamCrossingError(Chord first, std::size_t first_line, Chord second, std::size_t second_line);

  std::size_t first_line() const noexcept { return first_line_; }
  std::size_t second_line() const noexcept { return second_line_; }

 private:
  std::size_t first_line_;
  std::size_t second_line_;
};

// Parses and validates. Throws ParseError (with line number) or
// LamCrossingError (with both line numbers).
FiniteLamination read_lam(std::istream& in);
FiniteLamination lam_from_string(const std::string& text);

// Survey CSV: header "t,s,verdict,weak_side,witness_m,witness_n"; empty
// fields where a column does not apply.
void write_survey_header(std::ostream& out);
void write_survey_row(std::ostream& out, const SurveyRecord& r);

// Throws ParseError with line numbers. Grid indices i, j are left at 0.
std::vector<SurveyRecord> read_survey_csv(std::istream& in);

}  // namespace lamlab
