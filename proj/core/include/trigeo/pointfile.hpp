#pragma once

// Text formats for point configurations. Three headers:
//   points      one "x y" rational pair per line
//   circle      one turn-fraction per line, optional "center" line
//   eisenstein  one "a b" integer pair per line (triangular lattice basis)
// '#' starts a comment; blank lines are ignored. Rationals serialize as
// "p/q" in lowest terms (bare integer when q = 1), so parse/serialize
// round-trips exactly.

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigeo/geometry.hpp"

namespace trigeo {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

struct PointFile {
  enum class Kind { Points, Circle, Eisenstein };

  Kind kind = Kind::Points;
  std::vector<Point> points;                       // Points
  std::vector<Rational> fractions;                 // Circle
  bool with_center = false;                        // Circle
  std::vector<std::array<long, 2>> lattice_sites;  // Eisenstein

  size_t site_count() const;
};

// Throws ParseError with a 1-based line number on malformed input.
PointFile parse_point_file(std::istream& in);
PointFile parse_point_file_text(const std::string& text);

std::string serialize_point_file(const PointFile& pf);

}  // namespace trigeo
