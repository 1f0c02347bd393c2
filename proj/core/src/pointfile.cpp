#include "trigeo/pointfile.hpp"

#include <istream>
#include <sstream>

namespace trigeo {

size_t PointFile::site_count() const {
  switch (kind) {
    case Kind::Points: return points.size();
    case Kind::Circle: return fractions.size() + (with_center ? 1 : 0);
    case Kind::Eisenstein: return lattice_sites.size();
  }
  return 0;
}

namespace {

std::string strip(const std::string& raw) {
  std::string s = raw;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

bool parse_long(const std::string& s, long& out) {
  try {
    size_t used = 0;
    out = std::stol(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

PointFile parse_point_file(std::istream& in) {
  PointFile pf;
  std::string line;
  int line_no = 0;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip(line);
    if (s.empty()) continue;

    if (!have_header) {
      if (s == "points")
        pf.kind = PointFile::Kind::Points;
      else if (s == "circle")
        pf.kind = PointFile::Kind::Circle;
      else if (s == "eisenstein")
        pf.kind = PointFile::Kind::Eisenstein;
      else
        throw ParseError(line_no, "expected header 'points', 'circle', or 'eisenstein'");
      have_header = true;
      continue;
    }

    auto toks = split_ws(s);
    switch (pf.kind) {
      case PointFile::Kind::Points: {
        if (toks.size() != 2) throw ParseError(line_no, "expected 'x y'");
        auto x = parse_rational(toks[0]);
        auto y = parse_rational(toks[1]);
        if (!x || !y) throw ParseError(line_no, "malformed rational coordinate");
        pf.points.push_back(Point{*x, *y});
        break;
      }
      case PointFile::Kind::Circle: {
        if (toks.size() == 1 && toks[0] == "center") {
          if (pf.with_center) throw ParseError(line_no, "duplicate 'center' line");
          pf.with_center = true;
          break;
        }
        if (toks.size() != 1) throw ParseError(line_no, "expected a fraction or 'center'");
        auto f = parse_rational(toks[0]);
        if (!f) throw ParseError(line_no, "malformed fraction");
        if (*f < 0 || *f >= 1) throw ParseError(line_no, "fraction must lie in [0,1)");
        pf.fractions.push_back(*f);
        break;
      }
      case PointFile::Kind::Eisenstein: {
        if (toks.size() != 2) throw ParseError(line_no, "expected 'a b'");
        long a, b;
        if (!parse_long(toks[0], a) || !parse_long(toks[1], b))
          throw ParseError(line_no, "malformed integer pair");
        pf.lattice_sites.push_back({a, b});
        break;
      }
    }
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "empty file");
  return pf;
}

PointFile parse_point_file_text(const std::string& text) {
  std::istringstream iss(text);
  return parse_point_file(iss);
}

std::string serialize_point_file(const PointFile& pf) {
  std::ostringstream out;
  switch (pf.kind) {
    case PointFile::Kind::Points:
      out << "points\n";
      for (const Point& p : pf.points)
        out << to_string(p.x) << " " << to_string(p.y) << "\n";
      break;
    case PointFile::Kind::Circle:
      out << "circle\n";
      for (const Rational& f : pf.fractions) out << to_string(f) << "\n";
      if (pf.with_center) out << "center\n";
      break;
    case PointFile::Kind::Eisenstein:
      out << "eisenstein\n";
      for (const auto& s : pf.lattice_sites) out << s[0] << " " << s[1] << "\n";
      break;
  }
  return out.str();
}

}  // namespace trigeo
