#pragma once

// Named verification suites shared by the CLI `verify` command and the
// acceptance tests. Each check is exact; there are no tolerances anywhere.

#include <cstdint>
#include <string>
#include <vector>

namespace trigeo {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<CheckResult>& checks);

// 4-point taxonomy fuzz: every sampled quadruple gets exactly one case and
// its actual triangle count respects the case's lower bound; plus exact
// tightness witnesses (rectangle 1, non-rectangle parallelogram 2, square 1,
// non-square rhombus 2, kite 3, isosceles trapezoid 2).
std::vector<CheckResult> verify_lemma(std::uint64_t seed, int trials = 10000);

// F(1) = 4 with rectangle witnesses, F(2) = 5, counts of the named optimal
// configurations, and cross-representation agreement for the square with
// center.
std::vector<CheckResult> verify_theorem1();

// Regular n-gon classes = p(n,3) = round(n^2/12); triple enumeration up to
// n = 120, partition counting up to n = 2000, gap bound |p(n,3) - n^2/12| <= 3/4.
std::vector<CheckResult> verify_theorem2();

// Ground-set-relative evidence for the seven-point and regular-polygon
// conjectures. Evidence, not proof: exhaustive only over the stated grounds.
std::vector<CheckResult> verify_conjectures();

}  // namespace trigeo
