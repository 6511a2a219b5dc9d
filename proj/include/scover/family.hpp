#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace scover {

using PointId = std::int32_t;
using Line = std::vector<PointId>;
using Rational = boost::rational<long long>;

/// Line-size regime: standard caps sizes at (n-1)/(s-1), strict at
/// (n-1)/(s-1) - 1, none disables the check. Comparisons are done in
/// integers: a*(s-1) <= n-1 resp. (a+1)*(s-1) <= n-1.
enum class CapMode { standard, strict, none };

const char* to_string(CapMode mode);
CapMode cap_mode_from_string(const std::string& name);

/// Immutable family of lines over the point set {0, ..., n-1}.
/// Lines are held in canonical order: size descending, lexicographic
/// among equal sizes, so lines()[0] is the largest (lex-least) line.
class CoverFamily {
 public:
  int n() const { return n_; }
  int s() const { return s_; }
  int m() const { return static_cast<int>(lines_.size()); }
  const std::vector<Line>& lines() const { return lines_; }
  std::vector<int> line_sizes() const;

  friend bool operator==(const CoverFamily&, const CoverFamily&) = default;

  friend CoverFamily make_family(int n, int s, std::vector<Line> lines);

 private:
  CoverFamily(int n, int s, std::vector<Line> lines);

  int n_;
  int s_;
  std::vector<Line> lines_;
};

/// Validates raw input and returns the canonically ordered family.
/// Input lines need not be sorted. Throws std::invalid_argument on
/// n < 1, s < 2, out-of-range points, duplicate points within a line,
/// lines of size < 2, or duplicate lines (the message names both input
/// indices).
CoverFamily make_family(int n, int s, std::vector<Line> lines);

/// Largest permitted line size in the standard regime, floor((n-1)/(s-1)).
int cap_of(int n, int s);

/// Lower-bound value (n-1)/(s-1) + s - 1 as an exact rational.
Rational bound_of(int n, int s);

/// Canonical order on lines: size descending, then lexicographic.
bool canonical_line_less(const Line& a, const Line& b);

/// a*(a-1)/2, the number of pairs inside a set of size a.
std::int64_t binom2(std::int64_t a);

}  // namespace scover
