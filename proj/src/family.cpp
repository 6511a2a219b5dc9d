#include "scover/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace scover {

const char* to_string(CapMode mode) {
  switch (mode) {
    case CapMode::standard: return "standard";
    case CapMode::strict: return "strict";
    case CapMode::none: return "none";
  }
  return "?";
}

CapMode cap_mode_from_string(const std::string& name) {
  if (name == "standard") return CapMode::standard;
  if (name == "strict") return CapMode::strict;
  if (name == "none") return CapMode::none;
  throw std::invalid_argument("unknown cap mode \"" + name +
                              "\" (expected standard|strict|none)");
}

bool canonical_line_less(const Line& a, const Line& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::int64_t binom2(std::int64_t a) { return a < 2 ? 0 : a * (a - 1) / 2; }

CoverFamily::CoverFamily(int n, int s, std::vector<Line> lines)
    : n_(n), s_(s), lines_(std::move(lines)) {}

std::vector<int> CoverFamily::line_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(lines_.size());
  for (const Line& line : lines_) sizes.push_back(static_cast<int>(line.size()));
  return sizes;
}

CoverFamily make_family(int n, int s, std::vector<Line> lines) {
  if (n < 1) throw std::invalid_argument("make_family: n must be >= 1");
  if (s < 2) throw std::invalid_argument("make_family: s must be >= 2");

  std::vector<std::pair<Line, int>> tagged;
  tagged.reserve(lines.size());
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    Line line = lines[idx];
    std::sort(line.begin(), line.end());
    if (line.size() < 2)
      throw std::invalid_argument("make_family: line " + std::to_string(idx) +
                                  " has fewer than 2 points");
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] < 0 || line[j] >= n)
        throw std::invalid_argument(
            "make_family: point " + std::to_string(line[j]) +
            " out of range [0," + std::to_string(n) + ") in line " +
            std::to_string(idx));
      if (j > 0 && line[j] == line[j - 1])
        throw std::invalid_argument("make_family: duplicate point " +
                                    std::to_string(line[j]) + " in line " +
                                    std::to_string(idx));
    }
    tagged.emplace_back(std::move(line), static_cast<int>(idx));
  }

  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return canonical_line_less(a.first, b.first);
    return a.second < b.second;
  });
  for (std::size_t i = 1; i < tagged.size(); ++i) {
    if (tagged[i].first == tagged[i - 1].first) {
      int a = std::min(tagged[i - 1].second, tagged[i].second);
      int b = std::max(tagged[i - 1].second, tagged[i].second);
      throw std::invalid_argument("make_family: duplicate line at input indices " +
                                  std::to_string(a) + " and " + std::to_string(b));
    }
  }

  std::vector<Line> canonical;
  canonical.reserve(tagged.size());
  for (auto& [line, idx] : tagged) canonical.push_back(std::move(line));
  return CoverFamily(n, s, std::move(canonical));
}

int cap_of(int n, int s) {
  if (s < 2) throw std::invalid_argument("cap_of: s must be >= 2");
  if (n < 2) throw std::invalid_argument("cap_of: n must be >= 2");
  return (n - 1) / (s - 1);
}

Rational bound_of(int n, int s) {
  if (s < 2) throw std::invalid_argument("bound_of: s must be >= 2");
  if (n < 2) throw std::invalid_argument("bound_of: n must be >= 2");
  return Rational(n - 1, s - 1) + (s - 1);
}

}  // namespace scover
