#pragma once

#include <cstdint>

#include "scover/family.hpp"

namespace scover {

/// Grid family on n = t*(s-1)+1 points: the s-1 columns of a t x (s-1)
/// grid plus the t rows, each row extended by the extra point z = n-1.
/// m = t + s - 1. Requires s >= 3 and t >= s (rows have size s and the
/// cap is t). Grid point (row j, column i) gets label j*(s-1)+i.
CoverFamily grid_construction(int t, int s);

/// Near pencil on n >= 3 points: the long line {0,...,n-2} plus the n-1
/// two-point lines {i, n-1}. A linear space with m = n.
CoverFamily near_pencil(int n);

/// Projective plane of prime order q, built from homogeneous coordinates
/// over GF(q): points and lines are the triples normalized to first
/// nonzero coordinate 1, labeled in lexicographic order. n = m = q^2+q+1,
/// every line has q+1 points.
CoverFamily projective_plane(std::uint64_t q);

/// Tight s-cover of size (n-1)/(s-1) + s - 1 for (s-1) | (n-1): peel a
/// disjoint t-set off as one line with t = (n-1)/(s-1), recurse with
/// (n-t, s-1), and finish with a near pencil when s reaches 2. Requires
/// t >= max(s, 2); t is invariant down the recursion.
CoverFamily recursive_tight(int n, int s);

/// Asymptotic s-cover for s >= 3: s-3 disjoint lines of size
/// floor((n-1)/(s-1)), one residual line, and a projective plane of order
/// q = prime_in_interval(n, s) on the last q^2+q+1 points.
/// m = q^2+q+1+s-2. Throws with the violated inequality named when the
/// preconditions fail.
CoverFamily asymptotic_cover(int n, int s);

}  // namespace scover
