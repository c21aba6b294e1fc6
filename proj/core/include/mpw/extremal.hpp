#pragma once

#include <boost/rational.hpp>

#include "mpw/embedding.hpp"

namespace mpw {

using Rational = boost::rational<long long>;

/// The Apollonian network T_n (n >= 3): for 3|n, three concentric
/// triangle classes joined by diagonal and path edges; for n = 1 (mod 3),
/// T_{n-1} with a degree-3 vertex in the first terminal face; for
/// n = 2 (mod 3), T_{n-2} with one such vertex in each terminal face.
/// Class vertices are labeled a_i,b_i,c_i -> 3(i-1), 3(i-1)+1, 3(i-1)+2;
/// added vertices take the largest labels.
Embedding construct_tn(int n);

/// floor((n^3 + 3n^2)/18) evaluated through its exact mod-3 cases
/// ((n^3+3n^2)/18, (n^3+3n^2-4)/18, (n^3+3n^2-2)/18); divisibility is
/// asserted, never rounded.
long long wiener_upper_bound(int n);

/// Closed-form status bound sigma_s(m) for s in {3,4,5}: the maximum of
/// sum(i * |S_i|) over level partitions of m vertices whose non-terminal
/// levels have size >= s. Equals the greedy level-filling sum
/// s*(1+...+floor(m/s)) + (floor(m/s)+1)*(m - s*floor(m/s)).
long long sigma_bound(int s, long long m);

/// Diameter-2 triangulation with W = (n-2)^2 + 2 (n >= 4): hub adjacent
/// to a rim cycle, outer region fanned from rim vertex 0. Rim vertices
/// are 0..n-2, the hub is n-1.
Embedding construct_min_wiener(int n);

/// Conjectured maximum Wiener index among k-connected triangulations,
/// k = 4 (n >= 6) or k = 5 (n >= 12), as an exact rational.
Rational conjecture_bound(int k, int n);

}  // namespace mpw
