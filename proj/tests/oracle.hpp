#pragma once

// Independent reference implementations used only by tests: they must not
// share an algorithmic path with the code they check.

#include <map>
#include <string>

#include "mpw/embedding.hpp"
#include "mpw/graph.hpp"

namespace oracle {

/// Wiener index by Floyd-Warshall over the full distance matrix.
long long wiener_floyd_warshall(const mpw::Graph& g);

/// Lexicographically minimal adjacency bit matrix over every vertex
/// permutation; ground-truth graph isomorphism for small n.
std::string brute_force_canonical(const mpw::Graph& g);

/// Every triangulation class on n vertices, generated independently of the
/// main search: all degree-3 insertions into every class one order below,
/// then flip saturation at order n. Chain starts from K4.
std::map<std::string, mpw::Embedding> slow_generate(int n);

}  // namespace oracle
