#pragma once

#include <map>
#include <string>

#include "mpw/embedding.hpp"

namespace mpw {

inline constexpr int kDefaultEnumerationCap = 13;

struct EnumerateOptions {
    int cap = kDefaultEnumerationCap;
    int jobs = 0;  // 0 = available hardware parallelism
};

/// All isomorphism classes of sphere triangulations on n vertices, keyed
/// by canonical code bytes. Representatives are decoded from their codes,
/// so the set is identical across runs and worker counts.
struct TriangulationSet {
    int n = 0;
    std::map<std::string, Embedding> classes;

    bool contains(const std::string& code) const { return classes.count(code) != 0; }
    long long count() const { return static_cast<long long>(classes.size()); }
};

/// Flip-closure search seeded with T_n: every legal diagonal flip of every
/// known class is canonicalized and inserted until no new class appears.
/// Exhaustive because the flip graph of n-vertex triangulations is
/// connected. Workers share one code set; throws when n < 4 or n > cap.
TriangulationSet enumerate_triangulations(int n, EnumerateOptions opt = {});

}  // namespace mpw
