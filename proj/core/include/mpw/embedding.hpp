#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpw/graph.hpp"

namespace mpw {

/// Sphere embedding of a simple connected graph as a rotation system:
/// rot[v] lists the neighbors of v in cyclic order. Face tracing follows
/// the fixed successor rule succ(u->v) = (v, w) where w immediately
/// precedes u in rot[v]; both chiralities are self-consistent, this one
/// is used everywhere.
class Embedding {
public:
    static Embedding from_rotations(std::vector<std::vector<int>> rot);

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    bool has_edge(int u, int v) const;

    Graph to_graph() const;

    bool operator==(const Embedding& other) const { return rot_ == other.rot_; }

private:
    friend Embedding trusted_embedding(std::vector<std::vector<int>> rot);
    Embedding() = default;

    std::vector<std::vector<int>> rot_;
    int edge_count_ = 0;
};

using Face = std::vector<int>;

/// All faces as directed vertex cycles; every directed edge lies on
/// exactly one face, so face lengths sum to 2m.
std::vector<Face> faces(const Embedding& e);

struct TriangulationCheck {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Accepts iff the embedding is a sphere triangulation: n >= 3, every face
/// a triangle, m = 3n-6 and Euler's relation. n = 3 (one triangle, two
/// faces) is accepted as the degenerate base case. Violations are reported
/// in the result, never thrown.
TriangulationCheck validate_triangulation(const Embedding& e);

/// Diagonal flip of edge (u,v) with incident faces (u,v,x) and (v,u,y):
/// removes uv, inserts xy, repairs the four rotations locally. Returns
/// nothing when xy is already present (or x = y), since the result would
/// not be simple. Throws if uv is not an edge.
std::optional<Embedding> flip_edge(const Embedding& e, int u, int v);

/// Canonical byte string of a triangulation: minimum, over all directed
/// starting edges and both orientations, of the breadth-first rotation
/// encoding (n, then each vertex's rotation in canonical labels, each list
/// 0-terminated). Equal codes iff the underlying graphs are isomorphic;
/// the bytes double as a planar_code graph record.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
    std::string hex() const;
};

CanonicalCode canonical_code(const Embedding& e);

/// Rebuild an embedding from canonical-code / planar_code record bytes.
Embedding embedding_from_code_bytes(std::string_view bytes);

/// New embedding with one degree-3 vertex (label n) placed inside the
/// given face, which must be a directed triangle of e.
Embedding insert_vertex_in_face(const Embedding& e, const Face& face);

/// Assemble a rotation system from a consistently oriented triangle list.
Embedding embedding_from_oriented_triangles(int n, std::span<const std::array<int, 3>> tris);

/// Wiener index straight off the rotation lists (no Graph conversion).
long long wiener_index(const Embedding& e);

}  // namespace mpw
