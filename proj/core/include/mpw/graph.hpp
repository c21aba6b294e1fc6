#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace mpw {

/// Simple undirected connected graph with dense vertex labels 0..n-1.
/// Adjacency lists are kept sorted; instances are immutable after
/// construction and safe to share across threads.
class Graph {
public:
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_adjacency(std::vector<std::vector<int>> adj);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    bool has_edge(int u, int v) const;
    bool is_complete() const;

    /// Copy of this graph with one extra edge (u,v); (u,v) must be a non-edge.
    Graph with_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

private:
    friend class Embedding;
    Graph() = default;
    static Graph trusted(std::vector<std::vector<int>> sorted_adj);

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

/// Distances from a source vertex set: dist[u] = d(S, u), zero on S itself.
struct DistanceTable {
    std::vector<int> sources;
    std::vector<int> dist;
};

/// Levels of the breadth-first partition rooted at a vertex set.
/// levels[i] holds exactly the vertices at distance i from levels[0].
struct BfsPartition {
    std::vector<std::vector<int>> levels;
    int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
};

DistanceTable bfs_distances(const Graph& g, std::span<const int> sources);
BfsPartition bfs_partition(const Graph& g, std::span<const int> sources);

/// Sum of distances from the source set to every vertex of g.
long long status(const Graph& g, std::span<const int> sources);

/// Sum of pairwise distances, accumulated per-source in 64 bits.
long long wiener_index(const Graph& g);

/// Size of a minimum vertex cut (n-1 for complete graphs). Exhaustive
/// subset search; intended for desk-scale graphs where the connectivity
/// is small (at most 5 for planar triangulations).
int vertex_connectivity(const Graph& g);

/// True iff deleting S disconnects g. S must be a proper subset of V.
bool is_cut_set(const Graph& g, std::span<const int> s);

/// True iff the subgraph induced on S (3 <= |S| <= 5) contains a cycle
/// through all of S. Brute force over cyclic orders.
bool induces_spanning_cycle(const Graph& g, std::span<const int> s);

/// Text edge list: first line "n m", then m lines "u v" (0-based).
/// Parsing is strict; duplicate and reversed-duplicate edges are rejected.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace mpw
