#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "mpw/embedding.hpp"
#include "mpw/extremal.hpp"
#include "mpw/graph.hpp"

namespace fixtures {

inline mpw::Embedding octahedron() {
    static const std::array<int, 3> tris[] = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
        {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4},
    };
    return mpw::embedding_from_oriented_triangles(6, tris);
}

inline mpw::Embedding icosahedron() {
    static const std::array<int, 3> tris[] = {
        {0, 1, 2},  {0, 2, 3},  {0, 3, 4},   {0, 4, 5},   {0, 5, 1},
        {1, 6, 7},  {1, 7, 2},  {2, 7, 8},   {2, 8, 3},   {3, 8, 9},
        {3, 9, 4},  {4, 9, 10}, {4, 10, 5},  {5, 10, 6},  {5, 6, 1},
        {11, 7, 6}, {11, 8, 7}, {11, 9, 8},  {11, 10, 9}, {11, 6, 10},
    };
    return mpw::embedding_from_oriented_triangles(12, tris);
}

inline mpw::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return mpw::Graph::from_edges(n, edges);
}

inline mpw::Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return mpw::Graph::from_edges(n, edges);
}

inline mpw::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return mpw::Graph::from_edges(n, edges);
}

/// Random spanning tree plus a few extra edges; always connected.
inline mpw::Graph random_connected_graph(std::mt19937& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    auto has = [&](int u, int v) {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < extra_edges * 8 && extra_edges > 0; ++t) {
        int u = pick(rng), v = pick(rng);
        if (u != v && !has(u, v)) {
            edges.emplace_back(u, v);
            --extra_edges;
        }
    }
    return mpw::Graph::from_edges(n, edges);
}

/// Random triangulation: grow from T_4 by inserting into random faces,
/// then shuffle with random legal flips.
inline mpw::Embedding random_triangulation(std::mt19937& rng, int n, int flips = -1) {
    mpw::Embedding e = mpw::construct_tn(4);
    while (e.vertex_count() < n) {
        auto fs = mpw::faces(e);
        std::uniform_int_distribution<size_t> pick(0, fs.size() - 1);
        e = mpw::insert_vertex_in_face(e, fs[pick(rng)]);
    }
    if (flips < 0) flips = 3 * n;
    std::uniform_int_distribution<int> pick_v(0, n - 1);
    for (int t = 0; t < flips; ++t) {
        int u = pick_v(rng);
        const auto& r = e.rotation(u);
        std::uniform_int_distribution<size_t> pick_n(0, r.size() - 1);
        int v = r[pick_n(rng)];
        if (auto flipped = mpw::flip_edge(e, u, v)) e = std::move(*flipped);
    }
    return e;
}

inline mpw::Embedding relabel(const mpw::Embedding& e, const std::vector<int>& perm) {
    std::vector<std::vector<int>> rot(e.vertex_count());
    for (int v = 0; v < e.vertex_count(); ++v) {
        auto& out = rot[perm[v]];
        for (int w : e.rotation(v)) out.push_back(perm[w]);
    }
    return mpw::Embedding::from_rotations(std::move(rot));
}

inline mpw::Embedding mirror(const mpw::Embedding& e) {
    auto rot = e.rotations();
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    return mpw::Embedding::from_rotations(std::move(rot));
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace fixtures
