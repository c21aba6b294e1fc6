#include "mpw/embedding.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mpw {

Embedding trusted_embedding(std::vector<std::vector<int>> rot) {
    Embedding e;
    e.rot_ = std::move(rot);
    long long deg_sum = 0;
    for (auto& r : e.rot_) {
        // normalize the linear representation: cyclic order is what matters,
        // so start each list at its smallest neighbor and let operator==
        // compare rotation systems, not arbitrary phases
        if (!r.empty())
            std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
        deg_sum += static_cast<long long>(r.size());
    }
    e.edge_count_ = static_cast<int>(deg_sum / 2);
    return e;
}

Embedding Embedding::from_rotations(std::vector<std::vector<int>> rot) {
    const int n = static_cast<int>(rot.size());
    if (n == 0) throw std::invalid_argument("embedding: empty vertex set");
    for (int v = 0; v < n; ++v) {
        std::vector<char> seen(n, 0);
        for (int w : rot[v]) {
            if (w < 0 || w >= n) throw std::invalid_argument("embedding: vertex index out of range");
            if (w == v) throw std::invalid_argument("embedding: loop edge");
            if (seen[w]) throw std::invalid_argument("embedding: repeated neighbor");
            seen[w] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        for (int w : rot[v])
            if (std::find(rot[w].begin(), rot[w].end(), v) == rot[w].end())
                throw std::invalid_argument("embedding: asymmetric adjacency");
    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : rot[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) throw std::invalid_argument("embedding: not connected");
    return trusted_embedding(std::move(rot));
}

bool Embedding::has_edge(int u, int v) const {
    const auto& r = rot_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

Graph Embedding::to_graph() const {
    auto adj = rot_;
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return Graph::trusted(std::move(adj));
}

namespace {

int position_of(const std::vector<int>& rot, int x) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == x) return i;
    throw std::invalid_argument("embedding: vertex not in rotation");
}

// Third vertex of the face on the left of u->v: the neighbor immediately
// preceding u in rot[v].
int face_apex(const Embedding& e, int u, int v) {
    const auto& rv = e.rotation(v);
    int p = position_of(rv, u);
    int d = static_cast<int>(rv.size());
    return rv[(p + d - 1) % d];
}

}  // namespace

std::vector<Face> faces(const Embedding& e) {
    const int n = e.vertex_count();
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + e.degree(v);
    std::vector<char> used(offset[n], 0);

    std::vector<Face> out;
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < e.degree(u); ++i) {
            if (used[offset[u] + i]) continue;
            Face f;
            int cu = u, ci = i;
            do {
                used[offset[cu] + ci] = 1;
                f.push_back(cu);
                int cv = e.rotation(cu)[ci];
                const auto& rv = e.rotation(cv);
                int p = position_of(rv, cu);
                int d = static_cast<int>(rv.size());
                int np = (p + d - 1) % d;
                cu = cv;
                ci = np;
            } while (!(cu == u && ci == i));
            out.push_back(std::move(f));
        }
    }
    return out;
}

TriangulationCheck validate_triangulation(const Embedding& e) {
    const long long n = e.vertex_count();
    const long long m = e.edge_count();
    if (n < 3) return {false, "fewer than 3 vertices"};
    if (m != 3 * n - 6) return {false, "edge count is not 3n-6"};
    auto fs = faces(e);
    for (const auto& f : fs)
        if (f.size() != 3) return {false, "non-triangular face"};
    const long long f = static_cast<long long>(fs.size());
    if (n - m + f != 2) return {false, "Euler relation violated"};
    return {true, {}};
}

std::optional<Embedding> flip_edge(const Embedding& e, int u, int v) {
    const int n = e.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v || !e.has_edge(u, v))
        throw std::invalid_argument("flip_edge: not an edge");
    const int x = face_apex(e, u, v);
    const int y = face_apex(e, v, u);
    if (x == y || e.has_edge(x, y)) return std::nullopt;

    auto rot = e.rotations();
    auto& ru = rot[u];
    auto& rv = rot[v];
    ru.erase(ru.begin() + position_of(ru, v));
    rv.erase(rv.begin() + position_of(rv, u));
    // At x the pair (u,v) is a face corner, likewise (v,u) at y; the new
    // diagonal slots into that corner.
    auto& rx = rot[x];
    rx.insert(rx.begin() + position_of(rx, u) + 1, y);
    auto& ry = rot[y];
    ry.insert(ry.begin() + position_of(ry, v) + 1, x);
    return trusted_embedding(std::move(rot));
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalCode canonical_code(const Embedding& e) {
    auto check = validate_triangulation(e);
    if (!check.ok) throw std::invalid_argument("canonical_code: " + check.reason);

    const int n = e.vertex_count();
    const size_t code_len = 1 + static_cast<size_t>(n) + 2 * static_cast<size_t>(e.edge_count());

    // The block emitted for the start vertex reads [2,3,...,deg+1,0], so a
    // lower-degree start always compares smaller; only minimum-degree
    // vertices can begin the minimum code.
    int dmin = n;
    for (int v = 0; v < n; ++v) dmin = std::min(dmin, e.degree(v));

    std::string best;
    std::string cand;
    cand.reserve(code_len);
    std::vector<int> label(n), entry(n), order;
    order.reserve(n);

    auto try_start = [&](int u, int v, int dir) {
        std::fill(label.begin(), label.end(), 0);
        order.clear();
        cand.clear();
        cand.push_back(static_cast<char>(static_cast<unsigned char>(n)));
        label[u] = 1;
        entry[u] = v;
        order.push_back(u);
        label[v] = 2;
        entry[v] = u;
        order.push_back(v);

        bool smaller = best.empty();
        size_t pos = 1;
        auto emit = [&](int byte) -> bool {
            if (!smaller) {
                unsigned char b = static_cast<unsigned char>(best[pos]);
                if (static_cast<unsigned char>(byte) > b) return false;
                if (static_cast<unsigned char>(byte) < b) smaller = true;
            }
            cand.push_back(static_cast<char>(static_cast<unsigned char>(byte)));
            ++pos;
            return true;
        };

        for (int idx = 0; idx < n; ++idx) {
            const int w = order[idx];
            const auto& rw = e.rotation(w);
            const int d = static_cast<int>(rw.size());
            int p = position_of(rw, entry[w]);
            for (int j = 0; j < d; ++j) {
                int nb = rw[p];
                p = dir > 0 ? (p + 1 == d ? 0 : p + 1) : (p == 0 ? d - 1 : p - 1);
                if (label[nb] == 0) {
                    label[nb] = static_cast<int>(order.size()) + 1;
                    entry[nb] = w;
                    order.push_back(nb);
                }
                if (!emit(label[nb])) return;
            }
            if (!emit(0)) return;
        }
        if (smaller) best = cand;
    };

    for (int u = 0; u < n; ++u) {
        if (e.degree(u) != dmin) continue;
        for (int v : e.rotation(u)) {
            try_start(u, v, +1);
            try_start(u, v, -1);
        }
    }
    return {std::move(best)};
}

Embedding embedding_from_code_bytes(std::string_view bytes) {
    if (bytes.empty()) throw std::invalid_argument("code: empty");
    const int n = static_cast<unsigned char>(bytes[0]);
    if (n == 0) throw std::invalid_argument("code: zero vertex count");
    std::vector<std::vector<int>> rot(n);
    size_t pos = 1;
    for (int v = 0; v < n; ++v) {
        while (true) {
            if (pos >= bytes.size()) throw std::invalid_argument("code: truncated record");
            int b = static_cast<unsigned char>(bytes[pos++]);
            if (b == 0) break;
            if (b > n) throw std::invalid_argument("code: neighbor byte out of range");
            rot[v].push_back(b - 1);
        }
    }
    if (pos != bytes.size()) throw std::invalid_argument("code: trailing bytes");
    return Embedding::from_rotations(std::move(rot));
}

Embedding insert_vertex_in_face(const Embedding& e, const Face& face) {
    if (face.size() != 3) throw std::invalid_argument("insert_vertex_in_face: face must be a triangle");
    const int p = face[0], q = face[1], r = face[2];
    // (p,q,r) must be an actual directed face: each corner's successor rule
    // must hold, i.e. r immediately precedes p in rot[q], cyclically.
    auto corner_ok = [&](int at, int before, int after) {
        const auto& ra = e.rotation(at);
        int pos = position_of(ra, after);
        int d = static_cast<int>(ra.size());
        return ra[(pos + d - 1) % d] == before;
    };
    if (!corner_ok(q, r, p) || !corner_ok(r, p, q) || !corner_ok(p, q, r))
        throw std::invalid_argument("insert_vertex_in_face: not a directed face of e");

    auto rot = e.rotations();
    const int u = static_cast<int>(rot.size());
    // At face vertex f_i the new spoke lands right after f_{i+1}.
    auto& rp = rot[p];
    rp.insert(rp.begin() + position_of(rp, q) + 1, u);
    auto& rq = rot[q];
    rq.insert(rq.begin() + position_of(rq, r) + 1, u);
    auto& rr = rot[r];
    rr.insert(rr.begin() + position_of(rr, p) + 1, u);
    rot.push_back({p, q, r});
    return trusted_embedding(std::move(rot));
}

Embedding embedding_from_oriented_triangles(int n, std::span<const std::array<int, 3>> tris) {
    // Face (a,b,c) pins successor constraints succ[a][b]=c, succ[b][c]=a,
    // succ[c][a]=b; chaining them yields each rotation.
    std::vector<std::vector<std::pair<int, int>>> succ(n);
    auto add = [&](int at, int from, int to) {
        for (auto& [f, t] : succ[at])
            if (f == from) throw std::invalid_argument("oriented triangles: conflicting corners");
        succ[at].emplace_back(from, to);
    };
    for (const auto& t : tris) {
        auto [a, b, c] = t;
        if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n || a == b || b == c || a == c)
            throw std::invalid_argument("oriented triangles: bad triangle");
        add(a, b, c);
        add(b, c, a);
        add(c, a, b);
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) throw std::invalid_argument("oriented triangles: isolated vertex");
        auto next = [&](int w) {
            for (auto& [f, t] : succ[v])
                if (f == w) return t;
            throw std::invalid_argument("oriented triangles: open rotation");
        };
        int start = succ[v].front().first;
        int w = start;
        do {
            rot[v].push_back(w);
            w = next(w);
        } while (w != start && rot[v].size() <= succ[v].size());
        if (w != start || rot[v].size() != succ[v].size())
            throw std::invalid_argument("oriented triangles: rotation does not close");
    }
    return Embedding::from_rotations(std::move(rot));
}

long long wiener_index(const Embedding& e) {
    const int n = e.vertex_count();
    long long twice = 0;
    std::vector<int> dist(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int v = queue[head++];
            twice += dist[v];
            for (int w : e.rotation(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
            }
        }
        if (tail != n) throw std::invalid_argument("wiener_index: embedding not connected");
    }
    return twice / 2;
}

}  // namespace mpw
