#include "mpw/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mpw {

namespace {

void check_connected(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) throw std::invalid_argument("graph: empty vertex set");
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) throw std::invalid_argument("graph: not connected");
}

}  // namespace

Graph Graph::trusted(std::vector<std::vector<int>> sorted_adj) {
    Graph g;
    g.adj_ = std::move(sorted_adj);
    long long deg_sum = 0;
    for (const auto& nb : g.adj_) deg_sum += static_cast<long long>(nb.size());
    g.edge_count_ = static_cast<int>(deg_sum / 2);
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n <= 0) throw std::invalid_argument("graph: vertex count must be positive");
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: vertex index out of range");
        if (u == v) throw std::invalid_argument("graph: loop edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("graph: duplicate edge");
    }
    check_connected(adj);
    return trusted(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adj) {
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        auto& nb = adj[v];
        std::sort(nb.begin(), nb.end());
        if (!nb.empty() && (nb.front() < 0 || nb.back() >= n))
            throw std::invalid_argument("graph: vertex index out of range");
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("graph: duplicate edge");
        for (int w : nb)
            if (w == v) throw std::invalid_argument("graph: loop edge");
    }
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (!std::binary_search(adj[w].begin(), adj[w].end(), v))
                throw std::invalid_argument("graph: asymmetric adjacency");
    check_connected(adj);
    return trusted(std::move(adj));
}

int Graph::min_degree() const {
    int d = vertex_count();
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_complete() const {
    const long long n = vertex_count();
    return 2LL * edge_count_ == n * (n - 1);
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v || has_edge(u, v)) throw std::invalid_argument("with_edge: not a non-edge");
    auto adj = adj_;
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    return trusted(std::move(adj));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

std::vector<int> run_bfs(const Graph& g, std::span<const int> sources) {
    const int n = g.vertex_count();
    if (sources.empty()) throw std::invalid_argument("bfs: empty source set");
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    for (int s : sources) {
        if (s < 0 || s >= n) throw std::invalid_argument("bfs: vertex index out of range");
        if (dist[s] != 0) {
            dist[s] = 0;
            q.push(s);
        }
    }
    int reached = static_cast<int>(q.size());
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != n) throw std::invalid_argument("bfs: graph not connected");
    return dist;
}

}  // namespace

DistanceTable bfs_distances(const Graph& g, std::span<const int> sources) {
    DistanceTable t;
    t.sources.assign(sources.begin(), sources.end());
    std::sort(t.sources.begin(), t.sources.end());
    t.sources.erase(std::unique(t.sources.begin(), t.sources.end()), t.sources.end());
    t.dist = run_bfs(g, t.sources);
    return t;
}

BfsPartition bfs_partition(const Graph& g, std::span<const int> sources) {
    auto dist = run_bfs(g, sources);
    int ecc = *std::max_element(dist.begin(), dist.end());
    BfsPartition p;
    p.levels.assign(ecc + 1, {});
    for (int v = 0; v < g.vertex_count(); ++v) p.levels[dist[v]].push_back(v);
    return p;
}

long long status(const Graph& g, std::span<const int> sources) {
    auto dist = run_bfs(g, sources);
    long long sum = 0;
    for (int d : dist) sum += d;
    return sum;
}

long long wiener_index(const Graph& g) {
    long long twice = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int root[1] = {v};
        twice += status(g, root);
    }
    return twice / 2;
}

bool is_cut_set(const Graph& g, std::span<const int> s) {
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("is_cut_set: vertex index out of range");
        removed[v] = 1;
    }
    int remaining = 0, start = -1;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            ++remaining;
            start = v;
        }
    }
    if (remaining == 0) throw std::invalid_argument("is_cut_set: S must be a proper subset");
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached != remaining;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need n >= 2");
    if (g.is_complete()) return n - 1;

    // kappa <= min degree for non-complete graphs, and the neighborhood of a
    // minimum-degree vertex with a non-neighbor is a cut set, so the subset
    // search below always terminates by k = min_degree.
    const int limit = g.min_degree();
    std::vector<int> subset;
    for (int k = 1; k <= limit; ++k) {
        subset.assign(k, 0);
        for (int i = 0; i < k; ++i) subset[i] = i;
        while (true) {
            if (is_cut_set(g, subset)) return k;
            int i = k - 1;
            while (i >= 0 && subset[i] == n - k + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return limit;
}

bool induces_spanning_cycle(const Graph& g, std::span<const int> s) {
    const int k = static_cast<int>(s.size());
    if (k < 3 || k > 5) throw std::invalid_argument("induces_spanning_cycle: |S| must be 3..5");
    std::vector<int> perm(s.begin(), s.end());
    std::sort(perm.begin(), perm.end());
    if (std::adjacent_find(perm.begin(), perm.end()) != perm.end())
        throw std::invalid_argument("induces_spanning_cycle: repeated vertex");
    // First element stays fixed; the remaining (k-1)! orders cover every
    // cyclic sequence (each twice, once per direction).
    do {
        bool ok = g.has_edge(perm[k - 1], perm[0]);
        for (int i = 0; ok && i + 1 < k; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("edge list: missing header line");
    std::istringstream header(line);
    long long n = 0, m = 0;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
        throw std::invalid_argument("edge list: header must be \"n m\"");
    if (n <= 0 || m < 0) throw std::invalid_argument("edge list: bad counts");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("edge list: truncated");
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v) || (row >> extra))
            throw std::invalid_argument("edge list: bad edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list: vertex index out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw std::invalid_argument("edge list: trailing content");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace mpw
