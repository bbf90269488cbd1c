#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace medianlab {

/// Finite simple undirected graph over dense vertex ids 0..n-1, with an
/// optional integer coordinate tuple per vertex. Edges are stored once in
/// canonical (min,max) order; adjacency lists are sorted, so every
/// iteration over the graph is deterministic.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
          std::vector<std::vector<int>> vertex_coords = {})
        : n_(vertex_count), coords_(std::move(vertex_coords)) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
        if (!coords_.empty() && static_cast<int>(coords_.size()) != n_) {
            throw std::invalid_argument("coordinate list size does not match vertex count");
        }
        for (auto& [a, b] : edge_list) {
            if (a < 0 || a >= n_ || b < 0 || b >= n_) {
                throw std::invalid_argument("edge endpoint out of range");
            }
            if (a == b) throw std::invalid_argument("loop edge not allowed");
            if (a > b) std::swap(a, b);
        }
        std::sort(edge_list.begin(), edge_list.end());
        auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
        if (dup != edge_list.end()) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                        std::to_string(dup->second) + ")");
        }
        edges_ = std::move(edge_list);
        build_adjacency();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }

    std::span<const int> neighbors(int v) const {
        return {adj_vertices_.data() + adj_offsets_[v],
                adj_vertices_.data() + adj_offsets_[v + 1]};
    }
    std::span<const int> incident_edges(int v) const {
        return {adj_edge_ids_.data() + adj_offsets_[v],
                adj_edge_ids_.data() + adj_offsets_[v + 1]};
    }
    int degree(int v) const { return adj_offsets_[v + 1] - adj_offsets_[v]; }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    /// Index into edges() for {u,v}, or -1.
    int edge_index(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return -1;
        auto nb = neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it == nb.end() || *it != v) return -1;
        return adj_edge_ids_[adj_offsets_[u] + static_cast<int>(it - nb.begin())];
    }

    bool has_coords() const { return !coords_.empty(); }
    const std::vector<std::vector<int>>& coords() const { return coords_; }

    int max_degree() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        std::vector<int> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == n_;
    }

    /// Two-colorability; fills parity (0/1 per vertex) when bipartite.
    bool is_bipartite(std::vector<char>* parity_out = nullptr) const {
        std::vector<char> color(n_, -1);
        for (int start = 0; start < n_; ++start) {
            if (color[start] != -1) continue;
            color[start] = 0;
            std::vector<int> queue{start};
            std::size_t head = 0;
            while (head < queue.size()) {
                int v = queue[head++];
                for (int w : neighbors(v)) {
                    if (color[w] == -1) {
                        color[w] = static_cast<char>(1 - color[v]);
                        queue.push_back(w);
                    } else if (color[w] == color[v]) {
                        return false;
                    }
                }
            }
        }
        if (parity_out) *parity_out = std::move(color);
        return true;
    }

private:
    void build_adjacency() {
        adj_offsets_.assign(n_ + 1, 0);
        for (const auto& [a, b] : edges_) {
            ++adj_offsets_[a + 1];
            ++adj_offsets_[b + 1];
        }
        for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
        adj_vertices_.resize(edges_.size() * 2);
        adj_edge_ids_.resize(edges_.size() * 2);
        std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            auto [a, b] = edges_[e];
            adj_vertices_[cursor[a]] = b;
            adj_edge_ids_[cursor[a]++] = e;
            adj_vertices_[cursor[b]] = a;
            adj_edge_ids_[cursor[b]++] = e;
        }
        // Edge list is sorted, so per-vertex neighbor runs come out sorted for
        // the lower endpoint; sort each run to cover the upper endpoint too.
        for (int v = 0; v < n_; ++v) {
            int lo = adj_offsets_[v], hi = adj_offsets_[v + 1];
            std::vector<std::pair<int, int>> run;
            run.reserve(hi - lo);
            for (int i = lo; i < hi; ++i) run.emplace_back(adj_vertices_[i], adj_edge_ids_[i]);
            std::sort(run.begin(), run.end());
            for (int i = lo; i < hi; ++i) {
                adj_vertices_[i] = run[i - lo].first;
                adj_edge_ids_[i] = run[i - lo].second;
            }
        }
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_offsets_;
    std::vector<int> adj_vertices_;
    std::vector<int> adj_edge_ids_;
    std::vector<std::vector<int>> coords_;
};

inline void require_vertex(const Graph& g, int v, const char* who) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument(std::string(who) + ": unknown vertex id " + std::to_string(v));
    }
}

/// BFS distances from source; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    require_vertex(g, source, "bfs_distances");
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue;
    queue.reserve(g.vertex_count());
    queue.push_back(source);
    dist[source] = 0;
    std::size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline int graph_distance(const Graph& g, int u, int v) {
    auto d = bfs_distances(g, u);
    if (d[v] < 0) throw std::invalid_argument("graph_distance: vertices not connected");
    return d[v];
}

/// Metric interval I(u,v): vertices on shortest u-v paths, sorted by id.
inline std::vector<int> interval(const Graph& g, int u, int v) {
    require_vertex(g, u, "interval");
    require_vertex(g, v, "interval");
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    if (du[v] < 0) throw std::invalid_argument("interval: vertices not connected");
    std::vector<int> result;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (du[x] >= 0 && dv[x] >= 0 && du[x] + dv[x] == du[v]) result.push_back(x);
    }
    return result;
}

/// Dense distance matrix (row-major, uint16). Guarded by a vertex cap since
/// memory grows quadratically.
inline std::vector<std::uint16_t> distance_matrix(const Graph& g, int max_vertices = 4096) {
    int n = g.vertex_count();
    if (n > max_vertices) {
        throw std::invalid_argument("distance_matrix: graph too large (" + std::to_string(n) +
                                    " vertices)");
    }
    std::vector<std::uint16_t> dist(static_cast<std::size_t>(n) * n, UINT16_MAX);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        auto* row = dist.data() + static_cast<std::size_t>(s) * n;
        queue.clear();
        queue.push_back(s);
        row[s] = 0;
        std::size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            for (int w : g.neighbors(v)) {
                if (row[w] == UINT16_MAX) {
                    row[w] = static_cast<std::uint16_t>(row[v] + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    return dist;
}

/// Exhaustive convexity test: S is convex iff it contains every interval
/// between its members. Cubic in the worst case; intended for small graphs.
inline bool is_convex_exhaustive(const Graph& g, const std::vector<int>& members,
                                 std::array<int, 3>* witness = nullptr) {
    int n = g.vertex_count();
    std::vector<char> in_set(n, 0);
    for (int v : members) {
        require_vertex(g, v, "is_convex_exhaustive");
        in_set[v] = 1;
    }
    auto dist = distance_matrix(g);
    for (std::size_t i = 0; i < members.size(); ++i) {
        int u = members[i];
        const auto* du = dist.data() + static_cast<std::size_t>(u) * n;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int v = members[j];
            const auto* dv = dist.data() + static_cast<std::size_t>(v) * n;
            for (int w = 0; w < n; ++w) {
                if (!in_set[w] && du[w] != UINT16_MAX && dv[w] != UINT16_MAX &&
                    du[w] + dv[w] == du[v]) {
                    if (witness) *witness = {u, v, w};
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace medianlab
