#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "medianlab/graph.hpp"

namespace medianlab::test {

/// All vertices on shortest u-v paths, found by enumerating the paths
/// themselves. Exponential; oracle for small graphs only.
inline std::vector<int> interval_by_path_enumeration(const Graph& g, int u, int v) {
    auto d = bfs_distances(g, u);
    int target = d[v];
    std::set<int> hit;
    std::vector<int> path{u};
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == v) {
            hit.insert(path.begin(), path.end());
            return;
        }
        if (static_cast<int>(path.size()) > target) return;
        for (int w : g.neighbors(at)) {
            if (d[w] == d[at] + 1) {
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
        }
    };
    dfs(dfs, u);
    return {hit.begin(), hit.end()};
}

/// Every 4-cycle of g as a sorted vertex quadruple, by brute force over
/// vertex subsets.
inline std::set<std::array<int, 4>> squares_by_brute_force(const Graph& g) {
    std::set<std::array<int, 4>> out;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    int quad[4] = {a, b, c, d};
                    // A 4-subset induces a 4-cycle iff it has exactly 4 inner
                    // edges and every member has inner degree 2.
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i) {
                        for (int j = i + 1; j < 4; ++j) {
                            if (g.has_edge(quad[i], quad[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                        }
                    }
                    if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2) {
                        out.insert({a, b, c, d});
                    }
                }
            }
        }
    }
    return out;
}

/// |I(x,y) & I(y,z) & I(x,z)| straight from the definition.
inline int triple_intersection_size(const Graph& g, int x, int y, int z) {
    auto dx = bfs_distances(g, x);
    auto dy = bfs_distances(g, y);
    auto dz = bfs_distances(g, z);
    int count = 0;
    for (int m = 0; m < g.vertex_count(); ++m) {
        if (dx[m] + dy[m] == dx[y] && dy[m] + dz[m] == dy[z] && dx[m] + dz[m] == dx[z]) ++count;
    }
    return count;
}

inline std::vector<std::pair<int, int>> sorted_edges(std::vector<std::pair<int, int>> edges) {
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace medianlab::test
