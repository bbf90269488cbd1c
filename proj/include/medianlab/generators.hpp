#pragma once

#include <random>
#include <vector>

#include "medianlab/box.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/median.hpp"

namespace medianlab {

/// Product-of-paths grid graph; coordinates become the vertex payload.
inline Graph grid_graph(const std::vector<int>& dims) {
    int n = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("grid_graph: dimension < 1");
        n *= d;
    }
    int k = static_cast<int>(dims.size());
    std::vector<std::vector<int>> coords(n, std::vector<int>(k, 0));
    for (int v = 1; v < n; ++v) {
        coords[v] = coords[v - 1];
        for (int a = k - 1; a >= 0; --a) {
            if (++coords[v][a] < dims[a]) break;
            coords[v][a] = 0;
        }
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stride(k, 1);
    for (int a = k - 2; a >= 0; --a) stride[a] = stride[a + 1] * dims[a + 1];
    for (int v = 0; v < n; ++v) {
        for (int a = 0; a < k; ++a) {
            if (coords[v][a] + 1 < dims[a]) edges.emplace_back(v, v + stride[a]);
        }
    }
    return Graph(n, std::move(edges), std::move(coords));
}

inline Graph path_graph(int n) { return grid_graph({n}); }

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

inline Graph hypercube_graph(int d) {
    std::vector<int> dims(d, 2);
    if (d == 0) return Graph(1, {});
    return grid_graph(dims);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return Graph(n, std::move(edges));
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

inline Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    }
    return Graph(a + b, std::move(edges));
}

inline Graph random_tree(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Graph(n, std::move(edges));
}

/// Random median graph built from grids, trees and hypercubes by gated
/// amalgamations at single vertices or along axis edges (both always gated).
inline Graph random_median_amalgam(std::mt19937_64& rng, int steps = 3) {
    auto random_block = [&rng]() {
        std::uniform_int_distribution<int> kind(0, 2);
        switch (kind(rng)) {
            case 0: {
                std::uniform_int_distribution<int> d(2, 4);
                std::vector<int> dims;
                std::uniform_int_distribution<int> axes(1, 3);
                int k = axes(rng);
                for (int a = 0; a < k; ++a) dims.push_back(d(rng));
                return grid_graph(dims);
            }
            case 1: {
                std::uniform_int_distribution<int> d(1, 3);
                return hypercube_graph(d(rng));
            }
            default: {
                std::uniform_int_distribution<int> d(3, 10);
                return random_tree(rng, d(rng));
            }
        }
    };
    Graph g = random_block();
    for (int s = 0; s < steps; ++s) {
        Graph h = random_block();
        std::uniform_int_distribution<int> vg(0, g.vertex_count() - 1);
        std::uniform_int_distribution<int> vh(0, h.vertex_count() - 1);
        std::vector<std::pair<int, int>> ident;
        int a = vg(rng), b = vh(rng);
        std::uniform_int_distribution<int> coin(0, 1);
        if (coin(rng) == 1 && g.degree(a) > 0 && h.degree(b) > 0) {
            // Edge amalgam: identify one incident edge of each.
            auto na = g.neighbors(a);
            auto nb = h.neighbors(b);
            std::uniform_int_distribution<int> pa(0, static_cast<int>(na.size()) - 1);
            std::uniform_int_distribution<int> pb(0, static_cast<int>(nb.size()) - 1);
            ident = {{a, b}, {na[pa(rng)], nb[pb(rng)]}};
        } else {
            ident = {{a, b}};
        }
        try {
            g = gated_amalgam(g, h, ident);
        } catch (const AmalgamError&) {
            g = gated_amalgam(g, h, std::vector<std::pair<int, int>>{ident[0]});
        }
        if (g.vertex_count() > 1500) break;
    }
    return g;
}

/// Random small box family with integer corners in the open first octant and
/// a unit bounding margin.
inline BoxHypergraph random_box_hypergraph(std::mt19937_64& rng, int max_boxes = 6,
                                           int coordinate_range = 4) {
    std::uniform_int_distribution<int> count(1, max_boxes);
    std::uniform_int_distribution<int> lo(1, coordinate_range);
    BoxHypergraph bh;
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
        Box b;
        for (int a = 0; a < 3; ++a) {
            int l = lo(rng);
            std::uniform_int_distribution<int> hi(l + 1, coordinate_range + 1);
            b.axis(a) = {Rational(l), Rational(hi(rng))};
        }
        bh.boxes.push_back(b);
    }
    bh.bounding.x = {Rational(0), Rational(coordinate_range + 2)};
    bh.bounding.y = {Rational(0), Rational(coordinate_range + 2)};
    bh.bounding.z = {Rational(0), Rational(coordinate_range + 2)};
    bh.validate();
    return bh;
}

}  // namespace medianlab
