#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "medianlab/errors.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/rational.hpp"

namespace medianlab {

struct RatInterval {
    Rational lo, hi;

    bool degenerate() const { return !(lo < hi); }
    /// Closed-interval overlap: touching endpoints count.
    bool intersects(const RatInterval& o) const { return !(hi < o.lo) && !(o.hi < lo); }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    Rational length() const { return hi - lo; }
    friend bool operator==(const RatInterval& a, const RatInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Axis-parallel 3-dimensional box with exact rational corners. Intersection
/// is closed: boxes sharing only a face, edge or corner still intersect.
struct Box {
    RatInterval x, y, z;

    const RatInterval& axis(int a) const { return a == 0 ? x : (a == 1 ? y : z); }
    RatInterval& axis(int a) { return a == 0 ? x : (a == 1 ? y : z); }

    bool nondegenerate() const { return !x.degenerate() && !y.degenerate() && !z.degenerate(); }
    bool intersects(const Box& o) const {
        return x.intersects(o.x) && y.intersects(o.y) && z.intersects(o.z);
    }
    bool contains(const Box& o) const {
        return x.contains(o.x) && y.contains(o.y) && z.contains(o.z);
    }
    friend bool operator==(const Box& a, const Box& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

inline bool boxes_intersect(const Box& b1, const Box& b2) { return b1.intersects(b2); }

/// A finite family of boxes inside a bounding box whose one corner anchors
/// the coordinate origin side. Probes are construction scaffolding; they are
/// never part of the intersection graph.
struct BoxHypergraph {
    std::vector<Box> boxes;
    Box bounding;
    std::vector<Box> probes;

    int size() const { return static_cast<int>(boxes.size()); }

    void validate() const {
        if (!bounding.nondegenerate()) {
            throw std::invalid_argument("BoxHypergraph: degenerate bounding box");
        }
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            if (!boxes[i].nondegenerate()) {
                throw std::invalid_argument("BoxHypergraph: degenerate box " + std::to_string(i));
            }
            if (!bounding.contains(boxes[i])) {
                throw std::invalid_argument("BoxHypergraph: box " + std::to_string(i) +
                                            " outside the bounding box");
            }
        }
    }
};

/// Intersection graph over box indices (closed-intersection adjacency).
inline Graph intersection_graph(const BoxHypergraph& bh) {
    std::vector<std::pair<int, int>> edges;
    int m = bh.size();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (bh.boxes[i].intersects(bh.boxes[j])) edges.emplace_back(i, j);
        }
    }
    return Graph(m, std::move(edges));
}

/// Triangle check via the intersection graph; returns a triple of pairwise
/// intersecting boxes if one exists.
inline std::optional<std::array<int, 3>> find_box_triangle(const BoxHypergraph& bh) {
    auto g = intersection_graph(bh);
    for (const auto& [a, b] : g.edges()) {
        auto na = g.neighbors(a);
        auto nb = g.neighbors(b);
        std::vector<int> common;
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                              std::back_inserter(common));
        if (!common.empty()) return std::array<int, 3>{a, b, common.front()};
    }
    return std::nullopt;
}

/// Rewrites every corner coordinate as its index in the sorted list of
/// distinct per-axis corner values (bounding corners included). Probes are
/// dropped: their corners need not lie on the grid. The intersection graph
/// is unchanged because the rewrite is monotone per axis.
inline BoxHypergraph snap_to_grid(const BoxHypergraph& bh) {
    bh.validate();
    std::array<std::vector<Rational>, 3> values;
    for (int a = 0; a < 3; ++a) {
        values[a].push_back(bh.bounding.axis(a).lo);
        values[a].push_back(bh.bounding.axis(a).hi);
        for (const auto& b : bh.boxes) {
            values[a].push_back(b.axis(a).lo);
            values[a].push_back(b.axis(a).hi);
        }
        std::sort(values[a].begin(), values[a].end());
        values[a].erase(std::unique(values[a].begin(), values[a].end()), values[a].end());
    }
    auto index_of = [&](int a, const Rational& v) {
        auto it = std::lower_bound(values[a].begin(), values[a].end(), v);
        return static_cast<std::int64_t>(it - values[a].begin());
    };
    auto snap_box = [&](const Box& b) {
        Box out;
        for (int a = 0; a < 3; ++a) {
            out.axis(a) = {Rational(index_of(a, b.axis(a).lo)),
                           Rational(index_of(a, b.axis(a).hi))};
        }
        return out;
    };
    BoxHypergraph out;
    out.bounding = snap_box(bh.bounding);
    for (const auto& b : bh.boxes) out.boxes.push_back(snap_box(b));
    return out;
}

}  // namespace medianlab
