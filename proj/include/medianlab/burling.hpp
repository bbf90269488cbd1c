#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "medianlab/box.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/graph.hpp"

namespace medianlab {

struct BurlingCounts {
    std::int64_t boxes = 0;
    std::int64_t probes = 0;
};

/// Predicted sizes of the recursive construction at a given level. Level 1 is
/// a single box; burling_family(n) uses level n+1.
inline BurlingCounts burling_counts_at_level(int level) {
    BurlingCounts c{1, 1};
    const std::int64_t cap = std::int64_t(1) << 40;
    for (int l = 1; l < level; ++l) {
        __int128 boxes = static_cast<__int128>(c.boxes) +
                         static_cast<__int128>(c.probes) * (c.boxes + c.probes);
        __int128 probes = 2 * static_cast<__int128>(c.probes) * c.probes;
        c.boxes = boxes > cap ? cap : static_cast<std::int64_t>(boxes);
        c.probes = probes > cap ? cap : static_cast<std::int64_t>(probes);
    }
    return c;
}

namespace detail {

struct BurlingProbe {
    std::vector<int> members;  ///< box indices forming the probe's stable set
    Box region;                ///< x spans the member slabs; (y,z) is the corridor
};

struct BurlingBuild {
    std::vector<Box> boxes;
    std::vector<BurlingProbe> probes;
    std::vector<std::pair<int, int>> edges;  ///< intended intersection graph
};

/// One recursion level inside `frame`.
///
/// Shape of the construction: member boxes of a probe appear inside the probe
/// region as full-cross-section slabs stacked along x, and the region's (y,z)
/// rectangle (the corridor) meets no other box of the family. Each probe is
/// consumed by planting a shrunken copy of the previous level in the box-free
/// right end of its region plus, per probe of that copy, one "brace" box that
/// meets exactly the copy probe's members. The two derived probes extend the
/// consumed one by the copy probe's members or by the brace; corridors of
/// distinct probes stay pairwise disjoint in z, which keeps all the pieces
/// from touching across subtrees.
inline BurlingBuild burling_build(int level, const Box& frame) {
    BurlingBuild result;
    if (level <= 1) {
        Box b;
        b.x = {lerp(frame.x.lo, frame.x.hi, 1, 4), lerp(frame.x.lo, frame.x.hi, 1, 2)};
        b.y = frame.y;
        b.z = frame.z;
        result.boxes.push_back(b);
        result.probes.push_back(BurlingProbe{{0}, frame});
        return result;
    }
    result = burling_build(level - 1, frame);
    std::vector<BurlingProbe> consumed = std::move(result.probes);
    result.probes.clear();

    for (const auto& p : consumed) {
        const RatInterval& Xp = p.region.x;
        const RatInterval& Yp = p.region.y;
        const RatInterval& Zp = p.region.z;
        Rational max_slab = result.boxes[p.members.front()].x.hi;
        Rational min_slab = result.boxes[p.members.front()].x.lo;
        for (int m : p.members) {
            max_slab = std::max(max_slab, result.boxes[m].x.hi, std::less<Rational>());
            min_slab = std::min(min_slab, result.boxes[m].x.lo, std::less<Rational>());
        }
        Box inner_frame;
        inner_frame.x = {lerp(max_slab, Xp.hi, 1, 4), lerp(max_slab, Xp.hi, 3, 4)};
        Rational mu = (Yp.hi - Yp.lo) * Rational(1, 4);
        inner_frame.y = {Yp.lo, Yp.hi - mu};
        inner_frame.z = Zp;

        BurlingBuild copy = burling_build(level - 1, inner_frame);
        int base = static_cast<int>(result.boxes.size());
        for (auto& b : copy.boxes) result.boxes.push_back(b);
        for (auto [a, b] : copy.edges) result.edges.emplace_back(a + base, b + base);

        for (auto& q : copy.probes) {
            for (auto& m : q.members) m += base;
            const RatInterval& Xq = q.region.x;
            const RatInterval& Yq = q.region.y;
            const RatInterval& Zq = q.region.z;
            Rational hull_lo = result.boxes[q.members.front()].x.lo;
            Rational hull_hi = result.boxes[q.members.front()].x.hi;
            for (int m : q.members) {
                hull_lo = std::min(hull_lo, result.boxes[m].x.lo, std::less<Rational>());
                hull_hi = std::max(hull_hi, result.boxes[m].x.hi, std::less<Rational>());
            }
            Box brace;
            brace.x = {lerp(Xq.lo, hull_lo, 1, 2), lerp(hull_hi, Xq.hi, 1, 2)};
            brace.y = {lerp(Yq.lo, Yq.hi, 1, 2), Yp.hi - mu * Rational(1, 2)};
            brace.z = {Zq.lo, lerp(Zq.lo, Zq.hi, 1, 3)};
            int brace_idx = static_cast<int>(result.boxes.size());
            result.boxes.push_back(brace);
            for (int m : q.members) result.edges.emplace_back(m, brace_idx);

            BurlingProbe join;  // consumed members plus the copy probe's members
            join.members = p.members;
            join.members.insert(join.members.end(), q.members.begin(), q.members.end());
            join.region.x = {lerp(Xp.lo, min_slab, 1, 2), lerp(hull_hi, Xq.hi, 3, 4)};
            join.region.y = Yq;
            join.region.z = {lerp(Zq.lo, Zq.hi, 1, 2), Zq.hi};

            BurlingProbe pick;  // consumed members plus the brace
            pick.members = p.members;
            pick.members.push_back(brace_idx);
            pick.region.x = {lerp(Xp.lo, min_slab, 1, 2), lerp(brace.x.hi, Xq.hi, 1, 2)};
            pick.region.y = {Yp.hi - mu * Rational(7, 8), Yp.hi - mu * Rational(3, 4)};
            pick.region.z = brace.z;

            result.probes.push_back(std::move(join));
            result.probes.push_back(std::move(pick));
        }
    }
    for (auto& probe : result.probes) {
        std::sort(probe.members.begin(), probe.members.end());
    }
    return result;
}

/// Every probe region must meet exactly its member boxes.
inline void check_probe_exactness(const BurlingBuild& b, std::size_t max_probes) {
    std::size_t limit = std::min(max_probes, b.probes.size());
    for (std::size_t pi = 0; pi < limit; ++pi) {
        const auto& p = b.probes[pi];
        std::vector<char> member(b.boxes.size(), 0);
        for (int m : p.members) member[m] = 1;
        for (std::size_t i = 0; i < b.boxes.size(); ++i) {
            bool hit = p.region.intersects(b.boxes[i]);
            if (hit != static_cast<bool>(member[i])) {
                throw ConstructionBugError("burling probe " + std::to_string(pi) +
                                           (hit ? " unexpectedly meets box "
                                                : " misses member box ") +
                                           std::to_string(i));
            }
        }
    }
}

}  // namespace detail

struct BurlingBudget {
    std::int64_t max_boxes = 50'000;
};

/// Axis-parallel box family with a triangle-free intersection graph that
/// still needs more than n colors. Construction is the recursive
/// probe-and-brace scheme; the emitted family is cross-checked against the
/// intended abstract graph, probe regions are re-verified against their
/// member sets, and triangle-freeness is checked exhaustively. Probe regions
/// ride along in the `probes` field as scaffolding.
inline BoxHypergraph burling_family(int n, BurlingBudget budget = {}) {
    if (n < 1) throw std::invalid_argument("burling_family: n must be positive");
    auto counts = burling_counts_at_level(n + 1);
    if (counts.boxes > budget.max_boxes) {
        throw ResourceLimitError("burling_family: level " + std::to_string(n + 1) + " needs " +
                                 std::to_string(counts.boxes) + " boxes, budget is " +
                                 std::to_string(budget.max_boxes) + " (RESOURCE_LIMIT)");
    }
    Box frame;
    frame.x = {Rational(1), Rational(2)};
    frame.y = {Rational(1), Rational(2)};
    frame.z = {Rational(1), Rational(2)};
    auto build = detail::burling_build(n + 1, frame);

    detail::check_probe_exactness(build, build.probes.size() > 4096 ? 512 : build.probes.size());

    BoxHypergraph bh;
    bh.boxes = build.boxes;
    bh.bounding.x = {Rational(0), Rational(3)};
    bh.bounding.y = {Rational(0), Rational(3)};
    bh.bounding.z = {Rational(0), Rational(3)};
    for (const auto& p : build.probes) bh.probes.push_back(p.region);
    bh.validate();

    // The geometry must realize the intended graph exactly.
    auto geometric = intersection_graph(bh);
    std::vector<std::pair<int, int>> intended = build.edges;
    for (auto& [a, b] : intended) {
        if (a > b) std::swap(a, b);
    }
    std::sort(intended.begin(), intended.end());
    intended.erase(std::unique(intended.begin(), intended.end()), intended.end());
    if (geometric.edges() != intended) {
        throw ConstructionBugError("burling_family: geometric intersection graph differs from "
                                   "the intended graph");
    }
    if (auto tri = find_box_triangle(bh)) {
        throw ConstructionBugError("burling_family: triangle among boxes " +
                                   std::to_string((*tri)[0]) + "," + std::to_string((*tri)[1]) +
                                   "," + std::to_string((*tri)[2]));
    }
    return bh;
}

}  // namespace medianlab
