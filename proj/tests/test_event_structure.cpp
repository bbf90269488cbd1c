#include <catch2/catch_amalgamated.hpp>

#include "medianlab/event_structure.hpp"
#include "medianlab/generators.hpp"
#include "medianlab/isomorphism.hpp"

using namespace medianlab;

namespace {

EventStructure chain3() { return EventStructure(3, {{0, 1}, {1, 2}}, {}); }

}  // namespace

TEST_CASE("empty and tiny structures validate") {
    CHECK(validate(EventStructure(0, {}, {})).ok());
    CHECK(validate(EventStructure(2, {}, {})).ok());  // two concurrent events
    CHECK(validate(chain3()).ok());
}

TEST_CASE("conflict inheritance violations are witnessed") {
    // e0 # e1, e1 <= e2, missing e0 # e2.
    EventStructure es(3, {{1, 2}}, {{0, 1}});
    auto v = validate(es);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violated == EventAxiom::InheritanceViolation);
    CHECK(v.witness[0] == 0);
    CHECK(v.witness[1] == 1);
    CHECK(v.witness[2] == 2);
    // Closing the conflict fixes it.
    EventStructure closed(3, {{1, 2}}, {{0, 1}, {0, 2}});
    CHECK(validate(closed).ok());
}

TEST_CASE("cyclic causal order is rejected") {
    EventStructure es(2, {{0, 1}, {1, 0}}, {});
    CHECK(validate(es).violated == EventAxiom::OrderCyclic);
    CHECK_THROWS_AS(es.leq(0, 1), std::invalid_argument);
}

TEST_CASE("pair relations: causal, conflict minimality, concurrency") {
    auto chain = chain3();
    auto r = pair_relation(chain, 0, 2);
    CHECK(r.kind == PairRelation::Kind::Causal);
    CHECK(r.first_precedes);

    EventStructure bare(2, {}, {{0, 1}});
    auto rc = pair_relation(bare, 0, 1);
    CHECK(rc.kind == PairRelation::Kind::Conflict);
    CHECK(rc.minimal);

    // e0 # e1 minimal, e1 <= e2: inherited conflict (e0,e2) is not minimal.
    EventStructure inherited(3, {{1, 2}}, {{0, 1}, {0, 2}});
    REQUIRE(validate(inherited).ok());
    auto ri = pair_relation(inherited, 0, 2);
    CHECK(ri.kind == PairRelation::Kind::Conflict);
    // Oracle: evaluate the minimality quantifier by brute force.
    bool minimal = true;
    for (int e = 0; e < 3; ++e) {
        if (e == 0 || e == 2) continue;
        if ((inherited.leq(e, 0) && inherited.in_conflict(e, 2)) ||
            (inherited.leq(e, 2) && inherited.in_conflict(e, 0))) {
            minimal = false;
        }
    }
    CHECK(ri.minimal == minimal);
    CHECK_FALSE(ri.minimal);

    EventStructure conc(2, {}, {});
    CHECK(pair_relation(conc, 0, 1).kind == PairRelation::Kind::Concurrent);
}

TEST_CASE("orthogonality graphs of chains, antichains and conflicts") {
    CHECK(orthogonality_graph(chain3()).edge_count() == 0);
    auto antichain = EventStructure(5, {}, {});
    CHECK(orthogonality_graph(antichain).edge_count() == 10);
    EventStructure bare(2, {}, {{0, 1}});
    CHECK(orthogonality_graph(bare).edge_count() == 1);
}

TEST_CASE("degree is the clique number of the orthogonality graph") {
    CHECK(degree(chain3()) == 1);  // singletons still count
    CHECK(degree(EventStructure(4, {}, {})) == 4);
    CHECK(degree(EventStructure(0, {}, {})) == 0);
}

TEST_CASE("domains of the three smallest shapes") {
    // Single event: an edge from {} to {e}.
    auto d1 = domain(EventStructure(1, {}, {}));
    CHECK(d1.og.base().vertex_count() == 2);
    CHECK(d1.og.base().edge_count() == 1);
    CHECK(d1.og.tail(0) == 0);

    // Two concurrent events: the directed square.
    auto d2 = domain(EventStructure(2, {}, {}));
    CHECK(d2.og.base().vertex_count() == 4);
    CHECK(d2.og.base().edge_count() == 4);
    CHECK(d2.og.out_degree(0) == 2);

    // Two conflicting events: a path with both edges leaving the basepoint.
    auto d3 = domain(EventStructure(2, {}, {{0, 1}}));
    CHECK(d3.og.base().vertex_count() == 3);
    CHECK(d3.og.base().edge_count() == 2);
    CHECK(d3.og.out_degree(0) == 2);
}

TEST_CASE("domain size limit reports an error") {
    CHECK_THROWS_AS(domain(EventStructure(10, {}, {}), 100), ResourceLimitError);
}

TEST_CASE("domain underlying graphs are median") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 20; ++it) {
        auto es = random_event_structure(rng, 8);
        auto dom = domain(es);
        if (dom.og.base().vertex_count() <= 600) {
            CHECK(is_median_exhaustive(dom.og.base()).is_median);
        }
    }
}

TEST_CASE("event structures read off pointed graphs") {
    // Square pointed at a corner: two concurrent events.
    auto sq = cycle_graph(4);
    auto tsq = theta_classes_checked(sq, 0);
    OrientedGraph ogsq(sq, 0);
    auto es_sq = event_structure_from_pointed(ogsq, tsq);
    REQUIRE(es_sq.event_count() == 2);
    CHECK(pair_relation(es_sq, 0, 1).kind == PairRelation::Kind::Concurrent);

    // Star with two leaves pointed at the center: minimal conflict.
    auto star = star_graph(2);
    auto ts = theta_classes_checked(star, 0);
    OrientedGraph ogs(star, 0);
    auto es_star = event_structure_from_pointed(ogs, ts);
    auto rel = pair_relation(es_star, 0, 1);
    CHECK(rel.kind == PairRelation::Kind::Conflict);
    CHECK(rel.minimal);

    // Path pointed at an end: a two-event chain.
    auto p3 = path_graph(3);
    auto tp = theta_classes_checked(p3, 0);
    OrientedGraph ogp(p3, 0);
    auto es_path = event_structure_from_pointed(ogp, tp);
    CHECK(pair_relation(es_path, 0, 1).kind == PairRelation::Kind::Causal);
}

TEST_CASE("pointed roundtrip on small named graphs") {
    for (auto make : {+[] { return grid_graph({3, 3}); }, +[] { return hypercube_graph(3); },
                      +[] { return star_graph(5); }}) {
        auto g = make();
        for (int bp : {0, g.vertex_count() - 1}) {
            auto t = theta_classes_checked(g, bp);
            OrientedGraph og(g, bp);
            auto verdict = verify_pointed_roundtrip(og, t);
            INFO(verdict.detail);
            CHECK(verdict.ok);
        }
    }
}

TEST_CASE("event structure roundtrip on random instances") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 40; ++it) {
        auto es = random_event_structure(rng, 10);
        auto verdict = verify_event_structure_roundtrip(es);
        INFO(verdict.detail);
        CHECK(verdict.ok);
    }
}

TEST_CASE("degree equals max out-degree of the domain") {
    std::mt19937_64 rng(15);
    for (int it = 0; it < 25; ++it) {
        auto es = random_event_structure(rng, 9);
        auto dom = domain(es);
        CHECK(degree(es) == dom.og.max_out_degree());
    }
}

TEST_CASE("nice labelings accept exactly the proper colorings") {
    EventStructure antichain(3, {}, {});
    CHECK(check_nice_labeling(antichain, {0, 1, 2}).ok);
    auto bad = check_nice_labeling(antichain, {0, 0, 1});
    REQUIRE_FALSE(bad.ok);
    CHECK(bad.witness[0] == 0);
    CHECK(bad.witness[1] == 1);
    CHECK_THROWS_AS(check_nice_labeling(antichain, {0, 1}), std::invalid_argument);

    std::mt19937_64 rng(16);
    auto es = random_event_structure(rng, 9);
    auto chi = chromatic_number(orthogonality_graph(es));
    REQUIRE(chi.optimal);
    CHECK(check_nice_labeling(es, chi.colors).ok);
}

TEST_CASE("edge-coloring bridge on the square") {
    auto sq = cycle_graph(4);
    auto t = theta_classes_checked(sq, 0);
    OrientedGraph og(sq, 0);
    auto distinct = labeling_edge_coloring_bridge(og, t, {0, 1});
    CHECK(distinct.accepted);
    CHECK(distinct.routes_agree);

    auto monochrome = labeling_edge_coloring_bridge(og, t, {0, 0});
    CHECK_FALSE(monochrome.accepted);
    CHECK_FALSE(monochrome.determinism_ok);
    CHECK(monochrome.witness_vertex == 0);  // violated at the basepoint corner
    CHECK(monochrome.routes_agree);
}

TEST_CASE("bridge agrees with pointed-contact coloring on random graphs and colorings") {
    std::mt19937_64 rng(18);
    for (int it = 0; it < 8; ++it) {
        auto g = random_median_amalgam(rng, 2);
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        int bp = pick(rng);
        auto t = theta_classes_checked(g, bp);
        OrientedGraph og(g, bp);
        auto gamma = pointed_contact_graph(og, t);
        auto chi = chromatic_number(gamma);
        REQUIRE(chi.optimal);
        auto best = labeling_edge_coloring_bridge(og, t, chi.colors);
        CHECK(best.accepted);
        std::uniform_int_distribution<int> color(0, std::max(1, chi.count - 1));
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> colors(t.class_count());
            for (auto& c : colors) c = color(rng);
            auto verdict = labeling_edge_coloring_bridge(og, t, colors);
            CHECK(verdict.routes_agree);
            CHECK(verdict.accepted == verify_coloring(gamma, colors));
        }
    }
}

TEST_CASE("orthogonality graph of a derived structure equals the pointed contact graph") {
    std::mt19937_64 rng(27);
    for (int it = 0; it < 10; ++it) {
        auto g = random_median_amalgam(rng, 2);
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        int bp = pick(rng);
        auto t = theta_classes_checked(g, bp);
        OrientedGraph og(g, bp);
        auto es = event_structure_from_pointed(og, t);
        CHECK(orthogonality_graph(es).edges() == pointed_contact_graph(og, t).edges());
    }
}

TEST_CASE("random generator only emits valid structures") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 50; ++it) {
        auto es = random_event_structure(rng, 12);
        CHECK(validate(es).ok());
        CHECK(es.event_count() >= 1);
        CHECK(es.event_count() <= 12);
    }
}
