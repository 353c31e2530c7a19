// Coxeter diagrams: construction, catalog classification (finite and
// affine), canonical forms, and isomorphism.

#include <doctest.h>

#include "coxeter/diagram.hpp"
#include "coxeter/rootsys.hpp"

using namespace coxeter;

namespace {

CoxeterDiagram path(std::initializer_list<int> bonds) {
    std::vector<DiagramEdge> edges;
    size_t i = 0;
    for (int m : bonds) {
        edges.push_back({i, i + 1, m});
        ++i;
    }
    return CoxeterDiagram::from_edges(i + 1, edges);
}

} // namespace

TEST_CASE("from_edges validates input") {
    CHECK_THROWS_AS(CoxeterDiagram::from_edges(2, {{0, 2, 3}}), UnknownNode);
    CHECK_THROWS_AS(CoxeterDiagram::from_edges(2, {{0, 1, 5}}), IllegalType);
    CoxeterDiagram d = CoxeterDiagram::from_edges(2, {{0, 1, 4}});
    CHECK(d.bond(0, 1) == 4);
    CHECK(d.bond(1, 0) == 4);
    CHECK(d.bond(0, 0) == 1);
}

TEST_CASE("edges round trip") {
    CoxeterDiagram d = path({3, 4, 3});
    auto es = d.edges();
    CHECK(es.size() == 3);
    CoxeterDiagram d2 = CoxeterDiagram::from_edges(d.size(), es);
    CHECK(d == d2);
}

TEST_CASE("bond and weight conversions") {
    CHECK(bond_to_weight(2) == 0);
    CHECK(bond_to_weight(3) == 1);
    CHECK(bond_to_weight(4) == 2);
    CHECK(bond_to_weight(6) == 3);
    CHECK(bond_to_weight(kInfiniteBond) == 4);
    for (int m : {2, 3, 4, 6, kInfiniteBond}) CHECK(weight_to_bond(bond_to_weight(m)) == m);
}

TEST_CASE("finite catalog shapes classify") {
    CHECK(classify_connected_diagram(CoxeterDiagram::empty(1)).str() == "A1");
    CHECK(classify_connected_diagram(path({3, 3, 3})).str() == "A4");
    CHECK(classify_connected_diagram(path({3, 3, 4})).str() == "B4");
    CHECK(classify_connected_diagram(path({4, 3, 3})).str() == "B4");
    CHECK(classify_connected_diagram(path({6})).str() == "G2");
    CHECK(classify_connected_diagram(path({3, 4, 3})).str() == "F4");
    // D5: fork at one end.
    CoxeterDiagram d5 = CoxeterDiagram::from_edges(
        5, {{0, 2, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}});
    CHECK(classify_connected_diagram(d5).str() == "D5");
    // E6: leg of length 1 at the middle of a 5-chain.
    CoxeterDiagram e6 = CoxeterDiagram::from_edges(
        6, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {2, 5, 3}});
    CHECK(classify_connected_diagram(e6).str() == "E6");
}

TEST_CASE("affine catalog shapes classify") {
    // Two nodes with an infinite bond.
    CHECK(classify_connected_diagram(path({kInfiniteBond})).str() == "tA1");
    // Cycles read affine A.
    CoxeterDiagram cyc = CoxeterDiagram::from_edges(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
    CHECK(classify_connected_diagram(cyc).str() == "tA2");
    CHECK(classify_connected_diagram(path({4, 4})).str() == "tC2");
    CHECK(classify_connected_diagram(path({4, 3, 4})).str() == "tC3");
    CHECK(classify_connected_diagram(path({3, 6})).affine);
    CHECK(classify_connected_diagram(path({3, 6})).str() == "tG2");
    CHECK(classify_connected_diagram(path({3, 3, 4, 3})).str() == "tF4");
    // Affine B3: fork onto a double-bond tail.
    CoxeterDiagram tb3 = CoxeterDiagram::from_edges(
        4, {{0, 2, 3}, {1, 2, 3}, {2, 3, 4}});
    CHECK(classify_connected_diagram(tb3).str() == "tB3");
    // Affine D4: four leaves on one center.
    CoxeterDiagram td4 = CoxeterDiagram::from_edges(
        5, {{0, 4, 3}, {1, 4, 3}, {2, 4, 3}, {3, 4, 3}});
    CHECK(classify_connected_diagram(td4).str() == "tD4");
}

TEST_CASE("shapes outside the catalog throw NotParabolic") {
    CoxeterDiagram bad_cycle =
        CoxeterDiagram::from_edges(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 4}});
    CHECK_THROWS_AS(classify_connected_diagram(bad_cycle), NotParabolic);
    CHECK_THROWS_AS(classify_connected_diagram(path({6, 6})), NotParabolic);
    CHECK_THROWS_AS(classify_connected_diagram(path({4, 4, 4})), NotParabolic);
    CHECK_THROWS_AS(classify_connected_diagram(CoxeterDiagram::empty(2)), Disconnected);
}

TEST_CASE("classify_diagram handles products") {
    CoxeterDiagram d = CoxeterDiagram::from_edges(5, {{0, 1, 3}, {1, 2, 3}, {3, 4, 4}});
    CHECK(classify_diagram(d).str() == "A3+B2");
    CHECK(classify_diagram(CoxeterDiagram::empty(3)).str() == "A1+A1+A1");
}

TEST_CASE("induced and relabeled") {
    CoxeterDiagram d = path({3, 4, 3});
    CoxeterDiagram sub = d.induced({1, 2});
    CHECK(sub.size() == 2);
    CHECK(sub.bond(0, 1) == 4);
    std::vector<size_t> perm = {3, 2, 1, 0};
    CoxeterDiagram r = d.relabeled(perm);
    CHECK(r.bond(3, 2) == 3);
    CHECK(r.bond(2, 1) == 4);
    CHECK(r.bond(1, 0) == 3);
}

TEST_CASE("canonical form is relabeling invariant") {
    CoxeterDiagram d = path({3, 3, 4});
    std::vector<size_t> perm = {2, 0, 3, 1};
    CoxeterDiagram shuffled = d.relabeled(perm);
    CHECK(canonical_form(d) == canonical_form(shuffled));
    CHECK(diagrams_isomorphic(d, shuffled));
    CHECK(!diagrams_isomorphic(d, path({3, 3, 3})));
}

TEST_CASE("find_diagram_isomorphism produces a real map") {
    CoxeterDiagram a = path({3, 4});
    CoxeterDiagram b = path({4, 3});
    auto iso = find_diagram_isomorphism(a, b);
    REQUIRE(iso);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            CHECK(a.bond(i, j) == b.bond((*iso)[i], (*iso)[j]));
    CHECK(!find_diagram_isomorphism(a, path({3, 3})));
}

TEST_CASE("diagram_from_simples reads exact angles") {
    FiniteRootSystem b2 = build_root_system("B2");
    CoxeterDiagram d = diagram_from_simples(b2.simple_roots);
    CHECK(d.bond(0, 1) == 4);
    CHECK(classify_diagram(d).str() == "B2");
    FiniteRootSystem g2 = build_root_system("G2");
    CHECK(diagram_from_simples(g2.simple_roots).bond(0, 1) == 6);
    // Acute pairs are rejected.
    Vec a{Rat(1), Rat(0)}, acute{Rat(1), Rat(1)};
    CHECK_THROWS_AS(diagram_from_simples({a, acute}), AcuteAngle);
    // Non-crystallographic angles are rejected.
    Vec skew{Rat(-1, 3), Rat(1)};
    CHECK_THROWS_AS(diagram_from_simples({a, skew}), IllegalType);
    // Parallel opposite directions give the infinite bond.
    CHECK(diagram_from_simples({a, neg(a)}).bond(0, 1) == kInfiniteBond);
}

TEST_CASE("classification matches the built systems") {
    for (const char* type : {"A3", "B3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
        CAPTURE(type);
        FiniteRootSystem fin = build_root_system(type);
        CHECK(classify_diagram(diagram_from_simples(fin.simple_roots)).str() == type);
    }
    // The bond matrix cannot separate B from C; 4-bond paths read B.
    FiniteRootSystem c3 = build_root_system("C3");
    CHECK(classify_diagram(diagram_from_simples(c3.simple_roots)).str() == "B3");
}
