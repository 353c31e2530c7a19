#pragma once

// Coxeter diagrams: bond matrices, construction from simple systems,
// catalog classification (finite and affine), and isomorphism search.

#include <array>
#include <optional>
#include <vector>

#include "coxeter/linalg.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

// Bond label m(i,j): 2 (no edge), 3, 4, 6, or 0 encoding an infinite bond.
inline constexpr int kInfiniteBond = 0;

struct DiagramEdge {
    size_t a = 0;
    size_t b = 0;
    int m = 3;
};

struct CoxeterDiagram {
    std::vector<std::vector<int>> m; // symmetric, diagonal 1

    size_t size() const { return m.size(); }
    int bond(size_t i, size_t j) const { return m[i][j]; }

    auto operator<=>(const CoxeterDiagram&) const = default;

    static CoxeterDiagram empty(size_t n) {
        CoxeterDiagram d;
        d.m.assign(n, std::vector<int>(n, 2));
        for (size_t i = 0; i < n; ++i) d.m[i][i] = 1;
        return d;
    }

    // Throws UnknownNode on an out-of-range endpoint, IllegalType on a bond
    // label outside {2, 3, 4, 6, 0}.
    static CoxeterDiagram from_edges(size_t n, const std::vector<DiagramEdge>& edges);

    std::vector<DiagramEdge> edges() const;

    CoxeterDiagram induced(const std::vector<size_t>& nodes) const;

    CoxeterDiagram relabeled(const std::vector<size_t>& perm) const; // node i -> perm[i]
};

// Gram-angle weight 4*cos^2(pi/m) as an integer in {0,1,2,3,4}.
int bond_to_weight(int m);
int weight_to_bond(int w);

// Diagram of a simple system; requires pairwise non-acute simples and
// pairwise angles from the crystallographic list. Throws AcuteAngle on a
// positive inner product, IllegalType on a non-crystallographic angle.
CoxeterDiagram diagram_from_simples(const std::vector<Vec>& simples);

// Connected components as node index lists (sorted).
std::vector<std::vector<size_t>> diagram_components(const CoxeterDiagram& d);

// Classifies one connected diagram against the finite and affine catalog.
// Two-node infinite bonds read tA1. Finite 4-bond paths read B (the bond
// matrix cannot separate B from C). Throws Disconnected on a disconnected
// input and NotParabolic when the shape is not in the catalog.
CartanType classify_connected_diagram(const CoxeterDiagram& d);

// Classification of every component. Throws NotParabolic when any
// component falls outside the catalog.
TypeList classify_diagram(const CoxeterDiagram& d);

// Permutation sending the diagram to its lexicographically least bond
// matrix (backtracking over all orderings, pruned).
std::vector<size_t> canonical_labeling(const CoxeterDiagram& d);

CoxeterDiagram canonical_form(const CoxeterDiagram& d);

bool diagrams_isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b);

// Node map a -> b realizing an isomorphism, if one exists.
std::optional<std::vector<size_t>> find_diagram_isomorphism(const CoxeterDiagram& a,
                                                            const CoxeterDiagram& b);

} // namespace coxeter
