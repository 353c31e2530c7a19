#pragma once

// Affine root systems and alcove geometry: affine roots as mirrors with a
// rational level, halfspaces, fundamental chambers built from simplex and
// cone components, exact squared volumes, and an alcove-tiling counter.

#include <optional>
#include <vector>

#include "coxeter/diagram.hpp"
#include "coxeter/linalg.hpp"
#include "coxeter/rootsys.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

// ============================================================
// Affine roots and halfspaces
// ============================================================

// Mirror { x : (alpha, x) + level = 0 }.
struct AffineRoot {
    Vec alpha;
    Rat level;

    auto operator<=>(const AffineRoot&) const = default;

    AffineRoot negated() const { return {neg(alpha), -level}; }

    // Affine reflection of a point in this mirror.
    Vec reflect_point(const Vec& x) const {
        Rat aa = dot(alpha, alpha);
        if (aa.is_zero()) throw ZeroMirror("affine mirror has zero direction");
        Rat c = Rat(2) * (dot(alpha, x) + level) / aa;
        return sub(x, scale(alpha, c));
    }

    // Image of another affine root under reflection in this mirror.
    AffineRoot reflect_root(const AffineRoot& other) const {
        Rat aa = dot(alpha, alpha);
        if (aa.is_zero()) throw ZeroMirror("affine mirror has zero direction");
        Rat c = Rat(2) * dot(other.alpha, alpha) / aa;
        return {sub(other.alpha, scale(alpha, c)), other.level - c * level};
    }

    Rat eval(const Vec& x) const { return dot(alpha, x) + level; }
};

// Closed halfspace { x : (normal, x) + offset <= 0 } with outward normal.
struct Halfspace {
    Vec normal;
    Rat offset;

    auto operator<=>(const Halfspace&) const = default;

    Rat eval(const Vec& x) const { return dot(normal, x) + offset; }
    bool contains(const Vec& x) const { return eval(x).sign() <= 0; }
    bool on_boundary(const Vec& x) const { return eval(x).is_zero(); }

    AffineRoot wall() const { return {normal, offset}; }
};

// Halfspace on the nonnegative side of an affine root.
inline Halfspace positive_side(const AffineRoot& r) {
    return {neg(r.alpha), -r.level};
}

// ============================================================
// Fundamental chambers
// ============================================================

enum class ChamberKind { simplex, simplicial_cone };

struct ChamberComponent {
    std::vector<Halfspace> walls;
    ChamberKind kind = ChamberKind::simplex;
};

struct FundamentalChamber {
    std::vector<ChamberComponent> components;

    std::vector<Halfspace> all_walls() const {
        std::vector<Halfspace> ws;
        for (const auto& c : components)
            ws.insert(ws.end(), c.walls.begin(), c.walls.end());
        return ws;
    }
};

// Vertices of a simplex component, solved inside the span of its wall
// normals. Vertex i is the one missing from wall i's facet. Throws
// NotSimplex when wall count or rank does not match, DegenerateChamber when
// a vertex system is singular, UnboundedChamber when a vertex violates the
// dropped wall.
std::vector<Vec> simplex_vertices(const ChamberComponent& comp, size_t ambient_dim);

// Exact squared volume of a simplex component (intrinsic dimension).
Rat component_volume_sq(const ChamberComponent& comp, size_t ambient_dim);

// Product over all components; throws UnboundedChamber on a cone component.
Rat chamber_volume_sq(const FundamentalChamber& chamber, size_t ambient_dim);

// ============================================================
// Affine extension of a finite system
// ============================================================

// Alcove of one irreducible component of fin: walls in the order
// [alpha_1-wall, ..., alpha_n-wall, lowest-root wall].
ChamberComponent alcove_component(const FiniteRootSystem& fin, size_t comp);

// Alcove of the full system, one component per irreducible factor.
FundamentalChamber fundamental_alcove(const FiniteRootSystem& fin);

struct AffineDiagramInfo {
    CoxeterDiagram diagram;            // node 0 is the affine node
    std::vector<AffineRoot> nodes;     // [(theta_low, 1), (alpha_1, 0), ...]
    std::vector<long long> marks;      // primitive kernel of the Cartan matrix
    std::vector<size_t> special_nodes; // nodes with mark 1
    CartanType type;                   // affine label
};

AffineDiagramInfo affine_extension(const FiniteRootSystem& fin, size_t comp);

// Vertices of the alcove of component comp, indexed like the affine diagram
// nodes: vertex j is opposite wall j (node 0 pairs with the lowest-root
// wall and is the origin).
std::vector<Vec> alcove_vertices(const FiniteRootSystem& fin, size_t comp);

// True when every root of fin has integer pairing with u.
bool is_special_point(const FiniteRootSystem& fin, const Vec& u);

// Roots alpha of fin with (alpha, u) integral: the finite system of mirrors
// through u.
std::vector<Vec> roots_through(const FiniteRootSystem& fin, const Vec& u);

// ============================================================
// Alcove tiling counter
// ============================================================

// Counts alcoves of the affine group of irreducible component comp that lie
// inside the closed region cut out by `region` (a union of alcoves
// containing the fundamental alcove). BFS over facet reflections; throws
// CapExceeded when the count grows beyond cap.
long long count_alcoves_in_region(const FiniteRootSystem& fin, size_t comp,
                                  const std::vector<Halfspace>& region, long long cap);

} // namespace coxeter
