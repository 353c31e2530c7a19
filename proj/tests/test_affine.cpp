// Affine roots, halfspaces, alcove geometry, exact volumes, marks, special
// vertices, and the alcove-tiling counter.

#include <doctest.h>

#include <algorithm>

#include "coxeter/affine.hpp"

using namespace coxeter;

namespace {

Vec v2(long long a, long long b) { return {Rat(a), Rat(b)}; }

std::vector<Halfspace> dilated_alcove_region(const FiniteRootSystem& fin, long long k) {
    auto walls = alcove_component(fin, 0).walls;
    for (auto& w : walls) w.offset = w.offset * Rat(k);
    return walls;
}

} // namespace

TEST_CASE("affine reflections are involutions") {
    AffineRoot m{v2(2, 0), Rat(1)};
    Vec x{Rat(3, 7), Rat(2, 5)};
    CHECK(m.reflect_point(m.reflect_point(x)) == x);
    AffineRoot other{v2(1, 1), Rat(-2)};
    CHECK(m.reflect_root(m.reflect_root(other)) == other);
    // A point on the image mirror reflects onto the original mirror.
    AffineRoot img = m.reflect_root(other);
    Vec y{Rat(2), Rat(0)};
    REQUIRE(other.eval(y).is_zero());
    CHECK(img.eval(m.reflect_point(y)).is_zero());
    CHECK(m.negated().reflect_point(x) == m.reflect_point(x));
}

TEST_CASE("halfspace evaluation") {
    Halfspace h{v2(1, 0), Rat(-1)}; // x1 <= 1
    CHECK(h.contains(v2(0, 5)));
    CHECK(h.contains(v2(1, 0)));
    CHECK(h.on_boundary(v2(1, 3)));
    CHECK(!h.contains(v2(2, 0)));
    AffineRoot r{v2(1, 0), Rat(-1)};
    Halfspace pos = positive_side(r);
    CHECK(pos.contains(v2(2, 0)));
    CHECK(!pos.contains(v2(0, 0)));
}

TEST_CASE("alcove walls contain the system's alcove") {
    FiniteRootSystem a2 = build_root_system("A2");
    ChamberComponent alc = alcove_component(a2, 0);
    REQUIRE(alc.walls.size() == 3);
    auto verts = simplex_vertices(alc, a2.ambient_dim);
    REQUIRE(verts.size() == 3);
    for (const auto& w : alc.walls) {
        size_t on = 0;
        for (const auto& vtx : verts) {
            CHECK(w.contains(vtx));
            if (w.on_boundary(vtx)) ++on;
        }
        CHECK(on == 2);
    }
    // Vertex i misses wall i.
    for (size_t i = 0; i < verts.size(); ++i) CHECK(!alc.walls[i].on_boundary(verts[i]));
}

TEST_CASE("fundamental alcove of a product has one component per factor") {
    FiniteRootSystem prod = build_root_system("A2+A1");
    FundamentalChamber ch = fundamental_alcove(prod);
    CHECK(ch.components.size() == 2);
    CHECK(ch.all_walls().size() == 5);
}

TEST_CASE("frozen alcove volumes") {
    struct Row {
        const char* type;
        Rat vol_sq;
    };
    const Row rows[] = {
        {"A1", Rat(1, 2)},    {"A2", Rat(1, 12)},    {"A3", Rat(1, 144)},
        {"B2", Rat(1, 16)},   {"C2", Rat(1, 64)},    {"B3", Rat(1, 576)},
        {"G2", Rat(1, 432)},  {"D4", Rat(1, 9216)},  {"F4", Rat(1, 331776)},
    };
    for (const auto& r : rows) {
        CAPTURE(r.type);
        FiniteRootSystem fin = build_root_system(r.type);
        CHECK(chamber_volume_sq(fundamental_alcove(fin), fin.ambient_dim) == r.vol_sq);
    }
}

TEST_CASE("volume of a cone component throws") {
    FiniteRootSystem a2 = build_root_system("A2");
    ChamberComponent alc = alcove_component(a2, 0);
    alc.walls.pop_back();
    alc.kind = ChamberKind::simplicial_cone;
    FundamentalChamber ch{{alc}};
    CHECK_THROWS_AS(chamber_volume_sq(ch, a2.ambient_dim), UnboundedChamber);
}

TEST_CASE("simplex_vertices validates the wall count") {
    FiniteRootSystem a2 = build_root_system("A2");
    ChamberComponent alc = alcove_component(a2, 0);
    alc.walls.pop_back();
    CHECK_THROWS_AS(simplex_vertices(alc, a2.ambient_dim), NotSimplex);
}

TEST_CASE("affine extension marks and specials") {
    struct Row {
        const char* type;
        std::vector<long long> marks;
        std::vector<size_t> specials;
        const char* affine_label;
    };
    const Row rows[] = {
        {"A2", {1, 1, 1}, {0, 1, 2}, "tA2"},
        {"C2", {1, 2, 1}, {0, 2}, "tC2"},
        {"B3", {1, 1, 2, 2}, {0, 1}, "tB3"},
        {"C3", {1, 2, 2, 1}, {0, 3}, "tC3"},
        {"D4", {1, 1, 2, 1, 1}, {0, 1, 3, 4}, "tD4"},
        {"G2", {1, 3, 2}, {0}, "tG2"},
        {"F4", {1, 2, 3, 4, 2}, {0}, "tF4"},
    };
    for (const auto& r : rows) {
        CAPTURE(r.type);
        FiniteRootSystem fin = build_root_system(r.type);
        AffineDiagramInfo info = affine_extension(fin, 0);
        CHECK(info.marks == r.marks);
        CHECK(info.special_nodes == r.specials);
        CHECK(info.type.str() == r.affine_label);
        CHECK(info.nodes.size() == fin.rank() + 1);
        CHECK(info.nodes[0].alpha == fin.lowest_root(0));
        CHECK(info.nodes[0].level == Rat(1));
    }
}

TEST_CASE("alcove vertices follow the node indexing") {
    FiniteRootSystem c2 = build_root_system("C2");
    auto verts = alcove_vertices(c2, 0);
    REQUIRE(verts.size() == 3);
    CHECK(verts[0] == zero_vec(2));
    CHECK(verts[1] == Vec{Rat(1, 2), Rat(0)});
    CHECK(verts[2] == Vec{Rat(1, 2), Rat(1, 2)});
    CHECK(is_special_point(c2, verts[0]));
    CHECK(!is_special_point(c2, verts[1]));
    CHECK(is_special_point(c2, verts[2]));
}

TEST_CASE("roots through a point") {
    FiniteRootSystem c2 = build_root_system("C2");
    CHECK(roots_through(c2, zero_vec(2)).size() == c2.all_roots.size());
    auto at_half = roots_through(c2, Vec{Rat(1, 2), Rat(0)});
    CHECK(at_half.size() == 4); // both long pairs
    for (const auto& r : at_half) CHECK(dot(r, r) == Rat(4));
}

TEST_CASE("tiling counter matches dilation squares") {
    FiniteRootSystem a2 = build_root_system("A2");
    CHECK(count_alcoves_in_region(a2, 0, dilated_alcove_region(a2, 1), 10) == 1);
    CHECK(count_alcoves_in_region(a2, 0, dilated_alcove_region(a2, 2), 20) == 4);
    CHECK(count_alcoves_in_region(a2, 0, dilated_alcove_region(a2, 3), 20) == 9);
    FiniteRootSystem c2 = build_root_system("C2");
    CHECK(count_alcoves_in_region(c2, 0, dilated_alcove_region(c2, 3), 20) == 9);
    FiniteRootSystem g2 = build_root_system("G2");
    CHECK(count_alcoves_in_region(g2, 0, dilated_alcove_region(g2, 2), 20) == 4);
    CHECK_THROWS_AS(count_alcoves_in_region(a2, 0, dilated_alcove_region(a2, 5), 10),
                    CapExceeded);
}
