// Vertex-plus-cuts construction, exact indices, the tiling oracle,
// homotheties, exceptional subgroups, word rows, catalogs, chains, the
// embedding criterion, and bounded enumeration.

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "coxeter/subgroups.hpp"

using namespace coxeter;

namespace {

Vec v2(long long a, long long b) { return {Rat(a), Rat(b)}; }

std::set<long long> index_set(const std::vector<SubgroupRecord>& recs) {
    std::set<long long> out;
    for (const auto& r : recs) {
        REQUIRE(r.index.has_value());
        out.insert(*r.index);
    }
    return out;
}

const WordConstruction& find_row(const std::vector<WordConstruction>& rows,
                                 const std::string& host, const std::string& sub) {
    for (const auto& r : rows)
        if (r.host.str() == host && r.sub.str() == sub) return r;
    REQUIRE(false);
    return rows.front();
}

} // namespace

TEST_CASE("extension at the origin by the full system is the whole group") {
    FiniteRootSystem a2 = build_root_system("A2");
    SubgroupRecord rec = g_extension(a2, zero_vec(a2.ambient_dim), {a2.simple_roots});
    REQUIRE(rec.index.has_value());
    CHECK(*rec.index == 1);
    CHECK(rec.block_maximal);
    CHECK(rec.sub_type.str() == "tA2");
    CHECK(rec.vertex_special);
}

TEST_CASE("homotheties scale the index by k^rank") {
    FiniteRootSystem a2 = build_root_system("A2");
    SubgroupRecord one = homothety_subgroup(a2, 1);
    CHECK(*one.index == 1);
    CHECK(one.block_maximal);
    SubgroupRecord two = homothety_subgroup(a2, 2);
    CHECK(*two.index == 4);
    CHECK(!two.block_maximal);
    CHECK(tiling_index_oracle(a2, two.chamber, 32) == 4);
    FiniteRootSystem c2 = build_root_system("C2");
    CHECK(*homothety_subgroup(c2, 3).index == 9);
    CHECK_THROWS_AS(homothety_subgroup(a2, 0), IllegalType);
}

TEST_CASE("exceptional self-similar subgroups") {
    SubgroupRecord c2 = exceptional_subgroup(CartanType::parse("tC2"));
    CHECK(*c2.index == 2);
    CHECK(c2.sub_type.str() == "tC2");
    CHECK(!c2.word_trace.empty());
    CHECK(tiling_index_oracle(finite_part_of(TypeList::parse("tC2")), c2.chamber, 24) == 2);
    SubgroupRecord g2 = exceptional_subgroup(CartanType::parse("tG2"));
    CHECK(*g2.index == 3);
    CHECK(g2.sub_type.str() == "tG2");
    CHECK(tiling_index_oracle(finite_part_of(TypeList::parse("tG2")), g2.chamber, 28) == 3);
    SubgroupRecord f4 = exceptional_subgroup(CartanType::parse("tF4"));
    CHECK(*f4.index == 4);
    CHECK(f4.sub_type.str() == "tF4");
    CHECK_THROWS_AS(exceptional_subgroup(CartanType::parse("tA2")), NotExceptionalType);
}

TEST_CASE("word rows realize their frozen indices") {
    auto rows = table3_constructions(3, 3);
    SubgroupRecord g2a2 = word_row_subgroup(find_row(rows, "tG2", "tA2"));
    CHECK(*g2a2.index == 2);
    CHECK(g2a2.sub_type.normalized().str() == "tA2");
    SubgroupRecord f4b4 = word_row_subgroup(find_row(rows, "tF4", "tB4"));
    CHECK(*f4b4.index == 3);
    CHECK(f4b4.sub_type.normalized().str() == "tB4");
    SubgroupRecord bd3 = word_row_subgroup(find_row(rows, "tB3", "tD3"));
    CHECK(*bd3.index == 2);
    CHECK(bd3.sub_type.normalized().str() == "tA3");
    SubgroupRecord bc3 = word_row_subgroup(find_row(rows, "tB3", "tC3"));
    CHECK(*bc3.index == 4);
    SubgroupRecord cb3 = word_row_subgroup(find_row(rows, "tC3", "tB3"));
    CHECK(*cb3.index == 2);
    for (const auto* r : {&g2a2, &f4b4, &bd3, &bc3, &cb3}) CHECK(!r->word_trace.empty());
}

TEST_CASE("extra cut roots per component type") {
    CHECK(theta_prime_allowed(CartanType::parse("B2")));
    CHECK(theta_prime_allowed(CartanType::parse("C2")));
    CHECK(theta_prime_allowed(CartanType::parse("C3")));
    CHECK(theta_prime_allowed(CartanType::parse("G2")));
    CHECK(theta_prime_allowed(CartanType::parse("F4")));
    CHECK(!theta_prime_allowed(CartanType::parse("A2")));
    CHECK(!theta_prime_allowed(CartanType::parse("D4")));

    FiniteRootSystem b3 = build_root_system("B3");
    CHECK(theta_prime(CartanType::parse("B3"), b3.simple_roots, b3.lowest_root(0)) ==
          Vec{Rat(-1), Rat(0), Rat(0)});
    FiniteRootSystem c3 = build_root_system("C3");
    CHECK(theta_prime(CartanType::parse("C3"), c3.simple_roots, c3.lowest_root(0)) ==
          Vec{Rat(-1), Rat(-1), Rat(0)});
    FiniteRootSystem c2 = build_root_system("C2");
    CHECK(theta_prime(CartanType::parse("C2"), c2.simple_roots, c2.lowest_root(0)) ==
          Vec{Rat(-1), Rat(-1)});
    FiniteRootSystem g2 = build_root_system("G2");
    CHECK(theta_prime(CartanType::parse("G2"), g2.simple_roots, g2.lowest_root(0)) ==
          Vec{Rat(0), Rat(1), Rat(-1)});
    FiniteRootSystem f4 = build_root_system("F4");
    CHECK(theta_prime(CartanType::parse("F4"), f4.simple_roots, f4.lowest_root(0)) ==
          Vec{Rat(-1), Rat(0), Rat(0), Rat(0)});
    FiniteRootSystem a2 = build_root_system("A2");
    CHECK_THROWS_AS(theta_prime(CartanType::parse("A2"), a2.simple_roots, a2.lowest_root(0)),
                    BadThetaPrime);
}

TEST_CASE("the short cut of B2 yields the index-two square shape") {
    FiniteRootSystem b2 = build_root_system("B2");
    SubgroupRecord rec = construct_subgroup(b2, zero_vec(2), {b2.simple_roots},
                                            {{CutKind::theta_prime, 1}});
    CHECK(*rec.index == 2);
    CHECK(rec.sub_type.str() == "tC2");
    CHECK(tiling_index_oracle(b2, rec.chamber, 24) == 2);
}

TEST_CASE("construction error paths") {
    FiniteRootSystem b2 = build_root_system("B2");
    CHECK_THROWS_AS(construct_subgroup(b2, zero_vec(2), {{v2(1, 3)}}, {{CutKind::theta, 1}}),
                    NotHostRoot);
    CHECK_THROWS_AS(construct_subgroup(b2, Vec{Rat(1, 3), Rat(0)}, {{v2(1, 0)}},
                                       {{CutKind::theta, 1}}),
                    NotSpecial);
    CHECK_THROWS_AS(construct_subgroup(b2, zero_vec(2), {{v2(1, 0), v2(0, 1)}},
                                       {{CutKind::theta, 1}}),
                    Decomposable);
    CHECK_THROWS_AS(construct_subgroup(b2, zero_vec(2), {{v2(1, 0)}, {v2(1, 1)}},
                                       {{CutKind::theta, 1}, {CutKind::theta, 1}}),
                    NotOrthogonal);
    CHECK_THROWS_AS(construct_subgroup(b2, zero_vec(2), {{v2(1, 0)}}, {}),
                    HostMismatch);
    CHECK_THROWS_AS(construct_subgroup(b2, zero_vec(2), {{v2(1, 0)}}, {{CutKind::theta, 0}}),
                    IllegalType);
    CHECK_THROWS_AS(g_extension(b2, Vec{Rat(1, 3), Rat(0)}, {b2.simple_roots}), NotSpecial);
}

TEST_CASE("index by volume ratio rejects bad chambers") {
    FiniteRootSystem a2 = build_root_system("A2");
    ChamberComponent comp = alcove_component(a2, 0);
    for (auto& w : comp.walls) w.offset = w.offset * Rat(3, 2);
    CHECK_THROWS_AS(subgroup_index(a2, FundamentalChamber{{comp}}), NonIntegerRatio);
    ChamberComponent cone = alcove_component(a2, 0);
    cone.walls.pop_back();
    cone.kind = ChamberKind::simplicial_cone;
    CHECK_THROWS_AS(subgroup_index(a2, FundamentalChamber{{cone}}), UnboundedChamber);
}

TEST_CASE("frozen extension indices") {
    FiniteRootSystem d4 = build_root_system("D4");
    SubgroupRecord dd = g_extension(
        d4, zero_vec(4),
        {{Vec{Rat(1), Rat(-1), Rat(0), Rat(0)}},
         {Vec{Rat(1), Rat(1), Rat(0), Rat(0)}},
         {Vec{Rat(0), Rat(0), Rat(1), Rat(-1)}},
         {Vec{Rat(0), Rat(0), Rat(1), Rat(1)}}});
    CHECK(*dd.index == 24);
    CHECK(dd.block_maximal);

    FiniteRootSystem b3 = build_root_system("B3");
    SubgroupRecord bb = g_extension(
        b3, zero_vec(3),
        {{Vec{Rat(1), Rat(0), Rat(0)}},
         {Vec{Rat(0), Rat(1), Rat(-1)}, Vec{Rat(0), Rat(0), Rat(1)}}});
    CHECK(*bb.index == 6);

    FiniteRootSystem c3 = build_root_system("C3");
    SubgroupRecord cc = g_extension(
        c3, zero_vec(3),
        {{Vec{Rat(2), Rat(0), Rat(0)}},
         {Vec{Rat(0), Rat(1), Rat(-1)}, Vec{Rat(0), Rat(0), Rat(2)}}});
    CHECK(*cc.index == 3);

    FiniteRootSystem c2 = build_root_system("C2");
    SubgroupRecord c11 = g_extension(c2, zero_vec(2), {{v2(2, 0)}, {v2(0, 2)}});
    CHECK(*c11.index == 2);
    CHECK(c11.sub_type.str() == "tA1+tA1");
    REQUIRE(c11.trace.size() == 2);
    CHECK(c11.trace[0].finite_label == "C1");
    CHECK(c11.trace[1].finite_label == "C1");
    CHECK(tiling_index_oracle(c2, c11.chamber, 24) == 2);

    SubgroupRecord infinite = g_extension(b3, zero_vec(3), {{Vec{Rat(1), Rat(0), Rat(0)}}});
    CHECK(!infinite.index.has_value());
}

TEST_CASE("divisibility by the vertex stabilizer index") {
    FiniteRootSystem a2 = build_root_system("A2");
    CHECK(index_divisibility_check(homothety_subgroup(a2, 2)));
    CHECK(index_divisibility_check(exceptional_subgroup(CartanType::parse("tC2"))));
    FiniteRootSystem c2 = build_root_system("C2");
    CHECK(index_divisibility_check(g_extension(c2, zero_vec(2), {{v2(2, 0)}, {v2(0, 2)}})));
}

TEST_CASE("maximal catalogs for small hosts") {
    CHECK(index_set(maximal_indecomposable_subgroups(CartanType::parse("tB3"), 100)) ==
          std::set<long long>{2, 4, 27});
    CHECK(index_set(maximal_indecomposable_subgroups(CartanType::parse("tG2"), 100)) ==
          std::set<long long>{2, 3, 4, 25, 49});
    auto db3 = maximal_decomposable_subgroups(CartanType::parse("tB3"));
    REQUIRE(db3.size() == 1);
    CHECK(*db3[0].index == 6);
    auto dg2 = maximal_decomposable_subgroups(CartanType::parse("tG2"));
    REQUIRE(dg2.size() == 1);
    CHECK(*dg2[0].index == 6);
}

TEST_CASE("embedding criterion") {
    CHECK(embedding_exists(TypeList::parse("tA1+tA1"), CartanType::parse("tC2")));
    CHECK(!embedding_exists(TypeList::parse("tA2"), CartanType::parse("tC2")));
    CHECK(embedding_exists(TypeList::parse("tC3"), CartanType::parse("tB3")));
    CHECK(embedding_exists(TypeList::parse("tA2"), CartanType::parse("tG2")));
    CoxeterDiagram sub = CoxeterDiagram::from_edges(3, {{0, 1, 4}, {1, 2, 4}});
    CoxeterDiagram host = CoxeterDiagram::empty(4);
    CHECK_THROWS_AS(embedding_exists(sub, host), Decomposable);
}

TEST_CASE("admissible chains") {
    auto d4f4 = admissible_sequences(CartanType::parse("tD4"), CartanType::parse("tF4"));
    REQUIRE(d4f4.size() == 1);
    CHECK(d4f4[0].diagrams.size() == 3);
    CHECK(d4f4[0].diagrams.front().str() == "tD4");
    CHECK(d4f4[0].diagrams.back().str() == "tF4");
    CHECK(d4f4[0].index == 6);
    auto a2g2 = admissible_sequences(CartanType::parse("tA2"), CartanType::parse("tG2"));
    REQUIRE(a2g2.size() == 1);
    CHECK(a2g2[0].diagrams.size() == 2);
    CHECK(a2g2[0].index == 2);
    CHECK(admissible_sequences(CartanType::parse("tG2"), CartanType::parse("tA2")).empty());
}

TEST_CASE("infinite-index maximal pairs") {
    auto d4 = infinite_index_maximal_pairs(CartanType::parse("tD4"));
    REQUIRE(d4.size() == 1);
    CHECK(d4[0].second.str() == "tA3");
    CHECK(infinite_index_maximal_pairs(CartanType::parse("tB3")).empty());
}

TEST_CASE("bounded enumeration") {
    auto a1 = enumerate_subgroups(TypeList::parse("tA1"), 5);
    REQUIRE(a1.size() == 5);
    CHECK(index_set(a1) == std::set<long long>{1, 2, 3, 4, 5});
    for (const auto& r : a1) CHECK(r.sub_type.str() == "tA1");

    auto g2 = enumerate_subgroups(TypeList::parse("tG2"), 6);
    auto g2_indices = index_set(g2);
    for (long long want : {1, 2, 3, 4, 6}) CHECK(g2_indices.count(want) == 1);
    for (size_t i = 1; i < g2.size(); ++i) CHECK(*g2[i - 1].index <= *g2[i].index);

    auto c2 = enumerate_subgroups(TypeList::parse("tC2"), 8);
    size_t fig_count = 0;
    for (const auto& r : c2)
        if (r.sub_type.str() == "tA1+tA1" && r.index == 8) ++fig_count;
    CHECK(fig_count >= 3);
}

TEST_CASE("finite part of an affine label list") {
    FiniteRootSystem b3 = finite_part_of(TypeList::parse("tB3"));
    CHECK(b3.all_roots.size() == 18);
    CHECK(identify_type(b3.all_roots).str() == "B3");
    FiniteRootSystem prod = finite_part_of(TypeList::parse("tA2+tA1"));
    CHECK(prod.all_roots.size() == 8);
    CHECK_THROWS_AS(finite_part_of(TypeList::parse("A2")), IllegalType);
}

TEST_CASE("chamber diagrams reject acute facet pairs") {
    ChamberComponent comp;
    comp.kind = ChamberKind::simplicial_cone;
    comp.walls = {Halfspace{v2(1, 0), Rat(0)}, Halfspace{v2(1, 1), Rat(0)}};
    CHECK_THROWS_AS(diagram_of_chamber(FundamentalChamber{{comp}}), AcuteAngle);
}
