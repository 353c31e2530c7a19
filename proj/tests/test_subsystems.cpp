// Closure walk, brute-force oracle, conjugacy classes, host-contextual
// labels, targeted search, and the maximal-subsystem catalogs.

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "coxeter/subsystems.hpp"

using namespace coxeter;

namespace {

Vec v2(long long a, long long b) { return {Rat(a), Rat(b)}; }

std::vector<size_t> idx_of(const HostContext& ctx, const std::vector<Vec>& roots) {
    std::vector<size_t> out;
    for (const auto& r : roots) out.push_back(ctx.index_of(r));
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> class_labels(const std::vector<SubsystemRecord>& recs) {
    std::set<std::string> out;
    for (const auto& r : recs) out.insert(labels_str(r.labels));
    return out;
}

std::set<std::vector<size_t>> as_set(std::vector<std::vector<size_t>> v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("host context tables") {
    HostContext ctx = HostContext::make("B2", true);
    CHECK(ctx.root_count() == 8);
    CHECK(ctx.weyl.size() == 8);
    CHECK(ctx.auts.size() == 8);
    CHECK(ctx.neg.size() == 8);
    for (size_t i = 0; i < ctx.root_count(); ++i) {
        CHECK(ctx.neg[ctx.neg[i]] == i);
        CHECK(ctx.refl[i][i] == ctx.neg[i]);
    }
    CHECK_THROWS_AS(ctx.index_of(v2(3, 3)), NotHostRoot);
    CHECK_THROWS_AS(HostContext::make("E6", true), RankTooLarge);
    CHECK_THROWS_AS(HostContext::make("D5", true), RankTooLarge);
}

TEST_CASE("automorphism group sizes") {
    struct Row {
        const char* type;
        size_t weyl, auts;
    };
    const Row rows[] = {
        {"A1", 2, 2},   {"A2", 6, 12},    {"A3", 24, 48},
        {"B2", 8, 8},   {"G2", 12, 12},   {"D4", 192, 1152},
    };
    for (const auto& r : rows) {
        CAPTURE(r.type);
        HostContext ctx = HostContext::make(r.type, true);
        CHECK(ctx.weyl.size() == r.weyl);
        CHECK(ctx.auts.size() == r.auts);
    }
}

TEST_CASE("reflection closure") {
    HostContext a2 = HostContext::make("A2", false);
    auto pair = close_root_set(a2, {a2.index_of(a2.host.simple_roots[0])});
    CHECK(pair.size() == 2);
    auto full = close_root_set(a2, {a2.index_of(a2.host.simple_roots[0]),
                                    a2.index_of(a2.host.simple_roots[1])});
    CHECK(full.size() == 6);
    CHECK(close_root_set(a2, full) == full);
    for (size_t i : pair) CHECK(std::count(pair.begin(), pair.end(), a2.neg[i]) == 1);
}

TEST_CASE("additive closure depends on the host") {
    std::vector<Vec> diag = {v2(1, -1), v2(-1, 1), v2(1, 1), v2(-1, -1)};
    HostContext b2 = HostContext::make("B2", false);
    HostContext c2 = HostContext::make("C2", false);
    auto in_b2 = idx_of(b2, diag);
    auto in_c2 = idx_of(c2, diag);
    CHECK(close_root_set(b2, in_b2) == in_b2);
    CHECK(close_root_set(c2, in_c2) == in_c2);
    CHECK(is_additively_closed(b2, in_b2));
    CHECK(!is_additively_closed(c2, in_c2));
    CHECK(is_root_subsystem(b2, in_b2));
    CHECK(!is_root_subsystem(c2, in_c2));
}

TEST_CASE("closure walk counts and the brute oracle") {
    HostContext a2 = HostContext::make("A2", false);
    HostContext b2 = HostContext::make("B2", false);
    HostContext g2 = HostContext::make("G2", false);
    CHECK(all_closed_subsets_walk(a2).size() == 4);
    CHECK(all_closed_subsets_walk(b2).size() == 7);
    CHECK(all_closed_subsets_walk(g2).size() == 12);
    CHECK(as_set(all_closed_subsets_walk(b2)) == as_set(all_closed_subsets_brute(b2, 2)));
    CHECK(as_set(all_closed_subsets_walk(g2)) == as_set(all_closed_subsets_brute(g2, 2)));
}

TEST_CASE("class counts") {
    HostContext a2 = HostContext::make("A2", true);
    HostContext b2 = HostContext::make("B2", true);
    HostContext g2 = HostContext::make("G2", true);
    CHECK(subsystem_classes(a2, false).size() == 2);
    CHECK(subsystem_classes(b2, false).size() == 5);
    CHECK(subsystem_classes(b2, true).size() == 3);
    CHECK(subsystem_classes(g2, false).size() == 6);
    CHECK(subsystem_classes(g2, true).size() == 4);
}

TEST_CASE("host-contextual labels in B2") {
    HostContext b2 = HostContext::make("B2", true);
    CHECK(labels_str(identify_in_host(b2, idx_of(b2, {v2(1, 0), v2(-1, 0)}))) == "B1");
    CHECK(labels_str(identify_in_host(b2, idx_of(b2, {v2(1, -1), v2(-1, 1)}))) == "A1-long");
    CHECK(labels_str(identify_in_host(
              b2, idx_of(b2, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)}))) == "B1+B1");
    CHECK(labels_str(identify_in_host(
              b2, idx_of(b2, {v2(1, -1), v2(-1, 1), v2(1, 1), v2(-1, -1)}))) == "D2");
    CHECK(class_labels(subsystem_classes(b2, false)) ==
          std::set<std::string>{"A1-long", "B1", "B1+B1", "B2", "D2"});
}

TEST_CASE("length-tagged labels in G2") {
    HostContext g2 = HostContext::make("G2", true);
    std::vector<size_t> short_a2, long_a2;
    for (size_t i = 0; i < g2.root_count(); ++i) {
        const Vec& r = g2.host.all_roots[i];
        (dot(r, r) == Rat(2) ? short_a2 : long_a2).push_back(i);
    }
    REQUIRE(short_a2.size() == 6);
    REQUIRE(long_a2.size() == 6);
    CHECK(labels_str(identify_in_host(g2, short_a2)) == "A2-short");
    CHECK(labels_str(identify_in_host(g2, long_a2)) == "A2-long");
    CHECK(is_root_subsystem(g2, long_a2));
    CHECK(!is_root_subsystem(g2, short_a2));
}

TEST_CASE("records carry exact index and orbit size") {
    HostContext b2 = HostContext::make("B2", true);
    SubsystemRecord short_pair =
        make_record(b2, idx_of(b2, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)}));
    CHECK(short_pair.index == 2);
    CHECK(labels_group_order(short_pair.labels) == 4);
    SubsystemRecord lone = make_record(b2, idx_of(b2, {v2(1, 0), v2(-1, 0)}));
    CHECK(lone.index == 4);
    SubsystemRecord long_pair =
        make_record(b2, idx_of(b2, {v2(1, -1), v2(-1, 1), v2(1, 1), v2(-1, -1)}));
    CHECK(labels_type_list(long_pair.labels).str() == "A1+A1");
    CHECK(long_pair.index == 2);
    CHECK(long_pair.is_root_subsystem);

    auto classes = subsystem_classes(b2, false);
    auto orbit_of = [&](const std::string& label) -> long long {
        for (const auto& r : classes)
            if (labels_str(r.labels) == label) return r.orbit_size;
        return -1;
    };
    CHECK(orbit_of("B1") == 2);
    CHECK(orbit_of("A1-long") == 2);
    CHECK(orbit_of("B1+B1") == 1);
    CHECK(orbit_of("D2") == 1);
    CHECK(orbit_of("B2") == 1);
}

TEST_CASE("aut equivalence merges what the Weyl group cannot") {
    HostContext b2 = HostContext::make("B2", true);
    auto e1 = idx_of(b2, {v2(1, 0), v2(-1, 0)});
    auto e2 = idx_of(b2, {v2(0, 1), v2(0, -1)});
    auto diag = idx_of(b2, {v2(1, -1), v2(-1, 1)});
    CHECK(are_aut_equivalent(b2, e1, e2));
    // The length-swap similarity of the self-dual host pairs the lone
    // short line with the lone long line.
    CHECK(are_aut_equivalent(b2, e1, diag));
    CHECK(!are_aut_equivalent(b2, e1,
                              idx_of(b2, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)})));
    // No such similarity exists for B3.
    HostContext b3 = HostContext::make("B3", true);
    Vec p{Rat(1), Rat(0), Rat(0)};
    Vec q{Rat(1), Rat(-1), Rat(0)};
    CHECK(!are_aut_equivalent(b3, idx_of(b3, {p, coxeter::neg(p)}),
                              idx_of(b3, {q, coxeter::neg(q)})));
    CHECK(is_maximal_closed(b2, idx_of(b2, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)})));
    CHECK(!is_maximal_closed(b2, e1));
    CHECK(class_labels(maximal_subsystem_classes(b2, false)) ==
          std::set<std::string>{"B1+B1", "D2"});
}

TEST_CASE("class enumeration by host label") {
    CHECK(enumerate_reflection_subgroups("B2", false).size() == 5);
    CHECK(enumerate_reflection_subgroups("B2", true).size() == 3);
    HostContext a3 = HostContext::make("A3", true);
    CHECK(enumerate_reflection_subgroups("A3", false).size() ==
          subsystem_classes(a3, false).size());
    auto f4 = enumerate_reflection_subgroups("F4", true);
    CHECK(class_labels(f4).count("B2+B2") == 1);
}

TEST_CASE("targeted subsystem search") {
    FiniteRootSystem f4 = build_root_system("F4");
    auto found = find_subsystem(f4, TypeList::parse("B2+B2"));
    REQUIRE(found.has_value());
    CHECK(found->size() == 4);
    FiniteRootSystem a2 = build_root_system("A2");
    CHECK(!find_subsystem(a2, TypeList::parse("A1+A1")).has_value());
    CHECK(!find_subsystem(build_root_system("B3"), TypeList::parse("G2")).has_value());
}

TEST_CASE("maximal finite catalogs") {
    CHECK(class_labels(maximal_finite_subgroups("A3")) ==
          std::set<std::string>{"A1+A1", "A2"});
    CHECK(class_labels(maximal_finite_subgroups("B3")) ==
          std::set<std::string>{"B1+B2", "D3"});
    CHECK(class_labels(maximal_finite_subgroups("E8")) ==
          std::set<std::string>{"A4+A4", "A8", "D8", "A2+E6", "A1+E7"});
}
