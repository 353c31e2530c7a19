// JSON serialization: lossless round trips, the record envelope, and
// deterministic dumps.

#include <doctest.h>

#include <string>

#include "coxeter/json_io.hpp"

using namespace coxeter;

TEST_CASE("rational and vector round trips") {
    for (const Rat& r : {Rat(0), Rat(5), Rat(-7, 3), Rat(22, 4)}) {
        nlohmann::json j = rat_to_json(r);
        CHECK(rat_from_json(j) == r);
        CHECK(rat_to_json(rat_from_json(j)).dump() == j.dump());
    }
    Vec v{Rat(1, 2), Rat(-3), Rat(0)};
    CHECK(vec_from_json(vec_to_json(v)) == v);
}

TEST_CASE("diagram round trip") {
    CoxeterDiagram d = CoxeterDiagram::from_edges(4, {{0, 1, 4}, {1, 2, 3}, {2, 3, 4}});
    nlohmann::json j = diagram_to_json(d);
    CoxeterDiagram back = diagram_from_json(j);
    REQUIRE(back.size() == d.size());
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t k = 0; k < d.size(); ++k) CHECK(back.bond(i, k) == d.bond(i, k));
    CHECK(diagram_to_json(back).dump() == j.dump());
}

TEST_CASE("chamber round trip") {
    FiniteRootSystem g2 = build_root_system("G2");
    FundamentalChamber c = fundamental_alcove(g2);
    nlohmann::json j = chamber_to_json(c);
    FundamentalChamber back = chamber_from_json(j);
    REQUIRE(back.components.size() == c.components.size());
    CHECK(chamber_to_json(back).dump() == j.dump());
    CHECK(chamber_volume_sq(back, g2.ambient_dim) == chamber_volume_sq(c, g2.ambient_dim));
}

TEST_CASE("subgroup record round trip") {
    SubgroupRecord rec = exceptional_subgroup(CartanType::parse("tG2"));
    nlohmann::json j = subgroup_record_to_json(rec);
    SubgroupRecord back = subgroup_record_from_json(j);
    CHECK(back.index == rec.index);
    CHECK(back.sub_type.str() == rec.sub_type.str());
    CHECK(back.host_type.str() == rec.host_type.str());
    CHECK(back.vertex == rec.vertex);
    CHECK(back.trace == rec.trace);
    CHECK(back.block_maximal == rec.block_maximal);
    CHECK(back.word_trace == rec.word_trace);
    CHECK(subgroup_record_to_json(back).dump() == j.dump());
}

TEST_CASE("subsystem record serialization") {
    HostContext b2 = HostContext::make("B2", true);
    auto classes = subsystem_classes(b2, false);
    REQUIRE(!classes.empty());
    nlohmann::json j = subsystem_record_to_json(classes.front());
    CHECK(j.contains("labels"));
    CHECK(j.contains("index"));
    CHECK(j.contains("orbit_size"));
    CHECK(j.contains("is_root_subsystem"));
    CHECK(j.contains("simple_roots"));
}

TEST_CASE("record envelope") {
    nlohmann::json j = wrap_record("subgroup", nlohmann::json{{"x", 1}});
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["kind"] == "subgroup");
    CHECK(j["payload"]["x"] == 1);
    CHECK(wrap_record("subgroup", nlohmann::json{{"x", 1}}).dump() == j.dump());
}
