// JSON serialization with exact rationals and stable key order.

#include "coxeter/json_io.hpp"

using nlohmann::json;

namespace coxeter {

namespace {

std::string cut_kind_str(CutKind k) {
    switch (k) {
        case CutKind::theta: return "theta";
        case CutKind::theta_prime: return "theta-prime";
        case CutKind::cone: return "cone";
    }
    throw IllegalType("unknown cut kind");
}

CutKind cut_kind_parse(const std::string& s) {
    if (s == "theta") return CutKind::theta;
    if (s == "theta-prime") return CutKind::theta_prime;
    if (s == "cone") return CutKind::cone;
    throw IllegalType("unknown cut kind: " + s);
}

} // namespace

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) { return Rat::parse(j.get<std::string>()); }

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

Vec vec_from_json(const json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json diagram_to_json(const CoxeterDiagram& d) {
    json edges = json::array();
    for (const auto& e : d.edges()) edges.push_back({e.a, e.b, e.m});
    return {{"nodes", d.size()}, {"edges", edges}};
}

CoxeterDiagram diagram_from_json(const json& j) {
    std::vector<DiagramEdge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<size_t>(), e.at(1).get<size_t>(), e.at(2).get<int>()});
    return CoxeterDiagram::from_edges(j.at("nodes").get<size_t>(), edges);
}

json chamber_to_json(const FundamentalChamber& c) {
    json comps = json::array();
    for (const auto& comp : c.components) {
        json walls = json::array();
        for (const auto& w : comp.walls)
            walls.push_back({{"normal", vec_to_json(w.normal)}, {"offset", rat_to_json(w.offset)}});
        comps.push_back({{"kind", comp.kind == ChamberKind::simplex ? "simplex" : "cone"},
                         {"walls", walls}});
    }
    return {{"components", comps}};
}

FundamentalChamber chamber_from_json(const json& j) {
    FundamentalChamber c;
    for (const auto& jc : j.at("components")) {
        ChamberComponent comp;
        comp.kind = jc.at("kind").get<std::string>() == "simplex" ? ChamberKind::simplex
                                                                  : ChamberKind::simplicial_cone;
        for (const auto& jw : jc.at("walls"))
            comp.walls.push_back(
                {vec_from_json(jw.at("normal")), rat_from_json(jw.at("offset"))});
        c.components.push_back(std::move(comp));
    }
    return c;
}

json subgroup_record_to_json(const SubgroupRecord& r) {
    json trace = json::array();
    for (const auto& t : r.trace)
        trace.push_back({{"component", t.finite_label},
                         {"cut", cut_kind_str(t.cut)},
                         {"k", t.k}});
    json index;
    if (r.index) index = *r.index;
    return {{"host", r.host_type.str()},
            {"host_diagram", diagram_to_json(r.host_diagram)},
            {"sub", r.sub_type.str()},
            {"sub_diagram", diagram_to_json(r.sub_diagram)},
            {"chamber", chamber_to_json(r.chamber)},
            {"index", index},
            {"vertex", vec_to_json(r.vertex)},
            {"vertex_special", r.vertex_special},
            {"vertex_stab_order", r.vertex_stab_order},
            {"finite_part_order", r.finite_part_order},
            {"trace", trace},
            {"block_maximal", r.block_maximal},
            {"word", r.word_trace}};
}

SubgroupRecord subgroup_record_from_json(const json& j) {
    SubgroupRecord r;
    r.host_type = TypeList::parse(j.at("host").get<std::string>());
    r.host_diagram = diagram_from_json(j.at("host_diagram"));
    r.sub_type = TypeList::parse(j.at("sub").get<std::string>());
    r.sub_diagram = diagram_from_json(j.at("sub_diagram"));
    r.chamber = chamber_from_json(j.at("chamber"));
    if (!j.at("index").is_null()) r.index = j.at("index").get<long long>();
    r.vertex = vec_from_json(j.at("vertex"));
    r.vertex_special = j.at("vertex_special").get<bool>();
    r.vertex_stab_order = j.at("vertex_stab_order").get<long long>();
    r.finite_part_order = j.at("finite_part_order").get<long long>();
    for (const auto& jt : j.at("trace"))
        r.trace.push_back({jt.at("component").get<std::string>(),
                           cut_kind_parse(jt.at("cut").get<std::string>()),
                           jt.at("k").get<long long>()});
    r.block_maximal = j.at("block_maximal").get<bool>();
    r.word_trace = j.at("word").get<std::string>();
    return r;
}

json subsystem_record_to_json(const SubsystemRecord& r) {
    json labels = json::array();
    for (const auto& l : r.labels) labels.push_back(l.str());
    json simples = json::array();
    for (const auto& s : r.simple_roots) simples.push_back(vec_to_json(s));
    return {{"host", r.host_type.str()},
            {"labels", labels},
            {"type", labels_type_list(r.labels).str()},
            {"roots", r.roots},
            {"simple_roots", simples},
            {"is_root_subsystem", r.is_root_subsystem},
            {"index", r.index},
            {"orbit_size", r.orbit_size}};
}

json wrap_record(const std::string& kind, json payload) {
    return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

} // namespace coxeter
