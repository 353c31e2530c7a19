// Command-line front end: classify pasted diagrams, enumerate reflection
// subgroups, run the manifest verification suites, and compute the index of
// a chamber given as JSON.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxeter/dot.hpp"
#include "coxeter/json_io.hpp"
#include "coxeter/subgroups.hpp"
#include "coxeter/verify.hpp"

namespace {

using namespace coxeter;
using nlohmann::json;

// ============================================================
// classify
// ============================================================

struct EdgeEntry {
    long long a = 0;
    long long b = 0;
    long long m = 0;
    int line = 0;
    int column = 0;
};

struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;
};

// Entries are "i j m" triples separated by ';' or newlines.
std::vector<EdgeEntry> parse_edge_list(const std::string& text) {
    std::vector<EdgeEntry> entries;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        size_t start = 0;
        while (start <= line.size()) {
            size_t end = line.find(';', start);
            if (end == std::string::npos) end = line.size();
            std::string piece = line.substr(start, end - start);
            size_t first = piece.find_first_not_of(" \t");
            if (first != std::string::npos) {
                int column = static_cast<int>(start + first) + 1;
                std::istringstream ts(piece);
                long long vals[3];
                std::string tok;
                int got = 0;
                bool bad = false;
                while (ts >> tok) {
                    if (got >= 3) {
                        bad = true;
                        break;
                    }
                    if (tok == "inf") {
                        vals[got++] = kInfiniteBond;
                        continue;
                    }
                    try {
                        size_t used = 0;
                        vals[got] = std::stoll(tok, &used);
                        if (used != tok.size()) bad = true;
                    } catch (const std::exception&) {
                        bad = true;
                    }
                    if (bad) break;
                    ++got;
                }
                if (bad || got != 3)
                    throw ParseError{lineno, column,
                                     "expected a 'node node bond' triple, got '" + piece + "'"};
                EdgeEntry e{vals[0], vals[1], vals[2], lineno, column};
                if (e.a < 1 || e.b < 1)
                    throw ParseError{lineno, column, "node labels must be positive integers"};
                if (e.a == e.b) throw ParseError{lineno, column, "self-loop on node " +
                                                                     std::to_string(e.a)};
                if (e.m == 1 || e.m < 0)
                    throw ParseError{lineno, column,
                                     "bond label must be 0 (infinite) or an integer >= 2"};
                entries.push_back(e);
            }
            if (end == line.size()) break;
            start = end + 1;
        }
    }
    return entries;
}

bool crystallographic_bond(long long m) { return m == 0 || m == 2 || m == 3 || m == 4 || m == 6; }

int cmd_classify(const std::string& text, bool json_out, bool dot_out) {
    std::vector<EdgeEntry> entries;
    try {
        entries = parse_edge_list(text);
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
                  << e.message << "\n";
        return 1;
    }
    if (entries.empty()) {
        std::cerr << "parse error at line 1, column 1: empty edge list\n";
        return 1;
    }

    std::set<long long> labels;
    for (const auto& e : entries) {
        labels.insert(e.a);
        labels.insert(e.b);
    }
    std::map<long long, size_t> id;
    std::vector<long long> names;
    for (long long l : labels) {
        id[l] = names.size();
        names.push_back(l);
    }
    size_t n = names.size();

    std::vector<std::vector<long long>> bond(n, std::vector<long long>(n, 2));
    for (size_t i = 0; i < n; ++i) bond[i][i] = 1;
    for (const auto& e : entries) {
        bond[id[e.a]][id[e.b]] = e.m;
        bond[id[e.b]][id[e.a]] = e.m;
    }

    std::vector<size_t> comp_of(n, n);
    std::vector<std::vector<size_t>> comps;
    for (size_t s = 0; s < n; ++s) {
        if (comp_of[s] != n) continue;
        std::vector<size_t> stack{s}, members;
        comp_of[s] = comps.size();
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (size_t u = 0; u < n; ++u)
                if (u != v && bond[v][u] != 2 && comp_of[u] == n) {
                    comp_of[u] = comps.size();
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(members);
    }

    struct Verdict {
        std::vector<size_t> nodes;
        std::string kind; // Elliptic / Parabolic / NeitherOrUnknown
        std::string type; // empty for NeitherOrUnknown
    };
    std::vector<Verdict> verdicts;
    for (const auto& members : comps) {
        Verdict v;
        v.nodes = members;
        bool legal = true;
        for (size_t i : members)
            for (size_t j : members)
                if (i < j && !crystallographic_bond(bond[i][j])) legal = false;
        if (!legal) {
            v.kind = "NeitherOrUnknown";
        } else {
            CoxeterDiagram d = CoxeterDiagram::empty(members.size());
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t j = i + 1; j < members.size(); ++j)
                    d.m[i][j] = d.m[j][i] = static_cast<int>(bond[members[i]][members[j]]);
            try {
                CartanType t = classify_connected_diagram(d);
                v.kind = t.affine ? "Parabolic" : "Elliptic";
                v.type = t.str();
            } catch (const CoxeterError&) {
                v.kind = "NeitherOrUnknown";
            }
        }
        verdicts.push_back(std::move(v));
    }

    if (json_out) {
        json comps_json = json::array();
        for (const auto& v : verdicts) {
            json nodes = json::array();
            for (size_t i : v.nodes) nodes.push_back(names[i]);
            json c = {{"nodes", nodes}, {"class", v.kind}};
            if (!v.type.empty()) c["type"] = v.type;
            comps_json.push_back(c);
        }
        std::cout << wrap_record("classification", {{"components", comps_json}}).dump(2) << "\n";
    } else {
        for (size_t c = 0; c < verdicts.size(); ++c) {
            const auto& v = verdicts[c];
            std::cout << "component " << (c + 1) << " [";
            for (size_t i = 0; i < v.nodes.size(); ++i)
                std::cout << (i ? " " : "") << names[v.nodes[i]];
            std::cout << "]: " << v.kind;
            if (!v.type.empty()) std::cout << "(" << v.type << ")";
            std::cout << "\n";
        }
    }
    for (const auto& v : verdicts)
        if (v.kind == "NeitherOrUnknown")
            std::cerr << "warning: a component is neither elliptic nor parabolic "
                         "(or outside the crystallographic catalog)\n";

    if (dot_out) {
        CoxeterDiagram d = CoxeterDiagram::empty(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j) d.m[i][j] = static_cast<int>(bond[i][j]);
        std::vector<std::string> node_names;
        for (long long l : names) node_names.push_back(std::to_string(l));
        std::cout << to_dot(d, node_names, {}, "classified");
    }
    return 0;
}

// ============================================================
// enumerate
// ============================================================

std::string cut_str(CutKind k) {
    switch (k) {
        case CutKind::theta: return "theta";
        case CutKind::theta_prime: return "theta'";
        case CutKind::cone: return "cone";
    }
    return "?";
}

std::string trace_str(const SubgroupRecord& r) {
    std::string s;
    for (size_t i = 0; i < r.trace.size(); ++i) {
        if (i) s += " + ";
        const auto& t = r.trace[i];
        s += t.finite_label + ":" + cut_str(t.cut);
        if (t.cut != CutKind::cone) s += " k=" + std::to_string(t.k);
    }
    return s.empty() ? "(empty)" : s;
}

int cmd_enumerate(const std::string& type_str, long long max_index, bool max_index_set,
                  bool up_to_aut, bool json_out, bool dot_out) {
    TypeList tl = TypeList::parse(type_str);
    bool affine = false;
    for (const auto& p : tl.parts) affine = affine || p.affine;

    std::ostringstream body;
    if (affine) {
        auto recs = enumerate_subgroups(tl, max_index);
        if (json_out) {
            json arr = json::array();
            for (const auto& r : recs) arr.push_back(wrap_record("subgroup",
                                                                 subgroup_record_to_json(r)));
            body << arr.dump(2) << "\n";
        } else {
            std::map<std::string, long long> by_label;
            for (const auto& r : recs) {
                body << "index=" << (r.index ? std::to_string(*r.index) : "infinite")
                     << " sub=" << r.sub_type.str() << " vertex=[" << trace_str(r) << "]"
                     << " special=" << (r.vertex_special ? "yes" : "no")
                     << " block-maximal=" << (r.block_maximal ? "yes" : "no");
                if (!r.word_trace.empty()) body << " word=" << r.word_trace;
                body << "\n";
                ++by_label[r.sub_type.str()];
            }
            body << "total: " << recs.size() << " classes, " << by_label.size()
                 << " distinct sub labels, max index " << max_index << "\n";
        }
        if (dot_out) {
            size_t c = 0;
            for (const auto& r : recs) {
                std::vector<std::string> names;
                for (size_t i = 0; i < r.sub_diagram.size(); ++i)
                    names.push_back(std::to_string(i + 1));
                body << to_dot(r.sub_diagram, names, {}, "sub" + std::to_string(++c));
            }
        }
    } else {
        auto recs = enumerate_reflection_subgroups(type_str, up_to_aut);
        if (max_index_set) {
            std::vector<SubsystemRecord> kept;
            for (auto& r : recs)
                if (r.index <= max_index) kept.push_back(std::move(r));
            recs = std::move(kept);
        }
        if (json_out) {
            json arr = json::array();
            for (const auto& r : recs) arr.push_back(wrap_record("subsystem",
                                                                 subsystem_record_to_json(r)));
            body << arr.dump(2) << "\n";
        } else {
            for (const auto& r : recs) {
                body << "labels=" << labels_str(r.labels) << " index=" << r.index
                     << " rank=" << r.simple_roots.size()
                     << " root-subsystem=" << (r.is_root_subsystem ? "yes" : "no");
                if (r.orbit_size > 0) body << " orbit=" << r.orbit_size;
                body << "\n";
            }
            body << "total: " << recs.size() << " classes\n";
        }
        if (dot_out) {
            size_t c = 0;
            for (const auto& r : recs)
                if (!r.simple_roots.empty())
                    body << to_dot(diagram_from_simples(r.simple_roots), {}, {},
                                   "sub" + std::to_string(++c));
        }
    }
    std::cout << body.str();
    return 0;
}

// ============================================================
// verify
// ============================================================

int cmd_verify(const std::string& manifest_path, const std::string& tables,
               const std::string& lemmas, bool fig1, bool oracle, bool infinite,
               bool admissible, bool json_out) {
    std::ifstream in(manifest_path);
    if (!in) {
        std::cerr << "error: cannot open manifest '" << manifest_path << "'\n";
        return 1;
    }
    json manifest = json::parse(in);

    std::set<std::string> table_sel, lemma_sel;
    auto split_csv = [](const std::string& s, std::set<std::string>& out) {
        size_t start = 0;
        while (start <= s.size()) {
            size_t end = s.find(',', start);
            if (end == std::string::npos) end = s.size();
            if (end > start) out.insert(s.substr(start, end - start));
            if (end == s.size()) break;
            start = end + 1;
        }
    };
    split_csv(tables, table_sel);
    split_csv(lemmas, lemma_sel);

    bool any_selector = !table_sel.empty() || !lemma_sel.empty() || fig1 || oracle ||
                        infinite || admissible;
    auto want_table = [&](const std::string& t) {
        return !any_selector || table_sel.count(t) > 0;
    };
    auto want_lemma = [&](const std::string& l) {
        return !any_selector || lemma_sel.count(l) > 0;
    };

    for (const auto& t : table_sel)
        if (t != "2" && t != "3" && t != "5") {
            std::cerr << "error: unknown table '" << t << "' (expected 2, 3 or 5)\n";
            return 1;
        }
    for (const auto& l : lemma_sel)
        if (l != "kn" && l != "divisibility" && l != "embedding") {
            std::cerr << "error: unknown lemma '" << l
                      << "' (expected kn, divisibility or embedding)\n";
            return 1;
        }

    std::vector<CheckResult> results;
    auto run = [&](std::vector<CheckResult> r) {
        results.insert(results.end(), r.begin(), r.end());
    };
    if (want_table("2")) run(verify_table2(manifest));
    if (want_table("3")) run(verify_table3(manifest));
    if (want_table("5")) run(verify_table5(manifest));
    if (want_lemma("kn")) run(verify_lemma_kn(manifest));
    if (!any_selector || oracle) run(verify_finite_oracle(manifest));
    if (want_lemma("embedding")) run(verify_embedding(manifest));
    if (!any_selector || fig1) run(verify_fig1(manifest));
    if (!any_selector || infinite) run(verify_infinite_pairs(manifest));
    if (want_lemma("divisibility")) run(verify_divisibility(manifest));
    if (!any_selector || admissible) run(verify_admissible(manifest));

    size_t passed = 0, failed = 0, discrepancies = 0;
    for (const auto& r : results) {
        if (r.status == CheckStatus::pass) ++passed;
        if (r.status == CheckStatus::fail) ++failed;
        if (r.status == CheckStatus::discrepancy) ++discrepancies;
    }

    if (json_out) {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name},
                           {"status", status_str(r.status)},
                           {"computed", r.computed},
                           {"expected", r.expected},
                           {"note", r.note}});
        json payload = {{"checks", arr},
                        {"passed", passed},
                        {"failed", failed},
                        {"discrepancies", discrepancies}};
        std::cout << wrap_record("verification-report", payload).dump(2) << "\n";
    } else {
        std::ostringstream body;
        for (const auto& r : results) {
            body << "[" << status_str(r.status) << "] " << r.name << " (computed " << r.computed
                 << ", expected " << r.expected << ")";
            if (!r.note.empty()) body << " note: " << r.note;
            body << "\n";
        }
        body << "summary: " << results.size() << " checks, " << passed << " passed, "
             << discrepancies << " discrepancies, " << failed << " failed\n";
        std::cout << body.str();
    }
    return failed == 0 ? 0 : 1;
}

// ============================================================
// index
// ============================================================

int cmd_index(const std::string& host, const std::string& chamber_path, bool oracle,
              long long cap) {
    FiniteRootSystem fin = finite_part_of(TypeList::parse(host));
    std::ifstream in(chamber_path);
    if (!in) {
        std::cerr << "error: cannot open chamber file '" << chamber_path << "'\n";
        return 1;
    }
    json j = json::parse(in);
    if (j.contains("payload")) j = j.at("payload");
    if (j.contains("chamber")) j = j.at("chamber");
    FundamentalChamber chamber = chamber_from_json(j);

    long long idx = 0;
    try {
        idx = subgroup_index(fin, chamber);
    } catch (const CoxeterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << "index: " << idx << "\n";
    if (oracle) {
        long long use_cap = cap > 0 ? cap : 4 * idx + 16;
        long long cnt = tiling_index_oracle(fin, chamber, use_cap);
        std::cout << "oracle: " << cnt << " (" << (cnt == idx ? "AGREE" : "DISAGREE") << ")\n";
        if (cnt != idx) return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reflection subgroups of finite and affine Weyl groups"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "Classify a diagram given as an edge list");
    std::string edge_text;
    bool cl_json = false, cl_dot = false;
    classify->add_option("edges", edge_text,
                         "Edge entries 'i j m' separated by ';' or newlines")
        ->required();
    classify->add_flag("--json", cl_json, "Emit a JSON report");
    classify->add_flag("--dot", cl_dot, "Emit the diagram in DOT format");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate reflection subgroups");
    std::string en_type;
    long long en_max_index = 24;
    bool en_aut = false, en_json = false, en_dot = false;
    enumerate->add_option("type", en_type, "Host type, e.g. tG2 or F4")->required();
    auto* mi = enumerate->add_option("--max-index", en_max_index,
                                     "Largest index to enumerate (affine hosts; default 24)");
    enumerate->add_flag("--up-to-aut", en_aut,
                        "Merge classes under the full automorphism group (finite hosts)");
    enumerate->add_flag("--json", en_json, "Emit records as JSON");
    enumerate->add_flag("--dot", en_dot, "Emit each subgroup diagram in DOT format");

    auto* verify = app.add_subcommand("verify", "Run the manifest verification suites");
    std::string vf_manifest = "data/verification_manifest.json";
    std::string vf_tables, vf_lemmas;
    bool vf_fig1 = false, vf_oracle = false, vf_infinite = false, vf_admissible = false;
    bool vf_json = false;
    verify->add_option("--manifest", vf_manifest, "Manifest path");
    verify->add_option("--tables", vf_tables, "Comma list from {2,3,5}");
    verify->add_option("--lemmas", vf_lemmas, "Comma list from {kn,divisibility,embedding}");
    verify->add_flag("--fig1", vf_fig1, "Check the index-8 commensurability classes");
    verify->add_flag("--oracle", vf_oracle, "Check the finite enumeration against brute force");
    verify->add_flag("--infinite", vf_infinite, "Check the infinite-index maximal pairs");
    verify->add_flag("--admissible", vf_admissible, "Check the admissible chain catalog");
    verify->add_flag("--json", vf_json, "Emit a JSON verification report");

    auto* index = app.add_subcommand("index", "Exact index of a chamber given as JSON");
    std::string ix_host, ix_file;
    bool ix_oracle = false;
    long long ix_cap = 0;
    index->add_option("host", ix_host, "Affine host type, e.g. tC2")->required();
    index->add_option("chamber", ix_file, "Chamber JSON file")->required();
    index->add_flag("--oracle", ix_oracle, "Cross-check by counting alcoves");
    index->add_option("--cap", ix_cap, "Alcove-count cap for the oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(edge_text, cl_json, cl_dot);
        if (enumerate->parsed())
            return cmd_enumerate(en_type, en_max_index, mi->count() > 0, en_aut, en_json,
                                 en_dot);
        if (verify->parsed())
            return cmd_verify(vf_manifest, vf_tables, vf_lemmas, vf_fig1, vf_oracle,
                              vf_infinite, vf_admissible, vf_json);
        if (index->parsed()) return cmd_index(ix_host, ix_file, ix_oracle, ix_cap);
    } catch (const CoxeterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
