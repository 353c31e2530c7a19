// Reflection subgroups of affine Weyl groups: the vertex-plus-cuts
// construction, exact volume-ratio indices, an independent tiling oracle,
// homotheties, the frozen word-table constructions, maximal-subgroup
// catalogs, admissible chains, the embedding criterion, and bounded
// enumeration with equivalence dedup.

#include "coxeter/subgroups.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "coxeter/tables.hpp"

namespace coxeter {

namespace {

// ============================================================
// Small helpers
// ============================================================

size_t thread_count() {
    if (const char* s = std::getenv("COXETER_SUBGROUPS_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return static_cast<size_t>(v);
    }
    return 1;
}

Vec barycenter(const std::vector<Vec>& pts) {
    Vec b = zero_vec(pts.at(0).size());
    for (const auto& p : pts) b = add(b, p);
    return scale(b, Rat(1, static_cast<long long>(pts.size())));
}

// Lowest root of a closed irreducible set: minimal coordinate sum over the
// given simple system.
Vec lowest_root_of(const std::vector<Vec>& closure, const std::vector<Vec>& simples) {
    const Vec* best = nullptr;
    Rat best_sum;
    for (const auto& r : closure) {
        auto c = coords_in_basis(simples, r);
        if (!c) throw NotClosed("root outside the span of its component simples");
        Rat s(0);
        for (const auto& x : *c) s = s + x;
        if (!best || s < best_sum) {
            best = &r;
            best_sum = s;
        }
    }
    if (!best) throw ZeroMirror("empty component");
    return *best;
}

// Interior direction of the host's fundamental Weyl chamber: the vector in
// the simple-root span pairing to 1 with every simple root. Every host root
// then pairs to a nonzero value, so it orients any subsystem consistently
// with the host chamber.
Vec chamber_direction(const FiniteRootSystem& host) {
    Mat g = gram(host.simple_roots);
    auto c = solve_square(g, Vec(host.simple_roots.size(), Rat(1)));
    if (!c) throw ZeroMirror("dependent simple roots");
    Vec q = zero_vec(host.ambient_dim);
    for (size_t i = 0; i < c->size(); ++i) q = add(q, scale(host.simple_roots[i], (*c)[i]));
    return q;
}

// Halfspace (n, x - vertex) >= 0 for an inward direction n.
Halfspace wall_through(const Vec& n, const Vec& vertex) {
    return {neg(n), dot(n, vertex)};
}

// Halfspace (theta, x - vertex) + k >= 0.
Halfspace cut_wall(const Vec& theta, const Vec& vertex, long long k) {
    return {neg(theta), dot(theta, vertex) - Rat(k)};
}

// ============================================================
// Component construction
// ============================================================

struct BuiltComponent {
    std::vector<Vec> simples; // canonical simple system of the closure
    std::vector<Vec> closure;
    CartanType type;          // single irreducible finite label
    ChamberComponent comp;
};

BuiltComponent build_cut_component(const FiniteRootSystem& host, const Vec& vertex,
                                   const std::vector<Vec>& gens, const CutChoice& cut) {
    if (gens.empty()) throw ZeroMirror("empty component generator list");
    for (const auto& g : gens) {
        if (!host.contains(g)) throw NotHostRoot("component generator is not a host root");
        if (!dot(g, vertex).is_integer())
            throw NotSpecial("no host mirror through the vertex in a generator direction");
    }
    BuiltComponent out;
    out.closure = reflection_closure(gens);
    TypeList tl = identify_type(out.closure);
    if (tl.parts.size() != 1)
        throw Decomposable("component generators must span one irreducible subsystem");
    out.type = tl.parts[0];
    out.simples = simple_system_of(out.closure, chamber_direction(host));
    for (const auto& s : out.simples) out.comp.walls.push_back(wall_through(s, vertex));
    switch (cut.kind) {
        case CutKind::theta: {
            if (cut.k < 1) throw IllegalType("cut distance must be a positive integer");
            Vec theta = lowest_root_of(out.closure, out.simples);
            out.comp.walls.push_back(cut_wall(theta, vertex, cut.k));
            out.comp.kind = ChamberKind::simplex;
            break;
        }
        case CutKind::theta_prime: {
            if (cut.k < 1) throw IllegalType("cut distance must be a positive integer");
            Vec theta = lowest_root_of(out.closure, out.simples);
            Vec tp = theta_prime(out.type, out.simples, theta);
            out.comp.walls.push_back(cut_wall(tp, vertex, cut.k));
            out.comp.kind = ChamberKind::simplex;
            break;
        }
        case CutKind::cone:
            out.comp.kind = ChamberKind::simplicial_cone;
            break;
    }
    return out;
}

// Squared volume of the unit alcove of a closed set, as the product over
// its irreducible pieces, in the ambient dimension given.
Rat unit_alcove_volume_sq(const std::vector<Vec>& closure, size_t ambient_dim) {
    auto comps = orthogonal_components(closure);
    Rat total(1);
    for (const auto& idxs : comps) {
        std::vector<Vec> piece;
        for (size_t i : idxs) piece.push_back(closure[i]);
        auto simples = simple_system_of(piece);
        Vec theta = lowest_root_of(piece, simples);
        ChamberComponent a;
        for (const auto& s : simples) a.walls.push_back({neg(s), Rat(0)});
        a.walls.push_back({neg(theta), Rat(-1)});
        total = total * component_volume_sq(a, ambient_dim);
    }
    return total;
}

// A chamber component holds every host mirror parallel to its own exactly
// when its volume equals the unit-alcove volume of its direction set.
bool chamber_block_maximal(const FundamentalChamber& chamber, size_t ambient_dim) {
    for (const auto& comp : chamber.components) {
        if (comp.kind != ChamberKind::simplex) return false;
        std::vector<Vec> dirs;
        for (const auto& w : comp.walls) dirs.push_back(w.normal);
        auto closure = reflection_closure(dirs);
        if (component_volume_sq(comp, ambient_dim) != unit_alcove_volume_sq(closure, ambient_dim))
            return false;
    }
    return true;
}

std::vector<TraceComponent> sorted_trace(std::vector<TraceComponent> t) {
    std::sort(t.begin(), t.end());
    return t;
}

// Host-contextual label of one irreducible closed component.
std::string component_label(const HostContext& ctx, const std::vector<Vec>& closure) {
    std::vector<size_t> idxs;
    for (const auto& r : closure) idxs.push_back(ctx.index_of(r));
    std::sort(idxs.begin(), idxs.end());
    auto labels = identify_in_host(ctx, idxs);
    return labels_str(labels);
}

} // namespace

// ============================================================
// Word-table application
// ============================================================

SubgroupRecord word_row_subgroup(const WordConstruction& w) {
    FiniteRootSystem fin = finite_part_of(TypeList({w.host}));
    ChamberComponent alc = alcove_component(fin, 0);
    size_t nw = alc.walls.size();
    if (w.facet_order.size() != nw) throw HostMismatch("facet numbering does not fit the host");
    std::vector<Halfspace> facets(nw);
    for (size_t j = 0; j < nw; ++j) facets[j] = alc.walls[w.facet_order[j]];

    Halfspace seed_wall = facets.at(w.seed - 1);
    AffineRoot xi{neg(seed_wall.normal), -seed_wall.offset};
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        const Halfspace& f = facets.at(*it - 1);
        xi = AffineRoot{f.normal, f.offset}.reflect_root(xi);
    }

    Vec bary = barycenter(simplex_vertices(alc, fin.ambient_dim));
    Halfspace new_wall = positive_side(xi);
    if (!new_wall.contains(bary)) new_wall = positive_side(xi.negated());

    ChamberComponent cc;
    for (size_t j = 0; j < nw; ++j)
        if (j != w.dropped - 1) cc.walls.push_back(facets[j]);
    cc.walls.push_back(new_wall);
    FundamentalChamber chamber{{cc}};

    SubgroupRecord rec;
    rec.host_type = TypeList({w.host});
    rec.host_diagram = diagram_of_chamber(fundamental_alcove(fin));
    rec.sub_diagram = diagram_of_chamber(chamber);
    rec.sub_type = classify_diagram(rec.sub_diagram);
    rec.chamber = chamber;
    rec.index = subgroup_index(fin, chamber);
    rec.vertex = zero_vec(fin.ambient_dim);
    rec.vertex_special = true;
    rec.vertex_stab_order = fin.weyl_order();
    std::vector<Vec> dirs;
    for (const auto& wl : cc.walls) dirs.push_back(wl.normal);
    rec.finite_part_order = identify_type(reflection_closure(dirs)).group_order();
    rec.block_maximal = chamber_block_maximal(chamber, fin.ambient_dim);
    rec.word_trace = w.word_text;
    return rec;
}

namespace {

CartanType single_affine(const CartanType& t) {
    auto norm = t.normalized();
    if (norm.size() != 1) throw Decomposable("expected an irreducible type");
    if (!norm[0].affine) throw IllegalType("expected an affine type, got " + t.str());
    return norm[0];
}

std::vector<std::vector<Vec>> split_by_components(const std::vector<Vec>& roots) {
    auto comps = orthogonal_components(roots);
    std::vector<std::vector<Vec>> out;
    for (const auto& idxs : comps) {
        std::vector<Vec> piece;
        for (size_t i : idxs) piece.push_back(roots[i]);
        out.push_back(simple_system_of(piece));
    }
    return out;
}

} // namespace

// ============================================================
// Chamber diagram
// ============================================================

CoxeterDiagram diagram_of_chamber(const FundamentalChamber& chamber) {
    auto walls = chamber.all_walls();
    size_t n = walls.size();
    CoxeterDiagram d = CoxeterDiagram::empty(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Rat p = dot(walls[i].normal, walls[j].normal);
            if (p.sign() > 0) throw AcuteAngle("chamber facets form an acute angle");
            if (p.is_zero()) continue;
            Rat w = Rat(4) * p * p /
                    (dot(walls[i].normal, walls[i].normal) * dot(walls[j].normal, walls[j].normal));
            if (!w.is_integer() || w.num() > 4)
                throw IllegalType("facet angle is not crystallographic");
            int m = (w.num() == 4) ? kInfiniteBond : weight_to_bond(static_cast<int>(w.num()));
            d.m[i][j] = d.m[j][i] = m;
        }
    }
    return d;
}

// ============================================================
// Core construction
// ============================================================

SubgroupRecord construct_subgroup(const FiniteRootSystem& host, const Vec& vertex,
                                  const std::vector<std::vector<Vec>>& component_simples,
                                  const std::vector<CutChoice>& cuts) {
    if (component_simples.size() != cuts.size())
        throw HostMismatch("one cut choice per component");
    if (component_simples.empty()) throw ZeroMirror("no components given");

    std::vector<BuiltComponent> built;
    for (size_t c = 0; c < component_simples.size(); ++c)
        built.push_back(build_cut_component(host, vertex, component_simples[c], cuts[c]));
    for (size_t a = 0; a < built.size(); ++a)
        for (size_t b = a + 1; b < built.size(); ++b)
            for (const auto& x : built[a].closure)
                for (const auto& y : built[b].closure)
                    if (!dot(x, y).is_zero())
                        throw NotOrthogonal("components are not mutually orthogonal");

    FundamentalChamber chamber;
    size_t sub_rank = 0;
    bool any_cone = false;
    for (const auto& bc : built) {
        chamber.components.push_back(bc.comp);
        sub_rank += bc.simples.size();
        if (bc.comp.kind == ChamberKind::simplicial_cone) any_cone = true;
    }

    SubgroupRecord rec;
    rec.host_type = host.type;
    rec.host_diagram = diagram_of_chamber(fundamental_alcove(host));
    rec.sub_diagram = diagram_of_chamber(chamber);
    rec.sub_type = classify_diagram(rec.sub_diagram);
    rec.chamber = chamber;
    rec.vertex = vertex;
    rec.vertex_special = is_special_point(host, vertex);
    rec.vertex_stab_order = identify_type(roots_through(host, vertex)).group_order();
    if (!any_cone && sub_rank == host.rank()) rec.index = subgroup_index(host, chamber);

    HostContext ctx = HostContext::make(host.type, false);
    rec.finite_part_order = 1;
    for (size_t c = 0; c < built.size(); ++c) {
        rec.finite_part_order *= built[c].type.group_order();
        rec.trace.push_back({component_label(ctx, built[c].closure), cuts[c].kind, cuts[c].k});
    }
    rec.trace = sorted_trace(rec.trace);
    rec.block_maximal = chamber_block_maximal(chamber, host.ambient_dim);
    return rec;
}

long long subgroup_index(const FiniteRootSystem& host, const FundamentalChamber& chamber) {
    size_t dims = 0;
    for (const auto& comp : chamber.components) {
        if (comp.kind != ChamberKind::simplex)
            throw UnboundedChamber("cone component has no finite index");
        dims += comp.walls.size() - 1;
    }
    if (dims != host.rank()) throw UnboundedChamber("chamber has a free direction");
    Rat ratio = chamber_volume_sq(chamber, host.ambient_dim) /
                chamber_volume_sq(fundamental_alcove(host), host.ambient_dim);
    auto r = sqrt_exact(ratio);
    if (!r || !r->is_integer() || r->sign() <= 0)
        throw NonIntegerRatio("volume ratio is not a positive integer");
    return r->num();
}

long long tiling_index_oracle(const FiniteRootSystem& host, const FundamentalChamber& chamber,
                              long long cap) {
    auto walls = chamber.all_walls();
    long long total = 1;
    for (size_t c = 0; c < host.type.parts.size(); ++c) {
        auto comp_roots = host.component_roots(c);
        std::vector<Halfspace> region;
        for (const auto& w : walls) {
            bool in_comp = false;
            for (const auto& r : comp_roots)
                if (!dot(r, w.normal).is_zero()) {
                    in_comp = true;
                    break;
                }
            if (in_comp) region.push_back(w);
        }
        total *= count_alcoves_in_region(host, c, region, cap);
    }
    return total;
}

SubgroupRecord homothety_subgroup(const FiniteRootSystem& host, long long k) {
    if (k < 1) throw IllegalType("homothety factor must be a positive integer");
    Vec origin = zero_vec(host.ambient_dim);
    std::vector<std::vector<Vec>> comp_simples;
    std::vector<CutChoice> cuts;
    for (size_t c = 0; c < host.type.parts.size(); ++c) {
        std::vector<Vec> simples;
        for (size_t i : host.component_simple_indices(c)) simples.push_back(host.simple_roots[i]);
        comp_simples.push_back(simples);
        cuts.push_back({CutKind::theta, k});
    }
    return construct_subgroup(host, origin, comp_simples, cuts);
}

SubgroupRecord exceptional_subgroup(const CartanType& host_type) {
    auto norm = host_type.normalized();
    if (norm.size() == 1 && norm[0].affine)
        for (const auto& row : table2_constructions())
            if (row.host == norm[0]) return word_row_subgroup(row);
    throw NotExceptionalType(host_type.str() + " has no self-similar construction");
}

SubgroupRecord g_extension(const FiniteRootSystem& host, const Vec& vertex,
                           const std::vector<std::vector<Vec>>& component_simples) {
    if (!is_special_point(host, vertex))
        throw NotSpecial("extension must be anchored at a special vertex");
    std::vector<CutChoice> cuts(component_simples.size(), {CutKind::theta, 1});
    return construct_subgroup(host, vertex, component_simples, cuts);
}

// ============================================================
// Catalogs
// ============================================================

std::vector<SubgroupRecord> maximal_indecomposable_subgroups(const CartanType& host_type,
                                                             long long max_index) {
    CartanType h = single_affine(host_type);
    std::vector<SubgroupRecord> out;

    for (const auto& row : table3_constructions(h.rank, h.rank)) {
        if (!(row.host == h)) continue;
        SubgroupRecord rec = word_row_subgroup(row);
        if (rec.index && *rec.index <= max_index) out.push_back(std::move(rec));
    }
    for (const auto& row : table2_constructions()) {
        if (!(row.host == h)) continue;
        SubgroupRecord rec = word_row_subgroup(row);
        if (rec.index && *rec.index <= max_index) out.push_back(std::move(rec));
    }

    // Prime homotheties, dropping the prime whose dilation factors through
    // the word rows of the family.
    long long skip = 0;
    if (h.family == 'B' || h.family == 'C' || h.family == 'F') skip = 2;
    if (h.family == 'G') skip = 3;
    FiniteRootSystem fin = finite_part_of(TypeList({h}));
    for (long long p = 2; ; ++p) {
        bool prime = p >= 2;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        long long idx = 1;
        bool fits = true;
        for (int i = 0; i < h.rank; ++i) {
            if (idx > max_index / p) {
                fits = false;
                break;
            }
            idx *= p;
        }
        if (!fits || idx > max_index) break;
        if (p != skip) out.push_back(homothety_subgroup(fin, p));
    }

    std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.sub_type.str() < b.sub_type.str();
    });
    return out;
}

std::vector<SubgroupRecord> maximal_decomposable_subgroups(const CartanType& host_type) {
    CartanType h = single_affine(host_type);
    CartanType f = h;
    f.affine = false;
    FiniteRootSystem fin = finite_part_of(TypeList({h}));
    Vec origin = zero_vec(fin.ambient_dim);

    std::vector<SubgroupRecord> out;
    for (const auto& sub : maximal_finite_subgroups(f.str())) {
        if (labels_type_list(sub.labels).parts.size() < 2) continue;
        out.push_back(g_extension(fin, origin, split_by_components(sub.simple_roots)));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
        return a.sub_type.str() < b.sub_type.str();
    });
    return out;
}

// ============================================================
// Embedding criterion
// ============================================================

bool embedding_exists(const TypeList& sub_type, const CartanType& host_type) {
    CartanType h = single_affine(host_type);
    FiniteRootSystem fin = finite_part_of(TypeList({h}));

    // Each affine component may arise from either finite form that extends
    // to it: the plain form by the lowest root, the partner by the extra
    // cut direction.
    std::vector<std::vector<CartanType>> options;
    for (const auto& p : sub_type.normalized().parts) {
        if (!p.affine) throw IllegalType("subgroup type must be affine");
        CartanType plain = p;
        plain.affine = false;
        std::vector<CartanType> opts{plain};
        if (p.family == 'B' && p.rank >= 3) opts.push_back({'C', p.rank, false});
        if (p.family == 'C' && p.rank >= 3) opts.push_back({'B', p.rank, false});
        options.push_back(opts);
    }

    std::set<TypeList> candidates;
    std::vector<CartanType> chosen;
    std::function<void(size_t)> gather = [&](size_t i) {
        if (i == options.size()) {
            candidates.insert(TypeList(chosen));
            return;
        }
        for (const auto& o : options[i]) {
            chosen.push_back(o);
            gather(i + 1);
            chosen.pop_back();
        }
    };
    gather(0);

    for (const auto& cand : candidates)
        if (find_subsystem(fin, cand)) return true;
    return false;
}

bool embedding_exists(const CoxeterDiagram& sub, const CoxeterDiagram& host) {
    TypeList h = classify_diagram(host);
    if (h.parts.size() != 1) throw Decomposable("host diagram must be connected");
    return embedding_exists(classify_diagram(sub), h.parts[0]);
}

// ============================================================
// Admissible chains
// ============================================================

std::vector<AdmissibleChain> admissible_sequences(const CartanType& sub_type,
                                                  const CartanType& host_type) {
    CartanType host = single_affine(host_type);
    CartanType sub = single_affine(sub_type);
    if (sub.rank != host.rank) return {};

    struct Edge {
        CartanType from, to;
        long long index;
    };
    std::vector<Edge> edges;
    auto add_rows = [&](const std::vector<WordConstruction>& rows) {
        for (const auto& row : rows) {
            if (row.host.rank != host.rank) continue;
            SubgroupRecord rec = word_row_subgroup(row);
            auto to_norm = row.sub.normalized();
            if (to_norm.size() != 1) continue;
            edges.push_back({row.host, to_norm[0], rec.index.value()});
        }
    };
    add_rows(table3_constructions(host.rank, host.rank));

    std::vector<AdmissibleChain> out;
    std::vector<CartanType> path{host};
    std::function<void(const CartanType&, long long)> dfs = [&](const CartanType& cur,
                                                                long long idx) {
        if (cur == sub && path.size() >= 2) {
            AdmissibleChain ch;
            ch.diagrams.assign(path.rbegin(), path.rend());
            ch.index = idx;
            out.push_back(std::move(ch));
        }
        for (const auto& e : edges) {
            if (!(e.from == cur)) continue;
            if (std::find(path.begin(), path.end(), e.to) != path.end()) continue;
            path.push_back(e.to);
            dfs(e.to, idx * e.index);
            path.pop_back();
        }
    };
    dfs(host, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<CartanType, TypeList>> infinite_index_maximal_pairs(
    const CartanType& host_type) {
    CartanType h = single_affine(host_type);
    CartanType f = h;
    f.affine = false;

    std::set<TypeList> seen;
    std::vector<std::pair<CartanType, TypeList>> out;
    for (const auto& sub : maximal_finite_subgroups(f.str())) {
        TypeList tl = labels_type_list(sub.labels);
        if (tl.total_rank() >= static_cast<size_t>(h.rank)) continue;
        std::vector<CartanType> parts;
        for (auto p : tl.parts) {
            p.affine = true;
            parts.push_back(p);
        }
        TypeList affinized = TypeList(parts).normalized();
        if (seen.insert(affinized).second) out.emplace_back(h, affinized);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second.str() < b.second.str(); });
    return out;
}

bool index_divisibility_check(const SubgroupRecord& r) {
    if (!r.index) return true;
    if (r.vertex_stab_order <= 0 || r.finite_part_order <= 0) return true;
    if (r.vertex_stab_order % r.finite_part_order != 0) return false;
    long long q = r.vertex_stab_order / r.finite_part_order;
    return *r.index % q == 0;
}

// ============================================================
// Enumeration
// ============================================================

namespace {

struct Construction {
    Vec vertex;
    std::vector<std::vector<Vec>> comp_simples;
    std::vector<CutChoice> cuts;
};

struct FactorClass {
    Construction data;
    long long index = 1;
    std::string sub_str;  // canonical affine labels of the factor chamber
    bool indecomposable = false;
    bool block_max = false;
    std::vector<TraceComponent> trace;
    std::vector<Halfspace> walls; // sorted
    Vec bary;
};

// All automorphisms of a root subset as orthogonal maps, each given by the
// images of the subset's simple system.
struct RootSetAut {
    std::vector<Vec> simples;
    std::vector<std::vector<Vec>> images;
};

RootSetAut root_set_automorphisms(const std::vector<Vec>& roots) {
    RootSetAut out;
    out.simples = simple_system_of(roots);
    Mat g = gram(out.simples);
    size_t n = out.simples.size();
    std::vector<Vec> img;
    std::function<void()> rec = [&]() {
        if (img.size() == n) {
            out.images.push_back(img);
            return;
        }
        size_t i = img.size();
        for (const auto& cand : roots) {
            if (dot(cand, cand) != g[i][i]) continue;
            bool ok = true;
            for (size_t j = 0; j < i; ++j)
                if (dot(cand, img[j]) != g[i][j]) {
                    ok = false;
                    break;
                }
            if (ok) {
                img.push_back(cand);
                rec();
                img.pop_back();
            }
        }
    };
    rec();
    return out;
}

Vec apply_aut(const RootSetAut& aut, size_t which, const Vec& v) {
    auto c = coords_in_basis(aut.simples, v);
    if (!c) throw HostMismatch("vector outside the factor span");
    Vec out = zero_vec(v.size());
    for (size_t i = 0; i < c->size(); ++i) out = add(out, scale(aut.images[which][i], (*c)[i]));
    return out;
}

// Arrangement-preserving isometry search between two factor chambers:
// some aut of the factor root set composed with a translation that pairs
// integrally with every factor root.
bool chambers_isometric(const std::vector<Vec>& factor_roots, const RootSetAut& aut,
                        const FactorClass& a, const FactorClass& b) {
    if (a.walls.size() != b.walls.size()) return false;
    for (size_t q = 0; q < aut.images.size(); ++q) {
        Vec t = sub(b.bary, apply_aut(aut, q, a.bary));
        bool integral = true;
        for (const auto& r : factor_roots)
            if (!dot(r, t).is_integer()) {
                integral = false;
                break;
            }
        if (!integral) continue;
        std::vector<Halfspace> mapped;
        for (const auto& w : a.walls) {
            Vec nn = apply_aut(aut, q, w.normal);
            mapped.push_back({nn, w.offset - dot(nn, t)});
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == b.walls) return true;
    }
    return false;
}

struct StabGroup {
    std::vector<size_t> roots;                 // global indices, sorted
    std::vector<std::vector<size_t>> perms;    // position permutations
};

StabGroup vertex_stabilizer(const HostContext& ctx, const std::vector<size_t>& dc) {
    StabGroup g;
    g.roots = dc;
    std::map<size_t, size_t> pos;
    for (size_t i = 0; i < dc.size(); ++i) pos[dc[i]] = i;

    std::vector<Vec> vecs;
    for (size_t i : dc) vecs.push_back(ctx.host.all_roots[i]);
    auto simples = simple_system_of(vecs);

    std::vector<std::vector<size_t>> gens;
    for (const auto& s : simples) {
        size_t si = ctx.index_of(s);
        std::vector<size_t> p(dc.size());
        for (size_t i = 0; i < dc.size(); ++i) p[i] = pos.at(ctx.refl[si][dc[i]]);
        gens.push_back(p);
    }
    std::set<std::vector<size_t>> seen;
    std::vector<size_t> id(dc.size());
    for (size_t i = 0; i < dc.size(); ++i) id[i] = i;
    seen.insert(id);
    std::vector<std::vector<size_t>> queue{id};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& gperm : gens) {
            std::vector<size_t> h(dc.size());
            for (size_t i = 0; i < dc.size(); ++i) h[i] = gperm[queue[qi][i]];
            if (seen.insert(h).second) queue.push_back(h);
        }
    }
    g.perms = std::move(queue);
    return g;
}

// Closed full-rank subsets of the mirror directions through one vertex,
// one representative per stabilizer orbit, found by the closure walk.
std::vector<std::vector<size_t>> closed_classes_at_vertex(const HostContext& ctx,
                                                          const std::vector<size_t>& dc,
                                                          size_t want_rank) {
    StabGroup stab = vertex_stabilizer(ctx, dc);
    std::map<size_t, size_t> pos;
    for (size_t i = 0; i < dc.size(); ++i) pos[dc[i]] = i;

    auto canon = [&](const std::vector<size_t>& s) {
        std::vector<size_t> best;
        for (const auto& p : stab.perms) {
            std::vector<size_t> img;
            for (size_t r : s) img.push_back(dc[p[pos.at(r)]]);
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = img;
        }
        return best;
    };

    std::set<std::vector<size_t>> seen;
    std::vector<std::vector<size_t>> reps;
    std::vector<std::vector<size_t>> queue;
    for (size_t r : dc) {
        auto cl = close_root_set(ctx, {r});
        auto cn = canon(cl);
        if (seen.insert(cn).second) {
            reps.push_back(cn);
            queue.push_back(cn);
        }
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto cur = queue[qi];
        for (size_t r : dc) {
            if (std::binary_search(cur.begin(), cur.end(), r)) continue;
            auto grown = cur;
            grown.push_back(r);
            auto cl = close_root_set(ctx, grown);
            bool inside = true;
            for (size_t x : cl)
                if (!std::binary_search(dc.begin(), dc.end(), x)) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            auto cn = canon(cl);
            if (seen.insert(cn).second) {
                reps.push_back(cn);
                queue.push_back(cn);
            }
        }
    }

    std::vector<std::vector<size_t>> out;
    for (const auto& s : reps) {
        std::vector<Vec> vecs;
        for (size_t i : s) vecs.push_back(ctx.host.all_roots[i]);
        Mat m;
        for (const auto& v : vecs) m.push_back(v);
        if (rank_of(m) == want_rank) out.push_back(s);
    }
    return out;
}

long long factor_chamber_index(const FiniteRootSystem& fin, size_t c,
                               const std::vector<ChamberComponent>& comps) {
    Rat vs(1);
    for (const auto& comp : comps) vs = vs * component_volume_sq(comp, fin.ambient_dim);
    Rat as = component_volume_sq(alcove_component(fin, c), fin.ambient_dim);
    auto r = sqrt_exact(vs / as);
    if (!r || !r->is_integer() || r->sign() <= 0)
        throw NonIntegerRatio("factor volume ratio is not a positive integer");
    return r->num();
}

// All constructions at the vertices of one irreducible factor, deduped
// into equivalence classes.
std::vector<FactorClass> enumerate_factor(const HostContext& ctx, size_t c,
                                          long long max_index) {
    const FiniteRootSystem& fin = ctx.host;
    size_t frank = fin.component_ranks[c];
    if (frank > 4) throw RankTooLarge("enumeration supports factors of rank <= 4");

    auto comp_root_idx = [&](size_t part) {
        std::vector<size_t> out;
        for (size_t i = 0; i < fin.all_roots.size(); ++i)
            if (ctx.root_part[i] == part) out.push_back(i);
        return out;
    };
    auto factor_roots_idx = comp_root_idx(c);

    auto vertices = alcove_vertices(fin, c);
    std::vector<std::vector<FactorClass>> per_vertex(vertices.size());

    auto process_vertex = [&](size_t vi) {
        const Vec& U = vertices[vi];
        std::vector<size_t> dc;
        for (size_t i : factor_roots_idx)
            if (dot(fin.all_roots[i], U).is_integer()) dc.push_back(i);
        if (dc.empty()) return;

        for (const auto& S : closed_classes_at_vertex(ctx, dc, frank)) {
            std::vector<Vec> vecs;
            for (size_t i : S) vecs.push_back(fin.all_roots[i]);
            auto comp_lists = orthogonal_components(vecs);

            std::vector<std::vector<Vec>> closures, simples;
            std::vector<CartanType> types;
            std::vector<std::string> labels;
            std::vector<size_t> ranks;
            for (const auto& idxs : comp_lists) {
                std::vector<Vec> piece;
                for (size_t i : idxs) piece.push_back(vecs[i]);
                closures.push_back(piece);
                simples.push_back(simple_system_of(piece));
                types.push_back(identify_type(piece).parts[0]);
                labels.push_back(component_label(ctx, piece));
                ranks.push_back(simples.back().size());
            }
            size_t nc = closures.size();

            std::vector<std::vector<CutKind>> kind_options(nc);
            for (size_t i = 0; i < nc; ++i) {
                kind_options[i].push_back(CutKind::theta);
                if (theta_prime_allowed(types[i])) kind_options[i].push_back(CutKind::theta_prime);
            }

            std::vector<CutKind> kinds(nc);
            std::function<void(size_t)> combos = [&](size_t i) {
                if (i < nc) {
                    for (CutKind k : kind_options[i]) {
                        kinds[i] = k;
                        combos(i + 1);
                    }
                    return;
                }
                std::vector<ChamberComponent> base_comps;
                std::vector<Vec> thetas(nc), cut_dirs(nc);
                for (size_t j = 0; j < nc; ++j) {
                    thetas[j] = lowest_root_of(closures[j], simples[j]);
                    cut_dirs[j] = (kinds[j] == CutKind::theta)
                                      ? thetas[j]
                                      : theta_prime(types[j], simples[j], thetas[j]);
                    ChamberComponent cc;
                    for (const auto& s : simples[j]) cc.walls.push_back(wall_through(s, U));
                    cc.walls.push_back(cut_wall(cut_dirs[j], U, 1));
                    base_comps.push_back(cc);
                }
                long long base = factor_chamber_index(fin, c, base_comps);
                if (base > max_index) return;

                std::vector<long long> ks(nc, 1);
                std::function<void(size_t, long long)> scan = [&](size_t j, long long idx) {
                    if (j == nc) {
                        FactorClass fc;
                        fc.data.vertex = U;
                        fc.data.comp_simples = simples;
                        for (size_t i = 0; i < nc; ++i)
                            fc.data.cuts.push_back({kinds[i], ks[i]});
                        fc.index = idx;
                        std::vector<ChamberComponent> comps = base_comps;
                        std::vector<Vec> all_verts;
                        for (size_t i = 0; i < nc; ++i) {
                            comps[i].walls.back() = cut_wall(cut_dirs[i], U, ks[i]);
                            auto vv = simplex_vertices(comps[i], fin.ambient_dim);
                            all_verts.insert(all_verts.end(), vv.begin(), vv.end());
                        }
                        FundamentalChamber fch{comps};
                        fc.sub_str = classify_diagram(diagram_of_chamber(fch)).str();
                        fc.indecomposable = (nc == 1);
                        fc.block_max = true;
                        for (size_t i = 0; i < nc; ++i) {
                            if (kinds[i] != CutKind::theta || ks[i] != 1) fc.block_max = false;
                            fc.trace.push_back({labels[i], kinds[i], ks[i]});
                        }
                        fc.trace = sorted_trace(fc.trace);
                        fc.walls = fch.all_walls();
                        std::sort(fc.walls.begin(), fc.walls.end());
                        fc.bary = barycenter(all_verts);
                        per_vertex[vi].push_back(std::move(fc));
                        return;
                    }
                    for (long long k = 1;; ++k) {
                        long long mult = 1;
                        bool over = false;
                        for (size_t rr = 0; rr < ranks[j]; ++rr) {
                            if (mult > max_index / k) {
                                over = true;
                                break;
                            }
                            mult *= k;
                        }
                        if (over || idx > max_index / mult) break;
                        ks[j] = k;
                        scan(j + 1, idx * mult);
                    }
                    ks[j] = 1;
                };
                scan(0, base);
            };
            combos(0);
        }
    };

    size_t nthreads = std::min(thread_count(), vertices.size());
    if (nthreads <= 1) {
        for (size_t vi = 0; vi < vertices.size(); ++vi) process_vertex(vi);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t]() {
                for (size_t vi = t; vi < vertices.size(); vi += nthreads) process_vertex(vi);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<FactorClass> all;
    for (auto& v : per_vertex)
        for (auto& fc : v) all.push_back(std::move(fc));

    // Exact-chamber dedup.
    std::map<std::vector<Halfspace>, size_t> by_walls;
    std::vector<FactorClass> uniq;
    for (auto& fc : all)
        if (by_walls.emplace(fc.walls, uniq.size()).second) uniq.push_back(std::move(fc));

    // Equivalence dedup per (labels, index) bucket: indecomposable and
    // block-maximal classes are determined by the bucket key; the rest
    // merge only on an explicit isometry, searched at factor rank <= 3.
    std::vector<Vec> factor_roots;
    for (size_t i : factor_roots_idx) factor_roots.push_back(fin.all_roots[i]);
    RootSetAut aut;
    bool search = frank <= 3;
    if (search) aut = root_set_automorphisms(factor_roots);

    std::map<std::pair<std::string, long long>, std::vector<size_t>> buckets;
    for (size_t i = 0; i < uniq.size(); ++i)
        buckets[{uniq[i].sub_str, uniq[i].index}].push_back(i);

    std::vector<bool> keep(uniq.size(), true);
    for (auto& [key, members] : buckets) {
        for (size_t a = 0; a < members.size(); ++a) {
            if (!keep[members[a]]) continue;
            const FactorClass& fa = uniq[members[a]];
            for (size_t b = a + 1; b < members.size(); ++b) {
                if (!keep[members[b]]) continue;
                const FactorClass& fb = uniq[members[b]];
                bool same = false;
                if (fa.indecomposable && fb.indecomposable)
                    same = true;
                else if (fa.block_max && fb.block_max)
                    same = true;
                else if (search)
                    same = chambers_isometric(factor_roots, aut, fb, fa);
                if (same) keep[members[b]] = false;
            }
        }
    }

    std::vector<FactorClass> out;
    for (size_t i = 0; i < uniq.size(); ++i)
        if (keep[i]) out.push_back(std::move(uniq[i]));
    std::sort(out.begin(), out.end(), [](const FactorClass& a, const FactorClass& b) {
        if (a.index != b.index) return a.index < b.index;
        if (a.sub_str != b.sub_str) return a.sub_str < b.sub_str;
        if (a.trace != b.trace) return a.trace < b.trace;
        return a.walls < b.walls;
    });
    return out;
}

} // namespace

std::vector<SubgroupRecord> enumerate_subgroups(const TypeList& host_type, long long max_index) {
    if (max_index < 1) return {};
    FiniteRootSystem fin = finite_part_of(host_type);
    HostContext ctx = HostContext::make(fin.type, false);
    size_t nfac = fin.type.parts.size();

    std::vector<std::vector<FactorClass>> factor_classes;
    for (size_t c = 0; c < nfac; ++c)
        factor_classes.push_back(enumerate_factor(ctx, c, max_index));

    // Combine one class per factor; equal factor types take a sorted class
    // tuple so host factor swaps do not duplicate records.
    std::vector<SubgroupRecord> out;
    std::vector<size_t> choice(nfac);
    std::function<void(size_t, long long)> assemble = [&](size_t c, long long idx) {
        if (c == nfac) {
            Vec vertex = zero_vec(fin.ambient_dim);
            std::vector<std::vector<Vec>> comp_simples;
            std::vector<CutChoice> cuts;
            for (size_t f = 0; f < nfac; ++f) {
                const Construction& d = factor_classes[f][choice[f]].data;
                vertex = add(vertex, d.vertex);
                comp_simples.insert(comp_simples.end(), d.comp_simples.begin(),
                                    d.comp_simples.end());
                cuts.insert(cuts.end(), d.cuts.begin(), d.cuts.end());
            }
            out.push_back(construct_subgroup(fin, vertex, comp_simples, cuts));
            return;
        }
        for (size_t i = 0; i < factor_classes[c].size(); ++i) {
            if (c > 0 && fin.type.parts[c] == fin.type.parts[c - 1] && i < choice[c - 1]) continue;
            long long fi = factor_classes[c][i].index;
            if (idx > max_index / fi) continue;
            choice[c] = i;
            assemble(c + 1, idx * fi);
        }
    };
    assemble(0, 1);

    std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
        if (a.index != b.index) return a.index < b.index;
        auto as = a.sub_type.str(), bs = b.sub_type.str();
        if (as != bs) return as < bs;
        if (a.trace != b.trace) return a.trace < b.trace;
        return a.chamber.all_walls() < b.chamber.all_walls();
    });
    return out;
}

FiniteRootSystem finite_part_of(const TypeList& affine_type) {
    std::vector<CartanType> parts;
    for (auto p : affine_type.parts) {
        if (!p.affine)
            throw IllegalType("expected an affine type list, got " + affine_type.str());
        p.affine = false;
        parts.push_back(p);
    }
    return build_root_system(TypeList(std::move(parts)));
}

} // namespace coxeter
