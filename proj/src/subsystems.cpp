#include "coxeter/subsystems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "coxeter/diagram.hpp"

namespace coxeter {

// ------------------------------------------------------------
// Labels
// ------------------------------------------------------------

std::string labels_str(const std::vector<ComponentLabel>& labels) {
    if (labels.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += '+';
        s += labels[i].str();
    }
    return s;
}

long long labels_group_order(const std::vector<ComponentLabel>& labels) {
    long long o = 1;
    for (const auto& l : labels) o *= l.group_order();
    return o;
}

TypeList labels_type_list(const std::vector<ComponentLabel>& labels) {
    std::vector<CartanType> parts;
    for (const auto& l : labels)
        for (const auto& t : l.type.normalized()) parts.push_back(t);
    return TypeList(std::move(parts));
}

namespace {

bool part_is_self_dual(const CartanType& t) {
    switch (t.family) {
        case 'A':
        case 'D':
        case 'E': return true;
        case 'B':
        case 'C': return t.rank <= 2;
        case 'F':
        case 'G': return true;
    }
    return false;
}

bool host_is_self_dual(const TypeList& type) {
    for (const auto& t : type.parts)
        if (!part_is_self_dual(t)) return false;
    return true;
}

bool host_has_two_lengths(const TypeList& type) {
    for (const auto& t : type.parts) {
        if ((t.family == 'B' || t.family == 'C') && t.rank >= 2) return true;
        if (t.family == 'F' || t.family == 'G') return true;
    }
    return false;
}

// Whether two orthogonal same-length pairs {+-a}, {+-b} in the given host
// part form one D2 component: in B and F parts long pairs whose half sum
// (or half difference) is a host root, in C and F parts short pairs whose
// sum (or difference) is one.
bool d2_pair_merges(const HostContext& ctx, size_t part, const Rat& len, const Vec& a,
                    const Vec& b) {
    char fam = ctx.host.type.parts[part].family;
    if (ctx.part_min_len[part] == ctx.part_max_len[part]) return false;
    if ((fam == 'B' || fam == 'F') && len == ctx.part_max_len[part]) {
        if (ctx.host.contains(scale(add(a, b), Rat(1, 2)))) return true;
        if (ctx.host.contains(scale(sub(a, b), Rat(1, 2)))) return true;
    }
    if ((fam == 'C' || fam == 'F') && len == ctx.part_min_len[part]) {
        if (ctx.host.contains(add(a, b))) return true;
        if (ctx.host.contains(sub(a, b))) return true;
    }
    return false;
}

} // namespace

// ------------------------------------------------------------
// HostContext
// ------------------------------------------------------------

size_t HostContext::index_of(const Vec& r) const {
    auto it = std::lower_bound(host.all_roots.begin(), host.all_roots.end(), r);
    if (it == host.all_roots.end() || *it != r) throw NotHostRoot("vector is not a host root");
    return static_cast<size_t>(it - host.all_roots.begin());
}

HostContext HostContext::make(const TypeList& type, bool with_group) {
    HostContext ctx;
    ctx.host = build_root_system(type);
    size_t n = ctx.root_count();

    ctx.neg.resize(n);
    ctx.refl.assign(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        ctx.neg[i] = ctx.index_of(coxeter::neg(ctx.host.all_roots[i]));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            ctx.refl[i][j] =
                ctx.index_of(reflect_vec(ctx.host.all_roots[i], ctx.host.all_roots[j]));

    // Per-root host component and length extremes per component.
    size_t nc = ctx.host.component_ranks.size();
    ctx.root_part.assign(n, 0);
    ctx.part_min_len.assign(nc, Rat(0));
    ctx.part_max_len.assign(nc, Rat(0));
    for (size_t c = 0; c < nc; ++c) {
        std::vector<Vec> basis;
        for (size_t i : ctx.host.component_simple_indices(c))
            basis.push_back(ctx.host.simple_roots[i]);
        bool first = true;
        for (size_t i = 0; i < n; ++i) {
            if (!coords_in_basis(basis, ctx.host.all_roots[i])) continue;
            ctx.root_part[i] = c;
            Rat l = dot(ctx.host.all_roots[i], ctx.host.all_roots[i]);
            if (first || l < ctx.part_min_len[c]) ctx.part_min_len[c] = l;
            if (first || l > ctx.part_max_len[c]) ctx.part_max_len[c] = l;
            first = false;
        }
    }

    if (!with_group) return ctx;
    if (ctx.host.rank() > 4) throw RankTooLarge("group materialization needs rank <= 4");

    // Weyl group as root permutations, generated by the simple reflections.
    std::vector<size_t> simple_idx;
    for (const Vec& s : ctx.host.simple_roots) simple_idx.push_back(ctx.index_of(s));
    std::set<std::vector<size_t>> group;
    std::vector<size_t> id(n);
    for (size_t i = 0; i < n; ++i) id[i] = i;
    group.insert(id);
    std::vector<std::vector<size_t>> frontier = {id};
    while (!frontier.empty()) {
        std::vector<std::vector<size_t>> next;
        for (const auto& g : frontier)
            for (size_t s : simple_idx) {
                std::vector<size_t> h(n);
                for (size_t i = 0; i < n; ++i) h[i] = ctx.refl[s][g[i]];
                if (group.insert(h).second) next.push_back(std::move(h));
            }
        frontier = std::move(next);
    }
    ctx.weyl.assign(group.begin(), group.end());

    // Full automorphism group of the root set: every tuple of roots with the
    // simple system's Gram matrix defines one linear automorphism candidate.
    std::vector<Vec> simples = ctx.host.simple_roots;
    Mat g0 = gram(simples);
    size_t r = simples.size();
    std::set<std::vector<size_t>> auts;
    std::vector<size_t> tuple;
    // Root coordinates in the simple basis, for image computation.
    std::vector<Vec> coords(n);
    for (size_t i = 0; i < n; ++i) {
        auto c = coords_in_basis(simples, ctx.host.all_roots[i]);
        if (!c) throw HostMismatch("root outside the simple span");
        coords[i] = *c;
    }
    auto try_tuple = [&]() {
        std::vector<Vec> t;
        for (size_t i : tuple) t.push_back(ctx.host.all_roots[i]);
        std::vector<size_t> perm(n);
        for (size_t i = 0; i < n; ++i) {
            Vec img = zero_vec(ctx.host.ambient_dim);
            for (size_t k = 0; k < r; ++k) img = add(img, scale(t[k], coords[i][k]));
            auto it = std::lower_bound(ctx.host.all_roots.begin(), ctx.host.all_roots.end(), img);
            if (it == ctx.host.all_roots.end() || *it != img) return;
            perm[i] = static_cast<size_t>(it - ctx.host.all_roots.begin());
        }
        std::vector<bool> hit(n, false);
        for (size_t p : perm) {
            if (hit[p]) return;
            hit[p] = true;
        }
        auts.insert(perm);
    };
    std::vector<Rat> lens(n);
    for (size_t i = 0; i < n; ++i) lens[i] = dot(ctx.host.all_roots[i], ctx.host.all_roots[i]);
    auto backtrack = [&](auto&& self, size_t depth) -> void {
        if (depth == r) {
            try_tuple();
            return;
        }
        for (size_t cand = 0; cand < n; ++cand) {
            if (lens[cand] != g0[depth][depth]) continue;
            bool ok = true;
            for (size_t k = 0; k < depth; ++k)
                if (dot(ctx.host.all_roots[cand], ctx.host.all_roots[tuple[k]]) !=
                    g0[depth][k]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            tuple.push_back(cand);
            self(self, depth + 1);
            tuple.pop_back();
        }
    };
    backtrack(backtrack, 0);
    ctx.auts.assign(auts.begin(), auts.end());
    return ctx;
}

HostContext HostContext::make(const std::string& type, bool with_group) {
    return make(TypeList::parse(type), with_group);
}

// ------------------------------------------------------------
// Closure and enumeration
// ------------------------------------------------------------

std::vector<size_t> close_root_set(const HostContext& ctx, const std::vector<size_t>& seed) {
    size_t n = ctx.root_count();
    std::vector<bool> in(n, false);
    std::vector<size_t> members, work;
    auto push = [&](size_t x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            work.push_back(x);
        }
    };
    for (size_t s : seed) {
        if (s >= n) throw NotHostRoot("seed index out of range");
        push(s);
        push(ctx.neg[s]);
    }
    while (!work.empty()) {
        size_t x = work.back();
        work.pop_back();
        for (size_t i = 0; i < members.size(); ++i) {
            size_t y = members[i];
            push(ctx.refl[x][y]);
            push(ctx.refl[y][x]);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_additively_closed(const HostContext& ctx, const std::vector<size_t>& s) {
    std::vector<bool> in(ctx.root_count(), false);
    for (size_t i : s) in[i] = true;
    for (size_t i : s)
        for (size_t j : s) {
            if (i >= j) continue;
            Vec v = add(ctx.host.all_roots[i], ctx.host.all_roots[j]);
            auto it = std::lower_bound(ctx.host.all_roots.begin(), ctx.host.all_roots.end(), v);
            if (it == ctx.host.all_roots.end() || *it != v) continue;
            if (!in[static_cast<size_t>(it - ctx.host.all_roots.begin())]) return false;
        }
    return true;
}

std::vector<std::vector<size_t>> all_closed_subsets_walk(const HostContext& ctx) {
    if (ctx.host.rank() > 4) throw RankTooLarge("exhaustive walk needs rank <= 4");
    size_t n = ctx.root_count();
    std::set<std::vector<size_t>> seen;
    std::vector<std::vector<size_t>> frontier;
    for (size_t i = 0; i < n; ++i) {
        auto s = close_root_set(ctx, {i});
        if (seen.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<size_t>> next;
        for (const auto& s : frontier) {
            std::vector<bool> in(n, false);
            for (size_t i : s) in[i] = true;
            for (size_t g = 0; g < n; ++g) {
                if (in[g]) continue;
                auto t = s;
                t.push_back(g);
                auto c = close_root_set(ctx, t);
                if (seen.insert(c).second) next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<size_t>> all_closed_subsets_brute(const HostContext& ctx,
                                                          size_t max_seed) {
    std::vector<size_t> pos;
    {
        auto pv = positive_system(ctx.host.all_roots);
        for (const Vec& v : pv) pos.push_back(ctx.index_of(v));
    }
    std::set<std::vector<size_t>> seen;
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (!pick.empty()) seen.insert(close_root_set(ctx, pick));
        if (pick.size() == max_seed) return;
        for (size_t i = start; i < pos.size(); ++i) {
            pick.push_back(pos[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return {seen.begin(), seen.end()};
}

bool is_maximal_closed(const HostContext& ctx, const std::vector<size_t>& s) {
    size_t n = ctx.root_count();
    if (s.size() >= n) return false;
    std::vector<bool> in(n, false);
    for (size_t i : s) in[i] = true;
    for (size_t g = 0; g < n; ++g) {
        if (in[g]) continue;
        auto t = s;
        t.push_back(g);
        if (close_root_set(ctx, t).size() != n) return false;
    }
    return true;
}

// ------------------------------------------------------------
// Labels in context
// ------------------------------------------------------------

namespace {

// Host roots lying in the rational span of the given vectors.
std::vector<Vec> saturation(const HostContext& ctx, const std::vector<Vec>& vs) {
    std::vector<Vec> basis;
    Mat m;
    for (const Vec& v : vs) {
        m.push_back(v);
        if (rank_of(m) == m.size())
            basis.push_back(v);
        else
            m.pop_back();
    }
    std::vector<Vec> out;
    for (const Vec& r : ctx.host.all_roots)
        if (coords_in_basis(basis, r)) out.push_back(r);
    return out;
}

bool has_two_lengths(const std::vector<Vec>& roots) {
    std::set<Rat> lens;
    for (const Vec& r : roots) lens.insert(dot(r, r));
    return lens.size() > 1;
}

// Component labels with the host part of each component; shared by the
// public identification entry point and the duality key.
std::vector<std::pair<ComponentLabel, size_t>> labels_and_parts(
    const HostContext& ctx, const std::vector<size_t>& roots) {
    std::vector<Vec> vecs;
    for (size_t i : roots) vecs.push_back(ctx.host.all_roots[i]);
    auto comps = orthogonal_components(vecs);

    struct Comp {
        std::vector<Vec> roots;
        size_t part;
        Rat len; // any member length (squared)
    };
    std::vector<Comp> cs;
    for (const auto& idx : comps) {
        Comp c;
        for (size_t i : idx) c.roots.push_back(vecs[i]);
        c.part = ctx.root_part[roots[idx[0]]];
        c.len = dot(c.roots[0], c.roots[0]);
        cs.push_back(std::move(c));
    }

    // Merge orthogonal same-length A1 pairs into one D2 component when the
    // host part pairs them.
    std::vector<bool> dead(cs.size(), false);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (dead[i] || cs[i].roots.size() != 2) continue;
        for (size_t j = i + 1; j < cs.size(); ++j) {
            if (dead[j] || cs[j].roots.size() != 2) continue;
            if (cs[i].part != cs[j].part || cs[i].len != cs[j].len) continue;
            if (d2_pair_merges(ctx, cs[i].part, cs[i].len, cs[i].roots[0], cs[j].roots[0])) {
                for (const Vec& v : cs[j].roots) cs[i].roots.push_back(v);
                dead[j] = true;
                break;
            }
        }
    }

    std::vector<std::pair<ComponentLabel, size_t>> labels;
    for (size_t ci = 0; ci < cs.size(); ++ci) {
        if (dead[ci]) continue;
        const Comp& c = cs[ci];
        char host_fam = ctx.host.type.parts[c.part].family;
        bool host_part_two_len = ctx.part_min_len[c.part] != ctx.part_max_len[c.part];
        ComponentLabel label;

        std::vector<Vec> simples = simple_system_of(c.roots);
        bool merged_pair = c.roots.size() == 4 && simples.size() == 2 &&
                           dot(simples[0], simples[1]).is_zero() &&
                           dot(simples[0], simples[0]) == dot(simples[1], simples[1]);
        if (merged_pair) {
            label.type = CartanType{'D', 2, false};
        } else {
            CoxeterDiagram d = diagram_from_simples(simples);
            CartanType t = classify_connected_diagram(d);
            if (t.family == 'B' && t.rank >= 3 && has_two_lengths(c.roots)) {
                std::set<Rat> lens;
                for (const Vec& r : c.roots) lens.insert(dot(r, r));
                size_t n_short = 0, n_long = 0;
                for (const Vec& r : c.roots) {
                    if (dot(r, r) == *lens.begin()) ++n_short;
                    if (dot(r, r) == *lens.rbegin()) ++n_long;
                }
                if (n_short == 2 * static_cast<size_t>(t.rank))
                    t.family = 'B';
                else if (n_long == 2 * static_cast<size_t>(t.rank))
                    t.family = 'C';
                else
                    throw NotClosed("unrecognized two-length component");
            }
            // Single-length A3 whose span saturation shows both lengths is
            // the D3 coordinate form.
            if (t.family == 'A' && t.rank == 3 && !has_two_lengths(c.roots) &&
                host_part_two_len && has_two_lengths(saturation(ctx, c.roots)))
                t = CartanType{'D', 3, false};
            // Lone A1 lines keep the host family bookkeeping.
            if (t.family == 'A' && t.rank == 1 && c.roots.size() == 2 && host_part_two_len) {
                if (host_fam == 'B' && c.len == ctx.part_min_len[c.part])
                    t = CartanType{'B', 1, false};
                if (host_fam == 'C' && c.len == ctx.part_max_len[c.part])
                    t = CartanType{'C', 1, false};
            }
            label.type = t;
        }

        // Length tags for single-length components in a two-length host
        // part, except families B, C, D whose labels already carry length.
        label.length = LengthClass::only;
        if (host_part_two_len && label.type.family != 'B' && label.type.family != 'C' &&
            label.type.family != 'D' && label.type.family != 'F' && label.type.family != 'G' &&
            !has_two_lengths(c.roots)) {
            label.length = c.len == ctx.part_min_len[c.part] ? LengthClass::short_roots
                                                             : LengthClass::long_roots;
        }
        labels.push_back({label, c.part});
    }
    return labels;
}

// Per-part label duality: the length-swap similarity of a self-dual
// two-length part maps component labels to the labels of the image. Parts
// with one root length map identically.
std::vector<ComponentLabel> dual_part_labels(const CartanType& part,
                                             const std::vector<ComponentLabel>& ls) {
    char fam = part.family;
    if ((fam == 'B' || fam == 'C') && part.rank == 2) {
        CartanType one{fam, 1, false};
        LengthClass other_tag =
            fam == 'B' ? LengthClass::long_roots : LengthClass::short_roots;
        std::vector<ComponentLabel> out;
        size_t ones = 0;
        for (const auto& l : ls) {
            if (l.type == one) {
                ++ones;
            } else if (l.type.family == 'D' && l.type.rank == 2) {
                out.push_back({one, LengthClass::only});
                out.push_back({one, LengthClass::only});
            } else if (l.type.family == 'A' && l.type.rank == 1 && l.length == other_tag) {
                out.push_back({one, LengthClass::only});
            } else {
                out.push_back(l);
            }
        }
        if (ones == 2) {
            out.push_back({CartanType{'D', 2, false}, LengthClass::only});
        } else if (ones == 1) {
            out.push_back({CartanType{'A', 1, false}, other_tag});
        }
        return out;
    }
    if (fam == 'G' || fam == 'F') {
        std::vector<ComponentLabel> out = ls;
        for (auto& l : out) {
            if (l.length == LengthClass::short_roots)
                l.length = LengthClass::long_roots;
            else if (l.length == LengthClass::long_roots)
                l.length = LengthClass::short_roots;
            if (fam == 'F' && l.type.family == 'B' && l.type.rank >= 3)
                l.type.family = 'C';
            else if (fam == 'F' && l.type.family == 'C' && l.type.rank >= 3)
                l.type.family = 'B';
        }
        return out;
    }
    return ls;
}

std::string dual_key(const HostContext& ctx, const std::vector<size_t>& roots) {
    auto lp = labels_and_parts(ctx, roots);
    std::vector<ComponentLabel> out;
    for (size_t p = 0; p < ctx.host.type.parts.size(); ++p) {
        std::vector<ComponentLabel> in_part;
        for (const auto& [l, q] : lp)
            if (q == p) in_part.push_back(l);
        for (const auto& l : dual_part_labels(ctx.host.type.parts[p], in_part))
            out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return labels_str(out);
}

} // namespace

std::vector<ComponentLabel> identify_in_host(const HostContext& ctx,
                                             const std::vector<size_t>& roots) {
    std::vector<ComponentLabel> labels;
    for (const auto& [l, p] : labels_and_parts(ctx, roots)) labels.push_back(l);
    std::sort(labels.begin(), labels.end());
    return labels;
}

SubsystemRecord make_record(const HostContext& ctx, const std::vector<size_t>& roots) {
    SubsystemRecord r;
    r.host_type = ctx.host.type;
    r.labels = identify_in_host(ctx, roots);
    r.roots = roots;
    std::sort(r.roots.begin(), r.roots.end());
    std::vector<Vec> vecs;
    for (size_t i : r.roots) vecs.push_back(ctx.host.all_roots[i]);
    r.simple_roots = simple_system_of(vecs);
    r.is_root_subsystem = is_root_subsystem(ctx, r.roots);
    r.index = ctx.host.weyl_order() / labels_group_order(r.labels);
    r.orbit_size = 0;
    return r;
}

bool is_root_subsystem(const HostContext& ctx, const std::vector<size_t>& roots) {
    std::vector<Vec> vecs;
    for (size_t i : roots) vecs.push_back(ctx.host.all_roots[i]);
    std::vector<Vec> simples = simple_system_of(vecs);
    for (size_t i = 0; i < simples.size(); ++i)
        for (size_t j = 0; j < simples.size(); ++j) {
            if (i == j) continue;
            if (ctx.host.contains(sub(simples[i], simples[j]))) return false;
        }
    return true;
}

// ------------------------------------------------------------
// Classes
// ------------------------------------------------------------

namespace {

std::vector<size_t> apply_perm(const std::vector<size_t>& perm, const std::vector<size_t>& s) {
    std::vector<size_t> t;
    t.reserve(s.size());
    for (size_t i : s) t.push_back(perm[i]);
    std::sort(t.begin(), t.end());
    return t;
}

// Canonical representative (minimum image) and orbit size under a group.
std::pair<std::vector<size_t>, long long> orbit_info(
    const std::vector<std::vector<size_t>>& group, const std::vector<size_t>& s) {
    std::set<std::vector<size_t>> orbit;
    for (const auto& g : group) orbit.insert(apply_perm(g, s));
    return {*orbit.begin(), static_cast<long long>(orbit.size())};
}

} // namespace

std::vector<SubsystemRecord> subsystem_classes(const HostContext& ctx, bool up_to_aut) {
    if (ctx.weyl.empty()) throw RankTooLarge("subsystem classes need a materialized group");
    auto all = all_closed_subsets_walk(ctx);

    std::map<std::vector<size_t>, long long> classes; // weyl-canonical rep -> orbit size
    for (const auto& s : all) {
        auto [rep, size] = orbit_info(ctx.weyl, s);
        classes.emplace(rep, size);
    }

    std::vector<SubsystemRecord> records;
    if (!up_to_aut) {
        for (const auto& [rep, size] : classes) {
            auto r = make_record(ctx, rep);
            r.orbit_size = size;
            records.push_back(std::move(r));
        }
    } else if (!host_has_two_lengths(ctx.host.type)) {
        // Single-length host: merge by automorphism orbits.
        std::map<std::vector<size_t>, SubsystemRecord> merged;
        for (const auto& [rep, size] : classes) {
            auto [arep, asize] = orbit_info(ctx.auts, rep);
            auto it = merged.find(arep);
            if (it == merged.end()) {
                auto r = make_record(ctx, arep);
                r.orbit_size = asize;
                merged.emplace(arep, std::move(r));
            }
        }
        for (auto& [k, r] : merged) records.push_back(std::move(r));
    } else {
        // Two-length host: merge weyl classes by label multiset, adding the
        // dual multiset when the host is self-dual.
        bool self_dual = host_is_self_dual(ctx.host.type);
        std::map<std::string, SubsystemRecord> merged;
        for (const auto& [rep, size] : classes) {
            auto labels = identify_in_host(ctx, rep);
            std::string key = labels_str(labels);
            if (self_dual) key = std::min(key, dual_key(ctx, rep));
            auto it = merged.find(key);
            if (it == merged.end()) {
                auto r = make_record(ctx, rep);
                r.orbit_size = size;
                merged.emplace(key, std::move(r));
            } else {
                it->second.orbit_size += size;
                if (rep < it->second.roots) {
                    long long total = it->second.orbit_size;
                    it->second = make_record(ctx, rep);
                    it->second.orbit_size = total;
                }
            }
        }
        for (auto& [k, r] : merged) records.push_back(std::move(r));
    }
    std::sort(records.begin(), records.end(), [](const SubsystemRecord& a,
                                                 const SubsystemRecord& b) {
        std::string la = labels_str(a.labels), lb = labels_str(b.labels);
        if (la != lb) return la < lb;
        return a.roots < b.roots;
    });
    return records;
}

std::vector<SubsystemRecord> maximal_subsystem_classes(const HostContext& ctx, bool up_to_aut) {
    std::vector<SubsystemRecord> out;
    for (auto& r : subsystem_classes(ctx, up_to_aut))
        if (is_maximal_closed(ctx, r.roots)) out.push_back(std::move(r));
    return out;
}

bool are_aut_equivalent(const HostContext& ctx, const std::vector<size_t>& a,
                        const std::vector<size_t>& b) {
    if (!host_has_two_lengths(ctx.host.type)) {
        if (ctx.auts.empty()) throw RankTooLarge("aut equivalence needs a materialized group");
        auto ca = orbit_info(ctx.auts, a).first;
        auto cb = orbit_info(ctx.auts, b).first;
        return ca == cb;
    }
    auto la = identify_in_host(ctx, a);
    auto lb = identify_in_host(ctx, b);
    if (la == lb) return true;
    if (host_is_self_dual(ctx.host.type)) return dual_key(ctx, a) == labels_str(lb);
    return false;
}

// ------------------------------------------------------------
// Rank 5..8: label-keyed representative walk
// ------------------------------------------------------------

namespace {

// Deciding newness of a closure by its full label is too slow at rank 7-8,
// so the walk keys closures on a cheap integer fingerprint that separates
// classes exactly when their labels differ within one host part family.
// Records for the surviving representatives still use identify_in_host,
// and a final merge by label string removes fingerprint over-splits
// (equal labels arising in parts of different families).
struct CheapKeyer {
    const HostContext& ctx;
    std::vector<std::vector<bool>> adjacent; // non-orthogonality
    std::vector<int> len_class;              // 0 = part minimum, 1 = part maximum

    explicit CheapKeyer(const HostContext& c) : ctx(c) {
        size_t n = ctx.root_count();
        adjacent.assign(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                adjacent[i][j] = adjacent[j][i] =
                    !dot(ctx.host.all_roots[i], ctx.host.all_roots[j]).is_zero();
        len_class.resize(n);
        for (size_t i = 0; i < n; ++i) {
            Rat l = dot(ctx.host.all_roots[i], ctx.host.all_roots[i]);
            len_class[i] = l == ctx.part_min_len[ctx.root_part[i]] ? 0 : 1;
        }
    }

    // Rank of a small set of root vectors, by fraction-free elimination
    // modulo a prime far above every minor of a root coordinate matrix.
    size_t mod_rank(const std::vector<size_t>& roots) const {
        static constexpr long long p = 2147483647;
        auto inv = [&](long long a) {
            long long r = 1, b = a % p, e = p - 2;
            while (e) {
                if (e & 1) r = (__int128)r * b % p;
                b = (__int128)b * b % p;
                e >>= 1;
            }
            return r;
        };
        size_t d = ctx.host.ambient_dim;
        std::vector<std::vector<long long>> rows;
        for (size_t ri : roots) {
            std::vector<long long> row(d);
            for (size_t k = 0; k < d; ++k) {
                const Rat& x = ctx.host.all_roots[ri][k];
                long long num = ((x.num() % p) + p) % p;
                row[k] = (__int128)num * inv(((x.den() % p) + p) % p) % p;
            }
            rows.push_back(std::move(row));
        }
        size_t rank = 0;
        for (size_t col = 0; col < d && rank < rows.size(); ++col) {
            size_t piv = rank;
            while (piv < rows.size() && rows[piv][col] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[rank], rows[piv]);
            long long ip = inv(rows[rank][col]);
            for (size_t r = rank + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                long long f = (__int128)rows[r][col] * ip % p;
                for (size_t k = col; k < d; ++k)
                    rows[r][k] = ((rows[r][k] - (__int128)f * rows[rank][k]) % p + p) % p;
            }
            ++rank;
        }
        return rank;
    }

    // Per-component tuple: part family, rank, size, count at part minimum
    // length, count at part maximum, and a flag for rank-3 single-length
    // components whose span meets the other length.
    std::vector<std::array<long long, 6>> key(const std::vector<size_t>& s) const {
        std::vector<size_t> parent(s.size());
        for (size_t i = 0; i < s.size(); ++i) parent[i] = i;
        std::function<size_t(size_t)> find = [&](size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (adjacent[s[i]][s[j]]) parent[find(i)] = find(j);
        std::map<size_t, std::vector<size_t>> comp; // root indices into the host
        for (size_t i = 0; i < s.size(); ++i) comp[find(i)].push_back(s[i]);

        std::vector<std::vector<size_t>> cs;
        for (auto& [r, v] : comp) cs.push_back(std::move(v));
        std::vector<bool> dead(cs.size(), false);
        for (size_t i = 0; i < cs.size(); ++i) {
            if (dead[i] || cs[i].size() != 2) continue;
            for (size_t j = i + 1; j < cs.size(); ++j) {
                if (dead[j] || cs[j].size() != 2) continue;
                size_t pi = ctx.root_part[cs[i][0]], pj = ctx.root_part[cs[j][0]];
                if (pi != pj || len_class[cs[i][0]] != len_class[cs[j][0]]) continue;
                Rat len = dot(ctx.host.all_roots[cs[i][0]], ctx.host.all_roots[cs[i][0]]);
                if (d2_pair_merges(ctx, pi, len, ctx.host.all_roots[cs[i][0]],
                                   ctx.host.all_roots[cs[j][0]])) {
                    for (size_t x : cs[j]) cs[i].push_back(x);
                    dead[j] = true;
                    break;
                }
            }
        }

        std::vector<std::array<long long, 6>> out;
        for (size_t ci = 0; ci < cs.size(); ++ci) {
            if (dead[ci]) continue;
            const auto& c = cs[ci];
            size_t part = ctx.root_part[c[0]];
            long long n_min = 0, n_max = 0;
            bool part_two = ctx.part_min_len[part] != ctx.part_max_len[part];
            for (size_t x : c) {
                if (!part_two || len_class[x] == 0) ++n_min;
                if (!part_two || len_class[x] == 1) ++n_max;
            }
            long long rank = static_cast<long long>(mod_rank(c));
            long long d3 = 0;
            if (rank == 3 && part_two && (n_min == 0 || n_max == 0)) {
                std::vector<Vec> basis;
                Mat m;
                for (size_t x : c) {
                    m.push_back(ctx.host.all_roots[x]);
                    if (rank_of(m) == m.size())
                        basis.push_back(ctx.host.all_roots[x]);
                    else
                        m.pop_back();
                }
                int want = n_min == 0 ? 0 : 1;
                for (size_t r = 0; r < ctx.root_count() && !d3; ++r)
                    if (ctx.root_part[r] == part && len_class[r] == want &&
                        coords_in_basis(basis, ctx.host.all_roots[r]))
                        d3 = 1;
            }
            out.push_back({ctx.host.type.parts[part].family, rank,
                           static_cast<long long>(c.size()), n_min, n_max, d3});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

std::vector<SubsystemRecord> label_walk_classes(const HostContext& ctx) {
    size_t n = ctx.root_count();
    CheapKeyer keyer(ctx);
    std::map<std::vector<std::array<long long, 6>>, std::vector<size_t>> reps;
    std::vector<std::vector<size_t>> frontier;
    for (size_t i = 0; i < n; ++i) {
        auto s = close_root_set(ctx, {i});
        if (reps.emplace(keyer.key(s), s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<size_t>> next;
        for (const auto& s : frontier) {
            std::vector<bool> in(n, false);
            for (size_t i : s) in[i] = true;
            for (size_t g = 0; g < n; ++g) {
                if (in[g]) continue;
                auto t = s;
                t.push_back(g);
                auto c = close_root_set(ctx, t);
                if (reps.emplace(keyer.key(c), c).second) next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    std::map<std::string, SubsystemRecord> by_label;
    for (const auto& [key, rep] : reps) {
        auto r = make_record(ctx, rep);
        std::string label = labels_str(r.labels);
        auto it = by_label.find(label);
        if (it == by_label.end())
            by_label.emplace(std::move(label), std::move(r));
        else if (r.roots < it->second.roots)
            it->second = std::move(r);
    }
    std::vector<SubsystemRecord> records;
    for (auto& [k, r] : by_label) records.push_back(std::move(r));
    return records;
}

} // namespace

std::vector<SubsystemRecord> enumerate_reflection_subgroups(const std::string& host_type,
                                                            bool up_to_aut) {
    TypeList type = TypeList::parse(host_type);
    if (type.total_rank() > 8) throw RankTooLarge("enumeration supports rank <= 8");
    if (type.total_rank() <= 4) {
        HostContext ctx = HostContext::make(type, true);
        return subsystem_classes(ctx, up_to_aut);
    }
    HostContext ctx = HostContext::make(type, false);
    return label_walk_classes(ctx);
}

// ------------------------------------------------------------
// Targeted search
// ------------------------------------------------------------

std::optional<std::vector<Vec>> find_subsystem(const FiniteRootSystem& host,
                                               const TypeList& target) {
    if (target.parts.empty()) return std::vector<Vec>{};
    FiniteRootSystem tgt = build_root_system(target);
    size_t nc = tgt.component_ranks.size();
    struct TComp {
        std::vector<Vec> simples;
        Mat g;
    };
    std::vector<TComp> tcomps;
    for (size_t c = 0; c < nc; ++c) {
        TComp tc;
        for (size_t i : tgt.component_simple_indices(c)) tc.simples.push_back(tgt.simple_roots[i]);
        tc.g = gram(tc.simples);
        tcomps.push_back(std::move(tc));
    }
    std::set<Rat> host_lens;
    for (const Vec& r : host.all_roots) host_lens.insert(dot(r, r));

    // Candidate squared scalings per component.
    std::vector<std::vector<Rat>> scalings(nc);
    for (size_t c = 0; c < nc; ++c) {
        Rat base = tcomps[c].g[0][0];
        std::set<Rat> set;
        for (const Rat& l : host_lens) set.insert(l / base);
        scalings[c].assign(set.begin(), set.end());
    }

    std::vector<Vec> chosen;             // concatenated host vectors
    std::vector<size_t> comp_of_chosen;  // target component of each
    std::function<bool(size_t, size_t, const Rat&)> place =
        [&](size_t c, size_t i, const Rat& lam2) -> bool {
        if (i == tcomps[c].simples.size()) {
            if (c + 1 == nc) return true;
            for (const Rat& l2 : scalings[c + 1])
                if (place(c + 1, 0, l2)) return true;
            return false;
        }
        size_t base = chosen.size() - i;
        for (const Vec& r : host.all_roots) {
            if (dot(r, r) != lam2 * tcomps[c].g[i][i]) continue;
            bool ok = true;
            for (size_t k = 0; k < i && ok; ++k)
                if (dot(r, chosen[base + k]) != lam2 * tcomps[c].g[i][k]) ok = false;
            for (size_t k = 0; k < base && ok; ++k)
                if (!dot(r, chosen[k]).is_zero()) ok = false;
            if (!ok) continue;
            chosen.push_back(r);
            comp_of_chosen.push_back(c);
            if (place(c, i + 1, lam2)) return true;
            chosen.pop_back();
            comp_of_chosen.pop_back();
        }
        return false;
    };
    for (const Rat& l2 : scalings[0])
        if (place(0, 0, l2)) return chosen;
    return std::nullopt;
}

// ------------------------------------------------------------
// Maximal finite subsystems
// ------------------------------------------------------------

namespace {

std::vector<TypeList> maximal_catalog(const CartanType& t) {
    std::vector<TypeList> out;
    auto add = [&](std::vector<CartanType> parts) { out.push_back(TypeList(std::move(parts))); };
    int n = t.rank;
    switch (t.family) {
        case 'A':
            for (int k = 0; k <= (n - 1) / 2; ++k) {
                if (k == 0)
                    add({{'A', n - 1, false}});
                else
                    add({{'A', k, false}, {'A', n - 1 - k, false}});
            }
            break;
        case 'B':
            add({{'D', n, false}});
            for (int k = 1; k <= n / 2; ++k) add({{'B', k, false}, {'B', n - k, false}});
            break;
        case 'C':
            add({{'D', n, false}});
            for (int k = 1; k <= n / 2; ++k) add({{'C', k, false}, {'C', n - k, false}});
            break;
        case 'D':
            for (int k = 2; k <= n / 2; ++k) add({{'D', k, false}, {'D', n - k, false}});
            add({{'D', n - 1, false}});
            add({{'A', n - 1, false}});
            break;
        case 'E':
            if (n == 6) {
                add({{'A', 5, false}, {'A', 1, false}});
                add({{'A', 2, false}, {'A', 2, false}, {'A', 2, false}});
                add({{'D', 5, false}});
            } else if (n == 7) {
                add({{'D', 6, false}, {'A', 1, false}});
                add({{'A', 7, false}});
                add({{'A', 5, false}, {'A', 2, false}});
                add({{'E', 6, false}});
            } else {
                add({{'D', 8, false}});
                add({{'A', 8, false}});
                add({{'E', 7, false}, {'A', 1, false}});
                add({{'E', 6, false}, {'A', 2, false}});
                add({{'A', 4, false}, {'A', 4, false}});
            }
            break;
        default:
            throw IllegalType("no catalog for " + t.str());
    }
    return out;
}

} // namespace

std::vector<SubsystemRecord> maximal_finite_subgroups(const std::string& host_type) {
    TypeList type = TypeList::parse(host_type);
    if (type.parts.size() != 1) throw Decomposable("host must be irreducible");
    CartanType t = type.parts[0];
    if (t.affine) throw IllegalType("host must be finite");

    if (t.rank <= 4) {
        HostContext ctx = HostContext::make(type, true);
        return maximal_subsystem_classes(ctx, false);
    }
    if (t.rank > 8) throw RankTooLarge("maximal subsystems supported to rank 8");

    HostContext ctx = HostContext::make(type, false);
    std::vector<SubsystemRecord> records;
    for (const TypeList& target : maximal_catalog(t)) {
        auto simples = find_subsystem(ctx.host, target);
        if (!simples) throw HostMismatch("catalog target " + target.str() + " not realized");
        std::vector<size_t> seed;
        for (const Vec& v : *simples) seed.push_back(ctx.index_of(v));
        auto closed = close_root_set(ctx, seed);
        if (!is_maximal_closed(ctx, closed))
            throw NotClosed("catalog target " + target.str() + " is not maximal");
        records.push_back(make_record(ctx, closed));
    }
    std::sort(records.begin(), records.end(),
              [](const SubsystemRecord& a, const SubsystemRecord& b) {
                  std::string la = labels_str(a.labels), lb = labels_str(b.labels);
                  if (la != lb) return la < lb;
                  return a.roots < b.roots;
              });
    return records;
}

} // namespace coxeter
