#include "coxeter/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxeter/diagram.hpp"

namespace coxeter {

namespace {

Vec unit(size_t dim, size_t i, int c = 1) {
    Vec v(dim);
    v[i] = Rat(c);
    return v;
}

// ------------------------------------------------------------
// Irreducible realizations
// ------------------------------------------------------------

struct Realization {
    size_t dim = 0;
    std::vector<Vec> simples;
    std::vector<Vec> roots;
};

Realization realize_A(int n) {
    Realization r;
    r.dim = static_cast<size_t>(n) + 1;
    for (int i = 0; i < n; ++i) {
        Vec v(r.dim);
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        r.simples.push_back(v);
    }
    for (size_t i = 0; i <= static_cast<size_t>(n); ++i)
        for (size_t j = 0; j <= static_cast<size_t>(n); ++j) {
            if (i == j) continue;
            Vec v(r.dim);
            v[i] = Rat(1);
            v[j] = Rat(-1);
            r.roots.push_back(v);
        }
    return r;
}

void push_pm_pairs(std::vector<Vec>& roots, size_t dim, int scale_i, int scale_j) {
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    Vec v(dim);
                    v[i] = Rat(si * scale_i);
                    v[j] = Rat(sj * scale_j);
                    roots.push_back(v);
                }
}

Realization realize_B(int n) {
    Realization r;
    r.dim = static_cast<size_t>(n);
    for (int i = 0; i + 1 < n; ++i) {
        Vec v(r.dim);
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        r.simples.push_back(v);
    }
    r.simples.push_back(unit(r.dim, r.dim - 1));
    for (size_t i = 0; i < r.dim; ++i) {
        r.roots.push_back(unit(r.dim, i, 1));
        r.roots.push_back(unit(r.dim, i, -1));
    }
    push_pm_pairs(r.roots, r.dim, 1, 1);
    return r;
}

Realization realize_C(int n) {
    Realization r;
    r.dim = static_cast<size_t>(n);
    for (int i = 0; i + 1 < n; ++i) {
        Vec v(r.dim);
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        r.simples.push_back(v);
    }
    r.simples.push_back(unit(r.dim, r.dim - 1, 2));
    for (size_t i = 0; i < r.dim; ++i) {
        r.roots.push_back(unit(r.dim, i, 2));
        r.roots.push_back(unit(r.dim, i, -2));
    }
    if (n >= 2) push_pm_pairs(r.roots, r.dim, 1, 1);
    return r;
}

Realization realize_D(int n) {
    Realization r;
    r.dim = static_cast<size_t>(n);
    for (int i = 0; i + 1 < n; ++i) {
        Vec v(r.dim);
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        r.simples.push_back(v);
    }
    Vec last(r.dim);
    last[r.dim - 2] = Rat(1);
    last[r.dim - 1] = Rat(1);
    r.simples.push_back(last);
    push_pm_pairs(r.roots, r.dim, 1, 1);
    return r;
}

Realization realize_G2() {
    Realization r;
    r.dim = 3;
    r.simples = {{Rat(1), Rat(-1), Rat(0)}, {Rat(-2), Rat(1), Rat(1)}};
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::set<Vec> rs;
    for (auto& p : perms) {
        Vec s(3);
        s[p[0]] = Rat(1);
        s[p[1]] = Rat(-1);
        rs.insert(s);
        Vec l(3);
        l[p[0]] = Rat(2);
        l[p[1]] = Rat(-1);
        l[p[2]] = Rat(-1);
        rs.insert(l);
        rs.insert(neg(l));
    }
    r.roots.assign(rs.begin(), rs.end());
    return r;
}

Realization realize_F4() {
    Realization r;
    r.dim = 4;
    Vec a4(4, Rat(1, 2));
    a4[1] = Rat(-1, 2);
    a4[2] = Rat(-1, 2);
    a4[3] = Rat(-1, 2);
    r.simples = {{Rat(0), Rat(1), Rat(-1), Rat(0)},
                 {Rat(0), Rat(0), Rat(1), Rat(-1)},
                 {Rat(0), Rat(0), Rat(0), Rat(1)},
                 a4};
    for (size_t i = 0; i < 4; ++i) {
        r.roots.push_back(unit(4, i, 1));
        r.roots.push_back(unit(4, i, -1));
    }
    push_pm_pairs(r.roots, 4, 1, 1);
    for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        r.roots.push_back(v);
    }
    return r;
}

std::vector<Vec> e8_roots() {
    std::vector<Vec> roots;
    push_pm_pairs(roots, 8, 1, 1);
    for (int mask = 0; mask < 256; ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits % 2 != 0) continue;
        Vec v(8);
        for (int i = 0; i < 8; ++i) v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        roots.push_back(v);
    }
    return roots;
}

std::vector<Vec> e8_simples() {
    Vec a1(8, Rat(-1, 2));
    a1[0] = Rat(1, 2);
    a1[7] = Rat(1, 2);
    std::vector<Vec> s = {a1, Vec(8), Vec(8), Vec(8), Vec(8), Vec(8), Vec(8), Vec(8)};
    s[1][0] = Rat(1);
    s[1][1] = Rat(1);
    for (int i = 2; i < 8; ++i) {
        s[i][i - 2] = Rat(-1);
        s[i][i - 1] = Rat(1);
    }
    return s;
}

Realization realize_E(int n) {
    Realization r;
    r.dim = 8;
    auto s8 = e8_simples();
    r.simples.assign(s8.begin(), s8.begin() + n);
    if (n == 8) {
        r.roots = e8_roots();
        return r;
    }
    for (const Vec& v : e8_roots())
        if (coords_in_basis(r.simples, v)) r.roots.push_back(v);
    return r;
}

Realization realize(const CartanType& t) {
    switch (t.family) {
        case 'A': return realize_A(t.rank);
        case 'B': return realize_B(t.rank);
        case 'C': return realize_C(t.rank);
        case 'D': return realize_D(t.rank);
        case 'E': return realize_E(t.rank);
        case 'F': return realize_F4();
        case 'G': return realize_G2();
    }
    throw IllegalType(t.str());
}

Vec embed_block(const Vec& v, size_t offset, size_t total) {
    Vec r(total);
    for (size_t i = 0; i < v.size(); ++i) r[offset + i] = v[i];
    return r;
}

} // namespace

// ------------------------------------------------------------
// FiniteRootSystem
// ------------------------------------------------------------

std::vector<size_t> FiniteRootSystem::component_simple_indices(size_t c) const {
    size_t start = 0;
    for (size_t i = 0; i < c; ++i) start += component_ranks[i];
    std::vector<size_t> idx(component_ranks[c]);
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = start + i;
    return idx;
}

std::vector<Vec> FiniteRootSystem::component_roots(size_t c) const {
    std::vector<Vec> basis;
    for (size_t i : component_simple_indices(c)) basis.push_back(simple_roots[i]);
    std::vector<Vec> out;
    for (const Vec& r : all_roots)
        if (coords_in_basis(basis, r)) out.push_back(r);
    return out;
}

Vec FiniteRootSystem::highest_root(size_t c) const { return neg(lowest_root(c)); }

Vec FiniteRootSystem::lowest_root(size_t c) const {
    std::vector<Vec> basis;
    for (size_t i : component_simple_indices(c)) basis.push_back(simple_roots[i]);
    bool found = false;
    Vec best;
    Rat best_h;
    for (const Vec& r : all_roots) {
        auto coords = coords_in_basis(basis, r);
        if (!coords) continue;
        Rat h;
        for (const Rat& x : *coords) h += x;
        if (!found || h < best_h) {
            found = true;
            best_h = h;
            best = r;
        }
    }
    if (!found) throw IllegalType("component has no roots");
    return best;
}

FiniteRootSystem build_root_system(const TypeList& type) {
    for (const auto& t : type.parts) {
        t.require_legal();
        if (t.affine) throw IllegalType("finite realization requested for " + t.str());
    }
    std::vector<Realization> rs;
    size_t total = 0;
    for (const auto& t : type.parts) {
        rs.push_back(realize(t));
        total += rs.back().dim;
    }
    FiniteRootSystem sys;
    sys.type = type;
    sys.ambient_dim = total;
    size_t offset = 0;
    for (size_t c = 0; c < rs.size(); ++c) {
        sys.component_ranks.push_back(rs[c].simples.size());
        for (const Vec& s : rs[c].simples) sys.simple_roots.push_back(embed_block(s, offset, total));
        for (const Vec& r : rs[c].roots) sys.all_roots.push_back(embed_block(r, offset, total));
        offset += rs[c].dim;
    }
    std::sort(sys.all_roots.begin(), sys.all_roots.end());
    return sys;
}

FiniteRootSystem build_root_system(const std::string& type_str) {
    return build_root_system(TypeList::parse(type_str));
}

// ------------------------------------------------------------
// Closure, positivity, identification
// ------------------------------------------------------------

std::vector<Vec> reflection_closure(const std::vector<Vec>& seed) {
    std::set<Vec> all;
    for (const Vec& v : seed) {
        if (is_zero_vec(v)) throw ZeroMirror("zero vector in closure seed");
        all.insert(v);
        all.insert(neg(v));
    }
    std::vector<Vec> work(all.begin(), all.end());
    while (!work.empty()) {
        std::vector<Vec> next;
        for (const Vec& b : work)
            for (const Vec& a : std::vector<Vec>(all.begin(), all.end())) {
                Vec r = reflect_vec(a, b);
                if (all.insert(r).second) next.push_back(r);
                Vec r2 = reflect_vec(b, a);
                if (all.insert(r2).second) next.push_back(r2);
            }
        work = std::move(next);
    }
    return {all.begin(), all.end()};
}

namespace {

bool lex_positive(const Vec& r) {
    for (const Rat& x : r) {
        if (x.is_zero()) continue;
        return x.sign() > 0;
    }
    return false;
}

std::vector<Vec> indecomposables(const std::vector<Vec>& pos) {
    std::set<Vec> pos_set(pos.begin(), pos.end());
    std::vector<Vec> simples;
    for (const Vec& p : pos) {
        bool decomposable = false;
        for (const Vec& q : pos) {
            if (q == p) continue;
            if (pos_set.count(sub(p, q))) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simples.push_back(p);
    }
    std::sort(simples.begin(), simples.end());
    return simples;
}

} // namespace

std::vector<Vec> positive_system(const std::vector<Vec>& roots) {
    std::vector<Vec> pos;
    for (const Vec& r : roots)
        if (lex_positive(r)) pos.push_back(r);
    return pos;
}

std::vector<Vec> simple_system_of(const std::vector<Vec>& roots) {
    return indecomposables(positive_system(roots));
}

std::vector<Vec> simple_system_of(const std::vector<Vec>& roots, const Vec& toward) {
    std::vector<Vec> pos;
    for (const Vec& r : roots) {
        Rat d = dot(r, toward);
        if (d.sign() > 0 || (d.is_zero() && lex_positive(r))) pos.push_back(r);
    }
    return indecomposables(pos);
}

std::vector<std::vector<size_t>> orthogonal_components(const std::vector<Vec>& roots) {
    size_t n = roots.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!dot(roots[i], roots[j]).is_zero()) parent[find(i)] = find(j);
    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<size_t>> out;
    for (auto& [k, v] : groups) out.push_back(std::move(v));
    return out;
}

TypeList identify_type(const std::vector<Vec>& roots) {
    if (roots.empty()) return TypeList{};
    std::set<Vec> set(roots.begin(), roots.end());
    for (const Vec& a : roots)
        for (const Vec& b : roots)
            if (!set.count(reflect_vec(a, b)))
                throw NotClosed("set is not closed under its own reflections");

    std::vector<CartanType> parts;
    for (const auto& comp_idx : orthogonal_components(roots)) {
        std::vector<Vec> comp;
        for (size_t i : comp_idx) comp.push_back(roots[i]);
        std::vector<Vec> simples = simple_system_of(comp);
        CoxeterDiagram d = diagram_from_simples(simples);
        CartanType t = classify_connected_diagram(d);
        if (t.affine) throw NotClosed("component classifies as affine");
        if (t.family == 'B' && t.rank >= 3) {
            // The bond matrix cannot separate B from C; use root counts.
            std::set<Rat> lens;
            for (const Vec& r : comp) lens.insert(dot(r, r));
            Rat shortest = *lens.begin();
            Rat longest = *lens.rbegin();
            size_t n_short = 0, n_long = 0;
            for (const Vec& r : comp) {
                if (dot(r, r) == shortest) ++n_short;
                if (dot(r, r) == longest) ++n_long;
            }
            if (n_short == 2 * static_cast<size_t>(t.rank))
                t.family = 'B';
            else if (n_long == 2 * static_cast<size_t>(t.rank))
                t.family = 'C';
            else
                throw NotClosed("unrecognized two-length component");
        }
        parts.push_back(t);
    }
    return TypeList(std::move(parts));
}

} // namespace coxeter
