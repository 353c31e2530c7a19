#include "coxeter/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace coxeter {

// ------------------------------------------------------------
// CoxeterDiagram members
// ------------------------------------------------------------

CoxeterDiagram CoxeterDiagram::from_edges(size_t n, const std::vector<DiagramEdge>& edges) {
    CoxeterDiagram d = empty(n);
    for (const auto& e : edges) {
        if (e.a >= n || e.b >= n || e.a == e.b)
            throw UnknownNode("edge endpoint out of range");
        if (e.m != 2 && e.m != 3 && e.m != 4 && e.m != 6 && e.m != kInfiniteBond)
            throw IllegalType("bond label " + std::to_string(e.m));
        d.m[e.a][e.b] = d.m[e.b][e.a] = e.m;
    }
    return d;
}

std::vector<DiagramEdge> CoxeterDiagram::edges() const {
    std::vector<DiagramEdge> out;
    for (size_t i = 0; i < size(); ++i)
        for (size_t j = i + 1; j < size(); ++j)
            if (m[i][j] != 2) out.push_back({i, j, m[i][j]});
    return out;
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<size_t>& nodes) const {
    CoxeterDiagram d = empty(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j)
            if (i != j) d.m[i][j] = m[nodes[i]][nodes[j]];
    return d;
}

CoxeterDiagram CoxeterDiagram::relabeled(const std::vector<size_t>& perm) const {
    CoxeterDiagram d = empty(size());
    for (size_t i = 0; i < size(); ++i)
        for (size_t j = 0; j < size(); ++j)
            if (i != j) d.m[perm[i]][perm[j]] = m[i][j];
    return d;
}

// ------------------------------------------------------------
// Bonds and weights
// ------------------------------------------------------------

int bond_to_weight(int m) {
    switch (m) {
        case 2: return 0;
        case 3: return 1;
        case 4: return 2;
        case 6: return 3;
        case kInfiniteBond: return 4;
    }
    throw NotParabolic("unsupported bond label " + std::to_string(m));
}

int weight_to_bond(int w) {
    switch (w) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        case 4: return kInfiniteBond;
    }
    throw NotParabolic("unsupported angle weight " + std::to_string(w));
}

CoxeterDiagram diagram_from_simples(const std::vector<Vec>& simples) {
    size_t n = simples.size();
    CoxeterDiagram d = CoxeterDiagram::empty(n);
    for (size_t i = 0; i < n; ++i) {
        if (is_zero_vec(simples[i])) throw ZeroMirror("zero vector among simple roots");
        for (size_t j = i + 1; j < n; ++j) {
            Rat p = dot(simples[i], simples[j]);
            if (p.sign() > 0) throw AcuteAngle("positive inner product between simple roots");
            Rat w = Rat(4) * p * p / (dot(simples[i], simples[i]) * dot(simples[j], simples[j]));
            if (!w.is_integer()) throw IllegalType("non-crystallographic angle");
            long long wi = w.num();
            if (wi > 4) throw IllegalType("impossible angle weight");
            d.m[i][j] = d.m[j][i] = weight_to_bond(static_cast<int>(wi));
        }
    }
    return d;
}

// ------------------------------------------------------------
// Components
// ------------------------------------------------------------

std::vector<std::vector<size_t>> diagram_components(const CoxeterDiagram& d) {
    size_t n = d.size();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<size_t> stack = {s};
        comp[s] = nc;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t u = 0; u < n; ++u)
                if (comp[u] < 0 && d.bond(v, u) != 2) {
                    comp[u] = nc;
                    stack.push_back(u);
                }
        }
        ++nc;
    }
    std::vector<std::vector<size_t>> out(nc);
    for (size_t i = 0; i < n; ++i) out[comp[i]].push_back(i);
    return out;
}

// ------------------------------------------------------------
// Connected shape catalog
// ------------------------------------------------------------

namespace {

// Bond sequence of a path graph, read from the end that gives the
// lexicographically smaller sequence.
std::vector<int> path_bonds(const CoxeterDiagram& d, const std::vector<size_t>& nodes) {
    size_t n = nodes.size();
    std::vector<size_t> ends;
    auto deg = [&](size_t v) {
        size_t k = 0;
        for (size_t u : nodes)
            if (u != v && d.bond(v, u) != 2) ++k;
        return k;
    };
    for (size_t v : nodes)
        if (deg(v) == 1) ends.push_back(v);
    std::vector<int> best;
    for (size_t start : ends) {
        std::vector<int> seq;
        size_t prev = start, cur = start;
        for (size_t step = 0; step + 1 < n; ++step) {
            for (size_t u : nodes) {
                if (u != prev && u != cur && d.bond(cur, u) != 2) {
                    seq.push_back(d.bond(cur, u));
                    prev = cur;
                    cur = u;
                    break;
                }
            }
        }
        if (best.empty() || seq < best) best = seq;
    }
    return best;
}

// Lengths of the branches hanging off a hub node, sorted ascending.
std::vector<size_t> branch_lengths(const CoxeterDiagram& d, const std::vector<size_t>& nodes,
                                   size_t hub) {
    std::vector<size_t> lens;
    for (size_t u : nodes) {
        if (u == hub || d.bond(hub, u) == 2) continue;
        size_t len = 1, prev = hub, cur = u;
        for (;;) {
            size_t next = cur;
            bool found = false;
            for (size_t w : nodes)
                if (w != prev && w != cur && d.bond(cur, w) != 2) {
                    next = w;
                    found = true;
                    break;
                }
            if (!found) break;
            prev = cur;
            cur = next;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

} // namespace

CartanType classify_connected_diagram(const CoxeterDiagram& d) {
    size_t n = d.size();
    if (n == 0) throw IllegalType("empty diagram");
    auto comps = diagram_components(d);
    if (comps.size() != 1) throw Disconnected("diagram is not connected");
    std::vector<size_t> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);

    size_t n_edges = 0, n_inf = 0, n4 = 0, n6 = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            int m = d.bond(i, j);
            if (m == 2) continue;
            ++n_edges;
            if (m == kInfiniteBond) ++n_inf;
            if (m == 4) ++n4;
            if (m == 6) ++n6;
            if (m != 3 && m != 4 && m != 6 && m != kInfiniteBond)
                throw NotParabolic("bond label outside the crystallographic set");
        }

    if (n == 1) return CartanType{'A', 1, false};

    if (n_inf > 0) {
        if (n == 2 && n_inf == 1) return CartanType{'A', 1, true};
        throw NotParabolic("infinite bond in a larger diagram");
    }

    std::vector<size_t> deg(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && d.bond(i, j) != 2) ++deg[i];
    size_t max_deg = *std::max_element(deg.begin(), deg.end());

    if (n_edges == n) {
        // Unique cycle.
        if (max_deg == 2 && n4 == 0 && n6 == 0 && n >= 3)
            return CartanType{'A', static_cast<int>(n) - 1, true};
        throw NotParabolic("decorated cycle");
    }
    if (n_edges != n - 1) throw NotParabolic("diagram is not a tree");

    if (max_deg <= 2) {
        std::vector<int> b = path_bonds(d, nodes);
        size_t nb = b.size();
        if (n6 > 0) {
            if (n6 == 1 && n4 == 0) {
                if (nb == 1) return CartanType{'G', 2, false};
                if (nb == 2 && b[0] == 3 && b[1] == 6) return CartanType{'G', 2, true};
            }
            throw NotParabolic("misplaced bond of label 6");
        }
        if (n4 == 0) return CartanType{'A', static_cast<int>(n), false};
        if (n4 == 1) {
            if (b.front() == 4 || b.back() == 4)
                return CartanType{'B', static_cast<int>(n), false};
            if (nb == 3 && b[1] == 4) return CartanType{'F', 4, false};
            if (nb == 4 && (b == std::vector<int>{3, 3, 4, 3} || b == std::vector<int>{3, 4, 3, 3}))
                return CartanType{'F', 4, true};
            throw NotParabolic("misplaced bond of label 4");
        }
        if (n4 == 2 && b.front() == 4 && b.back() == 4 &&
            std::count(b.begin(), b.end(), 4) == 2)
            return CartanType{'C', static_cast<int>(n) - 1, true};
        throw NotParabolic("too many bonds of label 4");
    }

    if (n6 > 0) throw NotParabolic("bond of label 6 off a path");
    size_t n_hubs = std::count_if(deg.begin(), deg.end(), [](size_t k) { return k >= 3; });

    if (max_deg == 4) {
        if (n_hubs == 1 && n == 5 && n4 == 0) return CartanType{'D', 4, true};
        throw NotParabolic("node of degree four in an unsupported shape");
    }

    if (n_hubs == 1) {
        size_t hub = 0;
        while (deg[hub] != 3) ++hub;
        auto bl = branch_lengths(d, nodes, hub);
        if (n4 == 1) {
            // The bond of label 4 must be the far edge of the long branch.
            if (bl[0] == 1 && bl[1] == 1) {
                bool ok = false;
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (d.bond(i, j) == 4 && (deg[i] == 1 || deg[j] == 1) && i != hub &&
                            j != hub)
                            ok = true;
                if (n == 4) ok = true;
                if (ok) return CartanType{'B', static_cast<int>(n) - 1, true};
            }
            throw NotParabolic("bond of label 4 on a branched diagram");
        }
        if (bl[0] == 1 && bl[1] == 1) return CartanType{'D', static_cast<int>(n), false};
        if (bl == std::vector<size_t>{1, 2, 2}) return CartanType{'E', 6, false};
        if (bl == std::vector<size_t>{1, 2, 3}) return CartanType{'E', 7, false};
        if (bl == std::vector<size_t>{1, 2, 4}) return CartanType{'E', 8, false};
        if (bl == std::vector<size_t>{2, 2, 2}) return CartanType{'E', 6, true};
        if (bl == std::vector<size_t>{1, 3, 3}) return CartanType{'E', 7, true};
        if (bl == std::vector<size_t>{1, 2, 5}) return CartanType{'E', 8, true};
        throw NotParabolic("branched tree outside the catalog");
    }

    if (n_hubs == 2 && n4 == 0) {
        // Forks at both ends of a path.
        for (size_t v = 0; v < n; ++v) {
            if (deg[v] != 3) continue;
            auto bl = branch_lengths(d, nodes, v);
            if (!(bl[0] == 1 && bl[1] == 1)) throw NotParabolic("double fork off the catalog");
        }
        return CartanType{'D', static_cast<int>(n) - 1, true};
    }
    throw NotParabolic("tree shape outside the catalog");
}

TypeList classify_diagram(const CoxeterDiagram& d) {
    std::vector<CartanType> parts;
    for (const auto& comp : diagram_components(d))
        parts.push_back(classify_connected_diagram(d.induced(comp)));
    return TypeList(std::move(parts)).normalized();
}

// ------------------------------------------------------------
// Canonical labeling
// ------------------------------------------------------------

namespace {

// Exhaustive search for the permutation giving the lexicographically
// least lower-triangular bond sequence. The sequence reads, for each
// placed node i, its bonds to nodes 0..i-1; every prefix only involves
// already-placed nodes, so prefix comparison is a sound prune.
// Diagrams here have at most nine nodes.
struct CanonSearch {
    const CoxeterDiagram& d;
    size_t n;
    std::vector<size_t> best, cur;
    std::vector<int> best_key, cur_key;
    std::vector<bool> used;
    bool have_best = false;

    explicit CanonSearch(const CoxeterDiagram& diagram)
        : d(diagram), n(diagram.size()), used(diagram.size(), false) {}

    void recurse(bool tight) {
        size_t k = cur.size();
        if (k == n) {
            if (!have_best || cur_key < best_key) {
                best = cur;
                best_key = cur_key;
                have_best = true;
            }
            return;
        }
        for (size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            size_t base = cur_key.size();
            bool child_tight = tight && have_best;
            bool prune = false;
            for (size_t j = 0; j < k; ++j) {
                int w = bond_to_weight(d.bond(v, cur[j]));
                cur_key.push_back(w);
                if (child_tight) {
                    int bw = best_key[base + j];
                    if (w > bw) {
                        prune = true;
                        break;
                    }
                    if (w < bw) child_tight = false;
                }
            }
            if (!prune) {
                used[v] = true;
                cur.push_back(v);
                recurse(child_tight);
                cur.pop_back();
                used[v] = false;
            }
            cur_key.resize(base);
        }
    }
};

} // namespace

std::vector<size_t> canonical_labeling(const CoxeterDiagram& d) {
    size_t n = d.size();
    auto comps = diagram_components(d);
    // Canonicalize each component, then order components.
    struct Piece {
        std::vector<int> key;
        std::vector<size_t> order; // original node ids in canonical order
    };
    std::vector<Piece> pieces;
    for (const auto& comp : comps) {
        CoxeterDiagram sub = d.induced(comp);
        CanonSearch cs(sub);
        cs.recurse(true);
        Piece p;
        for (size_t i : cs.best) p.order.push_back(comp[i]);
        p.key = cs.best_key;
        p.key.insert(p.key.begin(), static_cast<int>(comp.size()));
        pieces.push_back(std::move(p));
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return a.key < b.key; });
    // perm[old] = new position
    std::vector<size_t> perm(n);
    size_t pos = 0;
    for (const auto& p : pieces)
        for (size_t old : p.order) perm[old] = pos++;
    return perm;
}

CoxeterDiagram canonical_form(const CoxeterDiagram& d) {
    return d.relabeled(canonical_labeling(d));
}

bool diagrams_isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b) {
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<size_t>> find_diagram_isomorphism(const CoxeterDiagram& a,
                                                            const CoxeterDiagram& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (canonical_form(a) != canonical_form(b)) return std::nullopt;
    auto pa = canonical_labeling(a);
    auto pb = canonical_labeling(b);
    // map old_a -> old_b through the shared canonical form
    std::vector<size_t> inv_b(b.size());
    for (size_t i = 0; i < b.size(); ++i) inv_b[pb[i]] = i;
    std::vector<size_t> iso(a.size());
    for (size_t i = 0; i < a.size(); ++i) iso[i] = inv_b[pa[i]];
    return iso;
}

} // namespace coxeter
