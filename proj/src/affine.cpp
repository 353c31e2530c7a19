#include "coxeter/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace coxeter {

// ------------------------------------------------------------
// Simplex geometry
// ------------------------------------------------------------

namespace {

std::vector<Vec> independent_subset(const std::vector<Vec>& vs) {
    std::vector<Vec> basis;
    Mat m;
    for (const Vec& v : vs) {
        m.push_back(v);
        if (rank_of(m) == m.size())
            basis.push_back(v);
        else
            m.pop_back();
    }
    return basis;
}

} // namespace

std::vector<Vec> simplex_vertices(const ChamberComponent& comp, size_t ambient_dim) {
    if (comp.kind != ChamberKind::simplex) throw NotSimplex("component is not a simplex");
    std::vector<Vec> normals;
    for (const auto& w : comp.walls) normals.push_back(w.normal);
    std::vector<Vec> basis = independent_subset(normals);
    size_t d = basis.size();
    if (comp.walls.size() != d + 1)
        throw NotSimplex("wall count does not exceed the normal rank by one");
    std::vector<Vec> vertices;
    for (size_t skip = 0; skip < comp.walls.size(); ++skip) {
        Mat a;
        Vec rhs;
        for (size_t j = 0; j < comp.walls.size(); ++j) {
            if (j == skip) continue;
            Vec row(d);
            for (size_t k = 0; k < d; ++k) row[k] = dot(comp.walls[j].normal, basis[k]);
            a.push_back(std::move(row));
            rhs.push_back(-comp.walls[j].offset);
        }
        auto t = solve_square(a, rhs);
        if (!t) throw DegenerateChamber("vertex system is singular");
        Vec x = zero_vec(ambient_dim);
        for (size_t k = 0; k < d; ++k) x = add(x, scale(basis[k], (*t)[k]));
        if (comp.walls[skip].eval(x).sign() > 0)
            throw UnboundedChamber("vertex lies outside the skipped wall");
        vertices.push_back(std::move(x));
    }
    return vertices;
}

Rat component_volume_sq(const ChamberComponent& comp, size_t ambient_dim) {
    std::vector<Vec> v = simplex_vertices(comp, ambient_dim);
    size_t d = v.size() - 1;
    if (d == 0) return Rat(1);
    std::vector<Vec> edges;
    for (size_t i = 1; i < v.size(); ++i) edges.push_back(sub(v[i], v[0]));
    Rat g = det(gram(edges));
    long long df = 1;
    for (size_t i = 2; i <= d; ++i) df *= static_cast<long long>(i);
    return g / (Rat(df) * Rat(df));
}

Rat chamber_volume_sq(const FundamentalChamber& chamber, size_t ambient_dim) {
    Rat v(1);
    for (const auto& comp : chamber.components) {
        if (comp.kind != ChamberKind::simplex)
            throw UnboundedChamber("chamber has a cone component");
        v *= component_volume_sq(comp, ambient_dim);
    }
    return v;
}

// ------------------------------------------------------------
// Alcoves
// ------------------------------------------------------------

ChamberComponent alcove_component(const FiniteRootSystem& fin, size_t comp) {
    ChamberComponent c;
    for (size_t i : fin.component_simple_indices(comp)) {
        // Inside: (alpha_i, x) >= 0.
        c.walls.push_back(positive_side(AffineRoot{fin.simple_roots[i], Rat(0)}));
    }
    // Inside: (theta_low, x) + 1 >= 0.
    c.walls.push_back(positive_side(AffineRoot{fin.lowest_root(comp), Rat(1)}));
    c.kind = ChamberKind::simplex;
    return c;
}

FundamentalChamber fundamental_alcove(const FiniteRootSystem& fin) {
    FundamentalChamber ch;
    for (size_t c = 0; c < fin.component_ranks.size(); ++c)
        ch.components.push_back(alcove_component(fin, c));
    return ch;
}

AffineDiagramInfo affine_extension(const FiniteRootSystem& fin, size_t comp) {
    AffineDiagramInfo info;
    std::vector<Vec> dirs = {fin.lowest_root(comp)};
    for (size_t i : fin.component_simple_indices(comp)) dirs.push_back(fin.simple_roots[i]);
    info.diagram = diagram_from_simples(dirs);
    info.nodes.push_back({dirs[0], Rat(1)});
    for (size_t i = 1; i < dirs.size(); ++i) info.nodes.push_back({dirs[i], Rat(0)});

    // Transposed Cartan matrix c[i][j] = 2 (d_i, d_j) / (d_i, d_i); its
    // kernel vector x has sum x_j d_j = 0, so x is the mark vector.
    size_t n = dirs.size();
    Mat cartan(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            cartan[i][j] = Rat(2) * dot(dirs[i], dirs[j]) / dot(dirs[i], dirs[i]);
    auto ker = kernel_basis(cartan);
    if (ker.size() != 1) throw DegenerateChamber("affine Cartan kernel is not a line");
    Vec k = ker[0];
    long long denom_lcm = 1;
    for (const Rat& x : k) {
        long long d = x.den();
        denom_lcm = denom_lcm / std::gcd(denom_lcm, d) * d;
    }
    std::vector<long long> marks;
    for (const Rat& x : k) {
        Rat scaled = x * Rat(denom_lcm);
        marks.push_back(scaled.num());
    }
    long long g = 0;
    for (long long m : marks) g = std::gcd(g, m < 0 ? -m : m);
    for (long long& m : marks) m /= g;
    if (marks[0] < 0)
        for (long long& m : marks) m = -m;
    for (long long m : marks)
        if (m <= 0) throw DegenerateChamber("affine marks are not positive");
    info.marks = marks;
    for (size_t i = 0; i < marks.size(); ++i)
        if (marks[i] == 1) info.special_nodes.push_back(i);
    info.type = classify_connected_diagram(info.diagram);
    if (!info.type.affine) throw IllegalType("extension did not classify as affine");
    return info;
}

std::vector<Vec> alcove_vertices(const FiniteRootSystem& fin, size_t comp) {
    ChamberComponent c = alcove_component(fin, comp);
    // Wall order in c: [alpha_1 .. alpha_n, theta]. Diagram node order:
    // [theta, alpha_1 .. alpha_n]. Vertex j sits opposite node j's wall.
    std::vector<Vec> vs = simplex_vertices(c, fin.ambient_dim);
    std::vector<Vec> out;
    out.push_back(vs.back());
    for (size_t i = 0; i + 1 < vs.size(); ++i) out.push_back(vs[i]);
    return out;
}

bool is_special_point(const FiniteRootSystem& fin, const Vec& u) {
    for (const Vec& r : fin.all_roots)
        if (!dot(r, u).is_integer()) return false;
    return true;
}

std::vector<Vec> roots_through(const FiniteRootSystem& fin, const Vec& u) {
    std::vector<Vec> out;
    for (const Vec& r : fin.all_roots)
        if (dot(r, u).is_integer()) out.push_back(r);
    return out;
}

// ------------------------------------------------------------
// Tiling counter
// ------------------------------------------------------------

long long count_alcoves_in_region(const FiniteRootSystem& fin, size_t comp,
                                  const std::vector<Halfspace>& region, long long cap) {
    ChamberComponent c0 = alcove_component(fin, comp);
    std::vector<AffineRoot> walls;
    for (const auto& h : c0.walls) walls.push_back(h.wall());
    std::vector<Vec> verts = simplex_vertices(c0, fin.ambient_dim);

    auto inside = [&](const std::vector<Vec>& vs) {
        for (const Vec& v : vs)
            for (const auto& h : region)
                if (h.eval(v).sign() > 0) return false;
        return true;
    };
    auto barycenter = [&](const std::vector<Vec>& vs) {
        Vec b = zero_vec(fin.ambient_dim);
        for (const Vec& v : vs) b = add(b, v);
        return scale(b, Rat(1, static_cast<long long>(vs.size())));
    };

    if (!inside(verts)) throw HostMismatch("region does not contain the fundamental alcove");

    struct State {
        std::vector<AffineRoot> walls;
        std::vector<Vec> verts;
    };
    std::set<Vec> seen;
    std::vector<State> frontier = {{walls, verts}};
    seen.insert(barycenter(verts));
    long long count = 1;
    while (!frontier.empty()) {
        std::vector<State> next;
        for (const State& s : frontier) {
            for (size_t j = 0; j < s.walls.size(); ++j) {
                State t = s;
                // Reflect the alcove across wall j: vertex j moves, the
                // other vertices lie on the mirror; wall j is shared.
                t.verts[j] = s.walls[j].reflect_point(s.verts[j]);
                for (size_t i = 0; i < s.walls.size(); ++i)
                    if (i != j) t.walls[i] = s.walls[j].reflect_root(s.walls[i]);
                if (!inside(t.verts)) continue;
                Vec b = barycenter(t.verts);
                if (!seen.insert(b).second) continue;
                ++count;
                if (count > cap) throw CapExceeded("alcove count exceeds cap");
                next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    return count;
}

} // namespace coxeter
