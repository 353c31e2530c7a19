#include "coxeter/tables.hpp"

#include <algorithm>

#include "coxeter/diagram.hpp"
#include "coxeter/rootsys.hpp"

namespace coxeter {

namespace {

std::string word_text_of(const std::vector<size_t>& word, size_t seed) {
    std::string s;
    for (size_t w : word) {
        if (!s.empty()) s += ' ';
        s += 'r';
        s += std::to_string(w);
    }
    s += " (xi" + std::to_string(seed) + ")";
    return s;
}

WordConstruction make_row(CartanType host, CartanType sub, std::vector<size_t> facet_order,
                          std::vector<size_t> word, size_t seed, size_t dropped) {
    WordConstruction w;
    w.host = host;
    w.sub = sub;
    w.facet_order = std::move(facet_order);
    w.word = std::move(word);
    w.seed = seed;
    w.dropped = dropped;
    w.word_text = word_text_of(w.word, w.seed);
    return w;
}

// Wall ids: 0..n-1 name the alpha walls, n the lowest-root wall.
std::vector<size_t> theta_first_order(size_t n) {
    std::vector<size_t> f = {n};
    for (size_t i = 0; i < n; ++i) f.push_back(i);
    return f;
}

} // namespace

std::vector<WordConstruction> table2_constructions() {
    std::vector<WordConstruction> rows;
    rows.push_back(make_row({'C', 2, true}, {'C', 2, true}, {2, 0, 1}, {1}, 2, 1));
    rows.push_back(make_row({'G', 2, true}, {'G', 2, true}, {2, 1, 0}, {1, 2}, 3, 1));
    rows.push_back(make_row({'F', 4, true}, {'F', 4, true}, {3, 2, 1, 0, 4}, {5, 4, 3}, 2, 5));
    return rows;
}

std::vector<WordConstruction> table3_constructions(int n_min, int n_max) {
    std::vector<WordConstruction> rows;
    for (int n = std::max(n_min, 3); n <= n_max; ++n) {
        // tBn over tDn.
        rows.push_back(make_row({'B', n, true}, {'D', n, true}, theta_first_order(n),
                                {static_cast<size_t>(n) + 1}, n, n + 1));
    }
    for (int n = std::max(n_min, 2); n <= n_max; ++n) {
        // tCn over tBn (the rank-2 instance reads tC2 over tC2 after
        // normalization and coincides with the self-similar row).
        if (n >= 3)
            rows.push_back(
                make_row({'C', n, true}, {'B', n, true}, theta_first_order(n), {1}, 2, 1));
    }
    for (int n = std::max(n_min, 3); n <= n_max; ++n) {
        // tBn over tCn, index 2^(n-1).
        std::vector<size_t> f = {0, static_cast<size_t>(n)};
        for (size_t i = 1; i < static_cast<size_t>(n); ++i) f.push_back(i);
        std::vector<size_t> word;
        for (size_t i = 2; i <= static_cast<size_t>(n); ++i) word.push_back(i);
        rows.push_back(make_row({'B', n, true}, {'C', n, true}, std::move(f), std::move(word),
                                n + 1, 2));
    }
    // tE8 over tD8 and over tA8, one shared facet numbering.
    std::vector<size_t> e8_order = {0, 2, 3, 4, 5, 6, 7, 8, 1};
    rows.push_back(make_row({'E', 8, true}, {'D', 8, true}, e8_order,
                            {1, 2, 3, 4, 5, 6, 9, 3, 4, 5, 2, 1, 3, 9, 2, 4}, 3, 1));
    rows.push_back(make_row({'E', 8, true}, {'A', 8, true}, e8_order,
                            {9, 3, 4, 5, 6, 7, 2, 3, 4, 5, 6, 9, 3, 4, 5, 2, 1, 3, 9, 2, 4}, 3,
                            9));
    // tE7 over tA7.
    rows.push_back(make_row({'E', 7, true}, {'A', 7, true}, {7, 0, 2, 3, 4, 5, 6, 1},
                            {8, 4, 3, 2, 5, 6, 4, 8, 3, 5}, 4, 8));
    // tF4 over tB4.
    rows.push_back(make_row({'F', 4, true}, {'B', 4, true}, {3, 2, 1, 0, 4}, {1, 2}, 3, 1));
    // tG2 over tA2.
    rows.push_back(make_row({'G', 2, true}, {'A', 2, true}, {0, 1, 2}, {1}, 2, 1));
    return rows;
}

// ------------------------------------------------------------
// Extra cut directions
// ------------------------------------------------------------

bool theta_prime_allowed(const CartanType& finite_component_type) {
    auto norm = finite_component_type.normalized();
    if (norm.size() != 1) return false;
    CartanType t = norm[0];
    if (t.affine) return false;
    switch (t.family) {
        case 'B': return t.rank >= 2;
        case 'C': return t.rank >= 2;
        case 'F': return true;
        case 'G': return true;
        default: return false;
    }
}

namespace {

Rat len_sq(const Vec& v) { return dot(v, v); }

// Bourbaki-style path order of the simples of one irreducible two-length
// component: start from the degree-one node away from the 4-bond on the
// long side (B, F) or short side (C), walk the path.
std::vector<size_t> path_order_from(const CoxeterDiagram& d, size_t start) {
    std::vector<size_t> order = {start};
    std::vector<bool> used(d.size(), false);
    used[start] = true;
    size_t cur = start;
    for (size_t step = 1; step < d.size(); ++step) {
        for (size_t j = 0; j < d.size(); ++j)
            if (!used[j] && d.bond(cur, j) != 2) {
                order.push_back(j);
                used[j] = true;
                cur = j;
                break;
            }
    }
    return order;
}

} // namespace

Vec theta_prime(const CartanType& finite_component_type, const std::vector<Vec>& simples,
                const Vec& lowest_root) {
    if (!theta_prime_allowed(finite_component_type))
        throw BadThetaPrime("type " + finite_component_type.str() + " has no extra cut");
    CartanType t = finite_component_type.normalized()[0];
    size_t n = simples.size();
    if (n != static_cast<size_t>(t.rank)) throw BadThetaPrime("simple count does not match rank");

    CoxeterDiagram d = diagram_from_simples(simples);
    Vec out;
    if (n == 2 && (t.family == 'B' || t.family == 'C')) {
        size_t s = len_sq(simples[0]) < len_sq(simples[1]) ? 0 : 1;
        out = add(simples[s], lowest_root);
    } else if (t.family == 'G') {
        size_t s = len_sq(simples[0]) < len_sq(simples[1]) ? 0 : 1;
        out = add(add(simples[s], simples[1 - s]), lowest_root);
    } else if (t.family == 'B' || t.family == 'C' || t.family == 'F') {
        // Path end not incident to the 4-bond, on the specified length side.
        Rat ref_len;
        {
            std::vector<Rat> lens;
            for (const Vec& v : simples) lens.push_back(len_sq(v));
            std::sort(lens.begin(), lens.end());
            ref_len = (t.family == 'C') ? lens.front() : lens.back();
        }
        size_t start = n;
        for (size_t i = 0; i < n; ++i) {
            size_t deg = 0;
            bool on_four = false;
            for (size_t j = 0; j < n; ++j) {
                if (i == j || d.bond(i, j) == 2) continue;
                ++deg;
                if (d.bond(i, j) == 4) on_four = true;
            }
            if (deg == 1 && !on_four && len_sq(simples[i]) == ref_len) start = i;
        }
        if (start == n) throw BadThetaPrime("no path end of the required length");
        auto order = path_order_from(d, start);
        if (t.family == 'B') {
            out = scale(sub(lowest_root, simples[order[0]]), Rat(1, 2));
        } else if (t.family == 'C') {
            out = add(simples[order[0]], lowest_root);
        } else {
            out = add(add(add(simples[order[0]], simples[order[1]]), simples[order[2]]),
                      lowest_root);
        }
    } else {
        throw BadThetaPrime("unhandled type " + t.str());
    }

    // The cut direction is a short root, distinct from the lowest root and
    // non-acute against every simple.
    if (is_zero_vec(out) || out == lowest_root)
        throw BadThetaPrime("degenerate cut direction");
    Rat min_len = len_sq(simples[0]);
    for (const Vec& s : simples) min_len = std::min(min_len, len_sq(s));
    if (len_sq(out) != min_len) throw BadThetaPrime("cut direction is not short");
    for (const Vec& s : simples)
        if (dot(out, s).sign() > 0) throw BadThetaPrime("cut direction is acute to a simple");
    return out;
}

} // namespace coxeter
