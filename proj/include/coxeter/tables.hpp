#pragma once

// Frozen construction data: facet numberings and reflection words for the
// exceptional self-similar subgroups and the indecomposable maximal rows,
// and the extra cut-root formulas per finite component type.

#include <cstddef>
#include <string>
#include <vector>

#include "coxeter/linalg.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

// One word row. Facets f_1..f_{n+1} of the host alcove are a permutation
// of the walls [alpha_1-wall, ..., alpha_n-wall, lowest-root wall]:
// facet_order[j] is the wall id of f_{j+1}, with wall ids 0..n-1 naming
// the alpha walls and n the lowest-root wall. The new facet normal is
// word applied right-to-left (as facet reflections) to facet `seed`'s
// inward normal; it replaces facet `dropped`.
struct WordConstruction {
    CartanType host;
    CartanType sub;
    std::vector<size_t> facet_order;
    std::vector<size_t> word; // 1-based facet indices
    size_t seed = 0;          // 1-based facet index
    size_t dropped = 0;       // 1-based facet index
    std::string word_text;    // e.g. "r1(xi2)"
};

// Self-similar rows for tC2, tG2, tF4 (indices 2, 3, 4).
std::vector<WordConstruction> table2_constructions();

// Indecomposable maximal rows: the three parametric families instantiated
// at rank n plus the fixed rows (tE8 twice, tE7, tF4, tG2).
std::vector<WordConstruction> table3_constructions(int n_min, int n_max);

// The extra cut direction for a finite component, when the component type
// admits one (B_l, C_l with l >= 3, C_2, G_2, F_4): a combination of the
// component's simple roots and its lowest root, always the lowest short
// root. simples must be in the canonical order produced by
// simple_system_of. Throws BadThetaPrime when the type has none.
bool theta_prime_allowed(const CartanType& finite_component_type);
Vec theta_prime(const CartanType& finite_component_type, const std::vector<Vec>& simples,
                const Vec& lowest_root);

} // namespace coxeter
