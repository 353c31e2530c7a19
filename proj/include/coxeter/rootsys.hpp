#pragma once

// Finite crystallographic root systems in explicit rational coordinates.
// Each irreducible family gets its classical realization; products are
// embedded in orthogonal coordinate blocks.

#include <string>
#include <vector>

#include "coxeter/linalg.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

// Linear reflection of x in the mirror orthogonal to normal.
inline Vec reflect_vec(const Vec& normal, const Vec& x) {
    Rat nn = dot(normal, normal);
    if (nn.is_zero()) throw ZeroMirror("reflection normal is zero");
    Rat c = Rat(2) * dot(normal, x) / nn;
    return sub(x, scale(normal, c));
}

struct FiniteRootSystem {
    TypeList type;
    size_t ambient_dim = 0;
    std::vector<Vec> simple_roots;        // concatenated per component
    std::vector<size_t> component_ranks;  // aligned with type.parts
    std::vector<Vec> all_roots;           // sorted lexicographically

    size_t rank() const { return simple_roots.size(); }

    bool contains(const Vec& r) const {
        return std::binary_search(all_roots.begin(), all_roots.end(), r);
    }

    // Simple roots of component c (indices into simple_roots).
    std::vector<size_t> component_simple_indices(size_t c) const;

    // All roots lying in the span of component c's simples.
    std::vector<Vec> component_roots(size_t c) const;

    // Unique root of minimal height in component c (the negative of the
    // highest root).
    Vec lowest_root(size_t c) const;
    Vec highest_root(size_t c) const;

    long long weyl_order() const { return type.group_order(); }
};

FiniteRootSystem build_root_system(const TypeList& type);
FiniteRootSystem build_root_system(const std::string& type_str);

// Closure of seed under mutual reflections (the group generated by the
// seed's reflections applied to the seed). Symmetric under negation.
std::vector<Vec> reflection_closure(const std::vector<Vec>& seed);

// Positive system and simple system of a closed root set, using the first
// nonzero coordinate (lexicographic) sign as the positivity functional.
std::vector<Vec> positive_system(const std::vector<Vec>& roots);
std::vector<Vec> simple_system_of(const std::vector<Vec>& roots);

// Simple system with positivity read off dot(root, toward), falling back to
// the lexicographic sign when the product vanishes.
std::vector<Vec> simple_system_of(const std::vector<Vec>& roots, const Vec& toward);

// Canonical type of a reflection-closed root set (host-free labels: a
// two-length rank-2 component reads B2, a single-length triangle-free path
// reads A/D/E by shape). Throws NotClosed when the set is not closed.
TypeList identify_type(const std::vector<Vec>& roots);

// Splits a root set into connectivity components (two roots connect when
// they are not orthogonal). Returns index lists into `roots`.
std::vector<std::vector<size_t>> orthogonal_components(const std::vector<Vec>& roots);

} // namespace coxeter
