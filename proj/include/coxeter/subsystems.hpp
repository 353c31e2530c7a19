#pragma once

// Reflection-closed subsets of a finite root system: exhaustive
// enumeration by closure walk (small ranks), a brute-force oracle,
// conjugacy classes under the Weyl group or the full automorphism group,
// host-contextual component labels, and targeted subsystem search.

#include <optional>
#include <string>
#include <vector>

#include "coxeter/linalg.hpp"
#include "coxeter/rootsys.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

// ============================================================
// Labels
// ============================================================

enum class LengthClass { only, short_roots, long_roots };

// Component label inside a fixed host. Raw forms (B1, C1, D2, D3) are kept;
// single-length components in a two-length host carry a length tag.
struct ComponentLabel {
    CartanType type;
    LengthClass length = LengthClass::only;

    auto operator<=>(const ComponentLabel&) const = default;

    std::string str() const {
        std::string s = type.str();
        if (length == LengthClass::short_roots) s += "-short";
        if (length == LengthClass::long_roots) s += "-long";
        return s;
    }

    long long group_order() const { return type.group_order(); }
};

std::string labels_str(const std::vector<ComponentLabel>& labels);
long long labels_group_order(const std::vector<ComponentLabel>& labels);

// Forgets tags and raw forms: canonical TypeList (D2 -> A1+A1, B1 -> A1...).
TypeList labels_type_list(const std::vector<ComponentLabel>& labels);

// ============================================================
// Host context
// ============================================================

struct HostContext {
    FiniteRootSystem host;
    std::vector<size_t> neg;                 // index of the negated root
    std::vector<std::vector<size_t>> refl;   // refl[i][j] = s_{root_i}(root_j)
    std::vector<std::vector<size_t>> weyl;   // root permutations, rank <= 4 only
    std::vector<std::vector<size_t>> auts;   // all root-set automorphisms, rank <= 4

    std::vector<size_t> root_part;           // host component of each root
    std::vector<Rat> part_min_len, part_max_len; // squared root lengths per component

    size_t root_count() const { return host.all_roots.size(); }
    size_t index_of(const Vec& r) const;     // throws NotHostRoot

    // with_group materializes weyl/auts; requires rank <= 4 (RankTooLarge).
    static HostContext make(const TypeList& type, bool with_group);
    static HostContext make(const std::string& type, bool with_group);
};

// ============================================================
// Closure and enumeration
// ============================================================

// Reflection closure of the seed inside the host (indices). The result is
// sorted and contains the negatives of its members.
std::vector<size_t> close_root_set(const HostContext& ctx, const std::vector<size_t>& seed);

// True when the set also contains every host-root sum of two members.
bool is_additively_closed(const HostContext& ctx, const std::vector<size_t>& s);

// Every nonempty reflection-closed subset, as sorted index sets, found by
// the one-root-at-a-time closure walk. Requires rank <= 4.
std::vector<std::vector<size_t>> all_closed_subsets_walk(const HostContext& ctx);

// Oracle: closures of all subsets of positive roots of size <= max_seed.
std::vector<std::vector<size_t>> all_closed_subsets_brute(const HostContext& ctx,
                                                          size_t max_seed);

// True when every root outside s pushes the closure to the full system.
bool is_maximal_closed(const HostContext& ctx, const std::vector<size_t>& s);

// ============================================================
// Classes and records
// ============================================================

struct SubsystemRecord {
    TypeList host_type;
    std::vector<ComponentLabel> labels;  // canonical sorted
    std::vector<size_t> roots;           // sorted indices into host.all_roots
    std::vector<Vec> simple_roots;
    bool is_root_subsystem = false;
    long long index = 0;                 // group order ratio host : subgroup
    long long orbit_size = 0;            // conjugates under the group used
};

// One record per conjugacy class of nonempty closed subsets. Weyl
// conjugacy by default; up_to_aut additionally merges under diagram
// automorphisms and, in a two-length host, under the label duality that a
// bond-preserving length swap induces. Requires rank <= 4.
std::vector<SubsystemRecord> subsystem_classes(const HostContext& ctx, bool up_to_aut);

// Classes that are maximal among proper closed subsets.
std::vector<SubsystemRecord> maximal_subsystem_classes(const HostContext& ctx, bool up_to_aut);

// Host-contextual component labels of a closed subset.
std::vector<ComponentLabel> identify_in_host(const HostContext& ctx,
                                             const std::vector<size_t>& roots);

SubsystemRecord make_record(const HostContext& ctx, const std::vector<size_t>& roots);

// True when the closed subset is additively closed in the host;
// equivalently, no difference of two of its simple roots is a host root.
bool is_root_subsystem(const HostContext& ctx, const std::vector<size_t>& roots);

// Equivalence under the full automorphism group: orbit equality at rank
// <= 4, extended by the length-swap label duality in a self-dual host.
bool are_aut_equivalent(const HostContext& ctx, const std::vector<size_t>& a,
                        const std::vector<size_t>& b);

// Class enumeration for hosts of rank <= 8: the exact walk below rank 5, a
// label-keyed representative walk above (orbit_size 0 there). Throws
// RankTooLarge beyond rank 8.
std::vector<SubsystemRecord> enumerate_reflection_subgroups(const std::string& host_type,
                                                            bool up_to_aut);

// ============================================================
// Targeted search (works at any rank, no group materialized)
// ============================================================

// Finds simple roots inside host realizing the target product, allowing an
// independent positive rational rescaling of each target component.
// Returns the concatenated simple roots, or nullopt.
std::optional<std::vector<Vec>> find_subsystem(const FiniteRootSystem& host,
                                               const TypeList& target);

// Maximal proper reflection-closed subsystems of an irreducible host, one
// record per class: exhaustive walk at rank <= 4, verified catalog
// realizations at rank >= 5 (orbit_size 0 there).
std::vector<SubsystemRecord> maximal_finite_subgroups(const std::string& host_type);

} // namespace coxeter
