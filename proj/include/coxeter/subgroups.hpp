#pragma once

// Reflection subgroups of Euclidean (affine) reflection groups: the
// vertex-plus-cuts construction, exact indices by volume ratio, a tiling
// oracle, homotheties, the three exceptional self-similar subgroups,
// maximal subgroup catalogs, admissible chains, the embedding criterion,
// and bounded enumeration with equivalence dedup.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/affine.hpp"
#include "coxeter/diagram.hpp"
#include "coxeter/rootsys.hpp"
#include "coxeter/subsystems.hpp"
#include "coxeter/tables.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

// ============================================================
// Records
// ============================================================

enum class CutKind { theta, theta_prime, cone };

struct CutChoice {
    CutKind kind = CutKind::theta;
    long long k = 1;
};

struct TraceComponent {
    std::string finite_label; // label of the finite component at the vertex
    CutKind cut = CutKind::theta;
    long long k = 1;

    auto operator<=>(const TraceComponent&) const = default;
};

struct SubgroupRecord {
    TypeList host_type;              // affine label of the ambient group
    CoxeterDiagram host_diagram;     // diagram of the host alcove
    TypeList sub_type;               // affine labels (finite for cone parts)
    CoxeterDiagram sub_diagram;      // diagram of the chamber facets
    FundamentalChamber chamber;
    std::optional<long long> index;  // nullopt encodes infinite index
    Vec vertex;                      // anchor point of the construction
    bool vertex_special = false;
    long long vertex_stab_order = 0; // order of the vertex stabilizer
    long long finite_part_order = 0; // order of the chosen finite part
    std::vector<TraceComponent> trace;
    bool block_maximal = false;
    std::string word_trace;          // set by table-word constructions
};

// Diagram spanned by the chamber facets (all components): bonds from the
// exact angle weights, infinite bond for parallel opposite facets. Throws
// AcuteAngle on an acute facet pair.
CoxeterDiagram diagram_of_chamber(const FundamentalChamber& chamber);

// ============================================================
// Core construction
// ============================================================

// Builds the subgroup anchored at `vertex`, generated by the mirrors
// through the vertex in the directions of component_simples (orthogonal
// components) plus one cut wall per component as requested. Components
// with CutKind::cone get no cut wall; any such component (or a rank
// deficit) makes the index infinite.
SubgroupRecord construct_subgroup(const FiniteRootSystem& host, const Vec& vertex,
                                  const std::vector<std::vector<Vec>>& component_simples,
                                  const std::vector<CutChoice>& cuts);

// Exact index as a volume ratio. Throws UnboundedChamber on cone
// components and NonIntegerRatio when the ratio is not a positive integer.
long long subgroup_index(const FiniteRootSystem& host, const FundamentalChamber& chamber);

// Independent index count: BFS over host alcoves inside the chamber.
long long tiling_index_oracle(const FiniteRootSystem& host, const FundamentalChamber& chamber,
                              long long cap);

// Dilation of the alcove about the origin vertex by integer factor k;
// index k^rank.
SubgroupRecord homothety_subgroup(const FiniteRootSystem& host, long long k);

// The self-similar non-homothetic subgroup of tC2 (index 2), tG2 (3) or
// tF4 (4), built by the frozen facet-word data. Throws NotExceptionalType.
SubgroupRecord exceptional_subgroup(const CartanType& host_type);

// Realizes one frozen word row (see tables.hpp) as a subgroup record.
SubgroupRecord word_row_subgroup(const WordConstruction& row);

// Subgroup generated by every host mirror parallel to a mirror of the
// finite subsystem through `vertex` (which must be special). Block-maximal
// by construction; finite index iff the subsystem has full rank.
SubgroupRecord g_extension(const FiniteRootSystem& host, const Vec& vertex,
                           const std::vector<std::vector<Vec>>& component_simples);

// ============================================================
// Catalogs
// ============================================================

// Indecomposable maximal subgroups of an irreducible affine type: the
// frozen word-table rows that apply, the exceptional entry when the type
// has one, and prime homotheties (excluding primes whose homothety
// factors through a smaller step), bounded by max_index.
std::vector<SubgroupRecord> maximal_indecomposable_subgroups(const CartanType& host_type,
                                                             long long max_index);

// Decomposable maximal subgroups: extensions of the decomposable maximal
// finite subsystems of the vertex stabilizer at the origin.
std::vector<SubgroupRecord> maximal_decomposable_subgroups(const CartanType& host_type);

// ============================================================
// Criteria and chains
// ============================================================

// True iff the finite part of sub_type embeds as a reflection subsystem of
// the finite part of the irreducible affine host; tB_l/tC_l components of
// the subgroup may present either finite form.
bool embedding_exists(const TypeList& sub_type, const CartanType& host_type);
bool embedding_exists(const CoxeterDiagram& sub, const CoxeterDiagram& host);

struct AdmissibleChain {
    std::vector<CartanType> diagrams; // [sub = last step, ..., host]
    long long index = 1;              // product of step indices

    auto operator<=>(const AdmissibleChain&) const = default;
};

// All chains sub = S_q < S_{q-1} < ... < S_1 = host where every step is a
// frozen-table indecomposable maximal pair and all diagrams are distinct.
std::vector<AdmissibleChain> admissible_sequences(const CartanType& sub_type,
                                                  const CartanType& host_type);

// Pairs (host, product) whose extension is maximal of infinite index,
// derived from the non-full-rank maximal finite subsystems.
std::vector<std::pair<CartanType, TypeList>> infinite_index_maximal_pairs(
    const CartanType& host_type);

// Divisibility of the full index by the vertex-stabilizer index.
bool index_divisibility_check(const SubgroupRecord& r);

// ============================================================
// Enumeration
// ============================================================

// All finite-index reflection subgroups of the affine group of host_type
// (given as the affine label list) with index <= max_index, one record per
// equivalence class under arrangement-preserving isometries, produced by
// the vertex-plus-cuts procedure over every alcove vertex. Deterministic
// order: by index, then sub label, then trace.
std::vector<SubgroupRecord> enumerate_subgroups(const TypeList& host_type, long long max_index);

// Finite system underlying an affine label list (tX_n -> X_n realization).
FiniteRootSystem finite_part_of(const TypeList& affine_type);

} // namespace coxeter
