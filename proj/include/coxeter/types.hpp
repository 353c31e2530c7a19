#pragma once

// Cartan type labels (finite and affine), their legality and normalization
// rules, and the error taxonomy shared by the whole library.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxeter {

// ============================================================
// Error taxonomy
// ============================================================

struct CoxeterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define COXETER_ERROR(NAME)                         \
    struct NAME : CoxeterError {                    \
        explicit NAME(const std::string& msg)       \
            : CoxeterError(#NAME ": " + msg) {}     \
    }

COXETER_ERROR(IllegalType);
COXETER_ERROR(ZeroMirror);
COXETER_ERROR(Decomposable);
COXETER_ERROR(NotClosed);
COXETER_ERROR(Disconnected);
COXETER_ERROR(NotParabolic);
COXETER_ERROR(UnknownNode);
COXETER_ERROR(DegenerateChamber);
COXETER_ERROR(NotSimplex);
COXETER_ERROR(NotSpecial);
COXETER_ERROR(NotHostRoot);
COXETER_ERROR(RankTooLarge);
COXETER_ERROR(HostMismatch);
COXETER_ERROR(NotOrthogonal);
COXETER_ERROR(BadThetaPrime);
COXETER_ERROR(AcuteAngle);
COXETER_ERROR(NonIntegerRatio);
COXETER_ERROR(UnboundedChamber);
COXETER_ERROR(CapExceeded);
COXETER_ERROR(NotExceptionalType);

#undef COXETER_ERROR

// ============================================================
// Cartan types
// ============================================================

// One irreducible type label such as A3, C4 or tB5 ("t" marks the affine
// extension). Raw labels like B1, C1, D2, D3 are representable on purpose;
// normalize() rewrites them to their canonical isomorphs.
struct CartanType {
    char family = 'A'; // 'A'..'G'
    int rank = 1;
    bool affine = false;

    auto operator<=>(const CartanType&) const = default;

    std::string str() const {
        std::string s;
        if (affine) s += 't';
        s += family;
        s += std::to_string(rank);
        return s;
    }

    // Order of the finite reflection group of this type.
    long long group_order() const;

    bool is_legal() const;
    void require_legal() const;

    // Canonical isomorphic type list (B1 -> A1, D2 -> A1+A1, tD3 -> tA3, ...).
    std::vector<CartanType> normalized() const;

    static CartanType parse(const std::string& s);
};

// A product type: multiset of irreducible labels kept in canonical sorted
// order (descending rank, then family letter, then finite before affine).
struct TypeList {
    std::vector<CartanType> parts;

    TypeList() = default;
    explicit TypeList(std::vector<CartanType> p);

    auto operator<=>(const TypeList&) const = default;

    size_t total_rank() const;
    long long group_order() const; // product over parts
    TypeList normalized() const;
    std::string str() const; // "+"-joined, e.g. "A3+A1"

    static TypeList parse(const std::string& s);
};

namespace detail {

inline long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline long long pow2(int n) { return 1LL << n; }

inline bool type_order_less(const CartanType& a, const CartanType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.family != b.family) return a.family < b.family;
    return a.affine < b.affine;
}

} // namespace detail

inline long long CartanType::group_order() const {
    if (affine) throw IllegalType("group_order is only defined for finite types");
    switch (family) {
        case 'A': return detail::factorial(rank + 1);
        case 'B':
        case 'C': return detail::pow2(rank) * detail::factorial(rank);
        case 'D': return detail::pow2(rank - 1) * detail::factorial(rank);
        case 'E':
            if (rank == 6) return 51840;
            if (rank == 7) return 2903040;
            return 696729600;
        case 'F': return 1152;
        case 'G': return 12;
    }
    throw IllegalType("unknown family " + str());
}

inline bool CartanType::is_legal() const {
    if (rank < 1) return false;
    switch (family) {
        case 'A': return true;
        case 'B': return affine ? rank >= 1 : true;
        case 'C': return affine ? rank >= 1 : true;
        case 'D': return affine ? rank >= 3 : rank >= 2;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

inline void CartanType::require_legal() const {
    if (!is_legal()) throw IllegalType(str());
}

inline std::vector<CartanType> CartanType::normalized() const {
    require_legal();
    if (!affine) {
        if (family == 'B' && rank == 1) return {{'A', 1, false}};
        if (family == 'C' && rank == 1) return {{'A', 1, false}};
        if (family == 'C' && rank == 2) return {{'B', 2, false}};
        if (family == 'D' && rank == 2) return {{'A', 1, false}, {'A', 1, false}};
        if (family == 'D' && rank == 3) return {{'A', 3, false}};
        return {*this};
    }
    if (family == 'B' && rank == 1) return {{'A', 1, true}};
    if (family == 'B' && rank == 2) return {{'C', 2, true}};
    if (family == 'C' && rank == 1) return {{'A', 1, true}};
    if (family == 'D' && rank == 3) return {{'A', 3, true}};
    return {*this};
}

inline CartanType CartanType::parse(const std::string& s) {
    size_t pos = 0;
    bool affine = false;
    if (pos < s.size() && s[pos] == 't') {
        affine = true;
        ++pos;
    }
    if (pos >= s.size() || s[pos] < 'A' || s[pos] > 'G')
        throw IllegalType("cannot parse type '" + s + "'");
    char family = s[pos++];
    if (pos >= s.size()) throw IllegalType("missing rank in '" + s + "'");
    int rank = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw IllegalType("bad rank digit in '" + s + "'");
        rank = rank * 10 + (s[pos] - '0');
        if (rank > 1000) throw IllegalType("rank too large in '" + s + "'");
    }
    CartanType t{family, rank, affine};
    t.require_legal();
    return t;
}

inline TypeList::TypeList(std::vector<CartanType> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), detail::type_order_less);
}

inline size_t TypeList::total_rank() const {
    size_t r = 0;
    for (const auto& t : parts) r += static_cast<size_t>(t.rank);
    return r;
}

inline long long TypeList::group_order() const {
    long long o = 1;
    for (const auto& t : parts) o *= t.group_order();
    return o;
}

inline TypeList TypeList::normalized() const {
    std::vector<CartanType> out;
    for (const auto& t : parts)
        for (const auto& n : t.normalized()) out.push_back(n);
    return TypeList(std::move(out));
}

inline std::string TypeList::str() const {
    if (parts.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '+';
        s += parts[i].str();
    }
    return s;
}

inline TypeList TypeList::parse(const std::string& s) {
    std::vector<CartanType> parts;
    size_t start = 0;
    while (start <= s.size()) {
        size_t end = s.find('+', start);
        if (end == std::string::npos) end = s.size();
        if (end == start) throw IllegalType("empty component in '" + s + "'");
        parts.push_back(CartanType::parse(s.substr(start, end - start)));
        if (end == s.size()) break;
        start = end + 1;
    }
    if (parts.empty()) throw IllegalType("empty type string");
    return TypeList(std::move(parts));
}

} // namespace coxeter
