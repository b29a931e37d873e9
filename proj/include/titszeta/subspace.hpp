#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "titszeta/gf.hpp"

namespace titszeta {

// A subspace of F_q^n held in canonical reduced row echelon form.
// Equal subspaces have bit-identical canonical matrices, so equality and
// ordering are plain lexicographic comparisons on the flattened rows.
struct Subspace {
    uint32_t n = 0;                            // ambient dimension
    std::vector<std::vector<uint32_t>> rows;   // RREF basis, may be empty (zero space)
    std::vector<uint32_t> pivot_cols;

    uint32_t dim() const { return static_cast<uint32_t>(rows.size()); }

    bool operator==(const Subspace& o) const { return n == o.n && rows == o.rows; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;

    std::vector<uint32_t> flattened() const;
};

struct DirectedFlag {
    Subspace first;
    Subspace second;

    std::pair<uint32_t, uint32_t> mdim() const { return {first.dim(), second.dim()}; }
    DirectedFlag reversed() const { return {second, first}; }

    bool operator==(const DirectedFlag& o) const {
        return first == o.first && second == o.second;
    }
    bool operator<(const DirectedFlag& o) const {
        if (first != o.first) return first < o.first;
        return second < o.second;
    }
};

// Row-space canonical form. Throws ZeroSpace when all rows vanish.
Subspace canonicalize(const std::vector<std::vector<uint32_t>>& rows, uint32_t n,
                      const FieldTable& F);

Subspace sum(const Subspace& a, const Subspace& b, const FieldTable& F);
Subspace intersect(const Subspace& a, const Subspace& b, const FieldTable& F);
// True iff a ⊕ b = F_q^n.
bool is_direct_sum(const Subspace& a, const Subspace& b, const FieldTable& F);
// True iff inner ⊆ outer.
bool contains(const Subspace& outer, const Subspace& inner, const FieldTable& F);

// All k-dim subspaces of F_q^n, sorted lexicographically by flattened
// canonical matrix; length is the Gaussian binomial [n k]_q.
std::vector<Subspace> enumerate_grassmannian(uint32_t n, uint32_t k, const FieldTable& F);

// All directed flags of the given multi-dimension, sorted.
std::vector<DirectedFlag> enumerate_directed_flags(uint32_t n, const FieldTable& F,
                                                   std::pair<uint32_t, uint32_t> mdim);

// --- optional Grassmannian cache -------------------------------------------
// Versioned JSON {"version":1,"n":..,"q":..,"k":..,"bases":[[row ints]]},
// one file per (n,q,k); rows packed base q, column 0 least significant.
struct CacheConfig {
    bool enabled = false;
    std::string dir;  // empty = resolve from TITS_ZETA_CACHE / ~/.cache/titszeta
};

// Process-wide cache switch consulted by graph construction.
CacheConfig& global_cache();

std::string resolve_cache_dir(const CacheConfig& cfg);
std::vector<Subspace> enumerate_grassmannian_cached(uint32_t n, uint32_t k,
                                                    const FieldTable& F,
                                                    const CacheConfig& cfg);

uint64_t pack_row(const std::vector<uint32_t>& row, uint32_t q);
std::vector<uint32_t> unpack_row(uint64_t v, uint32_t q, uint32_t n);

}  // namespace titszeta
