#pragma once

#include <string>
#include <utility>
#include <vector>

#include "titszeta/digraph.hpp"
#include "titszeta/subspace.hpp"

namespace titszeta {

// Orbit of a multi-dimension under the step map f, with the derived triple
// (i, j, k), i + j + k = n, read off the lexicographically smallest
// representative (a, b) with a < b as (a, b-a, n-b).
struct MDimClass {
    std::pair<uint32_t, uint32_t> representative;
    std::vector<std::pair<uint32_t, uint32_t>> orbit;  // in step order
    uint32_t i = 0, j = 0, k = 0;

    uint32_t size() const { return (uint32_t)orbit.size(); }
    bool is_special() const { return size() == 2; }  // i = j = k
};

// f(a,b) = (b, b-a) if b > a, (b, n+b-a) if b < a.
std::pair<uint32_t, uint32_t> mdim_step(uint32_t a, uint32_t b, uint32_t n);

// All orbits for ambient dimension n, ordered by representative.
std::vector<MDimClass> mdim_classes(uint32_t n);

// A component of X0 or X2 together with its vertex dictionary.
struct BuildingGraph {
    Digraph graph;
    uint32_t n = 0;
    uint32_t q = 0;
    std::string component;                 // "[k]" or "[(a,b)]"
    std::vector<Subspace> vertex_subspaces;  // X0 graphs
    std::vector<DirectedFlag> vertex_flags;  // X2 graphs
    uint32_t arity = 0;                    // cyclic partite arity; 0 for full unions
    std::vector<uint32_t> typing;          // valid when arity > 0
};

// Vertices: subspaces of dimensions {k, n-k}; undirected edges exactly
// where the two subspaces sum directly to the ambient space. Connectivity
// is asserted. Requires 1 <= k <= n/2.
BuildingGraph build_x0_component(uint32_t n, uint32_t q, uint32_t k);

// Vertices: directed flags with multi-dimension in the class; directed
// edges by the literal two-branch rule on (W1,W2) -> (W2,W4):
// W1 (+) W4 = W2, or (W1 cap W4 = W2 and W1 + W4 = V).
BuildingGraph build_x2_component(uint32_t n, uint32_t q, const MDimClass& cls);

BuildingGraph build_x0_full(uint32_t n, uint32_t q);
BuildingGraph build_x2_full(uint32_t n, uint32_t q);

// Independent geodesic-cycle counters: depth-first enumeration of vertex
// sequences in the (joined) building, checking the opposite-in-link
// condition literally at every step including the wraparound. No digraph
// machinery involved.
struct GeodesicCaps {
    uint64_t max_qn = 81;  // cap on q^n per factor
    int max_length = 8;
};

std::vector<Int> count_geodesic_cycles_direct(uint32_t n, uint32_t q, int L,
                                              const GeodesicCaps& caps = {});
std::vector<Int> count_geodesic_cycles_product(const std::vector<uint32_t>& dims,
                                               uint32_t q, int L,
                                               const GeodesicCaps& caps = {});

}  // namespace titszeta
