#pragma once

#include <string>
#include <vector>

#include "titszeta/charpoly.hpp"
#include "titszeta/poly.hpp"

namespace titszeta {

// Finite simple digraph: 0/1 adjacency without self-loops, stored as
// out-neighbor lists. Undirected graphs carry both directions.
struct Digraph {
    uint32_t vertex_count = 0;
    std::vector<std::vector<uint32_t>> out;  // sorted neighbor lists
    std::vector<std::string> vertex_labels;  // optional, may be empty

    explicit Digraph(uint32_t n = 0) : vertex_count(n), out(n) {}

    void add_edge(uint32_t u, uint32_t v);
    bool has_edge(uint32_t u, uint32_t v) const;
    size_t edge_count() const;
    uint32_t max_out_degree() const;

    Mat64 adjacency() const;
};

// N_c(1..L): exact closed-walk counts via iterated products. Uses an int64
// fast path when (max degree)^L fits, the pairing Tr(A^{a+b}) =
// sum_{ij} (A^a)_{ij} (A^b)_{ji} with dense int64 powers when only
// (max degree)^{ceil(L/2)} fits, and big-integer vectors otherwise.
std::vector<Int> closed_walk_counts(const Digraph& x, int L);

// det(I - uA), exact. Throws TooLargeForExact above the cap.
IntPolynomial inverse_zeta_polynomial(const Digraph& x, uint32_t cap = 4096,
                                      int threads = 0);

Digraph disjoint_union(const Digraph& a, const Digraph& b);
Digraph tensor_product(const Digraph& a, const Digraph& b);

// Verify (or discover by BFS when `hint` is empty) a vertex typing that
// makes every edge advance type by exactly 1 mod arity. Exhaustive check;
// throws NotCyclicPartite.
std::vector<uint32_t> cyclic_partite_types(const Digraph& x, uint32_t arity,
                                           const std::vector<uint32_t>& hint = {});

// The type-0 block of A^arity under a valid typing, computed by sparse
// row-restricted products (entries are walk counts, must fit int64).
Mat64 partite_block(const Digraph& x, uint32_t arity, const std::vector<uint32_t>& typing);

// det(I - uA) for a verified cyclic `arity`-partite digraph via the block
// determinant identity det(I - uA) = det(I - u^arity * A_0 A_1 ... A_{arity-1}).
// Exact; the chained block product must fit int64.
IntPolynomial inverse_zeta_cyclic_reduced(const Digraph& x, uint32_t arity,
                                          const std::vector<uint32_t>& typing,
                                          int threads = 0);

// Chained block product A_0 A_1 ... A_{arity-1} (maps type-0 to type-0);
// equals partite_block mathematically but follows a different pipeline.
Mat64 cyclic_block_product(const Digraph& x, uint32_t arity,
                           const std::vector<uint32_t>& typing);

}  // namespace titszeta
