#pragma once

#include <cstdint>
#include <vector>

#include "titszeta/poly.hpp"

namespace titszeta {

// Dense square integer matrix, row-major.
struct Mat64 {
    uint32_t n = 0;
    std::vector<int64_t> a;

    Mat64() = default;
    explicit Mat64(uint32_t n_) : n(n_), a((size_t)n_ * n_, 0) {}
    int64_t& at(uint32_t i, uint32_t j) { return a[(size_t)i * n + j]; }
    int64_t at(uint32_t i, uint32_t j) const { return a[(size_t)i * n + j]; }
};

// det(I - u*M) as an exact integer polynomial, i.e. the reversed
// characteristic polynomial. Computed modulo a deterministic sequence of
// 31-bit primes via Hessenberg reduction, then reconstructed by CRT under
// a sound coefficient bound:
//   |e_k| <= C(n,k) * prod of the k largest row (or column) L2 norms,
// and for Gram matrices additionally the Hadamard–Fischer bound
//   |e_k| <= C(n,k) * prod of the k largest diagonal entries.
// Pass is_psd = true only when M is known positive semidefinite
// (e.g. M = C C^T).
IntPolynomial charpoly_reversed(const Mat64& m, bool is_psd = false, int threads = 0);

// Exact reversed charpoly for a matrix known to be annihilated by
// prod (x - lambda_i) with pairwise distinct integer candidates:
// 1. certifies prod (M - lambda_i I) = 0 by modular products under an entry
//    bound (sound: the bound exceeds any possible nonzero entry),
// 2. takes multiplicity(lambda_i) = nullity of (M - lambda_i I) modulo one
//    prime where the lambda_i stay distinct; since p-nullity >= Q-nullity
//    and the candidate eigenspaces are independent mod p, nullities summing
//    to n forces exactness.
// Throws VerificationFailed when the candidate spectrum is wrong.
IntPolynomial charpoly_reversed_certified(const Mat64& m, const std::vector<Int>& candidates);

// Test oracle: Faddeev–LeVerrier in exact big integers, O(n^4).
IntPolynomial charpoly_reversed_exact_slow(const Mat64& m);

}  // namespace titszeta
