#pragma once

#include <map>
#include <vector>

#include "titszeta/partitions.hpp"

namespace titszeta {

// One-line notation, 0-indexed: perm[i] = w(i+1) - 1.
using Permutation = std::vector<uint8_t>;

Permutation perm_identity(uint32_t n);
Permutation perm_compose(const Permutation& w, const Permutation& v);  // w o v
Permutation perm_inverse(const Permutation& w);
uint32_t perm_inversions(const Permutation& w);
Permutation longest_element(uint32_t n);  // i -> n+1-i
// (1, k+1, 2k+1)(2, k+2, 2k+2)...(k, 2k, 3k) for n = 3k.
Permutation threefold_shift(uint32_t n);

// Deterministic reduced word (1-based generator indices, s_i = (i, i+1)):
// bubble-sort schedule moving the largest misplaced value into place.
// Product s_{i_1} ... s_{i_l} = w, l = inversion count.
std::vector<uint32_t> reduced_word(const Permutation& w);

// Element of the type-A Iwahori–Hecke algebra at numeric q (q = 1 gives the
// group algebra of S_n), sparse over the a_w basis.
struct HeckeElement {
    uint32_t n = 0;
    uint32_t q = 1;
    std::map<Permutation, Rat> coeffs;

    static HeckeElement basis(uint32_t n, uint32_t q, const Permutation& w, Rat c = 1);
    static HeckeElement identity(uint32_t n, uint32_t q);

    void prune();
    bool operator==(const HeckeElement& o) const {
        return n == o.n && q == o.q && coeffs == o.coeffs;
    }
};

// a_s a_w = a_{sw} when l(sw) > l(w), otherwise q a_{sw} + (q-1) a_w;
// general products fold generator multiplications along reduced words.
HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y);
HeckeElement hecke_add(const HeckeElement& x, const HeckeElement& y);
HeckeElement hecke_scale(const HeckeElement& x, const Rat& c);

// Matrix of left multiplication by x in the a_w basis (lex order on
// one-line notation). Cap n <= 7.
std::vector<std::vector<Rat>> regular_matrix(const HeckeElement& x);

struct SpringerReport {
    uint32_t n = 0, q = 0;
    bool central = false;
    bool annihilator_zero = false;
    bool ranks_match = false;
    // (lambda, eigenvalue q^{f_lambda}, multiplicity (deg psi_lambda)^2)
    std::vector<std::tuple<Partition, Int, Int>> spectrum;
};

// Checks on M = regular matrix of a_{w0}^2:
//   (a) a_{w0}^2 commutes with every a_s,
//   (b) prod_lambda (M - q^{f_lambda} I) = 0,
//   (c) rank(M - q^{f_lambda} I) = n! - (deg psi_lambda)^2.
// Throws VerificationFailed with a witness on any failure. Cap n <= 5.
SpringerReport verify_springer(uint32_t n, uint32_t q);

// phi_lambda(e_mu u e_mu) = Tr((e_mu u e_mu)_l, C S_n e_lambda), exact.
// Accepts any composition for lambda (consecutive blocks). Cap n <= 8.
Rat group_algebra_trace(uint32_t n, const Partition& mu, const Permutation& u,
                        const std::vector<int64_t>& lambda_blocks);

// psi_lambda(e_mu u e_mu) for lambda with at most 3 parts, via the
// alternating 2-row / 3-row expansions into induced characters.
Rat psi_trace(uint32_t n, const Partition& mu, const Permutation& u,
              const Partition& lam);

}  // namespace titszeta
