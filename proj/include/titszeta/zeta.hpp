#pragma once

#include <string>
#include <vector>

#include "titszeta/building.hpp"
#include "titszeta/partitions.hpp"
#include "titszeta/poly.hpp"

namespace titszeta {

// zeta * q^r with zeta = e^{2 pi i a/t}, r an exact nonnegative rational.
struct AlgebraicScalar {
    uint32_t unity_num = 0;  // a
    uint32_t unity_den = 1;  // t; 0 <= a < t, gcd(a,t) = 1 or (a,t) = (0,1)
    Rat q_exp = 0;           // r

    void normalize();
    bool operator==(const AlgebraicScalar& o) const {
        return unity_num == o.unity_num && unity_den == o.unity_den && q_exp == o.q_exp;
    }
    bool operator<(const AlgebraicScalar& o) const;
    std::string to_string() const;
};

// A factored inverse zeta function: integral polynomial factors with
// multiplicities plus the eigenvalue multiset they expand from.
struct FactoredZeta {
    uint32_t q = 0;
    std::vector<std::pair<IntPolynomial, Int>> factors;        // (factor, multiplicity)
    std::vector<std::pair<AlgebraicScalar, Int>> eigenvalues;  // (value, multiplicity)

    Int eigenvalue_count() const;   // sum of multiplicities
    Int expanded_degree() const;    // degree of the expansion
    void sort_canonical();
};

// Inverse zeta of X0^{[k]} for k != n/2:
//   prod_{j=0}^{i} (1 - q^{-j(n-j+1)+2i(n-i)} u^2)^{d_j},  i = min(k, n-k),
// with d_j = [n j]_q - [n j-1]_q.
FactoredZeta x0_generic(uint32_t n, uint32_t k, uint32_t q);

// Inverse zeta of X0^{[k]} for n = 2k:
//   prod_{j=0}^{k} (1 - (-1)^j q^{k^2-kj+(j^2-j)/2} u)^{d_j}.
FactoredZeta x0_special(uint32_t n, uint32_t q);

// Inverse zeta of a six-element multi-dimension class with triple (i,j,k):
//   prod_{lam >= mu} (1 - q^{f_lam - 2 wt_r(mu)} u^6)^{d_lam K_{lam,mu}},
// mu = sorted(i,j,k).
FactoredZeta x2_generic(uint32_t n, std::array<uint32_t, 3> ijk, uint32_t q);

// Inverse zeta of the bipartite class for n = 3k, mu = (k,k,k); cube-root
// eigenvalue multiplicities split by (y - z) mod 3, conjugate pairs kept as
// integral quartics 1 + q^s u^2 + q^{2s} u^4.
FactoredZeta x2_special(uint32_t n, uint32_t q);

// Products over component classes.
FactoredZeta x0_zeta(uint32_t n, uint32_t q);
FactoredZeta x2_zeta(uint32_t n, uint32_t q);

// Edge zeta of the building: equal to x2_zeta.
FactoredZeta building_zeta(uint32_t n, uint32_t q);

// Eigenvalue multiset of the full X0(F_q^n); empty for n < 2.
std::vector<std::pair<AlgebraicScalar, Int>> x0_eigenvalue_view(uint32_t n, uint32_t q);

// Pairwise products of two Galois-closed eigenvalue views followed by the
// u -> u^2 substitution; +-pairs with half-integer exponents merge into
// (1 - q^{s+t} u^4) factors. Throws ExpansionNotIntegral on any leftover.
FactoredZeta tensor_factorization(const std::vector<std::pair<AlgebraicScalar, Int>>& e1,
                                  const std::vector<std::pair<AlgebraicScalar, Int>>& e2,
                                  uint32_t q);

// Z(B(V_1,...,V_r)) = prod_i Z(B(V_i)) * prod_{i<j} Z_c(X0(V_i) x X0(V_j), u^2).
FactoredZeta product_building_zeta(const std::vector<uint32_t>& dims, uint32_t q);

// Exact product of the stored factors.
IntPolynomial expand(const FactoredZeta& f);

// Exact expansion of the eigenvalue view in Z[zeta_T, q^{1/6}]; the result
// must land in Z[u]. Intended for cross-checking at small degree.
IntPolynomial expand_eigenvalue_view(const FactoredZeta& f);

std::string factored_to_string(const FactoredZeta& f);

}  // namespace titszeta
