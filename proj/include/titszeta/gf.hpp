#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "titszeta/common.hpp"

namespace titszeta {

struct PrimePower {
    uint32_t p = 0;  // prime
    uint32_t e = 0;  // exponent >= 1
    uint32_t q = 0;  // p^e
};

// Exact arithmetic in GF(q), q = p^e <= kFieldCap.
//
// Elements are encoded as integers 0..q-1: the coefficient vector
// (c_0,...,c_{e-1}) of the polynomial basis, packed base p with c_0 least
// significant. Addition works digitwise on the packed encoding; for
// multiplication and inversion the nonzero elements are indexed by discrete
// log with respect to a fixed generator, so memory stays O(q) rather than
// O(q^2). For e > 1 the field is built from the lexicographically smallest
// monic irreducible polynomial of degree e over F_p, coefficients compared
// low-degree-first, which pins every downstream encoding.
class FieldTable {
public:
    static constexpr uint32_t kFieldCap = 1u << 16;

    explicit FieldTable(uint32_t q);

    const PrimePower& order() const { return pp_; }
    uint32_t q() const { return pp_.q; }
    uint32_t p() const { return pp_.p; }
    uint32_t e() const { return pp_.e; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;

    uint32_t generator() const { return exp_[1]; }
    // Modulus coefficients (c_0..c_e), c_e = 1; for e = 1 this is (-r, 1)
    // with x - r ... r = 0, i.e. just (0,1): informational only.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

private:
    PrimePower pp_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;  // exp_[i] = g^i, size q-1
    std::vector<uint32_t> log_;  // log_[exp_[i]] = i, log_[0] unused

    uint32_t mul_slow(uint32_t a, uint32_t b) const;  // polynomial arithmetic
};

// Deterministic field construction; results are cached per q for the
// lifetime of the process (tables are immutable, safe to share).
const FieldTable& make_field(uint32_t q);

// Decompose q as p^e or throw NotPrimePower.
PrimePower factor_prime_power(uint32_t q);

}  // namespace titszeta
