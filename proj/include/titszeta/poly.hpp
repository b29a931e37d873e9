#pragma once

#include <vector>

#include "titszeta/common.hpp"

namespace titszeta {

// Dense integer polynomial in u, coefficient index = degree.
// Trailing zeros are trimmed; the zero polynomial has empty coefficient list.
struct IntPolynomial {
    std::vector<Int> c;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPolynomial one() { return IntPolynomial({Int(1)}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Int coeff(size_t i) const { return i < c.size() ? c[i] : Int(0); }

    bool operator==(const IntPolynomial& o) const { return c == o.c; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_pow(const IntPolynomial& a, uint64_t e);

// 1 + c*u^t
IntPolynomial poly_binomial(const Int& coeff, unsigned t);

// Substitute u -> u^t.
IntPolynomial poly_stretch(const IntPolynomial& p, unsigned t);

// Power sums p_l = sum lambda_i^l, l=1..L, for P = prod(1 - lambda_i u),
// via Newton's identities in exact integers. Requires constant term 1.
std::vector<Int> newton_power_sums(const IntPolynomial& p, int L);

std::string poly_to_string(const IntPolynomial& p, const std::string& var = "u");

}  // namespace titszeta
