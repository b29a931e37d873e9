#include "titszeta/poly.hpp"

#include <sstream>

namespace titszeta {

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    IntPolynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

IntPolynomial poly_pow(const IntPolynomial& a, uint64_t e) {
    IntPolynomial r = IntPolynomial::one();
    IntPolynomial base = a;
    while (e) {
        if (e & 1) r = poly_mul(r, base);
        if (e >>= 1) base = poly_mul(base, base);
    }
    return r;
}

IntPolynomial poly_binomial(const Int& coeff, unsigned t) {
    IntPolynomial r;
    r.c.assign(t + 1, Int(0));
    r.c[0] = 1;
    r.c[t] = coeff;
    r.trim();
    return r;
}

IntPolynomial poly_stretch(const IntPolynomial& p, unsigned t) {
    if (t == 1 || p.is_zero()) return p;
    IntPolynomial r;
    r.c.assign((p.c.size() - 1) * t + 1, Int(0));
    for (size_t i = 0; i < p.c.size(); ++i) r.c[i * t] = p.c[i];
    r.trim();
    return r;
}

std::vector<Int> newton_power_sums(const IntPolynomial& p, int L) {
    if (p.is_zero() || p.c[0] != 1)
        throw VerificationFailed("newton_power_sums requires constant term 1");
    // P = 1 + a_1 u + ... ; p_k = -k a_k - sum_{i=1}^{k-1} a_i p_{k-i}
    std::vector<Int> ps(L + 1, Int(0));
    for (int k = 1; k <= L; ++k) {
        Int s = -Int(k) * p.coeff(k);
        for (int i = 1; i < k; ++i) {
            if (p.coeff(i) == 0) continue;
            s -= p.coeff(i) * ps[k - i];
        }
        ps[k] = s;
    }
    ps.erase(ps.begin());
    return ps;
}

std::string poly_to_string(const IntPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.c.size(); ++i) {
        const Int& a = p.c[i];
        if (a == 0) continue;
        Int abs_a = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << abs_a;
        } else {
            if (abs_a != 1) os << abs_a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace titszeta
