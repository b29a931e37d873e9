#include "titszeta/gf.hpp"

#include <map>
#include <mutex>

namespace titszeta {

PrimePower factor_prime_power(uint32_t q) {
    if (q < 2) throw NotPrimePower("q must be at least 2, got " + std::to_string(q));
    uint32_t p = 0;
    for (uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1, q};  // q itself prime
    uint32_t e = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1)
        throw NotPrimePower(std::to_string(q) + " has two distinct prime factors");
    return {p, e, q};
}

namespace {

// Polynomials over F_p as coefficient vectors, low degree first.
using Poly = std::vector<uint32_t>;

Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
    // f monic of degree d
    const size_t d = f.size() - 1;
    while (a.size() > d) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - d;
        if (lead != 0) {
            for (size_t i = 0; i <= d; ++i) {
                uint64_t sub = (uint64_t)lead * f[i] % p;
                uint32_t& tgt = a[shift + i];
                tgt = (uint32_t)((tgt + p - sub) % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (uint32_t)((r[i + j] + (uint64_t)a[i] * b[j]) % p);
    }
    return poly_mod(std::move(r), f, p);
}

bool has_factor_of_degree_le(const Poly& f, uint32_t p, size_t dmax) {
    // Trial division by every monic polynomial of degree 1..dmax.
    for (size_t d = 1; d <= dmax; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) {
                g[i] = (uint32_t)(c % p);
                c /= p;
            }
            g[d] = 1;
            Poly r = poly_mod(f, g, p);
            if (r.empty()) return true;
        }
    }
    return false;
}

Poly smallest_irreducible(uint32_t p, uint32_t e) {
    // Lexicographically smallest monic irreducible of degree e,
    // coefficients (c_0,...,c_{e-1}) compared low-degree-first.
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        Poly f(e + 1, 0);
        // low-degree-first lex order means c_0 is the MOST significant
        // comparison key, so enumerate c_0 in the outermost loop:
        uint64_t c = code;
        for (uint32_t i = 0; i < e; ++i) {
            uint64_t base = 1;
            for (uint32_t j = i + 1; j < e; ++j) base *= p;
            f[i] = (uint32_t)(c / base);
            c %= base;
        }
        f[e] = 1;
        if (f[0] == 0) continue;  // divisible by x
        if (!has_factor_of_degree_le(f, p, e / 2)) return f;
    }
    throw Error("no irreducible polynomial found (unreachable)");
}

uint32_t pack(const Poly& a, uint32_t p) {
    uint32_t v = 0, mult = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        v += a[i] * mult;
        mult *= p;
    }
    return v;
}

Poly unpack(uint32_t v, uint32_t p, uint32_t e) {
    Poly a(e, 0);
    for (uint32_t i = 0; i < e; ++i) {
        a[i] = v % p;
        v /= p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace

FieldTable::FieldTable(uint32_t q) {
    if (q > kFieldCap)
        throw CapExceeded("field order " + std::to_string(q) + " exceeds cap " +
                          std::to_string(kFieldCap));
    pp_ = factor_prime_power(q);
    const uint32_t p = pp_.p, e = pp_.e;

    Poly f;
    if (e == 1) {
        f = {0, 1};  // x; unused for arithmetic, kept for reporting
    } else {
        f = smallest_irreducible(p, e);
    }
    modulus_ = f;

    // Find the smallest (in packed encoding) multiplicative generator and
    // fill exp/log tables: exp_[i] = g^i, exp_[0] = 1, exp_[1] = g.
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    for (uint32_t cand = 1; cand < q; ++cand) {
        Poly g = unpack(cand, p, e);
        Poly acc = {1};
        uint32_t order = 0;
        std::vector<uint32_t> powers;
        powers.reserve(q - 1);
        do {
            powers.push_back(pack(acc, p));
            acc = (e == 1) ? Poly{(uint32_t)((uint64_t)acc[0] * cand % p)}
                           : poly_mulmod(acc, g, f, p);
            ++order;
        } while (!(acc.size() == 1 && acc[0] == 1) && order < q);
        if (order == q - 1) {
            for (uint32_t i = 0; i < q - 1; ++i) {
                exp_[i] = powers[i];
                log_[powers[i]] = i;
            }
            break;
        }
    }
    if (exp_[0] != 1) throw Error("no generator found (field construction bug)");
}

uint32_t FieldTable::add(uint32_t a, uint32_t b) const {
    const uint32_t p = pp_.p;
    if (pp_.e == 1) return (a + b) % p;
    uint32_t r = 0, mult = 1;
    while (a || b) {
        uint32_t da = a % p, db = b % p;
        r += ((da + db) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return r;
}

uint32_t FieldTable::neg(uint32_t a) const {
    const uint32_t p = pp_.p;
    if (pp_.e == 1) return a == 0 ? 0 : p - a;
    uint32_t r = 0, mult = 1;
    while (a) {
        uint32_t d = a % p;
        r += (d == 0 ? 0 : p - d) * mult;
        a /= p;
        mult *= p;
    }
    return r;
}

uint32_t FieldTable::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t s = (uint64_t)log_[a] + log_[b];
    if (s >= pp_.q - 1) s -= pp_.q - 1;
    return exp_[s];
}

uint32_t FieldTable::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inv(0) in GF(" + std::to_string(pp_.q) + ")");
    uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : pp_.q - 1 - l];
}

const FieldTable& make_field(uint32_t q) {
    static std::map<uint32_t, std::unique_ptr<FieldTable>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::make_unique<FieldTable>(q)).first;
    return *it->second;
}

}  // namespace titszeta
