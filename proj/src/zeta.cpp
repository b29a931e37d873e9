#include "titszeta/zeta.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "titszeta/gf.hpp"

namespace titszeta {

void AlgebraicScalar::normalize() {
    if (unity_den == 0) throw Error("unity denominator must be positive");
    unity_num %= unity_den;
    uint32_t g = std::gcd(unity_num, unity_den);
    if (unity_num == 0) {
        unity_den = 1;
    } else if (g > 1) {
        unity_num /= g;
        unity_den /= g;
    }
}

bool AlgebraicScalar::operator<(const AlgebraicScalar& o) const {
    if (q_exp != o.q_exp) return q_exp < o.q_exp;
    if (unity_den != o.unity_den) return unity_den < o.unity_den;
    return unity_num < o.unity_num;
}

std::string AlgebraicScalar::to_string() const {
    std::ostringstream os;
    if (unity_den == 1)
        os << "+";
    else if (unity_den == 2)
        os << "-";
    else
        os << "e(" << unity_num << "/" << unity_den << ")*";
    os << "q^(" << q_exp << ")";
    return os.str();
}

Int FactoredZeta::eigenvalue_count() const {
    Int s = 0;
    for (const auto& [v, m] : eigenvalues) s += m;
    return s;
}

Int FactoredZeta::expanded_degree() const {
    Int s = 0;
    for (const auto& [p, m] : factors) s += Int(p.degree()) * m;
    return s;
}

void FactoredZeta::sort_canonical() {
    std::sort(eigenvalues.begin(), eigenvalues.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal eigenvalue entries
    std::vector<std::pair<AlgebraicScalar, Int>> ev;
    for (auto& e : eigenvalues) {
        if (!ev.empty() && ev.back().first == e.first)
            ev.back().second += e.second;
        else
            ev.push_back(std::move(e));
    }
    eigenvalues = std::move(ev);

    // factors sorted by (q-exponent of the leading eigenvalue they encode,
    // then shape); encode as (degree-normalized top coefficient magnitude).
    std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        const auto& pa = a.first.c;
        const auto& pb = b.first.c;
        Int ka = boost::multiprecision::abs(pa.back());
        Int kb = boost::multiprecision::abs(pb.back());
        // compare |top|^(1/deg) as top_a^deg_b vs top_b^deg_a
        Int la = int_pow(ka, (uint64_t)b.first.degree());
        Int lb = int_pow(kb, (uint64_t)a.first.degree());
        if (la != lb) return la < lb;
        return pa < pb;
    });
    std::vector<std::pair<IntPolynomial, Int>> fs;
    for (auto& f : factors) {
        if (!fs.empty() && fs.back().first == f.first)
            fs.back().second += f.second;
        else
            fs.push_back(std::move(f));
    }
    factors = std::move(fs);
}

namespace {

AlgebraicScalar scalar(uint32_t a, uint32_t t, Rat r) {
    AlgebraicScalar s{a, t, std::move(r)};
    s.normalize();
    return s;
}

void push_eig(FactoredZeta& f, uint32_t a, uint32_t t, const Rat& r, const Int& mult) {
    if (mult == 0) return;
    f.eigenvalues.emplace_back(scalar(a, t, r), mult);
}

void push_factor(FactoredZeta& f, IntPolynomial p, const Int& mult) {
    if (mult == 0) return;
    f.factors.emplace_back(std::move(p), mult);
}

uint64_t to_u64(const Int& v) { return v.convert_to<uint64_t>(); }

}  // namespace

FactoredZeta x0_generic(uint32_t n, uint32_t k, uint32_t q) {
    factor_prime_power(q);
    if (k < 1 || k > n - 1) throw BadDimension("need 1 <= k <= n-1");
    if (2 * k == n) throw SpecialCaseRequired("k = n/2 needs x0_special");
    const uint32_t i = std::min(k, n - k);
    FactoredZeta f;
    f.q = q;
    const Int qi(q);
    for (int64_t j = i; j >= 0; --j) {
        const int64_t s = -j * (n - j + 1) + 2 * (int64_t)i * (n - i);
        if (s < 0) throw VerificationFailed("negative exponent in x0 factorization");
        const Int d = q_binomial(n, j, qi) - q_binomial(n, j - 1, qi);
        push_factor(f, poly_binomial(-int_pow(qi, s), 2), d);
        push_eig(f, 0, 1, Rat(s, 2), d);
        push_eig(f, 1, 2, Rat(s, 2), d);
    }
    f.sort_canonical();
    return f;
}

FactoredZeta x0_special(uint32_t n, uint32_t q) {
    factor_prime_power(q);
    if (n % 2 != 0) throw BadParity("x0_special needs even n");
    const uint32_t k = n / 2;
    FactoredZeta f;
    f.q = q;
    const Int qi(q);
    for (int64_t j = k; j >= 0; --j) {
        const int64_t s = (int64_t)k * k - k * j + (j * j - j) / 2;
        const Int d = q_binomial(n, j, qi) - q_binomial(n, j - 1, qi);
        const bool neg = (j % 2) != 0;  // factor (1 - (-1)^j q^s u)
        push_factor(f, poly_binomial(neg ? int_pow(qi, s) : -int_pow(qi, s), 1), d);
        push_eig(f, neg ? 1 : 0, neg ? 2 : 1, Rat(s), d);
    }
    f.sort_canonical();
    return f;
}

FactoredZeta x2_generic(uint32_t n, std::array<uint32_t, 3> ijk, uint32_t q) {
    factor_prime_power(q);
    auto [i, j, k] = ijk;
    if (i + j + k != n || i == 0 || j == 0 || k == 0)
        throw BadMultiDimension("triple must be positive and sum to n");
    if (i == j && j == k) throw SpecialCaseRequired("equal triple needs x2_special");
    std::vector<uint32_t> mu_parts{i, j, k};
    std::sort(mu_parts.rbegin(), mu_parts.rend());
    const Partition mu(mu_parts);
    const Int qi(q);
    const Int two_wt = 2 * row_weight(mu);

    FactoredZeta f;
    f.q = q;
    for (const Partition& lam : partitions_of(n)) {
        if (lam.length() > 3 || !dominates(lam, mu)) continue;
        const Int kost = kostka_closed3(lam, mu);
        const Int d = d_lambda(lam, qi);
        const Int s = f_lambda(lam) - two_wt;
        if (s < 0) throw VerificationFailed("negative exponent in x2 factorization");
        const Int mult = d * kost;
        push_factor(f, poly_binomial(-int_pow(qi, to_u64(s)), 6), mult);
        for (uint32_t t = 0; t < 6; ++t) push_eig(f, t, 6, Rat(s, 6), mult);
    }
    f.sort_canonical();
    return f;
}

FactoredZeta x2_special(uint32_t n, uint32_t q) {
    factor_prime_power(q);
    if (n % 3 != 0 || n == 0) throw BadParity("x2_special needs n divisible by 3");
    const uint32_t k = n / 3;
    const Partition mu{k, k, k};
    const Int qi(q);
    const Int two_wt = 2 * row_weight(mu);

    FactoredZeta f;
    f.q = q;
    for (const Partition& lam : partitions_of(n)) {
        if (lam.length() > 3 || !dominates(lam, mu)) continue;
        const Int kost = kostka_closed3(lam, mu);
        const Int d = d_lambda(lam, qi);
        const Int s = f_lambda(lam) - two_wt;
        if (s < 0) throw VerificationFailed("negative exponent in x2 factorization");

        const uint32_t y = lam.part(1), z = lam.part(2);
        Int m1, mw;
        switch ((y - z) % 3) {
            case 0:
                m1 = (kost + 2) / 3;
                mw = (kost - 1) / 3;
                if (m1 * 3 != kost + 2 || mw * 3 != kost - 1)
                    throw VerificationFailed("cube-root multiplicities not integral");
                break;
            case 1:
                m1 = (kost - 2) / 3;
                mw = (kost + 1) / 3;
                if (m1 * 3 != kost - 2 || mw * 3 != kost + 1)
                    throw VerificationFailed("cube-root multiplicities not integral");
                break;
            default:
                if (kost % 3 != 0)
                    throw VerificationFailed("cube-root multiplicities not integral");
                m1 = mw = kost / 3;
        }
        if (m1 < 0 || mw < 0)
            throw VerificationFailed("negative cube-root multiplicity");

        const Int shared = m1 < mw ? m1 : mw;
        // conjugate triple (1-nu u^2)(1-w nu u^2)(1-w^2 nu u^2) = 1 - nu^3 u^6
        push_factor(f, poly_binomial(-int_pow(qi, to_u64(s)), 6), d * shared);
        if (m1 > mw) {
            if (s % 3 != 0) throw VerificationFailed("u^2 factor needs 3 | exponent");
            push_factor(f, poly_binomial(-int_pow(qi, to_u64(s / 3)), 2), d * (m1 - mw));
        } else if (mw > m1) {
            if (s % 3 != 0) throw VerificationFailed("u^2 factor needs 3 | exponent");
            const Int qs = int_pow(qi, to_u64(s / 3));
            IntPolynomial quart({Int(1), Int(0), qs, Int(0), qs * qs});
            push_factor(f, std::move(quart), d * (mw - m1));
        }
        // eigenvalues: square roots of w^j q^{s/3}
        push_eig(f, 0, 1, Rat(s, 6), d * m1);
        push_eig(f, 1, 2, Rat(s, 6), d * m1);
        push_eig(f, 1, 6, Rat(s, 6), d * mw);
        push_eig(f, 2, 3, Rat(s, 6), d * mw);
        push_eig(f, 1, 3, Rat(s, 6), d * mw);
        push_eig(f, 5, 6, Rat(s, 6), d * mw);
    }
    f.sort_canonical();
    return f;
}

namespace {

FactoredZeta multiply_factored(std::vector<FactoredZeta> parts, uint32_t q) {
    FactoredZeta f;
    f.q = q;
    for (auto& p : parts) {
        f.factors.insert(f.factors.end(), std::make_move_iterator(p.factors.begin()),
                         std::make_move_iterator(p.factors.end()));
        f.eigenvalues.insert(f.eigenvalues.end(), p.eigenvalues.begin(),
                             p.eigenvalues.end());
    }
    f.sort_canonical();
    return f;
}

}  // namespace

FactoredZeta x0_zeta(uint32_t n, uint32_t q) {
    if (n < 2) throw BadDimension("need n >= 2");
    std::vector<FactoredZeta> parts;
    for (uint32_t k = 1; 2 * k <= n; ++k)
        parts.push_back(2 * k == n ? x0_special(n, q) : x0_generic(n, k, q));
    return multiply_factored(std::move(parts), q);
}

FactoredZeta x2_zeta(uint32_t n, uint32_t q) {
    if (n < 2) throw BadDimension("need n >= 2");
    std::vector<FactoredZeta> parts;
    for (const auto& cls : mdim_classes(n)) {
        if (cls.is_special())
            parts.push_back(x2_special(n, q));
        else
            parts.push_back(x2_generic(n, {cls.i, cls.j, cls.k}, q));
    }
    return multiply_factored(std::move(parts), q);
}

FactoredZeta building_zeta(uint32_t n, uint32_t q) { return x2_zeta(n, q); }

std::vector<std::pair<AlgebraicScalar, Int>> x0_eigenvalue_view(uint32_t n, uint32_t q) {
    if (n < 2) return {};
    return x0_zeta(n, q).eigenvalues;
}

FactoredZeta tensor_factorization(const std::vector<std::pair<AlgebraicScalar, Int>>& e1,
                                  const std::vector<std::pair<AlgebraicScalar, Int>>& e2,
                                  uint32_t q) {
    // products of the two eigenvalue multisets
    std::map<std::pair<Rat, std::pair<uint32_t, uint32_t>>, Int> prod;
    for (const auto& [a, ma] : e1)
        for (const auto& [b, mb] : e2) {
            uint32_t t = std::lcm(a.unity_den, b.unity_den);
            uint32_t num = (a.unity_num * (t / a.unity_den) +
                            b.unity_num * (t / b.unity_den)) % t;
            AlgebraicScalar s = scalar(num, t, a.q_exp + b.q_exp);
            prod[{s.q_exp, {s.unity_den, s.unity_num}}] += ma * mb;
        }

    FactoredZeta f;
    f.q = q;
    const Int qi(q);
    for (auto it = prod.begin(); it != prod.end(); ++it) {
        const auto& [r, unity] = it->first;
        const auto& [t, a] = unity;
        (void)a;
        const Int mult = it->second;
        if (mult == 0) continue;
        if (t != 1 && t != 2)
            throw ExpansionNotIntegral("tensor eigenvalue with unity order " +
                                       std::to_string(t));
        const bool positive = (t == 1);
        const Int num = boost::multiprecision::numerator(r);
        const Int den = boost::multiprecision::denominator(r);
        if (den == 1) {
            // integral exponent: integral factor in u^2 on its own
            Int c = int_pow(qi, to_u64(num));
            push_factor(f, poly_binomial(positive ? -c : c, 2), mult);
            if (positive) {
                push_eig(f, 0, 1, r / 2, mult);
                push_eig(f, 1, 2, r / 2, mult);
            } else {
                push_eig(f, 1, 4, r / 2, mult);
                push_eig(f, 3, 4, r / 2, mult);
            }
        } else if (den == 2) {
            // half-integer exponent: merge the +- pair into 1 - q^{2r} u^4
            AlgebraicScalar opp = scalar(positive ? 1 : 0, 2, r);
            auto jt = prod.find({opp.q_exp, {opp.unity_den, opp.unity_num}});
            if (jt == prod.end() || jt->second != mult)
                throw ExpansionNotIntegral("unpaired half-integer exponent q^(" +
                                           r.str() + ")");
            jt->second = 0;  // consume the partner (map order visits t=1 first)
            push_factor(f, poly_binomial(-int_pow(qi, to_u64(num)), 4), mult);
            push_eig(f, 0, 1, r / 2, mult);
            push_eig(f, 1, 2, r / 2, mult);
            push_eig(f, 1, 4, r / 2, mult);
            push_eig(f, 3, 4, r / 2, mult);
        } else {
            throw ExpansionNotIntegral("tensor exponent denominator " + den.str());
        }
    }
    f.sort_canonical();
    return f;
}

FactoredZeta product_building_zeta(const std::vector<uint32_t>& dims, uint32_t q) {
    for (uint32_t n : dims)
        if (n < 1) throw BadDimension("factor dimensions must be >= 1");
    std::vector<FactoredZeta> parts;
    for (uint32_t n : dims)
        if (n >= 2) parts.push_back(building_zeta(n, q));
    for (size_t i = 0; i < dims.size(); ++i)
        for (size_t j = i + 1; j < dims.size(); ++j) {
            auto ei = x0_eigenvalue_view(dims[i], q);
            auto ej = x0_eigenvalue_view(dims[j], q);
            if (ei.empty() || ej.empty()) continue;
            parts.push_back(tensor_factorization(ei, ej, q));
        }
    return multiply_factored(std::move(parts), q);
}

IntPolynomial expand(const FactoredZeta& f) {
    IntPolynomial r = IntPolynomial::one();
    for (const auto& [p, m] : f.factors) r = poly_mul(r, poly_pow(p, to_u64(m)));
    return r;
}

// --- eigenvalue-view expansion in Z[zeta_T, q^{1/6}] -----------------------

namespace {

// Phi_T for the supported unity orders, coefficients low-degree-first.
std::vector<int64_t> cyclotomic(uint32_t t) {
    switch (t) {
        case 1: return {-1, 1};
        case 2: return {1, 1};
        case 3: return {1, 1, 1};
        case 4: return {1, 0, 1};
        case 6: return {1, -1, 1};
        case 12: return {1, 0, -1, 0, 1};
        default: throw ExpansionNotIntegral("unsupported unity order " + std::to_string(t));
    }
}

struct CycloRing {
    uint32_t T;              // unity order
    uint32_t phi;            // degree of Phi_T
    std::vector<int64_t> f;  // Phi_T, monic
    uint32_t W;              // root order of q: w^W = q
    Int q;

    using Elem = std::vector<Int>;  // size phi*W, index a*W+b for x^a w^b

    Elem zero() const { return Elem((size_t)phi * W, Int(0)); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    // zeta^A * w^S
    Elem monomial(uint32_t A, uint64_t S) const {
        Elem e = zero();
        Int scale = int_pow(q, S / W);
        uint32_t wpow = (uint32_t)(S % W);
        std::vector<Int> xs(A + 1, Int(0));
        xs[A] = 1;
        reduce_x(xs);
        for (uint32_t a = 0; a < phi && a < xs.size(); ++a)
            e[(size_t)a * W + wpow] = xs[a] * scale;
        return e;
    }
    void reduce_x(std::vector<Int>& xs) const {
        for (size_t d = xs.size(); d-- > phi;) {
            Int c = xs[d];
            if (c == 0) continue;
            xs[d] = 0;
            for (uint32_t i = 0; i < phi; ++i) xs[d - phi + i] -= c * f[i];
        }
        xs.resize(phi);
    }
    Elem mul(const Elem& a, const Elem& b) const {
        const uint32_t wspan = 2 * W - 1;
        std::vector<Int> acc((size_t)(2 * phi - 1) * wspan, Int(0));
        for (uint32_t ax = 0; ax < phi; ++ax)
            for (uint32_t aw = 0; aw < W; ++aw) {
                const Int& va = a[(size_t)ax * W + aw];
                if (va == 0) continue;
                for (uint32_t bx = 0; bx < phi; ++bx)
                    for (uint32_t bw = 0; bw < W; ++bw) {
                        const Int& vb = b[(size_t)bx * W + bw];
                        if (vb == 0) continue;
                        acc[(size_t)(ax + bx) * wspan + aw + bw] += va * vb;
                    }
            }
        Elem out = zero();
        for (uint32_t w = 0; w < wspan; ++w) {
            std::vector<Int> xs(2 * phi - 1, Int(0));
            for (uint32_t x = 0; x < 2 * phi - 1; ++x) xs[x] = acc[(size_t)x * wspan + w];
            reduce_x(xs);
            const Int scale = w >= W ? q : Int(1);
            const uint32_t wr = w >= W ? w - W : w;
            for (uint32_t x = 0; x < phi; ++x) out[(size_t)x * W + wr] += xs[x] * scale;
        }
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
        return r;
    }
    bool is_int(const Elem& a, Int& out) const {
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i] != 0) return false;
        out = a[0];
        return true;
    }
};

}  // namespace

IntPolynomial expand_eigenvalue_view(const FactoredZeta& f) {
    uint32_t T = 1, W = 1;
    for (const auto& [v, m] : f.eigenvalues) {
        T = std::lcm(T, v.unity_den);
        Int den = boost::multiprecision::denominator(v.q_exp);
        if (den > 12) throw ExpansionNotIntegral("exponent denominator beyond 12");
        W = std::lcm(W, den.convert_to<uint32_t>());
    }
    CycloRing ring{T, (uint32_t)(cyclotomic(T).size() - 1), cyclotomic(T), W, Int(f.q)};

    std::vector<CycloRing::Elem> poly{ring.one()};
    for (const auto& [v, m] : f.eigenvalues) {
        // lambda = zeta_T^(A) w^S, S = W*q_exp a nonnegative integer
        Rat sw = v.q_exp * W;
        if (boost::multiprecision::denominator(sw) != 1 || sw < 0)
            throw ExpansionNotIntegral("eigenvalue exponent denominator beyond " +
                                       std::to_string(W));
        uint32_t A = v.unity_num * (T / v.unity_den);
        CycloRing::Elem lam =
            ring.monomial(A, boost::multiprecision::numerator(sw).convert_to<uint64_t>());
        uint64_t mult = to_u64(m);
        for (uint64_t rep = 0; rep < mult; ++rep) {
            // poly *= (1 - lam u)
            std::vector<CycloRing::Elem> next(poly.size() + 1, ring.zero());
            for (size_t i = 0; i < poly.size(); ++i) {
                for (size_t c = 0; c < next[i].size(); ++c) next[i][c] += poly[i][c];
                next[i + 1] = ring.sub(next[i + 1], ring.mul(lam, poly[i]));
            }
            poly = std::move(next);
        }
    }
    std::vector<Int> coeffs(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        Int v;
        if (!ring.is_int(poly[i], v))
            throw ExpansionNotIntegral("eigenvalue-view expansion left the integers");
        coeffs[i] = v;
    }
    return IntPolynomial{std::move(coeffs)};
}

std::string factored_to_string(const FactoredZeta& f) {
    if (f.factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, m] : f.factors) {
        if (!first) os << " ";
        first = false;
        os << "(" << poly_to_string(p) << ")";
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

}  // namespace titszeta
