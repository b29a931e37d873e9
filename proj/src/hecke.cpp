#include "titszeta/hecke.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace titszeta {

Permutation perm_identity(uint32_t n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Permutation perm_compose(const Permutation& w, const Permutation& v) {
    if (w.size() != v.size()) throw MixedParameters("composing permutations of different n");
    Permutation r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = w[v[i]];
    return r;
}

Permutation perm_inverse(const Permutation& w) {
    Permutation r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[w[i]] = (uint8_t)i;
    return r;
}

uint32_t perm_inversions(const Permutation& w) {
    uint32_t inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Permutation longest_element(uint32_t n) {
    Permutation w(n);
    for (uint32_t i = 0; i < n; ++i) w[i] = (uint8_t)(n - 1 - i);
    return w;
}

Permutation threefold_shift(uint32_t n) {
    if (n % 3 != 0) throw BadParity("threefold shift needs n divisible by 3");
    const uint32_t k = n / 3;
    Permutation w(n);
    for (uint32_t i = 0; i < n; ++i) w[i] = (uint8_t)((i + k) % n);
    return w;
}

std::vector<uint32_t> reduced_word(const Permutation& w) {
    // Sort a copy by moving the largest misplaced value rightwards; a swap
    // of positions (p, p+1) is a right multiplication by s_{p+1}, so the
    // word read backwards multiplies out to w.
    Permutation a = w;
    const uint32_t n = (uint32_t)a.size();
    std::vector<uint32_t> rec;
    for (uint32_t v = n; v-- > 0;) {
        uint32_t p = 0;
        while (a[p] != v) ++p;
        while (p < v) {
            std::swap(a[p], a[p + 1]);
            rec.push_back(p + 1);
            ++p;
        }
    }
    std::reverse(rec.begin(), rec.end());
    return rec;
}

HeckeElement HeckeElement::basis(uint32_t n, uint32_t q, const Permutation& w, Rat c) {
    if (w.size() != n) throw MixedParameters("basis permutation has wrong n");
    HeckeElement e;
    e.n = n;
    e.q = q;
    if (c != 0) e.coeffs[w] = std::move(c);
    return e;
}

HeckeElement HeckeElement::identity(uint32_t n, uint32_t q) {
    return basis(n, q, perm_identity(n));
}

void HeckeElement::prune() {
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = it->second == 0 ? coeffs.erase(it) : std::next(it);
}

HeckeElement hecke_add(const HeckeElement& x, const HeckeElement& y) {
    if (x.n != y.n || x.q != y.q) throw MixedParameters("adding mixed Hecke elements");
    HeckeElement r = x;
    for (const auto& [w, c] : y.coeffs) r.coeffs[w] += c;
    r.prune();
    return r;
}

HeckeElement hecke_scale(const HeckeElement& x, const Rat& c) {
    HeckeElement r = x;
    for (auto& [w, v] : r.coeffs) v *= c;
    r.prune();
    return r;
}

namespace {

// a_{s_i} * x by the quadratic rule; i is 1-based.
HeckeElement generator_left_mul(uint32_t i, const HeckeElement& x) {
    HeckeElement r;
    r.n = x.n;
    r.q = x.q;
    Permutation s = perm_identity(x.n);
    std::swap(s[i - 1], s[i]);
    const Rat q(x.q);
    for (const auto& [w, c] : x.coeffs) {
        Permutation sw = perm_compose(s, w);
        if (perm_inversions(sw) > perm_inversions(w)) {
            r.coeffs[sw] += c;
        } else {
            r.coeffs[sw] += q * c;
            r.coeffs[w] += (q - 1) * c;
        }
    }
    r.prune();
    return r;
}

}  // namespace

HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y) {
    if (x.n != y.n || x.q != y.q) throw MixedParameters("multiplying mixed Hecke elements");
    HeckeElement total;
    total.n = x.n;
    total.q = x.q;
    for (const auto& [u, cu] : x.coeffs) {
        auto word = reduced_word(u);
        HeckeElement acc = y;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = generator_left_mul(*it, acc);
        for (const auto& [w, c] : acc.coeffs) total.coeffs[w] += cu * c;
    }
    total.prune();
    return total;
}

namespace {

std::vector<Permutation> all_permutations(uint32_t n) {
    Permutation w = perm_identity(n);
    std::vector<Permutation> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

std::vector<std::vector<Rat>> regular_matrix(const HeckeElement& x) {
    if (x.n > 7) throw ScaleCap("regular_matrix capped at n <= 7");
    const auto basis = all_permutations(x.n);
    const size_t N = basis.size();
    std::map<Permutation, size_t> index;
    for (size_t i = 0; i < N; ++i) index[basis[i]] = i;
    std::vector<std::vector<Rat>> m(N, std::vector<Rat>(N, Rat(0)));
    for (size_t j = 0; j < N; ++j) {
        HeckeElement col = hecke_multiply(x, HeckeElement::basis(x.n, x.q, basis[j]));
        for (const auto& [w, c] : col.coeffs) m[index.at(w)][j] = c;
    }
    return m;
}

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    const size_t n = a.size();
    RatMat r(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

size_t mat_rank(RatMat m) {
    const size_t n = m.size();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t sel = rank;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[rank], m[sel]);
        for (size_t i = rank + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

SpringerReport verify_springer(uint32_t n, uint32_t q) {
    if (n > 5) throw ScaleCap("verify_springer capped at n <= 5");
    SpringerReport rep;
    rep.n = n;
    rep.q = q;

    const HeckeElement aw0 = HeckeElement::basis(n, q, longest_element(n));
    const HeckeElement h = hecke_multiply(aw0, aw0);

    // (a) centrality against every generator
    for (uint32_t i = 1; i < n; ++i) {
        Permutation s = perm_identity(n);
        std::swap(s[i - 1], s[i]);
        const HeckeElement as = HeckeElement::basis(n, q, s);
        if (!(hecke_multiply(h, as) == hecke_multiply(as, h)))
            throw VerificationFailed("a_{w0}^2 does not commute with s_" +
                                     std::to_string(i));
    }
    rep.central = true;

    const RatMat M = regular_matrix(h);
    const size_t N = M.size();

    const auto lams = partitions_of(n);
    std::vector<Int> eigs;
    for (const auto& lam : lams) {
        Int f = f_lambda(lam);
        Int deg = deg_psi(lam);
        Int eig = int_pow(Int(q), f.convert_to<uint64_t>());
        rep.spectrum.emplace_back(lam, eig, deg * deg);
        eigs.push_back(eig);
    }
    // distinct eigenvalues only (q = 1 collapses them all)
    std::vector<Int> distinct = eigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    // (b) annihilating polynomial
    RatMat prod(N, std::vector<Rat>(N, Rat(0)));
    for (size_t i = 0; i < N; ++i) prod[i][i] = 1;
    for (const Int& e : distinct) {
        RatMat shifted = M;
        for (size_t i = 0; i < N; ++i) shifted[i][i] -= Rat(e);
        prod = mat_mul(prod, shifted);
    }
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            if (prod[i][j] != 0)
                throw VerificationFailed("annihilating polynomial of a_{w0}^2 is nonzero at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
    rep.annihilator_zero = true;

    // (c) rank counts: multiplicity of q^{f_lambda} is sum of (deg psi)^2
    // over partitions sharing that eigenvalue
    for (const Int& e : distinct) {
        Int mult = 0;
        for (size_t t = 0; t < lams.size(); ++t)
            if (eigs[t] == e) mult += std::get<2>(rep.spectrum[t]);
        RatMat shifted = M;
        for (size_t i = 0; i < N; ++i) shifted[i][i] -= Rat(e);
        const size_t rank = mat_rank(std::move(shifted));
        if (Int(N) - Int(rank) != mult)
            throw VerificationFailed("eigenvalue " + e.str() + " has nullity " +
                                     std::to_string(N - rank) + ", expected " + mult.str());
    }
    rep.ranks_match = true;
    return rep;
}

Rat group_algebra_trace(uint32_t n, const Partition& mu, const Permutation& u,
                        const std::vector<int64_t>& lambda_blocks) {
    if (n > 8) throw ScaleCap("group_algebra_trace capped at n <= 8");
    if (mu.size() != n || u.size() != n)
        throw SizeMismatch("group_algebra_trace: inconsistent n");
    int64_t total = 0;
    for (int64_t b : lambda_blocks) {
        if (b < 0) return Rat(0);
        total += b;
    }
    if (total != (int64_t)n) throw SizeMismatch("lambda blocks must sum to n");

    // Elements of the Young subgroup S_mu (block-wise permutations).
    std::vector<Permutation> smu{perm_identity(n)};
    uint32_t start = 0;
    for (uint32_t p : mu.parts) {
        std::vector<Permutation> grown;
        std::vector<uint8_t> block(p);
        std::iota(block.begin(), block.end(), 0);
        do {
            for (const auto& base : smu) {
                Permutation w = base;
                for (uint32_t t = 0; t < p; ++t) w[start + t] = (uint8_t)(start + block[t]);
                grown.push_back(std::move(w));
            }
        } while (std::next_permutation(block.begin(), block.end()));
        smu = std::move(grown);
        start += p;
    }

    // Ordered set partitions of {0..n-1} with block sizes lambda_blocks:
    // represent as an assignment array pos -> block id.
    std::vector<std::vector<uint8_t>> assigns;
    std::vector<uint8_t> cur(n, 0);
    std::vector<int64_t> left(lambda_blocks.begin(), lambda_blocks.end());
    std::function<void(uint32_t)> gen = [&](uint32_t pos) {
        if (pos == n) {
            assigns.push_back(cur);
            return;
        }
        for (size_t b = 0; b < left.size(); ++b) {
            if (left[b] == 0) continue;
            --left[b];
            cur[pos] = (uint8_t)b;
            gen(pos + 1);
            ++left[b];
        }
    };
    gen(0);

    // Tr((e_mu u e_mu)_l) = |S_mu|^{-2} sum_{x,y in S_mu} #fixed cosets of xuy
    Int fixed_total = 0;
    for (const auto& x : smu) {
        Permutation xu = perm_compose(x, u);
        for (const auto& y : smu) {
            Permutation h = perm_compose(xu, y);
            for (const auto& as : assigns) {
                bool fix = true;
                for (uint32_t pos = 0; pos < n && fix; ++pos)
                    if (as[h[pos]] != as[pos]) fix = false;
                fixed_total += fix ? 1 : 0;
            }
        }
    }
    const Int sz = Int(smu.size());
    return Rat(fixed_total, sz * sz);
}

Rat psi_trace(uint32_t n, const Partition& mu, const Permutation& u, const Partition& lam) {
    if (lam.length() > 3) throw BadShape("psi_trace supports at most 3 rows");
    const int64_t x = lam.part(0), y = lam.part(1), z = lam.part(2);
    auto phi = [&](int64_t a, int64_t b, int64_t c) -> Rat {
        if (a < 0 || b < 0 || c < 0) return Rat(0);
        return group_algebra_trace(n, mu, u, {a, b, c});
    };
    if (z == 0) {
        // two-row expansion psi_{(x,y)} = phi_{(x,y)} - phi_{(x+1,y-1)}
        if (y == 0) return phi(x, 0, 0);
        return phi(x, y, 0) - phi(x + 1, y - 1, 0);
    }
    return (phi(x, y, z) + phi(x + 2, y - 1, z - 1) + phi(x + 1, y + 1, z - 2)) -
           (phi(x, y + 1, z - 1) + phi(x + 1, y - 1, z) + phi(x + 2, y, z - 2));
}

}  // namespace titszeta
