#include "titszeta/charpoly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace titszeta {

namespace {

// ---- modular arithmetic, primes just below 2^31 ------------------------

struct Mod {
    uint64_t p;
    uint64_t magic;  // floor(2^62 / p), for Barrett reduction of 62-bit products

    explicit Mod(uint64_t p_) : p(p_), magic((uint64_t)(((unsigned __int128)1 << 62) / p_)) {}

    uint64_t mul(uint64_t a, uint64_t b) const {
        uint64_t x = a * b;  // < 2^62 since a,b < 2^31
        uint64_t q = (uint64_t)(((unsigned __int128)x * magic) >> 62);
        uint64_t r = x - q * p;
        if (r >= p) r -= p;
        return r;
    }
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t r = a + b;
        return r >= p ? r - p : r;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
    uint64_t reduce_int64(int64_t v) const {
        int64_t r = v % (int64_t)p;
        return r < 0 ? (uint64_t)(r + (int64_t)p) : (uint64_t)r;
    }
};

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Deterministic descending list of primes below 2^31.
std::vector<uint64_t> first_primes(size_t count) {
    std::vector<uint64_t> ps;
    uint64_t c = (1ull << 31) - 1;
    while (ps.size() < count) {
        if (is_prime_u64(c)) ps.push_back(c);
        --c;
    }
    return ps;
}

// charpoly of the upper Hessenberg matrix H mod p, as det(xI - H),
// via the leading-principal-minor recurrence.
std::vector<uint64_t> hessenberg_charpoly(std::vector<uint64_t>& h, uint32_t n,
                                          const Mod& mod) {
    auto H = [&](uint32_t i, uint32_t j) -> uint64_t& { return h[(size_t)i * n + j]; };

    // Reduce to Hessenberg form by similarity transforms.
    for (uint32_t k = 0; k + 2 < n; ++k) {
        uint32_t piv = k + 1;
        while (piv < n && H(piv, k) == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            for (uint32_t j = 0; j < n; ++j) std::swap(H(k + 1, j), H(piv, j));
            for (uint32_t i = 0; i < n; ++i) std::swap(H(i, k + 1), H(i, piv));
        }
        const uint64_t inv_piv = mod.inv(H(k + 1, k));
        for (uint32_t i = k + 2; i < n; ++i) {
            if (H(i, k) == 0) continue;
            const uint64_t f = mod.mul(H(i, k), inv_piv);
            uint64_t* ri = &h[(size_t)i * n];
            const uint64_t* rk = &h[(size_t)(k + 1) * n];
            for (uint32_t j = k; j < n; ++j) ri[j] = mod.sub(ri[j], mod.mul(f, rk[j]));
            // similarity correction on column k+1
            for (uint32_t r = 0; r < n; ++r)
                H(r, k + 1) = mod.add(H(r, k + 1), mod.mul(f, H(r, i)));
        }
    }

    // p_0 = 1; p_k = (x - H[k-1][k-1]) p_{k-1}
    //            - sum_{m=2}^{k} H[k-m][k-1] (prod subdiag) p_{k-m}
    std::vector<std::vector<uint64_t>> pk(n + 1);
    pk[0] = {1};
    for (uint32_t k = 1; k <= n; ++k) {
        const uint32_t r = k - 1;
        std::vector<uint64_t> cur(k + 1, 0);
        const uint64_t d = H(r, r);
        for (uint32_t i = 0; i < k; ++i) {
            cur[i + 1] = mod.add(cur[i + 1], pk[k - 1][i]);
            cur[i] = mod.sub(cur[i], mod.mul(d, pk[k - 1][i]));
        }
        uint64_t subprod = 1;
        for (uint32_t m = 2; m <= k; ++m) {
            subprod = mod.mul(subprod, H(k - m + 1, k - m));
            if (subprod == 0) break;
            const uint64_t coef = mod.mul(H(k - m, r), subprod);
            if (coef == 0) continue;
            const auto& old = pk[k - m];
            for (size_t i = 0; i < old.size(); ++i)
                cur[i] = mod.sub(cur[i], mod.mul(coef, old[i]));
        }
        pk[k] = std::move(cur);
    }
    return pk[n];
}

// log2 of max_k C(n,k) * prod of k largest "weights" (weights given as log2).
double bound_log2_from_weights(std::vector<double> w, uint32_t n) {
    std::sort(w.begin(), w.end(), std::greater<double>());
    double best = 0, acc = 0, logc = 0;
    for (uint32_t k = 1; k <= n; ++k) {
        acc += w[k - 1];
        logc += std::log2((double)(n - k + 1)) - std::log2((double)k);
        best = std::max(best, logc + acc);
    }
    return best;
}

double hadamard_bound_log2(const Mat64& m) {
    const uint32_t n = m.n;
    std::vector<double> row(n, 0.0), col(n, 0.0);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            double v = (double)m.at(i, j);
            row[i] += v * v;
            col[j] += v * v;
        }
    for (uint32_t i = 0; i < n; ++i) {
        row[i] = 0.5 * std::log2(std::max(row[i], 1.0));
        col[i] = 0.5 * std::log2(std::max(col[i], 1.0));
    }
    return std::min(bound_log2_from_weights(row, n), bound_log2_from_weights(col, n));
}

double fischer_bound_log2(const Mat64& m) {
    std::vector<double> d(m.n);
    for (uint32_t i = 0; i < m.n; ++i)
        d[i] = std::log2(std::max((double)m.at(i, i), 1.0));
    return bound_log2_from_weights(d, m.n);
}

}  // namespace

IntPolynomial charpoly_reversed(const Mat64& m, bool is_psd, int threads) {
    const uint32_t n = m.n;
    if (n == 0) return IntPolynomial::one();

    double bound = hadamard_bound_log2(m);
    if (is_psd) bound = std::min(bound, fischer_bound_log2(m));
    // +1 for sign, slack against rounding
    const double need_bits = bound + 16;
    const size_t nprimes = std::max<size_t>(1, (size_t)std::ceil(need_bits / 30.9));
    const auto primes = first_primes(nprimes);

    std::vector<std::vector<uint64_t>> residues(nprimes);
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
    threads = std::max(1, std::min<int>(threads, (int)nprimes));

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= nprimes) return;
            Mod mod(primes[idx]);
            std::vector<uint64_t> h((size_t)n * n);
            for (size_t i = 0; i < h.size(); ++i) h[i] = mod.reduce_int64(m.a[i]);
            residues[idx] = hessenberg_charpoly(h, n, mod);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // CRT per coefficient with symmetric lift; charpoly coeff c_i of x^i,
    // then det(I - uM) = sum c_i u^{n-i} (monic: c_n = 1).
    Int modulus = 1;
    for (uint64_t p : primes) modulus *= p;
    std::vector<Int> coef(n + 1, Int(0));
    // Garner-style incremental combination
    std::vector<Int> partial(n + 1, Int(0));
    Int m_acc = 1;
    for (size_t idx = 0; idx < nprimes; ++idx) {
        const Int p = primes[idx];
        // x = partial + m_acc * t, t = (r - partial) / m_acc mod p
        Mod mod(primes[idx]);
        uint64_t m_acc_mod = (m_acc % p).convert_to<uint64_t>();
        uint64_t inv_m = mod.inv(m_acc_mod);
        for (uint32_t i = 0; i <= n; ++i) {
            uint64_t r = residues[idx][i];
            uint64_t part_mod = (partial[i] % p).convert_to<uint64_t>();
            uint64_t t = mod.mul(mod.sub(r, part_mod), inv_m);
            partial[i] += m_acc * t;
        }
        m_acc *= p;
    }
    for (uint32_t i = 0; i <= n; ++i) {
        Int v = partial[i];
        if (v * 2 > modulus) v -= modulus;
        coef[n - i] = v;  // reverse
    }
    IntPolynomial out{std::move(coef)};
    if (out.is_zero() || out.c[0] != 1)
        throw VerificationFailed("charpoly reconstruction lost the leading term");
    return out;
}

IntPolynomial charpoly_reversed_certified(const Mat64& m, const std::vector<Int>& candidates) {
    const uint32_t n = m.n;
    for (size_t i = 0; i < candidates.size(); ++i)
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (candidates[i] == candidates[j])
                throw VerificationFailed("candidate eigenvalues must be distinct");

    // Entry bound for prod (M - lambda_i I): n^{t-1} * prod max-entry norms.
    double max_entry = 1.0;
    for (int64_t v : m.a) max_entry = std::max(max_entry, std::abs((double)v));
    double lam_max = 1.0;
    for (const Int& c : candidates)
        lam_max = std::max(lam_max, boost::multiprecision::abs(c).convert_to<double>());
    double log_bound = 0;
    for (size_t t = 0; t < candidates.size(); ++t)
        log_bound += std::log2(max_entry + lam_max);
    log_bound += (candidates.size() - 1) * std::log2((double)std::max<uint32_t>(n, 2));
    const size_t nprimes = (size_t)std::ceil((log_bound + 16) / 30.9);
    const auto primes = first_primes(std::max<size_t>(nprimes, 1) + 4);

    auto reduce_big = [](const Int& v, uint64_t p) -> uint64_t {
        Int r = v % (Int)p;
        if (r < 0) r += p;
        return r.convert_to<uint64_t>();
    };

    // (1) annihilator check mod enough primes to certify exact zero
    for (size_t pi = 0; pi < nprimes; ++pi) {
        Mod mod(primes[pi]);
        std::vector<uint64_t> mp((size_t)n * n), acc((size_t)n * n), tmp((size_t)n * n);
        for (size_t i = 0; i < mp.size(); ++i) mp[i] = mod.reduce_int64(m.a[i]);
        const uint64_t c0 = reduce_big(candidates[0], mod.p);
        acc = mp;
        for (uint32_t i = 0; i < n; ++i)
            acc[(size_t)i * n + i] = mod.sub(acc[(size_t)i * n + i], c0);
        for (size_t t = 1; t < candidates.size(); ++t) {
            const uint64_t ct = reduce_big(candidates[t], mod.p);
            // tmp = acc * (M - ct I)
            std::fill(tmp.begin(), tmp.end(), 0);
            for (uint32_t i = 0; i < n; ++i) {
                const uint64_t* ai = &acc[(size_t)i * n];
                uint64_t* ti = &tmp[(size_t)i * n];
                for (uint32_t k = 0; k < n; ++k) {
                    if (ai[k] == 0) continue;
                    const uint64_t f = ai[k];
                    const uint64_t* mk = &mp[(size_t)k * n];
                    for (uint32_t j = 0; j < n; ++j)
                        if (mk[j]) ti[j] = mod.add(ti[j], mod.mul(f, mk[j]));
                    ti[k] = mod.sub(ti[k], mod.mul(f, ct));
                }
            }
            acc.swap(tmp);
        }
        for (uint64_t v : acc)
            if (v != 0)
                throw VerificationFailed("candidate spectrum does not annihilate the matrix");
    }

    // (2) multiplicities from single-prime nullities; pick a prime keeping
    // candidates distinct.
    uint64_t p_rank = 0;
    for (uint64_t p : primes) {
        bool ok = true;
        for (size_t i = 0; i < candidates.size() && ok; ++i)
            for (size_t j = i + 1; j < candidates.size() && ok; ++j)
                if ((candidates[i] - candidates[j]) % (Int)p == 0) ok = false;
        if (ok) {
            p_rank = p;
            break;
        }
    }
    if (p_rank == 0) throw VerificationFailed("no prime separates the candidates");
    Mod mod(p_rank);

    std::vector<uint64_t> mults(candidates.size(), 0);
    uint64_t total = 0;
    for (size_t t = 0; t < candidates.size(); ++t) {
        std::vector<uint64_t> w((size_t)n * n);
        const uint64_t ct = reduce_big(candidates[t], mod.p);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) {
                uint64_t v = mod.reduce_int64(m.at(i, j));
                w[(size_t)i * n + j] = (i == j) ? mod.sub(v, ct) : v;
            }
        // rank by Gaussian elimination
        uint32_t rank = 0;
        for (uint32_t col = 0; col < n && rank < n; ++col) {
            uint32_t sel = rank;
            while (sel < n && w[(size_t)sel * n + col] == 0) ++sel;
            if (sel == n) continue;
            if (sel != rank)
                for (uint32_t j = 0; j < n; ++j)
                    std::swap(w[(size_t)rank * n + j], w[(size_t)sel * n + j]);
            const uint64_t inv_piv = mod.inv(w[(size_t)rank * n + col]);
            for (uint32_t i = rank + 1; i < n; ++i) {
                uint64_t f = w[(size_t)i * n + col];
                if (f == 0) continue;
                f = mod.mul(f, inv_piv);
                uint64_t* ri = &w[(size_t)i * n];
                const uint64_t* rr = &w[(size_t)rank * n];
                for (uint32_t j = col; j < n; ++j)
                    ri[j] = mod.sub(ri[j], mod.mul(f, rr[j]));
            }
            ++rank;
        }
        mults[t] = n - rank;
        total += mults[t];
    }
    if (total != n)
        throw VerificationFailed("nullities of candidate eigenvalues do not sum to n");

    IntPolynomial out = IntPolynomial::one();
    for (size_t t = 0; t < candidates.size(); ++t)
        out = poly_mul(out, poly_pow(poly_binomial(-candidates[t], 1), mults[t]));
    return out;
}

IntPolynomial charpoly_reversed_exact_slow(const Mat64& m) {
    const uint32_t n = m.n;
    if (n == 0) return IntPolynomial::one();
    // Faddeev–LeVerrier: M_1 = A, c_k = -Tr(A M_k)/k ... all divisions exact.
    std::vector<Int> A((size_t)n * n), Mk((size_t)n * n), tmp((size_t)n * n);
    for (size_t i = 0; i < A.size(); ++i) A[i] = m.a[i];
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    Mk = A;
    for (uint32_t k = 1; k <= n; ++k) {
        Int tr = 0;
        for (uint32_t i = 0; i < n; ++i) tr += Mk[(size_t)i * n + i];
        Int ck, rem;
        boost::multiprecision::divide_qr(-tr, Int(k), ck, rem);
        if (rem != 0) throw VerificationFailed("Faddeev-LeVerrier division not exact");
        c[n - k] = ck;
        if (k == n) break;
        // Mk+1 = A (Mk + ck I)
        for (uint32_t i = 0; i < n; ++i) Mk[(size_t)i * n + i] += ck;
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) {
                Int s = 0;
                for (uint32_t l = 0; l < n; ++l)
                    s += A[(size_t)i * n + l] * Mk[(size_t)l * n + j];
                tmp[(size_t)i * n + j] = s;
            }
        Mk.swap(tmp);
    }
    std::vector<Int> rev(n + 1);
    for (uint32_t i = 0; i <= n; ++i) rev[n - i] = c[i];
    return IntPolynomial{std::move(rev)};
}

}  // namespace titszeta
