#include "titszeta/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace titszeta {

void Partition::normalize() {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw BadShape("parts must be weakly decreasing");
}

uint32_t Partition::size() const {
    uint32_t s = 0;
    for (uint32_t p : parts) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(uint32_t n) {
    std::vector<Partition> out;
    std::vector<uint32_t> cur;
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t rem, uint32_t maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (uint32_t p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;  // descending lex by construction
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw SizeMismatch("dominates: |lam| != |mu|");
    uint32_t sl = 0, sm = 0;
    size_t len = std::max(lam.length(), mu.length());
    for (size_t i = 0; i < len; ++i) {
        sl += lam.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

Partition conjugate(const Partition& lam) {
    std::vector<uint32_t> c;
    if (lam.parts.empty()) return Partition{};
    c.resize(lam.parts[0], 0);
    for (uint32_t p : lam.parts)
        for (uint32_t j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

Int row_weight(const Partition& lam) {
    Int w = 0;
    for (uint32_t p : lam.parts) w += Int(p) * (p - 1) / 2;
    return w;
}

Int col_weight(const Partition& lam) { return row_weight(conjugate(lam)); }

namespace {

Int q_number(uint32_t m, const Int& q) {
    // [m]_q = 1 + q + ... + q^{m-1}
    Int s = 0, pw = 1;
    for (uint32_t i = 0; i < m; ++i) {
        s += pw;
        pw *= q;
    }
    return s;
}

}  // namespace

Int q_binomial(uint32_t n, int64_t k, const Int& q) {
    if (k < 0 || k > (int64_t)n) return 0;
    if (k == 0 || k == (int64_t)n) return 1;
    // Pascal recurrence [m j] = [m-1 j-1] + q^j [m-1 j], one row at a time.
    std::vector<Int> row(k + 1, Int(0));
    row[0] = 1;
    std::vector<Int> qpow(k + 1);
    qpow[0] = 1;
    for (int64_t j = 1; j <= k; ++j) qpow[j] = qpow[j - 1] * q;
    for (uint32_t m = 1; m <= n; ++m)
        for (int64_t j = std::min<int64_t>(k, m); j >= 1; --j)
            row[j] = row[j - 1] + qpow[j] * row[j];
    return row[k];
}

Int q_multinomial(uint32_t n, const std::vector<int64_t>& parts, const Int& q) {
    int64_t total = 0;
    for (int64_t p : parts) {
        if (p < 0) return 0;
        total += p;
    }
    if (total != (int64_t)n) throw SizeMismatch("q_multinomial: parts must sum to n");
    Int r = 1;
    uint32_t rem = n;
    for (int64_t p : parts) {
        r *= q_binomial(rem, p, q);
        rem -= (uint32_t)p;
    }
    return r;
}

std::vector<uint32_t> hook_lengths(const Partition& lam) {
    if (lam.parts.empty()) throw BadShape("hook_lengths: empty partition");
    Partition conj = conjugate(lam);
    std::vector<uint32_t> hooks;
    for (size_t i = 0; i < lam.length(); ++i)
        for (uint32_t j = 0; j < lam.parts[i]; ++j)
            hooks.push_back(lam.parts[i] + conj.parts[j] - (uint32_t)i - j - 1);
    return hooks;
}

Int d_lambda(const Partition& lam, const Int& q) {
    const uint32_t n = lam.size();
    Int num = 1;
    for (uint32_t m = 1; m <= n; ++m) num *= q_number(m, q);
    Int den = 1;
    for (uint32_t h : hook_lengths(lam)) den *= q_number(h, q);
    Int quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw VerificationFailed("q-hook quotient is not integral");
    return quot * int_pow(q, (uint64_t)col_weight(lam));
}

Int deg_psi(const Partition& lam) { return d_lambda(lam, 1); }

Int f_lambda(const Partition& lam) {
    const Int n = lam.size();
    return n * (n - 1) / 2 + row_weight(lam) - col_weight(lam);
}

Int kostka_ssyt(const Partition& lam, const Partition& mu, uint32_t cap) {
    if (lam.size() != mu.size()) throw SizeMismatch("kostka: |lam| != |mu|");
    if (lam.size() > cap) throw ScaleCap("kostka_ssyt limited to n <= " + std::to_string(cap));
    // Backtrack over fillings: rows weakly increase, columns strictly
    // increase, entry counts prescribed by mu.
    const size_t nrows = lam.length();
    if (nrows == 0) return 1;  // empty shape, empty type
    std::vector<std::vector<uint32_t>> t(nrows);
    for (size_t i = 0; i < nrows; ++i) t[i].assign(lam.parts[i], 0);
    std::vector<uint32_t> remaining(mu.length() + 1, 0);
    for (size_t v = 0; v < mu.length(); ++v) remaining[v + 1] = mu.parts[v];
    const uint32_t vmax = (uint32_t)mu.length();

    Int count = 0;
    std::function<void(size_t, size_t)> fill = [&](size_t r, size_t c) {
        if (r == nrows) {
            ++count;
            return;
        }
        size_t nr = r, nc = c + 1;
        if (nc == t[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        uint32_t lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);              // weak rows
        if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);  // strict cols
        for (uint32_t v = lo; v <= vmax; ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            t[r][c] = v;
            fill(nr, nc);
            ++remaining[v];
        }
    };
    fill(0, 0);
    return count;
}

Int kostka_closed3(const Partition& lam, const Partition& mu) {
    if (lam.length() > 3 || mu.length() > 3)
        throw BadShape("kostka_closed3 needs shapes with at most 3 parts");
    if (lam.size() != mu.size()) throw SizeMismatch("kostka: |lam| != |mu|");
    if (!dominates(lam, mu)) throw BadShape("kostka_closed3 requires lam to dominate mu");
    const int64_t x = lam.part(0), y = lam.part(1), z = lam.part(2);
    const int64_t i = mu.part(0), j = mu.part(1);
    int64_t v = std::min(x - i, j - z) - std::max<int64_t>({0, j - y, y - i}) + 1;
    return Int(v);
}

Int kostka(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw SizeMismatch("kostka: |lam| != |mu|");
    if (!dominates(lam, mu)) return 0;
    if (lam.length() <= 3 && mu.length() <= 3) return kostka_closed3(lam, mu);
    return kostka_ssyt(lam, mu);
}

}  // namespace titszeta
