#include "titszeta/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace titszeta {

void Digraph::add_edge(uint32_t u, uint32_t v) {
    if (u == v) throw Error("self-loops are not allowed in a simple digraph");
    if (u >= vertex_count || v >= vertex_count) throw Error("edge endpoint out of range");
    auto& lst = out[u];
    auto it = std::lower_bound(lst.begin(), lst.end(), v);
    if (it == lst.end() || *it != v) lst.insert(it, v);
}

bool Digraph::has_edge(uint32_t u, uint32_t v) const {
    const auto& lst = out[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

size_t Digraph::edge_count() const {
    size_t e = 0;
    for (const auto& lst : out) e += lst.size();
    return e;
}

uint32_t Digraph::max_out_degree() const {
    size_t d = 0;
    for (const auto& lst : out) d = std::max(d, lst.size());
    return (uint32_t)d;
}

Mat64 Digraph::adjacency() const {
    Mat64 m(vertex_count);
    for (uint32_t u = 0; u < vertex_count; ++u)
        for (uint32_t v : out[u]) m.at(u, v) = 1;
    return m;
}

namespace {

// Dense power chain P_l = A^l with int64 entries, valid while
// (max degree)^l < 2^62. Returns powers 1..lmax.
std::vector<std::vector<int64_t>> dense_powers(const Digraph& x, int lmax) {
    const uint32_t n = x.vertex_count;
    std::vector<std::vector<int64_t>> pows;
    std::vector<int64_t> cur((size_t)n * n, 0);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v : x.out[u]) cur[(size_t)u * n + v] = 1;
    pows.push_back(cur);
    for (int l = 2; l <= lmax; ++l) {
        std::vector<int64_t> nxt((size_t)n * n, 0);
        const auto& prev = pows.back();
        for (uint32_t i = 0; i < n; ++i) {
            const int64_t* pi = &prev[(size_t)i * n];
            int64_t* ni = &nxt[(size_t)i * n];
            for (uint32_t k = 0; k < n; ++k) {
                const int64_t v = pi[k];
                if (v == 0) continue;
                for (uint32_t j : x.out[k]) ni[j] += v;
            }
        }
        pows.push_back(std::move(nxt));
    }
    return pows;
}

}  // namespace

std::vector<Int> closed_walk_counts(const Digraph& x, int L) {
    if (L < 1) throw Error("closed_walk_counts requires L >= 1");
    const uint32_t n = x.vertex_count;
    std::vector<Int> counts(L, Int(0));
    if (n == 0) return counts;

    const double logdeg = std::log2((double)std::max<uint32_t>(x.max_out_degree(), 1));
    const bool full_int64 = logdeg * L < 62.0;
    const bool half_int64 = logdeg * ((L + 1) / 2) < 62.0;

    if (full_int64) {
        // per-start propagation: w_{l+1}[v] = sum_{u->v} w_l[u]
        std::vector<int64_t> w(n), nxt(n);
        for (uint32_t s = 0; s < n; ++s) {
            std::fill(w.begin(), w.end(), 0);
            w[s] = 1;
            for (int l = 1; l <= L; ++l) {
                std::fill(nxt.begin(), nxt.end(), 0);
                for (uint32_t u = 0; u < n; ++u) {
                    const int64_t c = w[u];
                    if (c == 0) continue;
                    for (uint32_t v : x.out[u]) nxt[v] += c;
                }
                w.swap(nxt);
                counts[l - 1] += w[s];
            }
        }
        return counts;
    }

    if (half_int64 && (size_t)n * n <= (150u << 20)) {
        // Tr(A^{a+b}) = sum_{ij} (A^a)_{ij} (A^b)_{ji}
        const int half = (L + 1) / 2;
        auto pows = dense_powers(x, half);
        for (int l = 1; l <= L; ++l) {
            const int a = std::min(l, half), b = l - a;
            Int tr = 0;
            if (b == 0) {
                const auto& pa = pows[a - 1];
                for (uint32_t i = 0; i < n; ++i) tr += pa[(size_t)i * n + i];
            } else {
                const auto& pa = pows[a - 1];
                const auto& pb = pows[b - 1];
                for (uint32_t i = 0; i < n; ++i)
                    for (uint32_t j = 0; j < n; ++j) {
                        const int64_t u = pa[(size_t)i * n + j];
                        if (u) tr += Int(u) * pb[(size_t)j * n + i];
                    }
            }
            counts[l - 1] = tr;
        }
        return counts;
    }

    // big-integer fallback (small graphs with huge degrees only)
    std::vector<Int> w(n), nxt(n);
    for (uint32_t s = 0; s < n; ++s) {
        for (auto& v : w) v = 0;
        w[s] = 1;
        for (int l = 1; l <= L; ++l) {
            for (auto& v : nxt) v = 0;
            for (uint32_t u = 0; u < n; ++u) {
                if (w[u] == 0) continue;
                for (uint32_t v : x.out[u]) nxt[v] += w[u];
            }
            w.swap(nxt);
            counts[l - 1] += w[s];
        }
    }
    return counts;
}

IntPolynomial inverse_zeta_polynomial(const Digraph& x, uint32_t cap, int threads) {
    if (x.vertex_count > cap)
        throw TooLargeForExact("vertex count " + std::to_string(x.vertex_count) +
                               " exceeds exact-determinant cap " + std::to_string(cap));
    return charpoly_reversed(x.adjacency(), /*is_psd=*/false, threads);
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    Digraph r(a.vertex_count + b.vertex_count);
    for (uint32_t u = 0; u < a.vertex_count; ++u) r.out[u] = a.out[u];
    for (uint32_t u = 0; u < b.vertex_count; ++u) {
        r.out[a.vertex_count + u].reserve(b.out[u].size());
        for (uint32_t v : b.out[u]) r.out[a.vertex_count + u].push_back(a.vertex_count + v);
    }
    return r;
}

Digraph tensor_product(const Digraph& a, const Digraph& b) {
    Digraph r(a.vertex_count * b.vertex_count);
    for (uint32_t u1 = 0; u1 < a.vertex_count; ++u1)
        for (uint32_t v1 : a.out[u1])
            for (uint32_t u2 = 0; u2 < b.vertex_count; ++u2) {
                const uint32_t from = u1 * b.vertex_count + u2;
                for (uint32_t v2 : b.out[u2])
                    r.out[from].push_back(v1 * b.vertex_count + v2);
            }
    for (auto& lst : r.out) std::sort(lst.begin(), lst.end());
    return r;
}

std::vector<uint32_t> cyclic_partite_types(const Digraph& x, uint32_t arity,
                                           const std::vector<uint32_t>& hint) {
    if (arity == 0) throw NotCyclicPartite("arity must be positive");
    const uint32_t n = x.vertex_count;
    std::vector<uint32_t> type;
    if (!hint.empty()) {
        if (hint.size() != n) throw NotCyclicPartite("typing hint has wrong length");
        type = hint;
    } else {
        // BFS per weak component; unreached vertices default to type 0.
        const uint32_t unset = UINT32_MAX;
        type.assign(n, unset);
        std::vector<std::vector<uint32_t>> in(n);
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v : x.out[u]) in[v].push_back(u);
        for (uint32_t s = 0; s < n; ++s) {
            if (type[s] != unset) continue;
            type[s] = 0;
            std::queue<uint32_t> bfs;
            bfs.push(s);
            while (!bfs.empty()) {
                uint32_t u = bfs.front();
                bfs.pop();
                for (uint32_t v : x.out[u])
                    if (type[v] == unset) {
                        type[v] = (type[u] + 1) % arity;
                        bfs.push(v);
                    }
                for (uint32_t v : in[u])
                    if (type[v] == unset) {
                        type[v] = (type[u] + arity - 1) % arity;
                        bfs.push(v);
                    }
            }
        }
    }
    for (uint32_t u = 0; u < n; ++u) {
        if (type[u] >= arity) throw NotCyclicPartite("type out of range");
        for (uint32_t v : x.out[u])
            if (type[v] != (type[u] + 1) % arity)
                throw NotCyclicPartite("edge " + std::to_string(u) + "->" +
                                       std::to_string(v) + " does not advance type by 1");
    }
    return type;
}

namespace {

std::vector<uint32_t> vertices_of_type(const std::vector<uint32_t>& typing, uint32_t t) {
    std::vector<uint32_t> ids;
    for (uint32_t u = 0; u < typing.size(); ++u)
        if (typing[u] == t) ids.push_back(u);
    return ids;
}

void check_block_entry_bound(const Digraph& x, uint32_t arity) {
    const double logdeg = std::log2((double)std::max<uint32_t>(x.max_out_degree(), 1));
    if (logdeg * arity >= 62.0)
        throw TooLargeForExact("block walk counts would overflow int64");
}

}  // namespace

Mat64 partite_block(const Digraph& x, uint32_t arity, const std::vector<uint32_t>& typing) {
    cyclic_partite_types(x, arity, typing);  // revalidate
    check_block_entry_bound(x, arity);
    const auto ids = vertices_of_type(typing, 0);
    const uint32_t m = (uint32_t)ids.size();
    const uint32_t n = x.vertex_count;
    std::vector<uint32_t> pos(n, UINT32_MAX);
    for (uint32_t i = 0; i < m; ++i) pos[ids[i]] = i;

    // rows of A^arity restricted to type-0 starts, by sparse propagation
    Mat64 b(m);
    std::vector<int64_t> w(n), nxt(n);
    for (uint32_t i = 0; i < m; ++i) {
        std::fill(w.begin(), w.end(), 0);
        w[ids[i]] = 1;
        for (uint32_t step = 0; step < arity; ++step) {
            std::fill(nxt.begin(), nxt.end(), 0);
            for (uint32_t u = 0; u < n; ++u) {
                const int64_t c = w[u];
                if (c == 0) continue;
                for (uint32_t v : x.out[u]) nxt[v] += c;
            }
            w.swap(nxt);
        }
        for (uint32_t u = 0; u < n; ++u)
            if (w[u] != 0) {
                if (pos[u] == UINT32_MAX)
                    throw NotCyclicPartite("walk of length arity left the type-0 class");
                b.at(i, pos[u]) = w[u];
            }
    }
    return b;
}

Mat64 cyclic_block_product(const Digraph& x, uint32_t arity,
                           const std::vector<uint32_t>& typing) {
    cyclic_partite_types(x, arity, typing);
    check_block_entry_bound(x, arity);
    const uint32_t n = x.vertex_count;
    std::vector<std::vector<uint32_t>> classes(arity);
    for (uint32_t t = 0; t < arity; ++t) classes[t] = vertices_of_type(typing, t);
    const uint32_t m0 = (uint32_t)classes[0].size();

    // acc: m0 x |class_t| dense matrix, advanced one block at a time
    std::vector<uint32_t> pos(n, UINT32_MAX);
    for (uint32_t t = 0; t < arity; ++t)
        for (uint32_t i = 0; i < classes[t].size(); ++i) pos[classes[t][i]] = i;

    std::vector<int64_t> acc((size_t)m0 * classes[0].size(), 0);
    for (uint32_t i = 0; i < m0; ++i) acc[(size_t)i * m0 + i] = 1;
    uint32_t cur_cols = m0;
    for (uint32_t t = 0; t < arity; ++t) {
        const auto& from = classes[t];
        const auto& to = classes[(t + 1) % arity];
        std::vector<int64_t> nxt((size_t)m0 * to.size(), 0);
        for (uint32_t i = 0; i < m0; ++i) {
            const int64_t* ai = &acc[(size_t)i * cur_cols];
            int64_t* ni = &nxt[(size_t)i * to.size()];
            for (uint32_t k = 0; k < cur_cols; ++k) {
                const int64_t v = ai[k];
                if (v == 0) continue;
                for (uint32_t dst : x.out[from[k]]) ni[pos[dst]] += v;
            }
        }
        acc.swap(nxt);
        cur_cols = (uint32_t)to.size();
    }
    if (cur_cols != m0) throw NotCyclicPartite("block chain did not return to type 0");
    Mat64 b(m0);
    b.a.assign(acc.begin(), acc.end());
    return b;
}

IntPolynomial inverse_zeta_cyclic_reduced(const Digraph& x, uint32_t arity,
                                          const std::vector<uint32_t>& typing,
                                          int threads) {
    Mat64 b = cyclic_block_product(x, arity, typing);
    // A bipartite block product A_0 A_1 with A_1 = A_0^T is Gram, which
    // sharpens the CRT coefficient bound.
    bool psd = false;
    if (arity == 2) {
        psd = true;
        for (uint32_t u = 0; u < x.vertex_count && psd; ++u)
            for (uint32_t v : x.out[u])
                if (!x.has_edge(v, u)) {
                    psd = false;
                    break;
                }
    }
    IntPolynomial pb = charpoly_reversed(b, psd, threads);
    return poly_stretch(pb, arity);
}

}  // namespace titszeta
