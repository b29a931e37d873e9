#include "titszeta/building.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace titszeta {

std::pair<uint32_t, uint32_t> mdim_step(uint32_t a, uint32_t b, uint32_t n) {
    if (a < 1 || a > n - 1 || b < 1 || b > n - 1 || a == b)
        throw BadMultiDimension("need 1 <= a,b <= n-1 and a != b");
    if (b > a) return {b, b - a};
    return {b, n + b - a};
}

std::vector<MDimClass> mdim_classes(uint32_t n) {
    std::vector<MDimClass> out;
    if (n < 3) return out;  // no orbits below n = 3 produce X2 components of interest
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (uint32_t a = 1; a < n; ++a)
        for (uint32_t b = 1; b < n; ++b) {
            if (a == b || seen.count({a, b})) continue;
            MDimClass cls;
            std::pair<uint32_t, uint32_t> cur{a, b};
            do {
                cls.orbit.push_back(cur);
                seen.insert(cur);
                cur = mdim_step(cur.first, cur.second, n);
            } while (cur != std::make_pair(a, b));
            // rotate so the lexicographically smallest pair leads
            auto mn = std::min_element(cls.orbit.begin(), cls.orbit.end());
            std::rotate(cls.orbit.begin(), mn, cls.orbit.end());
            cls.representative = cls.orbit.front();
            auto [ra, rb] = cls.representative;
            cls.i = ra;
            cls.j = rb - ra;
            cls.k = n - rb;
            out.push_back(std::move(cls));
        }
    std::sort(out.begin(), out.end(), [](const MDimClass& x, const MDimClass& y) {
        return x.representative < y.representative;
    });
    for (const auto& cls : out)
        if (cls.size() != 6 && !(cls.size() == 2 && cls.i == cls.j && cls.j == cls.k))
            throw VerificationFailed("multi-dimension orbit has unexpected size");
    return out;
}

namespace {

void assert_weakly_connected(const Digraph& g, const std::string& what) {
    if (g.vertex_count == 0) return;
    std::vector<std::vector<uint32_t>> undirected(g.vertex_count);
    for (uint32_t u = 0; u < g.vertex_count; ++u)
        for (uint32_t v : g.out[u]) {
            undirected[u].push_back(v);
            undirected[v].push_back(u);
        }
    std::vector<bool> vis(g.vertex_count, false);
    std::queue<uint32_t> bfs;
    bfs.push(0);
    vis[0] = true;
    uint32_t cnt = 1;
    while (!bfs.empty()) {
        uint32_t u = bfs.front();
        bfs.pop();
        for (uint32_t v : undirected[u])
            if (!vis[v]) {
                vis[v] = true;
                ++cnt;
                bfs.push(v);
            }
    }
    if (cnt != g.vertex_count)
        throw VerificationFailed(what + " is not connected");
}

}  // namespace

BuildingGraph build_x0_component(uint32_t n, uint32_t q, uint32_t k) {
    if (n < 2 || k < 1 || 2 * k > n) throw BadDimension("need 1 <= k <= n/2, n >= 2");
    const FieldTable& F = make_field(q);

    BuildingGraph bg;
    bg.n = n;
    bg.q = q;
    bg.component = "[" + std::to_string(k) + "]";
    auto lows = enumerate_grassmannian_cached(n, k, F, global_cache());
    bg.vertex_subspaces = lows;
    const bool split = (2 * k != n);
    if (split) {
        auto highs = enumerate_grassmannian_cached(n, n - k, F, global_cache());
        bg.vertex_subspaces.insert(bg.vertex_subspaces.end(), highs.begin(), highs.end());
    }
    const uint32_t N = (uint32_t)bg.vertex_subspaces.size();
    bg.graph = Digraph(N);
    bg.arity = split ? 2 : 1;
    bg.typing.assign(N, 0);
    if (split)
        for (uint32_t v = (uint32_t)lows.size(); v < N; ++v) bg.typing[v] = 1;

    for (uint32_t u = 0; u < N; ++u)
        for (uint32_t v = u + 1; v < N; ++v)
            if (is_direct_sum(bg.vertex_subspaces[u], bg.vertex_subspaces[v], F)) {
                bg.graph.add_edge(u, v);
                bg.graph.add_edge(v, u);
            }
    assert_weakly_connected(bg.graph, "X0^" + bg.component);
    return bg;
}

BuildingGraph build_x2_component(uint32_t n, uint32_t q, const MDimClass& cls) {
    const FieldTable& F = make_field(q);
    BuildingGraph bg;
    bg.n = n;
    bg.q = q;
    bg.component = "[(" + std::to_string(cls.representative.first) + "," +
                   std::to_string(cls.representative.second) + ")]";
    bg.arity = cls.size();

    std::vector<uint32_t> group_start;
    for (uint32_t t = 0; t < cls.size(); ++t) {
        group_start.push_back((uint32_t)bg.vertex_flags.size());
        auto flags = enumerate_directed_flags(n, F, cls.orbit[t]);
        bg.vertex_flags.insert(bg.vertex_flags.end(), flags.begin(), flags.end());
    }
    group_start.push_back((uint32_t)bg.vertex_flags.size());
    const uint32_t N = (uint32_t)bg.vertex_flags.size();
    bg.graph = Digraph(N);
    bg.typing.assign(N, 0);
    for (uint32_t t = 0; t < cls.size(); ++t)
        for (uint32_t v = group_start[t]; v < group_start[t + 1]; ++v) bg.typing[v] = t;

    // index flags of each type by their first subspace
    std::vector<std::map<std::vector<uint32_t>, std::vector<uint32_t>>> by_first(cls.size());
    for (uint32_t t = 0; t < cls.size(); ++t)
        for (uint32_t v = group_start[t]; v < group_start[t + 1]; ++v)
            by_first[t][bg.vertex_flags[v].first.flattened()].push_back(v);

    for (uint32_t u = 0; u < N; ++u) {
        const DirectedFlag& fu = bg.vertex_flags[u];
        const uint32_t tnext = (bg.typing[u] + 1) % cls.size();
        auto it = by_first[tnext].find(fu.second.flattened());
        if (it == by_first[tnext].end()) continue;
        for (uint32_t v : it->second) {
            const DirectedFlag& fv = bg.vertex_flags[v];
            // (W1,W2) -> (W2,W4): both geodesic branches, evaluated literally
            const Subspace& w1 = fu.first;
            const Subspace& w2 = fu.second;
            const Subspace& w4 = fv.second;
            Subspace sm = sum(w1, w4, F);
            bool edge = false;
            if (sm == w2 && w1.dim() + w4.dim() == w2.dim()) edge = true;  // W1 (+) W4 = W2
            if (!edge && sm.dim() == n && intersect(w1, w4, F) == w2) edge = true;
            if (edge) bg.graph.add_edge(u, v);
        }
    }
    assert_weakly_connected(bg.graph, "X2^" + bg.component);
    return bg;
}

namespace {

BuildingGraph union_components(std::vector<BuildingGraph> parts, uint32_t n, uint32_t q) {
    BuildingGraph bg;
    bg.n = n;
    bg.q = q;
    bg.component = "full";
    bg.arity = 0;
    Digraph g(0);
    for (auto& p : parts) {
        g = disjoint_union(g, p.graph);
        bg.vertex_subspaces.insert(bg.vertex_subspaces.end(), p.vertex_subspaces.begin(),
                                   p.vertex_subspaces.end());
        bg.vertex_flags.insert(bg.vertex_flags.end(), p.vertex_flags.begin(),
                               p.vertex_flags.end());
    }
    bg.graph = std::move(g);
    return bg;
}

}  // namespace

BuildingGraph build_x0_full(uint32_t n, uint32_t q) {
    if (n < 2) throw BadDimension("need n >= 2");
    std::vector<BuildingGraph> parts;
    for (uint32_t k = 1; 2 * k <= n; ++k) parts.push_back(build_x0_component(n, q, k));
    return union_components(std::move(parts), n, q);
}

BuildingGraph build_x2_full(uint32_t n, uint32_t q) {
    if (n < 2) throw BadDimension("need n >= 2");
    std::vector<BuildingGraph> parts;
    for (const auto& cls : mdim_classes(n)) parts.push_back(build_x2_component(n, q, cls));
    return union_components(std::move(parts), n, q);
}

// --- geodesic cycle enumeration ------------------------------------------

namespace {

// Vertex of the joined building: (factor, subspace).
struct JoinedBuilding {
    std::vector<uint32_t> dims;
    const FieldTable& F;
    struct Vert {
        uint32_t factor;
        Subspace space;
    };
    std::vector<Vert> verts;
    std::vector<std::vector<uint32_t>> simplex_nbrs;  // {u,v} forms a simplex

    JoinedBuilding(const std::vector<uint32_t>& dims_, const FieldTable& f)
        : dims(dims_), F(f) {
        for (uint32_t fi = 0; fi < dims.size(); ++fi) {
            const uint32_t n = dims[fi];
            for (uint32_t k = 1; k + 1 <= n && n >= 2; ++k)
                for (auto& s : enumerate_grassmannian(n, k, F))
                    verts.push_back({fi, std::move(s)});
        }
        simplex_nbrs.resize(verts.size());
        for (uint32_t u = 0; u < verts.size(); ++u)
            for (uint32_t v = u + 1; v < verts.size(); ++v)
                if (is_simplex_pair(u, v)) {
                    simplex_nbrs[u].push_back(v);
                    simplex_nbrs[v].push_back(u);
                }
    }

    bool is_simplex_pair(uint32_t u, uint32_t v) const {
        const Vert& a = verts[u];
        const Vert& b = verts[v];
        if (u == v) return false;
        if (a.factor != b.factor) return true;  // join: any cross-factor pair
        if (a.space == b.space) return false;
        return contains(a.space, b.space, F) || contains(b.space, a.space, F);
    }

    // u, w opposite in the link of v. Assumes {u,v} and {v,w} are simplices.
    bool opposite_in_link(uint32_t u, uint32_t v, uint32_t w) const {
        const Vert& a = verts[u];
        const Vert& m = verts[v];
        const Vert& b = verts[w];
        if (a.factor != m.factor && b.factor != m.factor) {
            // both live in untouched join factors of the link
            if (a.factor != b.factor) return false;
            return a.space.dim() + b.space.dim() == dims[a.factor] &&
                   is_direct_sum(a.space, b.space, F);
        }
        if (a.factor != m.factor || b.factor != m.factor) return false;
        const bool a_below = a.space.dim() < m.space.dim();
        const bool b_below = b.space.dim() < m.space.dim();
        if (a_below != b_below) return false;
        if (a_below) {
            // opposite inside the lower building: a (+) b = m
            return a.space.dim() + b.space.dim() == m.space.dim() &&
                   sum(a.space, b.space, F) == m.space;
        }
        // opposite inside the quotient building: a cap b = m, a + b = V
        return sum(a.space, b.space, F).dim() == dims[m.factor] &&
               intersect(a.space, b.space, F) == m.space;
    }
};

std::vector<Int> count_geodesic_cycles(const std::vector<uint32_t>& dims, uint32_t q,
                                       int L, const GeodesicCaps& caps) {
    if (L < 1 || L > caps.max_length)
        throw ScaleCap("geodesic cycle length capped at " + std::to_string(caps.max_length));
    const FieldTable& F = make_field(q);
    for (uint32_t n : dims) {
        uint64_t qn = 1;
        for (uint32_t t = 0; t < n; ++t) qn *= q;
        if (qn > caps.max_qn)
            throw ScaleCap("q^n exceeds geodesic enumeration cap");
    }
    JoinedBuilding jb(dims, F);
    std::vector<Int> counts(L, Int(0));
    if (jb.verts.empty()) return counts;

    // Successors of the last step (prev, cur): neighbors w of cur with
    // (prev, cur, w) opposite in the link of cur. Memoized per step pair.
    const size_t nv = jb.verts.size();
    std::vector<std::vector<uint32_t>> step_succ(nv * nv);
    std::vector<bool> step_done(nv * nv, false);
    auto successors = [&](uint32_t prev, uint32_t cur) -> const std::vector<uint32_t>& {
        const size_t key = (size_t)prev * nv + cur;
        if (!step_done[key]) {
            for (uint32_t w : jb.simplex_nbrs[cur])
                if (jb.opposite_in_link(prev, cur, w)) step_succ[key].push_back(w);
            step_done[key] = true;
        }
        return step_succ[key];
    };

    // DFS over vertex sequences (v_0,...,v_d); each extension validates the
    // simplex pair and, for d >= 2, the opposite-in-link condition at the
    // middle vertex. A cycle of length d is recorded when v_d = v_0 and the
    // wraparound triple (v_{d-1}, v_0, v_1) is geodesic.
    std::vector<uint32_t> path;
    std::function<void(uint32_t)> dfs = [&](uint32_t depth) {
        if ((int)depth == L + 1) return;
        const uint32_t cur = path.back();
        const std::vector<uint32_t>& next =
            depth >= 2 ? successors(path[depth - 2], cur) : jb.simplex_nbrs[cur];
        for (uint32_t w : next) {
            path.push_back(w);
            if (w == path[0] && depth >= 2 &&
                jb.opposite_in_link(path[depth - 1], path[depth], path[1]))
                counts[depth - 1] += 1;
            dfs(depth + 1);
            path.pop_back();
        }
    };
    for (uint32_t s = 0; s < jb.verts.size(); ++s) {
        path.assign(1, s);
        dfs(1);
    }
    return counts;
}

}  // namespace

std::vector<Int> count_geodesic_cycles_direct(uint32_t n, uint32_t q, int L,
                                              const GeodesicCaps& caps) {
    return count_geodesic_cycles({n}, q, L, caps);
}

std::vector<Int> count_geodesic_cycles_product(const std::vector<uint32_t>& dims,
                                               uint32_t q, int L,
                                               const GeodesicCaps& caps) {
    if (dims.empty()) throw BadDimension("product building needs at least one factor");
    return count_geodesic_cycles(dims, q, L, caps);
}

}  // namespace titszeta
