#include "titszeta/subspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace titszeta {

bool Subspace::operator<(const Subspace& o) const {
    if (n != o.n) return n < o.n;
    if (rows.size() != o.rows.size()) return rows.size() < o.rows.size();
    return rows < o.rows;
}

std::vector<uint32_t> Subspace::flattened() const {
    std::vector<uint32_t> f;
    f.reserve(rows.size() * n);
    for (const auto& r : rows) f.insert(f.end(), r.begin(), r.end());
    return f;
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<uint32_t> rref(std::vector<std::vector<uint32_t>>& m, uint32_t n,
                           const FieldTable& F) {
    std::vector<uint32_t> pivots;
    size_t row = 0;
    for (uint32_t col = 0; col < n && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        uint32_t piv_inv = F.inv(m[row][col]);
        for (uint32_t j = col; j < n; ++j) m[row][j] = F.mul(m[row][j], piv_inv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            uint32_t f = m[i][col];
            for (uint32_t j = col; j < n; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

Subspace make_subspace(std::vector<std::vector<uint32_t>> rows, uint32_t n,
                       const FieldTable& F) {
    Subspace s;
    s.n = n;
    s.pivot_cols = rref(rows, n, F);
    s.rows = std::move(rows);
    return s;
}

}  // namespace

Subspace canonicalize(const std::vector<std::vector<uint32_t>>& rows, uint32_t n,
                      const FieldTable& F) {
    for (const auto& r : rows)
        if (r.size() != n) throw AmbientMismatch("row length != ambient dimension");
    Subspace s = make_subspace(rows, n, F);
    if (s.rows.empty()) throw ZeroSpace("all rows are zero");
    return s;
}

Subspace sum(const Subspace& a, const Subspace& b, const FieldTable& F) {
    if (a.n != b.n) throw AmbientMismatch("sum: ambient dimensions differ");
    std::vector<std::vector<uint32_t>> stacked = a.rows;
    stacked.insert(stacked.end(), b.rows.begin(), b.rows.end());
    return make_subspace(std::move(stacked), a.n, F);
}

Subspace intersect(const Subspace& a, const Subspace& b, const FieldTable& F) {
    if (a.n != b.n) throw AmbientMismatch("intersect: ambient dimensions differ");
    // Kernel of the stacked system: coefficient vectors (c,d) with
    // c·A + d·B = 0; the c-part spans the intersection through A.
    const uint32_t ka = a.dim(), kb = b.dim();
    const uint32_t rows_total = ka + kb;
    if (ka == 0 || kb == 0) return Subspace{a.n, {}, {}};
    // Augment [stacked | I] and reduce; zero rows of the left block expose
    // kernel vectors in the right block.
    std::vector<std::vector<uint32_t>> m(rows_total,
                                         std::vector<uint32_t>(a.n + rows_total, 0));
    for (uint32_t i = 0; i < ka; ++i)
        for (uint32_t j = 0; j < a.n; ++j) m[i][j] = a.rows[i][j];
    for (uint32_t i = 0; i < kb; ++i)
        for (uint32_t j = 0; j < a.n; ++j) m[ka + i][j] = b.rows[i][j];
    for (uint32_t i = 0; i < rows_total; ++i) m[i][a.n + i] = 1;

    // Eliminate on the first n columns only.
    size_t row = 0;
    for (uint32_t col = 0; col < a.n && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        uint32_t piv_inv = F.inv(m[row][col]);
        for (size_t j = 0; j < m[row].size(); ++j) m[row][j] = F.mul(m[row][j], piv_inv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            uint32_t f = m[i][col];
            for (size_t j = 0; j < m[i].size(); ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
        }
        ++row;
    }
    std::vector<std::vector<uint32_t>> basis;
    for (size_t i = row; i < m.size(); ++i) {
        // kernel coefficients c = m[i][n .. n+ka)
        std::vector<uint32_t> v(a.n, 0);
        for (uint32_t r = 0; r < ka; ++r) {
            uint32_t c = m[i][a.n + r];
            if (c == 0) continue;
            for (uint32_t j = 0; j < a.n; ++j)
                v[j] = F.add(v[j], F.mul(c, a.rows[r][j]));
        }
        basis.push_back(std::move(v));
    }
    Subspace s = make_subspace(std::move(basis), a.n, F);
    // Grassmann identity: dim(sum) + dim(intersect) = dim a + dim b,
    // where `row` is the rank of the stacked basis, i.e. dim(sum).
    if (s.dim() + row != ka + kb)
        throw VerificationFailed("Grassmann dimension identity violated");
    return s;
}

bool is_direct_sum(const Subspace& a, const Subspace& b, const FieldTable& F) {
    if (a.n != b.n) throw AmbientMismatch("is_direct_sum: ambient dimensions differ");
    if (a.dim() + b.dim() != a.n) return false;
    return sum(a, b, F).dim() == a.n;
}

bool contains(const Subspace& outer, const Subspace& inner, const FieldTable& F) {
    if (outer.n != inner.n) throw AmbientMismatch("contains: ambient dimensions differ");
    if (inner.dim() > outer.dim()) return false;
    return sum(outer, inner, F).dim() == outer.dim();
}

std::vector<Subspace> enumerate_grassmannian(uint32_t n, uint32_t k, const FieldTable& F) {
    if (k < 1 || k > n - 1) throw BadDimension("need 1 <= k <= n-1");
    const uint32_t q = F.q();
    std::vector<Subspace> out;

    // One RREF shape per pivot-column set; free positions are (i,j) with
    // j > pivot_i and j not a pivot column.
    std::vector<uint32_t> piv(k);
    for (uint32_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_piv(n, false);
        for (uint32_t c : piv) is_piv[c] = true;
        std::vector<std::pair<uint32_t, uint32_t>> free_pos;
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);

        uint64_t total = 1;
        for (size_t i = 0; i < free_pos.size(); ++i) total *= q;
        for (uint64_t code = 0; code < total; ++code) {
            Subspace s;
            s.n = n;
            s.pivot_cols = piv;
            s.rows.assign(k, std::vector<uint32_t>(n, 0));
            for (uint32_t i = 0; i < k; ++i) s.rows[i][piv[i]] = 1;
            uint64_t c = code;
            for (const auto& [i, j] : free_pos) {
                s.rows[i][j] = (uint32_t)(c % q);
                c /= q;
            }
            out.push_back(std::move(s));
        }
        // next pivot combination
        int t = (int)k - 1;
        while (t >= 0 && piv[t] == n - k + t) --t;
        if (t < 0) break;
        ++piv[t];
        for (uint32_t j = t + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DirectedFlag> enumerate_directed_flags(uint32_t n, const FieldTable& F,
                                                   std::pair<uint32_t, uint32_t> mdim) {
    auto [a, b] = mdim;
    if (a < 1 || a > n - 1 || b < 1 || b > n - 1 || a == b)
        throw BadMultiDimension("need 1 <= a,b <= n-1 and a != b");
    const uint32_t lo = std::min(a, b), hi = std::max(a, b);
    auto small = enumerate_grassmannian(n, lo, F);
    auto big = enumerate_grassmannian(n, hi, F);
    std::vector<DirectedFlag> out;
    for (const auto& s : small)
        for (const auto& t : big)
            if (contains(t, s, F)) {
                if (a < b)
                    out.push_back({s, t});
                else
                    out.push_back({t, s});
            }
    std::sort(out.begin(), out.end());
    return out;
}

// --- cache -------------------------------------------------------------

uint64_t pack_row(const std::vector<uint32_t>& row, uint32_t q) {
    uint64_t v = 0;
    for (size_t j = row.size(); j-- > 0;) v = v * q + row[j];
    return v;
}

std::vector<uint32_t> unpack_row(uint64_t v, uint32_t q, uint32_t n) {
    std::vector<uint32_t> row(n, 0);
    for (uint32_t j = 0; j < n; ++j) {
        row[j] = (uint32_t)(v % q);
        v /= q;
    }
    return row;
}

CacheConfig& global_cache() {
    static CacheConfig cfg;
    return cfg;
}

std::string resolve_cache_dir(const CacheConfig& cfg) {
    if (!cfg.dir.empty()) return cfg.dir;
    if (const char* env = std::getenv("TITS_ZETA_CACHE")) return env;
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/titszeta";
    return ".titszeta-cache";
}

std::vector<Subspace> enumerate_grassmannian_cached(uint32_t n, uint32_t k,
                                                    const FieldTable& F,
                                                    const CacheConfig& cfg) {
    if (!cfg.enabled) return enumerate_grassmannian(n, k, F);
    namespace fs = std::filesystem;
    const std::string dir = resolve_cache_dir(cfg);
    const std::string path = dir + "/grassmannian_n" + std::to_string(n) + "_q" +
                             std::to_string(F.q()) + "_k" + std::to_string(k) + ".json";
    std::error_code ec;
    if (fs::exists(path, ec)) {
        std::ifstream in(path);
        nlohmann::json j;
        in >> j;
        if (j.value("version", 0) == 1 && j.value("n", 0u) == n &&
            j.value("q", 0u) == F.q() && j.value("k", 0u) == k) {
            std::vector<Subspace> out;
            for (const auto& basis : j.at("bases")) {
                std::vector<std::vector<uint32_t>> rows;
                for (const auto& rv : basis)
                    rows.push_back(unpack_row(rv.get<uint64_t>(), F.q(), n));
                out.push_back(canonicalize(rows, n, F));
            }
            return out;
        }
    }
    auto out = enumerate_grassmannian(n, k, F);
    fs::create_directories(dir, ec);
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = n;
    j["q"] = F.q();
    j["k"] = k;
    auto& bases = j["bases"] = nlohmann::ordered_json::array();
    for (const auto& s : out) {
        nlohmann::ordered_json basis = nlohmann::ordered_json::array();
        for (const auto& r : s.rows) basis.push_back(pack_row(r, F.q()));
        bases.push_back(std::move(basis));
    }
    std::ofstream(path) << j.dump();
    return out;
}

}  // namespace titszeta
