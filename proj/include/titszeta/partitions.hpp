#pragma once

#include <vector>

#include "titszeta/common.hpp"

namespace titszeta {

// Weakly decreasing positive parts; trailing zeros normalized away.
struct Partition {
    std::vector<uint32_t> parts;

    Partition() = default;
    Partition(std::initializer_list<uint32_t> p) : parts(p) { normalize(); }
    explicit Partition(std::vector<uint32_t> p) : parts(std::move(p)) { normalize(); }

    void normalize();
    uint32_t size() const;                       // sum of parts
    uint32_t part(size_t i) const { return i < parts.size() ? parts[i] : 0; }
    size_t length() const { return parts.size(); }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string to_string() const;
};

// Descending lexicographic order, (n) first, (1^n) last.
std::vector<Partition> partitions_of(uint32_t n);

bool dominates(const Partition& lam, const Partition& mu);
Partition conjugate(const Partition& lam);

// wt_r = sum C(part, 2); wt_c = wt_r of the conjugate.
Int row_weight(const Partition& lam);
Int col_weight(const Partition& lam);

// Gaussian binomial [n k]_q and multinomial [n; parts]_q at numeric q,
// exact integers; a negative part makes the multinomial 0.
Int q_binomial(uint32_t n, int64_t k, const Int& q);
Int q_multinomial(uint32_t n, const std::vector<int64_t>& parts, const Int& q);

std::vector<uint32_t> hook_lengths(const Partition& lam);

// Dimension of the unipotent representation indexed by lam at prime power q:
// q^{wt_c(lam)} * [n]_q! / prod_b [h(b)]_q.
Int d_lambda(const Partition& lam, const Int& q);

// Degree of the symmetric-group irreducible: d_lambda at q = 1.
Int deg_psi(const Partition& lam);

// Exponent n(n-1)/2 + wt_r(lam) - wt_c(lam).
Int f_lambda(const Partition& lam);

// Kostka number by semistandard tableau enumeration (oracle); cap n <= 12.
Int kostka_ssyt(const Partition& lam, const Partition& mu, uint32_t cap = 12);

// Closed form for shapes with at most 3 parts, lam dominating mu:
// min(x-i, j-z) - max(0, j-y, y-i) + 1.
Int kostka_closed3(const Partition& lam, const Partition& mu);

// Dispatch: closed form when both shapes have <= 3 parts, else enumeration.
Int kostka(const Partition& lam, const Partition& mu);

}  // namespace titszeta
