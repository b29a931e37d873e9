#pragma once

#include <optional>
#include <string>

#include "titszeta/building.hpp"
#include "titszeta/zeta.hpp"

namespace titszeta {

struct VerifyOptions {
    uint32_t dense_cap = 700;   // structure-blind dense charpoly budget
    uint32_t hard_cap = 4096;   // absolute exact-determinant cap
    int max_walk_length = 12;   // trace comparison length
    int threads = 0;            // 0 = hardware concurrency
    GeodesicCaps geodesic;
};

// One verification or computation run; serializable (see report.hpp).
struct RunReport {
    std::string op;         // x0 | x2 | building | product
    std::string mode;       // formula | brute | verify
    uint32_t n = 0;
    uint32_t q = 0;
    std::string component;  // "[k]" / "[(a,b)]" / "dims=..." / "full"
    std::optional<FactoredZeta> formula;
    std::optional<IntPolynomial> brute;  // exact det(I-uA) when computed
    std::vector<Int> traces;             // closed-walk counts when trace mode
    std::string method;                  // direct | certified | traces | geodesic | none
    std::string verdict;                 // match | mismatch | computed | skipped-...
    int64_t timing_ms = 0;
    std::string note;
};

// Exact det(I - uA) for a component graph, choosing the route by size:
// structure-blind dense CRT within dense_cap; above it, for cyclic-partite
// graphs whose expected block spectrum is integral, the certified
// annihilator route on the block product (candidates from `spectrum_hint`),
// otherwise the reduced CRT charpoly. Throws TooLargeForExact above hard_cap.
IntPolynomial component_inverse_zeta(const BuildingGraph& g, const VerifyOptions& opts,
                                     const std::vector<Int>& spectrum_hint,
                                     std::string* method_out = nullptr);

// Candidate block eigenvalues q^s read off uniform factors (1 - q^s u^arity).
std::vector<Int> block_spectrum_hint(const FactoredZeta& f, uint32_t arity);

RunReport run_x0(uint32_t n, uint32_t q, uint32_t k, const std::string& mode,
                 const VerifyOptions& opts = {});
RunReport run_x2(uint32_t n, uint32_t q, const MDimClass& cls, const std::string& mode,
                 const VerifyOptions& opts = {});
// a,b select the class containing multi-dimension (a,b)
RunReport run_x2_by_mdim(uint32_t n, uint32_t q, uint32_t a, uint32_t b,
                         const std::string& mode, const VerifyOptions& opts = {});
// every class of the given ambient dimension
std::vector<RunReport> run_x2_all(uint32_t n, uint32_t q, const std::string& mode,
                                  const VerifyOptions& opts = {});
RunReport run_building(uint32_t n, uint32_t q, const std::string& mode,
                       const VerifyOptions& opts = {});
RunReport run_product(const std::vector<uint32_t>& dims, uint32_t q,
                      const std::string& mode, const VerifyOptions& opts = {});

// Geodesic-cycle DFS counts vs closed walks of X2 (exact, both sides
// computed independently).
RunReport verify_building_geodesics(uint32_t n, uint32_t q, int L,
                                    const VerifyOptions& opts = {});

// Consistency of det(I - uA) with the reversed block charpoly in u^arity:
// exact polynomial comparison within dense_cap, trace-level identity above
// it (Tr(A^l) = 0 unless arity | l, Tr(A^{arity l}) = arity Tr(B^l)).
RunReport verify_partite_block(const BuildingGraph& g, const VerifyOptions& opts = {});

}  // namespace titszeta
