#pragma once

#include <string>

#include "titszeta/verify.hpp"

namespace titszeta {

// Canonical machine form: fixed key order, integers as decimal strings,
// no floats anywhere; parsing and re-serializing is byte-identical.
std::string report_to_json(const RunReport& rep);
std::string report_to_text(const RunReport& rep);
std::string report_to_latex(const RunReport& rep);

std::string factored_to_latex(const FactoredZeta& f);

// Reproductions of the factorization tables at numeric q. LaTeX output
// renders multiplicities symbolically (q-binomial differences resp.
// dimension names); text output shows evaluated integers.
std::string render_x0_table(uint32_t q, uint32_t max_n, const std::string& format);
std::string render_x2_table(uint32_t q, uint32_t max_n, const std::string& format);

}  // namespace titszeta
