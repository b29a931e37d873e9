#include "titszeta/report.hpp"

#include <sstream>

#include <json.hpp>

namespace titszeta {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_json(const IntPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const Int& c : p.c) arr.push_back(c.str());
    return arr;
}

ordered_json factors_json(const FactoredZeta& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [p, m] : f.factors) {
        ordered_json fac;
        fac["coeffs"] = poly_json(p);
        fac["mult"] = m.str();
        arr.push_back(std::move(fac));
    }
    return arr;
}

}  // namespace

std::string report_to_json(const RunReport& rep) {
    ordered_json j;
    j["version"] = 1;
    j["kind"] = "zeta";
    j["op"] = rep.op;
    j["mode"] = rep.mode;
    j["q"] = rep.q;
    j["n"] = rep.n;
    j["component"] = rep.component;
    j["method"] = rep.method;
    if (rep.formula) {
        j["factors"] = factors_json(*rep.formula);
        j["expanded"] = poly_json(expand(*rep.formula));
    }
    if (rep.brute) j["brute"] = poly_json(*rep.brute);
    if (!rep.traces.empty()) {
        ordered_json arr = ordered_json::array();
        for (const Int& t : rep.traces) arr.push_back(t.str());
        j["traces"] = std::move(arr);
    }
    j["verdict"] = rep.verdict;
    if (!rep.note.empty()) j["note"] = rep.note;
    j["timing_ms"] = rep.timing_ms;
    return j.dump();
}

std::string report_to_text(const RunReport& rep) {
    std::ostringstream os;
    os << rep.op << " " << rep.component;
    if (rep.n) os << " n=" << rep.n;
    os << " q=" << rep.q << " mode=" << rep.mode << " method=" << rep.method << "\n";
    if (rep.formula) {
        os << "  formula: " << factored_to_string(*rep.formula) << "\n";
        os << "  expanded: " << poly_to_string(expand(*rep.formula)) << "\n";
    }
    if (rep.brute) os << "  brute: " << poly_to_string(*rep.brute) << "\n";
    if (!rep.traces.empty()) {
        os << "  counts:";
        for (const Int& t : rep.traces) os << " " << t;
        os << "\n";
    }
    os << "  verdict: " << rep.verdict;
    if (!rep.note.empty()) os << " (" << rep.note << ")";
    os << "  [" << rep.timing_ms << " ms]\n";
    return os.str();
}

namespace {

std::string poly_latex(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.c.size(); ++i) {
        const Int& a = p.c[i];
        if (a == 0) continue;
        Int abs_a = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || abs_a != 1) os << abs_a << (i >= 1 ? " " : "");
        if (i >= 1) os << "u" << (i > 1 ? "^{" + std::to_string(i) + "}" : "");
    }
    return os.str();
}

}  // namespace

std::string factored_to_latex(const FactoredZeta& f) {
    if (f.factors.empty()) return "1";
    std::ostringstream os;
    for (const auto& [p, m] : f.factors) {
        os << "(" << poly_latex(p) << ")";
        if (m != 1) os << "^{" << m.str() << "}";
        os << " ";
    }
    std::string s = os.str();
    s.pop_back();
    return s;
}

std::string report_to_latex(const RunReport& rep) {
    std::ostringstream os;
    os << "% " << rep.op << " " << rep.component << " q=" << rep.q << "\n";
    if (rep.formula) os << "$" << factored_to_latex(*rep.formula) << "$\n";
    if (rep.brute) os << "$" << poly_latex(*rep.brute) << "$\n";
    return os.str();
}

// --- table reproductions ----------------------------------------------

namespace {

std::string qpow_latex(const Int& s) {
    if (s == 0) return "";
    if (s == 1) return "q ";
    return "q^{" + s.str() + "} ";
}

std::string mult_label_x0(uint32_t n, int64_t j, bool latex, const Int& value) {
    if (!latex) return value.str();
    if (j == 0) return "";
    std::string qb = "\\qbinom{" + std::to_string(n) + "}{" + std::to_string(j) + "}";
    std::string qb1 = j == 1 ? std::string("1")
                             : "\\qbinom{" + std::to_string(n) + "}{" +
                                   std::to_string(j - 1) + "}";
    return qb + "-" + qb1;
}

// factor string for one X0 class row
std::string x0_row(uint32_t n, uint32_t i, uint32_t q, bool latex) {
    std::ostringstream os;
    const Int qi(q);
    const bool special = (2 * i == n);
    for (int64_t j = i; j >= 0; --j) {
        const Int d = q_binomial(n, j, qi) - q_binomial(n, j - 1, qi);
        std::string mult = mult_label_x0(n, j, latex, d);
        auto coeff_text = [&](int64_t s) {
            Int v = int_pow(qi, (uint64_t)s);
            return v == 1 ? std::string() : v.str();
        };
        if (special) {
            const int64_t k = i;
            const int64_t s = k * k - k * j + (j * j - j) / 2;
            const bool neg = (j % 2) != 0;
            if (latex)
                os << "(1 " << (neg ? "+ " : "- ") << qpow_latex(Int(s)) << "u)";
            else
                os << "(1 " << (neg ? "+ " : "- ") << coeff_text(s) << "u)";
        } else {
            const int64_t s = -j * (n - j + 1) + 2 * (int64_t)i * (n - i);
            if (latex)
                os << "(1 - " << qpow_latex(Int(s)) << "u^2)";
            else
                os << "(1 - " << coeff_text(s) << "u^2)";
        }
        if (!mult.empty() && mult != "1" && !(latex && j == 0))
            os << (latex ? "^{" + mult + "}" : "^" + mult);
        if (j > 0) os << " ";
    }
    return os.str();
}

}  // namespace

std::string render_x0_table(uint32_t q, uint32_t max_n, const std::string& format) {
    const bool latex = (format == "latex");
    std::ostringstream os;
    if (latex) {
        os << "\\begin{tabular}{|c||c|c|c|}\\hline\n";
        os << "$n$ & $i=0$ & $i=1$ & $i=2$ \\\\ \\hline\n";
    } else {
        os << "inverse zeta of X0 components, q=" << q << "\n";
    }
    for (uint32_t n = 2; n <= max_n; ++n) {
        std::ostringstream row;
        if (latex) {
            row << n << " & $1 - u^2$";
            for (uint32_t i = 1; 2 * i <= n; ++i) row << " & $" << x0_row(n, i, q, true) << "$";
            for (uint32_t i = n / 2 + 1; i <= 2; ++i) row << " & ";
            row << " \\\\ \\hline\n";
        } else {
            row << "n=" << n << ":";
            for (uint32_t i = 1; 2 * i <= n; ++i)
                row << "  [" << i << "] " << x0_row(n, i, q, false);
            row << "\n";
        }
        os << row.str();
    }
    if (latex) os << "\\end{tabular}\n% the i=0 column has no component subgraph\n";
    return os.str();
}

namespace {

// factors of one X2 class row with multiplicities shown as K d_{(lambda)}
std::string x2_row_latex(uint32_t n, const MDimClass& cls, uint32_t q) {
    std::vector<uint32_t> mp{cls.i, cls.j, cls.k};
    std::sort(mp.rbegin(), mp.rend());
    const Partition mu(mp);
    const Int two_wt = 2 * row_weight(mu);
    std::ostringstream os;
    auto dname = [](const Partition& lam, const Int& small) {
        std::string s = small == 1 ? "" : small.str() + " ";
        return "^{" + s + "d_{" + lam.to_string() + "}}";
    };
    for (const Partition& lam : partitions_of(n)) {
        if (lam.length() > 3 || !dominates(lam, mu)) continue;
        const Int kost = kostka_closed3(lam, mu);
        const Int s = f_lambda(lam) - two_wt;
        if (!cls.is_special()) {
            os << "(1 - " << qpow_latex(s) << "u^6)";
            if (!(kost == 1 && lam == Partition{n})) os << dname(lam, kost);
            os << " ";
            continue;
        }
        const uint32_t y = lam.part(1), z = lam.part(2);
        const uint32_t r3 = (y - z) % 3;
        const Int m1 = r3 == 0 ? Int((kost + 2) / 3)
                               : (r3 == 1 ? Int((kost - 2) / 3) : Int(kost / 3));
        const Int mw = r3 == 0 ? Int((kost - 1) / 3)
                               : (r3 == 1 ? Int((kost + 1) / 3) : Int(kost / 3));
        const Int shared = m1 < mw ? m1 : mw;
        if (shared > 0)
            os << "(1 - " << qpow_latex(s) << "u^6)" << dname(lam, shared) << " ";
        if (m1 > mw)
            os << "(1 - " << qpow_latex(s / 3) << "u^2)" << dname(lam, m1 - mw) << " ";
        if (mw > m1)
            os << "(1 + " << qpow_latex(s / 3) << "u^2 + " << qpow_latex(2 * s / 3)
               << "u^4)" << dname(lam, mw - m1) << " ";
    }
    std::string out = os.str();
    if (!out.empty()) out.pop_back();
    return out;
}

}  // namespace

std::string render_x2_table(uint32_t q, uint32_t max_n, const std::string& format) {
    const bool latex = (format == "latex");
    std::ostringstream os;
    if (latex)
        os << "\\begin{tabular}{|c||c|}\\hline\n$(i,j,k)$ & $1/Z$ \\\\ \\hline\n";
    else
        os << "inverse zeta of X2 components, q=" << q << "\n";
    for (uint32_t n = 3; n <= max_n; ++n) {
        for (const auto& cls : mdim_classes(n)) {
            std::ostringstream trip;
            trip << "(" << cls.i << ", " << cls.j << ", " << cls.k << ")";
            if (latex) {
                os << trip.str() << " & $" << x2_row_latex(n, cls, q) << "$ \\\\ \\hline\n";
            } else {
                FactoredZeta f = cls.is_special()
                                     ? x2_special(n, q)
                                     : x2_generic(n, {cls.i, cls.j, cls.k}, q);
                os << trip.str() << "  " << factored_to_string(f) << "\n";
            }
        }
    }
    if (latex) os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace titszeta
