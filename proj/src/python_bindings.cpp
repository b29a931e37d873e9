#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "titszeta/hecke.hpp"
#include "titszeta/report.hpp"
#include "titszeta/verify.hpp"

namespace py = pybind11;
using namespace titszeta;

namespace {

std::vector<std::string> poly_strings(const IntPolynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.c.size());
    for (const Int& c : p.c) out.push_back(c.str());
    return out;
}

py::dict factored_dict(const FactoredZeta& f) {
    py::dict d;
    d["q"] = f.q;
    py::list factors;
    for (const auto& [p, m] : f.factors) {
        py::dict fac;
        fac["coeffs"] = poly_strings(p);
        fac["mult"] = m.str();
        factors.append(fac);
    }
    d["factors"] = factors;
    d["expanded"] = poly_strings(expand(f));
    d["pretty"] = factored_to_string(f);
    return d;
}

py::dict report_dict(const RunReport& rep) {
    py::dict d;
    d["op"] = rep.op;
    d["mode"] = rep.mode;
    d["n"] = rep.n;
    d["q"] = rep.q;
    d["component"] = rep.component;
    d["method"] = rep.method;
    d["verdict"] = rep.verdict;
    if (rep.formula) d["formula"] = factored_dict(*rep.formula);
    if (rep.brute) d["brute"] = poly_strings(*rep.brute);
    if (!rep.traces.empty()) {
        py::list tr;
        for (const Int& t : rep.traces) tr.append(t.str());
        d["counts"] = tr;
    }
    d["json"] = report_to_json(rep);
    return d;
}

Partition to_partition(const std::vector<uint32_t>& parts) {
    return Partition(std::vector<uint32_t>(parts.begin(), parts.end()));
}

}  // namespace

PYBIND11_MODULE(_titszeta, m) {
    m.doc() = "edge zeta functions of spherical buildings of GL_n(F_q)";

    m.def("q_binomial",
          [](uint32_t n, int64_t k, int64_t q) { return q_binomial(n, k, Int(q)).str(); },
          py::arg("n"), py::arg("k"), py::arg("q"));
    m.def("q_multinomial",
          [](uint32_t n, const std::vector<int64_t>& parts, int64_t q) {
              return q_multinomial(n, parts, Int(q)).str();
          });
    m.def("kostka",
          [](const std::vector<uint32_t>& lam, const std::vector<uint32_t>& mu) {
              return kostka(to_partition(lam), to_partition(mu)).str();
          });
    m.def("kostka_ssyt",
          [](const std::vector<uint32_t>& lam, const std::vector<uint32_t>& mu) {
              return kostka_ssyt(to_partition(lam), to_partition(mu)).str();
          });
    m.def("d_lambda", [](const std::vector<uint32_t>& lam, int64_t q) {
        return d_lambda(to_partition(lam), Int(q)).str();
    });
    m.def("deg_psi",
          [](const std::vector<uint32_t>& lam) { return deg_psi(to_partition(lam)).str(); });
    m.def("f_lambda",
          [](const std::vector<uint32_t>& lam) { return f_lambda(to_partition(lam)).str(); });

    m.def("x0_zeta", [](uint32_t n, uint32_t q) { return factored_dict(x0_zeta(n, q)); });
    m.def("x2_zeta", [](uint32_t n, uint32_t q) { return factored_dict(x2_zeta(n, q)); });
    m.def("building_zeta",
          [](uint32_t n, uint32_t q) { return factored_dict(building_zeta(n, q)); });
    m.def("product_building_zeta", [](const std::vector<uint32_t>& dims, uint32_t q) {
        return factored_dict(product_building_zeta(dims, q));
    });

    m.def("verify_x0",
          [](uint32_t n, uint32_t q, uint32_t k) {
              return report_dict(run_x0(n, q, k, "verify"));
          });
    m.def("verify_x2",
          [](uint32_t n, uint32_t q, uint32_t a, uint32_t b) {
              return report_dict(run_x2_by_mdim(n, q, a, b, "verify"));
          });
    m.def("verify_building",
          [](uint32_t n, uint32_t q) { return report_dict(run_building(n, q, "verify")); });
    m.def("verify_product", [](const std::vector<uint32_t>& dims, uint32_t q) {
        return report_dict(run_product(dims, q, "verify"));
    });
    m.def("geodesic_cycle_counts", [](uint32_t n, uint32_t q, int L) {
        std::vector<std::string> out;
        for (const Int& v : count_geodesic_cycles_direct(n, q, L)) out.push_back(v.str());
        return out;
    });

    m.def("verify_springer", [](uint32_t n, uint32_t q) {
        SpringerReport rep = verify_springer(n, q);
        py::dict d;
        d["n"] = rep.n;
        d["q"] = rep.q;
        d["central"] = rep.central;
        d["annihilator_zero"] = rep.annihilator_zero;
        d["ranks_match"] = rep.ranks_match;
        py::list spec;
        for (const auto& [lam, eig, mult] : rep.spectrum) {
            py::dict e;
            e["lambda"] = lam.to_string();
            e["eigenvalue"] = eig.str();
            e["multiplicity"] = mult.str();
            spec.append(e);
        }
        d["spectrum"] = spec;
        return d;
    });
    m.def("group_algebra_trace",
          [](uint32_t n, const std::vector<uint32_t>& mu, const std::vector<uint32_t>& u,
             const std::vector<int64_t>& lambda_blocks) {
              Permutation perm(u.begin(), u.end());
              Rat r = group_algebra_trace(n, to_partition(mu), perm, lambda_blocks);
              return r.str();
          });

    m.attr("__version__") = "1.0.0";
}
