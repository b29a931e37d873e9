// Command-line surface: compute, verify, and reproduce factorization
// tables for the building zeta machinery.
//
// Exit codes: 0 on success/match, 1 on mismatch or verification failure,
// 2 on invalid input.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "titszeta/hecke.hpp"
#include "titszeta/report.hpp"
#include "titszeta/verify.hpp"

namespace tz = titszeta;

namespace {

std::vector<uint32_t> parse_csv_u32(const std::string& s) {
    std::vector<uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back((uint32_t)std::stoul(item));
    return out;
}

int emit_report(const tz::RunReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << tz::report_to_json(rep) << "\n";
    else if (format == "latex")
        std::cout << tz::report_to_latex(rep);
    else
        std::cout << tz::report_to_text(rep);
    if (rep.mode == "verify") return rep.verdict == "match" ? 0 : 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge zeta functions of spherical buildings of GL_n(F_q)"};
    app.require_subcommand(1);

    std::string format = "text";

    // ---- zeta ----------------------------------------------------------
    auto* zeta = app.add_subcommand("zeta", "compute or verify a zeta factorization");
    std::string target, mode = "formula", dims_csv;
    uint32_t zq = 2, zn = 3;
    int zk = -1, za = -1, zb = -1;
    uint32_t max_vertices = 4096;
    int max_walk = 12;
    bool no_cache = false;
    zeta->add_option("target", target, "x0 | x2 | building | product")->required();
    zeta->add_option("--q", zq, "prime power")->required();
    zeta->add_option("--n", zn, "ambient dimension");
    zeta->add_option("--k", zk, "X0 class dimension");
    zeta->add_option("--a", za, "X2 multi-dimension, first entry");
    zeta->add_option("--b", zb, "X2 multi-dimension, second entry");
    zeta->add_option("--dims", dims_csv, "product factor dimensions, comma separated");
    zeta->add_option("--mode", mode, "formula | brute | verify");
    zeta->add_option("--format", format, "text | json | latex");
    zeta->add_option("--max-vertices", max_vertices, "exact determinant cap");
    zeta->add_option("--max-walk-length", max_walk, "trace comparison length");
    zeta->add_flag("--no-cache", no_cache, "bypass the subspace cache");

    // ---- tables --------------------------------------------------------
    auto* tables = app.add_subcommand("tables", "reproduce the factorization tables");
    std::string which = "x0";
    uint32_t tq = 2, tmax = 5;
    tables->add_option("--which", which, "x0 | x2")->required();
    tables->add_option("--q", tq, "prime power")->required();
    tables->add_option("--max-n", tmax, "largest ambient dimension");
    tables->add_option("--format", format, "text | latex");

    // ---- hecke ---------------------------------------------------------
    auto* hecke = app.add_subcommand("hecke", "Hecke algebra verifications");
    hecke->require_subcommand(1);
    auto* hverify = hecke->add_subcommand("verify", "spectrum of a_{w0}^2");
    uint32_t hn = 3, hq = 2;
    hverify->add_option("--n", hn)->required();
    hverify->add_option("--q", hq)->required();
    hverify->add_option("--format", format, "text | json");
    auto* htraces = hecke->add_subcommand("traces", "group algebra traces of e_mu u e_mu");
    uint32_t trn = 6;
    std::string mu_csv = "2,2,2";
    htraces->add_option("--n", trn)->required();
    htraces->add_option("--mu", mu_csv)->required();
    htraces->add_option("--format", format, "text | json");

    // ---- kostka --------------------------------------------------------
    auto* kostka = app.add_subcommand("kostka", "Kostka numbers");
    std::string lam_csv, kmu_csv, method = "both";
    kostka->add_option("--lambda", lam_csv)->required();
    kostka->add_option("--mu", kmu_csv)->required();
    kostka->add_option("--method", method, "ssyt | closed | both");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*zeta) {
            tz::global_cache().enabled = !no_cache;
            tz::VerifyOptions opts;
            opts.hard_cap = max_vertices;
            opts.max_walk_length = max_walk;
            if (mode != "formula" && mode != "brute" && mode != "verify") {
                std::cerr << "unknown mode " << mode << "\n";
                return 2;
            }
            if (target == "x0") {
                if (zk < 0) {
                    std::cerr << "x0 requires --k\n";
                    return 2;
                }
                return emit_report(tz::run_x0(zn, zq, (uint32_t)zk, mode, opts), format);
            }
            if (target == "x2") {
                if ((za < 0) != (zb < 0)) {
                    std::cerr << "x2 takes --a and --b together\n";
                    return 2;
                }
                if (za >= 0)
                    return emit_report(
                        tz::run_x2_by_mdim(zn, zq, (uint32_t)za, (uint32_t)zb, mode, opts),
                        format);
                // no class selected: run every class of this dimension
                int rc = 0;
                for (const auto& rep : tz::run_x2_all(zn, zq, mode, opts))
                    rc = std::max(rc, emit_report(rep, format));
                return rc;
            }
            if (target == "building")
                return emit_report(tz::run_building(zn, zq, mode, opts), format);
            if (target == "product") {
                if (dims_csv.empty()) {
                    std::cerr << "product requires --dims\n";
                    return 2;
                }
                return emit_report(tz::run_product(parse_csv_u32(dims_csv), zq, mode, opts),
                                   format);
            }
            std::cerr << "unknown target " << target << "\n";
            return 2;
        }

        if (*tables) {
            if (which == "x0")
                std::cout << tz::render_x0_table(tq, tmax, format);
            else if (which == "x2")
                std::cout << tz::render_x2_table(tq, tmax, format);
            else {
                std::cerr << "unknown table " << which << "\n";
                return 2;
            }
            return 0;
        }

        if (*hverify) {
            tz::SpringerReport rep = tz::verify_springer(hn, hq);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["version"] = 1;
                j["kind"] = "hecke-verify";
                j["n"] = rep.n;
                j["q"] = rep.q;
                j["central"] = rep.central;
                j["annihilator_zero"] = rep.annihilator_zero;
                j["ranks_match"] = rep.ranks_match;
                auto& spec = j["spectrum"] = nlohmann::ordered_json::array();
                for (const auto& [lam, eig, mult] : rep.spectrum)
                    spec.push_back({{"lambda", lam.to_string()},
                                    {"eigenvalue", eig.str()},
                                    {"multiplicity", mult.str()}});
                std::cout << j.dump() << "\n";
                return 0;
            }
            std::cout << "a_{w0}^2 on the regular module, n=" << rep.n << " q=" << rep.q
                      << "\n  central: yes\n  annihilating polynomial: zero\n";
            for (const auto& [lam, eig, mult] : rep.spectrum)
                std::cout << "  lambda=" << lam.to_string() << "  eigenvalue " << eig
                          << "  multiplicity " << mult << "\n";
            std::cout << "  rank multiplicities match: yes\n";
            return 0;
        }

        if (*htraces) {
            auto mu_parts = parse_csv_u32(mu_csv);
            tz::Partition mu(std::vector<uint32_t>(mu_parts.begin(), mu_parts.end()));
            if (mu.size() != trn) {
                std::cerr << "mu must be a partition of n\n";
                return 2;
            }
            tz::Permutation u = (trn % 3 == 0 && mu.length() == 3 &&
                                 mu.part(0) == mu.part(1) && mu.part(1) == mu.part(2))
                                    ? tz::threefold_shift(trn)
                                    : tz::longest_element(trn);
            const bool is_w0 = (u == tz::longest_element(trn));
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            std::ostringstream text;
            text << "traces of e_mu u e_mu, n=" << trn << " mu=" << mu.to_string()
                 << (is_w0 ? " u=w0" : " u=w1") << "\n";
            for (const auto& lam : tz::partitions_of(trn)) {
                if (lam.length() > 3 || !tz::dominates(lam, mu)) continue;
                tz::Rat phi = tz::group_algebra_trace(
                    trn, mu, u,
                    {(int64_t)lam.part(0), (int64_t)lam.part(1), (int64_t)lam.part(2)});
                tz::Rat psi = tz::psi_trace(trn, mu, u, lam);
                text << "  lambda=" << lam.to_string() << "  phi=" << phi
                     << "  psi=" << psi << "\n";
                rows.push_back({{"lambda", lam.to_string()},
                                {"phi", phi.str()},
                                {"psi", psi.str()}});
            }
            if (format == "json") {
                nlohmann::ordered_json j;
                j["version"] = 1;
                j["kind"] = "hecke-traces";
                j["n"] = trn;
                j["mu"] = mu.to_string();
                j["u"] = is_w0 ? "w0" : "w1";
                j["rows"] = std::move(rows);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << text.str();
            }
            return 0;
        }

        if (*kostka) {
            auto lp = parse_csv_u32(lam_csv);
            auto mp = parse_csv_u32(kmu_csv);
            tz::Partition lam(std::vector<uint32_t>(lp.begin(), lp.end()));
            tz::Partition mu(std::vector<uint32_t>(mp.begin(), mp.end()));
            if (method == "ssyt") {
                std::cout << tz::kostka_ssyt(lam, mu) << "\n";
            } else if (method == "closed") {
                std::cout << tz::kostka_closed3(lam, mu) << "\n";
            } else {
                tz::Int a = tz::kostka_ssyt(lam, mu);
                if (lam.length() <= 3 && mu.length() <= 3 && tz::dominates(lam, mu)) {
                    tz::Int b = tz::kostka_closed3(lam, mu);
                    if (a != b) {
                        std::cerr << "ssyt=" << a << " closed=" << b << " disagree\n";
                        return 1;
                    }
                    std::cout << a << " (ssyt and closed form agree)\n";
                } else {
                    std::cout << a << " (ssyt)\n";
                }
            }
            return 0;
        }
    } catch (const tz::VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const tz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
