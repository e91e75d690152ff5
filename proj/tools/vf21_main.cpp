// Command-line front end: evaluation, tensor dumps, the identity suite,
// character tables and OPE coefficient tables.
//
// Exit codes: 0 = pass, 1 = gating check failure, 2 = usage/config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vf21/elliptic.hpp"
#include "vf21/face_weights.hpp"
#include "vf21/identity.hpp"
#include "vf21/intertwiners.hpp"
#include "vf21/ope.hpp"
#include "vf21/report.hpp"
#include "vf21/spectra.hpp"
#include "vf21/vertex_weights.hpp"

namespace {

std::string dbl(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump_tensor(std::ostream& os, const vf21::WeightTensor& T, bool csv) {
    if (csv) os << "o1,o2,i1,i2,value\n";
    for (int o1 = 0; o1 < T.dims[0]; ++o1)
        for (int o2 = 0; o2 < T.dims[1]; ++o2)
            for (int i1 = 0; i1 < T.dims[2]; ++i1)
                for (int i2 = 0; i2 < T.dims[3]; ++i2) {
                    if (csv)
                        os << o1 << ',' << o2 << ',' << i1 << ',' << i2 << ','
                           << dbl(T.at(o1, o2, i1, i2)) << '\n';
                    else
                        os << "(" << o1 << o2 << "|" << i1 << i2
                           << ") = " << dbl(T.at(o1, o2, i1, i2)) << '\n';
                }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-face toolkit for the spin-1 eight-vertex model and its fusion SOS partner"};
    app.require_subcommand(1);

    double x = 0.3, r = 4.5, u = 0.5, u2 = 0.0;
    long long hc = 5, hd = 5, hb = 5, ha = 5;
    int N = 12, emax = 12, sector = 0;
    long long lheight = 0, kheight = 0;
    bool csv = false;

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate a weight or special function");
    std::string kind;
    eval->add_option("kind", kind,
                     "theta|bracket|r8|r18|r21|r21table|w|w22|L")->required();
    eval->add_option("--x", x, "nome parameter x in (0,1)");
    eval->add_option("--r", r, "modulus r > 2");
    eval->add_option("--eps", u2, "epsilon (overrides --x when positive)");
    eval->add_option("--u", u, "spectral parameter");
    eval->add_option("--u0", u2, "second spectral parameter (L)");
    eval->add_option("--a", ha, "SE height");
    eval->add_option("--b", hb, "SW height");
    eval->add_option("--c", hc, "NW height");
    eval->add_option("--d", hd, "NE height");
    eval->add_flag("--csv", csv, "machine-readable output");

    // ---- dump ----
    auto* dump = app.add_subcommand("dump", "dump a weight tensor as CSV");
    std::string dkind;
    dump->add_option("kind", dkind, "r8|r18|r21|r21table|s21|w22bar")->required();
    dump->add_option("--x", x, "nome parameter");
    dump->add_option("--r", r, "modulus");
    dump->add_option("--u", u, "spectral parameter");
    dump->add_option("--k", kheight, "base height for w22bar");

    // ---- check ----
    auto* check = app.add_subcommand("check", "run the identity suite");
    std::string config_path, out_dir = ".", only;
    check->add_option("--config", config_path, "JSON config file");
    check->add_option("--out", out_dir, "output directory for report files");
    check->add_option("--only", only, "run a single check id");
    check->add_option("--seed", N, "seed override")->default_val(-1);
    bool serial = false;
    check->add_flag("--serial", serial, "use the serial reference executor");

    // ---- characters ----
    auto* chars = app.add_subcommand("characters", "CTM character tables");
    chars->add_option("--i", sector, "sector 0|1|2")->required();
    chars->add_option("--emax", emax, "energy cutoff");
    chars->add_option("--l", lheight, "face boundary height l");
    chars->add_option("--k", kheight, "face base height k (enables face table)");
    bool face_mode = false;
    chars->add_flag("--face", face_mode, "emit the face path-space table");

    // ---- ope ----
    auto* ope = app.add_subcommand("ope", "operator-product coefficient tables");
    std::string pair = "Phi1Phi1";
    ope->add_option("--pair", pair, "pair tag, e.g. Phi1Phi1")->required();
    ope->add_option("--n", N, "expansion order");
    ope->add_option("--x", x, "nome parameter");
    ope->add_option("--r", r, "modulus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            vf21::ModelParams p = vf21::ModelParams::from_x(x, r);
            if (kind == "theta") {
                std::cout << "theta_q(x^2u, x^2r) = "
                          << dbl(vf21::theta_q(std::pow(p.x, 2 * u), std::pow(p.x, 2 * p.r), p))
                          << "\n";
            } else if (kind == "bracket") {
                std::cout << dbl(vf21::br(u, p)) << "\n";
            } else if (kind == "r8") {
                dump_tensor(std::cout, vf21::r8v(u, p), csv);
            } else if (kind == "r18") {
                dump_tensor(std::cout, vf21::r18v(u, p), csv);
            } else if (kind == "r21") {
                dump_tensor(std::cout, vf21::r21v_fused(u, p), csv);
            } else if (kind == "r21table") {
                dump_tensor(std::cout, vf21::r21v_table(u, p), csv);
            } else if (kind == "w") {
                std::cout << dbl(vf21::w_sos(hc, hd, hb, ha, u, p)) << "\n";
            } else if (kind == "w22") {
                std::cout << dbl(vf21::w22(hc, hd, hb, ha, u, p)) << "\n";
            } else if (kind == "L") {
                std::cout << dbl(vf21::l_op_explicit(hc, hd, hb, ha, u2, p)) << "\n";
            } else {
                std::cerr << "unknown eval kind\n";
                return 2;
            }
            return 0;
        }
        if (*dump) {
            vf21::ModelParams p = vf21::ModelParams::from_x(x, r);
            if (dkind == "r8") dump_tensor(std::cout, vf21::r8v(u, p), true);
            else if (dkind == "r18") dump_tensor(std::cout, vf21::r18v(u, p), true);
            else if (dkind == "r21") dump_tensor(std::cout, vf21::r21v_fused(u, p), true);
            else if (dkind == "r21table") dump_tensor(std::cout, vf21::r21v_table(u, p), true);
            else if (dkind == "s21") dump_tensor(std::cout, vf21::s21v_fused(u, p), true);
            else if (dkind == "w22bar") {
                std::cout << "c,d,b,a,value\n";
                const long long k = kheight ? kheight : 5;
                for (long long dd : {-2, 0, 2})
                    for (long long dc : {-2, 0, 2})
                        for (long long db : {-2, 0, 2}) {
                            const long long a = k, b = k + db, d = k + dd, c = d + dc;
                            if (!vf21::adm_fused(b, c)) continue;
                            const double v = vf21::wbar22(c, d, b, a, u, p);
                            if (v == 0.0) continue;
                            std::cout << c << ',' << d << ',' << b << ',' << a << ','
                                      << dbl(v) << '\n';
                        }
            } else {
                std::cerr << "unknown dump kind\n";
                return 2;
            }
            return 0;
        }
        if (*check) {
            vf21::SuiteConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) {
                    std::cerr << "cannot read config: " << config_path << "\n";
                    return 2;
                }
                std::ostringstream ss;
                ss << in.rdbuf();
                cfg = vf21::parse_config(ss.str());
            }
            if (N >= 0) cfg.seed = static_cast<uint64_t>(N);
            if (!only.empty()) cfg.only = {only};
            const auto reports = serial ? vf21::run_suite_serial(cfg) : vf21::run_suite(cfg);
            std::ofstream(out_dir + "/report.json") << vf21::render_json(cfg, reports);
            std::ofstream(out_dir + "/report.csv") << vf21::render_csv(reports);
            const auto s = vf21::summarize(reports);
            std::cout << "checks: " << s.total << "  passed: " << s.passed
                      << "  gating failures: " << s.gating_failures
                      << "  informational: " << s.informational << "\n";
            for (const auto& rep : reports)
                if (!rep.pass && rep.gating)
                    std::cout << "FAIL " << rep.check_id << "[" << rep.sample_index
                              << "] residual=" << dbl(rep.residual) << " (" << rep.params
                              << ")\n";
            return s.gating_failures == 0 ? 0 : 1;
        }
        if (*chars) {
            if (face_mode) {
                const auto dp = vf21::face_partition_series(sector, lheight, kheight, emax);
                std::cout << "degree,count\n";
                for (int e = 0; e <= emax; ++e) std::cout << e << ',' << dp.c[e] << '\n';
            } else {
                const auto dp = vf21::vertex_partition_series(sector, emax);
                const auto pr = vf21::chi_product_series(sector, emax);
                std::cout << "degree,enumeration,product,match\n";
                for (int e = 0; e <= emax; ++e)
                    std::cout << e << ',' << dp.c[e] << ',' << pr.c[e] << ','
                              << (dp.c[e] == pr.c[e] ? 1 : 0) << '\n';
            }
            return 0;
        }
        if (*ope) {
            vf21::ModelParams p = vf21::ModelParams::from_x(x, r);
            const auto& pairs = vf21::printed_pairs(p);
            const vf21::PrintedPair* found = nullptr;
            for (const auto& pp : pairs)
                if (pp.name == pair) found = &pp;
            if (!found) {
                std::cerr << "unknown pair tag: " << pair << "\n";
                return 2;
            }
            const auto mine = vf21::contraction_series(found->o1, found->o2, N, p);
            const auto ref = vf21::printed_series(*found, N, p);
            std::cout << "order,computed,printed,residual\n";
            double w = 1.0, scale = 0.0;
            for (int m = 0; m <= N; ++m) scale = std::max(scale, std::abs(ref.c[m] / std::pow(found->rescale, m)));
            for (int m = 0; m <= N; ++m) {
                w = std::pow(found->rescale, -m);
                std::cout << m << ',' << dbl(mine.c[m]) << ',' << dbl(ref.c[m]) << ','
                          << dbl(std::abs(mine.c[m] - ref.c[m]) * w / scale) << '\n';
            }
            return 0;
        }
    } catch (const vf21::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const vf21::pole_error& e) {
        std::cerr << "pole error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
