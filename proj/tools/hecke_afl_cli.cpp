#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "heckeafl/afl.hpp"
#include "heckeafl/hecke.hpp"
#include "heckeafl/intersection.hpp"
#include "heckeafl/lattice.hpp"
#include "heckeafl/orbital.hpp"
#include "heckeafl/report.hpp"

using namespace heckeafl;

namespace {

struct CliConfig {
    long p = 3;
    int precision = 32;
    std::uint64_t seed = 0;
    std::string format = "table";
    std::string out;
};

int emit(const CliConfig& cli, const Json& payload, const std::string& table_text) {
    std::string text;
    if (cli.format == "json")
        text = payload.dump(2) + "\n";
    else
        text = table_text + "\n";
    if (cli.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cli.out);
        f << text;
    }
    return 0;
}

std::string report_table(const VerificationReport& rep) {
    std::string s = rep.kind + ": " + std::to_string(rep.passed()) + "/" +
                    std::to_string(rep.cases.size()) + " passed";
    if (rep.skipped) s += ", " + std::to_string(rep.skipped) + " skipped";
    for (const auto& c : rep.cases)
        if (!c.pass)
            s += "\nFAIL " + c.inputs.dump() + " lhs=" + c.lhs + " rhs=" + c.rhs;
    return s;
}

int emit_report(const CliConfig& cli, const VerificationReport& rep) {
    Json j = rep.to_json();
    emit(cli, j, report_table(rep));
    return rep.all_pass() ? 0 : 1;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spherical Hecke calculus and orbital-integral checks for U(1)xU(2)"};
    app.require_subcommand(1);
    CliConfig cli;
    app.add_option("--p", cli.p, "odd residue characteristic")->capture_default_str();
    app.add_option("--precision", cli.precision, "truncation precision N")->capture_default_str();
    app.add_option("--seed", cli.seed, "random seed")->capture_default_str();
    app.add_option("--format", cli.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--out", cli.out, "write output to file instead of stdout");

    // satake
    auto* satake = app.add_subcommand("satake", "print the Satake transform of a basis element");
    std::string family;
    int s_n = 2, s_m = -1, s_t = -1;
    satake->add_option("--family", family, "f'|f|phi|fbracket")->required();
    satake->add_option("--n", s_n, "rank");
    satake->add_option("--m", s_m, "index m");
    satake->add_option("--t", s_t, "even index t");

    // bc
    auto* bcc = app.add_subcommand("bc", "base change of a named GL element");
    int b_n = 2, b_sigma = -1, b_fprime = -1;
    std::string b_expr;
    bcc->add_option("--n", b_n, "rank");
    bcc->add_option("--sigma", b_sigma, "elementary symmetric generator index");
    bcc->add_option("--fprime", b_fprime, "f'_m index (n = 2)");
    bcc->add_option("--expr", b_expr, "GL Satake element as canonical text");

    // atomic
    auto* atomic = app.add_subcommand("atomic", "atomic basis element over the f-basis");
    int a_n = 2, a_t = 2;
    bool a_interp = false;
    atomic->add_option("--n", a_n, "rank")->required();
    atomic->add_option("--t", a_t, "even type t")->required();
    atomic->add_flag("--interpolate", a_interp, "coefficients as polynomials in q");

    // orb
    auto* orb = app.add_subcommand("orb", "orbital integral of phi'_m at gamma(a, b)");
    std::string o_a, o_b;
    int o_m = 0;
    orb->add_option("--a", o_a, "a as x+y*d with rational x, y")->required();
    orb->add_option("--b", o_b, "b as x+y*d")->required();
    orb->add_option("--m", o_m, "basis index m");

    // fl-check / afl-check
    auto* fl = app.add_subcommand("fl-check", "fundamental lemma verification");
    int fl_samples = 100, fl_mmax = 4;
    fl->add_option("--samples", fl_samples, "orbit sample count");
    fl->add_option("--m-max", fl_mmax, "largest basis index");
    auto* afl = app.add_subcommand("afl-check", "arithmetic fundamental lemma verification");
    std::string afl_rlist = "1,3,5";
    int afl_mmax = 4;
    afl->add_option("--r-list", afl_rlist, "comma-separated odd invariants");
    afl->add_option("--m-max", afl_mmax, "largest basis index");

    // lattice
    auto* lat = app.add_subcommand("lattice", "vertex lattice counts and correspondences");
    lat->require_subcommand(1);
    auto* lat_count = lat->add_subcommand("count", "type-t lattices in a self-dual lattice");
    int lc_n = 2, lc_t = 2;
    lat_count->add_option("--n", lc_n, "dimension")->required();
    lat_count->add_option("--t", lc_t, "even type")->required();
    auto* lat_comm = lat->add_subcommand("comm", "composite support commutativity");
    int cm_n = 4, cm_t = 2, cm_t2 = 4;
    lat_comm->add_option("--n", cm_n, "dimension")->required();
    lat_comm->add_option("--t", cm_t, "first type")->required();
    lat_comm->add_option("--t2", cm_t2, "second type")->required();

    auto* kernel = app.add_subcommand("kernel-check", "derivative-kernel verification");
    int k_mmax = 6;
    kernel->add_option("--m-max", k_mmax, "largest basis index");
    auto* coprime = app.add_subcommand("coprime-check", "coprimality certificate");
    std::string cq = "3,5,7,11,13";
    coprime->add_option("--q-values", cq, "comma-separated primes");

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (CLI::App* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        PrimeConfig cfg(cli.p, PrimeConfig::default_epsilon(cli.p), cli.precision);
        if (cli.precision < 8) throw DomainError("precision must be >= 8");

        if (satake->parsed()) {
            std::string text;
            if (family == "f'") {
                if (s_m < 0) throw DomainError("satake: --m required for family f'");
                text = sat_gl2_fprime(s_m).sat.str();
            } else if (family == "f") {
                if (s_m < 0) throw DomainError("satake: --m required for family f");
                text = sat_u2_f(s_m).sat.str();
            } else if (family == "phi") {
                if (s_m < 0) throw DomainError("satake: --m required for family phi");
                text = sat_u2_phi(s_m).sat.str();
            } else if (family == "fbracket") {
                if (s_t < 0) throw DomainError("satake: --t required for family fbracket");
                text = sat_f_bracket(s_n, s_t).sat.str();
            } else {
                throw DomainError("satake: unknown family '" + family + "'");
            }
            Json j{{"schema", 1}, {"command", "satake"}, {"family", family},
                   {"n", s_n}, {"m", s_m}, {"t", s_t}, {"satake", text}};
            return emit(cli, j, text);
        }

        if (bcc->parsed()) {
            GLHecke elem;
            std::string name;
            if (b_sigma >= 0) {
                elem = GLHecke{b_n, GLSatakeElement::sigma(b_n, b_sigma)};
                name = "sigma_" + std::to_string(b_sigma);
            } else if (b_fprime >= 0) {
                elem = sat_gl2_fprime(b_fprime);
                b_n = 2;
                name = "f'_" + std::to_string(b_fprime);
            } else if (!b_expr.empty()) {
                elem = GLHecke{b_n, parse_gl_satake(b_expr, b_n)};
                name = b_expr;
            } else {
                throw DomainError("bc: one of --sigma, --fprime, --expr is required");
            }
            std::string text = bc(elem).sat.str();
            Json j{{"schema", 1}, {"command", "bc"}, {"n", b_n}, {"element", name},
                   {"bc", text}};
            return emit(cli, j, text);
        }

        if (atomic->parsed()) {
            UHecke phi = a_interp ? atomic_phi_interpolated(a_n, a_t)
                                  : atomic_phi(a_n, a_t, cli.p);
            std::string text = phi.basis_str();
            Json coeffs = Json::object();
            for (const auto& [t, c] : *phi.basis_coeffs) coeffs[std::to_string(t)] = c.str();
            Json j{{"schema", 1}, {"command", "atomic"}, {"n", a_n}, {"t", a_t},
                   {"q", a_interp ? Json("symbolic") : Json(cli.p)},
                   {"f_basis", text}, {"coefficients", coeffs}, {"satake", phi.sat.str()}};
            return emit(cli, j, text);
        }

        if (orb->parsed()) {
            FieldElement a = parse_field_element(o_a, cfg);
            FieldElement b = parse_field_element(o_b, cfg);
            SOrbit orbit = make_gamma(a, b);
            OrbitalValue v = orb_S_oracle(orbit, o_m);
            if (orbit.normalized && !(v == orb_S_closed(orbit, o_m)))
                throw DomainError("orb: closed form disagrees with the summation oracle");
            Json laurent = Json::object();
            for (const auto& [k, c] : v.laurent()) laurent[std::to_string(k)] = rat_string(c);
            Json j{{"schema", 1},
                   {"command", "orb"},
                   {"p", cli.p},
                   {"a", a.str()},
                   {"b", b.str()},
                   {"r", orbit.r},
                   {"m", o_m},
                   {"laurent", laurent},
                   {"value0", rat_string(v.value_at_0())},
                   {"dvalue0_logq", rat_string(v.derivative_at_0_logq())},
                   {"omega", transfer_factor(orbit)}};
            std::string text = "Orb = " + v.str() + "\nvalue(0) = " +
                               rat_pretty(v.value_at_0()) + "\nd/ds(0) = " +
                               rat_pretty(v.derivative_at_0_logq()) + " * log q";
            return emit(cli, j, text);
        }

        if (fl->parsed()) return emit_report(cli, fl_check(cfg, fl_samples, fl_mmax, cli.seed));
        if (afl->parsed()) {
            auto rl = parse_int_list(afl_rlist);
            return emit_report(cli, afl_check(cfg, rl, afl_mmax, cli.seed));
        }
        if (kernel->parsed()) return emit_report(cli, kernel_check(cfg, k_mmax, cli.seed));
        if (coprime->parsed()) {
            std::vector<long> qs;
            for (int q : parse_int_list(cq)) qs.push_back(q);
            return emit_report(cli, coprimality_check(qs));
        }

        if (lat_count->parsed()) {
            HermSpace space(lc_n, cfg);
            Budget budget;
            LatticeOps ops(space, &budget);
            auto found = ops.enum_vertex_in(ops.standard_selfdual(), lc_t);
            Json j{{"schema", 1}, {"command", "lattice count"}, {"p", cli.p},
                   {"n", lc_n}, {"t", lc_t}, {"count", found.size()}};
            return emit(cli, j, std::to_string(found.size()));
        }
        if (lat_comm->parsed())
            return emit_report(cli, comm_check(cli.p, cm_n, cm_t, cm_t2));

        throw DomainError("no subcommand");
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
