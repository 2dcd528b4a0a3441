// Command line front end.  Everything it prints comes from the library;
// the tool only parses arguments, selects a suite or table, and picks an
// output stream.  Exit codes: 0 all checks pass, 1 at least one check
// failed, 2 the request itself was malformed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cubic/coperiod.hpp"
#include "cubic/cover.hpp"
#include "cubic/suites.hpp"
#include "cubic/whittaker.hpp"

namespace {

using namespace cubic;

// Accepts "v:u" for the element p^v u with u a unit digit string, or a
// plain integer which is decomposed on the spot.
PAdicElem parse_elem(const PrimeContext& ctx, const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return PAdicElem::from_int(ctx, std::stol(s));
    long v = std::stol(s.substr(0, colon));
    long u = std::stol(s.substr(colon + 1));
    if (u % ctx.p() == 0) throw std::invalid_argument("unit part divisible by p: " + s);
    return PAdicElem(ctx, v, u, ctx.max_digits());
}

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "cannot open %s\n", out_path.c_str());
        return 2;
    }
    f << text;
    return 0;
}

std::string whittaker_table_text(const ReportConfig& cfg) {
    SatakeData s = SatakeData::make(cfg.c);
    std::ostringstream os;
    os << "# spherical values on the torus, c=" << cfg.c << "\n";
    os << "family,a,b,central,value\n";
    struct Row {
        const char* fam;
        const CFunction* f;
    };
    for (Row r : {Row{"plus", &s.cp}, Row{"minus", &s.cm}, Row{"dual_plus", &s.cpv},
                  Row{"dual_minus", &s.cmv}}) {
        for (long a = 3; a >= -3; --a)
            for (long b = a; b >= -3; --b) {
                CValue w = spherical_whittaker(*r.f, a, b);
                if (w.is_zero()) continue;
                os << r.fam << "," << a << "," << b << "," << w.central << ","
                   << to_string(w.v) << "\n";
            }
    }
    return os.str();
}

std::string lfactor_table_text(const std::string& which) {
    std::ostringstream os;
    os << "name,arg,value\n";
    auto row = [&os](const char* nm, const char* arg, const SymRat& v) {
        os << nm << "," << arg << "," << to_string(v) << "\n";
    };
    bool all = which.empty();
    if (all || which == "zeta")
        for (int k : {1, 2, 3, 4}) row("zeta", (std::to_string(k) + "/2").c_str(), zeta_q(k));
    if (all || which == "adjoint") {
        row("adjoint", "1/2", l_adjoint(1));
        row("adjoint", "1", l_adjoint(2));
    }
    if (all || which == "sym3") {
        row("sym3", "1/2", l_sym3(1));
        row("sym3", "1", l_sym3(2));
    }
    if (all || which == "sym3_twisted") row("sym3_twisted", "1/2", l_sym3(1, -1));
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for the cubic cover of GL(2) over a p-adic field"};
    app.require_subcommand(1);
    app.fallthrough();  // shared flags may follow the subcommand

    ReportConfig cfg;
    std::string format = "json";
    std::string out_path;
    app.add_option("--p", cfg.p, "residue characteristic, 1 mod 3")
        ->check(CLI::IsMember({7, 13, 19}));
    app.add_option("--precision", cfg.precision, "working digits")->check(CLI::Range(2, 8));
    app.add_option("--c", cfg.c, "twist index of the cocycle")->check(CLI::Range(0, 2));
    app.add_option("--order", cfg.order, "series truncation order")->check(CLI::Range(1, 40));
    app.add_option("--seed", cfg.seed, "seed for sampled checks");
    app.add_option("--level", cfg.level, "max congruence level in enumerations")
        ->check(CLI::Range(1, 4));
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write the report to this file instead of stdout");

    auto* hil = app.add_subcommand("hilbert", "cubic Hilbert symbol of two elements");
    std::string arg_a, arg_b;
    hil->add_option("a", arg_a, "first element, 'v:u' or integer")->required();
    hil->add_option("b", arg_b, "second element, 'v:u' or integer")->required();

    auto* ver = app.add_subcommand("verify", "run a named suite and report every check");
    std::string suite = "all";
    ver->add_option("suite", suite, "which suite")
        ->check(CLI::IsMember({"cocycle", "splitting", "gauss", "whittaker", "coperiod", "ktype",
                               "arch", "all"}));

    auto* tab = app.add_subcommand("table", "print a value table");
    std::string table_name;
    std::string lfactor_filter;
    tab->add_option("name", table_name, "which table")
        ->required()
        ->check(CLI::IsMember({"whittaker", "lfactor"}));
    tab->add_option("--L", lfactor_filter, "restrict the lfactor table to one family")
        ->check(CLI::IsMember({"zeta", "adjoint", "sym3", "sym3_twisted"}));

    auto* cov = app.add_subcommand("coperiod-verify", "shorthand for: verify coperiod");
    auto* ktc = app.add_subcommand("ktype-count", "shorthand for: verify ktype");
    auto* arc = app.add_subcommand("arch-check", "shorthand for: verify arch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hil->parsed()) {
            PrimeContext ctx(cfg.p, cfg.precision);
            Mu3 z = hilbert3(ctx, parse_elem(ctx, arg_a), parse_elem(ctx, arg_b));
            std::printf("zeta3^%d\n", z.e);
            return 0;
        }

        if (cov->parsed()) suite = "coperiod";
        if (ktc->parsed()) suite = "ktype";
        if (arc->parsed()) suite = "arch";
        if (ver->parsed() || cov->parsed() || ktc->parsed() || arc->parsed()) {
            Report rep;
            if (suite == "cocycle") rep = suite_cocycle(cfg);
            else if (suite == "splitting") rep = suite_splitting(cfg);
            else if (suite == "gauss") rep = suite_gauss(cfg);
            else if (suite == "whittaker") rep = suite_whittaker(cfg);
            else if (suite == "coperiod") rep = suite_coperiod(cfg);
            else if (suite == "ktype") rep = suite_ktype(cfg);
            else if (suite == "arch") rep = suite_arch(cfg);
            else rep = suite_all(cfg);
            int werr = write_out(format == "csv" ? rep.to_csv() : rep.to_json(), out_path);
            if (werr) return werr;
            return rep.all_pass() ? 0 : 1;
        }

        if (tab->parsed()) {
            if (table_name == "whittaker") return write_out(whittaker_table_text(cfg), out_path);
            return write_out(lfactor_table_text(lfactor_filter), out_path);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
