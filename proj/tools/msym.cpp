// SPDX-License-Identifier: MIT
// Command-line front end: msym <subcommand> [label...] [flags]
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "msym/bases.hpp"
#include "msym/kostka.hpp"
#include "msym/macdonald.hpp"

using namespace msym;
using nlohmann::json;

namespace {

enum class Format { Text, Json, Latex };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int N = 0;  // 0 means the default for the command
    Format fmt = Format::Text;
    std::optional<std::pair<Rat, Rat>> eval;
};

Rat parse_rational(const std::string& text, const std::string& token) {
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw UsageError("bad number in '" + token + "'");
    }
}

std::pair<Rat, Rat> parse_eval(const std::vector<std::string>& args) {
    std::optional<Rat> q, t;
    for (const auto& a : args) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw UsageError("expected q=VALUE or t=VALUE, got '" + a + "'");
        const std::string var = a.substr(0, eq);
        if (var == "q") {
            q = parse_rational(a.substr(eq + 1), a);
        } else if (var == "t") {
            t = parse_rational(a.substr(eq + 1), a);
        } else {
            throw UsageError("unknown variable in '" + a + "'");
        }
    }
    if (!q || !t) throw UsageError("--eval needs both q=VALUE and t=VALUE");
    return {*q, *t};
}

template <class F>
auto parse_or_usage(F f) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

Composition parse_comp(const std::string& s) {
    if (s.find('|') != std::string::npos) throw UsageError("expected a composition, got '" + s + "'");
    return parse_or_usage([&] { return parse_composition(s); });
}

MPartition parse_label(const std::string& s) {
    return parse_or_usage([&] { return MPartition::parse(s); });
}

std::string eval_text(const QTScalar& c, const Options& o) {
    try {
        return c.evaluate(o.eval->first, o.eval->second).get_str();
    } catch (const DomainError&) {
        return "undefined";
    }
}

std::string eval_suffix(const QTScalar& c, const Options& o) {
    if (!o.eval) return "";
    return "  [q=" + o.eval->first.get_str() + ", t=" + o.eval->second.get_str() + ": " + eval_text(c, o) + "]";
}

json header(const std::string& cmd, const std::string& arg) {
    return json{{"schema", 1}, {"command", cmd}, {"argument", arg}};
}

void print_expansion(const std::string& cmd, const std::string& arg, const BasisExpansion& e, const Options& o) {
    if (o.fmt == Format::Latex) {
        std::cout << latex(e) << "\n";
        return;
    }
    if (o.fmt == Format::Json) {
        json j = header(cmd, arg);
        j["basis"] = basis_name(e.basis);
        j["m"] = e.m;
        json terms = json::array();
        for (const auto& L : e.ordered_labels()) {
            json t{{"label", L.str()}, {"coeff", e.coeffs.at(L).str()}};
            if (o.eval) t["value"] = eval_text(e.coeffs.at(L), o);
            terms.push_back(t);
        }
        j["terms"] = terms;
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& L : e.ordered_labels()) {
        const QTScalar& c = e.coeffs.at(L);
        const bool simple = c.is_polynomial() && c.num().size() == 1;
        std::cout << (simple ? c.str() : "(" + c.str() + ")") << " * " << basis_name(e.basis) << "[" << L.str()
                  << "]" << eval_suffix(c, o) << "\n";
    }
}

XPoly evaluated(const XPoly& f, const Options& o) {
    XPoly r(f.nvars());
    for (const auto& [x, c] : f.terms()) {
        try {
            r.add_term(x, QTScalar(c.evaluate(o.eval->first, o.eval->second)));
        } catch (const DomainError&) {
            throw DomainError("coefficient " + c.str() + " has a pole at the evaluation point");
        }
    }
    return r;
}

void print_poly(const std::string& cmd, const std::string& arg, const XPoly& f, const Options& o) {
    if (o.fmt == Format::Latex) {
        std::cout << latex(f) << "\n";
        return;
    }
    if (o.fmt == Format::Json) {
        json j = header(cmd, arg);
        j["nvars"] = f.nvars();
        json terms = json::array();
        for (const auto& [x, c] : f.terms()) {
            json t{{"exponent", exponent_vec(x, f.nvars())}, {"coeff", c.str()}};
            if (o.eval) t["value"] = eval_text(c, o);
            terms.push_back(t);
        }
        j["terms"] = terms;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << f.str() << "\n";
    if (o.eval)
        std::cout << "at q=" << o.eval->first.get_str() << ", t=" << o.eval->second.get_str() << ": "
                  << evaluated(f, o).str() << "\n";
}

void print_scalar(const std::string& cmd, const std::string& arg, const QTScalar& c, const Options& o) {
    if (o.fmt == Format::Latex) {
        std::cout << latex(c) << "\n";
    } else if (o.fmt == Format::Json) {
        json j = header(cmd, arg);
        j["value"] = c.str();
        if (o.eval) j["evaluated"] = eval_text(c, o);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << c.str() << eval_suffix(c, o) << "\n";
    }
}

int resolve_N(const Options& o, int fallback, int minimum, const std::string& what) {
    const int N = o.N > 0 ? o.N : fallback;
    if (N < minimum)
        throw DomainError("N = " + std::to_string(N) + " is too small for " + what + " (need at least " +
                          std::to_string(minimum) + ")");
    if (N > kMaxVars) throw DomainError("N = " + std::to_string(N) + " exceeds the supported " +
                                        std::to_string(kMaxVars) + " variables");
    return N;
}

void cmd_poly_family(const std::string& cmd, const std::string& arg, const Options& o) {
    const MPartition L = parse_label(arg);
    const int m = L.m();
    const int N = resolve_N(o, m + L.degree(), m + static_cast<int>(L.lam.size()), arg);
    const XPoly f = cmd == "P" ? msym_P(L, N) : integral_J(L, N);
    if (N >= m + f.degree()) {
        BasisExpansion e = m_expansion(f, m);
        print_expansion(cmd, arg, e, o);
    } else {
        print_poly(cmd, arg, f, o);
    }
}

void print_report(const std::string& suite, const Bounds& b, const VerifyReport& r, const Options& o) {
    if (o.fmt == Format::Json) {
        json j{{"schema", 1}, {"command", "verify"}, {"suite", suite},
               {"bounds", {{"m_max", b.m_max}, {"d_max", b.d_max}}}};
        json fams = json::array();
        for (const auto& f : r.families) {
            json fails = json::array();
            for (const auto& x : f.failures)
                fails.push_back({{"instance", x.instance}, {"detail", x.detail}, {"repro", x.repro}});
            fams.push_back({{"name", f.name},
                            {"conjecture", f.conjecture},
                            {"instances", f.instances},
                            {"skipped", f.skipped},
                            {"failures", fails}});
        }
        j["families"] = fams;
        j["proved_ok"] = r.proved_ok();
        j["conjecture_violations"] = r.conjecture_violations();
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& f : r.families) {
        std::cout << (f.failures.empty() ? "PASS " : (f.conjecture ? "VIOLATION " : "FAIL ")) << f.name << " ("
                  << f.instances << " instances";
        if (f.skipped) std::cout << ", " << f.skipped << " skipped";
        std::cout << (f.conjecture ? ", conjectural" : "") << ")\n";
        for (const auto& x : f.failures) {
            std::cout << "  " << x.instance;
            if (!x.detail.empty()) std::cout << " :: " << x.detail;
            if (!x.repro.empty()) std::cout << "  [" << x.repro << "]";
            std::cout << "\n";
        }
    }
    std::cout << "proved-statement failures: " << (r.proved_ok() ? "none" : "present")
              << "; conjecture violations: " << r.conjecture_violations() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald polynomials, m-symmetric Schur functions and (q,t)-Kostka coefficients"};
    app.require_subcommand(1);
    Options opt;
    bool as_json = false, as_latex = false;
    std::vector<std::string> eval_args;
    app.add_option("-N", opt.N, "number of variables")->check(CLI::PositiveNumber);
    app.add_flag("--json", as_json, "JSON output");
    app.add_flag("--latex", as_latex, "LaTeX output");
    app.add_option("--eval", eval_args, "append evaluations at q=Q t=T")->expected(2);

    std::string arg1, arg2;
    auto* e = app.add_subcommand("e", "non-symmetric Macdonald polynomial E_eta");
    e->add_option("eta", arg1, "composition, e.g. 0,1,2")->required();
    auto* hl = app.add_subcommand("hl", "non-symmetric Hall-Littlewood polynomial H_a");
    hl->add_option("a", arg1, "composition")->required();
    auto* P = app.add_subcommand("P", "m-symmetric Macdonald polynomial in the monomial basis");
    P->add_option("label", arg1, "m-partition a1,..,am|l1,..")->required();
    auto* J = app.add_subcommand("J", "integral form in the monomial basis");
    J->add_option("label", arg1, "m-partition")->required();
    auto* sc = app.add_subcommand("schur", "m-symmetric Schur function in the k basis");
    sc->add_option("label", arg1, "m-partition")->required();
    auto* ss = app.add_subcommand("schur-star", "dual m-symmetric Schur function in the k basis");
    ss->add_option("label", arg1, "m-partition")->required();
    auto* ko = app.add_subcommand("kostka", "(q,t)-Kostka coefficients K_{Omega,Lambda}");
    ko->add_option("label", arg1, "m-partition")->required();
    auto* kc = app.add_subcommand("kostka-comp", "composition-indexed coefficient K_{omega,eta}");
    kc->add_option("omega", arg1, "composition")->required();
    kc->add_option("eta", arg2, "composition")->required();
    int mod_m = -1;
    auto* ml = app.add_subcommand("mod-lm", "expansion of the modified J_eta modulo L_m");
    ml->add_option("eta", arg1, "composition")->required();
    ml->add_option("-m", mod_m, "value of m (default: length + degree of eta)");
    Bounds bounds;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto* vf = app.add_subcommand("verify", "run identity and conjecture sweeps");
    vf->add_option("suite", arg1, "all, hecke, macdonald, bases, restriction, kostka or conjectures")->required();
    vf->add_option("--m-max", bounds.m_max, "largest m")->check(CLI::NonNegativeNumber);
    vf->add_option("--d-max", bounds.d_max, "largest degree")->check(CLI::NonNegativeNumber);
    vf->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        std::cerr << "msym: " << ex.what() << "\n";
        return 2;
    }

    try {
        if (as_json && as_latex) throw UsageError("--json and --latex are exclusive");
        opt.fmt = as_json ? Format::Json : as_latex ? Format::Latex : Format::Text;
        if (!eval_args.empty()) opt.eval = parse_eval(eval_args);

        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "e") {
            Composition eta = parse_comp(arg1);
            const int N = resolve_N(opt, static_cast<int>(eta.size()), static_cast<int>(eta.size()), arg1);
            eta.resize(N, 0);
            print_poly(cmd, arg1, nonsym_E(eta), opt);
        } else if (cmd == "hl") {
            const Composition a = parse_comp(arg1);
            if (a.size() > static_cast<std::size_t>(kMaxVars)) throw DomainError("too many variables");
            print_poly(cmd, arg1, hall_littlewood(a), opt);
        } else if (cmd == "P" || cmd == "J") {
            cmd_poly_family(cmd, arg1, opt);
        } else if (cmd == "schur") {
            print_expansion(cmd, arg1, schur(parse_label(arg1)), opt);
        } else if (cmd == "schur-star") {
            print_expansion(cmd, arg1, schur_star(parse_label(arg1)), opt);
        } else if (cmd == "kostka") {
            const MPartition L = parse_label(arg1);
            BasisExpansion e;
            e.basis = Basis::S;
            e.m = L.m();
            for (const auto& [O, k] : kostka_table(L).entries) e.add(O, QTScalar(k));
            print_expansion(cmd, arg1, e, opt);
        } else if (cmd == "kostka-comp") {
            const Composition w = parse_comp(arg1);
            const Composition eta = parse_comp(arg2);
            if (size_of(w) != size_of(eta))
                throw UsageError("degree mismatch between '" + arg1 + "' and '" + arg2 + "'");
            print_scalar(cmd, arg1 + " " + arg2, QTScalar(kostka_composition(w, eta)), opt);
        } else if (cmd == "mod-lm") {
            const Composition eta = parse_comp(arg1);
            const int m = mod_m >= 0 ? mod_m : static_cast<int>(eta.size()) + size_of(eta);
            BasisExpansion ex;
            ex.basis = Basis::HL;
            ex.m = m;
            for (const auto& [w, k] : expand_mod_Lm(eta, m)) ex.add(MPartition(w, {}), QTScalar(k));
            print_expansion(cmd, arg1, ex, opt);
        } else if (cmd == "verify") {
            std::vector<std::string> suites;
            if (arg1 == "all") {
                suites = suite_names();
            } else if (std::find(suite_names().begin(), suite_names().end(), arg1) != suite_names().end()) {
                suites = {arg1};
            } else {
                throw UsageError("unknown suite '" + arg1 + "'");
            }
            VerifyReport total;
            for (const auto& s : suites) {
                VerifyReport r = run_suite(s, bounds, threads);
                for (auto& f : r.families) {
                    f.name = s + "/" + f.name;
                    total.families.push_back(std::move(f));
                }
            }
            print_report(arg1, bounds, total, opt);
            return total.proved_ok() ? 0 : 1;
        }
        return 0;
    } catch (const UsageError& ex) {
        std::cerr << "msym: " << ex.what() << "\n";
        return 2;
    } catch (const DomainError& ex) {
        std::cerr << "msym: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "msym: internal error: " << ex.what() << "\n";
        return 1;
    }
}
