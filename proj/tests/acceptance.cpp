// SPDX-License-Identifier: MIT
// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "msym/combinatorics.hpp"
#include "msym/kostka.hpp"
#include "msym/macdonald.hpp"
#include "msym/tableaux.hpp"

using namespace msym;

namespace {

struct Outcome {
    bool pass = false;
    std::string note;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        r.pass = false;
        r.note += (r.note.empty() ? "" : "; ") + std::string("over the time limit");
    }
    if (!r.pass) ++failures;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", secs);
    std::cout << (r.pass ? "PASS " : "FAIL ") << id << " " << name << " (" << buf << " s)";
    if (!r.note.empty()) std::cout << ": " << r.note;
    std::cout << std::endl;
}

Outcome golden_expansion() {
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"3,0|", "t^2"},           {"0,3|", "q*t^2"},         {"0,0|3", "q*t"},
        {"2,1|", "q*t^3+t"},       {"2,0|1", "q*t^2+t"},      {"1,2|", "q^2*t^3+t"},
        {"1,0|2", "q^2*t^2+1"},    {"0,2|1", "q^2*t^2+q*t"},  {"0,1|2", "q^2*t^2+q"},
        {"0,0|2,1", "q^2*t+q"},    {"1,1|1", "q*t^2"},        {"1,0|1,1", "q*t"},
        {"0,1|1,1", "q^2*t"},      {"0,0|1,1,1", "q^2"},
    };
    const KostkaTable& tab = kostka_table(MPartition::parse("1,0|2"));
    if (tab.entries.size() != expected.size())
        return {false, std::to_string(tab.entries.size()) + " nonzero coefficients"};
    for (const auto& [label, value] : expected) {
        const QTPoly got = tab.at(MPartition::parse(label));
        if (got != QTPoly::parse(value)) return {false, "K[" + label + "] = " + got.str()};
    }
    return {true, "14 coefficients"};
}

Outcome hook_product() {
    QTPoly expected(1);
    for (auto [i, j] : std::vector<std::pair<int, int>>{
             {0, 1}, {1, 1}, {2, 3}, {3, 5}, {1, 2}, {2, 4}, {1, 1}, {2, 5}, {0, 2}, {0, 1}})
        expected *= QTPoly(1) - QTPoly::monomial(1, i, j);
    const QTPoly got = c_hook(MPartition({2, 0, 0, 2}, {4, 1, 1}));
    return {got == expected, got == expected ? "" : got.str()};
}

Outcome classical_decomposition() {
    const KostkaTable& tab = kostka_table(MPartition({2}, {3}));
    const QTPoly k1 = tab.at(MPartition({2}, {2, 1}));
    const QTPoly k2 = tab.at(MPartition({1}, {3, 1}));
    const QTPoly k3 = tab.at(MPartition({0}, {3, 2}));
    if (k1 != QTPoly::parse("q^4*t^3+q^3*t^2+q^2*t^2+q^2*t+q*t")) return {false, "K[2|2,1] = " + k1.str()};
    if (k2 != QTPoly::parse("q^5*t^3+q^4*t^2+q^3*t^2+q^3*t+q^2*t+q")) return {false, "K[1|3,1] = " + k2.str()};
    if (k3 != QTPoly::parse("q^5*t^2+q^4*t^2+q^4*t+q^3*t+q^2")) return {false, "K[0|3,2] = " + k3.str()};
    const QTPoly classical = kostka_table(MPartition({}, {3, 3})).at(MPartition({}, {3, 2, 1}));
    if (classical != k1 + k2 + k3) return {false, "m = 0 entry " + classical.str()};
    return {true, "sum = " + classical.str()};
}

Outcome combinatorics_goldens() {
    if (charge(parse_word("1214123234")) != 7) return {false, "charge"};
    if (sigma_action(2, parse_word("123343222423")) != parse_word("123343222433")) return {false, "sigma_2"};
    const MPartition L({4, 4, 2}, {3, 2, 1}), O({1, 3, 1}, {4, 3, 2, 1, 1});
    const std::size_t s = enumerate_S(L, O).size(), sb = enumerate_Sbar(L, O).size();
    if (s != 5 || sb != 5) return {false, "|S| = " + std::to_string(s) + ", |Sbar| = " + std::to_string(sb)};
    const MPartition L2({4, 4, 3, 3}, {2, 2, 1}), O2({2, 3, 2, 2}, {4, 2, 2, 1, 1});
    const std::vector<std::vector<int>> rows = {{}, {2, 2}, {3}, {1, 4}, {2}, {1, 4}, {3}};
    for (const SkewTableau& T : enumerate_S(L2, O2))
        if (T.rows == rows) {
            const int c = charge_ab(L2, O2, T);
            return {c == 4, c == 4 ? "" : "charge_ab = " + std::to_string(c)};
        }
    return {false, "displayed tableau not enumerated"};
}

std::string summarize(const VerifyReport& r, bool conjectural) {
    long inst = 0, skipped = 0, bad = 0;
    std::ostringstream wit;
    for (const Family& f : r.families) {
        inst += f.instances;
        skipped += f.skipped;
        bad += static_cast<long>(f.failures.size());
        for (const Finding& x : f.failures) {
            wit << "\n  " << (conjectural ? "VIOLATION " : "FAIL ") << f.name << " " << x.instance << ": "
                << x.detail;
            if (!x.repro.empty()) wit << " [" << x.repro << "]";
        }
    }
    std::ostringstream s;
    s << r.families.size() << " families, " << inst << " instances, " << skipped << " skipped, " << bad
      << (conjectural ? " violations" : " failures") << wit.str();
    return s.str();
}

Outcome identity_suites(int threads) {
    VerifyReport all;
    for (const std::string& name : suite_names()) {
        if (name == "conjectures") continue;
        VerifyReport r = run_suite(name, Bounds{2, 4}, threads);
        for (Family& f : r.families) {
            f.name = name + "/" + f.name;
            all.families.push_back(std::move(f));
        }
    }
    return {all.proved_ok(), summarize(all, false)};
}

Outcome conjecture_sweeps(int threads) {
    const VerifyReport r = run_suite("conjectures", Bounds{2, 4}, threads);
    bool kostka_ok = true;
    for (const Family& f : r.families)
        if (!f.conjecture) kostka_ok = f.failures.empty() && kostka_ok;
    return {kostka_ok && r.conjecture_violations() == 0, summarize(r, true)};
}

// Eigenvalue of Y_i on E_η, from the ranks of the entries.
QTScalar eigenvalue(const Composition& eta, int i) {
    int r = 1;
    for (std::size_t j = 0; j < eta.size(); ++j) {
        if (eta[j] > eta[i - 1]) ++r;
        if (static_cast<int>(j) < i - 1 && eta[j] == eta[i - 1]) ++r;
    }
    return QTScalar::q_pow(eta[i - 1]) * QTScalar::t_pow(1 - r);
}

// Solves (Y_i - ε_i) v = 0 for every i on degree-|η| monomials with v_η = 1.
// Returns nullopt when the solution is not unique.
std::optional<XPoly> eigen_oracle(const Composition& eta) {
    const int n = static_cast<int>(eta.size());
    const std::vector<Composition> mons = compositions_of(size_of(eta), n);
    const std::size_t k = mons.size();
    std::size_t col_eta = 0;
    while (mons[col_eta] != eta) ++col_eta;
    // Columns: unknowns except v_η, then the right-hand side.
    std::vector<std::vector<QTScalar>> rows;
    for (int i = 1; i <= n; ++i) {
        const QTScalar ev = eigenvalue(eta, i);
        std::vector<std::vector<QTScalar>> block(k, std::vector<QTScalar>(k));
        for (std::size_t c = 0; c < k; ++c) {
            XPoly img = cherednik_Y(i, XPoly::monomial(n, mons[c])) - XPoly::monomial(n, mons[c]).scaled(ev);
            for (const auto& [e, v] : img.terms()) {
                std::size_t r = 0;
                const Composition nu = exponent_vec(e, n);
                while (mons[r] != nu) ++r;
                if (c == col_eta)
                    block[r][k - 1] -= v;
                else
                    block[r][c < col_eta ? c : c - 1] += v;
            }
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }
    const std::size_t unknowns = k - 1;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < unknowns && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        const QTScalar inv = rows[rank][c].inverse();
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            const QTScalar f = rows[r][c];
            for (std::size_t j = c; j <= unknowns; ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank != unknowns) return std::nullopt;
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][unknowns].is_zero()) return std::nullopt;
    XPoly v = XPoly::monomial(n, eta);
    for (std::size_t r = 0; r < rank; ++r) {
        const std::size_t c = pivot_col[r];
        v.add_term(make_exponent(mons[c < col_eta ? c : c + 1]), rows[r][unknowns]);
    }
    return v;
}

Outcome oracle_cross_check() {
    long count = 0;
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const Composition& eta : compositions_of(d, n)) {
                const auto v = eigen_oracle(eta);
                if (!v) return {false, "eigenspace of " + composition_str(eta) + " is not one-dimensional"};
                if (*v != nonsym_E(eta)) return {false, "E[" + composition_str(eta) + "] differs from the oracle"};
                ++count;
            }
    return {true, std::to_string(count) + " compositions"};
}

}  // namespace

int main() {
    const int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    criterion(1, "golden-expansion", 60, golden_expansion);
    criterion(2, "hook-product", 0, hook_product);
    criterion(3, "classical-decomposition", 300, classical_decomposition);
    criterion(4, "combinatorics-goldens", 0, combinatorics_goldens);
    criterion(5, "identity-suites", 1800, [&] { return identity_suites(threads); });
    criterion(6, "conjecture-sweeps", 0, [&] { return conjecture_sweeps(threads); });
    criterion(7, "eigenvector-oracle", 0, oracle_cross_check);
    return failures == 0 ? 0 : 1;
}
