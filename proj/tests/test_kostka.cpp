// SPDX-License-Identifier: MIT
#include "doctest.h"
#include "msym/combinatorics.hpp"
#include "msym/kostka.hpp"

using namespace msym;

TEST_CASE("degree one tables") {
    for (int m = 0; m <= 3; ++m) {
        Composition a(m, 0);
        const KostkaTable& tab = kostka_table(MPartition(a, {1}));
        CHECK(tab.at(MPartition(a, {1})) == QTPoly(1));
        for (const auto& [O, k] : tab.entries) CHECK(k.nonnegative());
    }
}

TEST_CASE("classical coefficients for m = 0") {
    const KostkaTable& tab = kostka_table(MPartition({}, {2, 1}));
    CHECK(tab.entries.size() == 3);
    CHECK(tab.at(MPartition({}, {3})) == QTPoly::t());
    CHECK(tab.at(MPartition({}, {2, 1})) == QTPoly::q() * QTPoly::t() + QTPoly(1));
    CHECK(tab.at(MPartition({}, {1, 1, 1})) == QTPoly::q());
}

TEST_CASE("both computations of a table agree") {
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 3; ++d)
            for (const MPartition& L : enumerate_mpartitions(m, d))
                CHECK(kostka_table_by_solve(L).entries == kostka_table(L).entries);
}

TEST_CASE("composition-indexed coefficients") {
    CHECK(kostka_composition({2, 1}, {2, 1}) == kostka_table(MPartition({2, 1}, {})).at(MPartition({2, 1}, {})));
    CHECK(kostka_composition({1, 0, 2}, {1, 2}) ==
          kostka_table(MPartition({1, 2}, {})).at(MPartition({1, 0}, {2})));
    CHECK(kostka_composition({1}, {1, 0}) == kostka_table(MPartition({1, 0}, {})).at(MPartition({1, 0}, {})));
    CHECK_THROWS_AS(kostka_composition({1}, {2}), DomainError);
}

TEST_CASE("expansion modulo L_m") {
    const auto e = expand_mod_Lm({1, 0}, 2);
    const KostkaTable& tab = kostka_table(MPartition({1, 0}, {}));
    for (const auto& [w, k] : e) CHECK(tab.at(MPartition(w, {})) == k);
    long with_empty = 0;
    for (const auto& [O, k] : tab.entries) with_empty += O.lam.empty();
    CHECK(static_cast<long>(e.size()) == with_empty);
    CHECK_THROWS_AS(expand_mod_Lm({1, 1}, 1), DomainError);
}

TEST_CASE("membership in N[q,t]") {
    CHECK(in_nat_qt(QTScalar(QTPoly::q() + QTPoly(2))));
    CHECK_FALSE(in_nat_qt(QTScalar(QTPoly::q() - QTPoly(2))));
    CHECK_FALSE(in_nat_qt(QTScalar::t_pow(-1)));
    CHECK(in_nat_qt(QTScalar()));
}

TEST_CASE("small sweeps pass") {
    const Bounds b{1, 2};
    for (const std::string& name : suite_names()) {
        const VerifyReport r = run_suite(name, b);
        CHECK(r.proved_ok());
        CHECK(r.conjecture_violations() == 0);
        for (const Family& f : r.families) {
            INFO(name << "/" << f.name);
            CHECK(f.failures.empty());
        }
    }
}
