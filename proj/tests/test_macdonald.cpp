// SPDX-License-Identifier: MIT
#include "doctest.h"
#include "msym/combinatorics.hpp"
#include "msym/macdonald.hpp"

using namespace msym;

namespace {

const QTScalar q = QTScalar(QTPoly::q());
const QTScalar t = QTScalar(QTPoly::t());
const QTScalar one = QTScalar(1);

XPoly x(int n, int i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    return XPoly::monomial(n, e);
}

// Expected Y_i eigenvalue, written out directly from the ranks.
QTScalar expected_eigenvalue(const Composition& eta, int i) {
    const int n = static_cast<int>(eta.size());
    int r = 1;
    for (int j = 0; j < n; ++j) {
        if (eta[j] > eta[i - 1]) ++r;
        if (j < i - 1 && eta[j] == eta[i - 1]) ++r;
    }
    return QTScalar::q_pow(eta[i - 1]) * QTScalar::t_pow(1 - r);
}

}  // namespace

TEST_CASE("E polynomials in two variables") {
    CHECK(nonsym_E({0, 1}) == x(2, 2));
    CHECK(nonsym_E({1, 0}) == x(2, 1) + x(2, 2).scaled(q * (one - t) / (one - q * t)));
    CHECK(nonsym_E({}) == XPoly::constant(0, 1));
    CHECK(nonsym_E({0, 0}) == XPoly::constant(2, 1));
}

TEST_CASE("E polynomials are joint eigenvectors with a monic leading term") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const Composition& eta : compositions_of(d, n)) {
                const XPoly e = nonsym_E(eta);
                CHECK(e.coeff(eta).is_one());
                for (const auto& [ex, c] : e.terms()) {
                    const Composition nu = exponent_vec(ex, n);
                    if (nu != eta) CHECK(bruhat_less(nu, eta));
                }
                for (int i = 1; i <= n; ++i)
                    CHECK(cherednik_Y(i, e) == e.scaled(expected_eigenvalue(eta, i)));
                CHECK(nonsym_E_alt(eta) == e);
            }
}

TEST_CASE("symmetric Macdonald P in two variables") {
    const XPoly p = msym_P(MPartition({}, {2}), 2);
    CHECK(p.coeff(std::vector<int>{2, 0}).is_one());
    CHECK(p.coeff(std::vector<int>{0, 2}).is_one());
    CHECK(p.coeff(std::vector<int>{1, 1}) == (one + q) * (one - t) / (one - q * t));
}

TEST_CASE("integral form") {
    CHECK(integral_J(MPartition({}, {1}), 2) == (x(2, 1) + x(2, 2)).scaled(one - t));
    CHECK(integral_J(MPartition({0}, {}), 1) == XPoly::constant(1, 1));
    for (const MPartition& L : enumerate_mpartitions(1, 2)) {
        const XPoly J = integral_J(L, 3);
        for (const auto& [e, c] : J.terms()) CHECK(c.is_polynomial());
    }
}

TEST_CASE("Hall-Littlewood polynomials") {
    CHECK(hall_littlewood({0, 1}) == x(2, 2));
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const Composition& a : compositions_of(d, n)) {
                const XPoly h = hall_littlewood(a);
                for (const auto& [e, c] : h.terms()) {
                    const Rat v = c.evaluate(0, 1);
                    CHECK(v == (exponent_vec(e, n) == a ? Rat(1) : Rat(0)));
                }
            }
}

TEST_CASE("m-symmetric P satisfies its eigenvalue equations") {
    for (const auto& L : {MPartition({0, 0}, {}), MPartition({1}, {1}), MPartition({0, 2}, {1}),
                          MPartition({}, {2, 1})}) {
        for (const CheckResult& r : verify_eigen(L, L.m() + L.degree())) {
            INFO(L.str() << " " << r.name << " " << r.detail);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("eta of an m-partition") {
    CHECK(eta_of(MPartition({2, 0}, {3, 1}), 5) == Composition{2, 0, 0, 1, 3});
    CHECK(leading_exponent(MPartition({2, 0}, {3, 1}), 5) == std::vector<int>{2, 0, 3, 1, 0});
    CHECK_THROWS_AS(msym_P(MPartition({1, 0}, {2}), 2), DomainError);
}
