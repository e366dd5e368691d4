// SPDX-License-Identifier: MIT
#include "doctest.h"
#include "msym/bases.hpp"
#include "msym/macdonald.hpp"

using namespace msym;

namespace {

const QTScalar t = QTScalar(QTPoly::t());
const QTScalar one = QTScalar(1);

XPoly x(int n, int i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    return XPoly::monomial(n, e);
}

}  // namespace

TEST_CASE("basis elements in few variables") {
    CHECK(monomial_msym(MPartition({1}, {}), 2) == x(2, 1));
    CHECK(monomial_msym(MPartition({0}, {1}), 2) == x(2, 2));
    CHECK(power_msym(MPartition({0}, {1}), 2) == x(2, 1) + x(2, 2));
    CHECK(k_basis(MPartition({0, 1}, {}), 2) == x(2, 2));
    CHECK(k_basis(MPartition({1, 0}, {}), 2) == x(2, 1));
}

TEST_CASE("monomial expansion round trip") {
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 3; ++d)
            for (const MPartition& L : enumerate_mpartitions(m, d))
                for (Basis b : {Basis::M, Basis::Pow, Basis::K, Basis::S, Basis::Sstar}) {
                    const BasisExpansion e = single(b, L);
                    const XPoly f = to_monomials(e, m + d);
                    CHECK(from_monomials(f, m, b) == e);
                    CHECK(convert(convert(e, Basis::M), b) == e);
                }
}

TEST_CASE("the two Schur families are dual") {
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 3; ++d) {
            const auto labels = enumerate_mpartitions(m, d);
            for (const MPartition& L : labels)
                for (const MPartition& O : labels)
                    CHECK(scalar_product(schur(L), schur_star(O)) == QTScalar(L == O ? 1 : 0));
        }
}

TEST_CASE("with m = 0 the Schur functions are the classical ones") {
    const XPoly f = to_monomials(single(Basis::S, MPartition({}, {2, 1})), 3);
    const BasisExpansion e = m_expansion(f, 0);
    CHECK(e.coeffs.size() == 2);
    CHECK(e.coeff(MPartition({}, {2, 1})) == QTScalar(1));
    CHECK(e.coeff(MPartition({}, {1, 1, 1})) == QTScalar(2));
}

TEST_CASE("plethystic substitution") {
    const BasisExpansion p1 = single(Basis::Pow, MPartition({}, {1}));
    CHECK(plethysm(p1) == single(Basis::Pow, MPartition({}, {1}), one / (one - t)));
    const BasisExpansion m1 = single(Basis::M, MPartition({1}, {}));
    CHECK(plethysm(m1) == m1);
    for (const MPartition& L : enumerate_mpartitions(1, 3)) {
        const BasisExpansion e = single(Basis::K, L);
        CHECK(plethysm(plethysm(e), true) == e);
    }
}

TEST_CASE("T* satisfies the quadratic relation") {
    for (const MPartition& L : enumerate_mpartitions(2, 3)) {
        const BasisExpansion e = single(Basis::K, L);
        const BasisExpansion te = t_star(1, e);
        BasisExpansion rhs = te;
        for (auto& [O, c] : rhs.coeffs) c *= t - one;
        for (const auto& [O, c] : e.coeffs) rhs.add(O, c * t);
        CHECK(t_star(1, te) == rhs);
    }
}

TEST_CASE("LaTeX output") {
    CHECK(latex(QTPoly::parse("q*t^3 + t")) == "qt^{3} + t");
    CHECK(latex_label(MPartition({3, 0}, {})) == "3,0;\\emptyset");
    const BasisExpansion J = m_expansion(integral_J(MPartition({1, 0}, {2}), 5), 2);
    const std::string s = latex(convert(plethysm(J), Basis::S));
    CHECK(s.rfind("t^{2} s_{3,0;\\emptyset} + qt^{2} s_{0,3;\\emptyset}", 0) == 0);
}
