// SPDX-License-Identifier: MIT
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "msym/polyring.hpp"

using namespace msym;

namespace {

const QTScalar q = QTScalar(QTPoly::q());
const QTScalar t = QTScalar(QTPoly::t());

XPoly x(int n, int i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    return XPoly::monomial(n, e);
}

XPoly sample(int n) {
    XPoly f(n);
    std::vector<int> e(n, 0);
    for (int i = 0; i < n; ++i) {
        e.assign(n, 0);
        e[i] = i + 1;
        if (i + 1 < n) e[i + 1] = 1;
        f += XPoly::monomial(n, e, QTScalar(i + 1) + q);
    }
    return f + XPoly::constant(n, t);
}

// Σ_w T_w over permutations of positions m+1..N, each through a reduced word.
XPoly naive_symmetrize(int m, const XPoly& f) {
    const int n = f.nvars();
    std::vector<int> w(n - m);
    std::iota(w.begin(), w.end(), 0);
    XPoly acc(n);
    do {
        std::vector<int> v = w;
        std::vector<int> word;
        for (bool moved = true; moved;) {
            moved = false;
            for (std::size_t i = 0; i + 1 < v.size(); ++i)
                if (v[i] > v[i + 1]) {
                    std::swap(v[i], v[i + 1]);
                    word.push_back(m + static_cast<int>(i) + 1);
                    moved = true;
                }
        }
        XPoly g = f;
        for (int i : word) g = hecke_T(i, g);
        acc += g;
    } while (std::next_permutation(w.begin(), w.end()));
    return acc;
}

}  // namespace

TEST_CASE("Hecke generators on small inputs") {
    CHECK(hecke_T(1, x(2, 1)) == x(2, 2));
    CHECK(hecke_T_inverse(1, x(2, 2)) == x(2, 1));
    CHECK(hecke_T(1, x(2, 1) * x(2, 2)) == (x(2, 1) * x(2, 2)).scaled(t));
    CHECK(hecke_T(1, XPoly::constant(2, 1)) == XPoly::constant(2, t));
    CHECK_THROWS_AS(hecke_T(2, x(2, 1)), DomainError);
}

TEST_CASE("Hecke relations") {
    for (int n = 2; n <= 4; ++n) {
        const XPoly f = sample(n);
        for (int i = 1; i < n; ++i) {
            const XPoly tf = hecke_T(i, f);
            CHECK(hecke_T(i, tf) == tf.scaled(t - QTScalar(1)) + f.scaled(t));
            CHECK(hecke_T_inverse(i, tf) == f);
            if (i + 1 < n)
                CHECK(hecke_T(i, hecke_T(i + 1, tf)) == hecke_T(i + 1, hecke_T(i, hecke_T(i + 1, f))));
        }
    }
}

TEST_CASE("omega and the Cherednik operators") {
    CHECK(omega(x(2, 1)) == x(2, 2).scaled(q));
    CHECK(omega(x(2, 2)) == x(2, 1));
    const XPoly y1 = cherednik_Y(1, x(2, 1));
    CHECK(y1 == x(2, 1).scaled(q) + x(2, 2).scaled(q * (QTScalar(1) - QTScalar::t_pow(-1))));
    for (int n = 2; n <= 3; ++n) {
        const XPoly f = sample(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK(cherednik_Y(i, cherednik_Y(j, f)) == cherednik_Y(j, cherednik_Y(i, f)));
    }
}

TEST_CASE("symmetrizer agrees with the sum over the group") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m < n; ++m) {
            const XPoly f = sample(n);
            const XPoly s = symmetrize(m, f);
            CHECK(s == naive_symmetrize(m, f));
            CHECK(symmetric_from(s, m + 1));
        }
    CHECK(symmetrize(3, sample(3)) == sample(3));
}

TEST_CASE("drop, embed and restrict") {
    const XPoly f = x(3, 1) + x(3, 2) * x(3, 3) + x(3, 3);
    CHECK(drop_var(f, 2) == x(2, 1) + x(2, 2));
    CHECK(embed(x(2, 2)) == x(3, 2));
    CHECK(restrict_poly(x(3, 1) + x(3, 2) + x(3, 3), 1) == x(2, 1) + x(2, 2));
    CHECK_THROWS_AS(restrict_poly(x(3, 1) + x(3, 3), 0), DomainError);
}

TEST_CASE("printing") {
    CHECK(x(2, 1).str() == "x1");
    CHECK((x(3, 1) * x(3, 1) * x(3, 3)).scaled(-t).str() == "-t * x1^2 * x3");
    CHECK(XPoly(2).str() == "0");
}
