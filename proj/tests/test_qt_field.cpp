// SPDX-License-Identifier: MIT
#include <random>

#include "doctest.h"
#include "msym/qt_field.hpp"

using namespace msym;

namespace {

QTPoly random_poly(std::mt19937& rng, int deg, int terms) {
    std::uniform_int_distribution<int> e(0, deg), c(-3, 3);
    QTPoly p;
    for (int k = 0; k < terms; ++k) p += QTPoly::monomial(c(rng), e(rng), e(rng));
    return p;
}

QTScalar random_scalar(std::mt19937& rng) {
    QTPoly d;
    while (d.is_zero()) d = random_poly(rng, 2, 3);
    return QTScalar::fraction(random_poly(rng, 3, 4), d);
}

}  // namespace

TEST_CASE("QTPoly arithmetic and printing") {
    const QTPoly q = QTPoly::q(), t = QTPoly::t();
    const QTPoly p = (QTPoly(1) - t) * (QTPoly(1) + q);
    CHECK(p.size() == 4);
    CHECK(p.deg_q() == 1);
    CHECK(p.deg_t() == 1);
    CHECK(QTPoly::parse(p.str()) == p);
    CHECK(QTPoly::parse("q^2*t - 3*t + 1") == q * q * t - QTPoly(3) * t + QTPoly(1));
    CHECK(p.divide(QTPoly(1) + q).value() == QTPoly(1) - t);
    CHECK_FALSE(p.divide(QTPoly(1) + q * t).has_value());
    CHECK(QTPoly::parse("2*q*t").shifted(-1, -1) == QTPoly(2));
}

TEST_CASE("gcd divides both arguments and agrees under evaluation") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        const QTPoly g0 = random_poly(rng, 2, 2) + QTPoly(1);
        const QTPoly a = g0 * random_poly(rng, 2, 3), b = g0 * random_poly(rng, 2, 3);
        const QTPoly g = gcd(a, b);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(a.divide(g).has_value());
        CHECK(b.divide(g).has_value());
        CHECK(g.divide(g0).has_value());
    }
    CHECK(gcd(QTPoly(), QTPoly()).is_zero());
}

TEST_CASE("QTScalar satisfies the field axioms on random samples") {
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        const QTScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QTScalar());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        if (!b.is_zero()) CHECK((a / b) * b == a);
        const Rat q0(2, 3), t0(5, 7);
        if (!b.is_zero() && b.den().evaluate(q0, t0) != 0 && b.num().evaluate(q0, t0) != 0 &&
            a.den().evaluate(q0, t0) != 0)
            CHECK((a / b).evaluate(q0, t0) == a.evaluate(q0, t0) / b.evaluate(q0, t0));
    }
}

TEST_CASE("QTScalar parse, print and evaluate") {
    const QTScalar x = QTScalar::parse("(1-t)*(1+q)/(1-q*t)");
    CHECK(QTScalar::parse(x.str()) == x);
    CHECK(x.evaluate(2, 3) == Rat(6, 5));
    CHECK_THROWS_AS(x.evaluate(1, 1), DomainError);
    CHECK(QTScalar::t_pow(-2) * QTScalar::t_pow(2) == QTScalar(1));
    CHECK(QTScalar::fraction(QTPoly(1) - QTPoly::q() * QTPoly::q(), QTPoly(1) - QTPoly::q()) ==
          QTScalar(QTPoly(1) + QTPoly::q()));
}

TEST_CASE("TLaurent") {
    const TLaurent x = TLaurent::t(-1) + TLaurent(2) + TLaurent::t(3);
    CHECK(x.min_deg() == -1);
    CHECK(x.max_deg() == 3);
    CHECK(TLaurent::from_scalar(x.to_scalar()) == x);
    CHECK(TLaurent::parse(x.str()) == x);
    CHECK(x.evaluate(2) == Rat(21, 2));
    CHECK_THROWS_AS(TLaurent::from_scalar(QTScalar(QTPoly::q())), DomainError);
}
