// SPDX-License-Identifier: MIT
// Polynomials in x_1..x_N over Q(q,t) and the Hecke-type operators on them.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "msym/qt_field.hpp"

namespace msym {

constexpr int kMaxVars = 16;
using Exponent = std::array<std::uint8_t, kMaxVars>;

struct ExponentGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

Exponent make_exponent(const std::vector<int>& e);
std::vector<int> exponent_vec(const Exponent& e, int nvars);

// Sparse polynomial. Terms are ordered lexicographically, x_1 most
// significant, largest exponent first.
class XPoly {
public:
    using TermMap = std::map<Exponent, QTScalar, ExponentGreater>;

    explicit XPoly(int nvars = 0);
    static XPoly constant(int nvars, const QTScalar& c);
    static XPoly monomial(int nvars, const std::vector<int>& exp, const QTScalar& c = QTScalar(1));

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const;
    QTScalar coeff(const std::vector<int>& exp) const;
    QTScalar coeff(const Exponent& e) const;

    void add_term(const Exponent& e, const QTScalar& c);
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly operator-() const;
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend bool operator==(const XPoly& a, const XPoly& b);
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    XPoly scaled(const QTScalar& c) const;
    XPoly mul_x(int i) const;  // multiply by x_i, 1-based

    // `x1^2 * x3`, with coefficients printed in front, terms joined by ` + `.
    std::string str() const;

private:
    void check_same(const XPoly& o) const;
    int nvars_;
    TermMap terms_;
};

// Hecke generator T_i (1 <= i < N) and its inverse.
XPoly hecke_T(int i, const XPoly& f);
XPoly hecke_T_inverse(int i, const XPoly& f);
// Exchanges x_i and x_{i+1}.
XPoly swap_vars(int i, const XPoly& f);
// f(x_1..x_N) -> f(q x_N, x_1, ..., x_{N-1}).
XPoly omega(const XPoly& f);
XPoly cherednik_Y(int i, const XPoly& f);
// S^t_{m,N} through the factorized operator chain.
XPoly symmetrize(int m, const XPoly& f);
XPoly phi_q(const XPoly& f);
XPoly psi_N(const XPoly& f, int m);
XPoly eigen_D(const XPoly& f, int m, int lstar);

// Sets x_i = 0 and renumbers the later variables down by one.
XPoly drop_var(const XPoly& f, int i);
// Appends an unused variable x_{N+1}.
XPoly embed(const XPoly& f);
// r: R_{m+1} -> R_m. Requires symmetry in x_{m+2}..x_N.
XPoly restrict_poly(const XPoly& f, int m);
// True when f is symmetric in x_{from}..x_N (1-based).
bool symmetric_from(const XPoly& f, int from);

}  // namespace msym
