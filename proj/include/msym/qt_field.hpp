// SPDX-License-Identifier: MIT
// Exact arithmetic in Z[q,t], Q(q,t) and Q[t,1/t].
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msym {

using Int = mpz_class;
using Rat = mpq_class;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Polynomial in Z[q,t]. Terms are kept sorted ascending by (deg q, deg t)
// and never hold a zero coefficient.
class QTPoly {
public:
    struct Term {
        int dq = 0;
        int dt = 0;
        Int c;
    };

    QTPoly() = default;
    QTPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit QTPoly(const Int& c);

    static QTPoly monomial(const Int& c, int dq, int dt);
    static QTPoly q(int k = 1) { return monomial(1, k, 0); }
    static QTPoly t(int k = 1) { return monomial(1, 0, k); }
    static QTPoly from_terms(std::vector<Term> terms);
    static QTPoly parse(const std::string& text);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int deg_q() const;
    int deg_t() const;
    int min_q() const;
    int min_t() const;
    // Largest term under the canonical (deg q, deg t) order.
    const Term& leading() const { return terms_.back(); }
    Int content() const;
    bool nonnegative() const;

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend bool operator==(const QTPoly& a, const QTPoly& b);
    friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }

    QTPoly scaled(const Int& k) const;
    QTPoly divexact(const Int& k) const;
    // Multiplies by q^dq t^dt; negative shifts must keep every exponent >= 0.
    QTPoly shifted(int dq, int dt) const;
    // Exact quotient, or nullopt when d does not divide *this.
    std::optional<QTPoly> divide(const QTPoly& d) const;
    Rat evaluate(const Rat& q0, const Rat& t0) const;
    // Total order, used for deterministic containers.
    int compare(const QTPoly& o) const;

    std::string str() const;

private:
    std::vector<Term> terms_;
};

// Greatest common divisor in Z[q,t], normalized to a positive leading
// coefficient. gcd(0,0) = 0.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

// Element of Q(q,t) kept as a reduced fraction with positive leading
// denominator coefficient.
class QTScalar {
public:
    QTScalar() : den_(1) {}
    QTScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    QTScalar(const QTPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit QTScalar(const Rat& r);

    static QTScalar fraction(const QTPoly& num, const QTPoly& den);
    static QTScalar q_pow(int k);
    static QTScalar t_pow(int k);
    static QTScalar parse(const std::string& text);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    QTScalar operator-() const;
    QTScalar& operator+=(const QTScalar& o);
    QTScalar& operator-=(const QTScalar& o);
    QTScalar& operator*=(const QTScalar& o);
    QTScalar& operator/=(const QTScalar& o);
    friend QTScalar operator+(QTScalar a, const QTScalar& b) { return a += b; }
    friend QTScalar operator-(QTScalar a, const QTScalar& b) { return a -= b; }
    friend QTScalar operator*(QTScalar a, const QTScalar& b) { return a *= b; }
    friend QTScalar operator/(QTScalar a, const QTScalar& b) { return a /= b; }
    friend bool operator==(const QTScalar& a, const QTScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QTScalar& a, const QTScalar& b) { return !(a == b); }

    QTScalar mul_poly(const QTPoly& p) const;
    QTScalar inverse() const;
    QTScalar pow(int k) const;
    Rat evaluate(const Rat& q0, const Rat& t0) const;
    int compare(const QTScalar& o) const;

    std::string str() const;

private:
    QTScalar(QTPoly n, QTPoly d, bool) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize_sign();

    QTPoly num_;
    QTPoly den_;
};

// Laurent polynomial in t with rational coefficients.
class TLaurent {
public:
    TLaurent() = default;
    TLaurent(long c);  // NOLINT(google-explicit-constructor)
    static TLaurent monomial(const Rat& c, int e);
    static TLaurent t(int e = 1) { return monomial(1, e); }
    // Converts a scalar of the form p(t)/t^k; throws DomainError otherwise.
    static TLaurent from_scalar(const QTScalar& s);
    static TLaurent parse(const std::string& text);

    const std::map<int, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_deg() const;
    int max_deg() const;
    bool nonnegative() const;

    TLaurent& operator+=(const TLaurent& o);
    TLaurent& operator-=(const TLaurent& o);
    friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
    friend TLaurent operator-(TLaurent a, const TLaurent& b) { return a -= b; }
    friend TLaurent operator*(const TLaurent& a, const TLaurent& b);
    friend bool operator==(const TLaurent& a, const TLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TLaurent& a, const TLaurent& b) { return !(a == b); }

    Rat evaluate(const Rat& t0) const;
    QTScalar to_scalar() const;
    std::string str() const;

private:
    void add_term(int e, const Rat& c);
    std::map<int, Rat> terms_;
};

}  // namespace msym
