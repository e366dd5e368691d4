// SPDX-License-Identifier: MIT
#include "msym/qt_field.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

namespace msym {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (ascending coefficients, trimmed).

using UPoly = std::vector<Int>;

void utrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

bool uis_unit(const UPoly& a) { return a.size() == 1 && (a[0] == 1 || a[0] == -1); }

Int ucontent(const UPoly& a) {
    Int g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void udivexact(UPoly& a, const Int& k) {
    if (k == 1) return;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    utrim(r);
    return r;
}

// a -= f * x^shift * b
void usubmul(UPoly& a, const UPoly& f, const UPoly& b) {
    if (f.empty() || b.empty()) return;
    if (a.size() < f.size() + b.size() - 1) a.resize(f.size() + b.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(a[i + j].get_mpz_t(), f[i].get_mpz_t(), b[j].get_mpz_t());
    }
    utrim(a);
}

// Exact division in Z[x]; false when b does not divide a.
bool udiv(const UPoly& a, const UPoly& b, UPoly& quo) {
    quo.clear();
    if (a.empty()) return true;
    const int da = udeg(a);
    const int db = udeg(b);
    if (da < db) return false;
    if (db == 0) {
        quo = a;
        for (auto& c : quo) {
            if (!mpz_divisible_p(c.get_mpz_t(), b[0].get_mpz_t())) return false;
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b[0].get_mpz_t());
        }
        return true;
    }
    UPoly r = a;
    quo.assign(da - db + 1, Int(0));
    const Int& lb = b.back();
    for (int k = da - db; k >= 0; --k) {
        Int& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        Int f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[k + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
        quo[k] = std::move(f);
    }
    for (int j = 0; j < db; ++j)
        if (r[j] != 0) return false;
    utrim(quo);
    return true;
}

UPoly uprem(UPoly a, const UPoly& b) {
    const int db = udeg(b);
    const Int& lb = b.back();
    while (!a.empty() && udeg(a) >= db) {
        Int la = a.back();
        const int k = udeg(a) - db;
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(a[k + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
        utrim(a);
    }
    return a;
}

void umake_primitive(UPoly& a) {
    if (a.empty()) return;
    Int c = ucontent(a);
    if (a.back() < 0) c = -c;
    udivexact(a, c);
}

UPoly ugcd(UPoly a, UPoly b) {
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        if (!a.empty() && a.back() < 0)
            for (auto& c : a) c = -c;
        return a;
    }
    Int ca = ucontent(a);
    Int cb = ucontent(b);
    Int c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.size() == 1 || b.size() == 1) return {c};
    udivexact(a, ca);
    udivexact(b, cb);
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (true) {
        if (udeg(b) == 0) return {c};
        UPoly r = uprem(a, b);
        if (r.empty()) {
            umake_primitive(b);
            for (auto& x : b) x *= c;
            return b;
        }
        a = std::move(b);
        b = std::move(r);
        umake_primitive(b);
    }
}

// ---------------------------------------------------------------------------
// Recursive dense polynomials: coefficients in Z[x] of powers of y.

using RPoly = std::vector<UPoly>;

void rtrim(RPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

int rdeg(const RPoly& a) { return static_cast<int>(a.size()) - 1; }

RPoly to_r(const QTPoly& p, bool main_q) {
    RPoly r;
    for (const auto& tm : p.terms()) {
        const int y = main_q ? tm.dq : tm.dt;
        const int x = main_q ? tm.dt : tm.dq;
        if (static_cast<int>(r.size()) <= y) r.resize(y + 1);
        if (static_cast<int>(r[y].size()) <= x) r[y].resize(x + 1);
        r[y][x] = tm.c;
    }
    return r;
}

QTPoly from_r(const RPoly& r, bool main_q) {
    std::vector<QTPoly::Term> terms;
    for (std::size_t y = 0; y < r.size(); ++y)
        for (std::size_t x = 0; x < r[y].size(); ++x)
            if (r[y][x] != 0) {
                const int iy = static_cast<int>(y);
                const int ix = static_cast<int>(x);
                terms.push_back({main_q ? iy : ix, main_q ? ix : iy, r[y][x]});
            }
    return QTPoly::from_terms(std::move(terms));
}

UPoly rcontent(const RPoly& a) {
    UPoly g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = ugcd(g, c);
        if (uis_unit(g)) break;
    }
    return g;
}

void rdivexact_u(RPoly& a, const UPoly& c) {
    if (uis_unit(c) && c[0] == 1) return;
    for (auto& coef : a) {
        if (coef.empty()) continue;
        UPoly qq;
        if (!udiv(coef, c, qq)) throw InternalError("content division not exact");
        coef = std::move(qq);
    }
}

RPoly rprem(RPoly a, const RPoly& b) {
    const int db = rdeg(b);
    const UPoly& lb = b.back();
    while (!a.empty() && rdeg(a) >= db) {
        UPoly la = a.back();
        const int k = rdeg(a) - db;
        for (auto& c : a) c = umul(c, lb);
        for (int j = 0; j <= db; ++j) usubmul(a[k + j], la, b[j]);
        rtrim(a);
    }
    return a;
}

bool rdiv(const RPoly& a, const RPoly& b, RPoly& quo) {
    quo.clear();
    if (a.empty()) return true;
    const int da = rdeg(a);
    const int db = rdeg(b);
    if (da < db) return false;
    RPoly r = a;
    quo.assign(da - db + 1, UPoly{});
    const UPoly& lb = b.back();
    for (int k = da - db; k >= 0; --k) {
        UPoly& top = r[k + db];
        if (top.empty()) continue;
        UPoly f;
        if (!udiv(top, lb, f)) return false;
        for (int j = 0; j <= db; ++j) usubmul(r[k + j], f, b[j]);
        quo[k] = std::move(f);
    }
    for (int j = 0; j < db; ++j)
        if (!r[j].empty()) return false;
    rtrim(quo);
    return true;
}

// Primitive remainder sequence over Z[x][y].
RPoly rgcd(RPoly a, RPoly b) {
    UPoly ca = rcontent(a);
    UPoly cb = rcontent(b);
    UPoly c = ugcd(ca, cb);
    rdivexact_u(a, ca);
    rdivexact_u(b, cb);
    if (rdeg(a) < rdeg(b)) std::swap(a, b);
    RPoly g;
    while (true) {
        if (rdeg(b) == 0) {
            g = RPoly{UPoly{Int(1)}};
            break;
        }
        RPoly r = rprem(a, b);
        if (r.empty()) {
            g = std::move(b);
            break;
        }
        a = std::move(b);
        b = std::move(r);
        rdivexact_u(b, rcontent(b));
    }
    for (auto& coef : g) coef = umul(coef, c);
    rtrim(g);
    return g;
}

std::uint64_t key_of(int dq, int dt) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(dq)) << 32) |
           static_cast<std::uint32_t>(dt);
}

Rat rat_pow(const Rat& b, int e) {
    Rat r = 1;
    if (e == 0) return r;
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    r = Rat(n, d);
    r.canonicalize();
    return r;
}

std::string monomial_text(int dq, int dt) {
    std::string s;
    auto part = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += " * ";
        s += v;
        if (e != 1) s += "^" + std::to_string(e);
    };
    part("q", dq);
    part("t", dt);
    return s;
}

// Recursive-descent parser for expressions in Q(q,t).
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    QTScalar parse_all() {
        QTScalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("parse error at offset " + std::to_string(pos_) + " (" + what +
                          ") in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Int(s_.substr(start, pos_ - start));
    }
    QTScalar expr() {
        QTScalar acc;
        bool first = true;
        while (true) {
            bool neg = false;
            if (eat('-')) {
                neg = true;
            } else if (!eat('+') && !first) {
                break;
            }
            QTScalar v = term();
            acc += neg ? -v : v;
            first = false;
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
        }
        return acc;
    }
    QTScalar term() {
        QTScalar v = factor();
        while (true) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                QTScalar d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                break;
            }
        }
        return v;
    }
    QTScalar factor() {
        QTScalar b = base();
        if (eat('^')) {
            bool neg = eat('-');
            Int e = integer();
            if (!e.fits_sint_p()) fail("exponent too large");
            int k = static_cast<int>(e.get_si());
            b = b.pow(neg ? -k : k);
        }
        return b;
    }
    QTScalar base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            QTScalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return QTScalar(QTPoly::q());
        }
        if (c == 't') {
            ++pos_;
            return QTScalar(QTPoly::t());
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return QTScalar(QTPoly(integer()));
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// QTPoly

QTPoly::QTPoly(long c) {
    if (c != 0) terms_.push_back({0, 0, Int(c)});
}

QTPoly::QTPoly(const Int& c) {
    if (c != 0) terms_.push_back({0, 0, c});
}

QTPoly QTPoly::monomial(const Int& c, int dq, int dt) {
    if (dq < 0 || dt < 0) throw DomainError("negative exponent in QTPoly");
    QTPoly p;
    if (c != 0) p.terms_.push_back({dq, dt, c});
    return p;
}

QTPoly QTPoly::from_terms(std::vector<Term> terms) {
    for (const auto& tm : terms)
        if (tm.dq < 0 || tm.dt < 0) throw DomainError("negative exponent in QTPoly");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return a.dq != b.dq ? a.dq < b.dq : a.dt < b.dt;
    });
    QTPoly p;
    for (auto& tm : terms) {
        if (!p.terms_.empty() && p.terms_.back().dq == tm.dq && p.terms_.back().dt == tm.dt) {
            p.terms_.back().c += tm.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else if (tm.c != 0) {
            p.terms_.push_back(std::move(tm));
        }
    }
    return p;
}

QTPoly QTPoly::parse(const std::string& text) {
    QTScalar s = QTScalar::parse(text);
    if (!s.is_polynomial()) throw DomainError("not a polynomial: '" + text + "'");
    return s.num();
}

bool QTPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0 && terms_[0].c == 1;
}

bool QTPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0);
}

int QTPoly::deg_q() const { return terms_.empty() ? 0 : terms_.back().dq; }

int QTPoly::deg_t() const {
    int d = 0;
    for (const auto& tm : terms_) d = std::max(d, tm.dt);
    return d;
}

int QTPoly::min_q() const { return terms_.empty() ? 0 : terms_.front().dq; }

int QTPoly::min_t() const {
    if (terms_.empty()) return 0;
    int d = terms_.front().dt;
    for (const auto& tm : terms_) d = std::min(d, tm.dt);
    return d;
}

Int QTPoly::content() const {
    Int g = 0;
    for (const auto& tm : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

bool QTPoly::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& tm) { return tm.c > 0; });
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& tm : r.terms_) tm.c = -tm.c;
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && key_of(terms_[i].dq, terms_[i].dt) <
                                      key_of(o.terms_[j].dq, o.terms_[j].dt))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || key_of(o.terms_[j].dq, o.terms_[j].dt) <
                                              key_of(terms_[i].dq, terms_[i].dt)) {
            out.push_back(o.terms_[j++]);
        } else {
            Term tm = std::move(terms_[i++]);
            tm.c += o.terms_[j++].c;
            if (tm.c != 0) out.push_back(std::move(tm));
        }
    }
    terms_ = std::move(out);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) { return *this += -o; }

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) {
        const auto& tm = a.terms_[0];
        return b.scaled(tm.c).shifted(tm.dq, tm.dt);
    }
    if (b.size() == 1) {
        const auto& tm = b.terms_[0];
        return a.scaled(tm.c).shifted(tm.dq, tm.dt);
    }
    const int q0 = a.min_q() + b.min_q();
    const int t0 = a.min_t() + b.min_t();
    const int nq = a.deg_q() + b.deg_q() - q0 + 1;
    const int nt = a.deg_t() + b.deg_t() - t0 + 1;
    const std::size_t cells = static_cast<std::size_t>(nq) * static_cast<std::size_t>(nt);
    QTPoly r;
    if (cells <= 4 * a.size() * b.size() + 64) {
        std::vector<Int> grid(cells);
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                std::size_t idx = static_cast<std::size_t>(x.dq + y.dq - q0) * nt +
                                  static_cast<std::size_t>(x.dt + y.dt - t0);
                mpz_addmul(grid[idx].get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
            }
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nt; ++j) {
                Int& c = grid[static_cast<std::size_t>(i) * nt + j];
                if (c != 0) r.terms_.push_back({i + q0, j + t0, std::move(c)});
            }
        return r;
    }
    std::vector<QTPoly::Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) prods.push_back({x.dq + y.dq, x.dt + y.dt, x.c * y.c});
    return QTPoly::from_terms(std::move(prods));
}

bool operator==(const QTPoly& a, const QTPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.dq != y.dq || x.dt != y.dt || x.c != y.c) return false;
    }
    return true;
}

QTPoly QTPoly::scaled(const Int& k) const {
    if (k == 0) return {};
    QTPoly r = *this;
    if (k != 1)
        for (auto& tm : r.terms_) tm.c *= k;
    return r;
}

QTPoly QTPoly::divexact(const Int& k) const {
    QTPoly r = *this;
    if (k != 1)
        for (auto& tm : r.terms_) mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), k.get_mpz_t());
    return r;
}

QTPoly QTPoly::shifted(int dq, int dt) const {
    QTPoly r = *this;
    for (auto& tm : r.terms_) {
        tm.dq += dq;
        tm.dt += dt;
        if (tm.dq < 0 || tm.dt < 0) throw DomainError("negative exponent after shift");
    }
    return r;
}

std::optional<QTPoly> QTPoly::divide(const QTPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    if (is_zero()) return QTPoly{};
    if (d.is_constant()) {
        const Int& k = d.terms_[0].c;
        for (const auto& tm : terms_)
            if (!mpz_divisible_p(tm.c.get_mpz_t(), k.get_mpz_t())) return std::nullopt;
        return divexact(k);
    }
    if (d.deg_q() > deg_q() || d.deg_t() > deg_t() || d.min_q() > min_q() || d.min_t() > min_t())
        return std::nullopt;
    if (d.is_monomial()) {
        const auto& tm = d.terms_[0];
        for (const auto& x : terms_)
            if (!mpz_divisible_p(x.c.get_mpz_t(), tm.c.get_mpz_t())) return std::nullopt;
        return divexact(tm.c).shifted(-tm.dq, -tm.dt);
    }
    const bool main_q = d.deg_t() == 0 || (d.deg_q() != 0 && d.deg_q() <= d.deg_t());
    RPoly quo;
    if (!rdiv(to_r(*this, main_q), to_r(d, main_q), quo)) return std::nullopt;
    return from_r(quo, main_q);
}

Rat QTPoly::evaluate(const Rat& q0, const Rat& t0) const {
    Rat acc = 0;
    for (const auto& tm : terms_) acc += Rat(tm.c) * rat_pow(q0, tm.dq) * rat_pow(t0, tm.dt);
    return acc;
}

int QTPoly::compare(const QTPoly& o) const {
    const std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = terms_[i];
        const auto& y = o.terms_[i];
        if (x.dq != y.dq) return x.dq < y.dq ? -1 : 1;
        if (x.dt != y.dt) return x.dt < y.dt ? -1 : 1;
        int c = cmp(x.c, y.c);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (terms_.size() == o.terms_.size()) return 0;
    return terms_.size() < o.terms_.size() ? -1 : 1;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->c < 0;
        Int mag = abs(it->c);
        std::string mono = monomial_text(it->dq, it->dt);
        std::string body;
        if (mono.empty()) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = mono;
        } else {
            body = mag.get_str() + " * " + mono;
        }
        if (first) {
            s = neg ? "-" + body : body;
            first = false;
        } else {
            s += neg ? " - " : " + ";
            s += body;
        }
    }
    return s;
}

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
    auto normalized = [](QTPoly p) { return p.leading().c < 0 ? -p : p; };
    if (a.is_zero()) return b.is_zero() ? QTPoly{} : normalized(b);
    if (b.is_zero()) return normalized(a);
    const int mq = std::min(a.min_q(), b.min_q());
    const int mt = std::min(a.min_t(), b.min_t());
    QTPoly x = a.shifted(-a.min_q(), -a.min_t());
    QTPoly y = b.shifted(-b.min_q(), -b.min_t());
    Int ci;
    {
        Int cx = x.content();
        Int cy = y.content();
        mpz_gcd(ci.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    }
    QTPoly mono = QTPoly::monomial(ci, mq, mt);
    if (x.is_constant() || y.is_constant()) return mono;
    if (x == y || x == -y) return normalized(x.divexact(x.content()).scaled(ci)).shifted(mq, mt);
    // Divisibility shortcut: common when one operand is a factor of the other.
    const QTPoly& small = x.size() <= y.size() ? x : y;
    const QTPoly& large = x.size() <= y.size() ? y : x;
    {
        QTPoly sp = small.divexact(small.content());
        if (large.divide(sp)) return normalized(sp.scaled(ci)).shifted(mq, mt);
    }
    const int dq = std::max(x.deg_q(), y.deg_q());
    const int dt = std::max(x.deg_t(), y.deg_t());
    bool main_q;
    if (x.deg_q() == 0 || y.deg_q() == 0) {
        main_q = true;
    } else if (x.deg_t() == 0 || y.deg_t() == 0) {
        main_q = false;
    } else {
        main_q = dq <= dt;
    }
    QTPoly g = from_r(rgcd(to_r(x, main_q), to_r(y, main_q)), main_q);
    return normalized(g).shifted(mq, mt);
}

// ---------------------------------------------------------------------------
// QTScalar

QTScalar::QTScalar(const Rat& r) : num_(QTPoly(r.get_num())), den_(QTPoly(r.get_den())) {}

QTScalar QTScalar::fraction(const QTPoly& num, const QTPoly& den) {
    if (den.is_zero()) throw DomainError("zero denominator");
    if (num.is_zero()) return {};
    if (den.is_one()) return QTScalar(num);
    QTPoly g = gcd(num, den);
    QTScalar r;
    if (g.is_one()) {
        r = QTScalar(num, den, true);
    } else {
        r = QTScalar(*num.divide(g), *den.divide(g), true);
    }
    r.normalize_sign();
    return r;
}

QTScalar QTScalar::q_pow(int k) {
    if (k >= 0) return QTScalar(QTPoly::q(k));
    return QTScalar(QTPoly(1), QTPoly::q(-k), true);
}

QTScalar QTScalar::t_pow(int k) {
    if (k >= 0) return QTScalar(QTPoly::t(k));
    return QTScalar(QTPoly(1), QTPoly::t(-k), true);
}

QTScalar QTScalar::parse(const std::string& text) { return ExprParser(text).parse_all(); }

void QTScalar::normalize_sign() {
    if (den_.leading().c < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QTScalar QTScalar::operator-() const { return QTScalar(-num_, den_, true); }

QTScalar& QTScalar::operator+=(const QTScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        QTPoly n = num_ + o.num_;
        if (den_.is_one()) {
            num_ = std::move(n);
            return *this;
        }
        return *this = fraction(n, den_);
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this;
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        return *this;
    }
    QTPoly g = gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = QTPoly(1);
        normalize_sign();
        return *this;
    }
    QTPoly b1 = *den_.divide(g);
    QTPoly d1 = *o.den_.divide(g);
    QTPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) return *this = QTScalar();
    QTPoly den = b1 * o.den_;
    QTPoly g2 = gcd(n, g);
    if (!g2.is_one()) {
        n = *n.divide(g2);
        den = *den.divide(g2);
    }
    num_ = std::move(n);
    den_ = std::move(den);
    normalize_sign();
    return *this;
}

QTScalar& QTScalar::operator-=(const QTScalar& o) { return *this += -o; }

QTScalar& QTScalar::operator*=(const QTScalar& o) {
    if (is_zero() || o.is_zero()) return *this = QTScalar();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    QTPoly a = num_;
    QTPoly b = den_;
    QTPoly c = o.num_;
    QTPoly d = o.den_;
    if (!d.is_one()) {
        QTPoly g1 = gcd(a, d);
        if (!g1.is_one()) {
            a = *a.divide(g1);
            d = *d.divide(g1);
        }
    }
    if (!b.is_one()) {
        QTPoly g2 = gcd(c, b);
        if (!g2.is_one()) {
            c = *c.divide(g2);
            b = *b.divide(g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    normalize_sign();
    return *this;
}

QTScalar& QTScalar::operator/=(const QTScalar& o) { return *this *= o.inverse(); }

QTScalar QTScalar::mul_poly(const QTPoly& p) const { return *this * QTScalar(p); }

QTScalar QTScalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    QTScalar r(den_, num_, true);
    r.normalize_sign();
    return r;
}

QTScalar QTScalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    QTScalar r(1);
    QTScalar b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

Rat QTScalar::evaluate(const Rat& q0, const Rat& t0) const {
    Rat d = den_.evaluate(q0, t0);
    if (d == 0) throw DomainError("evaluation at a pole");
    return num_.evaluate(q0, t0) / d;
}

int QTScalar::compare(const QTScalar& o) const {
    int c = num_.compare(o.num_);
    return c != 0 ? c : den_.compare(o.den_);
}

std::string QTScalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// TLaurent

TLaurent::TLaurent(long c) {
    if (c != 0) terms_[0] = c;
}

TLaurent TLaurent::monomial(const Rat& c, int e) {
    TLaurent r;
    if (c != 0) r.terms_[e] = c;
    return r;
}

TLaurent TLaurent::from_scalar(const QTScalar& s) {
    const QTPoly& d = s.den();
    if (!d.is_monomial() || d.leading().dq != 0)
        throw DomainError("not a Laurent polynomial in t: " + s.str());
    TLaurent r;
    const int shift = d.leading().dt;
    const Int& dc = d.leading().c;
    for (const auto& tm : s.num().terms()) {
        if (tm.dq != 0) throw DomainError("scalar depends on q: " + s.str());
        r.add_term(tm.dt - shift, Rat(tm.c, dc));
    }
    return r;
}

TLaurent TLaurent::parse(const std::string& text) { return from_scalar(QTScalar::parse(text)); }

void TLaurent::add_term(int e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        Rat v = c;
        v.canonicalize();
        terms_.emplace(e, v);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int TLaurent::min_deg() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int TLaurent::max_deg() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

bool TLaurent::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

TLaurent& TLaurent::operator+=(const TLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TLaurent& TLaurent::operator-=(const TLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TLaurent operator*(const TLaurent& a, const TLaurent& b) {
    TLaurent r;
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Rat TLaurent::evaluate(const Rat& t0) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0) {
            if (t0 == 0) throw DomainError("evaluation at a pole");
            acc += c / rat_pow(t0, -e);
        } else {
            acc += c * rat_pow(t0, e);
        }
    }
    return acc;
}

QTScalar TLaurent::to_scalar() const {
    if (terms_.empty()) return {};
    const int shift = std::min(0, min_deg());
    Int den = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<QTPoly::Term> terms;
    for (const auto& [e, c] : terms_) {
        Rat scaled = c * Rat(den);
        terms.push_back({0, e - shift, scaled.get_num()});
    }
    return QTScalar::fraction(QTPoly::from_terms(std::move(terms)), QTPoly::monomial(den, 0, -shift));
}

std::string TLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->second < 0;
        Rat mag = abs(it->second);
        std::string mono;
        if (it->first == 1) {
            mono = "t";
        } else if (it->first != 0) {
            mono = "t^" + std::to_string(it->first);
        }
        std::string body;
        if (mono.empty()) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = mono;
        } else {
            body = mag.get_str() + " * " + mono;
        }
        if (first) {
            s = neg ? "-" + body : body;
            first = false;
        } else {
            s += (neg ? " - " : " + ") + body;
        }
    }
    return s;
}

}  // namespace msym
