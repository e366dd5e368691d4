// SPDX-License-Identifier: MIT
#include "msym/polyring.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace msym {

Exponent make_exponent(const std::vector<int>& e) {
    if (e.size() > kMaxVars) throw DomainError("too many variables");
    Exponent x{};
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255) throw DomainError("exponent out of range");
        x[i] = static_cast<std::uint8_t>(e[i]);
    }
    return x;
}

std::vector<int> exponent_vec(const Exponent& e, int nvars) {
    return std::vector<int>(e.begin(), e.begin() + nvars);
}

XPoly::XPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw DomainError("unsupported number of variables");
}

XPoly XPoly::constant(int nvars, const QTScalar& c) {
    XPoly p(nvars);
    p.add_term(Exponent{}, c);
    return p;
}

XPoly XPoly::monomial(int nvars, const std::vector<int>& exp, const QTScalar& c) {
    if (static_cast<int>(exp.size()) != nvars) throw DomainError("exponent length mismatch");
    XPoly p(nvars);
    p.add_term(make_exponent(exp), c);
    return p;
}

int XPoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int i = 0; i < nvars_; ++i) s += e[i];
        d = std::max(d, s);
    }
    return d;
}

QTScalar XPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QTScalar() : it->second;
}

QTScalar XPoly::coeff(const std::vector<int>& exp) const { return coeff(make_exponent(exp)); }

void XPoly::add_term(const Exponent& e, const QTScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void XPoly::check_same(const XPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("variable count mismatch");
}

XPoly& XPoly::operator+=(const XPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    a.check_same(b);
    XPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{};
            for (int i = 0; i < a.nvars_; ++i) {
                const int s = ea[i] + eb[i];
                if (s > 255) throw DomainError("exponent out of range");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

bool operator==(const XPoly& a, const XPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

XPoly XPoly::scaled(const QTScalar& c) const {
    XPoly r(nvars_);
    if (c.is_zero()) return r;
    if (c.is_one()) return *this;
    for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
    return r;
}

XPoly XPoly::mul_x(int i) const {
    if (i < 1 || i > nvars_) throw DomainError("variable index out of range");
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        if (f[i - 1] == 255) throw DomainError("exponent out of range");
        ++f[i - 1];
        r.terms_.emplace(f, c);
    }
    return r;
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += " * ";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        bool neg = false;
        std::string coef;
        const bool simple = c.is_polynomial() && c.num().size() == 1;
        if (simple) {
            neg = c.num().leading().c < 0;
            coef = (neg ? -c : c).str();
        } else {
            coef = "(" + c.str() + ")";
        }
        std::string body;
        if (mono.empty()) {
            body = coef;
        } else if (simple && coef == "1") {
            body = mono;
        } else {
            body = coef + " * " + mono;
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

namespace {

// T_i on x_i^a x_{i+1}^b as a list of (j, coefficient of x_i^j x_{i+1}^{a+b-j}).
using HeckeImage = std::vector<std::pair<int, QTScalar>>;

HeckeImage compute_hecke_image(int a, int b) {
    const int n = a + b;
    // c_j is the coefficient of x^j y^{n-j} in K f - f = x^b y^a - x^a y^b.
    std::vector<Int> c(n + 1, Int(0));
    c[b] += 1;
    c[a] -= 1;
    // Divide by (x - y): c_j = e_{j-1} - e_j.
    std::vector<Int> e(n, Int(0));
    e[n - 1] = c[n];
    for (int j = n - 1; j >= 1; --j) e[j - 1] = c[j] + e[j];
    if (c[0] != -e[0]) throw InternalError("divided difference is not exact");
    // Multiply by (t x - y), then add t x^a y^b.
    HeckeImage out;
    for (int j = 0; j <= n; ++j) {
        QTPoly coef;
        if (j >= 1 && e[j - 1] != 0) coef += QTPoly::monomial(e[j - 1], 0, 1);
        if (j <= n - 1 && e[j] != 0) coef -= QTPoly(e[j]);
        if (j == a) coef += QTPoly::t();
        if (!coef.is_zero()) out.emplace_back(j, QTScalar(coef));
    }
    return out;
}

const HeckeImage& hecke_image(int a, int b) {
    static std::shared_mutex mu;
    static std::unordered_map<int, HeckeImage> memo;
    const int key = a * 256 + b;
    {
        std::shared_lock lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    HeckeImage img = compute_hecke_image(a, b);
    std::unique_lock lock(mu);
    return memo.try_emplace(key, std::move(img)).first->second;
}

void check_index(int i, const XPoly& f) {
    if (i < 1 || i >= f.nvars()) throw DomainError("Hecke index out of range");
}

}  // namespace

XPoly hecke_T(int i, const XPoly& f) {
    check_index(i, f);
    const QTScalar t = QTScalar(QTPoly::t());
    XPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        const int a = e[i - 1];
        const int b = e[i];
        if (a == b) {
            r.add_term(e, c * t);
            continue;
        }
        for (const auto& [j, coef] : hecke_image(a, b)) {
            Exponent g = e;
            g[i - 1] = static_cast<std::uint8_t>(j);
            g[i] = static_cast<std::uint8_t>(a + b - j);
            r.add_term(g, c * coef);
        }
    }
    return r;
}

XPoly hecke_T_inverse(int i, const XPoly& f) {
    const QTScalar ti = QTScalar::t_pow(-1);
    return f.scaled(ti - QTScalar(1)) + hecke_T(i, f).scaled(ti);
}

XPoly swap_vars(int i, const XPoly& f) {
    check_index(i, f);
    XPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponent g = e;
        std::swap(g[i - 1], g[i]);
        r.add_term(g, c);
    }
    return r;
}

XPoly omega(const XPoly& f) {
    const int n = f.nvars();
    XPoly r(n);
    for (const auto& [e, c] : f.terms()) {
        Exponent g{};
        for (int k = 0; k + 1 < n; ++k) g[k] = e[k + 1];
        g[n - 1] = e[0];
        r.add_term(g, c * QTScalar::q_pow(e[0]));
    }
    return r;
}

XPoly cherednik_Y(int i, const XPoly& f) {
    const int n = f.nvars();
    if (i < 1 || i > n) throw DomainError("Cherednik index out of range");
    XPoly g = f;
    for (int k = i - 1; k >= 1; --k) g = hecke_T_inverse(k, g);
    g = omega(g);
    for (int k = n - 1; k >= i; --k) g = hecke_T(k, g);
    return g.scaled(QTScalar::t_pow(i - n));
}

XPoly symmetrize(int m, const XPoly& f) {
    const int n = f.nvars();
    if (m < 0 || m > n) throw DomainError("symmetrizer index out of range");
    XPoly g = f;
    for (int k = n - 1; k >= m + 1; --k) {
        XPoly acc = g;
        XPoly h = g;
        for (int j = k; j <= n - 1; ++j) {
            h = hecke_T(j, h);
            acc += h;
        }
        g = std::move(acc);
    }
    return g;
}

XPoly phi_q(const XPoly& f) {
    const int n = f.nvars();
    XPoly g = f.mul_x(1);
    for (int k = 1; k <= n - 1; ++k) g = hecke_T(k, g);
    return g.scaled(QTScalar::t_pow(1 - n));
}

XPoly psi_N(const XPoly& f, int m) {
    const int n = f.nvars();
    if (m < 1 || m > n - 1) throw DomainError("psi_N needs 1 <= m < N");
    XPoly g = phi_q(f);
    XPoly acc = g;
    XPoly h = g;
    for (int k = n - 1; k >= m; --k) {
        h = hecke_T(k, h);
        acc += h;
    }
    return acc.scaled(QTScalar(QTPoly(1) - QTPoly::t()));
}

XPoly eigen_D(const XPoly& f, int m, int lstar) {
    const int n = f.nvars();
    XPoly r(n);
    for (int i = m + 1; i <= n; ++i) r += cherednik_Y(i, f);
    QTScalar s;
    for (int i = lstar + 1; i <= n; ++i) s += QTScalar::t_pow(1 - i);
    return r - f.scaled(s);
}

XPoly drop_var(const XPoly& f, int i) {
    const int n = f.nvars();
    if (i < 1 || i > n) throw DomainError("variable index out of range");
    XPoly r(n - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[i - 1] != 0) continue;
        Exponent g{};
        for (int k = 0, o = 0; k < n; ++k)
            if (k != i - 1) g[o++] = e[k];
        r.add_term(g, c);
    }
    return r;
}

XPoly embed(const XPoly& f) {
    XPoly r(f.nvars() + 1);
    for (const auto& [e, c] : f.terms()) r.add_term(e, c);
    return r;
}

bool symmetric_from(const XPoly& f, int from) {
    for (int k = std::max(from, 1); k < f.nvars(); ++k)
        if (swap_vars(k, f) != f) return false;
    return true;
}

XPoly restrict_poly(const XPoly& f, int m) {
    if (!symmetric_from(f, m + 2)) throw DomainError("restriction needs symmetry in x_{m+2}..x_N");
    return drop_var(f, m + 1);
}

}  // namespace msym
