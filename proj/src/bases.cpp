// SPDX-License-Identifier: MIT
#include "msym/bases.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "msym/macdonald.hpp"
#include "msym/tableaux.hpp"

namespace msym {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "m";
        case Basis::Pow: return "p";
        case Basis::K: return "k";
        case Basis::S: return "s";
        case Basis::Sstar: return "s*";
        case Basis::MacP: return "P";
        case Basis::MacJ: return "J";
        case Basis::HL: return "H";
    }
    return "?";
}

void BasisExpansion::add(const MPartition& L, const QTScalar& c) {
    if (L.m() != m) throw DomainError("label " + L.str() + " has the wrong m");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(L, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

QTScalar BasisExpansion::coeff(const MPartition& L) const {
    auto it = coeffs.find(L);
    return it == coeffs.end() ? QTScalar() : it->second;
}

std::vector<MPartition> BasisExpansion::ordered_labels() const {
    std::vector<MPartition> v;
    for (const auto& [L, c] : coeffs) v.push_back(L);
    std::sort(v.begin(), v.end(), [](const MPartition& x, const MPartition& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return canonical_before(x, y);
    });
    return v;
}

std::string BasisExpansion::str() const {
    std::string s;
    for (const auto& L : ordered_labels()) {
        const QTScalar& c = coeffs.at(L);
        const bool simple = c.is_polynomial() && c.num().size() == 1;
        s += (simple ? c.str() : "(" + c.str() + ")") + " * " + basis_name(basis) + "[" + L.str() +
             "]\n";
    }
    return s;
}

BasisExpansion single(Basis b, const MPartition& L, const QTScalar& c) {
    BasisExpansion e;
    e.basis = b;
    e.m = L.m();
    e.add(L, c);
    return e;
}

QTMatrix invert(const QTMatrix& a) {
    const std::size_t n = a.size();
    QTMatrix w = a;
    QTMatrix inv(n, std::vector<QTScalar>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w[piv][col].is_zero()) ++piv;
        if (piv == n) throw InternalError("singular matrix");
        std::swap(w[piv], w[col]);
        std::swap(inv[piv], inv[col]);
        const QTScalar p = w[col][col].inverse();
        if (!p.is_one()) {
            for (auto& x : w[col]) x *= p;
            for (auto& x : inv[col]) x *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || w[r][col].is_zero()) continue;
            const QTScalar f = w[r][col];
            for (std::size_t k = 0; k < n; ++k) {
                if (!w[col][k].is_zero()) w[r][k] -= f * w[col][k];
                if (!inv[col][k].is_zero()) inv[r][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

std::vector<QTScalar> vec_mat(const std::vector<QTScalar>& v, const QTMatrix& a) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    std::vector<QTScalar> r(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!a[i][j].is_zero()) r[j] += v[i] * a[i][j];
    }
    return r;
}

namespace {

QTMatrix transpose(const QTMatrix& a) {
    const std::size_t n = a.size();
    QTMatrix r(n, std::vector<QTScalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
    return r;
}

// The m-symmetric monomial of Ω as a full exponent vector (b, μ).
std::vector<int> target_exponent(const MPartition& O) {
    std::vector<int> e = O.a;
    e.insert(e.end(), O.lam.begin(), O.lam.end());
    return e;
}

// Coefficient of x^target in x^a p_λ(x): ways to send each part of λ to a
// variable so that the exponents add up.
Int pow_coefficient(const MPartition& L, const std::vector<int>& target) {
    std::vector<int> rest = target;
    rest.resize(std::max(rest.size(), L.a.size()), 0);
    for (std::size_t i = 0; i < L.a.size(); ++i) {
        rest[i] -= L.a[i];
        if (rest[i] < 0) return 0;
    }
    Int count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == L.lam.size()) {
            if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) count += 1;
            return;
        }
        for (auto& r : rest) {
            if (r >= L.lam[k]) {
                r -= L.lam[k];
                rec(k + 1);
                r += L.lam[k];
            }
        }
    };
    rec(0);
    return count;
}

// Coefficient of x^target in x^a s_λ(x).
Int k0_coefficient(const MPartition& L, const std::vector<int>& target) {
    std::vector<int> rest = target;
    rest.resize(std::max(rest.size(), L.a.size()), 0);
    for (std::size_t i = 0; i < L.a.size(); ++i) {
        rest[i] -= L.a[i];
        if (rest[i] < 0) return 0;
    }
    return kostka_number(L.lam, rest);
}

std::unique_ptr<Block> build_block(int m, int d) {
    auto B = std::make_unique<Block>();
    B->m = m;
    B->d = d;
    B->labels = enumerate_mpartitions(m, d);
    const std::size_t n = B->labels.size();
    for (std::size_t i = 0; i < n; ++i) B->index[B->labels[i]] = i;
    B->pow_to_m.assign(n, std::vector<QTScalar>(n));
    QTMatrix k0_to_m(n, std::vector<QTScalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto target = target_exponent(B->labels[j]);
            B->pow_to_m[i][j] = QTScalar(QTPoly(pow_coefficient(B->labels[i], target)));
            k0_to_m[i][j] = QTScalar(QTPoly(k0_coefficient(B->labels[i], target)));
        }
    B->m_to_pow = invert(B->pow_to_m);
    // k_Λ = H_a s_λ = Σ_c h_{a,c} x^c s_λ.
    B->k_to_m.assign(n, std::vector<QTScalar>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const MPartition& L = B->labels[i];
        const XPoly h = hall_littlewood(L.a);
        for (const auto& [e, c] : h.terms()) {
            const MPartition src(exponent_vec(e, m), L.lam);
            const std::size_t row = B->index.at(src);
            for (std::size_t j = 0; j < n; ++j)
                if (!k0_to_m[row][j].is_zero()) B->k_to_m[i][j] += c * k0_to_m[row][j];
        }
    }
    B->m_to_k = invert(B->k_to_m);
    B->D.assign(n, std::vector<QTScalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            B->D[i][j] = D_coeff(B->labels[i], B->labels[j]).to_scalar();
    B->Dinv = invert(B->D);
    return B;
}

struct MacMatrices {
    QTMatrix to_m;
    QTMatrix from_m;
};

const MacMatrices& mac_block(int m, int d, bool integral) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, bool>, std::unique_ptr<MacMatrices>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{m, d, integral}];
    if (!slot) {
        const Block& B = block(m, d);
        auto M = std::make_unique<MacMatrices>();
        const std::size_t n = B.labels.size();
        M->to_m.assign(n, std::vector<QTScalar>(n));
        for (std::size_t i = 0; i < n; ++i) {
            const XPoly f = integral ? integral_J(B.labels[i], m + d) : msym_P(B.labels[i], m + d);
            const BasisExpansion e = m_expansion(f, m);
            for (const auto& [L, c] : e.coeffs) M->to_m[i][B.index.at(L)] = c;
        }
        M->from_m = invert(M->to_m);
        slot = std::move(M);
    }
    return *slot;
}

bool k_family(Basis b) {
    return b == Basis::K || b == Basis::S || b == Basis::Sstar || b == Basis::HL;
}

std::vector<QTScalar> to_k_vec(Basis b, const std::vector<QTScalar>& v, const Block& B) {
    switch (b) {
        case Basis::K:
        case Basis::HL: return v;
        case Basis::Sstar: return vec_mat(v, B.D);
        case Basis::S: return vec_mat(v, transpose(B.Dinv));
        default: throw InternalError("not a k-family basis");
    }
}

std::vector<QTScalar> from_k_vec(Basis b, const std::vector<QTScalar>& u, const Block& B) {
    switch (b) {
        case Basis::K:
        case Basis::HL: return u;
        case Basis::Sstar: return vec_mat(u, B.Dinv);
        case Basis::S: return vec_mat(u, transpose(B.D));
        default: throw InternalError("not a k-family basis");
    }
}

std::vector<QTScalar> to_m_vec(Basis b, const std::vector<QTScalar>& v, const Block& B) {
    switch (b) {
        case Basis::M: return v;
        case Basis::Pow: return vec_mat(v, B.pow_to_m);
        case Basis::MacP: return vec_mat(v, mac_block(B.m, B.d, false).to_m);
        case Basis::MacJ: return vec_mat(v, mac_block(B.m, B.d, true).to_m);
        default: return vec_mat(to_k_vec(b, v, B), B.k_to_m);
    }
}

std::vector<QTScalar> from_m_vec(Basis b, const std::vector<QTScalar>& w, const Block& B) {
    switch (b) {
        case Basis::M: return w;
        case Basis::Pow: return vec_mat(w, B.m_to_pow);
        case Basis::MacP: return vec_mat(w, mac_block(B.m, B.d, false).from_m);
        case Basis::MacJ: return vec_mat(w, mac_block(B.m, B.d, true).from_m);
        default: return from_k_vec(b, vec_mat(w, B.m_to_k), B);
    }
}

std::map<int, std::vector<QTScalar>> by_degree(const BasisExpansion& e) {
    std::map<int, std::vector<QTScalar>> out;
    for (const auto& [L, c] : e.coeffs) {
        const Block& B = block(e.m, L.degree());
        auto& v = out[L.degree()];
        if (v.empty()) v.resize(B.labels.size());
        v[B.index.at(L)] = c;
    }
    return out;
}

}  // namespace

const Block& block(int m, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Block>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{m, d}];
    if (!slot) slot = build_block(m, d);
    return *slot;
}

XPoly monomial_msym(const MPartition& L, int N) {
    const int n = N - L.m();
    if (n < static_cast<int>(L.lam.size())) throw DomainError("N too small for " + L.str());
    std::vector<int> tail(L.lam.begin(), L.lam.end());
    tail.resize(n, 0);
    std::sort(tail.begin(), tail.end());
    XPoly f(N);
    do {
        std::vector<int> e = L.a;
        e.insert(e.end(), tail.begin(), tail.end());
        f.add_term(make_exponent(e), 1);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return f;
}

XPoly power_msym(const MPartition& L, int N) {
    if (N < L.m()) throw DomainError("N too small for " + L.str());
    std::vector<int> a = L.a;
    a.resize(N, 0);
    XPoly f = XPoly::monomial(N, a);
    for (int part : L.lam) {
        XPoly p(N);
        for (int j = 0; j < N; ++j) {
            std::vector<int> e(N, 0);
            e[j] = part;
            p.add_term(make_exponent(e), 1);
        }
        f = f * p;
    }
    return f;
}

XPoly k_basis(const MPartition& L, int N) {
    if (N < L.m()) throw DomainError("N too small for " + L.str());
    XPoly s(N);
    for (const auto& mu : partitions_of(size_of(L.lam))) {
        if (static_cast<int>(mu.size()) > N) continue;
        const Int k = kostka_number(L.lam, mu);
        if (k != 0) s += monomial_msym(MPartition({}, mu), N).scaled(QTScalar(QTPoly(k)));
    }
    const XPoly h = hall_littlewood(L.a);
    XPoly hh(N);
    for (const auto& [e, c] : h.terms()) hh.add_term(e, c);
    return hh * s;
}

XPoly to_monomials(const BasisExpansion& e, int N) {
    XPoly f(N);
    switch (e.basis) {
        case Basis::M:
            for (const auto& [L, c] : e.coeffs) f += monomial_msym(L, N).scaled(c);
            return f;
        case Basis::Pow:
            for (const auto& [L, c] : e.coeffs) f += power_msym(L, N).scaled(c);
            return f;
        case Basis::MacP:
            for (const auto& [L, c] : e.coeffs) f += msym_P(L, N).scaled(c);
            return f;
        case Basis::MacJ:
            for (const auto& [L, c] : e.coeffs) f += integral_J(L, N).scaled(c);
            return f;
        default: {
            const BasisExpansion k = convert(e, Basis::K);
            for (const auto& [L, c] : k.coeffs) f += k_basis(L, N).scaled(c);
            return f;
        }
    }
}

BasisExpansion m_expansion(const XPoly& f, int m) {
    const int N = f.nvars();
    if (!symmetric_from(f, m + 1)) throw DomainError("polynomial is not m-symmetric");
    if (N < m + f.degree()) throw DomainError("too few variables to read the m-expansion");
    BasisExpansion e;
    e.basis = Basis::M;
    e.m = m;
    for (const auto& [x, c] : f.terms()) {
        const std::vector<int> v = exponent_vec(x, N);
        std::vector<int> tail(v.begin() + m, v.end());
        if (!is_dominant(tail)) continue;
        e.add(MPartition(std::vector<int>(v.begin(), v.begin() + m), sorted_desc(tail)), c);
    }
    return e;
}

BasisExpansion from_monomials(const XPoly& f, int m, Basis target) {
    return convert(m_expansion(f, m), target);
}

BasisExpansion convert(const BasisExpansion& e, Basis target) {
    if (e.basis == target) return e;
    BasisExpansion out;
    out.basis = target;
    out.m = e.m;
    for (const auto& [d, v] : by_degree(e)) {
        const Block& B = block(e.m, d);
        std::vector<QTScalar> r;
        if (k_family(e.basis) && k_family(target)) {
            r = from_k_vec(target, to_k_vec(e.basis, v, B), B);
        } else {
            r = from_m_vec(target, to_m_vec(e.basis, v, B), B);
        }
        for (std::size_t i = 0; i < r.size(); ++i) out.add(B.labels[i], r[i]);
    }
    return out;
}

BasisExpansion schur(const MPartition& L) { return convert(single(Basis::S, L), Basis::K); }

BasisExpansion schur_star(const MPartition& L) { return convert(single(Basis::Sstar, L), Basis::K); }

QTScalar scalar_product(const BasisExpansion& f, const BasisExpansion& g) {
    if (f.m != g.m) throw DomainError("scalar product of different m");
    const BasisExpansion a = convert(f, Basis::K);
    const BasisExpansion b = convert(g, Basis::K);
    QTScalar s;
    for (const auto& [L, c] : a.coeffs) {
        auto it = b.coeffs.find(L);
        if (it != b.coeffs.end()) s += c * it->second;
    }
    return s;
}

BasisExpansion t_star(int i, const BasisExpansion& e) {
    if (i < 1 || i >= e.m) throw DomainError("T* index out of range");
    const BasisExpansion k = convert(e, Basis::K);
    BasisExpansion out;
    out.basis = Basis::K;
    out.m = e.m;
    const QTScalar t = QTScalar(QTPoly::t());
    for (const auto& [L, c] : k.coeffs) {
        MPartition S = L;
        std::swap(S.a[i - 1], S.a[i]);
        if (L.a[i - 1] > L.a[i]) {
            out.add(S, c * t);
        } else if (L.a[i - 1] < L.a[i]) {
            out.add(L, c * (t - QTScalar(1)));
            out.add(S, c);
        } else {
            out.add(L, c * t);
        }
    }
    return out;
}

BasisExpansion plethysm(const BasisExpansion& e, bool inverse) {
    const BasisExpansion p = convert(e, Basis::Pow);
    BasisExpansion out;
    out.basis = Basis::Pow;
    out.m = e.m;
    for (const auto& [L, c] : p.coeffs) {
        QTPoly f(1);
        for (int part : L.lam) f *= QTPoly(1) - QTPoly::t(part);
        out.add(L, inverse ? c.mul_poly(f) : c / QTScalar(f));
    }
    return convert(out, e.basis);
}

namespace {

std::string latex_monomial(int dq, int dt) {
    std::string s;
    if (dq == 1) s += "q";
    if (dq > 1) s += "q^{" + std::to_string(dq) + "}";
    if (dt == 1) s += "t";
    if (dt > 1) s += "t^{" + std::to_string(dt) + "}";
    return s;
}

// Wraps sums in parentheses so that they can be followed by a basis symbol.
std::string latex_coefficient(const QTScalar& c) {
    const std::string s = latex(c);
    const bool single = c.is_polynomial() && c.num().size() == 1;
    if (single) {
        if (s == "1") return "";
        if (s == "-1") return "-";
        return s;
    }
    if (!c.is_polynomial()) return s;
    return "\\left(" + s + "\\right)";
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += parts[i][0] == '-' ? " - " + parts[i].substr(1) : " + " + parts[i];
    return s;
}

std::string basis_symbol(Basis b) {
    switch (b) {
        case Basis::Sstar: return "s^*";
        default: return basis_name(b);
    }
}

}  // namespace

std::string latex(const QTPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::string> parts;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const std::string mono = latex_monomial(it->dq, it->dt);
        const Int mag = abs(it->c);
        std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + mono);
        parts.push_back(it->c < 0 ? "-" + body : body);
    }
    return join_terms(parts);
}

std::string latex(const QTScalar& c) {
    if (c.is_polynomial()) return latex(c.num());
    return "\\frac{" + latex(c.num()) + "}{" + latex(c.den()) + "}";
}

std::string latex_label(const MPartition& L) {
    std::string s = composition_str(L.a) + ";";
    s += L.lam.empty() ? "\\emptyset" : composition_str(L.lam);
    return s;
}

std::string latex(const BasisExpansion& e) {
    std::vector<std::string> parts;
    for (const auto& L : e.ordered_labels())
        parts.push_back(latex_coefficient(e.coeffs.at(L)) + " " + basis_symbol(e.basis) + "_{" + latex_label(L) + "}");
    for (auto& p : parts)
        if (p[0] == ' ') p.erase(0, 1);
    return join_terms(parts);
}

std::string latex(const XPoly& f) {
    std::vector<std::string> parts;
    for (const auto& [x, c] : f.terms()) {
        std::string mono;
        for (int i = 0; i < f.nvars(); ++i) {
            if (x[i] == 0) continue;
            mono += "x_{" + std::to_string(i + 1) + "}";
            if (x[i] > 1) mono += "^{" + std::to_string(x[i]) + "}";
        }
        std::string coef = latex_coefficient(c);
        if (mono.empty() && (coef.empty() || coef == "-")) coef += "1";
        parts.push_back(coef + mono);
    }
    return join_terms(parts);
}

}  // namespace msym
