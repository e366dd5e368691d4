// SPDX-License-Identifier: MIT
#include "msym/kostka.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "msym/macdonald.hpp"

namespace msym {

QTPoly KostkaTable::at(const MPartition& O) const {
    auto it = entries.find(O);
    return it == entries.end() ? QTPoly() : it->second;
}

std::vector<MPartition> KostkaTable::ordered_labels() const {
    std::vector<MPartition> v;
    for (const auto& [O, k] : entries) v.push_back(O);
    std::sort(v.begin(), v.end(), canonical_before);
    return v;
}

namespace {

QTPoly as_poly(const QTScalar& c, const MPartition& L, const MPartition& O) {
    if (!c.is_polynomial())
        throw InternalError("non-polynomial coefficient K[" + O.str() + ", " + L.str() + "] = " + c.str());
    return c.num();
}

// ℘(J_Λ) as an m-expansion; N = m + |Λ| is enough to see every term.
BasisExpansion pleth_J(const MPartition& L) {
    const int m = L.m();
    return plethysm(m_expansion(integral_J(L, m + L.degree()), m));
}

// Coefficients of ℘(J_Λ) in the k basis, indexed like block(m, d).labels.
std::vector<QTScalar> pleth_J_in_k(const MPartition& L) {
    const Block& B = block(L.m(), L.degree());
    const BasisExpansion k = convert(pleth_J(L), Basis::K);
    std::vector<QTScalar> c(B.labels.size());
    for (const auto& [O, v] : k.coeffs) c[B.index.at(O)] = v;
    return c;
}

// K_ΓΛ = Σ_Ω D_ΓΩ c_Ω for the rows Γ accepted by keep.
template <class Keep>
KostkaTable kostka_rows(const MPartition& L, Keep keep) {
    KostkaTable tab;
    tab.source = L;
    if (L.degree() == 0) {
        tab.entries[L] = QTPoly(1);
        return tab;
    }
    const Block& B = block(L.m(), L.degree());
    const std::vector<QTScalar> c = pleth_J_in_k(L);
    for (std::size_t g = 0; g < B.labels.size(); ++g) {
        if (!keep(B.labels[g])) continue;
        QTScalar k;
        for (std::size_t o = 0; o < c.size(); ++o)
            if (!c[o].is_zero() && !B.D[g][o].is_zero()) k += B.D[g][o] * c[o];
        const QTPoly p = as_poly(k, L, B.labels[g]);
        if (!p.is_zero()) tab.entries[B.labels[g]] = p;
    }
    return tab;
}

}  // namespace

const KostkaTable& kostka_table(const MPartition& L) {
    static std::mutex mu;
    static std::map<MPartition, std::unique_ptr<KostkaTable>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(L);
        if (it != cache.end()) return *it->second;
    }
    auto tab = std::make_unique<KostkaTable>(kostka_rows(L, [](const MPartition&) { return true; }));
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.try_emplace(L, std::move(tab));
    return *it->second;
}

KostkaTable kostka_table_by_solve(const MPartition& L) {
    KostkaTable tab;
    tab.source = L;
    const int m = L.m();
    const int d = L.degree();
    if (d == 0) {
        tab.entries[L] = QTPoly(1);
        return tab;
    }
    const Block& B = block(m, d);
    const std::size_t n = B.labels.size();
    QTMatrix s_to_m(n, std::vector<QTScalar>(n));
    for (std::size_t g = 0; g < n; ++g) {
        const XPoly f = to_monomials(single(Basis::S, B.labels[g]), m + d);
        for (const auto& [O, c] : m_expansion(f, m).coeffs) s_to_m[g][B.index.at(O)] = c;
    }
    std::vector<QTScalar> w(n);
    for (const auto& [O, c] : pleth_J(L).coeffs) w[B.index.at(O)] = c;
    const std::vector<QTScalar> v = vec_mat(w, invert(s_to_m));
    for (std::size_t g = 0; g < n; ++g) {
        const QTPoly p = as_poly(v[g], L, B.labels[g]);
        if (!p.is_zero()) tab.entries[B.labels[g]] = p;
    }
    return tab;
}

QTPoly kostka_composition(const Composition& omega, const Composition& eta) {
    if (size_of(omega) != size_of(eta))
        throw DomainError("degree mismatch: |" + composition_str(omega) + "| != |" + composition_str(eta) + "|");
    const std::size_t l = eta.size();
    Composition a(omega.begin(), omega.begin() + std::min(l, omega.size()));
    a.resize(l, 0);
    std::vector<int> tail;
    if (omega.size() > l) tail.assign(omega.begin() + l, omega.end());
    return kostka_table(MPartition(eta, {})).at(MPartition(a, sorted_desc(tail)));
}

std::map<Composition, QTPoly> expand_mod_Lm(const Composition& eta, int m) {
    if (m < static_cast<int>(eta.size()))
        throw DomainError("m = " + std::to_string(m) + " is smaller than the length of " + composition_str(eta));
    Composition a = eta;
    a.resize(m, 0);
    const KostkaTable tab = kostka_rows(MPartition(a, {}), [](const MPartition& G) { return G.lam.empty(); });
    std::map<Composition, QTPoly> out;
    for (const auto& [G, k] : tab.entries) out.emplace(G.a, k);
    return out;
}

bool in_nat_qt(const QTScalar& x) {
    if (!x.is_polynomial()) return false;
    const QTPoly& p = x.num();
    if (p.is_zero()) return true;
    return p.nonnegative() && p.min_q() >= 0 && p.min_t() >= 0;
}

}  // namespace msym
