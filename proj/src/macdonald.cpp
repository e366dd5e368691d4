// SPDX-License-Identifier: MIT
#include "msym/macdonald.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace msym {

namespace {

template <class Key>
class Memo {
public:
    bool get(const Key& k, XPoly& out) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void put(const Key& k, const XPoly& v) {
        std::unique_lock lock(mu_);
        map_.try_emplace(k, v);
    }

private:
    mutable std::shared_mutex mu_;
    std::map<Key, XPoly> map_;
};

Memo<Composition>& e_memo() {
    static Memo<Composition> m;
    return m;
}

Memo<std::pair<MPartition, int>>& p_memo() {
    static Memo<std::pair<MPartition, int>> m;
    return m;
}

// E_η from E_{η'} where η' = s_j η has η'_j < η'_{j+1}:
// T_j E_{η'} = c E_{η'} + t E_η with c = (t-1)/(1 - δ^{-1}), δ = η̄'_j/η̄'_{j+1}.
XPoly exchange_up(int j, const Composition& eta_prime, const XPoly& e_prime) {
    const QTScalar delta = eta_bar(eta_prime, j) / eta_bar(eta_prime, j + 1);
    const QTScalar t = QTScalar(QTPoly::t());
    const QTScalar c = (t - QTScalar(1)) / (QTScalar(1) - delta.inverse());
    return (hecke_T(j, e_prime) - e_prime.scaled(c)).scaled(QTScalar::t_pow(-1));
}

// E_η = t^{N - r_{η̂}(1)} Φ_q E_{η̂} with η̂ = (η_N - 1, η_1, ..., η_{N-1}).
Composition phi_predecessor(const Composition& eta) {
    Composition hat;
    hat.push_back(eta.back() - 1);
    hat.insert(hat.end(), eta.begin(), eta.end() - 1);
    return hat;
}

XPoly phi_step(const Composition& hat, const XPoly& e_hat) {
    const int n = static_cast<int>(hat.size());
    const int r = diagram_of(hat).row_of_circle(1);
    return phi_q(e_hat).scaled(QTScalar::t_pow(n - r));
}

bool all_zero(const Composition& eta) {
    return std::all_of(eta.begin(), eta.end(), [](int x) { return x == 0; });
}

}  // namespace

XPoly nonsym_E(const Composition& eta) {
    const int n = static_cast<int>(eta.size());
    if (all_zero(eta)) return XPoly::constant(n, 1);
    XPoly cached;
    if (e_memo().get(eta, cached)) return cached;
    XPoly result;
    if (eta.back() > 0) {
        const Composition hat = phi_predecessor(eta);
        result = phi_step(hat, nonsym_E(hat));
    } else {
        int j = n - 1;
        while (eta[j - 1] == 0) --j;
        Composition prime = eta;
        std::swap(prime[j - 1], prime[j]);
        result = exchange_up(j, prime, nonsym_E(prime));
    }
    e_memo().put(eta, result);
    return result;
}

XPoly nonsym_E_alt(const Composition& eta) {
    const int n = static_cast<int>(eta.size());
    if (all_zero(eta)) return XPoly::constant(n, 1);
    for (int i = 1; i < n; ++i) {
        if (eta[i - 1] > eta[i]) {
            Composition prime = eta;
            std::swap(prime[i - 1], prime[i]);
            return exchange_up(i, prime, nonsym_E_alt(prime));
        }
    }
    const Composition hat = phi_predecessor(eta);
    return phi_step(hat, nonsym_E_alt(hat));
}

Composition eta_of(const MPartition& L, int N) {
    const int n = N - L.m() - static_cast<int>(L.lam.size());
    if (n < 0) throw DomainError("N too small for " + L.str());
    Composition eta = L.a;
    eta.insert(eta.end(), n, 0);
    eta.insert(eta.end(), L.lam.rbegin(), L.lam.rend());
    return eta;
}

std::vector<int> leading_exponent(const MPartition& L, int N) {
    if (N < L.m() + static_cast<int>(L.lam.size())) throw DomainError("N too small for " + L.str());
    std::vector<int> e = L.a;
    e.insert(e.end(), L.lam.begin(), L.lam.end());
    e.resize(N, 0);
    return e;
}

XPoly msym_P(const MPartition& L, int N) {
    const auto key = std::make_pair(L, N);
    XPoly cached;
    if (p_memo().get(key, cached)) return cached;
    const XPoly e = nonsym_E(eta_of(L, N));
    const QTScalar u = u_norm(L, N).to_scalar();
    XPoly p = symmetrize(L.m(), e).scaled(u.inverse());
    p_memo().put(key, p);
    return p;
}

XPoly integral_J(const MPartition& L, int N) {
    return msym_P(L, N).scaled(QTScalar(c_hook(L)));
}

XPoly hall_littlewood(const Composition& a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return XPoly::constant(0, 1);
    for (int i = 1; i < m; ++i) {
        if (a[i - 1] < a[i]) {
            Composition s = a;
            std::swap(s[i - 1], s[i]);
            return hecke_T(i, hall_littlewood(s));
        }
    }
    return XPoly::monomial(m, a);
}

std::vector<CheckResult> verify_eigen(const MPartition& L, int N) {
    std::vector<CheckResult> out;
    const XPoly p = msym_P(L, N);
    for (int i = 1; i <= L.m(); ++i) {
        const QTScalar ev = eps_i(L, i);
        const bool ok = cherednik_Y(i, p) == p.scaled(ev);
        out.push_back({"Y_" + std::to_string(i) + " P[" + L.str() + "] N=" + std::to_string(N), ok,
                       "eigenvalue " + ev.str()});
    }
    const int lstar = L.m() + static_cast<int>(L.lam.size());
    const QTScalar ev = eps_D(L);
    const bool ok = eigen_D(p, L.m(), lstar) == p.scaled(ev);
    out.push_back({"D P[" + L.str() + "] N=" + std::to_string(N), ok, "eigenvalue " + ev.str()});
    return out;
}

}  // namespace msym
