// SPDX-License-Identifier: MIT
// Exhaustive identity and conjecture sweeps.
#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "msym/kostka.hpp"
#include "msym/macdonald.hpp"
#include "msym/tableaux.hpp"

namespace msym {

void Family::record(bool ok, const std::string& instance, const std::function<std::string()>& detail,
                    const std::string& repro) {
    ++instances;
    if (!ok) failures.push_back({instance, detail ? detail() : std::string(), repro});
}

void Family::merge(Family&& other) {
    instances += other.instances;
    skipped += other.skipped;
    for (auto& f : other.failures) failures.push_back(std::move(f));
}

bool VerifyReport::proved_ok() const {
    return std::none_of(families.begin(), families.end(),
                        [](const Family& f) { return !f.conjecture && !f.failures.empty(); });
}

long VerifyReport::conjecture_violations() const {
    long n = 0;
    for (const auto& f : families)
        if (f.conjecture) n += static_cast<long>(f.failures.size());
    return n;
}

namespace {

// Per-job collector; families appear in first-use order.
class Sink {
public:
    Family& fam(const std::string& name, bool conjecture = false) {
        for (auto& f : fams_)
            if (f.name == name) return f;
        fams_.push_back(Family{name, conjecture, 0, 0, {}});
        return fams_.back();
    }
    std::vector<Family>& families() { return fams_; }

private:
    std::vector<Family> fams_;
};

using Job = std::function<void(Sink&)>;

void merge_into(VerifyReport& r, std::vector<Family>&& fams) {
    for (auto& f : fams) {
        auto it = std::find_if(r.families.begin(), r.families.end(),
                               [&](const Family& g) { return g.name == f.name; });
        if (it == r.families.end()) {
            r.families.push_back(std::move(f));
        } else {
            it->merge(std::move(f));
        }
    }
}

// Runs the jobs on a small pool; the merge order is the job order, so the
// report does not depend on scheduling.
VerifyReport run_jobs(const std::vector<Job>& jobs, int threads) {
    std::vector<Sink> sinks(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                jobs[i](sinks[i]);
            } catch (const std::exception& e) {
                const std::string what = e.what();
                sinks[i].fam("internal-error").record(false, "job " + std::to_string(i), [&] { return what; });
            }
        }
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    VerifyReport r;
    for (auto& s : sinks) merge_into(r, std::move(s.families()));
    return r;
}

std::string lbl(const MPartition& L) { return L.str(); }
std::string repro_label(const std::string& cmd, const MPartition& L) { return "msym " + cmd + " '" + L.str() + "'"; }

const QTScalar& T() {
    static const QTScalar t(QTPoly::t());
    return t;
}

std::vector<MPartition> labels_in(const Bounds& b) {
    std::vector<MPartition> out;
    for (int m = 0; m <= b.m_max; ++m)
        for (int d = 0; d <= b.d_max; ++d)
            for (const auto& L : enumerate_mpartitions(m, d)) out.push_back(L);
    return out;
}

Partition remove_part(const Partition& lam, int part) {
    Partition r = lam;
    r.erase(std::find(r.begin(), r.end(), part));
    return r;
}

Partition add_part(const Partition& lam, int part) {
    Partition r = lam;
    r.push_back(part);
    return sorted_desc(r);
}

std::vector<int> distinct_parts(const Partition& lam) {
    std::vector<int> v = lam;
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

XPoly x_monomial(const Composition& alpha) { return XPoly::monomial(static_cast<int>(alpha.size()), alpha); }

// ---------------------------------------------------------------- hecke

void hecke_job(Sink& s, int N, int d) {
    for (const auto& alpha : compositions_of(d, N)) {
        const XPoly x = x_monomial(alpha);
        const std::string inst = "x^" + composition_str(alpha);
        std::vector<XPoly> Tx(N + 1);
        for (int i = 1; i < N; ++i) Tx[i] = hecke_T(i, x);
        for (int i = 1; i < N; ++i) {
            const XPoly& y = Tx[i];
            const XPoly quad = hecke_T(i, y) - y.scaled(T() - QTScalar(1)) - x.scaled(T());
            s.fam("hecke-quadratic").record(quad.is_zero(), inst + " i=" + std::to_string(i),
                                            [&] { return quad.str(); });
            s.fam("hecke-inverse").record(hecke_T_inverse(i, y) == x, inst + " i=" + std::to_string(i), nullptr);
            if (i + 1 < N) {
                const XPoly l = hecke_T(i, hecke_T(i + 1, y));
                const XPoly r = hecke_T(i + 1, hecke_T(i, Tx[i + 1]));
                s.fam("hecke-braid").record(l == r, inst + " i=" + std::to_string(i), nullptr);
            }
            for (int j = i + 2; j < N; ++j)
                s.fam("hecke-commute").record(hecke_T(i, Tx[j]) == hecke_T(j, y),
                                              inst + " i=" + std::to_string(i) + " j=" + std::to_string(j), nullptr);
        }
        std::vector<XPoly> Yx(N + 1);
        for (int i = 1; i <= N; ++i) Yx[i] = cherednik_Y(i, x);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                s.fam("cherednik-commute").record(cherednik_Y(i, Yx[j]) == cherednik_Y(j, Yx[i]),
                                                  inst + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                                                  nullptr);
        // T_i Y_i = Y_{i+1} T_i + (t-1) Y_i, T_i Y_{i+1} = Y_i T_i - (t-1) Y_i, T_i Y_j = Y_j T_i.
        for (int i = 1; i < N; ++i) {
            const XPoly tm1 = Yx[i].scaled(T() - QTScalar(1));
            const std::string ii = inst + " i=" + std::to_string(i);
            s.fam("hecke-cherednik").record(hecke_T(i, Yx[i]) == cherednik_Y(i + 1, Tx[i]) + tm1, ii + " j=i", nullptr);
            s.fam("hecke-cherednik").record(hecke_T(i, Yx[i + 1]) == cherednik_Y(i, Tx[i]) - tm1, ii + " j=i+1",
                                            nullptr);
            for (int j = 1; j <= N; ++j) {
                if (j == i || j == i + 1) continue;
                s.fam("hecke-cherednik").record(hecke_T(i, Yx[j]) == cherednik_Y(j, Tx[i]),
                                                ii + " j=" + std::to_string(j), nullptr);
            }
        }
    }
}

std::vector<Job> hecke_jobs(const Bounds& b) {
    std::vector<Job> jobs;
    for (int d = 0; d <= b.d_max; ++d)
        for (int m = 0; m <= b.m_max; ++m) {
            const int N = m + d;
            if (N < 2) continue;
            jobs.push_back([N, d](Sink& s) { hecke_job(s, N, d); });
        }
    return jobs;
}

// ---------------------------------------------------------------- macdonald

void p_job(Sink& s, const MPartition& L) {
    const int m = L.m();
    const int N = m + L.degree();
    if (N == 0) return;
    const std::string inst = lbl(L) + " N=" + std::to_string(N);
    const std::string rep = repro_label("P", L);
    for (const auto& c : verify_eigen(L, N)) {
        const bool is_d = c.name.rfind("D ", 0) == 0;
        s.fam(is_d ? "eigen-D" : "eigen-Y").record(c.pass, c.name, [&] { return c.detail; }, rep);
    }
    const XPoly P = msym_P(L, N);
    const BasisExpansion e = m_expansion(P, m);
    bool tri = e.coeff(L).is_one();
    for (const auto& [O, c] : e.coeffs)
        if (O != L && !dominance_leq(O, L)) tri = false;
    s.fam("unitriangular").record(tri, inst, [&] { return e.str(); }, rep);
    for (int i = 1; i < m; ++i)
        if (L.a[i - 1] == L.a[i])
            s.fam("symmetric-equal-entries").record(swap_vars(i, P) == P, inst + " i=" + std::to_string(i), nullptr,
                                                    rep);
    const int low = m + static_cast<int>(L.lam.size());
    for (int n = std::max(low, 1); n < N; ++n)
        s.fam("n-stability").record(drop_var(msym_P(L, n + 1), n + 1) == msym_P(L, n),
                                    lbl(L) + " N=" + std::to_string(n + 1) + "->" + std::to_string(n), nullptr, rep);
    if (!L.lam.empty() && low >= 1)
        s.fam("n-stability").record(drop_var(msym_P(L, low), low).is_zero(),
                                    lbl(L) + " N=" + std::to_string(low) + " below", nullptr, rep);
}

void e_job(Sink& s, const Composition& eta) {
    const int N = static_cast<int>(eta.size());
    const XPoly E = nonsym_E(eta);
    const std::string inst = "E[" + composition_str(eta) + "]";
    const std::string rep = "msym e '" + composition_str(eta) + "'";
    for (int i = 1; i <= N; ++i)
        s.fam("e-eigen").record(cherednik_Y(i, E) == E.scaled(eta_bar(eta, i)), inst + " i=" + std::to_string(i),
                                nullptr, rep);
    bool tri = E.coeff(eta).is_one();
    for (const auto& [x, c] : E.terms()) {
        const Composition nu = exponent_vec(x, N);
        if (nu != eta && !bruhat_less(nu, eta)) tri = false;
    }
    s.fam("e-bruhat").record(tri, inst, [&] { return E.str(); }, rep);
    s.fam("e-path-independence").record(nonsym_E_alt(eta) == E, inst, nullptr, rep);
    // E_η at x_i = 0 when η_i = 0 and every later entry is nonzero.
    for (int i = 1; i <= N && N >= 2; ++i) {
        if (eta[i - 1] != 0) continue;
        bool later = true;
        for (int j = i + 1; j <= N; ++j) later = later && eta[j - 1] != 0;
        if (!later) continue;
        Composition rest = eta;
        rest.erase(rest.begin() + (i - 1));
        s.fam("e-specialization").record(drop_var(E, i) == nonsym_E(rest), inst + " x" + std::to_string(i) + "=0",
                                         nullptr, rep);
        for (int j = i + 1; j <= N; ++j)
            s.fam("e-specialization").record(drop_var(E, j).is_zero(), inst + " x" + std::to_string(j) + "=0",
                                             nullptr, rep);
    }
    // S_{m+1,N} E_η = (1 - tA)/(t(1 - A)) S_{m+1,N} E_{s_i η} for m+1 < i < N, η_i > η_{i+1}.
    for (int m = 0; m + 3 <= N; ++m)
        for (int i = m + 2; i < N; ++i) {
            if (eta[i - 1] <= eta[i]) continue;
            Composition sw = eta;
            std::swap(sw[i - 1], sw[i]);
            const QTScalar A = eta_bar(eta, i) / eta_bar(eta, i + 1);
            const QTScalar k = (QTScalar(1) - T() * A) / (T() * (QTScalar(1) - A));
            s.fam("symmetrized-exchange").record(
                symmetrize(m + 1, E) == symmetrize(m + 1, nonsym_E(sw)).scaled(k),
                inst + " m=" + std::to_string(m) + " i=" + std::to_string(i), nullptr, rep);
        }
}

std::vector<Job> macdonald_jobs(const Bounds& b) {
    std::vector<Job> jobs;
    std::set<Composition> etas;
    for (int N = 1; N <= std::min(4, b.m_max + b.d_max); ++N)
        for (int d = 0; d <= b.d_max; ++d)
            for (const auto& eta : compositions_of(d, N)) etas.insert(eta);
    for (const auto& L : labels_in(b)) {
        const int N = L.m() + L.degree();
        if (N >= 1) etas.insert(eta_of(L, N));
        jobs.push_back([L](Sink& s) { p_job(s, L); });
    }
    for (const auto& eta : etas) jobs.push_back([eta](Sink& s) { e_job(s, eta); });
    return jobs;
}

// ---------------------------------------------------------------- bases

// The three-case recursion for D applied at the last ascent instead of the first.
TLaurent D_last_ascent(const MPartition& L, const MPartition& O) {
    int i = 0;
    for (int k = 1; k < L.m(); ++k)
        if (L.a[k - 1] < L.a[k]) i = k;
    if (i == 0) return D_dominant(L, O);
    MPartition Lt = L, Ot = O;
    std::swap(Lt.a[i - 1], Lt.a[i]);
    std::swap(Ot.a[i - 1], Ot.a[i]);
    if (O.a[i - 1] > O.a[i]) return TLaurent::t(-1) * D_last_ascent(Lt, Ot);
    if (O.a[i - 1] < O.a[i]) return D_last_ascent(Lt, Ot) + (TLaurent(1) - TLaurent::t(-1)) * D_last_ascent(Lt, O);
    return D_last_ascent(Lt, O);
}

TLaurent D_any(const MPartition& L, const MPartition& O) {
    bool dom = true;
    for (int k = 1; k < L.m(); ++k) dom = dom && L.a[k - 1] >= L.a[k];
    return dom ? D_dominant(L, O) : D_coeff(L, O);
}

bool horizontal_strip_within(const Partition& nu, const Partition& mu, int size, int cols) {
    if (mu.size() > nu.size()) return false;
    int total = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        const int mi = i < mu.size() ? mu[i] : 0;
        const int next = i + 1 < nu.size() ? nu[i + 1] : 0;
        if (mi > nu[i] || mi < next) return false;
        if (nu[i] > mi && nu[i] > cols) return false;
        total += nu[i] - mi;
    }
    return total == size;
}

void bases_job(Sink& s, int m, int d) {
    const Block& B = block(m, d);
    const std::size_t n = B.labels.size();
    const int N = m + d;
    const std::string where = "m=" + std::to_string(m) + " d=" + std::to_string(d);
    s.fam("transition-invertible").record(true, where, nullptr);
    if (N >= 1) {
        for (const auto& L : B.labels)
            for (Basis bs : {Basis::M, Basis::Pow, Basis::K, Basis::S, Basis::Sstar}) {
                const BasisExpansion e = single(bs, L);
                s.fam("monomial-round-trip")
                    .record(from_monomials(to_monomials(e, N), m, bs) == e, basis_name(bs) + "[" + lbl(L) + "]",
                            nullptr);
            }
    }
    std::vector<BasisExpansion> sk(n), sks(n);
    for (std::size_t i = 0; i < n; ++i) {
        sk[i] = schur(B.labels[i]);
        sks[i] = schur_star(B.labels[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const QTScalar v = scalar_product(sk[i], sks[j]);
            s.fam("schur-duality").record(v == QTScalar(i == j ? 1 : 0), lbl(B.labels[i]) + " x " + lbl(B.labels[j]),
                                          [&] { return v.str(); });
        }
    bool laurent = true;
    for (const auto& row : B.Dinv)
        for (const auto& x : row)
            if (!x.is_zero() && !x.den().is_monomial()) laurent = false;
    s.fam("observation-dinv-laurent", true).record(laurent, where, nullptr);
    // D itself is Laurent by construction; only the sign of its coefficients is open.
    for (const auto& L : B.labels)
        for (const auto& O : B.labels) {
            const TLaurent d = D_coeff(L, O);
            const bool in_nt = d.is_zero() || (d.nonnegative() && d.min_deg() >= 0);
            s.fam("observation-d-in-nt", true)
                .record(in_nt, "D[" + lbl(L) + ", " + lbl(O) + "]", [d] { return d.str(); });
        }

    for (const auto& L : B.labels) {
        const bool zero_a = std::all_of(L.a.begin(), L.a.end(), [](int x) { return x == 0; });
        if (zero_a) s.fam("schur-special").record(schur_star(L) == single(Basis::K, L), "s*[" + lbl(L) + "]", nullptr);
        if (L.lam.empty()) s.fam("schur-special").record(schur(L) == single(Basis::K, L), "s[" + lbl(L) + "]", nullptr);
    }

    for (int i = 1; i < m; ++i) {
        const std::string is = " i=" + std::to_string(i);
        for (const auto& L : B.labels) {
            MPartition Lt = L;
            std::swap(Lt.a[i - 1], Lt.a[i]);
            const int ai = L.a[i - 1], aj = L.a[i];
            // T_i on s_Λ through explicit polynomials.
            BasisExpansion want;
            want.basis = Basis::S;
            want.m = m;
            if (ai > aj) {
                want.add(Lt, QTScalar(1));
            } else if (ai < aj) {
                want.add(L, T() - QTScalar(1));
                want.add(Lt, T());
            } else {
                want.add(L, T());
            }
            const XPoly lhs = hecke_T(i, to_monomials(single(Basis::S, L), N));
            s.fam("hecke-on-schur").record(lhs == to_monomials(want, N), lbl(L) + is, nullptr);
            // T*_i on s*_Λ.
            BasisExpansion wstar;
            wstar.basis = Basis::Sstar;
            wstar.m = m;
            if (ai > aj) {
                wstar.add(Lt, T());
            } else if (ai < aj) {
                wstar.add(L, T() - QTScalar(1));
                wstar.add(Lt, QTScalar(1));
            } else {
                wstar.add(L, T());
            }
            s.fam("tstar-on-dual-schur").record(t_star(i, schur_star(L)) == convert(wstar, Basis::K),
                                                lbl(L) + is, nullptr);
            if (ai < aj) {
                const BasisExpansion r = t_star(i, schur_star(Lt));
                BasisExpansion scaled = r;
                for (auto& [O, c] : scaled.coeffs) c *= QTScalar::t_pow(-1);
                s.fam("dual-schur-recursion").record(scaled == schur_star(L), lbl(L) + is, nullptr);
            }
            // Quadratic relation for T*_i on k_Λ.
            const BasisExpansion k = single(Basis::K, L);
            const BasisExpansion tk = t_star(i, k);
            BasisExpansion quad = t_star(i, tk);
            for (const auto& [O, c] : tk.coeffs) quad.add(O, -(c * (T() - QTScalar(1))));
            quad.add(L, -T());
            s.fam("tstar-quadratic").record(quad.coeffs.empty(), lbl(L) + is, nullptr);
            if (i + 1 < m) {
                const BasisExpansion l = t_star(i, t_star(i + 1, tk));
                const BasisExpansion r = t_star(i + 1, t_star(i, t_star(i + 1, k)));
                s.fam("tstar-braid").record(l == r, lbl(L) + is, nullptr);
            }
        }
        // ⟨T_i k_Λ, k_Ω⟩ = ⟨k_Λ, T*_i k_Ω⟩ with T_i applied to polynomials.
        for (const auto& L : B.labels) {
            const BasisExpansion lhs = from_monomials(hecke_T(i, k_basis(L, N)), m, Basis::K);
            for (const auto& O : B.labels) {
                const QTScalar a = lhs.coeff(O);
                const QTScalar b = t_star(i, single(Basis::K, O)).coeff(L);
                s.fam("tstar-adjoint").record(a == b, lbl(L) + " x " + lbl(O) + is, nullptr);
            }
        }
    }

    // The D recursion at every ascent, with the dominant formula wherever the
    // swapped label is dominant, and first-ascent vs last-ascent agreement.
    for (const auto& L : B.labels) {
        for (int i = 1; i < m; ++i) {
            if (L.a[i - 1] >= L.a[i]) continue;
            MPartition Lt = L;
            std::swap(Lt.a[i - 1], Lt.a[i]);
            for (const auto& O : B.labels) {
                MPartition Ot = O;
                std::swap(Ot.a[i - 1], Ot.a[i]);
                TLaurent rhs;
                if (O.a[i - 1] > O.a[i]) {
                    rhs = TLaurent::t(-1) * D_any(Lt, Ot);
                } else if (O.a[i - 1] < O.a[i]) {
                    rhs = D_any(Lt, Ot) + (TLaurent(1) - TLaurent::t(-1)) * D_any(Lt, O);
                } else {
                    rhs = D_any(Lt, O);
                }
                const TLaurent lhs = D_coeff(L, O);
                s.fam("d-recursion").record(lhs == rhs, lbl(L) + " x " + lbl(O) + " i=" + std::to_string(i),
                                            [&] { return lhs.str() + " vs " + rhs.str(); });
            }
        }
        for (const auto& O : B.labels)
            s.fam("d-path-independence").record(D_coeff(L, O) == D_last_ascent(L, O), lbl(L) + " x " + lbl(O),
                                                nullptr);
    }

    if (m == 1) {
        for (const auto& K : B.labels) {
            BasisExpansion want;
            want.basis = Basis::S;
            want.m = 1;
            for (const auto& L : B.labels)
                if (horizontal_strip_within(add_part(L.lam, L.a[0]), K.lam, K.a[0], L.a[0])) want.add(L, QTScalar(1));
            s.fam("strip-rule-m1").record(convert(single(Basis::K, K), Basis::S) == want, "k[" + lbl(K) + "]",
                                          nullptr);
        }
    }
}

std::vector<Job> bases_jobs(const Bounds& b) {
    std::vector<Job> jobs;
    for (int m = 0; m <= b.m_max; ++m)
        for (int d = 0; d <= b.d_max; ++d) jobs.push_back([m, d](Sink& s) { bases_job(s, m, d); });
    return jobs;
}

// ---------------------------------------------------------------- restriction

BasisExpansion restrict_expansion(const BasisExpansion& e, int N, Basis target) {
    return from_monomials(restrict_poly(to_monomials(e, N), e.m - 1), e.m - 1, target);
}

BasisExpansion include_expansion(const BasisExpansion& e, int N, Basis target) {
    return from_monomials(to_monomials(e, N), e.m + 1, target);
}

void restriction_job(Sink& s, const MPartition& L, int m_max) {
    const int m = L.m();
    const int d = L.degree();
    const std::string rep = repro_label("schur", L);
    if (m >= 1) {
        const int N = m + d;
        const MPartition hat(Composition(L.a.begin(), L.a.end() - 1), add_part(L.lam, L.a.back()));
        s.fam("restrict-dual-schur")
            .record(restrict_expansion(single(Basis::Sstar, L), N, Basis::Sstar) == single(Basis::Sstar, hat), lbl(L),
                    nullptr, rep);
        const BasisExpansion rs = restrict_expansion(single(Basis::S, L), N, Basis::S);
        const BasisExpansion want =
            L.a.back() > 0 ? BasisExpansion{Basis::S, m - 1, {}}
                           : single(Basis::S, MPartition(Composition(L.a.begin(), L.a.end() - 1), L.lam));
        s.fam("restrict-schur").record(rs == want, lbl(L), [&] { return rs.str(); }, rep);
        // r(J_Λ) = q^{a_m} t^{#{i<m: a_i<a_m}} J_Λ̂ at finite N.
        int cnt = 0;
        for (int i = 0; i + 1 < m; ++i) cnt += L.a[i] < L.a.back() ? 1 : 0;
        const QTScalar f = QTScalar::q_pow(L.a.back()) * QTScalar::t_pow(cnt);
        s.fam("restrict-integral-form")
            .record(restrict_poly(integral_J(L, N), m - 1) == integral_J(hat, N - 1).scaled(f), lbl(L), nullptr,
                    repro_label("J", L));
    }
    if (m + 1 <= m_max) {
        const int N = m + 1 + d;
        BasisExpansion want;
        want.basis = Basis::S;
        want.m = m + 1;
        Composition a0 = L.a;
        a0.push_back(0);
        want.add(MPartition(a0, L.lam), QTScalar(1));
        for (int part : distinct_parts(L.lam)) {
            Composition a1 = L.a;
            a1.push_back(part);
            want.add(MPartition(a1, remove_part(L.lam, part)), QTScalar(1));
        }
        s.fam("include-schur").record(include_expansion(single(Basis::S, L), N, Basis::S) == want, lbl(L), nullptr,
                                      rep);
        s.fam("include-dual-schur")
            .record(include_expansion(single(Basis::Sstar, L), N, Basis::Sstar) ==
                        single(Basis::Sstar, MPartition(a0, L.lam)),
                    lbl(L), nullptr, rep);
        if (L.lam.empty() && N >= 1)
            s.fam("include-integral-form")
                .record(integral_J(L, N) == integral_J(MPartition(a0, {}), N), lbl(L), nullptr, repro_label("J", L));
        if (d <= 3) {
            // ⟨i(p_Λ), s*_Ω⟩_{m+1} = ⟨p_Λ, r(s*_Ω)⟩_m
            const BasisExpansion ip = include_expansion(single(Basis::Pow, L), N, Basis::K);
            for (const auto& O : enumerate_mpartitions(m + 1, d)) {
                const BasisExpansion g = single(Basis::Sstar, O);
                const QTScalar lhs = scalar_product(ip, g);
                const QTScalar rhs = scalar_product(single(Basis::Pow, L), restrict_expansion(g, N, Basis::K));
                s.fam("include-restrict-adjoint").record(lhs == rhs, lbl(L) + " x " + lbl(O), nullptr);
            }
        }
    }
    if (m >= 1 && m <= 2) {
        // Ψ_N J_Λ = t^{-#{2<=j<=m: a_j<=a_1}} J_{((a_2..a_m); λ ∪ (a_1+1))}
        const int N = std::max(m + d, m + 1);
        int cnt = 0;
        for (int j = 1; j < m; ++j) cnt += L.a[j] <= L.a[0] ? 1 : 0;
        const MPartition box(Composition(L.a.begin() + 1, L.a.end()), add_part(L.lam, L.a[0] + 1));
        s.fam("psi-integral-form")
            .record(psi_N(integral_J(L, N), m) == integral_J(box, N).scaled(QTScalar::t_pow(-cnt)),
                    lbl(L) + " N=" + std::to_string(N), nullptr, repro_label("J", L));
    }
}

std::vector<Job> restriction_jobs(const Bounds& b) {
    std::vector<Job> jobs;
    for (const auto& L : labels_in(b)) {
        const int m_max = b.m_max;
        jobs.push_back([L, m_max](Sink& s) { restriction_job(s, L, m_max); });
    }
    return jobs;
}

// ---------------------------------------------------------------- kostka

QTScalar K(const MPartition& O, const MPartition& L) { return QTScalar(kostka_table(L).at(O)); }

void fill_ssyt(const Partition& shape, const std::vector<int>& content, std::vector<std::vector<int>>& rows,
               std::size_t r, std::size_t c, std::vector<int>& left, const std::function<void()>& done) {
    if (r == shape.size()) {
        if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) done();
        return;
    }
    if (c == static_cast<std::size_t>(shape[r])) {
        fill_ssyt(shape, content, rows, r + 1, 0, left, done);
        return;
    }
    for (std::size_t v = 1; v <= content.size(); ++v) {
        if (left[v - 1] == 0) continue;
        const int val = static_cast<int>(v);
        if (c > 0 && rows[r][c - 1] > val) continue;
        if (r > 0 && rows[r - 1][c] >= val) continue;
        rows[r][c] = val;
        --left[v - 1];
        fill_ssyt(shape, content, rows, r, c + 1, left, done);
        ++left[v - 1];
    }
}

// Σ_T t^{charge(T)} over semistandard tableaux of shape lam and content mu.
TLaurent kostka_foulkes(const Partition& lam, const Partition& mu) {
    TLaurent sum;
    std::vector<std::vector<int>> rows;
    for (int len : lam) rows.emplace_back(len, 0);
    std::vector<int> left = mu;
    fill_ssyt(lam, mu, rows, 0, 0, left, [&] {
        Word w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
        sum += TLaurent::t(charge(w));
    });
    return sum;
}

void kostka_job(Sink& s, const MPartition& L, const Bounds& b) {
    const int m = L.m();
    const int d = L.degree();
    const std::string rep = repro_label("kostka", L);
    const KostkaTable& tab = kostka_table(L);
    s.fam("kostka-polynomial").record(true, lbl(L), nullptr, rep);
    if (d <= std::min(b.d_max, 3))
        s.fam("kostka-two-path").record(kostka_table_by_solve(L).entries == tab.entries, lbl(L), nullptr, rep);
    const auto Os = enumerate_mpartitions(m, d);
    if (m == 0) {
        for (const auto& O : Os) {
            const QTPoly k = tab.at(O);
            QTPoly at0;
            for (const auto& tm : k.terms())
                if (tm.dq == 0) at0 += QTPoly::monomial(tm.c, 0, tm.dt);
            const QTScalar kf = kostka_foulkes(O.lam, L.lam).to_scalar();
            s.fam("kostka-q0-charge").record(QTScalar(at0) == kf, lbl(O) + " x " + lbl(L), nullptr, rep);
        }
    }
    if (m + 1 <= b.m_max) {
        Composition a0 = L.a;
        a0.push_back(0);
        const MPartition L0(a0, L.lam);
        for (const auto& O : Os) {
            Composition b0 = O.a;
            b0.push_back(0);
            const MPartition O0(b0, O.lam);
            s.fam("kostka-rel-pad").record(K(O, L) == K(O0, L0), lbl(O) + " x " + lbl(L), nullptr, rep);
            for (int part : distinct_parts(L.lam)) {
                Composition a1 = L.a;
                a1.push_back(part);
                const MPartition L1(a1, remove_part(L.lam, part));
                int cnt = 0;
                for (int x : L.a) cnt += x < part ? 1 : 0;
                const QTScalar f = QTScalar::q_pow(part) * QTScalar::t_pow(cnt);
                s.fam("kostka-rel-move-row").record(K(O, L) * f == K(O0, L1),
                                                    lbl(O) + " x " + lbl(L) + " part=" + std::to_string(part),
                                                    nullptr, rep);
            }
            if (L.lam.empty())
                for (int part : distinct_parts(O.lam)) {
                    Composition b1 = O.a;
                    b1.push_back(part);
                    const MPartition O1(b1, remove_part(O.lam, part));
                    s.fam("kostka-rel-move-column").record(K(O, L) == K(O1, L0),
                                                           lbl(O) + " x " + lbl(L) + " part=" + std::to_string(part),
                                                           nullptr, rep);
                }
        }
    }
    for (int i = 1; i < m; ++i) {
        const std::string is = " i=" + std::to_string(i);
        MPartition Lt = L;
        std::swap(Lt.a[i - 1], Lt.a[i]);
        for (const auto& O : Os) {
            MPartition Ot = O;
            std::swap(Ot.a[i - 1], Ot.a[i]);
            if (L.a[i - 1] == L.a[i])
                s.fam("kostka-rel-swap-bottom").record(K(O, L) == K(Ot, L), lbl(O) + " x " + lbl(L) + is, nullptr,
                                                       rep);
            if (O.a[i - 1] == O.a[i] && L.a[i - 1] > L.a[i])
                s.fam("kostka-rel-swap-top").record(K(O, L) * T() == K(O, Lt), lbl(O) + " x " + lbl(L) + is,
                                                    nullptr, rep);
        }
    }
    if (m == 0 && b.m_max >= 1) {
        // K_μλ = Σ_{distinct μ_i} K_{(μ_i-1; μ\μ_i),(λ_j-1; λ\λ_j)}
        for (int part : distinct_parts(L.lam)) {
            const MPartition Lj({part - 1}, remove_part(L.lam, part));
            for (const auto& O : Os) {
                QTScalar sum;
                for (int mu : distinct_parts(O.lam)) sum += K(MPartition({mu - 1}, remove_part(O.lam, mu)), Lj);
                s.fam("kostka-m1-decomposition")
                    .record(sum == K(O, L), lbl(O) + " x " + lbl(L) + " part=" + std::to_string(part),
                            [&] { return sum.str() + " vs " + K(O, L).str(); }, rep);
            }
        }
    }
}

std::vector<Job> kostka_jobs(const Bounds& b) {
    std::vector<Job> jobs;
    for (const auto& L : labels_in(b)) jobs.push_back([L, b](Sink& s) { kostka_job(s, L, b); });
    return jobs;
}

// ---------------------------------------------------------------- conjectures

std::string with_value(const QTScalar& x) { return "value " + x.str(); }

void conjecture_job(Sink& s, const MPartition& L, const Bounds& b) {
    const int m = L.m();
    const int d = L.degree();
    const std::string rep = repro_label("kostka", L);
    const auto Os = enumerate_mpartitions(m, d);
    const KostkaTable& tab = kostka_table(L);
    for (const auto& O : Os) {
        const QTScalar k(tab.at(O));
        const std::string inst = lbl(O) + " x " + lbl(L);
        s.fam("positivity", true).record(in_nat_qt(k), inst, [&] { return with_value(k); }, rep);
        std::vector<int> shape = O.a;
        shape.insert(shape.end(), O.lam.begin(), O.lam.end());
        const Rat at1 = k.evaluate(Rat(1), Rat(1));
        const Int syt = count_syt(sorted_desc(shape));
        s.fam("syt-count", true).record(at1 == Rat(syt), inst,
                                        [&] { return "K(1,1) = " + at1.get_str() + ", #SYT = " + syt.get_str(); },
                                        rep);
    }
    if (m + 1 <= b.m_max && d >= 1) {
        for (int part : distinct_parts(L.lam)) {
            Composition a1{part - 1};
            a1.insert(a1.end(), L.a.begin(), L.a.end());
            const MPartition L1(a1, remove_part(L.lam, part));
            int cl = 0;
            for (int x : L.a) cl += part <= x ? 1 : 0;
            for (const auto& O : Os) {
                QTScalar x = K(O, L) * QTScalar::t_pow(cl);
                for (int mu : distinct_parts(O.lam)) {
                    Composition b1{mu - 1};
                    b1.insert(b1.end(), O.a.begin(), O.a.end());
                    int cm = 0;
                    for (int y : O.a) cm += mu <= y ? 1 : 0;
                    x -= K(MPartition(b1, remove_part(O.lam, mu)), L1) * QTScalar::t_pow(cm);
                }
                s.fam("row-removal", true).record(in_nat_qt(x), lbl(O) + " x " + lbl(L) + " part=" + std::to_string(part),
                                                  [&] { return with_value(x); }, rep);
            }
        }
    }
    const CircleDiagram dg = diagram_of(L);
    for (int i = 1; i < m; ++i) {
        const std::string is = " i=" + std::to_string(i);
        const QTScalar A = QTScalar::q_pow(L.a[i - 1] - L.a[i]) *
                           QTScalar::t_pow(dg.row_of_circle(i + 1) - dg.row_of_circle(i));
        const QTScalar B = A * QTScalar::t_pow(-1);
        MPartition Lt = L;
        std::swap(Lt.a[i - 1], Lt.a[i]);
        for (const auto& O : Os) {
            if (O.a[i - 1] <= O.a[i]) continue;
            MPartition Ot = O;
            std::swap(Ot.a[i - 1], Ot.a[i]);
            const std::string inst = lbl(O) + " x " + lbl(L) + is;
            if (B.is_one()) {
                ++s.fam("butler-bottom", true).skipped;
            } else {
                const QTScalar k = K(O, L), kt = K(Ot, L);
                const QTScalar x1 = (B * k - kt) / (B - QTScalar(1));
                const QTScalar x2 = (k - kt) / (QTScalar(1) - B);
                s.fam("butler-bottom", true).record(in_nat_qt(x1) && in_nat_qt(x2), inst,
                                                    [&] { return with_value(x1) + "; " + with_value(x2); }, rep);
            }
            if (L.a[i - 1] > L.a[i]) {
                const QTScalar k = K(O, L), kt = K(Ot, Lt);
                const QTScalar x1 = (T() * k - kt) / (T() - QTScalar(1));
                const QTScalar x2 = (k - kt) / (QTScalar(1) - T());
                s.fam("butler-both-I", true).record(in_nat_qt(x1) && in_nat_qt(x2), inst,
                                                    [&] { return with_value(x1) + "; " + with_value(x2); }, rep);
            }
        }
        if (L.a[i - 1] > L.a[i]) {
            for (const auto& O : Os) {
                if (O.a[i - 1] >= O.a[i]) continue;
                MPartition Ot = O;
                std::swap(Ot.a[i - 1], Ot.a[i]);
                const QTScalar k = K(O, L), kt = K(Ot, Lt);
                const QTScalar x1 = (T() * T() * k - kt) / (T() - QTScalar(1));
                const QTScalar x2 = (T() * k - kt) / (QTScalar(1) - T());
                s.fam("butler-both-II", true).record(in_nat_qt(x1) && in_nat_qt(x2), lbl(O) + " x " + lbl(L) + is,
                                                     [&] { return with_value(x1) + "; " + with_value(x2); }, rep);
            }
        }
    }
}

std::vector<Job> conjecture_jobs(const Bounds& b) {
    std::vector<Job> jobs;
    for (const auto& L : labels_in(b)) jobs.push_back([L, b](Sink& s) { conjecture_job(s, L, b); });
    return jobs;
}

// Tables are shared by the kostka and conjecture sweeps; fill them first so
// the heavy work is spread over the pool.
void warm_tables(const Bounds& b, int threads) {
    std::vector<Job> jobs;
    for (const auto& L : labels_in(b)) jobs.push_back([L](Sink&) { kostka_table(L); });
    run_jobs(jobs, threads);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"hecke", "macdonald", "bases", "restriction", "kostka", "conjectures"};
    return names;
}

VerifyReport verify_kostka_relations(const Bounds& b, int threads) {
    warm_tables(b, threads);
    return run_jobs(kostka_jobs(b), threads);
}

VerifyReport check_conjectures(const Bounds& b, int threads) {
    warm_tables(b, threads);
    return run_jobs(conjecture_jobs(b), threads);
}

VerifyReport run_suite(const std::string& name, const Bounds& b, int threads) {
    if (name == "hecke") return run_jobs(hecke_jobs(b), threads);
    if (name == "macdonald") return run_jobs(macdonald_jobs(b), threads);
    if (name == "bases") return run_jobs(bases_jobs(b), threads);
    if (name == "restriction") return run_jobs(restriction_jobs(b), threads);
    if (name == "kostka") return verify_kostka_relations(b, threads);
    if (name == "conjectures") return check_conjectures(b, threads);
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace msym
