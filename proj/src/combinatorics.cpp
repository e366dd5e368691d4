// SPDX-License-Identifier: MIT
#include "msym/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace msym {

int size_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

Partition sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int n = 0;
        for (int x : p)
            if (x >= j) ++n;
        c.push_back(n);
    }
    return c;
}

bool is_dominant(const Composition& c) {
    return std::is_sorted(c.begin(), c.end(), std::greater<>());
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (size_of(a) != size_of(b)) return false;
    int sa = 0, sb = 0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n, int len) {
    std::vector<Composition> out;
    if (len == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    Composition cur(len, 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == len - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, n);
    return out;
}

Int count_syt(const Partition& shape) {
    const Partition conj = conjugate(shape);
    Int num = 1, den = 1;
    int n = 0;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            ++n;
            num *= n;
            den *= (shape[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
        }
    return num / den;
}

Int kostka_number(const Partition& lam, const std::vector<int>& mu) {
    if (size_of(lam) != size_of(mu)) return 0;
    // Fill letters 1, 2, ... successively as horizontal strips.
    std::vector<int> content;
    for (int x : mu)
        if (x > 0) content.push_back(x);
    Int total = 0;
    Partition cur;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == content.size()) {
            if (cur == lam) total += 1;
            return;
        }
        // Add a horizontal strip of size content[k] to cur inside lam.
        const std::size_t rows = lam.size();
        std::vector<int> base(rows, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) base[i] = cur[i];
        std::vector<int> add(rows, 0);
        std::function<void(std::size_t, int)> strip = [&](std::size_t i, int rest) {
            if (i == rows) {
                if (rest != 0) return;
                Partition saved = cur;
                Partition next;
                for (std::size_t r = 0; r < rows; ++r)
                    if (base[r] + add[r] > 0) next.push_back(base[r] + add[r]);
                cur = next;
                rec(k + 1);
                cur = saved;
                return;
            }
            // Row i may grow up to the previous row's old length and lam_i.
            int cap = lam[i] - base[i];
            if (i > 0) cap = std::min(cap, base[i - 1] - base[i]);
            cap = std::min(cap, rest);
            for (int v = 0; v <= cap; ++v) {
                add[i] = v;
                strip(i + 1, rest - v);
            }
            add[i] = 0;
        };
        strip(0, content[k]);
    };
    rec(0);
    return total;
}

std::string composition_str(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s;
}

Composition parse_composition(const std::string& text) {
    Composition c;
    if (text.empty()) return c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() ||
            !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
            tok.size() > 4)
            throw DomainError("bad part '" + tok + "' in '" + text + "'");
        c.push_back(std::stoi(tok));
    }
    if (!text.empty() && text.back() == ',') throw DomainError("bad part '' in '" + text + "'");
    return c;
}

int inv_count(const Composition& b) {
    int n = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (b[i] < b[j]) ++n;
    return n;
}

MPartition::MPartition(Composition a_, Partition lam_) : a(std::move(a_)), lam(std::move(lam_)) {
    for (int x : a)
        if (x < 0) throw DomainError("negative entry in m-partition");
    if (!is_dominant(lam)) throw DomainError("symmetric part is not a partition");
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    for (int x : lam)
        if (x < 0) throw DomainError("negative entry in m-partition");
}

std::string MPartition::str() const { return composition_str(a) + "|" + composition_str(lam); }

MPartition MPartition::parse(const std::string& text) {
    const auto bar = text.find('|');
    if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
        throw DomainError("expected one '|' in '" + text + "'");
    Composition a = parse_composition(text.substr(0, bar));
    Composition l = parse_composition(text.substr(bar + 1));
    if (!is_dominant(l)) throw DomainError("symmetric part not weakly decreasing in '" + text + "'");
    return MPartition(std::move(a), sorted_desc(l));
}

Partition lambda_upper(const MPartition& L, int i) {
    if (i < 0 || i > L.m()) throw DomainError("lambda_upper index out of range");
    std::vector<int> v = L.lam;
    for (int k = 0; k < L.m(); ++k) v.push_back(L.a[k] + (k < i ? 1 : 0));
    return sorted_desc(v);
}

bool dominance_leq(const MPartition& O, const MPartition& L) {
    if (O.m() != L.m() || O.degree() != L.degree())
        throw DomainError("dominance needs equal m and degree");
    for (int i = 0; i <= L.m(); ++i)
        if (!dominance_leq(lambda_upper(O, i), lambda_upper(L, i))) return false;
    return true;
}

bool canonical_before(const MPartition& x, const MPartition& y) {
    for (int i = 0; i <= std::min(x.m(), y.m()); ++i) {
        Partition px = lambda_upper(x, i);
        Partition py = lambda_upper(y, i);
        if (px != py) return px > py;
    }
    return false;
}

std::vector<MPartition> enumerate_mpartitions(int m, int d) {
    std::vector<MPartition> out;
    for (int k = 0; k <= d; ++k)
        for (const auto& a : compositions_of(k, m))
            for (const auto& lam : partitions_of(d - k)) out.emplace_back(a, lam);
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

int CircleDiagram::row_of_circle(int label) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].circle == label) return static_cast<int>(r) + 1;
    throw DomainError("no circle with label " + std::to_string(label));
}

std::string CircleDiagram::str() const {
    std::string s;
    for (const auto& row : rows) {
        s += std::string(static_cast<std::size_t>(row.len), '#');
        if (row.circle) s += "(" + std::to_string(row.circle) + ")";
        s += "\n";
    }
    return s;
}

namespace {

void sort_rows(std::vector<DiagramRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const DiagramRow& x, const DiagramRow& y) {
        if (x.len != y.len) return x.len > y.len;
        if ((x.circle != 0) != (y.circle != 0)) return x.circle != 0;
        return x.circle < y.circle;
    });
}

}  // namespace

CircleDiagram diagram_of(const Composition& eta) {
    CircleDiagram d;
    for (std::size_t i = 0; i < eta.size(); ++i)
        d.rows.push_back({eta[i], static_cast<int>(i) + 1});
    sort_rows(d.rows);
    return d;
}

CircleDiagram diagram_of(const MPartition& L) {
    CircleDiagram d;
    for (int i = 0; i < L.m(); ++i) d.rows.push_back({L.a[i], i + 1});
    for (int x : L.lam) d.rows.push_back({x, 0});
    sort_rows(d.rows);
    return d;
}

QTScalar eta_bar(const Composition& eta, int i) {
    const int r = diagram_of(eta).row_of_circle(i);
    return QTScalar::q_pow(eta[i - 1]) * QTScalar::t_pow(1 - r);
}

QTScalar eps_i(const MPartition& L, int i) {
    const int r = diagram_of(L).row_of_circle(i);
    return QTScalar::q_pow(L.a[i - 1]) * QTScalar::t_pow(1 - r);
}

QTScalar eps_D(const MPartition& L) {
    const CircleDiagram d = diagram_of(L);
    QTScalar s;
    for (std::size_t r = 0; r < d.rows.size(); ++r)
        if (d.rows[r].circle == 0)
            s += QTScalar::q_pow(d.rows[r].len) * QTScalar::t_pow(-static_cast<int>(r));
    return s;
}

std::pair<int, int> arm_leg(const MPartition& L, int row, int col) {
    const CircleDiagram d = diagram_of(L);
    if (row < 1 || row > static_cast<int>(d.rows.size()) || col < 1 ||
        col > d.rows[row - 1].len)
        throw DomainError("cell outside the diagram");
    const DiagramRow& R = d.rows[row - 1];
    int arm = R.len - col + (R.circle ? 1 : 0);
    int leg = 0;
    for (std::size_t r = row; r < d.rows.size(); ++r) {
        const DiagramRow& B = d.rows[r];
        if (B.len >= col) ++leg;
        if (R.circle && B.circle && B.circle < R.circle && B.len == col - 1) ++leg;
    }
    return {arm, leg};
}

QTPoly c_hook(const MPartition& L) {
    const CircleDiagram d = diagram_of(L);
    QTPoly c(1);
    for (std::size_t r = 0; r < d.rows.size(); ++r)
        for (int col = 1; col <= d.rows[r].len; ++col) {
            auto [arm, leg] = arm_leg(L, static_cast<int>(r) + 1, col);
            c *= QTPoly(1) - QTPoly::monomial(1, arm, leg + 1);
        }
    return c;
}

namespace {

// [k]_{1/t}! = prod_{j=1}^{k} (1 + t^{-1} + ... + t^{-(j-1)}).
TLaurent bracket_factorial_inv_t(int k) {
    TLaurent r(1);
    for (int j = 1; j <= k; ++j) {
        TLaurent f;
        for (int e = 0; e < j; ++e) f += TLaurent::t(-e);
        r = r * f;
    }
    return r;
}

}  // namespace

TLaurent u_norm(const MPartition& L, int N) {
    const int n = N - L.m() - static_cast<int>(L.lam.size());
    if (n < 0) throw DomainError("N too small for " + L.str());
    TLaurent u = bracket_factorial_inv_t(n);
    for (std::size_t i = 0; i < L.lam.size();) {
        std::size_t j = i;
        while (j < L.lam.size() && L.lam[j] == L.lam[i]) ++j;
        u = u * bracket_factorial_inv_t(static_cast<int>(j - i));
        i = j;
    }
    const int k = N - L.m();
    return u * TLaurent::t(k * (k - 1) / 2);
}

bool bruhat_leq_same_sort(const Composition& nu, const Composition& eta) {
    if (nu.size() != eta.size()) return false;
    if (sorted_desc(nu) != sorted_desc(eta)) return false;
    int hmax = 0;
    for (int x : eta) hmax = std::max(hmax, x);
    for (int h = 1; h <= hmax; ++h) {
        int ce = 0, cn = 0;
        for (std::size_t k = 0; k < eta.size(); ++k) {
            if (eta[k] >= h) ++ce;
            if (nu[k] >= h) ++cn;
            if (ce < cn) return false;
        }
    }
    return true;
}

bool bruhat_less(const Composition& nu, const Composition& eta) {
    if (nu.size() != eta.size() || size_of(nu) != size_of(eta)) return false;
    if (nu == eta) return false;
    const Partition pn = sorted_desc(nu);
    const Partition pe = sorted_desc(eta);
    if (pn != pe) return dominance_leq(pn, pe);
    return bruhat_leq_same_sort(nu, eta);
}

}  // namespace msym
