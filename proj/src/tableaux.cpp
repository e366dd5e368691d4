// SPDX-License-Identifier: MIT
#include "msym/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace msym {

namespace {

int row_len(const Partition& p, int r) {
    return r < static_cast<int>(p.size()) ? p[r] : 0;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t r = 0; r < inner.size(); ++r)
        if (inner[r] > outer[r]) return false;
    return true;
}

std::string letter_str(int x) { return x < 0 ? "~" + std::to_string(-x) : std::to_string(x); }

// Fills the skew shape row by row. budget[i-1] copies of letter sign*i may
// appear, only in columns <= bound[i-1].
std::vector<SkewTableau> fill_shape(const SkewShape& shape, std::vector<int> budget,
                                    const std::vector<int>& bound, int sign) {
    std::vector<SkewTableau> out;
    if (!contains(shape.outer, shape.inner)) return out;
    for (int b : budget)
        if (b < 0) return out;
    const int nrows = static_cast<int>(shape.outer.size());
    const int m = static_cast<int>(budget.size());
    SkewTableau cur;
    cur.shape = shape;
    cur.rows.resize(nrows);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < nrows; ++r)
        for (int c = row_len(shape.inner, r) + 1; c <= shape.outer[r]; ++c) cells.emplace_back(r, c);
    int total = 0;
    for (int b : budget) total += b;
    if (total != static_cast<int>(cells.size())) return out;
    // Candidate letters in increasing integer order.
    std::vector<int> letters;
    for (int i = 1; i <= m; ++i) letters.push_back(sign * i);
    std::sort(letters.begin(), letters.end());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            out.push_back(cur);
            return;
        }
        const auto [r, c] = cells[k];
        const int inner_r = row_len(shape.inner, r);
        const bool has_left = c - 1 > inner_r;
        const int left = has_left ? cur.rows[r].back() : 0;
        const bool has_above = r > 0 && c > row_len(shape.inner, r - 1);
        const int above = has_above ? cur.rows[r - 1][c - row_len(shape.inner, r - 1) - 1] : 0;
        for (int x : letters) {
            const int i = x < 0 ? -x : x;
            if (budget[i - 1] == 0 || c > bound[i - 1]) continue;
            if (has_left && x < left) continue;
            if (has_above && x <= above) continue;
            --budget[i - 1];
            cur.rows[r].push_back(x);
            rec(k + 1);
            cur.rows[r].pop_back();
            ++budget[i - 1];
        }
    };
    rec(0);
    return out;
}

SkewShape shape_S(const MPartition& L, const MPartition& O) {
    return {lambda_upper(L, 0), O.lam};
}

SkewShape shape_Sbar(const MPartition& L, const MPartition& O) { return {O.lam, L.lam}; }

// Column contents of a tableau: letters per column (1-based index).
std::map<int, std::vector<int>> columns_of(const SkewTableau& T) {
    std::map<int, std::vector<int>> cols;
    for (std::size_t r = 0; r < T.rows.size(); ++r) {
        const int inner = row_len(T.shape.inner, static_cast<int>(r));
        for (std::size_t k = 0; k < T.rows[r].size(); ++k)
            cols[inner + static_cast<int>(k) + 1].push_back(T.rows[r][k]);
    }
    return cols;
}

SkewTableau fill_by_columns(const SkewShape& shape, std::map<int, std::vector<int>> cols) {
    SkewTableau T;
    T.shape = shape;
    T.rows.resize(shape.outer.size());
    std::map<int, std::size_t> used;
    for (auto& [c, v] : cols) std::sort(v.begin(), v.end());
    for (std::size_t r = 0; r < shape.outer.size(); ++r) {
        for (int c = row_len(shape.inner, static_cast<int>(r)) + 1; c <= shape.outer[r]; ++c) {
            auto& v = cols[c];
            std::size_t& u = used[c];
            if (u >= v.size()) throw DomainError("column contents do not fit the shape");
            T.rows[r].push_back(v[u++]);
        }
    }
    for (const auto& [c, v] : cols)
        if (used[c] != v.size()) throw DomainError("column contents do not fit the shape");
    return T;
}

SkewTableau refill(const SkewTableau& T, const Word& w) {
    SkewTableau R = T;
    std::size_t k = 0;
    for (std::size_t r = R.rows.size(); r-- > 0;)
        for (auto& x : R.rows[r]) x = w[k++];
    return R;
}

}  // namespace

int SkewTableau::at(int row, int col) const {
    const int inner = row_len(shape.inner, row - 1);
    if (row < 1 || row > static_cast<int>(rows.size()) || col <= inner ||
        col > row_len(shape.outer, row - 1))
        throw DomainError("cell outside the skew shape");
    return rows[row - 1][col - inner - 1];
}

bool SkewTableau::valid() const {
    if (!contains(shape.outer, shape.inner) || rows.size() != shape.outer.size()) return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int inner = row_len(shape.inner, static_cast<int>(r));
        if (static_cast<int>(rows[r].size()) != shape.outer[r] - inner) return false;
        for (std::size_t k = 0; k < rows[r].size(); ++k) {
            if (rows[r][k] == 0) return false;
            if (k > 0 && rows[r][k - 1] > rows[r][k]) return false;
            const int c = inner + static_cast<int>(k) + 1;
            if (r > 0 && c > row_len(shape.inner, static_cast<int>(r) - 1) && at(r, c) >= rows[r][k])
                return false;
        }
    }
    return true;
}

std::string SkewTableau::str() const {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int inner = row_len(shape.inner, static_cast<int>(r));
        std::vector<std::string> cells(inner, ".");
        for (int x : rows[r]) cells.push_back(letter_str(x));
        for (std::size_t k = 0; k < cells.size(); ++k) s += (k ? " " : "") + cells[k];
        s += "\n";
    }
    return s;
}

std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + letter_str(w[k]);
    return s;
}

Word parse_word(const std::string& text) {
    Word w;
    const bool spaced = text.find(' ') != std::string::npos;
    std::size_t k = 0;
    while (k < text.size()) {
        if (text[k] == ' ') {
            ++k;
            continue;
        }
        int sign = 1;
        if (text[k] == '~') {
            sign = -1;
            ++k;
        }
        std::size_t start = k;
        if (spaced) {
            while (k < text.size() && text[k] >= '0' && text[k] <= '9') ++k;
        } else if (k < text.size() && text[k] >= '0' && text[k] <= '9') {
            ++k;
        }
        if (start == k) throw DomainError("bad letter in word '" + text + "'");
        const int x = std::stoi(text.substr(start, k - start));
        if (x == 0) throw DomainError("letter 0 in word '" + text + "'");
        w.push_back(sign * x);
    }
    return w;
}

Word reading_word(const SkewTableau& T) {
    Word w;
    for (std::size_t r = T.rows.size(); r-- > 0;) w.insert(w.end(), T.rows[r].begin(), T.rows[r].end());
    return w;
}

std::vector<SkewTableau> enumerate_S(const MPartition& L, const MPartition& O) {
    if (L.m() != O.m() || L.degree() != O.degree()) throw DomainError("mismatched m-partitions");
    return fill_shape(shape_S(L, O), O.a, L.a, 1);
}

std::vector<SkewTableau> enumerate_Sbar(const MPartition& L, const MPartition& O) {
    if (L.m() != O.m() || L.degree() != O.degree()) throw DomainError("mismatched m-partitions");
    std::vector<int> budget(L.m());
    for (int i = 0; i < L.m(); ++i) budget[i] = L.a[i] - O.a[i];
    return fill_shape(shape_Sbar(L, O), budget, L.a, -1);
}

SkewTableau bij_b(const SkewTableau& T, const MPartition& L, const MPartition& O) {
    if (!T.valid()) throw DomainError("invalid tableau");
    bool barred = false, plain = false;
    for (const auto& row : T.rows)
        for (int x : row) (x < 0 ? barred : plain) = true;
    if (barred && plain) throw DomainError("mixed alphabets in tableau");
    const SkewShape sbar = shape_Sbar(L, O);
    const bool on_sbar = T.shape.outer == sbar.outer && T.shape.inner == sbar.inner;
    const SkewShape splain = shape_S(L, O);
    const bool on_s = T.shape.outer == splain.outer && T.shape.inner == splain.inner;
    // An empty tableau is read as a member of whichever family its shape fits.
    const bool to_plain = barred || (!plain && on_sbar);
    if (to_plain ? !on_sbar : !on_s) throw DomainError("tableau shape does not match the m-partitions");
    const SkewShape out_shape = to_plain ? splain : sbar;
    auto cols = columns_of(T);
    std::map<int, std::vector<int>> out;
    const int amax = L.a.empty() ? 0 : *std::max_element(L.a.begin(), L.a.end());
    for (int c = 1; c <= amax; ++c) {
        const auto& have = cols[c];
        for (int i = 1; i <= L.m(); ++i) {
            if (c > L.a[i - 1]) continue;
            const int mine = to_plain ? -i : i;
            if (std::find(have.begin(), have.end(), mine) == have.end())
                out[c].push_back(to_plain ? i : -i);
        }
    }
    SkewTableau R = fill_by_columns(out_shape, out);
    if (!R.valid()) throw DomainError("image of the bijection is not a tableau");
    return R;
}

Word sigma_action(int i, const Word& w) {
    const int a = i, b = i + 1;
    std::vector<std::size_t> stack;
    std::vector<std::size_t> free_a;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == b) {
            stack.push_back(k);
        } else if (w[k] == a) {
            if (!stack.empty()) {
                stack.pop_back();
            } else {
                free_a.push_back(k);
            }
        }
    }
    std::vector<std::size_t> unpaired = free_a;
    unpaired.insert(unpaired.end(), stack.begin(), stack.end());
    const std::size_t s = stack.size();
    Word r = w;
    for (std::size_t k = 0; k < unpaired.size(); ++k) r[unpaired[k]] = k < s ? a : b;
    return r;
}

namespace {

Word unbar(const Word& w, int m) {
    Word r;
    for (int x : w) {
        if (x >= 0 || -x > m) throw DomainError("expected barred letters 1..m");
        r.push_back(m + 1 + x);
    }
    return r;
}

Word rebar(const Word& w, int m) {
    Word r;
    for (int x : w) r.push_back(x - m - 1);
    return r;
}

}  // namespace

Word sigma_bar_action(int i, int m, const Word& w) {
    return rebar(sigma_action(m - i, unbar(w, m)), m);
}

Word sort_evaluation(const Word& w, bool largest_first) {
    Word cur = w;
    int maxl = 0;
    for (int x : w) {
        if (x <= 0) throw DomainError("charge needs unbarred letters");
        maxl = std::max(maxl, x);
    }
    while (true) {
        std::vector<int> cnt(maxl + 2, 0);
        for (int x : cur) ++cnt[x];
        int pick = 0;
        for (int i = 1; i < maxl; ++i)
            if (cnt[i] < cnt[i + 1]) {
                pick = i;
                if (!largest_first) break;
            }
        if (pick == 0) return cur;
        cur = sigma_action(pick, cur);
    }
}

int charge(const Word& w) {
    const Word v = sort_evaluation(w);
    const int n = static_cast<int>(v.size());
    std::vector<bool> used(n, false);
    int left = n;
    int total = 0;
    while (left > 0) {
        int pos = n;  // scanning starts just right of the word
        int label = 0;
        for (int letter = 1;; ++letter) {
            int found = -1;
            int p = pos;
            bool wrapped = false;
            for (int step = 0; step < n; ++step) {
                --p;
                if (p < 0) {
                    p = n - 1;
                    wrapped = true;
                }
                if (!used[p] && v[p] == letter) {
                    found = p;
                    break;
                }
            }
            if (found < 0) break;
            if (wrapped && letter > 1) ++label;
            used[found] = true;
            --left;
            total += label;
            pos = found;
        }
    }
    return total;
}

int charge_barred(const Word& w, int m) { return charge(unbar(w, m)); }

int charge_ab(const MPartition& L, const MPartition& O, const SkewTableau& T) {
    const Composition& a = L.a;
    if (!is_dominant(a)) throw DomainError("charge_ab needs dominant a");
    const int m = L.m();
    const SkewTableau bar = bij_b(T, L, O);
    Word w = reading_word(bar);
    int ell = 0;
    while (ell < m && a[ell] == a[0]) ++ell;
    for (int i = ell + 1; i <= m; ++i)
        for (int k = 0; k < a[0] - a[i - 1]; ++k) w.push_back(-i);
    return inv_count(O.a) + (w.empty() ? 0 : charge_barred(w, m));
}

SkewTableau sigma_on_tableau(int i, const SkewTableau& T) {
    return refill(T, sigma_action(i, reading_word(T)));
}

SkewTableau sigma_bar_on_tableau(int i, int m, const SkewTableau& T) {
    return refill(T, sigma_bar_action(i, m, reading_word(T)));
}

TLaurent D_dominant(const MPartition& L, const MPartition& O) {
    if (!is_dominant(L.a)) throw DomainError("D_dominant needs dominant a");
    TLaurent d;
    for (const auto& T : enumerate_S(L, O)) d += TLaurent::t(charge_ab(L, O, T));
    return d;
}

TLaurent D_coeff(const MPartition& L, const MPartition& O) {
    static std::shared_mutex mu;
    static std::map<std::pair<MPartition, MPartition>, TLaurent> memo;
    if (L.m() != O.m() || L.degree() != O.degree()) throw DomainError("mismatched m-partitions");
    const auto key = std::make_pair(L, O);
    {
        std::shared_lock lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    TLaurent d;
    int i = 0;
    for (int k = 1; k < L.m(); ++k)
        if (L.a[k - 1] < L.a[k]) {
            i = k;
            break;
        }
    if (i == 0) {
        d = D_dominant(L, O);
    } else {
        MPartition Lt = L, Ot = O;
        std::swap(Lt.a[i - 1], Lt.a[i]);
        std::swap(Ot.a[i - 1], Ot.a[i]);
        const int bi = O.a[i - 1], bj = O.a[i];
        if (bi > bj) {
            d = TLaurent::t(-1) * D_coeff(Lt, Ot);
        } else if (bi < bj) {
            d = D_coeff(Lt, Ot) + (TLaurent(1) - TLaurent::t(-1)) * D_coeff(Lt, O);
        } else {
            d = D_coeff(Lt, O);
        }
    }
    std::unique_lock lock(mu);
    memo.try_emplace(key, d);
    return d;
}

std::vector<std::vector<TLaurent>> D_matrix(int m, int d) {
    const auto labels = enumerate_mpartitions(m, d);
    std::vector<std::vector<TLaurent>> M(labels.size(), std::vector<TLaurent>(labels.size()));
    for (std::size_t r = 0; r < labels.size(); ++r)
        for (std::size_t c = 0; c < labels.size(); ++c) M[r][c] = D_coeff(labels[r], labels[c]);
    return M;
}

}  // namespace msym
