// SPDX-License-Identifier: MIT
#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "msym/combinatorics.hpp"

using namespace msym;

namespace {

// Counts fillings by repeatedly removing an outer corner.
long syt_by_corners(Partition p) {
    if (size_of(p) == 0) return 1;
    long total = 0;
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (p[r] == 0) continue;
        if (r + 1 < p.size() && p[r + 1] == p[r]) continue;
        --p[r];
        total += syt_by_corners(p);
        ++p[r];
    }
    return total;
}

// Tries every filling with letters 1..ℓ(μ) and keeps the semistandard ones.
long ssyt_brute(const Partition& lam, const std::vector<int>& mu) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lam.size(); ++r)
        for (int c = 0; c < lam[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    std::vector<std::vector<int>> T(lam.size());
    for (std::size_t r = 0; r < lam.size(); ++r) T[r].assign(lam[r], 0);
    const int k = static_cast<int>(mu.size());
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            std::vector<int> content(k, 0);
            for (const auto& row : T)
                for (int x : row) ++content[x - 1];
            if (content == mu) ++count;
            return;
        }
        const auto [r, c] = cells[i];
        for (int x = 1; x <= k; ++x) {
            if (c > 0 && T[r][c - 1] > x) continue;
            if (r > 0 && T[r - 1][c] >= x) continue;
            T[r][c] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("partitions and compositions") {
    const std::vector<Partition> p4 = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(partitions_of(4) == p4);
    CHECK(partitions_of(0).size() == 1);
    CHECK(compositions_of(2, 2) == std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(sorted_desc({0, 2, 0, 3}) == Partition{3, 2});
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK(inv_count({1, 3, 2}) == 2);
}

TEST_CASE("standard tableau counts match corner removal") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(count_syt(p) == syt_by_corners(p));
}

TEST_CASE("Kostka numbers match brute-force enumeration") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                CHECK(kostka_number(lam, mu) == ssyt_brute(lam, mu));
                Partition rev(mu.rbegin(), mu.rend());
                CHECK(kostka_number(lam, rev) == ssyt_brute(lam, rev));
            }
}

TEST_CASE("m-partition parsing") {
    const MPartition L = MPartition::parse("2,0,1|3,1");
    CHECK(L.a == Composition{2, 0, 1});
    CHECK(L.lam == Partition{3, 1});
    CHECK(L.degree() == 7);
    CHECK(L.str() == "2,0,1|3,1");
    CHECK(MPartition::parse("|").degree() == 0);
    CHECK(MPartition::parse("0,0|").m() == 2);
    CHECK_THROWS_AS(MPartition::parse("1,2"), DomainError);
    CHECK_THROWS_AS(MPartition::parse("1|2|3"), DomainError);
    CHECK_THROWS_AS(MPartition::parse("1,x|"), DomainError);
    CHECK_THROWS_AS(MPartition::parse("-1|"), DomainError);
    CHECK_THROWS_AS(MPartition::parse("|1,2"), DomainError);
}

TEST_CASE("m-partition counts") {
    for (int m = 0; m <= 3; ++m)
        for (int d = 0; d <= 6; ++d) {
            long expected = 0;
            for (int k = 0; k <= d; ++k) {
                const long comps = m == 0 ? (k == 0 ? 1 : 0) : binom(k + m - 1, m - 1);
                expected += comps * static_cast<long>(partitions_of(d - k).size());
            }
            const auto all = enumerate_mpartitions(m, d);
            CHECK(static_cast<long>(all.size()) == expected);
            CHECK(std::is_sorted(all.begin(), all.end(), canonical_before));
        }
}

TEST_CASE("canonical order extends dominance") {
    const auto all = enumerate_mpartitions(2, 4);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE((dominance_leq(all[i], all[j]) && all[i] != all[j]));
}

TEST_CASE("hook product") {
    const QTPoly q = QTPoly::q(), t = QTPoly::t();
    auto f = [&](int i, int j) { return QTPoly(1) - QTPoly::monomial(1, i, j); };
    const QTPoly expected = f(0, 1) * f(1, 1) * f(2, 3) * f(3, 5) * f(1, 2) * f(2, 4) * f(1, 1) * f(2, 5) *
                            f(0, 2) * f(0, 1);
    CHECK(c_hook(MPartition({2, 0, 0, 2}, {4, 1, 1})) == expected);
    CHECK(c_hook(MPartition({1}, {})) == QTPoly(1) - q * t);
    CHECK(c_hook(MPartition({}, {1})) == QTPoly(1) - t);
}

TEST_CASE("eigenvalue data") {
    CHECK(eta_bar({0, 1}, 1) == QTScalar::t_pow(-1));
    CHECK(eta_bar({0, 1}, 2) == QTScalar(QTPoly::q()));
    CHECK(eta_bar({1, 1}, 1) == QTScalar(QTPoly::q()));
    CHECK(eta_bar({1, 1}, 2) == QTScalar::q_pow(1) * QTScalar::t_pow(-1));
}

TEST_CASE("Bruhat-type order") {
    CHECK(bruhat_less({0, 1}, {1, 0}));
    CHECK_FALSE(bruhat_less({1, 0}, {0, 1}));
    CHECK(bruhat_less({1, 1}, {2, 0}));
    CHECK(bruhat_leq_same_sort({0, 1, 2}, {2, 1, 0}));
    CHECK_FALSE(bruhat_less({1, 0}, {1, 0}));
}
