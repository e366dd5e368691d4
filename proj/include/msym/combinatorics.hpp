// SPDX-License-Identifier: MIT
// Compositions, partitions, m-partitions and their circle diagrams.
#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "msym/qt_field.hpp"

namespace msym {

using Composition = std::vector<int>;
using Partition = std::vector<int>;

int size_of(const std::vector<int>& v);
Partition sorted_desc(std::vector<int> v);  // drops zeros
Partition conjugate(const Partition& p);
bool is_dominant(const Composition& c);
bool dominance_leq(const Partition& a, const Partition& b);

// All partitions of n, descending lexicographic order.
std::vector<Partition> partitions_of(int n);
// All weak compositions of n with len parts, descending lexicographic order.
std::vector<Composition> compositions_of(int n, int len);

// Number of standard Young tableaux of the given shape.
Int count_syt(const Partition& shape);
// Number of semistandard tableaux of shape lam and content mu.
Int kostka_number(const Partition& lam, const std::vector<int>& mu);

std::string composition_str(const Composition& c);
Composition parse_composition(const std::string& text);

// Inv(b) = #{i<j : b_i < b_j}.
int inv_count(const Composition& b);

struct MPartition {
    Composition a;
    Partition lam;

    MPartition() = default;
    MPartition(Composition a_, Partition lam_);

    int m() const { return static_cast<int>(a.size()); }
    int degree() const { return size_of(a) + size_of(lam); }
    std::string str() const;
    // Grammar `a1,...,am|l1,l2,...`; either side may be empty.
    static MPartition parse(const std::string& text);

    friend bool operator==(const MPartition&, const MPartition&) = default;
    friend auto operator<=>(const MPartition&, const MPartition&) = default;
};

// Λ^{(i)} = (a + 1^i) ∪ λ.
Partition lambda_upper(const MPartition& L, int i);
// Dominance on m-partitions: Ω^{(i)} ≤ Λ^{(i)} for every i.
bool dominance_leq(const MPartition& O, const MPartition& L);

// Canonical order: descending lexicographic on (Λ^{(0)}, ..., Λ^{(m)}).
// It is a linear extension of dominance, largest first.
bool canonical_before(const MPartition& x, const MPartition& y);
std::vector<MPartition> enumerate_mpartitions(int m, int d);

struct DiagramRow {
    int len = 0;
    int circle = 0;  // 0 when the row carries no circle
};

struct CircleDiagram {
    std::vector<DiagramRow> rows;  // top to bottom, rows numbered from 1
    int row_of_circle(int label) const;
    std::string str() const;
};

// Every entry of a composition carries a circle labeled by its position.
CircleDiagram diagram_of(const Composition& eta);
CircleDiagram diagram_of(const MPartition& L);

// q^{η_i} t^{1 - r_η(i)}, with i 1-based.
QTScalar eta_bar(const Composition& eta, int i);
// q^{a_i} t^{1 - r_Λ(i)}, with i 1-based in 1..m.
QTScalar eps_i(const MPartition& L, int i);
// Sum over rows without circle of q^{len} t^{1-row}.
QTScalar eps_D(const MPartition& L);

// (arm, leg) of the square in the given 1-based row and column.
std::pair<int, int> arm_leg(const MPartition& L, int row, int col);
QTPoly c_hook(const MPartition& L);
TLaurent u_norm(const MPartition& L, int N);

// Bruhat-type order on compositions with the same multiset of parts:
// true when ν ⪯ η.
bool bruhat_leq_same_sort(const Composition& nu, const Composition& eta);
// Strict order ν ≺ η: dominance of sorted parts, then Bruhat.
bool bruhat_less(const Composition& nu, const Composition& eta);

}  // namespace msym
