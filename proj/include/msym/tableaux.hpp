// SPDX-License-Identifier: MIT
// Skew tableaux, the word action of the symmetric group, charge and the
// coefficients D_{ΛΩ}(t).
#pragma once

#include <string>
#include <vector>

#include "msym/combinatorics.hpp"

namespace msym {

// Letters are positive integers; a barred letter ī is stored as -i so that
// the integer order gives 1̄ > 2̄ > ... .
using Word = std::vector<int>;

struct SkewShape {
    Partition outer;
    Partition inner;
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

struct SkewTableau {
    SkewShape shape;
    // rows[r] holds the entries of row r+1 in columns inner_r+1 .. outer_r.
    std::vector<std::vector<int>> rows;

    int at(int row, int col) const;  // 1-based
    bool valid() const;
    std::string str() const;
    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

std::string word_str(const Word& w);
Word parse_word(const std::string& text);  // `1 2 ~3` or `12~3`
Word reading_word(const SkewTableau& T);   // rows bottom to top

std::vector<SkewTableau> enumerate_S(const MPartition& L, const MPartition& O);
std::vector<SkewTableau> enumerate_Sbar(const MPartition& L, const MPartition& O);
// Maps a tableau of either family to the complementary one.
SkewTableau bij_b(const SkewTableau& T, const MPartition& L, const MPartition& O);

// σ_i on unbarred letters i, i+1.
Word sigma_action(int i, const Word& w);
// σ̄_i on a word in barred letters 1̄..m̄ (exchanges overline(m-i), overline(m-i+1)).
Word sigma_bar_action(int i, int m, const Word& w);
// Sorts the evaluation to a dominant one; largest_first picks which σ_i to
// apply when several are available.
Word sort_evaluation(const Word& w, bool largest_first = false);
int charge(const Word& w);
// Charge of a barred word through ī -> m+1-i.
int charge_barred(const Word& w, int m);
// Inv(b) + charge(T̄ u_a) for T in S_{ΛΩ}, Λ dominant.
int charge_ab(const MPartition& L, const MPartition& O, const SkewTableau& T);
// Applies σ_i to the reading word and refills the same shape.
SkewTableau sigma_on_tableau(int i, const SkewTableau& T);
SkewTableau sigma_bar_on_tableau(int i, int m, const SkewTableau& T);

TLaurent D_coeff(const MPartition& L, const MPartition& O);
// D_{ΛΩ} computed from the tableau sum; requires dominant Λ.
TLaurent D_dominant(const MPartition& L, const MPartition& O);
// Square matrix in the canonical order of enumerate_mpartitions(m, d).
std::vector<std::vector<TLaurent>> D_matrix(int m, int d);

}  // namespace msym
