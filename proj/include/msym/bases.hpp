// SPDX-License-Identifier: MIT
// Bases of the ring of m-symmetric functions and the changes between them.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "msym/combinatorics.hpp"
#include "msym/polyring.hpp"

namespace msym {

enum class Basis { M, Pow, K, S, Sstar, MacP, MacJ, HL };

std::string basis_name(Basis b);  // "m", "p", "k", "s", "s*", "P", "J", "H"

struct BasisExpansion {
    Basis basis = Basis::M;
    int m = 0;
    std::map<MPartition, QTScalar> coeffs;

    void add(const MPartition& L, const QTScalar& c);
    QTScalar coeff(const MPartition& L) const;
    // Labels in canonical order (degree, then the canonical block order).
    std::vector<MPartition> ordered_labels() const;
    std::string str() const;
    friend bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
        return a.basis == b.basis && a.m == b.m && a.coeffs == b.coeffs;
    }
};

BasisExpansion single(Basis b, const MPartition& L, const QTScalar& c = QTScalar(1));

using QTMatrix = std::vector<std::vector<QTScalar>>;
// Gauss-Jordan inverse over Q(q,t); throws InternalError when singular.
QTMatrix invert(const QTMatrix& a);
// Row vector times matrix.
std::vector<QTScalar> vec_mat(const std::vector<QTScalar>& v, const QTMatrix& a);

// Transition data for one (m, d) block. Row Λ of a "to M" matrix holds the
// m-coefficients of the basis element indexed by Λ.
struct Block {
    int m = 0;
    int d = 0;
    std::vector<MPartition> labels;
    std::map<MPartition, std::size_t> index;
    QTMatrix pow_to_m;
    QTMatrix m_to_pow;
    QTMatrix k_to_m;
    QTMatrix m_to_k;
    QTMatrix D;     // s*_Λ = Σ D_ΛΩ k_Ω
    QTMatrix Dinv;  // s_Λ = Σ Dinv_ΩΛ k_Ω
};

// Cached and shared; safe for concurrent use.
const Block& block(int m, int d);

XPoly monomial_msym(const MPartition& L, int N);  // m_Λ
XPoly power_msym(const MPartition& L, int N);     // p_Λ
XPoly k_basis(const MPartition& L, int N);        // k_Λ(x;t)

XPoly to_monomials(const BasisExpansion& e, int N);
// Reads the m-basis expansion of an m-symmetric polynomial.
BasisExpansion m_expansion(const XPoly& f, int m);
BasisExpansion from_monomials(const XPoly& f, int m, Basis target);
BasisExpansion convert(const BasisExpansion& e, Basis target);

BasisExpansion schur(const MPartition& L);       // in the k basis
BasisExpansion schur_star(const MPartition& L);  // in the k basis
QTScalar scalar_product(const BasisExpansion& f, const BasisExpansion& g);
BasisExpansion t_star(int i, const BasisExpansion& e);
BasisExpansion plethysm(const BasisExpansion& e, bool inverse = false);

// LaTeX in the usual notation, e.g. `t^{2} s_{3,0;\emptyset}`.
std::string latex(const QTPoly& p);
std::string latex(const QTScalar& c);
std::string latex_label(const MPartition& L);
std::string latex(const BasisExpansion& e);
std::string latex(const XPoly& f);

}  // namespace msym
