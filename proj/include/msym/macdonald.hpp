// SPDX-License-Identifier: MIT
// Non-symmetric and m-symmetric Macdonald polynomials, non-symmetric
// Hall-Littlewood polynomials.
#pragma once

#include <string>
#include <vector>

#include "msym/combinatorics.hpp"
#include "msym/polyring.hpp"

namespace msym {

// E_η in N = η.size() variables. Memoized, thread-safe.
XPoly nonsym_E(const Composition& eta);
// Same polynomial reached along a different chain of exchange steps
// (leftmost descent first). Not memoized; used to test path independence.
XPoly nonsym_E_alt(const Composition& eta);

// η_{Λ,N} = (a_1..a_m, 0^n, λ_ℓ..λ_1).
Composition eta_of(const MPartition& L, int N);
// Exponent of the leading monomial of m_Λ: (a, λ, 0...).
std::vector<int> leading_exponent(const MPartition& L, int N);

XPoly msym_P(const MPartition& L, int N);
XPoly integral_J(const MPartition& L, int N);
// H_a in a.size() variables.
XPoly hall_littlewood(const Composition& a);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Y_i P = ε^{(i)} P for i <= m and D P = ε^D P.
std::vector<CheckResult> verify_eigen(const MPartition& L, int N);

}  // namespace msym
