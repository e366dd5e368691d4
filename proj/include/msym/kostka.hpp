// SPDX-License-Identifier: MIT
// Generalized (q,t)-Kostka coefficients and the verification sweeps built on
// top of the whole library.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "msym/bases.hpp"
#include "msym/combinatorics.hpp"

namespace msym {

struct KostkaTable {
    MPartition source;
    std::map<MPartition, QTPoly> entries;  // zero entries omitted

    QTPoly at(const MPartition& O) const;
    std::vector<MPartition> ordered_labels() const;
};

// ℘(J_Λ) = Σ K_ΩΛ s_Ω. Cached; safe for concurrent use.
const KostkaTable& kostka_table(const MPartition& L);
// Same table through the monomial images of s_Ω and a dense solve.
KostkaTable kostka_table_by_solve(const MPartition& L);
QTPoly kostka_composition(const Composition& omega, const Composition& eta);
// ω ↦ K_ωη for ω of length m, read off modulo L_m.
std::map<Composition, QTPoly> expand_mod_Lm(const Composition& eta, int m);

struct Bounds {
    int m_max = 2;
    int d_max = 4;
};

struct Finding {
    std::string instance;
    std::string detail;
    std::string repro;
};

// One family of checks: counts plus a witness for every failure.
struct Family {
    std::string name;
    bool conjecture = false;
    long instances = 0;
    long skipped = 0;
    std::vector<Finding> failures;

    void record(bool ok, const std::string& instance, const std::function<std::string()>& detail,
                const std::string& repro = "");
    void merge(Family&& other);
};

struct VerifyReport {
    std::vector<Family> families;

    bool proved_ok() const;
    long conjecture_violations() const;
};

// Suite names: hecke, macdonald, bases, restriction, kostka, conjectures.
const std::vector<std::string>& suite_names();
VerifyReport run_suite(const std::string& name, const Bounds& b, int threads = 1);
VerifyReport verify_kostka_relations(const Bounds& b, int threads = 1);
VerifyReport check_conjectures(const Bounds& b, int threads = 1);

// Exact membership test for ℕ[q,t].
bool in_nat_qt(const QTScalar& x);

}  // namespace msym
