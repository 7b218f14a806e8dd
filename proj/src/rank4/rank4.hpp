#pragma once

#include "core/rational.hpp"
#include "family/family.hpp"

namespace quadfam {

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pairwise Legendre symbols among the primes of one family item:
// s(i, j) = (gen_i / P_j) for i != j, values +-1.
struct SymbolMatrix {
    int omega = 0;
    std::array<int8_t, kMaxOmega * kMaxOmega> s{};
    int at(int i, int j) const { return s[size_t(i * kMaxOmega + j)]; }
};

// check_twist re-evaluates every symbol on an epsilon-twisted generator and
// aborts on any mismatch (generator-independence watchdog).
SymbolMatrix item_symbol_matrix(const FamilyTable& T, const int* idxs, int omega,
                                bool check_twist = false);
SymbolMatrix item_symbol_matrix(const FamilyTable& T, const FamilyItem& it,
                                bool check_twist = false);

// Ordered pairs (a, b), ab = alpha, a square mod b and b square mod a.
i64 mutual_square_count(const SymbolMatrix& S);

// The character sum T(alpha) expanded over 4-tuples, exact dyadic value.
Dyadic T_value(const SymbolMatrix& S);

// The 4^m-tuple sum with Phi_m exponents. Guard: m <= 3, omega <= 12,
// m * omega <= 13 (term count 4^(m omega)); nullopt when exceeded.
std::optional<Dyadic> T_m_tuple(const SymbolMatrix& S, int m);

Dyadic rank4_lower_bound(i64 pair_count, int unit_rank);

// Narrow 4-rank of Q(sqrt D) via the Redei matrix; D > 0 squarefree with all
// prime factors 1 mod 4. Throws GuardError on precondition violations.
int redei_4rank(i64 D);
int redei_4rank_from_primes(const std::vector<i64>& primes);

struct Rank4Report {
    i64 norm = 0;
    int omega = 0;
    FieldElement alpha;
    i64 pair_count = 0;
    Dyadic T;
    int m = 0;                 // requested moment order (0 = none)
    std::optional<Dyadic> Tm;  // empty when guard exceeded or m = 0
    bool tm_guard_exceeded = false;
    Dyadic lower_bound;
    std::optional<int> redei;  // K = Q only
};

Rank4Report rank4_report(const FamilyTable& T, const FamilyItem& it, int m = 0,
                         bool check_twist = false);

}  // namespace quadfam
