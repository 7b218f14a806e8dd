#pragma once

#include <functional>
#include <string>

#include "ideal/ideal.hpp"

namespace quadfam {

struct FamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BaseFieldReport {
    bool is_galois = false;
    bool class_number_one = false;
    std::optional<FieldElement> epsilon;
    std::vector<std::pair<int, int>> two_splitting;
    bool accepted = false;
    std::vector<std::string> reasons;
};

BaseFieldReport check_base_field(const NumberField& K);

// alpha^(2^f) != alpha mod p^2 for every p | 2, f the residue degree of p.
// Caller guarantees alpha O_K squarefree. Degree <= 2 only.
bool smith_check(const NumberField& K, const FieldElement& alpha);

// Membership in P_K: odd, coprime to the conductor support, trivial class in
// the mod-4 ray group (some unit times a generator is 1 mod 4 O_K), and all
// unit generators squares mod P.
bool is_in_PK(const NumberField& K, const PrimeIdeal& P);

// Canonical generator of a in W satisfying the Smith condition; multiplies
// by epsilon when the canonical one fails. Aborts if neither works.
FieldElement normalize_generator(const NumberField& K, const Ideal& a);

struct FamilyPrime {
    PrimeIdeal P;
    Ideal ideal;
    i64 norm = 0;
    FieldElement gen;  // canonical generator
};

// All P_K primes of norm <= X, sorted by (norm, HNF lex). Field must be
// accepted by check_base_field and have degree <= 2.
struct FamilyTable {
    const NumberField* K = nullptr;
    i64 X = 0;
    std::vector<FamilyPrime> primes;
};

FamilyTable build_family_table(const NumberField& K, i64 X);

struct FamilyItem {
    Ideal ideal;
    FieldElement alpha;  // normalized generator
    i64 norm = 0;
    int omega = 0;
    std::array<int, 8> prime_idx{};  // indices into the family table
};

inline constexpr int kMaxOmega = 8;

// Depth-first enumeration of squarefree products of distinct table primes
// with norm <= X. visit(norm, idxs, omega); DFS order, not sorted.
// start_lo/start_hi restrict the root prime index (parallel partitioning).
void family_dfs(const FamilyTable& T, i64 X,
                const std::function<void(i64, const int*, int)>& visit,
                int root_lo = 0, int root_hi = -1);

FamilyItem make_family_item(const FamilyTable& T, const int* idxs, int omega);

// Sorted family stream W(X): nondecreasing norm, ties by HNF lex order.
std::vector<FamilyItem> enumerate_W(const FamilyTable& T, i64 X);
std::vector<FamilyItem> enumerate_W(const NumberField& K, i64 X);

// Named presets for the validation corpus; throws FieldError on unknown name.
struct FieldPreset {
    std::string name;
    std::vector<i64> poly;
    std::string note;
};
const std::vector<FieldPreset>& field_presets();
std::vector<i64> preset_poly(const std::string& name);

}  // namespace quadfam
