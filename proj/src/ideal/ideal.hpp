#pragma once

#include <optional>
#include <vector>

#include "field/number_field.hpp"

namespace quadfam {

// Integral ideal as a column-HNF lattice in the power basis. Canonical:
// equality of ideals is equality of the arrays. General arithmetic is
// supported for degree <= 2; cubic fields only ever construct prime ideals.
struct Ideal {
    int n = 1;
    HnfMat h{};
    i64 norm = 0;

    bool operator==(const Ideal&) const = default;
};

Ideal ideal_unit(const NumberField& K);
Ideal ideal_from_element(const NumberField& K, const FieldElement& g);
Ideal ideal_from_prime(const NumberField& K, const PrimeIdeal& P);
Ideal ideal_mul(const NumberField& K, const Ideal& a, const Ideal& b);
Ideal ideal_sum(const NumberField& K, const Ideal& a, const Ideal& b);  // gcd lattice
bool ideal_contains(const Ideal& a, const FieldElement& g);
bool ideal_coprime(const NumberField& K, const Ideal& a, const Ideal& b);
bool ideal_divides(const NumberField& K, const Ideal& d, const Ideal& a);  // a subset of d
int hnf_lex_compare(const Ideal& a, const Ideal& b);
FieldElement ideal_basis_element(const Ideal& a, int j);

struct Factorization {
    std::vector<std::pair<PrimeIdeal, int>> prime_powers;
};

// Dedekind-Kummer factorization of a rational prime. For cubic fields,
// throws FieldError when p divides the index [O_K : Z[theta]].
std::vector<PrimeIdeal> factor_rational_prime(i64 p, const NumberField& K);

Factorization factor_ideal(const NumberField& K, const Ideal& a);
bool is_squarefree(const NumberField& K, const Ideal& a);

// Canonical principal generator: minimal |trace| in the unit orbit,
// ties broken by sign of the leading then second coordinate.
// nullopt means the ideal is provably not principal.
std::optional<FieldElement> principal_generator_opt(const NumberField& K, const Ideal& a);
FieldElement principal_generator(const NumberField& K, const Ideal& a);  // throws if not principal
FieldElement canonical_unit_rep(const NumberField& K, const FieldElement& g);

}  // namespace quadfam
