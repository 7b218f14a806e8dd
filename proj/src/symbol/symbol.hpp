#pragma once

#include "ideal/ideal.hpp"

namespace quadfam {

struct SymbolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadratic residue symbol (a / P) in {-1, 0, +1}; requires odd residue
// characteristic. Symbols at primes above 2 are a hard error, not 0.
int legendre(const NumberField& K, const FieldElement& a, const PrimeIdeal& P);

// True iff the torsion generator and every fundamental unit is a square
// mod P; makes ideal symbols at P generator-independent.
bool unit_square_check(const NumberField& K, const PrimeIdeal& P);

// Jacobi-style product over the prime divisors of a squarefree odd ideal,
// coprime to (b).
int jacobi(const NumberField& K, const FieldElement& b, const Ideal& a);
int jacobi(const NumberField& K, const FieldElement& b, const std::vector<PrimeIdeal>& primes_of_a);

// (b / a) evaluated on the canonical generator of b; every prime of a must
// pass unit_square_check (well-definedness), and a, b must be coprime.
int ideal_symbol(const NumberField& K, const Ideal& b, const Ideal& a);

// (u/v) == (v/u)?
bool reciprocity_check(const NumberField& K, const Ideal& u, const Ideal& v);

// Does legendre(s * eps_s, q) = +1 agree with x^2 - s*eps_s having a root
// in the residue field of q (root counting, N(q) <= 1e5)?
bool splitting_symbol_check(const NumberField& K, const FieldElement& s, const PrimeIdeal& q);

}  // namespace quadfam
