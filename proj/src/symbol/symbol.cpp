#include "symbol/symbol.hpp"

#include "family/family.hpp"
#include "field/residue.hpp"

namespace quadfam {

int legendre(const NumberField& K, const FieldElement& a, const PrimeIdeal& P) {
    if (P.p == 2) throw SymbolError("legendre: residue characteristic 2 is undefined here");
    ResidueField R = ResidueField::from_prime(P);
    auto ar = R.reduce(K, a);
    if (R.is_zero(ar)) return 0;
    auto v = R.pow(ar, (R.size() - 1) / 2);
    if (v == R.one()) return 1;
    auto m1 = R.one();
    m1[0] = P.p - 1;
    if (v == m1) return -1;
    die("legendre: Euler criterion gave a non-unit value");
}

bool unit_square_check(const NumberField& K, const PrimeIdeal& P) {
    if (P.p == 2) throw SymbolError("unit_square_check: residue characteristic 2");
    if (legendre(K, K.torsion, P) != 1) return false;
    for (const auto& u : K.fund_units)
        if (legendre(K, u, P) != 1) return false;
    return true;
}

int jacobi(const NumberField& K, const FieldElement& b, const std::vector<PrimeIdeal>& primes_of_a) {
    int s = 1;
    for (const auto& P : primes_of_a) {
        int l = legendre(K, b, P);
        if (l == 0) throw SymbolError("jacobi: argument not coprime to the ideal");
        s *= l;
    }
    return s;
}

int jacobi(const NumberField& K, const FieldElement& b, const Ideal& a) {
    if (a.norm % 2 == 0) throw SymbolError("jacobi: ideal has even norm");
    Factorization F = factor_ideal(K, a);
    std::vector<PrimeIdeal> ps;
    for (const auto& [P, e] : F.prime_powers) {
        if (e > 1) throw SymbolError("jacobi: ideal is not squarefree");
        ps.push_back(P);
    }
    return jacobi(K, b, ps);
}

int ideal_symbol(const NumberField& K, const Ideal& b, const Ideal& a) {
    if (!ideal_coprime(K, a, b)) throw SymbolError("ideal_symbol: ideals not coprime");
    Factorization F = factor_ideal(K, a);
    std::vector<PrimeIdeal> ps;
    for (const auto& [P, e] : F.prime_powers) {
        if (e > 1) throw SymbolError("ideal_symbol: ideal is not squarefree");
        if (!unit_square_check(K, P))
            throw SymbolError("ideal_symbol: a prime of the modulus fails unit_square_check; value would depend on the generator");
        ps.push_back(P);
    }
    FieldElement g = principal_generator(K, b);
    return jacobi(K, g, ps);
}

bool reciprocity_check(const NumberField& K, const Ideal& u, const Ideal& v) {
    return ideal_symbol(K, u, v) == ideal_symbol(K, v, u);
}

bool splitting_symbol_check(const NumberField& K, const FieldElement& s, const PrimeIdeal& q) {
    FieldElement se = s;
    if (!smith_check(K, s)) {
        if (!K.epsilon) throw SymbolError("splitting_symbol_check: field has no epsilon unit");
        se = fmul(K, s, *K.epsilon);
    }
    int sym = legendre(K, se, q);
    // root count of x^2 - s*eps_s in the residue field, by exhaustion
    ResidueField R = ResidueField::from_prime(q);
    if (R.size() > 100000) throw SymbolError("splitting_symbol_check: residue field too large for exhaustion");
    auto target = R.reduce(K, se);
    bool has_root = false;
    for (const auto& x : R.all_elements()) {
        if (R.mul(x, x) == target) { has_root = true; break; }
    }
    return (sym == 1) == has_root;
}

}  // namespace quadfam
