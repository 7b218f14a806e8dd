#include "field/residue.hpp"

namespace quadfam {

FieldElement residue_pow(const NumberField& K, const FieldElement& a, i64 e, const PrimeIdeal& P) {
    ResidueField R = ResidueField::from_prime(P);
    auto ar = R.reduce(K, a);
    if (R.is_zero(ar)) throw FieldError("residue_pow: element lies in the prime");
    auto r = R.pow(ar, e);
    return fe(r[0], r[1], r[2]);
}

}  // namespace quadfam
