#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/int128.hpp"
#include "core/smallmat.hpp"

namespace quadfam {

namespace cubic { struct MaximalOrder; }

// Structurally invalid or unsupported fields (reducible, degree > 3,
// non-Galois cubic, non-maximal quadratic equation order).
struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Z[theta] in the power basis; unused coordinates stay zero.
struct FieldElement {
    std::array<i64, 3> c{0, 0, 0};
    bool operator==(const FieldElement&) const = default;
};

inline FieldElement fe(i64 a, i64 b = 0, i64 c = 0) { return FieldElement{{a, b, c}}; }

struct PrimeIdeal {
    i64 p = 0;
    int e = 1, f = 1;
    std::array<i64, 4> local_poly{0, 1, 0, 0};  // monic factor of the defining poly mod p
    int n = 1;                                  // field degree
    bool has_hnf = false;                       // lattice form available (degree <= 2)
    HnfMat hnf{};

    i64 norm() const {
        i64 v = 1;
        for (int i = 0; i < f; ++i) v = to_i64(mul_i128(v, p));
        return v;
    }
};

enum class FieldKind { Rational, ImagQuadratic, RealQuadratic, CyclicCubic };

struct NumberField {
    std::vector<i64> poly;  // monic, ascending coefficients, degree n
    int n = 1;
    FieldKind kind = FieldKind::Rational;
    i64 poly_disc = 1;
    i64 field_disc = 1;
    i64 index = 1;  // [O_K : Z[theta]]

    int unit_rank = 0;
    FieldElement torsion;  // generator of the roots of unity
    int torsion_order = 2;
    std::vector<FieldElement> fund_units;  // power-basis coords (degree <= 2 exact)
    bool units_complete = true;            // false if the cubic search hit its bound

    std::optional<FieldElement> epsilon;  // unit of order exactly 2 mod p^2 for all p | 2
    std::vector<PrimeIdeal> two_adic;     // primes above 2 (empty when not constructible)
    std::vector<std::pair<int, int>> two_ef;

    std::shared_ptr<const cubic::MaximalOrder> cubic;  // degree-3 engine data

    // Quadratic helpers: poly = x^2 + b x + c.
    i64 qb() const { return poly[1]; }
    i64 qc() const { return poly[0]; }
    bool is_quadratic() const { return n == 2; }
};

// Validates and populates a field from its defining polynomial.
// Throws FieldError for unsupported input.
NumberField make_field(const std::vector<i64>& poly);

// Exact arithmetic in Z[theta].
FieldElement fadd(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement fsub(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement fneg(const FieldElement& a);
FieldElement fmul(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement fconj(const NumberField& K, const FieldElement& a);  // degree 2 only
i128 elem_norm(const NumberField& K, const FieldElement& a);
i128 elem_trace(const NumberField& K, const FieldElement& a);
bool is_zero(const FieldElement& a);

// Unit group data as (torsion generator, fundamental units).
std::pair<FieldElement, std::vector<FieldElement>> unit_group(const NumberField& K);

// Inverse of a unit (|N(u)| = 1); exact.
FieldElement unit_inverse(const NumberField& K, const FieldElement& u);

std::string elem_str(const NumberField& K, const FieldElement& a);

// "x^3 + x^2 - 10x - 8" -> ascending coefficient vector. Throws FieldError.
std::vector<i64> parse_poly(const std::string& s);

}  // namespace quadfam
