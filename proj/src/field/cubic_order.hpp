#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/int128.hpp"

namespace quadfam::cubic {

using Vec3 = std::array<i64, 3>;

// Maximal order of a Galois (totally real, square discriminant) cubic field,
// computed by p-maximal enlargement at every prime whose square divides the
// polynomial discriminant. Basis columns are w_j = sum_i B[i][j] theta^i / den.
struct MaximalOrder {
    std::array<i64, 4> poly{};
    i64 poly_disc = 0;
    i64 field_disc = 0;
    i64 index = 1;

    std::array<std::array<i64, 3>, 3> B{};  // B[i][j], column HNF, den | column scaling
    i64 den = 1;

    long double roots[3] = {0, 0, 0};  // ascending real embeddings of theta
    long double emb[3][3] = {};        // emb[e][j] = sigma_e(w_j)

    bool units_found = false;
    std::vector<Vec3> units;  // two independent |N| = 1 elements, basis coords

    std::vector<std::pair<int, int>> two_ef;

    bool class_number_one = false;
    bool class_number_decided = false;
    std::vector<std::string> notes;
};

// poly must be monic cubic with positive square discriminant (checked by caller).
MaximalOrder build(const std::array<i64, 4>& poly);

// Splitting type of a rational prime in the maximal order:
// returns list of (e, f) pairs. Works for index divisors too.
std::vector<std::pair<int, int>> splitting(const MaximalOrder& M, i64 p);

// Exact norm of an element given by maximal-order basis coordinates
// (value is (resultant numerator) / den^3, always integral).
i128 norm_basis(const MaximalOrder& M, const Vec3& v);

// For each stored unit, the smallest power landing in Z[theta], as
// power-basis coordinates. Powers of units stay units, so independence
// is preserved.
std::vector<Vec3> integral_power_units(const MaximalOrder& M);

}  // namespace quadfam::cubic
