#pragma once

#include <array>
#include <vector>

#include "core/int128.hpp"

namespace quadfam {

// Column-style Hermite normal form for lattices of rank n <= 3 given by
// generating columns (power-basis coordinates). Canonical form: upper
// triangular, positive diagonal, and 0 <= H[i][j] < H[i][i] for j > i.
// Two ideals are equal iff their HNF arrays are equal.
using HnfMat = std::array<i64, 9>;  // row-major n x n, unused entries zero

inline HnfMat hnf_from_columns(int n, std::vector<std::array<i128, 3>> cols) {
    std::array<std::array<i128, 3>, 3> H{};
    for (int r = n - 1; r >= 0; --r) {
        // Euclidean column reduction on row r over the still-unassigned columns.
        for (;;) {
            int nz = 0, best = -1;
            for (size_t j = 0; j < cols.size(); ++j) {
                if (cols[j][r] != 0) {
                    ++nz;
                    if (best < 0 || abs_i128(cols[j][r]) < abs_i128(cols[best][r])) best = int(j);
                }
            }
            if (nz == 0) die("HNF: lattice not full rank");
            if (nz == 1) {
                if (cols[best][r] < 0)
                    for (int i = 0; i < n; ++i) cols[best][i] = -cols[best][i];
                for (int i = 0; i < n; ++i) H[i][r] = cols[best][i];
                cols.erase(cols.begin() + best);
                break;
            }
            for (size_t j = 0; j < cols.size(); ++j) {
                if (int(j) == best || cols[j][r] == 0) continue;
                i128 q = cols[j][r] / cols[best][r];
                for (int i = 0; i < n; ++i) cols[j][i] = sub_i128(cols[j][i], mul_i128(q, cols[best][i]));
            }
        }
        // Drop columns that became zero.
        for (size_t j = 0; j < cols.size();) {
            bool zero = true;
            for (int i = 0; i < n; ++i) zero = zero && cols[j][i] == 0;
            if (zero) cols.erase(cols.begin() + j); else ++j;
        }
    }
    // Reduce off-diagonal entries into [0, diag).
    for (int j = 1; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            i128 d = H[i][i];
            i128 v = H[i][j];
            i128 q = v / d; if (v % d < 0) q -= 1;   // floor division
            if (q != 0)
                for (int k = 0; k <= i; ++k) H[k][j] = sub_i128(H[k][j], mul_i128(q, H[k][i]));
        }
    }
    HnfMat out{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i * n + j] = to_i64(H[i][j]);
    return out;
}

// True iff the integer vector v lies in the lattice spanned by the HNF columns.
inline bool hnf_contains(int n, const HnfMat& H, const std::array<i64, 3>& v) {
    std::array<i128, 3> r{};
    for (int i = 0; i < n; ++i) r[i] = v[i];
    for (int j = n - 1; j >= 0; --j) {
        i64 d = H[j * n + j];
        if (r[j] % d != 0) return false;
        i128 c = r[j] / d;
        for (int i = 0; i <= j; ++i) r[i] = sub_i128(r[i], mul_i128(c, H[i * n + j]));
    }
    for (int i = 0; i < n; ++i)
        if (r[i] != 0) return false;
    return true;
}

inline i64 hnf_det(int n, const HnfMat& H) {
    i128 d = 1;
    for (int i = 0; i < n; ++i) d = mul_i128(d, H[i * n + i]);
    return to_i64(d);
}

}  // namespace quadfam
