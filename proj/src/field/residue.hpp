#pragma once

#include <vector>

#include "field/number_field.hpp"

namespace quadfam {

// Residue field O_K / p = F_{p^f}, realized as F_p[x] / (local_poly).
// Elements are coefficient vectors of degree < f with entries in [0, p).
struct ResidueField {
    i64 p = 0;
    int f = 1;
    std::array<i64, 4> g{};  // monic local polynomial

    using Elem = std::array<i64, 3>;

    static ResidueField from_prime(const PrimeIdeal& P) {
        ResidueField R;
        R.p = P.p;
        R.f = P.f;
        R.g = P.local_poly;
        return R;
    }

    i64 size() const {
        i64 s = 1;
        for (int i = 0; i < f; ++i) s = to_i64(mul_i128(s, p));
        return s;
    }

    Elem zero() const { return {0, 0, 0}; }
    Elem one() const { return {1 % p, 0, 0}; }

    bool is_zero(const Elem& a) const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

    // reduce a power-basis field element: substitute theta -> x mod (p, g)
    Elem reduce(const NumberField& K, const FieldElement& a) const {
        i64 t[3] = {emod(a.c[0], p), emod(a.c[1], p), emod(a.c[2], p)};
        // reduce x^2 (and implicitly higher) modulo g when deg g < 3
        // K.n <= 3 so only the x^2 term may need folding for f <= 2
        Elem r{0, 0, 0};
        if (f >= 3) return {t[0], t[1], t[2]};
        if (K.n >= 3 && t[2] != 0) {
            // x^2 mod g
            if (f == 1) {
                i64 root = emod(-g[0], p);
                t[0] = emod(t[0] + mulmod64(t[2], mulmod64(root, root, p), p), p);
            } else {  // f == 2: x^2 = -g1 x - g0
                t[1] = emod(t[1] - mulmod64(t[2], g[1], p), p);
                t[0] = emod(t[0] - mulmod64(t[2], g[0], p), p);
            }
            t[2] = 0;
        }
        if (f == 1 && t[1] != 0) {
            i64 root = emod(-g[0], p);
            t[0] = emod(t[0] + mulmod64(t[1], root, p), p);
            t[1] = 0;
        }
        r = {t[0], t[1], t[2]};
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (f == 1) return {mulmod64(a[0], b[0], p), 0, 0};
        i64 t[5] = {0, 0, 0, 0, 0};
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) t[i + j] = emod(t[i + j] + mulmod64(a[size_t(i)], b[size_t(j)], p), p);
        for (int d = 2 * (f - 1); d >= f; --d) {
            i64 c = t[d];
            if (!c) continue;
            t[d] = 0;
            for (int k = 0; k < f; ++k) t[d - f + k] = emod(t[d - f + k] - mulmod64(c, g[size_t(k)], p), p);
        }
        return {t[0], t[1], t[2]};
    }

    Elem pow(Elem a, i64 e) const {
        Elem r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::vector<Elem> all_elements() const {
        std::vector<Elem> out;
        out.reserve(size_t(size()));
        Elem v = zero();
        for (;;) {
            out.push_back(v);
            int k = 0;
            while (k < f && ++v[size_t(k)] == p) v[size_t(k++)] = 0;
            if (k == f) break;
        }
        return out;
    }
};

// a^e in the residue field of P, lifted back to a FieldElement.
// Errors (throws) if a lies in P.
FieldElement residue_pow(const NumberField& K, const FieldElement& a, i64 e, const PrimeIdeal& P);

}  // namespace quadfam
