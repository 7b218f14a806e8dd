#include "nt/primes.hpp"

namespace quadfam {

PrimeSieve::PrimeSieve(i64 limit) : limit_(limit), bits_(size_t(limit / 2 + 1), true) {
    bits_[0] = false;  // 1
    for (i64 p = 3; p * p <= limit; p += 2)
        if (bits_[size_t(p >> 1)])
            for (i64 q = p * p; q <= limit; q += 2 * p) bits_[size_t(q >> 1)] = false;
}

std::vector<i64> PrimeSieve::primes() const {
    std::vector<i64> out;
    for_primes([&](i64 p) { out.push_back(p); });
    return out;
}

i64 mulmod64(i64 a, i64 b, i64 m) { return i64((i128(a) * b) % m); }

i64 powmod64(i64 a, i64 e, i64 m) {
    i64 r = 1 % m;
    a = emod(a, m);
    while (e > 0) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 invmod64(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1;
    a = emod(a, m);
    while (a != 0) {
        i64 q = g / a;
        g -= q * a; std::swap(g, a);
        x -= q * x1; std::swap(x, x1);
    }
    if (g != 1) die("invmod: not invertible");
    return emod(x, m);
}

bool miller_rabin(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

int legendre_int(i64 a, i64 p) {
    a = emod(a, p);
    if (a == 0) return 0;
    return powmod64(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int v = 0;
    while ((n & 1) == 0) { n >>= 1; ++v; }
    if (v & 1) {
        i64 r = emod(a, 8);
        if (r == 3 || r == 5) sign = -sign;
        if (r == 0 || r == 2 || r == 4 || r == 6) return 0;
    }
    a = emod(a, n);
    // Jacobi on the odd part.
    i64 b = n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 r = b & 7;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, b);
        if ((a & 3) == 3 && (b & 3) == 3) sign = -sign;
        a %= b;
    }
    return b == 1 ? sign : 0;
}

i64 sqrtmod(i64 a, i64 p) {
    a = emod(a, p);
    if (a == 0) return 0;
    if (p == 2) return a;
    if (legendre_int(a, p) != 1) die("sqrtmod of a non-residue");
    if ((p & 3) == 3) return powmod64(a, (p + 1) / 4, p);
    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    i64 z = 2;
    while (legendre_int(z, p) != -1) ++z;
    i64 m = s, c = powmod64(z, q, p), t = powmod64(a, q, p), r = powmod64(a, (q + 1) / 2, p);
    while (t != 1) {
        i64 tt = t;
        i64 i = 0;
        while (tt != 1) { tt = mulmod64(tt, tt, p); ++i; }
        i64 b = powmod64(c, i64(1) << (m - i - 1), p);
        m = i;
        c = mulmod64(b, b, p);
        t = mulmod64(t, c, p);
        r = mulmod64(r, b, p);
    }
    return r;
}

void two_squares(i64 p, i64& x, i64& y) {
    if (p == 2) { x = 1; y = 1; return; }
    if (p % 4 != 1) die("two_squares: p not 1 mod 4");
    i64 r = sqrtmod(p - 1, p);       // r^2 = -1 mod p
    i64 a = p, b = r;
    while (b * b > p) { i64 t = a % b; a = b; b = t; }
    x = b;
    y = isqrt64(p - b * b);
    if (x < y) std::swap(x, y);
    if (x * x + y * y != p) die("two_squares: descent failed");
}

void pell_fundamental(i64 d, i64& x, i64& y, int& norm_sign) {
    i64 a0 = isqrt64(d);
    if (a0 * a0 == d) die("pell: d is a square");
    // sqrt(d) = [a0; a1, a2, ...]; convergents p/q give |p^2 - d q^2| = 1
    // at the end of the period.
    i64 m = 0, k = 1, a = a0;
    i128 p0 = 1, p1 = a0, q0 = 0, q1 = 1;
    for (int it = 0; it < 20000; ++it) {
        m = a * k - m;
        k = (d - m * m) / k;
        a = (a0 + m) / k;
        i128 p2 = add_i128(mul_i128(a, p1), p0);
        i128 q2 = add_i128(mul_i128(a, q1), q0);
        p0 = p1; p1 = p2; q0 = q1; q1 = q2;
        if (k == 1) {
            i128 n = sub_i128(mul_i128(p1, p1), mul_i128(d, mul_i128(q1, q1)));
            x = to_i64(p1);
            y = to_i64(q1);
            norm_sign = n == 1 ? 1 : -1;
            if (n != 1 && n != -1) die("pell: convergent norm not unit");
            return;
        }
    }
    die("pell: period too long");
}

std::vector<std::pair<i64, int>> factor64(i64 n) {
    if (n <= 0) die("factor64: n must be positive");
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

}  // namespace quadfam
