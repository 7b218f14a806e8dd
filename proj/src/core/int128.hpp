#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace quadfam {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

[[noreturn]] inline void die(const char* msg) {
    std::fprintf(stderr, "quadfam: fatal: %s\n", msg);
    std::abort();
}

// All intermediate norm/resultant arithmetic goes through these; wrapping
// would silently corrupt exact results, so overflow aborts.
inline i128 mul_i128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) die("128-bit multiply overflow");
    return r;
}

inline i128 add_i128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) die("128-bit add overflow");
    return r;
}

inline i128 sub_i128(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) die("128-bit subtract overflow");
    return r;
}

inline i64 to_i64(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) die("value exceeds 64-bit range");
    return static_cast<i64>(v);
}

inline i128 abs_i128(i128 v) { return v < 0 ? -v : v; }

inline std::string i128_str(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u64 lo;
    std::string s;
    i128 a = neg ? -v : v;
    while (a > 0) {
        lo = static_cast<u64>(a % 10);
        s.push_back(char('0' + lo));
        a /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

inline i64 gcd64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a;
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i128 t = a % b; a = b; b = t; }
    return a;
}

// floor(sqrt(n)) for n >= 0, exact.
inline i64 isqrt64(i64 n) {
    if (n < 0) die("isqrt of negative");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square64(i64 n, i64* root = nullptr) {
    if (n < 0) return false;
    i64 r = isqrt64(n);
    if (root) *root = r;
    return r * r == n;
}

// Euclidean mod: result in [0, m).
inline i64 emod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 emod128(i128 a, i64 m) {
    i64 r = static_cast<i64>(a % m);
    return r < 0 ? r + m : r;
}

}  // namespace quadfam
