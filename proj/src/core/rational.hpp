#pragma once

#include <cmath>
#include <string>

#include "core/int128.hpp"

namespace quadfam {

// Exact dyadic rational num / 2^lg, normalized so num is odd or zero.
// Character sums and rank bounds only ever produce powers of two in the
// denominator, so this is all the rational arithmetic the library needs.
struct Dyadic {
    i64 num = 0;
    int lg = 0;

    static Dyadic make(i128 n, int lg) {
        while (lg > 0 && n != 0 && (n & 1) == 0) { n >>= 1; --lg; }
        if (n == 0) lg = 0;
        while (lg < 0) { n = mul_i128(n, 2); ++lg; }
        Dyadic d;
        d.num = to_i64(n);
        d.lg = lg;
        return d;
    }

    static Dyadic from_int(i64 n) { return make(n, 0); }

    bool operator==(const Dyadic& o) const { return num == o.num && lg == o.lg; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    Dyadic operator*(const Dyadic& o) const { return make(mul_i128(num, o.num), lg + o.lg); }

    Dyadic operator+(const Dyadic& o) const {
        int l = lg > o.lg ? lg : o.lg;
        i128 a = i128(num) << (l - lg);
        i128 b = i128(o.num) << (l - o.lg);
        return make(add_i128(a, b), l);
    }

    Dyadic pow(int e) const {
        Dyadic r = from_int(1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    bool is_integer() const { return lg == 0; }
    double to_double() const { return std::ldexp(static_cast<double>(num), -lg); }

    // "p/q" with q a power of two, or a plain integer.
    std::string str() const {
        if (lg == 0) return std::to_string(num);
        return std::to_string(num) + "/" + i128_str(i128(1) << lg);
    }
};

inline bool operator<(const Dyadic& a, const Dyadic& b) {
    int l = a.lg > b.lg ? a.lg : b.lg;
    return (i128(a.num) << (l - a.lg)) < (i128(b.num) << (l - b.lg));
}

}  // namespace quadfam
