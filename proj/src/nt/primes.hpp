#pragma once

#include <vector>

#include "core/int128.hpp"

namespace quadfam {

// Plain bit sieve; iterate with for_primes or materialize.
class PrimeSieve {
  public:
    explicit PrimeSieve(i64 limit);
    i64 limit() const { return limit_; }
    bool is_prime(i64 n) const {
        if (n < 2) return false;
        return bits_[size_t(n >> 1)] || n == 2;
    }
    template <class F>
    void for_primes(F&& f) const {
        f(i64(2));
        for (i64 n = 3; n <= limit_; n += 2)
            if (bits_[size_t(n >> 1)]) f(n);
    }
    std::vector<i64> primes() const;

  private:
    i64 limit_;
    std::vector<bool> bits_;  // bits_[k] <=> 2k+1 prime (k >= 1)
};

i64 mulmod64(i64 a, i64 b, i64 m);
i64 powmod64(i64 a, i64 e, i64 m);
i64 invmod64(i64 a, i64 m);
bool miller_rabin(i64 n);

// Legendre symbol over Z via Euler's criterion (p an odd prime).
int legendre_int(i64 a, i64 p);

// Kronecker symbol (a|n), n any nonzero integer.
int kronecker(i64 a, i64 n);

// Square root of a mod odd prime p; a must be a QR. Tonelli-Shanks.
i64 sqrtmod(i64 a, i64 p);

// x^2 + y^2 = p for p = 1 mod 4 (or p = 2), x >= y >= 0. Cornacchia descent.
void two_squares(i64 p, i64& x, i64& y);

// Fundamental solution of x^2 - d y^2 = +-1 (smallest x + y sqrt(d) > 1),
// d > 1 not a square. Continued fraction of sqrt(d); aborts on overflow.
void pell_fundamental(i64 d, i64& x, i64& y, int& norm_sign);

// Trial-division factorization (distinct prime, exponent), n > 0.
std::vector<std::pair<i64, int>> factor64(i64 n);

}  // namespace quadfam
