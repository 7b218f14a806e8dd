#include "ideal/ideal.hpp"

#include <algorithm>
#include <cmath>

#include "nt/primes.hpp"

namespace quadfam {

namespace {

Ideal ideal_from_hnf(int n, HnfMat h) {
    Ideal a;
    a.n = n;
    a.h = h;
    a.norm = hnf_det(n, h);
    return a;
}

std::vector<std::array<i128, 3>> element_columns(const NumberField& K, const FieldElement& g) {
    std::vector<std::array<i128, 3>> cols;
    FieldElement cur = g;
    for (int j = 0; j < K.n; ++j) {
        cols.push_back({cur.c[0], cur.c[1], cur.c[2]});
        if (j + 1 < K.n) cur = fmul(K, cur, fe(0, 1));
    }
    return cols;
}

}  // namespace

Ideal ideal_unit(const NumberField& K) {
    HnfMat h{};
    for (int i = 0; i < K.n; ++i) h[size_t(i * K.n + i)] = 1;
    return ideal_from_hnf(K.n, h);
}

Ideal ideal_from_element(const NumberField& K, const FieldElement& g) {
    if (is_zero(g)) die("ideal_from_element: zero element");
    return ideal_from_hnf(K.n, hnf_from_columns(K.n, element_columns(K, g)));
}

Ideal ideal_from_prime(const NumberField& K, const PrimeIdeal& P) {
    if (!P.has_hnf) die("ideal_from_prime: prime carries no lattice (cubic index prime)");
    return ideal_from_hnf(K.n, P.hnf);
}

Ideal ideal_mul(const NumberField& K, const Ideal& a, const Ideal& b) {
    std::vector<std::array<i128, 3>> cols;
    for (int i = 0; i < K.n; ++i)
        for (int j = 0; j < K.n; ++j) {
            FieldElement u = ideal_basis_element(a, i);
            FieldElement v = ideal_basis_element(b, j);
            FieldElement w = fmul(K, u, v);
            cols.push_back({w.c[0], w.c[1], w.c[2]});
        }
    return ideal_from_hnf(K.n, hnf_from_columns(K.n, cols));
}

Ideal ideal_sum(const NumberField& K, const Ideal& a, const Ideal& b) {
    std::vector<std::array<i128, 3>> cols;
    for (int j = 0; j < K.n; ++j) {
        FieldElement u = ideal_basis_element(a, j);
        FieldElement v = ideal_basis_element(b, j);
        cols.push_back({u.c[0], u.c[1], u.c[2]});
        cols.push_back({v.c[0], v.c[1], v.c[2]});
    }
    return ideal_from_hnf(K.n, hnf_from_columns(K.n, cols));
}

bool ideal_contains(const Ideal& a, const FieldElement& g) { return hnf_contains(a.n, a.h, g.c); }

bool ideal_coprime(const NumberField& K, const Ideal& a, const Ideal& b) {
    return ideal_sum(K, a, b).norm == 1;
}

bool ideal_divides(const NumberField& K, const Ideal& d, const Ideal& a) {
    (void)K;
    for (int j = 0; j < a.n; ++j)
        if (!ideal_contains(d, ideal_basis_element(a, j))) return false;
    return true;
}

int hnf_lex_compare(const Ideal& a, const Ideal& b) {
    for (size_t i = 0; i < a.h.size(); ++i) {
        if (a.h[i] != b.h[i]) return a.h[i] < b.h[i] ? -1 : 1;
    }
    return 0;
}

FieldElement ideal_basis_element(const Ideal& a, int j) {
    FieldElement g;
    for (int i = 0; i < a.n; ++i) g.c[size_t(i)] = a.h[size_t(i * a.n + j)];
    return g;
}

// ---- Dedekind-Kummer ----

namespace {

// dense polynomials over F_p, degree <= 3, ascending coefficients
struct FpPoly {
    std::array<i64, 5> c{};
    int deg = -1;  // -1: zero

    void trim(i64 p) {
        for (auto& x : c) x = emod(x, p);
        deg = -1;
        for (int i = 4; i >= 0; --i)
            if (c[size_t(i)] != 0) { deg = i; break; }
    }
};

FpPoly fp_from(const std::vector<i64>& poly, i64 p) {
    FpPoly f;
    for (size_t i = 0; i < poly.size() && i < 5; ++i) f.c[i] = emod(poly[i], p);
    f.trim(p);
    return f;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, i64 p) {
    std::array<i64, 9> t{};
    for (int i = 0; i <= a.deg; ++i)
        for (int j = 0; j <= b.deg; ++j)
            t[size_t(i + j)] = emod(t[size_t(i + j)] + mulmod64(a.c[size_t(i)], b.c[size_t(j)], p), p);
    // reduce modulo the monic m
    i64 lead_inv = invmod64(m.c[size_t(m.deg)], p);
    for (int d = int(t.size()) - 1; d >= m.deg; --d) {
        i64 cc = t[size_t(d)];
        if (!cc) continue;
        i64 f = mulmod64(cc, lead_inv, p);
        for (int k = 0; k <= m.deg; ++k)
            t[size_t(d - m.deg + k)] = emod(t[size_t(d - m.deg + k)] - mulmod64(f, m.c[size_t(k)], p), p);
    }
    FpPoly r;
    for (int i = 0; i < 5; ++i) r.c[size_t(i)] = t[size_t(i)];
    r.trim(p);
    return r;
}

FpPoly fp_powmod(FpPoly base, i64 e, const FpPoly& m, i64 p) {
    FpPoly r;
    r.c[0] = 1;
    r.trim(p);
    while (e > 0) {
        if (e & 1) r = fp_mulmod(r, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, i64 p) {
    i64 lead_inv = invmod64(m.c[size_t(m.deg)], p);
    for (int d = a.deg; d >= m.deg; --d) {
        i64 cc = a.c[size_t(d)];
        if (!cc) continue;
        i64 f = mulmod64(cc, lead_inv, p);
        for (int k = 0; k <= m.deg; ++k)
            a.c[size_t(d - m.deg + k)] = emod(a.c[size_t(d - m.deg + k)] - mulmod64(f, m.c[size_t(k)], p), p);
    }
    a.trim(p);
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, i64 p) {
    while (b.deg >= 0) {
        FpPoly r = fp_mod(a, b, p);
        a = b;
        b = r;
    }
    if (a.deg >= 0 && a.c[size_t(a.deg)] != 1) {
        i64 inv = invmod64(a.c[size_t(a.deg)], p);
        for (auto& x : a.c) x = mulmod64(x, inv, p);
    }
    return a;
}

PrimeIdeal make_prime(const NumberField& K, i64 p, int e, int f, std::array<i64, 4> lp) {
    PrimeIdeal P;
    P.p = p;
    P.e = e;
    P.f = f;
    P.local_poly = lp;
    P.n = K.n;
    if (K.n <= 2) {
        P.has_hnf = true;
        if (f == K.n) {  // inert: (p)
            HnfMat h{};
            for (int i = 0; i < K.n; ++i) h[size_t(i * K.n + i)] = p;
            P.hnf = h;
        } else {  // (p, theta - r), lp = x - r
            i64 r = emod(-lp[0], p);
            P.hnf = hnf_from_columns(2, {{{p, 0, 0}}, {{-r, 1, 0}}});
        }
    }
    return P;
}

// roots of a monic split cubic mod p (exactly three distinct roots exist)
std::vector<i64> split_cubic_roots(const FpPoly& f, i64 p) {
    std::vector<i64> roots;
    if (p < 2000) {
        for (i64 r = 0; r < p; ++r) {
            i64 v = emod(f.c[0] + mulmod64(r, emod(f.c[1] + mulmod64(r, emod(f.c[2] + r, p), p), p), p), p);
            if (v == 0) roots.push_back(r);
        }
        return roots;
    }
    // split off one root with gcd((x+s)^((p-1)/2) - 1, f)
    i64 r0 = -1;
    for (i64 s = 0; s < p && r0 < 0; ++s) {
        FpPoly xs;
        xs.c[0] = emod(s, p);
        xs.c[1] = 1;
        xs.trim(p);
        FpPoly pw = fp_powmod(xs, (p - 1) / 2, f, p);
        pw.c[0] = emod(pw.c[0] - 1, p);
        pw.trim(p);
        if (pw.deg < 0) continue;
        FpPoly g = fp_gcd(f, pw, p);
        if (g.deg == 1) {
            r0 = emod(-g.c[0], p);
        } else if (g.deg == 2) {
            // quadratic with two roots
            i64 b = g.c[1], c = g.c[0];
            i64 disc = emod(mulmod64(b, b, p) - 4 * c % p, p);
            i64 sq = sqrtmod(disc, p);
            i64 inv2 = invmod64(2, p);
            r0 = mulmod64(emod(-b + sq, p), inv2, p);
        }
    }
    if (r0 < 0) die("split_cubic_roots: no splitter found");
    // deflate: f / (x - r0) = x^2 + (c2 + r0) x + (c1 + r0 c2 + r0^2)
    i64 A = emod(f.c[2] + r0, p);
    i64 B = emod(f.c[1] + mulmod64(r0, emod(f.c[2] + r0, p), p), p);
    i64 disc = emod(mulmod64(A, A, p) - 4 * B % p, p);
    i64 sq = sqrtmod(disc, p);
    i64 inv2 = invmod64(2, p);
    roots = {r0, mulmod64(emod(-A + sq, p), inv2, p), mulmod64(emod(-A - sq, p), inv2, p)};
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<PrimeIdeal> factor_rational_prime(i64 p, const NumberField& K) {
    if (p < 2 || !miller_rabin(p)) die("factor_rational_prime: p is not prime");
    if (K.n == 1) return {make_prime(K, p, 1, 1, {emod(-K.poly[0], p), 1, 0, 0})};

    if (K.n == 3 && K.index % p == 0)
        throw FieldError("prime divides the index [O_K : Z[theta]]; Dedekind-Kummer inapplicable");

    if (K.n == 2) {
        if (p == 2) return K.two_adic;
        i64 b = emod(K.qb(), p), c = emod(K.qc(), p);
        i64 D = emod(b * b - 4 * c % p, p);
        i64 inv2 = invmod64(2, p);
        if (D == 0) {
            i64 r = mulmod64(emod(-b, p), inv2, p);
            return {make_prime(K, p, 2, 1, {emod(-r, p), 1, 0, 0})};
        }
        if (legendre_int(D, p) == 1) {
            i64 s = sqrtmod(D, p);
            i64 r1 = mulmod64(emod(-b + s, p), inv2, p);
            i64 r2 = mulmod64(emod(-b - s, p), inv2, p);
            if (r1 > r2) std::swap(r1, r2);
            return {make_prime(K, p, 1, 1, {emod(-r1, p), 1, 0, 0}),
                    make_prime(K, p, 1, 1, {emod(-r2, p), 1, 0, 0})};
        }
        return {make_prime(K, p, 1, 2, {emod(K.qc(), p), emod(K.qb(), p), 1, 0})};
    }

    // cubic, p coprime to the index
    FpPoly f = fp_from(K.poly, p);
    FpPoly fd;  // derivative
    for (int i = 1; i <= f.deg; ++i) fd.c[size_t(i - 1)] = mulmod64(f.c[size_t(i)], i, p);
    fd.trim(p);
    FpPoly g = fd.deg < 0 ? f : fp_gcd(f, fd, p);
    if (g.deg > 0) {
        // repeated factor: Galois cubic => totally ramified, f = (x - r)^3
        i64 r;
        if (g.deg == 1) r = mulmod64(emod(-g.c[0], p), invmod64(g.c[1], p), p);
        else if (g.deg == 2) r = mulmod64(emod(-g.c[1], p), invmod64(mulmod64(2, g.c[2], p), p), p);
        else r = emod(-f.c[0], p);  // p = 3: x^3 - r^3, cube roots are unique mod 3
        // verify triple root
        i64 v = emod(f.c[0] + mulmod64(r, emod(f.c[1] + mulmod64(r, emod(f.c[2] + r, p), p), p), p), p);
        if (v != 0) die("factor_rational_prime: ramified root extraction failed");
        return {make_prime(K, p, 3, 1, {emod(-r, p), 1, 0, 0})};
    }
    FpPoly x;
    x.c[1] = 1;
    x.trim(p);
    FpPoly xp = fp_powmod(x, p, f, p);
    xp.c[1] = emod(xp.c[1] - 1, p);
    xp.trim(p);
    FpPoly g1 = xp.deg < 0 ? f : fp_gcd(f, xp, p);
    if (g1.deg <= 0) return {make_prime(K, p, 1, 3, {emod(K.poly[0], p), emod(K.poly[1], p), emod(K.poly[2], p), 1})};
    if (g1.deg == 3) {
        std::vector<PrimeIdeal> out;
        for (i64 r : split_cubic_roots(f, p)) out.push_back(make_prime(K, p, 1, 1, {emod(-r, p), 1, 0, 0}));
        if (out.size() != 3) die("factor_rational_prime: expected three roots");
        return out;
    }
    die("factor_rational_prime: splitting type (1,2) impossible in a Galois cubic");
}

Factorization factor_ideal(const NumberField& K, const Ideal& a) {
    if (K.n > 2) die("factor_ideal: general cubic ideals are out of scope");
    if (a.norm <= 0) die("factor_ideal: zero ideal");
    Factorization F;
    if (a.norm == 1) return F;
    for (auto [p, k] : factor64(a.norm)) {
        int seen = 0;
        for (const auto& P : factor_rational_prime(p, K)) {
            Ideal Pi = ideal_from_prime(K, P);
            Ideal pw = Pi;
            int v = 0;
            while (ideal_divides(K, pw, a)) {
                ++v;
                if (v * P.f >= k) break;
                pw = ideal_mul(K, pw, Pi);
            }
            if (v > 0) F.prime_powers.push_back({P, v});
            seen += v * P.f;
        }
        if (seen != k) die("factor_ideal: valuation bookkeeping failed");
    }
    return F;
}

bool is_squarefree(const NumberField& K, const Ideal& a) {
    for (const auto& [P, e] : factor_ideal(K, a).prime_powers)
        if (e > 1) return false;
    return true;
}

// ---- canonical generators ----

namespace {

struct CanonKey {
    i128 abstr;
    int c0neg, c1neg;
    i64 c0, c1;
    bool operator<(const CanonKey& o) const {
        if (abstr != o.abstr) return abstr < o.abstr;
        if (c0neg != o.c0neg) return c0neg < o.c0neg;
        if (c1neg != o.c1neg) return c1neg < o.c1neg;
        if (c0 != o.c0) return c0 < o.c0;
        return c1 < o.c1;
    }
};

CanonKey real_key(const NumberField& K, const FieldElement& g) {
    i128 tr = elem_trace(K, g);
    return {abs_i128(tr), g.c[0] <= 0, g.c[1] <= 0, g.c[0], g.c[1]};
}

long double real_embedding(const NumberField& K, const FieldElement& g) {
    long double sd = sqrtl((long double)K.field_disc);
    long double th = (-(long double)K.qb() + sd) / 2.0L;
    return (long double)g.c[0] + (long double)g.c[1] * th;
}

}  // namespace

FieldElement canonical_unit_rep(const NumberField& K, const FieldElement& g_in) {
    FieldElement g = g_in;
    if (is_zero(g)) die("canonical_unit_rep: zero");
    if (K.n == 1) return fe(g.c[0] < 0 ? -g.c[0] : g.c[0]);
    if (K.kind == FieldKind::ImagQuadratic) {
        // orbit under torsion; maximize (trace, c1)
        FieldElement best = g;
        FieldElement cur = g;
        bool first = true;
        for (int k = 0; k < K.torsion_order; ++k) {
            if (!first) cur = fmul(K, cur, K.torsion);
            first = false;
            i128 trb = elem_trace(K, best), trc = elem_trace(K, cur);
            if (k > 0 && (trc > trb || (trc == trb && cur.c[1] > best.c[1]))) best = cur;
        }
        return best;
    }
    if (K.kind == FieldKind::RealQuadratic) {
        const FieldElement eps = K.fund_units[0];
        const FieldElement eps_inv = unit_inverse(K, eps);
        long double ev = real_embedding(K, eps);
        FieldElement e_up = ev > 1 ? eps : eps_inv;      // embedding > 1
        FieldElement e_dn = ev > 1 ? eps_inv : eps;
        long double e_val = ev > 1 ? ev : 1.0L / ev;
        i128 nn128 = elem_norm(K, g);
        long double nn = sqrtl((long double)(nn128 < 0 ? -nn128 : nn128));
        long double hi = nn * sqrtl(e_val);
        int guard = 0;
        while (fabsl(real_embedding(K, g)) > hi && guard++ < 4000) g = fmul(K, g, e_dn);
        while (fabsl(real_embedding(K, g)) < nn / sqrtl(e_val) && guard++ < 4000) g = fmul(K, g, e_up);
        FieldElement lo2 = fmul(K, fmul(K, g, e_dn), e_dn);
        FieldElement best = lo2;
        bool first = true;
        FieldElement cur = lo2;
        for (int k = -2; k <= 2; ++k) {
            if (!first) cur = fmul(K, cur, e_up);
            first = false;
            for (FieldElement cand : {cur, fneg(cur)}) {
                if (real_key(K, cand) < real_key(K, best)) best = cand;
            }
        }
        return best;
    }
    die("canonical_unit_rep: unsupported field kind");
}

std::optional<FieldElement> principal_generator_opt(const NumberField& K, const Ideal& a) {
    if (a.norm == 0) die("principal_generator: zero ideal");
    if (K.n == 1) return fe(a.norm);
    if (K.n == 3) die("principal_generator: cubic composite ideals are out of scope");
    const i64 nn = a.norm;
    // (m): norm m^2 with diagonal HNF
    if (a.h[1] == 0 && a.h[0] == a.h[3]) return canonical_unit_rep(K, fe(a.h[0]));
    const i64 b = K.qb(), D = K.field_disc;
    if (K.kind == FieldKind::ImagQuadratic) {
        if (D == -4 && miller_rabin(nn) && nn % 4 == 1) {
            // Cornacchia fast path for prime norms in Q(i)
            i64 x, y;
            two_squares(nn, x, y);
            for (FieldElement g : {fe(x, y), fe(x, -y)})
                if (ideal_contains(a, g)) return canonical_unit_rep(K, g);
            die("principal_generator: cornacchia candidate not in ideal");
        }
        i64 ad = -D;
        i64 ylim = isqrt64(to_i64(mul_i128(4, nn) / ad)) + 1;
        for (i64 y = -ylim; y <= ylim; ++y) {
            i128 t = add_i128(mul_i128(D, mul_i128(y, y)), mul_i128(4, nn));
            if (t < 0) continue;
            i64 t64 = to_i64(t), s;
            if (!is_square64(t64, &s)) continue;
            for (i64 sg : {s, -s}) {
                i128 num = sub_i128(sg, mul_i128(b, y));
                if (num % 2 != 0) continue;
                FieldElement g = fe(to_i64(num / 2), y);
                if (is_zero(g)) continue;
                if (elem_norm(K, g) == nn && ideal_contains(a, g)) return canonical_unit_rep(K, g);
                if (sg == -s && s == 0) break;
            }
        }
        return std::nullopt;  // definite form: search region is exhaustive
    }
    // real quadratic
    long double ev = real_embedding(K, K.fund_units[0]);
    if (ev < 1) ev = 1.0L / ev;
    long double f = sqrtl(ev) + 1.0L / sqrtl(ev);
    i64 ylim = (i64)(sqrtl((long double)nn / (long double)D) * f / 1.0L) + 2;
    for (i64 y = -ylim; y <= ylim; ++y) {
        for (int which = 0; which < 2; ++which) {
            i128 t = mul_i128(D, mul_i128(y, y));
            t = which == 0 ? add_i128(t, mul_i128(4, nn)) : sub_i128(t, mul_i128(4, nn));
            if (t < 0) continue;
            i64 t64 = to_i64(t), s;
            if (!is_square64(t64, &s)) continue;
            for (i64 sg : {s, -s}) {
                i128 num = sub_i128(sg, mul_i128(b, y));
                if (num % 2 != 0) continue;
                FieldElement g = fe(to_i64(num / 2), y);
                if (is_zero(g)) continue;
                i128 nm = elem_norm(K, g);
                if ((nm == nn || nm == -i128(nn)) && ideal_contains(a, g))
                    return canonical_unit_rep(K, g);
                if (sg == -s && s == 0) break;
            }
        }
    }
    return std::nullopt;  // y range is exhaustive after unit reduction
}

FieldElement principal_generator(const NumberField& K, const Ideal& a) {
    auto g = principal_generator_opt(K, a);
    if (!g) throw FieldError("principal_generator: no generator within the provable search bound");
    return *g;
}

}  // namespace quadfam
