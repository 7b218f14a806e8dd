#include "field/number_field.hpp"

#include <algorithm>
#include <cctype>

#include "field/cubic_order.hpp"
#include "nt/primes.hpp"

namespace quadfam {

bool is_zero(const FieldElement& a) { return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0; }

FieldElement fadd(const NumberField&, const FieldElement& a, const FieldElement& b) {
    FieldElement r;
    for (int i = 0; i < 3; ++i) r.c[i] = to_i64(add_i128(a.c[i], b.c[i]));
    return r;
}

FieldElement fsub(const NumberField&, const FieldElement& a, const FieldElement& b) {
    FieldElement r;
    for (int i = 0; i < 3; ++i) r.c[i] = to_i64(sub_i128(a.c[i], b.c[i]));
    return r;
}

FieldElement fneg(const FieldElement& a) { return FieldElement{{-a.c[0], -a.c[1], -a.c[2]}}; }

FieldElement fmul(const NumberField& K, const FieldElement& a, const FieldElement& b) {
    if (K.n == 1) return fe(to_i64(mul_i128(a.c[0], b.c[0])));
    if (K.n == 2) {
        // theta^2 = -b theta - c
        i128 p0 = mul_i128(a.c[0], b.c[0]);
        i128 p1 = add_i128(mul_i128(a.c[0], b.c[1]), mul_i128(a.c[1], b.c[0]));
        i128 p2 = mul_i128(a.c[1], b.c[1]);
        i128 r0 = sub_i128(p0, mul_i128(K.qc(), p2));
        i128 r1 = sub_i128(p1, mul_i128(K.qb(), p2));
        return fe(to_i64(r0), to_i64(r1));
    }
    // degree 3: multiply then reduce degree 4 and 3 terms
    i128 t[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i + j] = add_i128(t[i + j], mul_i128(a.c[i], b.c[j]));
    const i64 b2 = K.poly[2], b1 = K.poly[1], b0 = K.poly[0];
    for (int d = 4; d >= 3; --d) {
        i128 c = t[d];
        t[d] = 0;
        t[d - 1] = sub_i128(t[d - 1], mul_i128(c, b2));
        t[d - 2] = sub_i128(t[d - 2], mul_i128(c, b1));
        t[d - 3] = sub_i128(t[d - 3], mul_i128(c, b0));
    }
    return fe(to_i64(t[0]), to_i64(t[1]), to_i64(t[2]));
}

FieldElement fconj(const NumberField& K, const FieldElement& a) {
    if (K.n != 2) die("fconj needs a quadratic field");
    // conj(theta) = -b - theta
    return fe(to_i64(sub_i128(a.c[0], mul_i128(a.c[1], K.qb()))), -a.c[1]);
}

i128 elem_norm(const NumberField& K, const FieldElement& a) {
    if (K.n == 1) return a.c[0];
    if (K.n == 2) {
        // N(x + y theta) = x^2 - b x y + c y^2   for theta^2 + b theta + c = 0
        i128 r = mul_i128(a.c[0], a.c[0]);
        r = sub_i128(r, mul_i128(K.qb(), mul_i128(a.c[0], a.c[1])));
        return add_i128(r, mul_i128(K.qc(), mul_i128(a.c[1], a.c[1])));
    }
    // determinant of the multiplication-by-a matrix on the power basis
    FieldElement col[3];
    col[0] = a;
    col[1] = fmul(K, a, fe(0, 1));
    col[2] = fmul(K, a, fe(0, 0, 1));
    i128 m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = col[j].c[i];
    i128 det = sub_i128(mul_i128(m[0][0], sub_i128(mul_i128(m[1][1], m[2][2]), mul_i128(m[1][2], m[2][1]))),
                        mul_i128(m[0][1], sub_i128(mul_i128(m[1][0], m[2][2]), mul_i128(m[1][2], m[2][0]))));
    det = add_i128(det, mul_i128(m[0][2], sub_i128(mul_i128(m[1][0], m[2][1]), mul_i128(m[1][1], m[2][0]))));
    return det;
}

i128 elem_trace(const NumberField& K, const FieldElement& a) {
    if (K.n == 1) return a.c[0];
    if (K.n == 2) return sub_i128(mul_i128(2, a.c[0]), mul_i128(K.qb(), a.c[1]));
    const i64 b = K.poly[2], c = K.poly[1];
    // Tr(1, theta, theta^2) = (3, -b, b^2 - 2c)
    i128 r = mul_i128(3, a.c[0]);
    r = sub_i128(r, mul_i128(b, a.c[1]));
    return add_i128(r, mul_i128(sub_i128(mul_i128(b, b), mul_i128(2, c)), a.c[2]));
}

FieldElement unit_inverse(const NumberField& K, const FieldElement& u) {
    if (K.n == 1) {
        if (u.c[0] != 1 && u.c[0] != -1) die("unit_inverse: not a unit");
        return u;
    }
    if (K.n == 2) {
        i128 nm = elem_norm(K, u);
        if (nm != 1 && nm != -1) die("unit_inverse: not a unit");
        FieldElement cj = fconj(K, u);
        return nm == 1 ? cj : fneg(cj);
    }
    // Cayley-Hamilton: u (u^2 + t1 u + t2) = -+1 with the charpoly of u.
    i128 nm = elem_norm(K, u);
    if (nm != 1 && nm != -1) die("unit_inverse: not a unit");
    i128 tr = elem_trace(K, u);
    FieldElement u2 = fmul(K, u, u);
    i128 tr2 = elem_trace(K, u2);
    // charpoly x^3 - s1 x^2 + s2 x - s3, s1 = tr, s2 = (tr^2 - tr(u^2))/2
    i128 s2 = (sub_i128(mul_i128(tr, tr), tr2)) / 2;
    FieldElement inv;
    for (int i = 0; i < 3; ++i) {
        i128 v = add_i128(sub_i128(u2.c[i], mul_i128(tr, u.c[i])), i == 0 ? s2 : i128(0));
        inv.c[i] = to_i64(nm == 1 ? v : -v);
    }
    FieldElement chk = fmul(K, u, inv);
    if (!(chk == fe(1))) die("unit_inverse: verification failed");
    return inv;
}

namespace {

i64 squarefree_part(i64 n) {
    i64 s = n < 0 ? -1 : 1;
    n = n < 0 ? -n : n;
    for (auto [p, e] : factor64(n))
        if (e >= 2)
            for (int i = 0; i < e - (e & 1); ++i) n /= p;
    return s * n;
}

bool is_fundamental_disc(i64 D) {
    if (D == 0 || D == 1) return false;
    i64 r = emod(D, 4);
    if (r == 1) return squarefree_part(D) == D;
    if (r == 0) {
        i64 m = D / 4;
        i64 mm = emod(m, 4);
        return (mm == 2 || mm == 3) && squarefree_part(m) == m;
    }
    return false;
}

// Dedekind-Kummer at p = 2 for a quadratic field with maximal Z[theta].
void quadratic_two_data(NumberField& K) {
    const i64 b = K.qb(), c = K.qc();
    auto mk = [&](int e, int f, std::array<i64, 4> lp, HnfMat h) {
        PrimeIdeal P;
        P.p = 2; P.e = e; P.f = f; P.local_poly = lp; P.n = 2; P.has_hnf = true; P.hnf = h;
        K.two_adic.push_back(P);
        K.two_ef.push_back({e, f});
    };
    // poly mod 2
    i64 b2 = emod(b, 2), c2 = emod(c, 2);
    if (b2 == 0 && c2 == 0) {           // x^2: ramified, root 0
        mk(2, 1, {0, 1, 0, 0}, hnf_from_columns(2, {{{2, 0, 0}}, {{0, 1, 0}}}));
    } else if (b2 == 0 && c2 == 1) {    // x^2 + 1 = (x+1)^2: ramified, root 1
        mk(2, 1, {1, 1, 0, 0}, hnf_from_columns(2, {{{2, 0, 0}}, {{1, 1, 0}}}));
    } else if (b2 == 1 && c2 == 0) {    // x(x+1): split
        mk(1, 1, {0, 1, 0, 0}, hnf_from_columns(2, {{{2, 0, 0}}, {{0, 1, 0}}}));
        mk(1, 1, {1, 1, 0, 0}, hnf_from_columns(2, {{{2, 0, 0}}, {{1, 1, 0}}}));
    } else {                            // x^2 + x + 1 irreducible: inert
        mk(1, 2, {1, 1, 1, 0}, hnf_from_columns(2, {{{2, 0, 0}}, {{0, 2, 0}}}));
    }
}

// Order-2-mod-p^2 unit: first hit in a fixed search order over
// zeta^z * eps^e, e in {0,-1,1,...,-6,6}; exact p^2 lattice arithmetic.
void find_epsilon(NumberField& K) {
    if (K.n == 3) {
        // Cyclic cubics have odd conductor, so 2 is unramified and -1 has
        // order exactly 2 mod p^2 for every p | 2 (2 lies in p but not p^2).
        bool unram = true;
        for (auto [e, f] : K.two_ef) unram = unram && e == 1;
        if (unram) K.epsilon = fe(-1);
        return;
    }
    std::vector<HnfMat> sq;  // p^2 lattices
    for (const auto& P : K.two_adic) {
        // square of the prime: HNF of pairwise products of basis columns
        std::vector<std::array<i128, 3>> cols;
        FieldElement g[2];
        for (int j = 0; j < K.n; ++j)
            for (int i = 0; i < K.n; ++i) g[j].c[i] = P.hnf[i * K.n + j];
        for (int i = 0; i < K.n; ++i)
            for (int j = 0; j < K.n; ++j) {
                FieldElement pr = fmul(K, g[i], g[j]);
                cols.push_back({pr.c[0], pr.c[1], pr.c[2]});
            }
        sq.push_back(hnf_from_columns(K.n, cols));
    }
    auto cond = [&](const FieldElement& u) {
        FieldElement um1 = fsub(K, u, fe(1));
        FieldElement u2m1 = fsub(K, fmul(K, u, u), fe(1));
        for (const auto& H : sq) {
            if (hnf_contains(K.n, H, um1.c)) return false;       // u = 1 mod p^2
            if (!hnf_contains(K.n, H, u2m1.c)) return false;     // u^2 != 1 mod p^2
        }
        return true;
    };
    std::vector<int> eorder{0};
    for (int e = 1; e <= 6; ++e) { eorder.push_back(-e); eorder.push_back(e); }
    for (int e : eorder) {
        FieldElement base = fe(1);
        if (!K.fund_units.empty()) {
            FieldElement step = e >= 0 ? K.fund_units[0] : unit_inverse(K, K.fund_units[0]);
            for (int i = 0; i < (e >= 0 ? e : -e); ++i) base = fmul(K, base, step);
        } else if (e != 0) {
            break;
        }
        FieldElement u = base;
        for (int z = 0; z < K.torsion_order; ++z) {
            if (cond(u)) { K.epsilon = u; return; }
            u = fmul(K, u, K.torsion);
        }
    }
}

}  // namespace

NumberField make_field(const std::vector<i64>& poly_in) {
    std::vector<i64> poly = poly_in;
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    int deg = int(poly.size()) - 1;
    if (deg < 1) throw FieldError("polynomial must be non-constant");
    if (deg > 3) throw FieldError("degree > 3 not supported");
    if (poly[deg] != 1) throw FieldError("polynomial must be monic");

    NumberField K;
    K.poly = poly;
    K.n = deg;

    if (deg == 1) {
        K.kind = FieldKind::Rational;
        K.poly_disc = K.field_disc = 1;
        K.unit_rank = 0;
        K.torsion = fe(-1);
        K.torsion_order = 2;
        PrimeIdeal P;
        P.p = 2; P.e = 1; P.f = 1; P.n = 1;
        P.local_poly = {emod(-poly[0], 2), 1, 0, 0};
        P.has_hnf = true;
        P.hnf = HnfMat{2};
        K.two_adic.push_back(P);
        K.two_ef.push_back({1, 1});
        find_epsilon(K);
        return K;
    }

    if (deg == 2) {
        const i64 b = poly[1], c = poly[0];
        i64 D = b * b - 4 * c;
        if (D == 0 || is_square64(D)) throw FieldError("polynomial is reducible");
        if (!is_fundamental_disc(D))
            throw FieldError("Z[theta] is not the maximal order; use a generator with fundamental discriminant");
        K.poly_disc = K.field_disc = D;
        K.index = 1;
        K.kind = D < 0 ? FieldKind::ImagQuadratic : FieldKind::RealQuadratic;
        if (D < 0) {
            K.unit_rank = 0;
            if (D == -4) {
                // i = theta + b/2
                K.torsion = fe(b / 2, 1);
                K.torsion_order = 4;
            } else if (D == -3) {
                // primitive 6th root: theta + (b+1)/2
                K.torsion = fe((b + 1) / 2, 1);
                K.torsion_order = 6;
            } else {
                K.torsion = fe(-1);
                K.torsion_order = 2;
            }
        } else {
            K.unit_rank = 1;
            K.torsion = fe(-1);
            K.torsion_order = 2;
            i64 d = (emod(D, 4) == 0) ? D / 4 : D;
            i64 x, y; int s;
            pell_fundamental(d, x, y, s);
            FieldElement u;
            if (emod(D, 4) == 0) {
                // sqrt(d) = theta + b/2
                u = fe(to_i64(add_i128(x, mul_i128(y, b / 2))), y);
            } else {
                // sqrt(d) = 2 theta + b
                u = fe(to_i64(add_i128(x, mul_i128(y, b))), 2 * y);
            }
            i128 nm = elem_norm(K, u);
            if (nm != 1 && nm != -1) die("fundamental unit has wrong norm");
            K.fund_units.push_back(u);
        }
        quadratic_two_data(K);
        find_epsilon(K);
        return K;
    }

    // degree 3: rational-root test for irreducibility, then the Galois check
    const i64 d0 = poly[0];
    {
        i64 ad = d0 < 0 ? -d0 : d0;
        if (ad == 0) throw FieldError("polynomial is reducible");
        for (i64 r = 1; r * r <= ad; ++r) {
            if (ad % r) continue;
            for (i64 root : {r, -r, ad / r, -(ad / r)}) {
                i128 v = poly[0];
                v = add_i128(v, mul_i128(root, add_i128(poly[1], mul_i128(root, add_i128(poly[2], root)))));
                if (v == 0) throw FieldError("polynomial is reducible");
            }
        }
    }
    const i64 b = poly[2], c = poly[1], d = poly[0];
    i128 disc = mul_i128(18, mul_i128(b, mul_i128(c, d)));
    disc = sub_i128(disc, mul_i128(4, mul_i128(b, mul_i128(b, mul_i128(b, d)))));
    disc = add_i128(disc, mul_i128(mul_i128(b, b), mul_i128(c, c)));
    disc = sub_i128(disc, mul_i128(4, mul_i128(c, mul_i128(c, c))));
    disc = sub_i128(disc, mul_i128(27, mul_i128(d, d)));
    i64 disc64 = to_i64(disc);
    i64 sq;
    if (disc64 <= 0 || !is_square64(disc64, &sq))
        throw FieldError("cubic is not Galois (discriminant is not a positive square)");

    K.kind = FieldKind::CyclicCubic;
    K.poly_disc = disc64;
    auto M = std::make_shared<cubic::MaximalOrder>(cubic::build({poly[0], poly[1], poly[2], 1}));
    K.field_disc = M->field_disc;
    K.index = M->index;
    K.two_ef = M->two_ef;
    K.unit_rank = 2;
    K.torsion = fe(-1);
    K.torsion_order = 2;
    // Units come from the maximal-order search; the public list holds the
    // Z[theta] view (smallest powers with integral power-basis coordinates).
    K.units_complete = M->units_found;
    if (M->units_found) {
        for (const auto& u : cubic::integral_power_units(*M)) K.fund_units.push_back(fe(u[0], u[1], u[2]));
        if (K.fund_units.size() < 2) K.units_complete = false;
    }
    K.cubic = M;
    find_epsilon(K);
    return K;
}

std::pair<FieldElement, std::vector<FieldElement>> unit_group(const NumberField& K) {
    if (K.n == 3 && !K.units_complete)
        throw FieldError("unit search bound exceeded for cubic field");
    return {K.torsion, K.fund_units};
}

std::string elem_str(const NumberField& K, const FieldElement& a) {
    std::string s = std::to_string(a.c[0]);
    for (int i = 1; i < K.n; ++i) {
        s += ";";
        s += std::to_string(a.c[i]);
    }
    return s;
}

std::vector<i64> parse_poly(const std::string& s) {
    // Accepts sums of terms c, c*x^k, cx^k, x, -x^2, ...
    std::vector<i64> coef(8, 0);
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip();
    bool any = false;
    int sign = 1;
    while (i < s.size()) {
        skip();
        if (s[i] == '+') { sign = 1; ++i; skip(); }
        else if (s[i] == '-') { sign = -1; ++i; skip(); }
        else if (any) throw FieldError("polynomial parse error near '" + s.substr(i) + "'");
        if (i >= s.size()) throw FieldError("polynomial parse error: trailing sign");
        i64 c = 1;
        bool have_num = false;
        if (std::isdigit((unsigned char)s[i])) {
            c = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                c = to_i64(add_i128(mul_i128(c, 10), s[i] - '0'));
                ++i;
            }
            have_num = true;
        }
        skip();
        if (i < s.size() && s[i] == '*') { ++i; skip(); }
        int k = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i; skip();
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i; skip();
                if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                    throw FieldError("polynomial parse error: bad exponent");
                k = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                    k = k * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!have_num) {
            throw FieldError("polynomial parse error near '" + s.substr(i) + "'");
        }
        if (k > 7) throw FieldError("degree too large");
        coef[size_t(k)] = to_i64(add_i128(coef[size_t(k)], sign * i128(c)));
        any = true;
        skip();
        sign = 0;  // force explicit +/- between terms
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw FieldError("polynomial parse error near '" + s.substr(i) + "'");
    }
    if (!any) throw FieldError("empty polynomial");
    while (coef.size() > 1 && coef.back() == 0) coef.pop_back();
    return coef;
}

}  // namespace quadfam
