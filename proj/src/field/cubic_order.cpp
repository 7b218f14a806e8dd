#include "field/cubic_order.hpp"

#include <algorithm>
#include <cmath>

#include "core/smallmat.hpp"
#include "nt/primes.hpp"

namespace quadfam::cubic {

namespace {

using V128 = std::array<i128, 3>;

// ---- power-basis polynomial arithmetic with i128 coefficients ----

V128 poly_mul_mod(const std::array<i64, 4>& f, const V128& a, const V128& b) {
    i128 t[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i + j] = add_i128(t[i + j], mul_i128(a[i], b[j]));
    for (int d = 4; d >= 3; --d) {
        i128 c = t[d];
        t[d] = 0;
        for (int k = 0; k < 3; ++k) t[d - 3 + k] = sub_i128(t[d - 3 + k], mul_i128(c, f[k]));
    }
    return {t[0], t[1], t[2]};
}

i128 det3(const i128 m[3][3]) {
    i128 d = sub_i128(mul_i128(m[0][0], sub_i128(mul_i128(m[1][1], m[2][2]), mul_i128(m[1][2], m[2][1]))),
                      mul_i128(m[0][1], sub_i128(mul_i128(m[1][0], m[2][2]), mul_i128(m[1][2], m[2][0]))));
    return add_i128(d, mul_i128(m[0][2], sub_i128(mul_i128(m[1][0], m[2][1]), mul_i128(m[1][1], m[2][0]))));
}

// Order with basis columns cols[j]/den in the power basis; cols kept in HNF.
struct Order {
    std::array<i64, 4> poly;
    i128 cols[3][3];  // cols[i][j]: row i, column j; upper triangular
    i128 den;

    i128 det() const { return mul_i128(cols[0][0], mul_i128(cols[1][1], cols[2][2])); }

    void normalize() {
        i128 g = den;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g = gcd128(g, cols[i][j]);
        if (g > 1) {
            den /= g;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) cols[i][j] /= g;
        }
    }

    // coords of (column j0) * (column j1) over the basis; aborts if the
    // lattice is not multiplicatively closed (i.e. not an order).
    V128 mul_coords(int j0, int j1) const {
        V128 a{cols[0][j0], cols[1][j0], cols[2][j0]};
        V128 b{cols[0][j1], cols[1][j1], cols[2][j1]};
        V128 p = poly_mul_mod(poly, a, b);
        // solve cols * x = p / den
        V128 q;
        for (int i = 0; i < 3; ++i) {
            if (p[i] % den != 0) die("order: product not in lattice (den)");
            q[i] = p[i] / den;
        }
        V128 x{};
        for (int r = 2; r >= 0; --r) {
            i128 acc = q[r];
            for (int j = r + 1; j < 3; ++j) acc = sub_i128(acc, mul_i128(cols[r][j], x[j]));
            if (acc % cols[r][r] != 0) die("order: product not in lattice (solve)");
            x[r] = acc / cols[r][r];
        }
        return x;
    }
};

Order order_from_cols(const std::array<i64, 4>& poly, std::vector<V128> cols, i128 den) {
    HnfMat h = hnf_from_columns(3, std::move(cols));
    Order O;
    O.poly = poly;
    O.den = den;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) O.cols[i][j] = h[i * 3 + j];
    O.normalize();
    return O;
}

// structure constants: prod[j0][j1] = coords of w_{j0} w_{j1}
using MulTable = std::array<std::array<V128, 3>, 3>;

MulTable mult_table(const Order& O) {
    MulTable t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = O.mul_coords(i, j);
    return t;
}

// ---- F_p linear algebra on 3-vectors ----

using FpVec = std::array<i64, 3>;

FpVec fp_mul(const MulTable& t, const FpVec& a, const FpVec& b, i64 p) {
    V128 acc{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < 3; ++j) {
            if (!b[j]) continue;
            i128 c = mul_i128(a[i], b[j]);
            for (int k = 0; k < 3; ++k) acc[k] = add_i128(acc[k], mul_i128(c, t[i][j][k]));
        }
    }
    return {emod128(acc[0], p), emod128(acc[1], p), emod128(acc[2], p)};
}

FpVec fp_pow(const MulTable& t, FpVec a, i64 e, i64 p) {
    FpVec r{1, 0, 0};  // w_0 = 1 (guaranteed: orders contain 1, HNF puts it first)
    while (e > 0) {
        if (e & 1) r = fp_mul(t, r, a, p);
        a = fp_mul(t, a, a, p);
        e >>= 1;
    }
    return r;
}

// kernel of a 3x3 matrix mod p (columns = images of e_j); returns basis vectors
std::vector<FpVec> fp_kernel(std::array<FpVec, 3> colsT, i64 p) {
    // rows of the matrix: m[r][c]
    i64 m[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = emod(colsT[c][r], p);
    int pivot_col[3] = {-1, -1, -1};
    int rank = 0;
    for (int c = 0; c < 3 && rank < 3; ++c) {
        int pr = -1;
        for (int r = rank; r < 3; ++r)
            if (m[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[pr], m[rank]);
        i64 inv = invmod64(m[rank][c], p);
        for (int cc = 0; cc < 3; ++cc) m[rank][cc] = mulmod64(m[rank][cc], inv, p);
        for (int r = 0; r < 3; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            i64 f = m[r][c];
            for (int cc = 0; cc < 3; ++cc) m[r][cc] = emod(m[r][cc] - mulmod64(f, m[rank][cc], p), p);
        }
        pivot_col[rank] = c;
        ++rank;
    }
    std::vector<FpVec> ker;
    for (int c = 0; c < 3; ++c) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r) is_pivot = is_pivot || pivot_col[r] == c;
        if (is_pivot) continue;
        FpVec v{0, 0, 0};
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = emod(-m[r][c], p);
        ker.push_back(v);
    }
    return ker;
}

// solve upper-triangular T x = b exactly over Z (aborts if not solvable)
V128 solve_ut(const i128 T[3][3], const V128& b) {
    V128 x{};
    for (int r = 2; r >= 0; --r) {
        i128 acc = b[r];
        for (int j = r + 1; j < 3; ++j) acc = sub_i128(acc, mul_i128(T[r][j], x[j]));
        if (acc % T[r][r] != 0) die("solve_ut: not integral");
        x[r] = acc / T[r][r];
    }
    return x;
}

// One p-enlargement step; returns true if the order grew.
bool enlarge_at(Order& O, i64 p) {
    MulTable t = mult_table(O);
    // radical of O/pO = kernel of x -> x^(p^k), p^k >= 3
    i64 q = p;
    while (q < 3) q *= p;
    std::array<FpVec, 3> frob;
    for (int j = 0; j < 3; ++j) {
        FpVec e{0, 0, 0};
        e[j] = 1;
        frob[j] = fp_pow(t, e, q, p);
    }
    auto rad = fp_kernel(frob, p);
    // I = pO + radical lift, in O-coordinates
    std::vector<V128> icols;
    for (int j = 0; j < 3; ++j) {
        V128 c{0, 0, 0};
        c[j] = p;
        icols.push_back(c);
    }
    for (const auto& v : rad) icols.push_back({v[0], v[1], v[2]});
    HnfMat ih = hnf_from_columns(3, icols);
    i128 T[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) T[r][c] = ih[r * 3 + c];

    // multiplier condition: v/p in End(I)  <=>  T^-1 (M_v t_s) = 0 mod p for all s.
    // Rows of the stacked constraint matrix, as a linear map of v in F_p^3.
    std::vector<std::array<i64, 3>> rows;  // each row: coefficients of v
    for (int s = 0; s < 3; ++s) {
        V128 ts{T[0][s], T[1][s], T[2][s]};
        // y(v) = T^-1 ( v * t_s ), linear in v; compute columns for v = e_k
        V128 ycols[3];
        for (int k = 0; k < 3; ++k) {
            // e_k * t_s in O coords: sum_j ts[j] * t[k][j]
            V128 prod{0, 0, 0};
            for (int j = 0; j < 3; ++j)
                for (int r = 0; r < 3; ++r) prod[r] = add_i128(prod[r], mul_i128(ts[j], t[k][j][r]));
            ycols[k] = solve_ut(T, prod);
        }
        for (int r = 0; r < 3; ++r)
            rows.push_back({emod128(ycols[0][r], p), emod128(ycols[1][r], p), emod128(ycols[2][r], p)});
    }
    // kernel of the stacked 9x3 system
    i64 m[9][3];
    int nr = int(rows.size());
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = rows[size_t(r)][size_t(c)];
    int rank = 0;
    int pivot_col[3] = {-1, -1, -1};
    for (int c = 0; c < 3 && rank < nr; ++c) {
        int pr = -1;
        for (int r = rank; r < nr; ++r)
            if (m[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (int cc = 0; cc < 3; ++cc) std::swap(m[pr][cc], m[rank][cc]);
        i64 inv = invmod64(m[rank][c], p);
        for (int cc = 0; cc < 3; ++cc) m[rank][cc] = mulmod64(m[rank][cc], inv, p);
        for (int r = 0; r < nr; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            i64 f = m[r][c];
            for (int cc = 0; cc < 3; ++cc) m[r][cc] = emod(m[r][cc] - mulmod64(f, m[rank][cc], p), p);
        }
        pivot_col[rank] = c;
        ++rank;
    }
    std::vector<FpVec> ker;
    for (int c = 0; c < 3; ++c) {
        bool piv = false;
        for (int r = 0; r < rank; ++r) piv = piv || pivot_col[r] == c;
        if (piv) continue;
        FpVec v{0, 0, 0};
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = emod(-m[r][c], p);
        ker.push_back(v);
    }
    if (ker.empty()) return false;
    // O' = O + (1/p) * span(kernel)
    std::vector<V128> cols;
    for (int j = 0; j < 3; ++j) cols.push_back({mul_i128(p, O.cols[0][j]), mul_i128(p, O.cols[1][j]), mul_i128(p, O.cols[2][j])});
    for (const auto& v : ker) {
        V128 pc{0, 0, 0};
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) pc[i] = add_i128(pc[i], mul_i128(v[j], O.cols[i][j]));
        cols.push_back(pc);
    }
    Order O2 = order_from_cols(O.poly, std::move(cols), mul_i128(O.den, p));
    bool grew = O2.det() != O.det() || O2.den != O.den;
    if (grew) O = O2;
    return grew;
}

// ---- real embeddings ----

long double eval_cubic(const std::array<i64, 4>& f, long double x) {
    return ((x + (long double)f[2]) * x + (long double)f[1]) * x + (long double)f[0];
}

void real_roots(const std::array<i64, 4>& f, long double out[3]) {
    // totally real cubic: critical points split the line into three monotone
    // pieces, one root each; bisection is plenty at this scale.
    long double b = (long double)f[2], c = (long double)f[1];
    long double disc = 4.0L * b * b - 12.0L * c;
    if (disc <= 0) die("real_roots: not three real roots");
    long double s = sqrtl(disc);
    long double t1 = (-2.0L * b - s) / 6.0L, t2 = (-2.0L * b + s) / 6.0L;
    long double bound = 1.0L;
    for (int i = 0; i < 3; ++i) bound = std::max(bound, fabsl((long double)f[i]));
    bound = 1.0L + bound;
    long double brs[3][2] = {{-bound, t1}, {t1, t2}, {t2, bound}};
    for (int k = 0; k < 3; ++k) {
        long double lo = brs[k][0], hi = brs[k][1];
        long double flo = eval_cubic(f, lo);
        for (int it = 0; it < 200; ++it) {
            long double mid = (lo + hi) / 2;
            long double fm = eval_cubic(f, mid);
            if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; }
            else hi = mid;
        }
        out[k] = (lo + hi) / 2;
    }
}

// ---- Fincke-Pohst on a rank-3 lattice with embedding columns E[.][j] ----

template <class F>
void enumerate_short(const long double E[3][3], long double R2, F&& visit) {
    long double G[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long double s = 0;
            for (int e = 0; e < 3; ++e) s += E[e][i] * E[e][j];
            G[i][j] = s;
        }
    // Cholesky G = U^T U, U upper
    long double U[3][3] = {};
    for (int i = 0; i < 3; ++i) {
        long double s = G[i][i];
        for (int k = 0; k < i; ++k) s -= U[k][i] * U[k][i];
        if (s <= 0) die("enumerate_short: degenerate lattice");
        U[i][i] = sqrtl(s);
        for (int j = i + 1; j < 3; ++j) {
            long double t = G[i][j];
            for (int k = 0; k < i; ++k) t -= U[k][i] * U[k][j];
            U[i][j] = t / U[i][i];
        }
    }
    const long double pad = 1e-9L;
    long double lim3 = sqrtl(R2) / U[2][2] + pad;
    for (i64 v3 = 0; v3 <= (i64)lim3; ++v3) {
        long double q3 = U[2][2] * v3;
        long double rem2 = R2 - q3 * q3;
        if (rem2 < -pad) break;
        rem2 = std::max(rem2, 0.0L);
        long double c2 = -(U[1][2] * v3) / U[1][1];
        long double w2 = sqrtl(rem2) / U[1][1] + pad;
        i64 lo2 = (i64)ceill(c2 - w2), hi2 = (i64)floorl(c2 + w2);
        if (v3 == 0) lo2 = std::max<i64>(lo2, 0);
        for (i64 v2 = lo2; v2 <= hi2; ++v2) {
            long double q2 = U[1][1] * v2 + U[1][2] * v3;
            long double rem1 = rem2 - q2 * q2;
            if (rem1 < -pad) continue;
            rem1 = std::max(rem1, 0.0L);
            long double c1 = -(U[0][1] * v2 + U[0][2] * v3) / U[0][0];
            long double w1 = sqrtl(rem1) / U[0][0] + pad;
            i64 lo1 = (i64)ceill(c1 - w1), hi1 = (i64)floorl(c1 + w1);
            if (v3 == 0 && v2 == 0) lo1 = std::max<i64>(lo1, 1);
            for (i64 v1 = lo1; v1 <= hi1; ++v1) visit(Vec3{v1, v2, v3});
        }
    }
}

struct LogVec {
    long double a[3];
    long double norm2() const { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2]; }
    long double sup() const { return std::max({fabsl(a[0]), fabsl(a[1]), fabsl(a[2])}); }
};

}  // namespace

i128 norm_basis(const MaximalOrder& M, const Vec3& v) {
    // power-basis numerator coordinates
    V128 pc{0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) pc[i] = add_i128(pc[i], mul_i128(M.B[i][j], v[j]));
    std::array<i64, 4> f = M.poly;
    V128 col1 = poly_mul_mod(f, pc, {0, 1, 0});
    V128 col2 = poly_mul_mod(f, pc, {0, 0, 1});
    i128 m[3][3];
    for (int i = 0; i < 3; ++i) { m[i][0] = pc[i]; m[i][1] = col1[i]; m[i][2] = col2[i]; }
    i128 det = det3(m);
    i128 d3 = mul_i128(M.den, mul_i128(M.den, M.den));
    if (det % d3 != 0) die("norm_basis: non-integral norm");
    return det / d3;
}

std::vector<std::pair<int, int>> splitting(const MaximalOrder& M, i64 p) {
    Order O;
    O.poly = M.poly;
    O.den = M.den;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) O.cols[i][j] = M.B[i][j];
    MulTable t = mult_table(O);
    i64 q = p;
    while (q < 3) q *= p;
    std::array<FpVec, 3> frob;
    for (int j = 0; j < 3; ++j) {
        FpVec e{0, 0, 0};
        e[j] = 1;
        frob[j] = fp_pow(t, e, q, p);
    }
    if (!fp_kernel(frob, p).empty()) return {{3, 1}};  // ramified, totally (Galois)
    bool ident = true;
    for (int j = 0; j < 3; ++j) {
        FpVec e{0, 0, 0};
        e[j] = 1;
        FpVec img = fp_pow(t, e, p, p);
        ident = ident && img == e;
    }
    if (ident) return {{1, 1}, {1, 1}, {1, 1}};
    return {{1, 3}};
}

std::vector<Vec3> integral_power_units(const MaximalOrder& M) {
    Order O;
    O.poly = M.poly;
    O.den = M.den;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) O.cols[i][j] = M.B[i][j];
    std::vector<Vec3> out;
    for (const auto& u : M.units) {
        // compute u^k in power-basis rationals until integral (k <= 12)
        V128 cur{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) cur[i] = add_i128(cur[i], mul_i128(M.B[i][j], u[j]));
        V128 pw = cur;
        i128 den = M.den, dpw = M.den;
        for (int k = 1; k <= 12; ++k) {
            if (k > 1) {
                pw = poly_mul_mod(M.poly, pw, cur);
                dpw = mul_i128(dpw, den);
                i128 g = gcd128(gcd128(pw[0], pw[1]), gcd128(pw[2], dpw));
                if (g > 1) { for (auto& x : pw) x /= g; dpw /= g; }
            }
            if (dpw == 1) {
                out.push_back({to_i64(pw[0]), to_i64(pw[1]), to_i64(pw[2])});
                break;
            }
        }
    }
    return out;
}

MaximalOrder build(const std::array<i64, 4>& poly) {
    MaximalOrder M;
    M.poly = poly;
    {
        const i64 b = poly[2], c = poly[1], d = poly[0];
        i128 disc = mul_i128(18, mul_i128(b, mul_i128(c, d)));
        disc = sub_i128(disc, mul_i128(4, mul_i128(b, mul_i128(b, mul_i128(b, d)))));
        disc = add_i128(disc, mul_i128(mul_i128(b, b), mul_i128(c, c)));
        disc = sub_i128(disc, mul_i128(4, mul_i128(c, mul_i128(c, c))));
        disc = sub_i128(disc, mul_i128(27, mul_i128(d, d)));
        M.poly_disc = to_i64(disc);
    }

    Order O;
    O.poly = poly;
    O.den = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) O.cols[i][j] = (i == j) ? 1 : 0;
    for (auto [p, e] : factor64(M.poly_disc)) {
        if (e < 2) continue;
        while (enlarge_at(O, p)) {}
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M.B[i][j] = to_i64(O.cols[i][j]);
    M.den = to_i64(O.den);
    i128 d3 = mul_i128(O.den, mul_i128(O.den, O.den));
    if (d3 % O.det() != 0) die("maximal order: index not integral");
    M.index = to_i64(d3 / O.det());
    if (M.poly_disc % (M.index * M.index) != 0) die("maximal order: discriminant mismatch");
    M.field_disc = M.poly_disc / (M.index * M.index);

    real_roots(poly, M.roots);
    for (int e = 0; e < 3; ++e)
        for (int j = 0; j < 3; ++j) {
            long double v = 0, x = 1;
            for (int i = 0; i < 3; ++i) {
                v += (long double)M.B[i][j] * x;
                x *= M.roots[e];
            }
            M.emb[e][j] = v / (long double)M.den;
        }

    M.two_ef = splitting(M, 2);

    // ---- unit search: short vectors with |N| = 1 ----
    MulTable t = mult_table(O);
    auto basis_mul = [&](const Vec3& a, const Vec3& b) {
        V128 acc{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                i128 c = mul_i128(a[i], b[j]);
                for (int k = 0; k < 3; ++k) acc[k] = add_i128(acc[k], mul_i128(c, t[i][j][k]));
            }
        return Vec3{to_i64(acc[0]), to_i64(acc[1]), to_i64(acc[2])};
    };
    auto logvec = [&](const Vec3& v) {
        LogVec L;
        for (int e = 0; e < 3; ++e) {
            long double s = 0;
            for (int j = 0; j < 3; ++j) s += M.emb[e][j] * v[j];
            L.a[e] = logl(fabsl(s));
        }
        return L;
    };
    std::vector<Vec3> units;
    std::vector<LogVec> logs;
    long double R2 = 24.0L;
    while (units.size() < 2 && R2 < 1e12L) {
        std::vector<Vec3> found;
        enumerate_short(M.emb, R2, [&](const Vec3& v) {
            i128 nm = norm_basis(M, v);
            if (nm == 1 || nm == -1) found.push_back(v);
        });
        std::sort(found.begin(), found.end(), [&](const Vec3& a, const Vec3& b) {
            auto t2 = [&](const Vec3& v) {
                long double s = 0;
                for (int e = 0; e < 3; ++e) {
                    long double x = 0;
                    for (int j = 0; j < 3; ++j) x += M.emb[e][j] * v[j];
                    s += x * x;
                }
                return s;
            };
            return t2(a) < t2(b);
        });
        for (const auto& v : found) {
            if (v == Vec3{1, 0, 0} || v == Vec3{-1, 0, 0}) continue;
            LogVec L = logvec(v);
            if (units.empty()) {
                if (L.norm2() > 1e-12L) { units.push_back(v); logs.push_back(L); }
            } else if (units.size() == 1) {
                long double cross = 0;
                // area of the pair in the trace-zero plane: use 2D determinant
                long double x1 = logs[0].a[0], y1 = logs[0].a[1];
                long double x2 = L.a[0], y2 = L.a[1];
                cross = x1 * y2 - y1 * x2;
                if (fabsl(cross) > 1e-9L * (1 + fabsl(x1) + fabsl(x2))) {
                    units.push_back(v);
                    logs.push_back(L);
                    break;
                }
            }
        }
        R2 *= 2;
    }
    if (units.size() == 2) {
        // Lagrange-reduce the log lattice; keeps the principality radius small.
        auto dot = [](const LogVec& a, const LogVec& b) {
            return a.a[0] * b.a[0] + a.a[1] * b.a[1] + a.a[2] * b.a[2];
        };
        bool again = true;
        int guard = 0;
        while (again && guard++ < 64) {
            again = false;
            if (logs[0].norm2() > logs[1].norm2()) {
                std::swap(logs[0], logs[1]);
                std::swap(units[0], units[1]);
            }
            long double mu = dot(logs[0], logs[1]) / logs[0].norm2();
            i64 r = (i64)llroundl(mu);
            if (r != 0) {
                // u2 <- u2 * u1^{-r}; u1^{-1} = sign * (u1^2 - tr(u1) u1 + s2)
                // by Cayley-Hamilton, exact in basis coordinates.
                Vec3 step = units[0];
                i128 nm = norm_basis(M, step);
                Vec3 u2b = basis_mul(step, step);
                i128 trB[3];
                {
                    const i64 b = poly[2], c = poly[1];
                    i128 trpow[3] = {3, -b, sub_i128(mul_i128(b, b), mul_i128(2, c))};
                    for (int j = 0; j < 3; ++j) {
                        i128 s = 0;
                        for (int i = 0; i < 3; ++i) s = add_i128(s, mul_i128(M.B[i][j], trpow[i]));
                        if (s % M.den != 0) die("trace not integral");
                        trB[j] = s / M.den;
                    }
                }
                auto btrace = [&](const Vec3& v) {
                    i128 s = 0;
                    for (int j = 0; j < 3; ++j) s = add_i128(s, mul_i128(trB[j], v[j]));
                    return s;
                };
                i128 tr = btrace(step);
                i128 tr2 = btrace(u2b);
                i128 s2 = (sub_i128(mul_i128(tr, tr), tr2)) / 2;
                Vec3 uinv;
                for (int k = 0; k < 3; ++k) {
                    i128 v = sub_i128(u2b[k], mul_i128(tr, step[k]));
                    if (k == 0) v = add_i128(v, s2);
                    uinv[k] = to_i64(nm == 1 ? v : -v);
                }
                Vec3 mulstep = r > 0 ? uinv : step;
                for (i64 i = 0; i < (r > 0 ? r : -r); ++i) units[1] = basis_mul(units[1], mulstep);
                logs[1] = logvec(units[1]);
                again = true;
            }
        }
        M.units = units;
        M.units_found = true;
    } else {
        M.units_found = false;
        M.notes.push_back("unit search bound exceeded");
    }

    // ---- class number one certification (Minkowski sweep) ----
    if (!M.units_found) {
        M.class_number_decided = false;
        M.notes.push_back("class number undecided: no unit lattice");
        return M;
    }
    long double D = (logs[0].sup() + logs[1].sup()) / 2;
    i64 fsq = isqrt64(M.field_disc);
    i64 mink = (2 * fsq) / 9;
    bool h1 = true;
    for (i64 p = 2; p <= mink && h1; ++p) {
        if (!miller_rabin(p)) continue;
        auto spl = splitting(M, p);
        if (spl.size() == 1 && spl[0].second == 3) continue;  // inert: (p) principal
        if (spl[0].first == 3) die("ramified prime below Minkowski bound in cyclic cubic");
        // split completely: one prime lattice is enough (conjugates share the class property)
        // find a in O/p with separable degree-3 minimal polynomial
        i64 root = -1;
        std::array<i64, 9> hm{};
        bool built = false;
        for (i64 c = 0; c < p && !built; ++c) {
            FpVec a{0, c == 0 ? i64(1) : c, c == 0 ? i64(0) : i64(1)};  // w1 + c w2 style probes
            // powers of a
            FpVec pw[4];
            pw[0] = {1, 0, 0};
            for (int k = 1; k <= 3; ++k) pw[k] = fp_mul(t, pw[k - 1], a, p);
            // find monic cubic relation: a^3 = x2 a^2 + x1 a + x0
            std::array<FpVec, 3> cols{pw[0], pw[1], pw[2]};
            i64 mm[3][4];
            for (int r = 0; r < 3; ++r) {
                for (int ccc = 0; ccc < 3; ++ccc) mm[r][ccc] = cols[size_t(ccc)][size_t(r)];
                mm[r][3] = pw[3][size_t(r)];
            }
            // solve 3x3; if singular, min poly degree < 3: skip this a
            // Gaussian elimination with the augmented column
            bool sing = false;
            int rk = 0;
            int pc2[3] = {-1, -1, -1};
            for (int ccc = 0; ccc < 3 && rk < 3; ++ccc) {
                int pr = -1;
                for (int r = rk; r < 3; ++r)
                    if (mm[r][ccc] != 0) { pr = r; break; }
                if (pr < 0) { sing = true; break; }
                for (int k = 0; k < 4; ++k) std::swap(mm[pr][k], mm[rk][k]);
                i64 inv = invmod64(mm[rk][ccc], p);
                for (int k = 0; k < 4; ++k) mm[rk][k] = mulmod64(mm[rk][k], inv, p);
                for (int r = 0; r < 3; ++r) {
                    if (r == rk || mm[r][ccc] == 0) continue;
                    i64 fmu = mm[r][ccc];
                    for (int k = 0; k < 4; ++k) mm[r][k] = emod(mm[r][k] - mulmod64(fmu, mm[rk][k], p), p);
                }
                pc2[rk] = ccc;
                ++rk;
            }
            if (sing) continue;
            i64 x0 = mm[0][3], x1 = mm[1][3], x2 = mm[2][3];
            (void)pc2;
            // minimal polynomial m(X) = X^3 - x2 X^2 - x1 X - x0; roots mod p
            int nroots = 0;
            i64 r0 = -1;
            for (i64 r = 0; r < p; ++r) {
                i64 v = emod(mulmod64(emod(mulmod64(emod(r - x2, p), r, p) - x1, p), r, p) - x0, p);
                if (v == 0) { ++nroots; if (r0 < 0) r0 = r; }
            }
            if (nroots != 3) continue;
            // prime = pO + (a - r0) O
            std::vector<V128> cols2;
            for (int j = 0; j < 3; ++j) {
                V128 cc{0, 0, 0};
                cc[j] = p;
                cols2.push_back(cc);
            }
            FpVec am{a[0], a[1], a[2]};
            am[0] = emod(am[0] - r0, p);
            for (int j = 0; j < 3; ++j) {
                FpVec ej{0, 0, 0};
                ej[j] = 1;
                FpVec pr2 = fp_mul(t, am, ej, p);
                cols2.push_back({pr2[0], pr2[1], pr2[2]});
            }
            hm = hnf_from_columns(3, cols2);
            i64 det = hm[0] * hm[4] * hm[8];
            if (det != p) continue;  // not a norm-p lattice; try next probe
            root = r0;
            built = true;
        }
        if (!built) die("could not build split prime lattice");
        (void)root;
        // embedding columns of the prime lattice
        long double E[3][3];
        for (int e = 0; e < 3; ++e)
            for (int j = 0; j < 3; ++j) {
                long double s = 0;
                for (int k = 0; k < 3; ++k) s += M.emb[e][k] * hm[size_t(k * 3 + j)];
                E[e][j] = s;
            }
        long double base = 3.0L * powl((long double)p, 2.0L / 3.0L);
        long double rmax = base * expl(2.0L * D) * 1.05L + 1.0L;
        bool principal = false;
        long double r2 = std::min(rmax, base * 4.0L);
        for (;;) {
            enumerate_short(E, r2, [&](const Vec3& v) {
                if (principal) return;
                Vec3 u;
                for (int k = 0; k < 3; ++k)
                    u[k] = to_i64(add_i128(add_i128(mul_i128(hm[size_t(k * 3 + 0)], v[0]), mul_i128(hm[size_t(k * 3 + 1)], v[1])),
                                           mul_i128(hm[size_t(k * 3 + 2)], v[2])));
                i128 nm = norm_basis(M, u);
                if (nm == p || nm == -p) principal = true;
            });
            if (principal || r2 >= rmax) break;
            r2 = std::min(rmax, r2 * 4.0L);
        }
        if (!principal) {
            h1 = false;
            M.notes.push_back("non-principal prime of norm " + std::to_string(p));
        }
    }
    M.class_number_one = h1;
    M.class_number_decided = true;
    return M;
}

}  // namespace quadfam::cubic
