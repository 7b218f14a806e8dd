#include "rank4/rank4.hpp"

#include "nt/primes.hpp"
#include "symbol/symbol.hpp"

namespace quadfam {

namespace {

// Phi_1 on 2-bit blocks u = (u1 u2), v = (v1 v2): (u1 + v1)(u1 + v2).
inline int phi1_bits(unsigned u, unsigned v) {
    unsigned u1 = (u >> 1) & 1, v1 = (v >> 1) & 1, v2 = v & 1;
    return int((u1 ^ v1) & (u1 ^ v2));
}

}  // namespace

SymbolMatrix item_symbol_matrix(const FamilyTable& T, const int* idxs, int omega,
                                bool check_twist) {
    const NumberField& K = *T.K;
    SymbolMatrix S;
    S.omega = omega;
    for (int i = 0; i < omega; ++i) {
        for (int j = 0; j < omega; ++j) {
            if (i == j) continue;
            const FamilyPrime& gi = T.primes[size_t(idxs[i])];
            const FamilyPrime& pj = T.primes[size_t(idxs[j])];
            int v = legendre(K, gi.gen, pj.P);
            if (v == 0) die("item_symbol_matrix: primes not coprime");
            S.s[size_t(i * kMaxOmega + j)] = int8_t(v);
            if (check_twist) {
                FieldElement tw = fmul(K, gi.gen, *K.epsilon);
                if (legendre(K, tw, pj.P) != v)
                    die("item_symbol_matrix: symbol depends on the generator (unit twist changed it)");
            }
        }
    }
    return S;
}

SymbolMatrix item_symbol_matrix(const FamilyTable& T, const FamilyItem& it, bool check_twist) {
    return item_symbol_matrix(T, it.prime_idx.data(), it.omega, check_twist);
}

i64 mutual_square_count(const SymbolMatrix& S) {
    const int w = S.omega;
    i64 cnt = 0;
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
        bool ok = true;
        // b square mod a: for i in mask, prod over j outside of s(j, i) = 1
        for (int i = 0; i < w && ok; ++i) {
            if (!((mask >> i) & 1)) continue;
            int prod = 1;
            for (int j = 0; j < w; ++j)
                if (!((mask >> j) & 1)) prod *= S.at(j, i);
            ok = prod == 1;
        }
        // a square mod b: for j outside, prod over i in mask of s(i, j) = 1
        for (int j = 0; j < w && ok; ++j) {
            if ((mask >> j) & 1) continue;
            int prod = 1;
            for (int i = 0; i < w; ++i)
                if ((mask >> i) & 1) prod *= S.at(i, j);
            ok = prod == 1;
        }
        if (ok) ++cnt;
    }
    return cnt;
}

Dyadic T_value(const SymbolMatrix& S) {
    const int w = S.omega;
    if (w == 0) return Dyadic::from_int(1);  // empty product, single splitting
    // exponent table for the expansion of chi_a(b) chi_b(a) over 4-tuples
    int E[4][4];
    for (unsigned u = 0; u < 4; ++u)
        for (unsigned v = 0; v < 4; ++v) E[u][v] = phi1_bits(u, v);
    i64 sum = 0;
    int slot[kMaxOmega];
    int sign[kMaxOmega + 1];
    sign[0] = 1;
    // DFS over slot assignments with incremental pairwise products
    int depth = 0;
    slot[0] = -1;
    while (depth >= 0) {
        if (++slot[depth] == 4) { --depth; continue; }
        int sg = sign[depth];
        for (int j = 0; j < depth; ++j) {
            int e1 = E[slot[depth]][slot[j]];
            int e2 = E[slot[j]][slot[depth]];
            if (e1) sg *= S.at(depth, j);
            if (e2) sg *= S.at(j, depth);
        }
        if (depth + 1 == w) {
            sum += sg;
        } else {
            sign[depth + 1] = sg;
            ++depth;
            slot[depth] = -1;
        }
    }
    return Dyadic::make(sum, w);
}

std::optional<Dyadic> T_m_tuple(const SymbolMatrix& S, int m) {
    const int w = S.omega;
    if (m < 1 || m > 3 || w > 12 || m * w > 13) return std::nullopt;
    const int nslots = 1 << (2 * m);
    // parity of Phi_m between slot labels (blocks of 2 bits)
    std::array<std::array<int8_t, 64>, 64> E{};
    for (int u = 0; u < nslots; ++u)
        for (int v = 0; v < nslots; ++v) {
            int par = 0;
            for (int i = 0; i < m; ++i) {
                unsigned ub = (unsigned(u) >> (2 * i)) & 3, vb = (unsigned(v) >> (2 * i)) & 3;
                par ^= phi1_bits(ub, vb);
            }
            E[size_t(u)][size_t(v)] = int8_t(par);
        }
    i64 sum = 0;
    int slot[kMaxOmega];
    int sign[kMaxOmega + 1];
    sign[0] = 1;
    int depth = 0;
    slot[0] = -1;
    if (w == 0) return Dyadic::from_int(1);
    while (depth >= 0) {
        if (++slot[depth] == nslots) { --depth; continue; }
        int sg = sign[depth];
        for (int j = 0; j < depth; ++j) {
            if (E[size_t(slot[depth])][size_t(slot[j])]) sg *= S.at(depth, j);
            if (E[size_t(slot[j])][size_t(slot[depth])]) sg *= S.at(j, depth);
        }
        if (depth + 1 == w) {
            sum += sg;
        } else {
            sign[depth + 1] = sg;
            ++depth;
            slot[depth] = -1;
        }
    }
    return Dyadic::make(sum, m * w);
}

Dyadic rank4_lower_bound(i64 pair_count, int unit_rank) {
    return Dyadic::make(pair_count, unit_rank + 2);
}

int redei_4rank_from_primes(const std::vector<i64>& primes) {
    const int t = int(primes.size());
    if (t == 0 || t > 62) throw GuardError("redei_4rank: need 1..62 prime factors");
    for (i64 p : primes) {
        if (p % 4 != 1 || !miller_rabin(p)) throw GuardError("redei_4rank: prime factors must be 1 mod 4");
    }
    u64 rows[64];
    for (int i = 0; i < t; ++i) {
        u64 row = 0;
        int diag = 0;
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (legendre_int(primes[size_t(j)], primes[size_t(i)]) == -1) {
                row |= u64(1) << j;
                diag ^= 1;
            }
        }
        if (diag) row |= u64(1) << i;
        rows[i] = row;
    }
    int rank = 0;
    for (int c = 0; c < t; ++c) {
        int piv = -1;
        for (int r = rank; r < t; ++r)
            if ((rows[r] >> c) & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < t; ++r)
            if (r != rank && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return t - 1 - rank;
}

int redei_4rank(i64 D) {
    if (D <= 0) throw GuardError("redei_4rank: D must be positive");
    std::vector<i64> ps;
    for (auto [p, e] : factor64(D)) {
        if (e > 1) throw GuardError("redei_4rank: D must be squarefree");
        ps.push_back(p);
    }
    return redei_4rank_from_primes(ps);
}

Rank4Report rank4_report(const FamilyTable& T, const FamilyItem& it, int m, bool check_twist) {
    Rank4Report R;
    R.norm = it.norm;
    R.omega = it.omega;
    R.alpha = it.alpha;
    SymbolMatrix S = item_symbol_matrix(T, it, check_twist);
    R.pair_count = mutual_square_count(S);
    R.T = T_value(S);
    R.m = m;
    if (m > 0) {
        R.Tm = T_m_tuple(S, m);
        R.tm_guard_exceeded = !R.Tm.has_value();
    }
    R.lower_bound = rank4_lower_bound(R.pair_count, T.K->unit_rank);
    if (T.K->n == 1) R.redei = redei_4rank(it.norm);
    return R;
}

}  // namespace quadfam
