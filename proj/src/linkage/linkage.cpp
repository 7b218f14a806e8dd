#include "linkage/linkage.hpp"

#include <algorithm>
#include <set>

namespace quadfam {

int phi1(unsigned ublock, unsigned vblock) {
    unsigned u1 = (ublock >> 1) & 1, v1 = (vblock >> 1) & 1, v2 = vblock & 1;
    return int((u1 ^ v1) & (u1 ^ v2));
}

int phim(const IndexVector& u, const IndexVector& v) {
    if (u.m != v.m) throw LinkageError("phim: length mismatch");
    int s = 0;
    for (int i = 0; i < u.m; ++i)
        s ^= phi1(unsigned(u.bits >> (2 * i)) & 3, unsigned(v.bits >> (2 * i)) & 3);
    return s;
}

bool is_linked(const IndexVector& u, const IndexVector& v) {
    if (u.m != v.m) throw LinkageError("is_linked: length mismatch");
    if (u.bits == v.bits) throw LinkageError("is_linked: arguments must differ");
    return phim(u, v) + phim(v, u) == 1;
}

namespace {

void bron_kerbosch(u64 R, u64 P, u64 X, const u64* adj, std::vector<u64>& out) {
    if (P == 0 && X == 0) {
        out.push_back(R);
        return;
    }
    // pivot with most neighbours in P
    u64 PX = P | X;
    int pivot = -1, best = -1;
    for (u64 t = PX; t; t &= t - 1) {
        int v = __builtin_ctzll(t);
        int deg = __builtin_popcountll(P & adj[v]);
        if (deg > best) { best = deg; pivot = v; }
    }
    u64 cand = P & ~adj[pivot];
    for (u64 t = cand; t; t &= t - 1) {
        int v = __builtin_ctzll(t);
        u64 bit = u64(1) << v;
        bron_kerbosch(R | bit, P & adj[v], X & adj[v], adj, out);
        P &= ~bit;
        X |= bit;
    }
}

}  // namespace

std::vector<UnlinkedSet> max_unlinked_sets(int m) {
    if (m < 1 || m > 3) throw LinkageError("max_unlinked_sets: m must be 1..3");
    const int n = 1 << (2 * m);
    u64 adj[64] = {};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            IndexVector u{m, u64(a)}, v{m, u64(b)};
            if (!is_linked(u, v)) adj[a] |= u64(1) << b;  // unlinked graph
        }
    u64 full = n == 64 ? ~u64(0) : (u64(1) << n) - 1;
    std::vector<u64> cliques;
    bron_kerbosch(0, full, 0, adj, cliques);

    std::vector<UnlinkedSet> out;
    for (u64 c : cliques) {
        UnlinkedSet s;
        for (u64 t = c; t; t &= t - 1) s.elems.push_back(u64(__builtin_ctzll(t)));
        std::sort(s.elems.begin(), s.elems.end());
        if (int(s.elems.size()) > (1 << m))
            die("max_unlinked_sets: set exceeds the 2^m bound");
        s.full_size = int(s.elems.size()) == (1 << m);
        if (s.full_size) {
            // translate by the first element; affine iff the translate is a subspace
            u64 base = s.elems[0];
            std::set<u64> tr;
            for (u64 e : s.elems) tr.insert(e ^ base);
            bool closed = true;
            for (u64 a : tr)
                for (u64 b : tr) closed = closed && tr.count(a ^ b);
            bool contains_zero = std::find(s.elems.begin(), s.elems.end(), u64(0)) != s.elems.end();
            s.subspace = closed && contains_zero;
            s.coset = closed && !contains_zero;
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const UnlinkedSet& a, const UnlinkedSet& b) {
        return a.elems < b.elems;
    });
    return out;
}

i64 max_unlinked_count(int m) {
    i64 c = 0;
    for (const auto& s : max_unlinked_sets(m))
        if (s.full_size) ++c;
    return c;
}

u64 subspace_count(int m) {
    if (m < 1) throw LinkageError("subspace_count: m must be >= 1");
    // product formula prod_{i=0}^{m-1} (2^{2m-i} - 1) / (2^{i+1} - 1)
    i128 num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        num = mul_i128(num, (i128(1) << (2 * m - i)) - 1);
        den = mul_i128(den, (i128(1) << (i + 1)) - 1);
    }
    if (num % den != 0) die("subspace_count: non-integral Gaussian binomial");
    return u64(to_i64(num / den));
}

u64 subspace_count_enumerated(int m) {
    if (m < 1 || m > 2) throw LinkageError("subspace_count_enumerated: m must be 1 or 2");
    const int n = 1 << (2 * m);
    const int size = 1 << m;
    std::set<std::vector<int>> spans;
    // enumerate ordered m-tuples of vectors, record the span when independent
    std::vector<int> gens(size_t(m));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            std::set<int> span{0};
            for (int g : gens) {
                std::set<int> nxt = span;
                for (int v : span) nxt.insert(v ^ g);
                span = nxt;
            }
            if (int(span.size()) == size) spans.insert(std::vector<int>(span.begin(), span.end()));
            return;
        }
        for (int v = 1; v < n; ++v) {
            gens[size_t(depth)] = v;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return spans.size();
}

}  // namespace quadfam
