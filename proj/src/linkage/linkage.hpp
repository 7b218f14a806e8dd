#pragma once

#include <stdexcept>
#include <vector>

#include "core/int128.hpp"

namespace quadfam {

struct LinkageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of F_2^{2m} viewed as m blocks of 2 bits; block i (0-based) sits at
// bits >> (2*i), as (u1 << 1) | u2.
struct IndexVector {
    int m = 1;
    u64 bits = 0;
};

// (u1 + v1)(u1 + v2) on 2-bit blocks.
int phi1(unsigned ublock, unsigned vblock);

// Blockwise sum of phi1 in F_2. Throws on length mismatch.
int phim(const IndexVector& u, const IndexVector& v);

// Integer sum phim(u,v) + phim(v,u) equals exactly 1. Throws when u = v.
bool is_linked(const IndexVector& u, const IndexVector& v);

struct UnlinkedSet {
    std::vector<u64> elems;  // sorted
    bool full_size = false;  // |set| = 2^m
    bool subspace = false;
    bool coset = false;
};

// All inclusion-maximal pairwise-unlinked subsets of F_2^{2m}, canonically
// sorted; size-2^m sets carry a subspace/coset classification. m <= 3.
std::vector<UnlinkedSet> max_unlinked_sets(int m);

i64 max_unlinked_count(int m);

// Number of m-dimensional subspaces of F_2^{2m} (Gaussian binomial).
u64 subspace_count(int m);

// Brute-force subspace enumeration, m <= 2 (cross-check).
u64 subspace_count_enumerated(int m);

}  // namespace quadfam
