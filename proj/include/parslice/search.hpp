#pragma once

#include "parslice/verify.hpp"

namespace parslice {

// One deduplicated h = lambda a1^vee + mu a2^vee + nu a4^vee whose eigenvalue
// multiset on the 28 root vectors of p contains {-1,-1,-1,2,3,9}.
struct SearchCandidate {
    QVec h;                      // (lambda, mu, nu)
    std::vector<Root> minus_one; // eigenroots of eigenvalue -1
    QVec eigenvalues;            // over the roots of p, in p_plus_roots order
    int codim_strict = -1;       // -1 when |minus_one| != 3
    int codim_relaxed = -1;      // y generic on the full (-1)-eigenspace
};

struct SearchReport {
    bool exists_adapted_pair = false;
    bool exists_strict = false;
    bool exists_relaxed = false;
    long enumeration_size = 0; // (triple, value-assignment) systems scanned
    long unique_h = 0;
    bool any_large_minus_one_space = false; // a survivor with > 3 (-1)-eigenroots
    std::vector<SearchCandidate> candidates; // sorted by h
};

// Exhaustive search for an adapted pair of F4 with pi' = pi \ {alpha_3}:
// every h matching six prescribed eigenvalues is pinned down by three
// independent equations among them, so scanning all root triples with all
// value assignments from {-1,2,3,9} is exhaustive. Deterministic for any
// job count.
SearchReport f4_s3_search(uint64_t seed = 0, int jobs = 1);

} // namespace parslice
