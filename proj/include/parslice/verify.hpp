#pragma once

#include "parslice/chevalley.hpp"
#include "parslice/linalg.hpp"
#include "parslice/pairs.hpp"

#include <map>

namespace parslice {

// Results of the combinatorial conditions that only make sense when the
// candidate carries a Heisenberg cover.
struct CondReport {
    bool applicable = false;
    bool cond1 = false, cond2 = false, cond4 = false;
    std::vector<Root> witness1, witness2; // offending roots, when failing
};

CondReport check_conditions(const ParabolicContext& ctx, const PairCandidate& cand);

// det(alpha_i^vee(s_j)) with rows over pi' (ascending) and columns over S in
// its given order. Throws std::invalid_argument when |S| != dim h_E.
Rat basis_certificate(const ParabolicContext& ctx, const std::vector<Root>& S);

// Matrix of x -> proj([x, y]) for x over the basis of p^- and values over
// the basis of p; the projection kills the root spaces of m^- and the
// h_E-orthogonal part of the Cartan component. y is given by root
// coefficients (supported on the roots of p) plus an optional Cartan part
// over the full coroot basis.
MatQ coadjoint_matrix(const LieTable& L, const ParabolicContext& ctx, const std::map<Root, Rat>& y_roots,
                      const QVec& y_cartan = {});

// Rank of Phi_y(x, x') = B(y, [x, x']) over o x o, where o is spanned by the
// x_{-alpha} for alpha in the punctured cover sets. Returns (rank, dim o).
std::pair<int, int> phi_rank(const LieTable& L, const ParabolicContext& ctx, const PairCandidate& cand);

struct PairCertificate {
    bool has_cover = false;
    bool cond1 = true, cond2 = true, cond4 = true;
    Rat basis_det;
    int phi_rank_value = -1, phi_dim = -1;
    int codim = -1, index = -1;
    bool complement_ok = false;
    QVec h;           // over the coroots of pi', ascending
    QVec eigenvalues; // t(h) for t in T, in T order
    QVec degrees;     // eigenvalues + 1
    bool verdict = false;
};

// Full machine check: conditions where a cover exists, determinant witness,
// exact coadjoint rank, complement direct sum, h with s(h) = -1 on S, and
// the eigenvalue data on T.
PairCertificate regularity_certificate(const LieTable& L, const ParabolicContext& ctx, const PairCandidate& cand);

// Minimum coadjoint codimension over `trials` seeded random points of p; an
// upper bound for the index that should match |E|.
int generic_index(const LieTable& L, const ParabolicContext& ctx, uint64_t seed, int trials);

} // namespace parslice
