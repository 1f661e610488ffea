#pragma once

#include "parslice/parabolic.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace parslice {

// Candidate (S, T) data for an adapted pair. Roots keep their construction
// order; determinant witnesses depend on it. Tabulated cases carry no
// Heisenberg cover and are checked by the direct rank certificate only.
struct PairCandidate {
    std::vector<Root> S_plus, S_minus, T_plus, T_minus;
    bool hardcoded = false;
    std::map<Root, std::vector<Root>> cover; // centre -> Heisenberg set
    std::map<Root, Rat> coeff;               // coefficient of x_gamma in y (default 1)
    std::string provenance;

    std::vector<Root> S() const;
    std::vector<Root> T() const;
    Rat coeff_of(const Root& r) const;
};

struct NotCovered {
    std::string reason;
};

using CandidateResult = std::variant<PairCandidate, NotCovered>;

CandidateResult construct_candidate(const ParabolicContext& ctx);

inline bool is_covered(const CandidateResult& r) { return std::holds_alternative<PairCandidate>(r); }

// Validates and returns the cover of a non-tabulated candidate: the
// Heisenberg sets must partition Delta^+ \ T^+ and Delta^-_{pi'} \ T^-.
// Throws std::runtime_error with a witness on failure.
std::map<Root, std::vector<Root>> heisenberg_cover(const ParabolicContext& ctx, const PairCandidate& cand);

// Shifted tableau of the positive roots of C_n; row i is H_{beta_i}.
struct TableauC {
    int n = 0;
    std::map<std::pair<int, int>, Root> cells; // 1 <= i <= n, i <= j <= 2n-i

    const Root& at(int i, int j) const;
};

TableauC tableau_C(int n);

// Image of a candidate under a diagram automorphism (permutation of the
// simple roots preserving the Cartan matrix entrywise).
PairCandidate apply_symmetry(const RootSystem& rs, const PairCandidate& cand, const std::vector<int>& perm);

// All (type, rank, s) triples with a constructed candidate, ranks up to
// max_rank, in canonical order.
struct CoveredCase {
    SimpleType type;
    int rank;
    int s;
};
std::vector<CoveredCase> covered_cases(int max_rank);

} // namespace parslice
