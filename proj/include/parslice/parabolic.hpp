#pragma once

#include "parslice/cascade.hpp"
#include "parslice/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parslice {

// Combinatorics of the truncated maximal parabolic attached to
// pi' = pi \ {alpha_s}. The truncated Cartan h_E is spanned by the coroots
// of pi' (E_1' is always empty in the maximal case).
struct ParabolicContext {
    const RootSystem* rs = nullptr;
    int s = 0;                                 // removed simple root, 1-based
    std::vector<int> piprime;                  // 0-based indices, ascending
    std::vector<SubsystemComponent> components;
    std::vector<int> i_perm, j_perm;           // permutations of {0..rank-1}
    std::vector<std::vector<int>> orbits;      // <ij>-orbits, each ascending, by min element
    std::vector<bool> orbit_j_stable;          // whether j(orbit) == orbit (E_2 membership)
    int index = 0;                             // |E| = ind of the truncated parabolic
    std::vector<Root> levi_pos;                // Delta^+_{pi'}
    std::vector<Root> p_plus_roots;            // Delta^+ then -Delta^+_{pi'}
    std::vector<Root> m_minus_roots;           // -(Delta^+ \ Delta^+_{pi'})

    int dim_hE() const { return static_cast<int>(piprime.size()); }
    int dim_p() const { return static_cast<int>(p_plus_roots.size()) + dim_hE(); }
    bool in_piprime(int simple_index0) const;
};

ParabolicContext build_parabolic(const RootSystem& rs, int s);

// lambda = sum c_K beta_K with all c_K nonnegative integers, if such a
// representation exists. `cascade_roots` must be linearly independent.
std::optional<QVec> semigroup_membership(const RootSystem& rs, const std::vector<Root>& cascade_roots,
                                         const Weight& lambda);

struct OrbitEpsilon {
    std::vector<int> orbit; // 0-based simple indices
    bool j_stable = false;
    bool in_B_pi = false;
    bool in_B_piprime = false;
    bool half = false; // epsilon = 1/2
};

enum class PolyVerdict { criterion_true, known_polynomial_citation, unknown };

struct EpsilonReport {
    std::vector<OrbitEpsilon> rows;
    bool criterion = false; // all epsilon = 1
    PolyVerdict verdict = PolyVerdict::unknown;
};

EpsilonReport epsilon_criterion(const ParabolicContext& ctx);

std::string verdict_name(PolyVerdict v);

} // namespace parslice
