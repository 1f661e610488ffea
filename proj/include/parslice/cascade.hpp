#pragma once

#include "parslice/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace parslice {

struct CascadeNode {
    std::vector<int> key;        // position sequence K (1-based entries)
    Root beta;                   // highest root of this node's subsystem
    std::vector<Root> delta_pos; // positive part of Delta_K
    std::vector<Root> hset;      // H_{beta_K} = {gamma in Delta_K : (gamma, beta_K) > 0}
    std::string name;            // display label only; identity is the root vector
};

class Cascade {
  public:
    std::vector<CascadeNode> nodes; // depth-first, siblings by smallest support index

    std::vector<Root> betas() const;
    bool has_beta(const Root& b) const;
    const CascadeNode& node_of(const Root& beta) const; // throws on unknown beta
    const std::vector<Root>& hset_of(const Root& beta) const;
    std::vector<Root> hset0_of(const Root& beta) const; // H minus its centre

    // K <= L iff L = K or L extends K.
    static bool key_leq(const std::vector<int>& k, const std::vector<int>& l);

    // Node index holding a given root in its H set; every positive root of
    // the underlying subsystem lies in exactly one.
    int node_with_h(const Root& r) const;

  private:
    friend Cascade kostant_cascade(const RootSystem&, const std::vector<int>&);
    std::map<Root, int> by_beta_;
    std::map<Root, int> h_lookup_;
};

// The Kostant cascade of the subsystem generated by `subset` (0-based simple
// indices). Empty subset gives an empty cascade.
Cascade kostant_cascade(const RootSystem& rs, const std::vector<int>& subset);

inline Cascade kostant_cascade(const RootSystem& rs) {
    std::vector<int> all(rs.rank);
    for (int i = 0; i < rs.rank; ++i) all[i] = i;
    return kostant_cascade(rs, all);
}

// Literal transcription of the closed formulas for the maximal set of
// strongly orthogonal positive roots, with their customary labels.
std::vector<std::pair<std::string, Root>> table1_reference(SimpleType t, int rank);

} // namespace parslice
