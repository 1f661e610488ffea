#pragma once

#include "parslice/rootsys.hpp"

#include <map>

namespace parslice {

// Sign normalization for the structure constants. Every extraspecial pair
// gets +(p+1) under `standard`, -(p+1) under `negated_extraspecial`; all
// other constants are derived. Rank certificates must not depend on the
// choice.
enum class SignConvention { standard, negated_extraspecial };

// Element of g: sparse root part keyed by signed positive-root id
// (+k / -k, 1-based), plus a Cartan part over the simple coroot basis.
struct LieElt {
    std::map<int, Rat> x;
    QVec h;

    bool is_zero() const;
    void add_root(int sid, const Rat& c);
    void add_cartan(const QVec& v, const Rat& scale, int rank);
};

class LieTable {
  public:
    static LieTable build(const RootSystem& rs, SignConvention sc = SignConvention::standard);

    const RootSystem& rs() const { return *rs_; }
    SignConvention convention() const { return sc_; }

    // N_{a,b} with [x_a, x_b] = N_{a,b} x_{a+b}; 0 when a+b is not a root.
    // Throws when a + b = 0 (that bracket is the coroot, not a root vector).
    Rat n_const(const Root& a, const Root& b) const;

    // a^vee over the simple coroot basis (integral for any root).
    std::vector<long> coroot_coords(const Root& a) const;

    // <lambda, h> for h in coroot coordinates.
    Rat cartan_eval(const Root& lambda, const QVec& h) const;

    LieElt bracket(const LieElt& x, const LieElt& y) const;

    LieElt root_vector(const Root& r, const Rat& c = Rat(1)) const;
    Root root_of_sid(int sid) const;
    int sid_of_root(const Root& r) const; // 0 when not a root

    // Invariant bilinear form: B(x_a, x_{-a}) = 2/(a,a), B on the Cartan is
    // the normalized form transported from h*.
    Rat invariant_form(const LieElt& x, const LieElt& y) const;

    // Jacobi validation: exhaustive over basis triples for rank <= 4, seeded
    // sample of `samples` triples otherwise. Returns the number of failures.
    long jacobi_check(uint64_t seed = 0, long samples = 10000) const;

  private:
    const RootSystem* rs_ = nullptr;
    SignConvention sc_ = SignConvention::standard;
    // npos_[i][j] = N for positive roots i, j (0 when the sum is not a root).
    std::vector<std::vector<long>> npos_;

    long n_signed(int sa, int sb) const;
};

} // namespace parslice
