#pragma once

#include "parslice/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace parslice {

enum class SimpleType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string type_name(SimpleType t);
// Parses "A".."D", "E6", "E7", "E8", "F4", "G2" (case-insensitive).
SimpleType type_parse(const std::string& s);
bool valid_type_rank(SimpleType t, int rank);

// A root stored as its integer coefficient vector over the simple roots.
struct Root {
    std::vector<int> c;

    Root() = default;
    explicit Root(std::vector<int> v) : c(std::move(v)) {}

    int height() const;
    bool is_positive() const; // all coefficients >= 0 and not all zero
    Root operator-() const;
    friend Root operator+(const Root& x, const Root& y);
    friend Root operator-(const Root& x, const Root& y);
    auto operator<=>(const Root&) const = default;
};

// Canonical total order: height first, then lexicographic on coefficients.
// Negative roots compare by the same key; used wherever a deterministic
// matrix row/column order is required.
bool canonical_less(const Root& x, const Root& y);

struct Weight {
    QVec c; // rational coordinates over the simple roots

    Weight() = default;
    explicit Weight(QVec v) : c(std::move(v)) {}
    explicit Weight(const Root& r);
    friend Weight operator+(const Weight& x, const Weight& y);
};

// An irreducible component of a subdiagram, relabeled to Bourbaki order:
// simple[k] is the ambient index (0-based) of the component's k-th node.
struct SubsystemComponent {
    SimpleType kind;
    int rank = 0;
    std::vector<int> simple;
};

class RootSystem {
  public:
    static RootSystem build(SimpleType kind, int rank);

    SimpleType kind;
    int rank = 0;
    std::vector<std::vector<int>> cartan; // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<std::vector<Rat>> form;   // (alpha_i, alpha_j), long roots of square length 2
    std::vector<Root> positive;           // canonical order

    size_t num_positive() const { return positive.size(); }
    bool is_root(const Root& r) const;
    bool is_positive_root(const Root& r) const;
    // Index into `positive`; -1 when r is not a positive root.
    int pos_id(const Root& r) const;
    Root simple_root(int i) const;

    Rat pairing(const QVec& x, const QVec& y) const;
    Rat pairing(const Root& x, const Root& y) const;
    Rat pairing(const Root& x, const Weight& y) const;
    Rat pairing(const Weight& x, const Weight& y) const;

    // alpha^vee(lambda) = 2(alpha, lambda)/(alpha, alpha)
    Rat coroot_apply(const Root& alpha, const Root& lambda) const;
    Rat coroot_apply(const Root& alpha, const Weight& lambda) const;
    // <lambda, alpha_i^vee> for a simple root, by Cartan contraction (exact
    // integer for roots).
    Rat simple_coroot_apply(int i, const Root& lambda) const;
    Rat simple_coroot_apply(int i, const Weight& lambda) const;

    std::vector<Weight> fundamental_weights() const;

    // Connected components of the subdiagram on `subset` (0-based simple
    // indices), ordered by smallest member, each classified and relabeled.
    std::vector<SubsystemComponent> irreducible_components(const std::vector<int>& subset) const;

    // Positive roots supported on `subset`, canonical order.
    std::vector<Root> subsystem_positive(const std::vector<int>& subset) const;

    // Unique highest root of an irreducible component.
    Root highest_root(const SubsystemComponent& comp) const;

    // j = -w0 as a permutation of the ambient simple roots.
    std::vector<int> diagram_involution_j() const;
    // -w0 of a component, as a permutation of ambient indices (identity off
    // the component).
    std::vector<int> component_involution(const SubsystemComponent& comp) const;

    // -w0 on Bourbaki labels of a bare type.
    static std::vector<int> minus_w0(SimpleType t, int rank);
    static std::vector<std::vector<int>> cartan_matrix(SimpleType t, int rank);

  private:
    std::map<std::vector<int>, int> pos_index_;
};

} // namespace parslice
