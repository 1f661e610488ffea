#include "parslice/pairs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parslice {

std::vector<Root> PairCandidate::S() const {
    std::vector<Root> out(S_plus);
    out.insert(out.end(), S_minus.begin(), S_minus.end());
    return out;
}

std::vector<Root> PairCandidate::T() const {
    std::vector<Root> out(T_plus);
    out.insert(out.end(), T_minus.begin(), T_minus.end());
    return out;
}

Rat PairCandidate::coeff_of(const Root& r) const {
    auto it = coeff.find(r);
    return it == coeff.end() ? Rat(1) : it->second;
}

namespace {

std::string root_str(const Root& r) {
    std::string s = "(";
    for (size_t i = 0; i < r.c.size(); ++i) s += (i ? "," : "") + std::to_string(r.c[i]);
    return s + ")";
}

std::vector<Root> negate_all(const std::vector<Root>& v) {
    std::vector<Root> out;
    out.reserve(v.size());
    for (const Root& r : v) out.push_back(-r);
    return out;
}

// Levi side of the cascade-style constructions: non-simple cascade roots of
// each component go to S^- with their (negated) H sets as covers, simple
// ones go to T^-.
void levi_negatives(const ParabolicContext& ctx, PairCandidate& c) {
    const RootSystem& rs = *ctx.rs;
    for (const auto& comp : ctx.components) {
        Cascade lc = kostant_cascade(rs, comp.simple);
        for (const auto& node : lc.nodes) {
            if (node.beta.height() >= 2) {
                c.S_minus.push_back(-node.beta);
                c.cover[-node.beta] = negate_all(node.hset);
            } else {
                c.T_minus.push_back(-node.beta);
            }
        }
    }
}

// S^+ = beta_pi^0 with H covers, T^+ = beta_pi cap pi; Levi rule for the
// negative side. Covers the B (s odd), D, E6 s=3, E7 s=2/5, E8 s=3 and
// G2 pi'={beta} constructions.
PairCandidate cascade_recipe(const ParabolicContext& ctx, const std::string& prov) {
    const RootSystem& rs = *ctx.rs;
    PairCandidate c;
    c.provenance = prov;
    Cascade amb = kostant_cascade(rs);
    for (const auto& node : amb.nodes) {
        if (node.beta.height() >= 2) {
            c.S_plus.push_back(node.beta);
            c.cover[node.beta] = node.hset;
        } else {
            c.T_plus.push_back(node.beta);
        }
    }
    levi_negatives(ctx, c);
    return c;
}

void move_root(std::vector<Root>& from, std::vector<Root>& to, const Root& r) {
    auto it = std::find(from.begin(), from.end(), r);
    if (it == from.end()) throw std::logic_error("move_root: " + root_str(r) + " not present");
    from.erase(it);
    to.push_back(r);
}

PairCandidate b_type(const ParabolicContext& ctx) {
    const int s = ctx.s;
    if (s == 2) {
        // Tabulated pair for the centralizer of the highest root vector.
        const int n = ctx.rs->rank;
        PairCandidate c;
        c.hardcoded = true;
        c.provenance = "B centralizer (tabulated)";
        for (int i = 2; i <= n - 1; ++i) c.S_plus.push_back(ctx.rs->simple_root(i - 1));
        {
            std::vector<int> v(n, 1);
            c.S_plus.push_back(Root(std::move(v)));
        }
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> v(n, 0);
            v[i - 1] = 1;
            for (int j = i; j < n; ++j) v[j] = 2;
            c.T_plus.push_back(Root(std::move(v)));
        }
        c.T_minus.push_back(-ctx.rs->simple_root(0));
        return c;
    }
    return cascade_recipe(ctx, "B, s odd, cascade pair");
}

PairCandidate d_type(const ParabolicContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    const int n = rs.rank, s = ctx.s;
    if (s == 2) {
        PairCandidate c;
        c.hardcoded = true;
        c.provenance = "D centralizer (tabulated)";
        for (int i = 2; i <= n - 2; ++i) c.S_plus.push_back(rs.simple_root(i - 1));
        {
            std::vector<int> v(n, 1);
            v[n - 1] = 0;
            c.S_plus.push_back(Root(std::move(v)));
        }
        {
            std::vector<int> v(n, 1);
            v[n - 2] = 0;
            c.S_plus.push_back(Root(std::move(v)));
        }
        for (int i = 1; i <= n - 2; ++i) {
            std::vector<int> v(n, 0);
            v[i - 1] = 1;
            for (int j = i; j <= n - 3; ++j) v[j] = 2;
            v[n - 2] = 1;
            v[n - 1] = 1;
            c.T_plus.push_back(Root(std::move(v)));
        }
        c.T_plus.push_back(rs.simple_root(n - 1));
        c.T_minus.push_back(-rs.simple_root(0));
        return c;
    }
    Root alpha_n = rs.simple_root(n - 1);
    if (s == n) {
        // n odd here (the even case is not covered).
        return cascade_recipe(ctx, "D, s = n, cascade pair");
    }
    if (s == n - 1) {
        if (n % 2 == 1) {
            // Image of the s = n pair under the swap of the two fork roots.
            ParabolicContext top = build_parabolic(rs, n);
            PairCandidate base = d_type(top);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::swap(perm[n - 2], perm[n - 1]);
            PairCandidate c = apply_symmetry(rs, base, perm);
            c.provenance = "D, s = n-1, fork symmetry";
            return c;
        }
        PairCandidate c = cascade_recipe(ctx, "D, s = n-1, cascade pair");
        move_root(c.T_plus, c.S_plus, alpha_n);
        c.cover[alpha_n] = {alpha_n};
        return c;
    }
    // s odd, s <= n-2: alpha_n switches sides according to the parity of n.
    PairCandidate c = cascade_recipe(ctx, "D, s odd, cascade pair");
    if (n % 2 == 0) {
        move_root(c.T_plus, c.S_plus, alpha_n);
        c.cover[alpha_n] = {alpha_n};
    } else {
        move_root(c.T_minus, c.S_minus, -alpha_n);
        c.cover[-alpha_n] = {-alpha_n};
    }
    return c;
}

PairCandidate c_type(const ParabolicContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    const int n = rs.rank, s = ctx.s;
    PairCandidate c;
    Cascade amb = kostant_cascade(rs);
    auto betas = amb.betas(); // beta_1 .. beta_n in order
    auto beta = [&](int i) -> const Root& { return betas[i - 1]; };
    auto gamma = [&](int i) { return beta(i) - rs.simple_root(i - 1); };
    auto gamma_cover = [&](int i) {
        std::vector<Root> g = amb.hset0_of(beta(i));
        const auto& h = amb.hset_of(beta(i + 1));
        g.insert(g.end(), h.begin(), h.end());
        return g;
    };

    if (s % 2 == 1) {
        c.provenance = "C, s odd";
        for (int i = 1; i <= n / 2; ++i) {
            Root g = gamma(2 * i - 1);
            c.S_plus.push_back(g);
            c.cover[g] = gamma_cover(2 * i - 1);
        }
        for (int j = (s + 1) / 2; j <= (n - 1) / 2; ++j) {
            Root g = -gamma(2 * j);
            c.S_minus.push_back(g);
            c.cover[g] = negate_all(gamma_cover(2 * j));
        }
        for (int i = 1; i <= (n + 1) / 2; ++i) c.T_plus.push_back(beta(2 * i - 1));
        for (int j = (s + 1) / 2; j <= n / 2; ++j) c.T_minus.push_back(-beta(2 * j));
    } else {
        c.provenance = "C, s even";
        const int t = s / 4;
        for (int i = 1; i <= t; ++i) {
            Root g = gamma(2 * i - 1);
            c.S_plus.push_back(g);
            c.cover[g] = gamma_cover(2 * i - 1);
        }
        c.S_plus.push_back(beta(2 * t + 1));
        c.cover[beta(2 * t + 1)] = amb.hset_of(beta(2 * t + 1));
        for (int j = t + 1; j <= (n - 1) / 2; ++j) {
            Root g = gamma(2 * j);
            c.S_plus.push_back(g);
            c.cover[g] = gamma_cover(2 * j);
        }
        for (int j = s / 2 + 1; j <= n / 2; ++j) {
            Root g = -gamma(2 * j - 1);
            c.S_minus.push_back(g);
            c.cover[g] = negate_all(gamma_cover(2 * j - 1));
        }
        for (int i = 1; i <= t; ++i) c.T_plus.push_back(beta(2 * i - 1));
        for (int j = t + 1; j <= n / 2; ++j) c.T_plus.push_back(beta(2 * j));
        for (int j = s / 2 + 1; j <= (n + 1) / 2; ++j) c.T_minus.push_back(-beta(2 * j - 1));
    }
    // pi'_1 cascade: whole component to S^- in the odd case, the simple
    // middle root to T^- in the even case.
    if (s >= 2) {
        std::vector<int> left(s - 1);
        for (int i = 0; i < s - 1; ++i) left[i] = i;
        Cascade lc = kostant_cascade(rs, left);
        for (const auto& node : lc.nodes) {
            if (s % 2 == 0 && node.beta.height() == 1) {
                c.T_minus.push_back(-node.beta);
            } else {
                c.S_minus.push_back(-node.beta);
                c.cover[-node.beta] = negate_all(node.hset);
            }
        }
    }
    return c;
}

// Shared positive side of the two constructed F4 pairs: the C3-flavored
// centre beta_2 - alpha_4 with H^0_{b2} | H_{b3} as its Heisenberg set.
PairCandidate f4_positive(const ParabolicContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    PairCandidate c;
    Cascade amb = kostant_cascade(rs);
    auto betas = amb.betas();
    const Root &b1 = betas[0], &b2 = betas[1], &b3 = betas[2], &b4 = betas[3];
    Root mid = b2 - rs.simple_root(3);
    c.S_plus = {b1, mid};
    c.cover[b1] = amb.hset_of(b1);
    std::vector<Root> g = amb.hset0_of(b2);
    {
        const auto& h3 = amb.hset_of(b3);
        g.insert(g.end(), h3.begin(), h3.end());
    }
    c.cover[mid] = g;
    c.T_plus = {b2, b4};
    return c;
}

PairCandidate f4_type(const ParabolicContext& ctx) {
    const int s = ctx.s;
    if (s == 1) {
        PairCandidate c;
        c.hardcoded = true;
        c.provenance = "F4 centralizer (tabulated)";
        c.S_plus = {Root({1, 1, 2, 1}), Root({1, 2, 2, 0})};
        c.S_minus = {Root({0, 0, -1, 0})};
        c.T_plus = {Root({2, 3, 4, 2}), Root({1, 2, 2, 2}), Root({0, 1, 2, 2}), Root({0, 1, 1, 1})};
        return c;
    }
    PairCandidate c = f4_positive(ctx);
    c.provenance = s == 2 ? "F4, s = 2" : "F4, s = 4";
    levi_negatives(ctx, c);
    return c;
}

PairCandidate e6_type(const ParabolicContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    const int s = ctx.s;
    if (s == 2) {
        PairCandidate c;
        c.hardcoded = true;
        c.provenance = "E6 centralizer (tabulated)";
        c.S_plus = {Root({0, 1, 1, 2, 1, 0}), Root({1, 1, 1, 1, 1, 0}), Root({0, 1, 1, 1, 1, 1})};
        c.S_minus = {-rs.simple_root(2), -rs.simple_root(4)};
        c.T_plus = {Root({1, 0, 1, 1, 1, 1}), Root({1, 0, 1, 1, 1, 0}), Root({0, 0, 1, 1, 0, 0}),
                    Root({1, 1, 2, 2, 2, 1}), Root({1, 1, 1, 2, 1, 1}), Root({1, 2, 2, 3, 2, 1})};
        return c;
    }
    if (s == 3) return cascade_recipe(ctx, "E6, s = 3, cascade pair");
    if (s == 5) {
        ParabolicContext base_ctx = build_parabolic(rs, 3);
        PairCandidate base = e6_type(base_ctx);
        PairCandidate c = apply_symmetry(rs, base, rs.diagram_involution_j());
        c.provenance = "E6, s = 5, diagram symmetry";
        return c;
    }
    // s == 4
    PairCandidate c;
    c.provenance = "E6, s = 4";
    Cascade amb = kostant_cascade(rs);
    auto betas = amb.betas();
    Root s2({1, 0, 1, 1, 1, 0});
    Root s3({0, 0, 1, 1, 1, 1});
    c.S_plus = {betas[0], s2, s3};
    c.cover[betas[0]] = amb.hset_of(betas[0]);
    c.cover[s2] = {Root({1, 0, 0, 0, 0, 0}), Root({1, 0, 1, 0, 0, 0}), Root({1, 0, 1, 1, 0, 0}),
                   Root({0, 0, 1, 1, 1, 0}), Root({0, 0, 0, 1, 1, 0}), Root({0, 0, 0, 0, 1, 0}), s2};
    c.cover[s3] = {Root({0, 0, 1, 0, 0, 0}), Root({0, 0, 1, 1, 0, 0}), Root({0, 0, 0, 1, 1, 1}),
                   Root({0, 0, 0, 0, 1, 1}), s3};
    c.T_plus = {betas[1], betas[3], rs.simple_root(5)};
    levi_negatives(ctx, c);
    return c;
}

PairCandidate e7_type(const ParabolicContext& ctx) {
    if (ctx.s == 1) {
        PairCandidate c;
        c.hardcoded = true;
        c.provenance = "E7 centralizer (tabulated)";
        c.S_plus = {Root({1, 1, 1, 2, 1, 1, 1}), Root({1, 1, 1, 2, 2, 1, 0}), Root({1, 1, 2, 2, 1, 1, 0})};
        c.S_minus = {-ctx.rs->simple_root(1), -ctx.rs->simple_root(3), -ctx.rs->simple_root(5)};
        c.T_plus = {Root({0, 1, 1, 2, 2, 2, 1}), Root({0, 1, 1, 2, 2, 1, 0}), Root({1, 2, 2, 3, 3, 2, 1}),
                    Root({0, 1, 1, 2, 1, 0, 0}), Root({1, 1, 2, 3, 2, 2, 1}), Root({1, 1, 2, 2, 2, 1, 1}),
                    Root({2, 2, 3, 4, 3, 2, 1})};
        return c;
    }
    return cascade_recipe(ctx, ctx.s == 2 ? "E7, s = 2, cascade pair" : "E7, s = 5, cascade pair");
}

PairCandidate g2_type(const ParabolicContext& ctx) {
    if (ctx.s == 2) {
        PairCandidate c;
        c.hardcoded = true;
        c.provenance = "G2 centralizer (tabulated)";
        c.S_plus = {Root({1, 1})};
        c.T_plus = {Root({3, 2}), Root({3, 1})};
        return c;
    }
    return cascade_recipe(ctx, "G2, pi' = {long root}, cascade pair");
}

} // namespace

CandidateResult construct_candidate(const ParabolicContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    const int n = rs.rank, s = ctx.s;
    switch (rs.kind) {
    case SimpleType::A:
        return NotCovered{"type A is handled by the sl_n constructions elsewhere"};
    case SimpleType::B:
        if (s % 2 == 1 || s == 2) return b_type(ctx);
        return NotCovered{"B with even s >= 4: polynomiality criterion fails"};
    case SimpleType::C:
        return c_type(ctx);
    case SimpleType::D:
        if (s == 2 || (s % 2 == 1 && s <= n - 2) || s == n - 1 || (s == n && n % 2 == 1)) return d_type(ctx);
        return NotCovered{"D with even s outside {2, n-1}: no construction"};
    case SimpleType::E6:
        if (s >= 2 && s <= 5) return e6_type(ctx);
        return NotCovered{"E6 with s in {1,6}: no construction"};
    case SimpleType::E7:
        if (s == 1 || s == 2 || s == 5) return e7_type(ctx);
        return NotCovered{"E7 with s in {3,4,6,7}: no construction"};
    case SimpleType::E8:
        if (s == 3) return cascade_recipe(ctx, "E8, s = 3, cascade pair");
        return NotCovered{"E8 with s != 3: no construction"};
    case SimpleType::F4:
        if (s == 3) return NotCovered{"F4 with s = 3: adapted pairs do not exist (see the search)"};
        return f4_type(ctx);
    case SimpleType::G2:
        return g2_type(ctx);
    }
    return NotCovered{"unreachable"};
}

std::map<Root, std::vector<Root>> heisenberg_cover(const ParabolicContext& ctx, const PairCandidate& cand) {
    if (cand.hardcoded) throw std::invalid_argument("heisenberg_cover: tabulated candidate has no cover");
    const RootSystem& rs = *ctx.rs;
    // Every centre must carry a Heisenberg set containing it.
    for (const Root& g : cand.S_plus)
        if (!cand.cover.count(g)) throw std::runtime_error("cover missing for centre " + root_str(g));
    for (const Root& g : cand.S_minus)
        if (!cand.cover.count(g)) throw std::runtime_error("cover missing for centre " + root_str(g));

    auto check_partition = [&](const std::vector<Root>& centres, const std::vector<Root>& universe,
                               const std::vector<Root>& excluded) {
        std::set<Root> want(universe.begin(), universe.end());
        for (const Root& t : excluded) {
            if (!want.erase(t)) throw std::runtime_error("T root " + root_str(t) + " outside its half");
        }
        std::set<Root> got;
        for (const Root& g : centres) {
            const auto& gamma = cand.cover.at(g);
            if (std::find(gamma.begin(), gamma.end(), g) == gamma.end())
                throw std::runtime_error("centre " + root_str(g) + " missing from its own set");
            for (const Root& r : gamma) {
                if (!got.insert(r).second)
                    throw std::runtime_error("cover overlap at " + root_str(r));
                // Heisenberg property: a unique partner summing to the centre.
                if (r != g) {
                    int partners = 0;
                    for (const Root& r2 : gamma)
                        if (r + r2 == g) ++partners;
                    if (partners != 1)
                        throw std::runtime_error("not a Heisenberg set at " + root_str(r) + " for centre " +
                                                 root_str(g));
                }
            }
        }
        if (got != want) throw std::runtime_error("cover does not partition its half");
    };

    std::vector<Root> neg_levi;
    for (const Root& r : ctx.levi_pos) neg_levi.push_back(-r);
    check_partition(cand.S_plus, rs.positive, cand.T_plus);
    check_partition(cand.S_minus, neg_levi, cand.T_minus);
    return cand.cover;
}

const Root& TableauC::at(int i, int j) const {
    auto it = cells.find({i, j});
    if (it == cells.end()) throw std::invalid_argument("tableau_C: cell out of range");
    return it->second;
}

TableauC tableau_C(int n) {
    if (n < 2) throw std::invalid_argument("tableau_C: n >= 2 required");
    TableauC t;
    t.n = n;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= 2 * n - i; ++j) {
            std::vector<int> v(n, 0);
            if (j <= n - 1) {
                // alpha_i + ... + 2(alpha_j + ... + alpha_{n-1}) + alpha_n
                for (int k = i; k < j; ++k) v[k - 1] = 1;
                for (int k = j; k <= n - 1; ++k) v[k - 1] = 2;
                v[n - 1] = 1;
            } else {
                for (int k = i; k <= 2 * n - j; ++k) v[k - 1] = 1;
            }
            t.cells.emplace(std::make_pair(i, j), Root(std::move(v)));
        }
    }
    return t;
}

PairCandidate apply_symmetry(const RootSystem& rs, const PairCandidate& cand, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != rs.rank)
        throw std::invalid_argument("apply_symmetry: permutation size mismatch");
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            if (rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j])
                throw std::invalid_argument("apply_symmetry: not a diagram automorphism");
    auto map_root = [&](const Root& r) {
        std::vector<int> v(rs.rank, 0);
        for (int i = 0; i < rs.rank; ++i) v[perm[i]] = r.c[i];
        return Root(std::move(v));
    };
    auto map_vec = [&](const std::vector<Root>& v) {
        std::vector<Root> out;
        out.reserve(v.size());
        for (const Root& r : v) out.push_back(map_root(r));
        return out;
    };
    PairCandidate out;
    out.S_plus = map_vec(cand.S_plus);
    out.S_minus = map_vec(cand.S_minus);
    out.T_plus = map_vec(cand.T_plus);
    out.T_minus = map_vec(cand.T_minus);
    out.hardcoded = cand.hardcoded;
    out.provenance = cand.provenance;
    for (const auto& [g, set] : cand.cover) out.cover[map_root(g)] = map_vec(set);
    for (const auto& [g, a] : cand.coeff) out.coeff[map_root(g)] = a;
    return out;
}

std::vector<CoveredCase> covered_cases(int max_rank) {
    std::vector<CoveredCase> out;
    auto add = [&](SimpleType t, int n, int s) { out.push_back({t, n, s}); };
    for (int n = 2; n <= max_rank; ++n)
        for (int s = 1; s <= n; ++s)
            if (s % 2 == 1 || s == 2) add(SimpleType::B, n, s);
    for (int n = 3; n <= max_rank; ++n)
        for (int s = 1; s <= n; ++s) add(SimpleType::C, n, s);
    for (int n = 4; n <= max_rank; ++n)
        for (int s = 1; s <= n; ++s)
            if (s == 2 || (s % 2 == 1 && s <= n - 2) || s == n - 1 || (s == n && n % 2 == 1))
                add(SimpleType::D, n, s);
    if (max_rank >= 6)
        for (int s = 2; s <= 5; ++s) add(SimpleType::E6, 6, s);
    if (max_rank >= 7)
        for (int s : {1, 2, 5}) add(SimpleType::E7, 7, s);
    if (max_rank >= 8) add(SimpleType::E8, 8, 3);
    if (max_rank >= 4)
        for (int s : {1, 2, 4}) add(SimpleType::F4, 4, s);
    if (max_rank >= 2)
        for (int s : {1, 2}) add(SimpleType::G2, 2, s);
    return out;
}

} // namespace parslice
