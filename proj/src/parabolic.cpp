#include "parslice/parabolic.hpp"

#include "parslice/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace parslice {

bool ParabolicContext::in_piprime(int i) const {
    return std::binary_search(piprime.begin(), piprime.end(), i);
}

ParabolicContext build_parabolic(const RootSystem& rs, int s) {
    if (s < 1 || s > rs.rank) throw std::invalid_argument("build_parabolic: s out of range");
    ParabolicContext ctx;
    ctx.rs = &rs;
    ctx.s = s;
    for (int i = 0; i < rs.rank; ++i)
        if (i != s - 1) ctx.piprime.push_back(i);
    ctx.components = rs.irreducible_components(ctx.piprime);

    ctx.j_perm = rs.diagram_involution_j();
    // i = -w0' on pi', extended to alpha_s by iterating j(ij)^r until the
    // value leaves pi'.
    std::vector<int> iperm(rs.rank, -1);
    for (const auto& comp : ctx.components) {
        auto cp = rs.component_involution(comp);
        for (int k : comp.simple) iperm[k] = cp[k];
    }
    {
        int a = s - 1;
        int value = ctx.j_perm[a];
        while (value != a && ctx.in_piprime(value)) value = ctx.j_perm[iperm[value]];
        iperm[a] = value;
        if (iperm[a] != a) throw std::logic_error("build_parabolic: i(alpha_s) != alpha_s");
    }
    ctx.i_perm = iperm;

    // <ij>-orbits.
    std::vector<bool> seen(rs.rank, false);
    for (int start = 0; start < rs.rank; ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit;
        int x = start;
        while (!seen[x]) {
            seen[x] = true;
            orbit.push_back(x);
            x = ctx.i_perm[ctx.j_perm[x]];
        }
        std::sort(orbit.begin(), orbit.end());
        std::set<int> jimg;
        for (int v : orbit) jimg.insert(ctx.j_perm[v]);
        bool stable = std::equal(orbit.begin(), orbit.end(), jimg.begin(), jimg.end()) &&
                      jimg.size() == orbit.size();
        // Orbits meeting pi \ pi' must be j-stable (E_1' is empty for
        // maximal parabolics).
        if (!stable)
            for (int v : orbit)
                if (v == s - 1) throw std::logic_error("build_parabolic: nonempty E_1'");
        ctx.orbits.push_back(std::move(orbit));
        ctx.orbit_j_stable.push_back(stable);
    }
    ctx.index = static_cast<int>(ctx.orbits.size());

    ctx.levi_pos = rs.subsystem_positive(ctx.piprime);
    ctx.p_plus_roots = rs.positive;
    for (const Root& r : ctx.levi_pos) ctx.p_plus_roots.push_back(-r);
    std::set<Root> levi(ctx.levi_pos.begin(), ctx.levi_pos.end());
    for (const Root& r : rs.positive)
        if (!levi.count(r)) ctx.m_minus_roots.push_back(-r);
    return ctx;
}

std::optional<QVec> semigroup_membership(const RootSystem& rs, const std::vector<Root>& cascade_roots,
                                         const Weight& lambda) {
    const int k = static_cast<int>(cascade_roots.size());
    if (k == 0) {
        for (const Rat& v : lambda.c)
            if (v != 0) return std::nullopt;
        return QVec{};
    }
    MatQ A(rs.rank, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < rs.rank; ++i) A.at(i, j) = cascade_roots[j].c[i];
    {
        // Precondition: the cascade roots are linearly independent.
        if (exact_rank(A) != k) throw std::invalid_argument("semigroup_membership: dependent root set");
    }
    auto sol = solve_unique(A, lambda.c);
    if (!sol) return std::nullopt;
    for (const Rat& c : *sol)
        if (!is_integer(c) || c < 0) return std::nullopt;
    return sol;
}

EpsilonReport epsilon_criterion(const ParabolicContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    EpsilonReport rep;

    Cascade amb = kostant_cascade(rs);
    auto amb_betas = amb.betas();
    auto fw = rs.fundamental_weights();

    // Fundamental weights of each Levi component, as ambient weights
    // supported on the component.
    struct CompW {
        std::vector<int> nodes;        // ambient indices in Bourbaki order
        std::vector<Weight> weights;   // matching order
        std::vector<Root> betas;       // component cascade
    };
    std::vector<CompW> comps;
    for (const auto& comp : ctx.components) {
        CompW cw;
        cw.nodes = comp.simple;
        auto local_cartan = RootSystem::cartan_matrix(comp.kind, comp.rank);
        MatQ C(comp.rank, comp.rank);
        for (int i = 0; i < comp.rank; ++i)
            for (int j = 0; j < comp.rank; ++j) C.at(i, j) = local_cartan[i][j];
        MatQ inv = invert(C);
        for (int i = 0; i < comp.rank; ++i) {
            QVec v(rs.rank, Rat(0));
            for (int kk = 0; kk < comp.rank; ++kk) v[comp.simple[kk]] = inv.at(kk, i);
            cw.weights.emplace_back(Weight(std::move(v)));
        }
        cw.betas = kostant_cascade(rs, comp.simple).betas();
        comps.push_back(std::move(cw));
    }

    bool all_one = true;
    for (size_t oi = 0; oi < ctx.orbits.size(); ++oi) {
        OrbitEpsilon row;
        row.orbit = ctx.orbits[oi];
        row.j_stable = ctx.orbit_j_stable[oi];

        Weight lam(QVec(rs.rank, Rat(0)));
        for (int v : row.orbit) lam = lam + fw[v];
        row.in_B_pi = semigroup_membership(rs, amb_betas, lam).has_value();

        row.in_B_piprime = true;
        for (const auto& cw : comps) {
            Weight part(QVec(rs.rank, Rat(0)));
            bool any = false;
            for (int v : row.orbit)
                for (size_t kk = 0; kk < cw.nodes.size(); ++kk)
                    if (cw.nodes[kk] == v) {
                        part = part + cw.weights[kk];
                        any = true;
                    }
            if (!any) continue;
            if (!semigroup_membership(rs, cw.betas, part).has_value()) {
                row.in_B_piprime = false;
                break;
            }
        }

        row.half = row.j_stable && row.in_B_pi && row.in_B_piprime;
        if (row.half) all_one = false;
        rep.rows.push_back(std::move(row));
    }
    rep.criterion = all_one;
    if (all_one)
        rep.verdict = PolyVerdict::criterion_true;
    else {
        // Centralizer-of-highest-root cases known polynomial from the
        // literature even though the criterion fails.
        bool cited = false;
        switch (rs.kind) {
        case SimpleType::B:
        case SimpleType::D: cited = (ctx.s == 2); break;
        case SimpleType::E6: cited = (ctx.s == 2); break;
        case SimpleType::E7: cited = (ctx.s == 1); break;
        case SimpleType::F4: cited = (ctx.s == 1); break;
        default: break;
        }
        rep.verdict = cited ? PolyVerdict::known_polynomial_citation : PolyVerdict::unknown;
    }
    return rep;
}

std::string verdict_name(PolyVerdict v) {
    switch (v) {
    case PolyVerdict::criterion_true: return "criterion-true";
    case PolyVerdict::known_polynomial_citation: return "known-polynomial-by-citation";
    case PolyVerdict::unknown: return "unknown";
    }
    return "?";
}

} // namespace parslice
