#include "parslice/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace parslice {

CondReport check_conditions(const ParabolicContext& ctx, const PairCandidate& cand) {
    CondReport rep;
    rep.cond4 = static_cast<int>(cand.T_plus.size() + cand.T_minus.size()) == ctx.index;
    if (cand.hardcoded) {
        rep.applicable = false;
        rep.cond1 = rep.cond2 = true;
        return rep;
    }
    rep.applicable = true;

    const RootSystem& rs = *ctx.rs;
    auto partition_ok = [&](const std::vector<Root>& centres, const std::vector<Root>& universe,
                            const std::vector<Root>& excluded, std::vector<Root>& witness) {
        std::set<Root> want(universe.begin(), universe.end());
        for (const Root& t : excluded)
            if (!want.erase(t)) {
                witness.push_back(t);
                return false;
            }
        std::set<Root> got;
        for (const Root& g : centres)
            for (const Root& r : cand.cover.at(g))
                if (!got.insert(r).second) {
                    witness.push_back(r);
                    return false;
                }
        if (got == want) return true;
        for (const Root& r : want)
            if (!got.count(r)) {
                witness.push_back(r);
                break;
            }
        for (const Root& r : got)
            if (!want.count(r)) {
                witness.push_back(r);
                break;
            }
        return false;
    };

    std::vector<Root> neg_levi;
    for (const Root& r : ctx.levi_pos) neg_levi.push_back(-r);
    for (const Root& g : cand.S_plus)
        if (!cand.cover.count(g)) throw std::invalid_argument("check_conditions: cover missing a centre");
    for (const Root& g : cand.S_minus)
        if (!cand.cover.count(g)) throw std::invalid_argument("check_conditions: cover missing a centre");
    rep.cond1 = partition_ok(cand.S_plus, rs.positive, cand.T_plus, rep.witness1) &&
                partition_ok(cand.S_minus, neg_levi, cand.T_minus, rep.witness1);

    // Condition (2): a sum of two elements of O^+/O^- landing in S must stay
    // inside the centre's own punctured set.
    rep.cond2 = true;
    auto scan = [&](const std::vector<Root>& centres) {
        std::vector<Root> O;
        std::map<Root, Root> owner; // element -> its centre
        for (const Root& g : centres)
            for (const Root& r : cand.cover.at(g))
                if (r != g) {
                    O.push_back(r);
                    owner.emplace(r, g);
                }
        std::set<Root> sset(centres.begin(), centres.end());
        for (size_t a = 0; a < O.size() && rep.cond2; ++a)
            for (size_t b = a + 1; b < O.size(); ++b) {
                Root sum = O[a] + O[b];
                if (!sset.count(sum)) continue;
                if (owner.at(O[a]) != sum || owner.at(O[b]) != sum) {
                    rep.cond2 = false;
                    rep.witness2 = {O[a], O[b]};
                    break;
                }
            }
    };
    scan(cand.S_plus);
    if (rep.cond2) scan(cand.S_minus);
    return rep;
}

Rat basis_certificate(const ParabolicContext& ctx, const std::vector<Root>& S) {
    const RootSystem& rs = *ctx.rs;
    const int d = ctx.dim_hE();
    if (static_cast<int>(S.size()) != d)
        throw std::invalid_argument("basis_certificate: |S| != dim h_E");
    MatQ m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.at(i, j) = rs.simple_coroot_apply(ctx.piprime[i], S[j]);
    return exact_det(m);
}

namespace {

// h_E-projection: coordinates over the pi' coroots of the h_E-component of a
// Cartan element, the complement being the form-orthogonal h_E^perp.
MatQ he_projection(const ParabolicContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    const int d = ctx.dim_hE();
    auto bform = [&](int i, int j) {
        return Rat(Rat(4) * rs.form[i][j]) / Rat(rs.form[i][i] * rs.form[j][j]);
    };
    MatQ G(d, d), W(d, rs.rank);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) G.at(i, j) = bform(ctx.piprime[i], ctx.piprime[j]);
        for (int k = 0; k < rs.rank; ++k) W.at(i, k) = bform(ctx.piprime[i], k);
    }
    MatQ Ginv = invert(G);
    MatQ P(d, rs.rank);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < rs.rank; ++k) {
            Rat acc(0);
            for (int j = 0; j < d; ++j) acc += Ginv.at(i, j) * W.at(j, k);
            P.at(i, k) = acc;
        }
    return P;
}

} // namespace

MatQ coadjoint_matrix(const LieTable& L, const ParabolicContext& ctx, const std::map<Root, Rat>& y_roots,
                      const QVec& y_cartan) {
    const RootSystem& rs = *ctx.rs;
    const int P = static_cast<int>(rs.num_positive());
    const int nlevi = static_cast<int>(ctx.levi_pos.size());
    const int d = ctx.dim_hE();
    const int dim = ctx.dim_p();

    std::map<Root, int> prow;
    for (int i = 0; i < static_cast<int>(ctx.p_plus_roots.size()); ++i)
        prow.emplace(ctx.p_plus_roots[i], i);
    const int hrow0 = static_cast<int>(ctx.p_plus_roots.size());

    for (const auto& [r, c] : y_roots) {
        if (!prow.count(r)) throw std::invalid_argument("coadjoint_matrix: y supported outside p");
        if (c == 0) throw std::invalid_argument("coadjoint_matrix: zero coefficient in y support");
    }

    MatQ proj = he_projection(ctx);
    MatQ M(dim, dim);

    // Columns: x_{-gamma} for gamma in Delta^+, then the pi' coroots, then
    // x_gamma for gamma in Delta^+_{pi'}.
    std::vector<Root> cols;
    cols.reserve(P + nlevi);
    for (const Root& r : rs.positive) cols.push_back(-r);
    for (const Root& r : ctx.levi_pos) cols.push_back(r);

    auto emit_column = [&](int col, const Root& delta) {
        QVec cartan_acc; // coroot coordinates accumulated from [x_delta, x_{-delta}]
        for (const auto& [g, cg] : y_roots) {
            Root sum = delta + g;
            bool zero = true;
            for (int v : sum.c)
                if (v) {
                    zero = false;
                    break;
                }
            if (zero) {
                auto cc = L.coroot_coords(delta);
                if (cartan_acc.empty()) cartan_acc.assign(rs.rank, Rat(0));
                for (int k = 0; k < rs.rank; ++k) cartan_acc[k] += Rat(cc[k]) * cg;
                continue;
            }
            if (!rs.is_root(sum)) continue;
            auto it = prow.find(sum);
            if (it == prow.end()) continue; // root space of m^-
            M.at(it->second, col) += cg * L.n_const(delta, g);
        }
        if (!y_cartan.empty()) {
            // [x_delta, h] = -<delta, h> x_delta
            auto it = prow.find(delta);
            if (it != prow.end()) M.at(it->second, col) += Rat(-L.cartan_eval(delta, y_cartan));
        }
        if (!cartan_acc.empty())
            for (int i = 0; i < d; ++i) {
                Rat acc(0);
                for (int k = 0; k < rs.rank; ++k)
                    if (cartan_acc[k] != 0) acc += proj.at(i, k) * cartan_acc[k];
                M.at(hrow0 + i, col) += acc;
            }
    };

    for (int c = 0; c < static_cast<int>(cols.size()); ++c) emit_column(c, cols[c]);

    // Columns for the h_E coroot basis: [h, y] = sum <g, h> y_g x_g.
    for (int i = 0; i < d; ++i) {
        int col = P + nlevi + i;
        for (const auto& [g, cg] : y_roots)
            M.at(prow.at(g), col) += cg * rs.simple_coroot_apply(ctx.piprime[i], g);
    }
    return M;
}

std::pair<int, int> phi_rank(const LieTable& L, const ParabolicContext& ctx, const PairCandidate& cand) {
    if (cand.hardcoded) throw std::invalid_argument("phi_rank: tabulated candidate has no cover");
    const RootSystem& rs = *ctx.rs;
    std::vector<Root> O;
    for (const Root& g : cand.S_plus)
        for (const Root& r : cand.cover.at(g))
            if (r != g) O.push_back(r);
    for (const Root& g : cand.S_minus)
        for (const Root& r : cand.cover.at(g))
            if (r != g) O.push_back(r);
    std::map<Root, Rat> scoeff;
    for (const Root& g : cand.S_plus) scoeff.emplace(g, cand.coeff_of(g));
    for (const Root& g : cand.S_minus) scoeff.emplace(g, cand.coeff_of(g));

    const int m = static_cast<int>(O.size());
    MatQ phi(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Root sum = O[a] + O[b];
            auto it = scoeff.find(sum);
            if (it == scoeff.end()) continue;
            // B(y, [x_{-a}, x_{-b}]) = a_gamma N_{-a,-b} 2/(gamma,gamma)
            Rat v = Rat(it->second * L.n_const(-O[a], -O[b]) * Rat(2) / rs.pairing(sum, sum));
            phi.at(a, b) = v;
            phi.at(b, a) = Rat(-v);
        }
    return {exact_rank(phi), m};
}

PairCertificate regularity_certificate(const LieTable& L, const ParabolicContext& ctx,
                                       const PairCandidate& cand) {
    const RootSystem& rs = *ctx.rs;
    PairCertificate cert;
    cert.index = ctx.index;
    cert.has_cover = !cand.hardcoded;

    CondReport cond = check_conditions(ctx, cand);
    cert.cond1 = cond.cond1;
    cert.cond2 = cond.cond2;
    cert.cond4 = cond.cond4;

    auto S = cand.S();
    auto T = cand.T();
    cert.basis_det = basis_certificate(ctx, S);

    if (cert.has_cover) {
        auto [pr, pd] = phi_rank(L, ctx, cand);
        cert.phi_rank_value = pr;
        cert.phi_dim = pd;
    }

    // y from the candidate coefficients.
    std::map<Root, Rat> y;
    for (const Root& g : S) y.emplace(g, cand.coeff_of(g));
    MatQ M = coadjoint_matrix(L, ctx, y);
    int rank = exact_rank(M);
    cert.codim = ctx.dim_p() - rank;

    // Complement: the image stacked with the T root vectors must fill p.
    {
        MatQ aug(M.rows, M.cols + static_cast<int>(T.size()));
        for (int i = 0; i < M.rows; ++i)
            for (int j = 0; j < M.cols; ++j) aug.at(i, j) = M.at(i, j);
        std::map<Root, int> prow;
        for (int i = 0; i < static_cast<int>(ctx.p_plus_roots.size()); ++i)
            prow.emplace(ctx.p_plus_roots[i], i);
        for (size_t k = 0; k < T.size(); ++k) {
            auto it = prow.find(T[k]);
            if (it == prow.end()) throw std::invalid_argument("regularity_certificate: T outside p");
            aug.at(it->second, M.cols + static_cast<int>(k)) = 1;
        }
        cert.complement_ok = exact_rank(aug) == ctx.dim_p();
    }

    bool h_ok = false;
    if (cert.basis_det != 0) {
        const int dh = ctx.dim_hE();
        MatQ A(dh, dh);
        for (int j = 0; j < dh; ++j)
            for (int i = 0; i < dh; ++i) A.at(j, i) = rs.simple_coroot_apply(ctx.piprime[i], S[j]);
        auto sol = solve_unique(A, QVec(dh, Rat(-1)));
        if (sol) {
            cert.h = *sol;
            h_ok = true;
            for (const Root& sroot : S) {
                Rat v(0);
                for (int i = 0; i < dh; ++i) v += cert.h[i] * rs.simple_coroot_apply(ctx.piprime[i], sroot);
                if (v != -1) h_ok = false;
            }
            for (const Root& t : T) {
                Rat v(0);
                for (int i = 0; i < dh; ++i) v += cert.h[i] * rs.simple_coroot_apply(ctx.piprime[i], t);
                cert.eigenvalues.push_back(v);
                cert.degrees.push_back(Rat(v + 1));
            }
        }
    }

    bool eig_ok = h_ok;
    for (const Rat& m : cert.eigenvalues)
        if (m < 0) eig_ok = false;

    cert.verdict = cert.cond4 && cert.basis_det != 0 && cert.codim == cert.index && cert.complement_ok &&
                   h_ok && eig_ok;
    if (cert.has_cover)
        cert.verdict = cert.verdict && cert.cond1 && cert.cond2 && cert.phi_rank_value == cert.phi_dim;
    return cert;
}

int generic_index(const LieTable& L, const ParabolicContext& ctx, uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("generic_index: trials >= 1");
    const RootSystem& rs = *ctx.rs;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    auto draw = [&]() {
        int v = pick(rng);
        return Rat(sign(rng) ? v : -v);
    };
    int best = ctx.dim_p();
    for (int t = 0; t < trials; ++t) {
        std::map<Root, Rat> y;
        for (const Root& r : ctx.p_plus_roots) y.emplace(r, draw());
        QVec h(rs.rank, Rat(0));
        for (int i : ctx.piprime) h[i] = draw();
        MatQ M = coadjoint_matrix(L, ctx, y, h);
        best = std::min(best, ctx.dim_p() - exact_rank(M));
    }
    return best;
}

} // namespace parslice
