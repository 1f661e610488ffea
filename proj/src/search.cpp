#include "parslice/search.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <thread>

namespace parslice {

namespace {

struct RatTripleLess {
    bool operator()(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) const {
        for (int i = 0; i < 3; ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

using HSet = std::set<std::array<Rat, 3>, RatTripleLess>;

int min_codim(const LieTable& L, const ParabolicContext& ctx, const std::vector<Root>& support,
              uint64_t seed, int extra_trials) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, 9);
    std::uniform_int_distribution<int> sgn(0, 1);
    int best = ctx.dim_p();
    for (int t = 0; t <= extra_trials; ++t) {
        std::map<Root, Rat> y;
        for (const Root& r : support) {
            int v = t == 0 ? 1 : pick(rng);
            if (t != 0 && sgn(rng)) v = -v;
            y.emplace(r, Rat(v));
        }
        MatQ M = coadjoint_matrix(L, ctx, y);
        best = std::min(best, ctx.dim_p() - exact_rank(M));
    }
    return best;
}

} // namespace

SearchReport f4_s3_search(uint64_t seed, int jobs) {
    RootSystem rs = RootSystem::build(SimpleType::F4, 4);
    LieTable L = LieTable::build(rs);
    ParabolicContext ctx = build_parabolic(rs, 3);

    const auto& roots = ctx.p_plus_roots; // the 28 root vectors of p
    const int R = static_cast<int>(roots.size());
    // Rows of the eigenvalue map: gamma(h) = ev[0] lambda + ev[1] mu + ev[2] nu.
    std::vector<std::array<long, 3>> ev(R);
    for (int r = 0; r < R; ++r)
        for (int k = 0; k < 3; ++k)
            ev[r][k] = static_cast<long>(rs.simple_coroot_apply(ctx.piprime[k], roots[r]).get_num().get_si());

    static const long targets[4] = {-1, 2, 3, 9};

    // All triples of distinct roots, flattened for the thread split.
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < R; ++a)
        for (int b = a + 1; b < R; ++b)
            for (int c = b + 1; c < R; ++c) triples.push_back({a, b, c});

    SearchReport rep;
    rep.enumeration_size = static_cast<long>(triples.size()) * 64;

    if (jobs < 1) jobs = 1;
    std::vector<HSet> partial(jobs);
    auto worker = [&](int w) {
        HSet& out = partial[w];
        for (size_t idx = w; idx < triples.size(); idx += jobs) {
            const auto& [a, b, c] = triples[idx];
            const auto &ra = ev[a], &rb = ev[b], &rc = ev[c];
            long det = ra[0] * (rb[1] * rc[2] - rb[2] * rc[1]) - ra[1] * (rb[0] * rc[2] - rb[2] * rc[0]) +
                       ra[2] * (rb[0] * rc[1] - rb[1] * rc[0]);
            if (det == 0) continue;
            for (long va : targets)
                for (long vb : targets)
                    for (long vc : targets) {
                        // Cramer on the 3x3 system ev * h = v.
                        long d0 = va * (rb[1] * rc[2] - rb[2] * rc[1]) -
                                  ra[1] * (vb * rc[2] - rb[2] * vc) + ra[2] * (vb * rc[1] - rb[1] * vc);
                        long d1 = ra[0] * (vb * rc[2] - rb[2] * vc) - va * (rb[0] * rc[2] - rb[2] * rc[0]) +
                                  ra[2] * (rb[0] * vc - vb * rc[0]);
                        long d2 = ra[0] * (rb[1] * vc - vb * rc[1]) - ra[1] * (rb[0] * vc - vb * rc[0]) +
                                  va * (rb[0] * rc[1] - rb[1] * rc[0]);
                        out.insert({rat(d0, det), rat(d1, det), rat(d2, det)});
                    }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    HSet all;
    for (auto& p : partial) all.merge(p);
    rep.unique_h = static_cast<long>(all.size());

    for (const auto& h : all) {
        QVec eigs;
        eigs.reserve(R);
        int m1 = 0, m2 = 0, m3 = 0, m9 = 0;
        for (int r = 0; r < R; ++r) {
            Rat e = Rat(h[0] * ev[r][0] + h[1] * ev[r][1] + h[2] * ev[r][2]);
            if (e == -1) ++m1;
            else if (e == 2) ++m2;
            else if (e == 3) ++m3;
            else if (e == 9) ++m9;
            eigs.push_back(e);
        }
        if (m1 < 3 || m2 < 1 || m3 < 1 || m9 < 1) continue;

        SearchCandidate cand;
        cand.h = {h[0], h[1], h[2]};
        cand.eigenvalues = eigs;
        for (int r = 0; r < R; ++r)
            if (eigs[r] == -1) cand.minus_one.push_back(roots[r]);
        if (cand.minus_one.size() > 3) rep.any_large_minus_one_space = true;

        if (cand.minus_one.size() == 3) {
            cand.codim_strict = min_codim(L, ctx, cand.minus_one, seed, 4);
            if (cand.codim_strict == 3) rep.exists_strict = true;
        }
        cand.codim_relaxed = min_codim(L, ctx, cand.minus_one, seed + 1, 4);
        if (cand.codim_relaxed == 3) rep.exists_relaxed = true;
        rep.candidates.push_back(std::move(cand));
    }
    rep.exists_adapted_pair = rep.exists_strict || rep.exists_relaxed;
    return rep;
}

} // namespace parslice
