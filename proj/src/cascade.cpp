#include "parslice/cascade.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace parslice {

std::vector<Root> Cascade::betas() const {
    std::vector<Root> out;
    out.reserve(nodes.size());
    for (const auto& n : nodes) out.push_back(n.beta);
    return out;
}

bool Cascade::has_beta(const Root& b) const { return by_beta_.count(b) > 0; }

const CascadeNode& Cascade::node_of(const Root& beta) const {
    auto it = by_beta_.find(beta);
    if (it == by_beta_.end()) throw std::invalid_argument("cascade: unknown node");
    return nodes[it->second];
}

const std::vector<Root>& Cascade::hset_of(const Root& beta) const { return node_of(beta).hset; }

std::vector<Root> Cascade::hset0_of(const Root& beta) const {
    std::vector<Root> out;
    for (const Root& r : node_of(beta).hset)
        if (r != beta) out.push_back(r);
    return out;
}

bool Cascade::key_leq(const std::vector<int>& k, const std::vector<int>& l) {
    if (k.size() > l.size()) return false;
    return std::equal(k.begin(), k.end(), l.begin());
}

int Cascade::node_with_h(const Root& r) const {
    auto it = h_lookup_.find(r);
    return it == h_lookup_.end() ? -1 : it->second;
}

namespace {

struct Builder {
    const RootSystem& rs;
    Cascade out;

    // P: positive roots of a (closed) subsystem of Delta.
    void recurse(const std::vector<Root>& P, const std::vector<int>& prefix) {
        if (P.empty()) return;
        // Indecomposable elements of P are the subsystem's simple roots.
        std::set<Root> pset(P.begin(), P.end());
        std::vector<Root> simples;
        for (const Root& r : P) {
            bool decomposable = false;
            for (const Root& a : P) {
                if (!canonical_less(a, r)) continue;
                Root b = r - a;
                if (b.is_positive() && pset.count(b)) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) simples.push_back(r);
        }
        // Components connect simples through the invariant form.
        std::vector<int> comp_of(simples.size(), -1);
        int ncomp = 0;
        for (size_t i = 0; i < simples.size(); ++i) {
            if (comp_of[i] >= 0) continue;
            comp_of[i] = ncomp;
            std::vector<size_t> stack{i};
            while (!stack.empty()) {
                size_t u = stack.back();
                stack.pop_back();
                for (size_t v = 0; v < simples.size(); ++v)
                    if (comp_of[v] < 0 && rs.pairing(simples[u], simples[v]) != 0) {
                        comp_of[v] = ncomp;
                        stack.push_back(v);
                    }
            }
            ++ncomp;
        }
        // Each root of P pairs nonzero with a simple root of its own
        // component and is orthogonal to all others.
        std::vector<std::vector<Root>> comp_roots(ncomp);
        for (const Root& r : P) {
            int c = -1;
            for (size_t i = 0; i < simples.size() && c < 0; ++i)
                if (rs.pairing(r, simples[i]) != 0) c = comp_of[i];
            if (c < 0) throw std::logic_error("cascade: isotropic root");
            comp_roots[c].push_back(r);
        }
        // Order siblings by the smallest ambient simple index in support.
        std::vector<int> order(ncomp);
        for (int c = 0; c < ncomp; ++c) order[c] = c;
        auto min_support = [&](int c) {
            int best = rs.rank;
            for (const Root& r : comp_roots[c])
                for (int j = 0; j < rs.rank; ++j)
                    if (r.c[j] != 0) {
                        best = std::min(best, j);
                        break;
                    }
            return best;
        };
        std::sort(order.begin(), order.end(), [&](int a, int b) { return min_support(a) < min_support(b); });

        for (int pos = 0; pos < ncomp; ++pos) {
            int c = order[pos];
            std::vector<int> key = prefix;
            key.push_back(pos + 1);
            // Highest root: unique maximal-height root of an irreducible
            // subsystem.
            Root beta = comp_roots[c].front();
            for (const Root& r : comp_roots[c])
                if (canonical_less(beta, r)) beta = r;
            CascadeNode node;
            node.key = key;
            node.beta = beta;
            node.delta_pos = comp_roots[c];
            std::vector<Root> next;
            for (const Root& r : comp_roots[c]) {
                Rat p = rs.pairing(r, beta);
                if (p > 0)
                    node.hset.push_back(r);
                else if (p == 0)
                    next.push_back(r);
                else
                    throw std::logic_error("cascade: positive root pairing negatively with the highest root");
            }
            std::string nm = "K";
            for (size_t i = 0; i < key.size(); ++i) nm += (i ? "." : "=") + std::to_string(key[i]);
            node.name = nm;
            out.nodes.push_back(std::move(node));
            recurse(next, key);
        }
    }
};

} // namespace

Cascade kostant_cascade(const RootSystem& rs, const std::vector<int>& subset) {
    Builder b{rs, {}};
    b.recurse(rs.subsystem_positive(subset), {});
    Cascade c = std::move(b.out);
    for (size_t i = 0; i < c.nodes.size(); ++i) {
        c.by_beta_.emplace(c.nodes[i].beta, static_cast<int>(i));
        for (const Root& r : c.nodes[i].hset) c.h_lookup_.emplace(r, static_cast<int>(i));
    }
    // Attach customary labels when this is the cascade of a full simple
    // system.
    std::vector<int> all(rs.rank);
    for (int i = 0; i < rs.rank; ++i) all[i] = i;
    std::vector<int> sorted(subset);
    std::sort(sorted.begin(), sorted.end());
    if (sorted == all) {
        for (const auto& [nm, root] : table1_reference(rs.kind, rs.rank))
            if (c.has_beta(root)) c.nodes[c.by_beta_.at(root)].name = nm;
    }
    return c;
}

namespace {

Root span_root(int rank, int from, int to, int coeff = 1) {
    std::vector<int> v(rank, 0);
    for (int j = from; j <= to; ++j) v[j] = coeff;
    return Root(std::move(v));
}

Root lit(std::vector<int> v) { return Root(std::move(v)); }

} // namespace

std::vector<std::pair<std::string, Root>> table1_reference(SimpleType t, int rank) {
    if (!valid_type_rank(t, rank)) throw std::invalid_argument("table1_reference: invalid (type, rank)");
    std::vector<std::pair<std::string, Root>> out;
    const int n = rank;
    auto bname = [](int i) { return "b" + std::to_string(i); };
    switch (t) {
    case SimpleType::A:
        // beta_i = alpha_i + ... + alpha_{n+1-i}
        for (int i = 1; i <= (n + 1) / 2; ++i) out.emplace_back(bname(i), span_root(n, i - 1, n - i));
        break;
    case SimpleType::B:
        // beta_i = alpha_{2i-1} + 2(alpha_{2i} + ... + alpha_n)
        for (int i = 1; i <= (n + 1) / 2; ++i) {
            Root r = span_root(n, 2 * i - 1, n - 1, 2);
            r.c[2 * i - 2] += 1;
            out.emplace_back(bname(i), r);
        }
        for (int i = 1; i <= n / 2; ++i) out.emplace_back(bname(i) + "'", span_root(n, 2 * i - 2, 2 * i - 2));
        break;
    case SimpleType::C:
        // beta_i = 2(alpha_i + ... + alpha_{n-1}) + alpha_n
        for (int i = 1; i <= n; ++i) {
            Root r = span_root(n, i - 1, n - 2, 2);
            r.c[n - 1] += 1;
            out.emplace_back(bname(i), r);
        }
        break;
    case SimpleType::D:
        // beta_i = alpha_{2i-1} + 2(alpha_{2i} + ... + alpha_{n-2}) + alpha_{n-1} + alpha_n
        for (int i = 1; i <= n / 2 - 1; ++i) {
            Root r = span_root(n, 2 * i - 1, n - 3, 2);
            r.c[2 * i - 2] += 1;
            r.c[n - 2] += 1;
            r.c[n - 1] += 1;
            out.emplace_back(bname(i), r);
        }
        for (int i = 1; i <= (n + 1) / 2 - 1; ++i)
            out.emplace_back(bname(i) + "'", span_root(n, 2 * i - 2, 2 * i - 2));
        if (n % 2 == 1)
            out.emplace_back(bname((n - 1) / 2), span_root(n, n - 3, n - 1));
        else {
            out.emplace_back(bname(n / 2), span_root(n, n - 1, n - 1));
            out.emplace_back(bname((n - 2) / 2) + "''", span_root(n, n - 2, n - 2));
        }
        break;
    case SimpleType::E6:
        out.emplace_back("b1", lit({1, 2, 2, 3, 2, 1}));
        out.emplace_back("b2", lit({1, 0, 1, 1, 1, 1}));
        out.emplace_back("b3", lit({0, 0, 1, 1, 1, 0}));
        out.emplace_back("b4", lit({0, 0, 0, 1, 0, 0}));
        break;
    case SimpleType::E7:
        out.emplace_back("b1", lit({2, 2, 3, 4, 3, 2, 1}));
        out.emplace_back("b2", lit({0, 1, 1, 2, 2, 2, 1}));
        out.emplace_back("b3", lit({0, 1, 1, 2, 1, 0, 0}));
        out.emplace_back("b4", lit({0, 0, 1, 0, 0, 0, 0}));
        out.emplace_back("b2'", lit({0, 0, 0, 0, 0, 0, 1}));
        out.emplace_back("b3'", lit({0, 0, 0, 0, 1, 0, 0}));
        out.emplace_back("b3''", lit({0, 1, 0, 0, 0, 0, 0}));
        break;
    case SimpleType::E8:
        out.emplace_back("b1", lit({2, 3, 4, 6, 5, 4, 3, 2}));
        out.emplace_back("b2", lit({2, 2, 3, 4, 3, 2, 1, 0}));
        out.emplace_back("b3", lit({0, 1, 1, 2, 2, 2, 1, 0}));
        out.emplace_back("b4", lit({0, 1, 1, 2, 1, 0, 0, 0}));
        out.emplace_back("b5", lit({0, 0, 1, 0, 0, 0, 0, 0}));
        out.emplace_back("b3'", lit({0, 0, 0, 0, 0, 0, 1, 0}));
        out.emplace_back("b4'", lit({0, 0, 0, 0, 1, 0, 0, 0}));
        out.emplace_back("b4''", lit({0, 1, 0, 0, 0, 0, 0, 0}));
        break;
    case SimpleType::F4:
        out.emplace_back("b1", lit({2, 3, 4, 2}));
        out.emplace_back("b2", lit({0, 1, 2, 2}));
        out.emplace_back("b3", lit({0, 1, 2, 0}));
        out.emplace_back("b4", lit({0, 1, 0, 0}));
        break;
    case SimpleType::G2:
        out.emplace_back("b1", lit({3, 2}));
        out.emplace_back("b2", lit({1, 0}));
        break;
    }
    return out;
}

} // namespace parslice
