#include "parslice/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace parslice {

std::string type_name(SimpleType t) {
    switch (t) {
    case SimpleType::A: return "A";
    case SimpleType::B: return "B";
    case SimpleType::C: return "C";
    case SimpleType::D: return "D";
    case SimpleType::E6: return "E6";
    case SimpleType::E7: return "E7";
    case SimpleType::E8: return "E8";
    case SimpleType::F4: return "F4";
    case SimpleType::G2: return "G2";
    }
    return "?";
}

SimpleType type_parse(const std::string& s) {
    std::string u;
    for (char ch : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (u == "A") return SimpleType::A;
    if (u == "B") return SimpleType::B;
    if (u == "C") return SimpleType::C;
    if (u == "D") return SimpleType::D;
    if (u == "E6") return SimpleType::E6;
    if (u == "E7") return SimpleType::E7;
    if (u == "E8") return SimpleType::E8;
    if (u == "F4") return SimpleType::F4;
    if (u == "G2") return SimpleType::G2;
    throw std::invalid_argument("unknown simple type: " + s);
}

bool valid_type_rank(SimpleType t, int rank) {
    switch (t) {
    case SimpleType::A: return rank >= 1;
    case SimpleType::B: return rank >= 2;
    case SimpleType::C: return rank >= 3;
    case SimpleType::D: return rank >= 4;
    case SimpleType::E6: return rank == 6;
    case SimpleType::E7: return rank == 7;
    case SimpleType::E8: return rank == 8;
    case SimpleType::F4: return rank == 4;
    case SimpleType::G2: return rank == 2;
    }
    return false;
}

int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }

bool Root::is_positive() const {
    bool nonzero = false;
    for (int v : c) {
        if (v < 0) return false;
        if (v > 0) nonzero = true;
    }
    return nonzero;
}

Root Root::operator-() const {
    Root r(*this);
    for (int& v : r.c) v = -v;
    return r;
}

Root operator+(const Root& x, const Root& y) {
    Root r(x);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
    return r;
}

Root operator-(const Root& x, const Root& y) {
    Root r(x);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= y.c[i];
    return r;
}

bool canonical_less(const Root& x, const Root& y) {
    int hx = x.height(), hy = y.height();
    if (hx != hy) return hx < hy;
    return x.c < y.c;
}

Weight::Weight(const Root& r) {
    c.reserve(r.c.size());
    for (int v : r.c) c.emplace_back(v);
}

Weight operator+(const Weight& x, const Weight& y) {
    Weight r(x);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = Rat(r.c[i] + y.c[i]);
    return r;
}

std::vector<std::vector<int>> RootSystem::cartan_matrix(SimpleType t, int rank) {
    if (!valid_type_rank(t, rank)) throw std::invalid_argument("invalid (type, rank)");
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    auto chain = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (t) {
    case SimpleType::A:
        for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
        break;
    case SimpleType::B:
        for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
        c[rank - 1][rank - 2] = -2; // alpha_n short
        break;
    case SimpleType::C:
        for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
        c[rank - 2][rank - 1] = -2; // alpha_n long
        break;
    case SimpleType::D:
        for (int i = 0; i + 1 < rank - 1; ++i) chain(i, i + 1);
        chain(rank - 3, rank - 1);
        break;
    case SimpleType::E6:
    case SimpleType::E7:
    case SimpleType::E8:
        chain(0, 2);
        chain(1, 3);
        for (int i = 2; i + 1 < rank; ++i) chain(i, i + 1);
        break;
    case SimpleType::F4:
        chain(0, 1);
        chain(1, 2);
        chain(2, 3);
        c[2][1] = -2; // alpha_3 short
        break;
    case SimpleType::G2:
        c[0][1] = -3; // alpha_1 short
        c[1][0] = -1;
        break;
    }
    return c;
}

namespace {

// Squared lengths (alpha_i, alpha_i), long roots normalized to 2.
QVec squared_lengths(SimpleType t, int rank) {
    QVec d(rank, Rat(2));
    switch (t) {
    case SimpleType::B: d[rank - 1] = 1; break;
    case SimpleType::C:
        for (int i = 0; i + 1 < rank; ++i) d[i] = 1;
        break;
    case SimpleType::F4:
        d[2] = 1;
        d[3] = 1;
        break;
    case SimpleType::G2: d[0] = rat(2, 3); break;
    default: break;
    }
    return d;
}

} // namespace

RootSystem RootSystem::build(SimpleType kind, int rank) {
    RootSystem rs;
    rs.kind = kind;
    rs.rank = rank;
    rs.cartan = cartan_matrix(kind, rank);
    QVec d = squared_lengths(kind, rank);
    rs.form.assign(rank, QVec(rank, Rat(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rs.form[i][j] = Rat(rs.cartan[i][j] * d[i]) / 2;

    // Closure from the simple roots via root strings: alpha + alpha_i is a
    // root iff p - <alpha, alpha_i^vee> > 0 with p = max{k : alpha - k alpha_i in Delta}.
    std::map<std::vector<int>, int> seen;
    std::vector<Root> pos;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> v(rank, 0);
        v[i] = 1;
        seen.emplace(v, 1);
        pos.emplace_back(Root(std::move(v)));
    }
    size_t lo = 0;
    while (lo < pos.size()) {
        size_t hi = pos.size();
        for (size_t k = lo; k < hi; ++k) {
            Root alpha = pos[k];
            for (int i = 0; i < rank; ++i) {
                long pair = 0;
                for (int j = 0; j < rank; ++j) pair += static_cast<long>(alpha.c[j]) * rs.cartan[i][j];
                int p = 0;
                Root down = alpha;
                for (;;) {
                    down.c[i] -= 1;
                    if (!down.is_positive() || !seen.count(down.c)) break;
                    ++p;
                }
                if (p - pair > 0) {
                    Root up = alpha;
                    up.c[i] += 1;
                    if (seen.emplace(up.c, 1).second) pos.push_back(up);
                }
            }
        }
        lo = hi;
    }
    std::sort(pos.begin(), pos.end(), canonical_less);
    rs.positive = std::move(pos);
    for (size_t i = 0; i < rs.positive.size(); ++i) rs.pos_index_.emplace(rs.positive[i].c, static_cast<int>(i));
    return rs;
}

bool RootSystem::is_root(const Root& r) const {
    if (r.is_positive()) return pos_index_.count(r.c) > 0;
    Root n = -r;
    return n.is_positive() && pos_index_.count(n.c) > 0;
}

bool RootSystem::is_positive_root(const Root& r) const { return r.is_positive() && pos_index_.count(r.c) > 0; }

int RootSystem::pos_id(const Root& r) const {
    auto it = pos_index_.find(r.c);
    return it == pos_index_.end() ? -1 : it->second;
}

Root RootSystem::simple_root(int i) const {
    std::vector<int> v(rank, 0);
    v.at(i) = 1;
    return Root(std::move(v));
}

Rat RootSystem::pairing(const QVec& x, const QVec& y) const {
    if (static_cast<int>(x.size()) != rank || static_cast<int>(y.size()) != rank)
        throw std::invalid_argument("pairing: dimension mismatch");
    Rat acc(0);
    for (int i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        Rat row(0);
        for (int j = 0; j < rank; ++j)
            if (y[j] != 0) row += form[i][j] * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Rat RootSystem::pairing(const Root& x, const Root& y) const { return pairing(Weight(x).c, Weight(y).c); }
Rat RootSystem::pairing(const Root& x, const Weight& y) const { return pairing(Weight(x).c, y.c); }
Rat RootSystem::pairing(const Weight& x, const Weight& y) const { return pairing(x.c, y.c); }

Rat RootSystem::coroot_apply(const Root& alpha, const Root& lambda) const {
    return coroot_apply(alpha, Weight(lambda));
}

Rat RootSystem::coroot_apply(const Root& alpha, const Weight& lambda) const {
    Rat aa = pairing(alpha, alpha);
    if (aa == 0) throw std::invalid_argument("coroot_apply: zero vector");
    return Rat(2 * pairing(alpha, lambda)) / aa;
}

Rat RootSystem::simple_coroot_apply(int i, const Root& lambda) const {
    long acc = 0;
    for (int j = 0; j < rank; ++j) acc += static_cast<long>(lambda.c[j]) * cartan[i][j];
    return Rat(acc);
}

Rat RootSystem::simple_coroot_apply(int i, const Weight& lambda) const {
    Rat acc(0);
    for (int j = 0; j < rank; ++j) acc += lambda.c[j] * cartan[i][j];
    return acc;
}

std::vector<Weight> RootSystem::fundamental_weights() const {
    // <w_i, alpha_j^vee> = delta_ij: columns of the inverse Cartan matrix.
    std::vector<QVec> aug(rank, QVec(2 * rank, Rat(0)));
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) aug[i][j] = cartan[i][j];
        aug[i][rank + i] = 1;
    }
    for (int c = 0; c < rank; ++c) {
        int piv = -1;
        for (int i = c; i < rank; ++i)
            if (aug[i][c] != 0) {
                piv = i;
                break;
            }
        std::swap(aug[c], aug[piv]);
        Rat inv = Rat(1) / aug[c][c];
        for (int j = 0; j < 2 * rank; ++j) aug[c][j] = Rat(aug[c][j] * inv);
        for (int i = 0; i < rank; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (int j = 0; j < 2 * rank; ++j) aug[i][j] = Rat(aug[i][j] - f * aug[c][j]);
        }
    }
    std::vector<Weight> w(rank);
    for (int i = 0; i < rank; ++i) {
        QVec v(rank);
        for (int k = 0; k < rank; ++k) v[k] = aug[k][rank + i];
        w[i] = Weight(std::move(v));
    }
    return w;
}

namespace {

// Finds the lexicographically first bijection carrying the component Cartan
// matrix onto the Bourbaki matrix of the target type.
bool match_labeling(const std::vector<int>& nodes, const std::vector<std::vector<int>>& amb,
                    const std::vector<std::vector<int>>& target, std::vector<int>& out) {
    const int m = static_cast<int>(nodes.size());
    std::vector<int> assign(m, -1);
    std::vector<bool> used(m, false);
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == m) return true;
        for (int cand = 0; cand < m; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int prev = 0; prev < k && ok; ++prev) {
                int a = nodes[assign[prev]], b = nodes[cand];
                ok = amb[a][b] == target[prev][k] && amb[b][a] == target[k][prev];
            }
            if (!ok) continue;
            assign[k] = cand;
            used[cand] = true;
            if (rec(k + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    if (!rec(0)) return false;
    out.resize(m);
    for (int k = 0; k < m; ++k) out[k] = nodes[assign[k]];
    return true;
}

} // namespace

std::vector<SubsystemComponent> RootSystem::irreducible_components(const std::vector<int>& subset) const {
    for (int i : subset)
        if (i < 0 || i >= rank) throw std::invalid_argument("irreducible_components: index out of range");
    std::vector<int> sorted(subset);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<SubsystemComponent> out;
    std::vector<bool> done(rank, false);
    for (int start : sorted) {
        if (done[start]) continue;
        std::vector<int> comp{start};
        done[start] = true;
        for (size_t q = 0; q < comp.size(); ++q)
            for (int j : sorted)
                if (!done[j] && cartan[comp[q]][j] != 0) {
                    done[j] = true;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());

        const int m = static_cast<int>(comp.size());
        SubsystemComponent sc;
        sc.rank = m;
        static const SimpleType prefs[] = {SimpleType::A,  SimpleType::B,  SimpleType::C,
                                           SimpleType::D,  SimpleType::E6, SimpleType::E7,
                                           SimpleType::E8, SimpleType::F4, SimpleType::G2};
        bool found = false;
        for (SimpleType t : prefs) {
            if (!valid_type_rank(t, m)) continue;
            auto target = cartan_matrix(t, m);
            std::vector<int> relabel;
            if (match_labeling(comp, cartan, target, relabel)) {
                sc.kind = t;
                sc.simple = std::move(relabel);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("irreducible_components: unclassifiable subdiagram");
        out.push_back(std::move(sc));
    }
    return out;
}

std::vector<Root> RootSystem::subsystem_positive(const std::vector<int>& subset) const {
    std::vector<bool> in(rank, false);
    for (int i : subset) in.at(i) = true;
    std::vector<Root> out;
    for (const Root& r : positive) {
        bool ok = true;
        for (int j = 0; j < rank && ok; ++j)
            if (r.c[j] != 0 && !in[j]) ok = false;
        if (ok) out.push_back(r);
    }
    return out;
}

Root RootSystem::highest_root(const SubsystemComponent& comp) const {
    if (comp.simple.empty()) throw std::invalid_argument("highest_root: empty component");
    auto roots = subsystem_positive(comp.simple);
    // Unique root of maximal height in an irreducible subsystem.
    Root best = roots.front();
    for (const Root& r : roots)
        if (canonical_less(best, r)) best = r;
    for (const Root& r : roots)
        if (r != best && r.height() == best.height())
            throw std::invalid_argument("highest_root: component is not irreducible");
    return best;
}

std::vector<int> RootSystem::minus_w0(SimpleType t, int rank) {
    std::vector<int> p(rank);
    for (int i = 0; i < rank; ++i) p[i] = i;
    switch (t) {
    case SimpleType::A:
        for (int i = 0; i < rank; ++i) p[i] = rank - 1 - i;
        break;
    case SimpleType::D:
        if (rank % 2 == 1) std::swap(p[rank - 2], p[rank - 1]);
        break;
    case SimpleType::E6:
        p[0] = 5;
        p[5] = 0;
        p[2] = 4;
        p[4] = 2;
        break;
    default: break;
    }
    return p;
}

std::vector<int> RootSystem::diagram_involution_j() const {
    return minus_w0(kind, rank);
}

std::vector<int> RootSystem::component_involution(const SubsystemComponent& comp) const {
    std::vector<int> p(rank);
    for (int i = 0; i < rank; ++i) p[i] = i;
    auto local = minus_w0(comp.kind, comp.rank);
    for (int k = 0; k < comp.rank; ++k) p[comp.simple[k]] = comp.simple[local[k]];
    return p;
}

} // namespace parslice
