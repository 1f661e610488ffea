#include "parslice/chevalley.hpp"

#include <random>
#include <stdexcept>

namespace parslice {

bool LieElt::is_zero() const {
    for (const auto& [k, v] : x)
        if (v != 0) return false;
    for (const Rat& v : h)
        if (v != 0) return false;
    return true;
}

void LieElt::add_root(int sid, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = x.emplace(sid, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) x.erase(it);
    }
}

void LieElt::add_cartan(const QVec& v, const Rat& scale, int rank) {
    if (h.empty()) h.assign(rank, Rat(0));
    for (size_t i = 0; i < v.size(); ++i) h[i] += v[i] * scale;
}

namespace {

// Length of the down-string: max k with b - k*a a root.
int down_string(const RootSystem& rs, const Root& a, const Root& b) {
    int p = 0;
    Root r = b - a;
    while (rs.is_root(r)) {
        ++p;
        r = r - a;
    }
    return p;
}

} // namespace

LieTable LieTable::build(const RootSystem& rs, SignConvention sc) {
    LieTable t;
    t.rs_ = &rs;
    t.sc_ = sc;
    const int P = static_cast<int>(rs.num_positive());
    t.npos_.assign(P, std::vector<long>(P, 0));

    // Positive roots come in canonical order, so iterating them gives sums
    // in nondecreasing height; all constants used on the right-hand side of
    // the derivation below are already known.
    for (int g = 0; g < P; ++g) {
        const Root& gamma = rs.positive[g];
        if (gamma.height() < 2) continue;
        // Decompositions gamma = a + b with a <= b in canonical order.
        std::vector<std::pair<int, int>> decomps;
        for (int ia = 0; ia < P; ++ia) {
            const Root& a = rs.positive[ia];
            if (a.height() * 2 > gamma.height()) break;
            Root b = gamma - a;
            int ib = rs.pos_id(b);
            if (ib < 0 || ib <= ia) continue;
            decomps.emplace_back(ia, ib);
        }
        if (decomps.empty()) throw std::logic_error("no decomposition for a non-simple root");
        // Extraspecial pair: minimal first component.
        auto [ea, eb] = decomps.front();
        long base = down_string(rs, rs.positive[ea], rs.positive[eb]) + 1;
        if (sc == SignConvention::negated_extraspecial) base = -base;
        t.npos_[ea][eb] = base;
        t.npos_[eb][ea] = -base;

        Rat gg = rs.pairing(gamma, gamma);
        for (size_t d = 1; d < decomps.size(); ++d) {
            auto [xa, xb] = decomps[d];
            const Root& x = rs.positive[xa];
            const Root& e = rs.positive[xb];
            const Root& a = rs.positive[ea];
            const Root& b = rs.positive[eb];
            // From the four-root relation on (x, e, -a, -b):
            //   N_{x,e} N_{-a,-b}/(gamma,gamma)
            //     + N_{e,-a} N_{x,-b}/(e-a,e-a) + N_{-a,x} N_{e,-b}/(x-a,x-a) = 0
            Rat acc(0);
            Root ea_diff = e - a;
            if (rs.is_root(ea_diff)) {
                Rat t2 = t.n_const(e, -a) * t.n_const(x, -b);
                acc += t2 / rs.pairing(ea_diff, ea_diff);
            }
            Root xa_diff = x - a;
            if (rs.is_root(xa_diff)) {
                Rat t3 = t.n_const(-a, x) * t.n_const(e, -b);
                acc += t3 / rs.pairing(xa_diff, xa_diff);
            }
            Rat nab(t.npos_[ea][eb]);
            Rat val = Rat(gg * acc) / nab;
            if (!is_integer(val)) throw std::logic_error("non-integral derived structure constant");
            long n = static_cast<long>(val.get_num().get_si());
            long expect = down_string(rs, x, e) + 1;
            if (n != expect && n != -expect)
                throw std::logic_error("derived structure constant violates the root-string bound");
            t.npos_[xa][xb] = n;
            t.npos_[xb][xa] = -n;
        }
    }
    return t;
}

long LieTable::n_signed(int sa, int sb) const {
    const RootSystem& rs = *rs_;
    if (sa > 0 && sb > 0) return npos_[sa - 1][sb - 1];
    if (sa < 0 && sb < 0) return -npos_[-sa - 1][-sb - 1];
    if (sa < 0) return -n_signed(sb, sa);
    // a positive, b negative; c = a + b is a root by caller contract.
    const Root& a = rs.positive[sa - 1];
    const Root& d = rs.positive[-sb - 1]; // b = -d
    Root c = a - d;
    if (c.is_positive()) {
        // N_{a,-d} = (c,c)/(a,a) N_{c,d}
        Rat f = rs.pairing(c, c) / rs.pairing(a, a);
        Rat v = Rat(f * Rat(npos_[rs.pos_id(c)][-sb - 1]));
        if (!is_integer(v)) throw std::logic_error("non-integral mixed structure constant");
        return static_cast<long>(v.get_num().get_si());
    }
    Root e = d - a;
    // N_{a,-d} = (e,e)/(d,d) N_{e,a}
    Rat f = rs.pairing(e, e) / rs.pairing(d, d);
    Rat v = Rat(f * Rat(npos_[rs.pos_id(e)][sa - 1]));
    if (!is_integer(v)) throw std::logic_error("non-integral mixed structure constant");
    return static_cast<long>(v.get_num().get_si());
}

int LieTable::sid_of_root(const Root& r) const {
    int id = rs_->pos_id(r);
    if (id >= 0) return id + 1;
    id = rs_->pos_id(-r);
    if (id >= 0) return -(id + 1);
    return 0;
}

Root LieTable::root_of_sid(int sid) const {
    const Root& r = rs_->positive.at(std::abs(sid) - 1);
    return sid > 0 ? r : -r;
}

Rat LieTable::n_const(const Root& a, const Root& b) const {
    Root sum = a + b;
    if (sum.c == std::vector<int>(rs_->rank, 0))
        throw std::invalid_argument("n_const: a + b = 0, bracket is a coroot");
    if (!rs_->is_root(sum)) return Rat(0);
    int sa = sid_of_root(a), sb = sid_of_root(b);
    if (sa == 0 || sb == 0) throw std::invalid_argument("n_const: not a root");
    return Rat(n_signed(sa, sb));
}

std::vector<long> LieTable::coroot_coords(const Root& a) const {
    const RootSystem& rs = *rs_;
    Root pa = a.is_positive() ? a : -a;
    if (!rs.is_positive_root(pa)) throw std::invalid_argument("coroot_coords: not a root");
    Rat aa = rs.pairing(pa, pa);
    std::vector<long> out(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i) {
        if (pa.c[i] == 0) continue;
        Rat v = Rat(Rat(pa.c[i]) * rs.form[i][i] / aa);
        if (!is_integer(v)) throw std::logic_error("coroot_coords: non-integral coroot");
        out[i] = static_cast<long>(v.get_num().get_si());
    }
    if (!a.is_positive())
        for (long& v : out) v = -v;
    return out;
}

Rat LieTable::cartan_eval(const Root& lambda, const QVec& h) const {
    Rat acc(0);
    for (int i = 0; i < rs_->rank; ++i) {
        if (i >= static_cast<int>(h.size()) || h[i] == 0) continue;
        acc += h[i] * rs_->simple_coroot_apply(i, lambda);
    }
    return acc;
}

LieElt LieTable::bracket(const LieElt& x, const LieElt& y) const {
    const RootSystem& rs = *rs_;
    LieElt out;
    for (const auto& [sa, ca] : x.x) {
        Root a = root_of_sid(sa);
        for (const auto& [sb, cb] : y.x) {
            if (sb == -sa) {
                auto cc = coroot_coords(a);
                QVec v(cc.begin(), cc.end());
                out.add_cartan(v, Rat(ca * cb), rs.rank);
                continue;
            }
            Root b = root_of_sid(sb);
            Root sum = a + b;
            if (!rs.is_root(sum)) continue;
            out.add_root(sid_of_root(sum), Rat(ca * cb * Rat(n_signed(sa, sb))));
        }
    }
    if (!y.h.empty())
        for (const auto& [sa, ca] : x.x) {
            Root a = root_of_sid(sa);
            out.add_root(sa, Rat(-ca * cartan_eval(a, y.h)));
        }
    if (!x.h.empty())
        for (const auto& [sb, cb] : y.x) {
            Root b = root_of_sid(sb);
            out.add_root(sb, Rat(cb * cartan_eval(b, x.h)));
        }
    return out;
}

LieElt LieTable::root_vector(const Root& r, const Rat& c) const {
    LieElt e;
    int sid = sid_of_root(r);
    if (sid == 0) throw std::invalid_argument("root_vector: not a root");
    e.add_root(sid, c);
    return e;
}

Rat LieTable::invariant_form(const LieElt& x, const LieElt& y) const {
    const RootSystem& rs = *rs_;
    Rat acc(0);
    for (const auto& [sa, ca] : x.x) {
        auto it = y.x.find(-sa);
        if (it == y.x.end()) continue;
        Root a = root_of_sid(sa);
        acc += ca * it->second * Rat(2) / rs.pairing(a, a);
    }
    if (!x.h.empty() && !y.h.empty()) {
        // B(alpha_i^vee, alpha_j^vee) = 4 (alpha_i, alpha_j) / ((alpha_i,alpha_i)(alpha_j,alpha_j))
        for (int i = 0; i < rs.rank; ++i) {
            if (x.h[i] == 0) continue;
            for (int j = 0; j < rs.rank; ++j) {
                if (y.h[j] == 0) continue;
                Rat bij = Rat(Rat(4) * rs.form[i][j]) / Rat(rs.form[i][i] * rs.form[j][j]);
                acc += x.h[i] * y.h[j] * bij;
            }
        }
    }
    return acc;
}

long LieTable::jacobi_check(uint64_t seed, long samples) const {
    const RootSystem& rs = *rs_;
    std::vector<LieElt> basis;
    const int P = static_cast<int>(rs.num_positive());
    for (int i = 1; i <= P; ++i) {
        LieElt e;
        e.add_root(i, Rat(1));
        basis.push_back(e);
        LieElt f;
        f.add_root(-i, Rat(1));
        basis.push_back(f);
    }
    for (int i = 0; i < rs.rank; ++i) {
        LieElt h;
        QVec v(rs.rank, Rat(0));
        v[i] = 1;
        h.add_cartan(v, Rat(1), rs.rank);
        basis.push_back(h);
    }
    auto jacobi = [&](const LieElt& a, const LieElt& b, const LieElt& c) {
        LieElt s = bracket(a, bracket(b, c));
        LieElt t = bracket(b, bracket(c, a));
        LieElt u = bracket(c, bracket(a, b));
        LieElt sum;
        for (const auto& e : {s, t, u}) {
            for (const auto& [k, v] : e.x) sum.add_root(k, v);
            if (!e.h.empty()) sum.add_cartan(e.h, Rat(1), rs.rank);
        }
        return sum.is_zero();
    };
    long failures = 0;
    const long n = static_cast<long>(basis.size());
    if (rs.rank <= 4) {
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j)
                for (long k = j + 1; k < n; ++k)
                    if (!jacobi(basis[i], basis[j], basis[k])) ++failures;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> pick(0, n - 1);
        for (long t = 0; t < samples; ++t)
            if (!jacobi(basis[pick(rng)], basis[pick(rng)], basis[pick(rng)])) ++failures;
    }
    return failures;
}

} // namespace parslice
