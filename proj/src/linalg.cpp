#include "parslice/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace parslice {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw std::invalid_argument("zero denominator: " + s);
    }
    mpq_canonicalize(q);
    Rat r(q);
    mpq_clear(q);
    return r;
}

namespace {

// Integer row matrix obtained by clearing denominators row by row.
std::vector<std::vector<Int>> integer_rows(const MatQ& m) {
    std::vector<std::vector<Int>> rows(m.rows, std::vector<Int>(m.cols));
    for (int i = 0; i < m.rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols; ++j) {
            Int den = m.at(i, j).get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (int j = 0; j < m.cols; ++j) {
            const Rat& v = m.at(i, j);
            rows[i][j] = v.get_num() * (lcm / v.get_den());
        }
    }
    return rows;
}

void strip_content(std::vector<Int>& row) {
    Int g = 0;
    for (const Int& v : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (Int& v : row) v /= g;
}

} // namespace

int exact_rank(const MatQ& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    auto w = integer_rows(m);
    const int nr = m.rows, nc = m.cols;
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        size_t best = 0;
        for (int i = rank; i < nr; ++i) {
            if (w[i][col] == 0) continue;
            size_t sz = mpz_size(w[i][col].get_mpz_t());
            if (piv < 0 || sz < best) {
                piv = i;
                best = sz;
            }
        }
        if (piv < 0) continue;
        std::swap(w[rank], w[piv]);
        const std::vector<Int>& pr = w[rank];
        const Int& p = pr[col];
        for (int i = rank + 1; i < nr; ++i) {
            if (w[i][col] == 0) continue;
            const Int f = w[i][col];
            for (int j = col + 1; j < nc; ++j)
                w[i][j] = p * w[i][j] - f * pr[j];
            w[i][col] = 0;
            strip_content(w[i]);
        }
        ++rank;
    }
    return rank;
}

Rat exact_det(const MatQ& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return Rat(1);
    auto w = std::vector<std::vector<Rat>>(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);
    // Fraction-free on rationals: entries stay exact; no scaling bookkeeping.
    Rat prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Rat(0);
            std::swap(w[k], w[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                w[i][j] = Rat(w[k][k] * w[i][j] - w[i][k] * w[k][j]) / prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    Rat d = w[n - 1][n - 1];
    if (sign < 0) d = Rat(-d);
    return d;
}

std::optional<QVec> solve_unique(const MatQ& A, const QVec& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("solve_unique: dimension mismatch");
    const int nr = A.rows, nc = A.cols;
    std::vector<QVec> w(nr, QVec(nc + 1));
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nc; ++j) w[i][j] = A.at(i, j);
        w[i][nc] = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (w[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[r], w[piv]);
        Rat inv = Rat(1) / w[r][c];
        for (int j = c; j <= nc; ++j) w[r][j] = Rat(w[r][j] * inv);
        for (int i = 0; i < nr; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (int j = c; j <= nc; ++j) w[i][j] = Rat(w[i][j] - f * w[r][j]);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < nr; ++i)
        if (w[i][nc] != 0) return std::nullopt; // inconsistent
    if (static_cast<int>(pivot_col.size()) < nc)
        throw std::invalid_argument("solve_unique: underdetermined system");
    QVec x(nc, Rat(0));
    for (int k = 0; k < nc; ++k) x[pivot_col[k]] = w[k][nc];
    return x;
}

MatQ invert(const MatQ& m) {
    if (m.rows != m.cols) throw std::invalid_argument("invert: non-square matrix");
    const int n = m.rows;
    std::vector<QVec> w(n, QVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);
        w[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (w[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::invalid_argument("invert: singular matrix");
        std::swap(w[c], w[piv]);
        Rat inv = Rat(1) / w[c][c];
        for (int j = 0; j < 2 * n; ++j) w[c][j] = Rat(w[c][j] * inv);
        for (int i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (int j = 0; j < 2 * n; ++j) w[i][j] = Rat(w[i][j] - f * w[c][j]);
        }
    }
    MatQ out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = w[i][n + j];
    return out;
}

} // namespace parslice
