#include "ndeg/linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ndeg {

std::vector<int> members(Subset s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

Subset subset_of(const std::vector<int>& idx) {
    Subset s = 0;
    for (int i : idx) s |= 1u << i;
    return s;
}

long gcd_all(const IVec& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::labs(x));
    return g;
}

IVec primitive(const IVec& v) {
    long g = gcd_all(v);
    if (g <= 1) return v;
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

long dot(const IVec& a, const IVec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec vsub(const IVec& a, const IVec& b) {
    IVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IVec vadd(const IVec& a, const IVec& b) {
    IVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IVec unit(int d, int i) {
    IVec e(d, 0);
    e[i] = 1;
    return e;
}

bool is_zero(const IVec& v) {
    for (long x : v)
        if (x) return false;
    return true;
}

namespace {

using QMat = std::vector<QVec>;

QMat to_q(const IMat& rows, int ncols) {
    QMat m(rows.size(), QVec(ncols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < ncols; ++j) m[i][j] = rows[i][j];
    return m;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m, int ncols) {
    std::vector<int> piv;
    size_t r = 0;
    for (int c = 0; c < ncols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        mpq_class inv = 1 / m[r][c];
        for (int j = 0; j < ncols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (int j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

IVec scale_to_integer(const QVec& v) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IVec out(v.size());
    mpz_class g = 0;
    std::vector<mpz_class> z(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        z[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    for (size_t i = 0; i < v.size(); ++i) {
        if (g != 0) z[i] /= g;
        if (!z[i].fits_slong_p()) throw std::overflow_error("integer vector entry out of range");
        out[i] = z[i].get_si();
    }
    return out;
}

}  // namespace

int rank(const IMat& rows) {
    if (rows.empty()) return 0;
    int n = static_cast<int>(rows[0].size());
    QMat m = to_q(rows, n);
    return static_cast<int>(rref(m, n).size());
}

IMat kernel(const IMat& rows, int ncols) {
    QMat m = to_q(rows, ncols);
    auto piv = rref(m, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (int c : piv) is_piv[c] = true;
    IMat out;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        QVec v(ncols);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(scale_to_integer(v));
    }
    return out;
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat to_z(const IMat& rows, int ncols) {
    ZMat m(rows.size(), std::vector<mpz_class>(ncols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < ncols; ++j) m[i][j] = rows[i][j];
    return m;
}

// Row Hermite normal form by unimodular row operations; drops zero rows.
ZMat hermite(ZMat m, int ncols) {
    size_t r = 0;
    for (int c = 0; c < ncols && r < m.size(); ++c) {
        for (;;) {
            size_t best = m.size();
            for (size_t i = r; i < m.size(); ++i)
                if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
            if (best == m.size()) break;
            std::swap(m[r], m[best]);
            bool done = true;
            for (size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
                for (int j = 0; j < ncols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < m.size() && m[r][c] != 0) {
            if (m[r][c] < 0)
                for (int j = 0; j < ncols; ++j) m[r][j] = -m[r][j];
            for (size_t i = 0; i < r; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
                for (int j = 0; j < ncols; ++j) m[i][j] -= q * m[r][j];
            }
            ++r;
        }
    }
    m.resize(r);
    return m;
}

IMat to_long(const ZMat& m) {
    IMat out;
    for (const auto& row : m) {
        IVec v;
        for (const auto& x : row) {
            if (!x.fits_slong_p()) throw std::overflow_error("lattice entry out of range");
            v.push_back(x.get_si());
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

IMat hermite_basis(const IMat& rows, int ncols) { return to_long(hermite(to_z(rows, ncols), ncols)); }

IMat saturated_basis(const IMat& rows, int ncols) {
    int r = rows.empty() ? 0 : rank(rows);
    if (r == 0) return {};
    if (r == ncols) {
        IMat id;
        for (int i = 0; i < ncols; ++i) id.push_back(unit(ncols, i));
        return id;
    }
    // Lattice points of the span = integer kernel of the orthogonal complement.
    IMat perp = kernel(rows, ncols);
    int m = static_cast<int>(perp.size());
    // Column operations on perp (m x ncols) tracked in U; zero columns of perp*U give the kernel.
    ZMat A = to_z(perp, ncols);
    ZMat U(ncols, std::vector<mpz_class>(ncols));
    for (int i = 0; i < ncols; ++i) U[i][i] = 1;
    auto colop = [&](int dst, int src, const mpz_class& q) {
        for (int i = 0; i < m; ++i) A[i][dst] -= q * A[i][src];
        for (int i = 0; i < ncols; ++i) U[i][dst] -= q * U[i][src];
    };
    auto colswap = [&](int a, int b) {
        for (int i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
        for (int i = 0; i < ncols; ++i) std::swap(U[i][a], U[i][b]);
    };
    int c = 0;
    for (int row = 0; row < m && c < ncols; ++row) {
        for (;;) {
            int best = -1;
            for (int j = c; j < ncols; ++j)
                if (A[row][j] != 0 && (best < 0 || abs(A[row][j]) < abs(A[row][best]))) best = j;
            if (best < 0) break;
            colswap(c, best);
            bool done = true;
            for (int j = c + 1; j < ncols; ++j) {
                if (A[row][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A[row][j].get_mpz_t(), A[row][c].get_mpz_t());
                colop(j, c, q);
                if (A[row][j] != 0) done = false;
            }
            if (done) {
                ++c;
                break;
            }
        }
    }
    IMat basis;
    for (int j = c; j < ncols; ++j) {
        IVec v(ncols);
        for (int i = 0; i < ncols; ++i) v[i] = U[i][j].get_si();
        basis.push_back(v);
    }
    return hermite_basis(basis, ncols);
}

bool coords_in_basis(const IMat& B, const IVec& x, QVec& out) {
    size_t n = x.size();
    QVec rem(n);
    for (size_t i = 0; i < n; ++i) rem[i] = x[i];
    out.assign(B.size(), 0);
    for (size_t r = 0; r < B.size(); ++r) {
        size_t p = 0;
        while (p < n && B[r][p] == 0) ++p;
        if (p == n) continue;
        out[r] = rem[p] / B[r][p];
        for (size_t j = 0; j < n; ++j) rem[j] -= out[r] * B[r][j];
    }
    for (const auto& v : rem)
        if (v != 0) return false;
    return true;
}

mpz_class det(const IMat& square) {
    size_t n = square.size();
    if (n == 0) return 1;
    ZMat m = to_z(square, static_cast<int>(n));
    mpz_class sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace ndeg
