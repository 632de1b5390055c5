#include "cdoalg/intmat.hpp"

#include "cdoalg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdoalg {

namespace {

IMat identity(size_t n)
{
    IMat m(n, IVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool is_lone(const IMat& a, size_t s)
{
    for (size_t i = s + 1; i < a.size(); ++i)
        if (a[i][s] != 0) return false;
    for (size_t j = s + 1; j < a[0].size(); ++j)
        if (a[s][j] != 0) return false;
    return true;
}

bool locate_min(const IMat& a, size_t s, size_t& ir, size_t& ic)
{
    bool found = false;
    Int best;
    for (size_t i = s; i < a.size(); ++i)
        for (size_t j = s; j < a[0].size(); ++j) {
            if (a[i][j] == 0) continue;
            Int v = abs(a[i][j]);
            if (!found || v < best) {
                best = v;
                ir = i;
                ic = j;
                found = true;
            }
        }
    return found;
}

} // namespace

SmithForm smith_form(const IMat& a)
{
    size_t m = a.size(), n = m ? a[0].size() : 0;
    SmithForm f;
    f.d = a;
    f.l = identity(m);
    f.r = identity(n);
    if (m == 0 || n == 0) return f;
    size_t nmin = std::min(m, n);

    for (size_t s = 0; s < nmin; ++s) {
        size_t ir, ic;
        if (!locate_min(f.d, s, ir, ic)) break; // rest is zero
        while (!is_lone(f.d, s)) {
            locate_min(f.d, s, ir, ic);
            std::swap(f.d[s], f.d[ir]);
            std::swap(f.l[s], f.l[ir]);
            for (size_t i = 0; i < m; ++i) std::swap(f.d[i][s], f.d[i][ic]);
            for (size_t i = 0; i < n; ++i) std::swap(f.r[i][s], f.r[i][ic]);
            for (size_t i = s + 1; i < m; ++i) {
                if (f.d[i][s] == 0) continue;
                Int q = floor_div(f.d[i][s], f.d[s][s]);
                for (size_t j = 0; j < n; ++j) f.d[i][j] -= q * f.d[s][j];
                for (size_t j = 0; j < m; ++j) f.l[i][j] -= q * f.l[s][j];
            }
            for (size_t j = s + 1; j < n; ++j) {
                if (f.d[s][j] == 0) continue;
                Int q = floor_div(f.d[s][j], f.d[s][s]);
                for (size_t i = 0; i < m; ++i) f.d[i][j] -= q * f.d[i][s];
                for (size_t i = 0; i < n; ++i) f.r[i][j] -= q * f.r[i][s];
            }
            if (is_lone(f.d, s)) {
                // Divisibility repair: fold in a row whose entry the pivot misses.
                for (size_t i = s + 1; i < m && is_lone(f.d, s); ++i)
                    for (size_t j = s + 1; j < n; ++j)
                        if (f.d[s][s] != 0 && f.d[i][j] % f.d[s][s] != 0) {
                            for (size_t jj = 0; jj < n; ++jj) f.d[s][jj] += f.d[i][jj];
                            for (size_t jj = 0; jj < m; ++jj) f.l[s][jj] += f.l[i][jj];
                            break;
                        }
            }
        }
        if (f.d[s][s] < 0) {
            for (size_t j = 0; j < n; ++j) f.d[s][j] = -f.d[s][j];
            for (size_t j = 0; j < m; ++j) f.l[s][j] = -f.l[s][j];
        }
    }
    return f;
}

IVec elementary_divisors(const IMat& a)
{
    SmithForm f = smith_form(a);
    size_t nmin = std::min(a.size(), a.empty() ? 0 : a[0].size());
    IVec out(nmin);
    for (size_t i = 0; i < nmin; ++i) out[i] = f.d[i][i];
    return out;
}

IMat hnf_rows(const IMat& a)
{
    if (a.empty()) return {};
    IMat h = a;
    size_t m = h.size(), n = h[0].size();
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        // Euclidean elimination below the pivot.
        while (true) {
            size_t piv = m;
            for (size_t i = row; i < m; ++i)
                if (h[i][col] != 0 && (piv == m || abs(h[i][col]) < abs(h[piv][col]))) piv = i;
            if (piv == m) break;
            std::swap(h[row], h[piv]);
            bool reduced = true;
            for (size_t i = row + 1; i < m; ++i) {
                if (h[i][col] == 0) continue;
                Int q = floor_div(h[i][col], h[row][col]);
                for (size_t j = 0; j < n; ++j) h[i][j] -= q * h[row][j];
                if (h[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (h[row][col] == 0) continue;
        if (h[row][col] < 0)
            for (size_t j = 0; j < n; ++j) h[row][j] = -h[row][j];
        // Reduce entries above the pivot.
        for (size_t i = 0; i < row; ++i) {
            Int q = floor_div(h[i][col], h[row][col]);
            if (q != 0)
                for (size_t j = 0; j < n; ++j) h[i][j] -= q * h[row][j];
        }
        ++row;
    }
    h.resize(row);
    return h;
}

IMat integer_kernel(const IMat& a)
{
    if (a.empty() || a[0].empty()) {
        // Kernel of an empty map is everything (or nothing when n == 0).
        size_t n = a.empty() ? 0 : a[0].size();
        if (a.empty()) return {};
        return identity(n);
    }
    SmithForm f = smith_form(a);
    size_t n = a[0].size();
    size_t nmin = std::min(a.size(), n);
    // a x = 0  <=>  D (R^-1 x) = 0; kernel basis: columns of R at zero divisors.
    IMat basis;
    for (size_t j = 0; j < n; ++j) {
        bool zero_divisor = j >= nmin || f.d[j][j] == 0;
        if (!zero_divisor) continue;
        IVec col(n);
        for (size_t i = 0; i < n; ++i) col[i] = f.r[i][j];
        basis.push_back(col);
    }
    return hnf_rows(basis);
}

IMat rational_preimage_lattice(const QMat& k)
{
    size_t m = k.size(), n = m ? k[0].size() : 0;
    if (n == 0) throw precondition_error("rational_preimage_lattice: empty matrix");
    // Clear denominators: K = M / d. Then K x in Z^m  <=>  M x = 0 (mod d).
    Int d = 1;
    for (auto& row : k)
        for (auto& e : row) {
            Int den = e.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
            d = d / g * den;
        }
    IMat mm(m, IVec(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat v = k[i][j] * Rat(d);
            mm[i][j] = v.get_num();
        }
    // Solve M x = 0 mod d via Smith form: M = L^-1 D R^-1, put y = R^-1 x.
    SmithForm f = smith_form(mm);
    size_t nmin = std::min(m, n);
    // y_i must satisfy d_i y_i = 0 (mod d): y_i in (d / gcd(d_i, d)) Z.
    IMat basis;
    for (size_t j = 0; j < n; ++j) {
        Int step = 1;
        if (j < nmin && f.d[j][j] != 0) {
            Int g;
            mpz_gcd(g.get_mpz_t(), f.d[j][j].get_mpz_t(), d.get_mpz_t());
            step = d / g;
        }
        IVec col(n);
        for (size_t i = 0; i < n; ++i) col[i] = f.r[i][j] * step;
        basis.push_back(col);
    }
    return hnf_rows(basis);
}

std::optional<QVec> solve_rational(const QMat& a, const QVec& b)
{
    size_t n = a.size();
    QMat m = a;
    QVec rhs = b;
    std::vector<size_t> perm(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat d = m[col][col];
        for (size_t j = 0; j < n; ++j) m[col][j] /= d;
        rhs[col] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

QMat rational_inverse(const QMat& a)
{
    size_t n = a.size();
    QMat m = a, inv(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw precondition_error("rational matrix is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rat rational_det(const QMat& a)
{
    size_t n = a.size();
    QMat m = a;
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat d = m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / d;
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

Int lattice_index(const IMat& rows)
{
    IVec div = elementary_divisors(rows);
    Int idx = 1;
    for (auto& d : div) {
        if (d == 0) throw precondition_error("lattice_index: sublattice not of full rank");
        idx *= d;
    }
    return idx;
}

} // namespace cdoalg
