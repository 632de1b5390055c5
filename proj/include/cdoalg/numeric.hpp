#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace cdoalg {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a", "a/b" and "-a/b" with arbitrary-precision parts.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

using QVec = std::vector<Rat>;
using QMat = std::vector<std::vector<Rat>>;
using IVec = std::vector<Int>;
using IMat = std::vector<std::vector<Int>>;

inline Rat dot(const QVec& a, const QVec& b)
{
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec operator+(const QVec& a, const QVec& b)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec operator-(const QVec& a, const QVec& b)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec operator-(const QVec& a)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline QVec operator*(const Rat& c, const QVec& a)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const QVec& a)
{
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline bool all_integer(const QVec& a)
{
    for (const auto& x : a)
        if (!is_integer(x)) return false;
    return true;
}

inline QVec mat_vec(const QMat& m, const QVec& v)
{
    QVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

std::string qvec_str(const QVec& v);

} // namespace cdoalg
