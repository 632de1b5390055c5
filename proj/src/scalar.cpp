#include "cdoalg/scalar.hpp"

#include <cctype>

namespace cdoalg {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw precondition_error("Scalar: zero denominator");
    normalize();
}

void Scalar::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        num_ = Poly::divexact(num_, g);
        den_ = Poly::divexact(den_, g);
    }
    Int cg;
    mpz_gcd(cg.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (cg > 1) {
        num_ = Poly::divexact(num_, Poly(cg));
        den_ = Poly::divexact(den_, Poly(cg));
    }
    if (den_.leading_coefficient() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rat Scalar::constant_value() const
{
    Rat r(num_.constant_value(), den_.constant_value());
    r.canonicalize();
    return r;
}

bool Scalar::is_integer() const
{
    return is_constant() && den_.constant_value() == 1;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }

Scalar Scalar::operator/(const Scalar& o) const
{
    if (o.is_zero()) throw precondition_error("Scalar: division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

bool Scalar::operator<(const Scalar& o) const
{
    // Any deterministic total order works; compare canonical strings.
    return str() < o.str();
}

std::string Scalar::str() const
{
    if (den_.is_constant() && den_.constant_value() == 1) return "(" + num_.str() + ")";
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Rat Scalar::eval(const QVec& point) const
{
    Rat d = den_.eval(point);
    if (d == 0) throw precondition_error("Scalar::eval: pole at evaluation point");
    return num_.eval(point) / d;
}

namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip_ws()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, s, (long)pos); }

    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Scalar parse_expr()
    {
        Scalar v = parse_term();
        while (true) {
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }

    Scalar parse_term()
    {
        Scalar v = parse_power();
        while (true) {
            if (eat('*'))
                v = v * parse_power();
            else if (eat('/'))
                v = v / parse_power();
            else
                return v;
        }
    }

    Scalar parse_power()
    {
        Scalar base = parse_atom();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) fail("expected integer exponent");
            int e = std::stoi(s.substr(start, pos - start));
            Scalar r(1);
            for (int i = 0; i < e; ++i) r = r * base;
            if (neg) r = Scalar(1) / r;
            return r;
        }
        return base;
    }

    Scalar parse_atom()
    {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        if (eat('(')) {
            Scalar v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) return -parse_atom();
        if (eat('+')) return parse_atom();
        char c = s[pos];
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            return Scalar(Rat(Int(s.substr(start, pos - start)), 1));
        }
        if (c == 'k') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) return Scalar::variable(0);
            int idx = std::stoi(s.substr(start, pos - start));
            if (idx < 1) fail("variable index must be >= 1");
            return Scalar::variable(idx - 1);
        }
        fail("unexpected character in scalar expression");
    }
};

} // namespace

Scalar parse_scalar(const std::string& text)
{
    ScalarParser p(text);
    Scalar v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after expression");
    return v;
}

Scalar smat_det(const SMat& m)
{
    size_t n = m.size();
    if (n == 0) return Scalar(1);
    if (n == 1) return m[0][0];
    Scalar det(0);
    // Laplace expansion along the first row; matrices here stay small.
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        SMat minor;
        for (size_t i = 1; i < n; ++i) {
            SVec row;
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(row);
        }
        Scalar term = m[0][j] * smat_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

SMat smat_inverse(const SMat& m)
{
    size_t n = m.size();
    SMat a = m;
    SMat inv(n, SVec(n, Scalar(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw precondition_error("matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[col][j];
                inv[i][j] = inv[i][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

SVec smat_vec(const SMat& m, const SVec& v)
{
    SVec r(m.size(), Scalar(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] = r[i] + m[i][j] * v[j];
    return r;
}

Scalar sdot(const SVec& a, const SVec& b)
{
    Scalar s(0);
    for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

} // namespace cdoalg
