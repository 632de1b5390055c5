#include "cdoalg/poly.hpp"

#include "cdoalg/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace cdoalg {

Rat parse_rat(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s, s, 0);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string qvec_str(const QVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

Monomial Monomial::times(const Monomial& o) const
{
    Monomial r;
    size_t i = 0, j = 0;
    while (i < v.size() || j < o.v.size()) {
        if (j == o.v.size() || (i < v.size() && v[i].first < o.v[j].first))
            r.v.push_back(v[i++]);
        else if (i == v.size() || o.v[j].first < v[i].first)
            r.v.push_back(o.v[j++]);
        else {
            r.v.emplace_back(v[i].first, v[i].second + o.v[j].second);
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::divide(const Monomial& o, Monomial& out) const
{
    out.v.clear();
    size_t i = 0, j = 0;
    while (i < v.size() || j < o.v.size()) {
        if (j == o.v.size() || (i < v.size() && v[i].first < o.v[j].first))
            out.v.push_back(v[i++]);
        else if (i == v.size() || o.v[j].first < v[i].first)
            return false; // o has a variable this monomial lacks
        else {
            int e = v[i].second - o.v[j].second;
            if (e < 0) return false;
            if (e > 0) out.v.emplace_back(v[i].first, e);
            ++i, ++j;
        }
    }
    return true;
}

bool MonoCmp::operator()(const Monomial& a, const Monomial& b) const
{
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Same degree: lexicographic, lower variable index and higher exponent first.
    size_t i = 0, j = 0;
    while (i < a.v.size() && j < b.v.size()) {
        if (a.v[i].first != b.v[j].first)
            return a.v[i].first > b.v[j].first; // b has the smaller variable -> b larger
        if (a.v[i].second != b.v[j].second) return a.v[i].second < b.v[j].second;
        ++i, ++j;
    }
    return i == a.v.size() && j != b.v.size();
}

void Poly::set_constant(const Int& c)
{
    terms_.clear();
    if (c != 0) terms_[Monomial{}] = c;
}

Poly Poly::variable(int i)
{
    Poly p;
    Monomial m;
    m.v.emplace_back(i, 1);
    p.terms_[m] = 1;
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const Int& Poly::constant_value() const
{
    static const Int zero(0);
    if (terms_.empty()) return zero;
    return terms_.begin()->second;
}

int Poly::max_var() const
{
    int m = -1;
    for (auto& [mono, c] : terms_)
        for (auto& [var, e] : mono.v)
            if (var > m) m = var;
    return m;
}

int Poly::degree_in(int var) const
{
    int d = 0;
    for (auto& [mono, c] : terms_) d = std::max(d, mono.degree_in(var));
    return d;
}

int Poly::total_degree() const
{
    int d = 0;
    for (auto& [mono, c] : terms_) d = std::max(d, mono.total_degree());
    return d;
}

void Poly::add_term(const Monomial& m, const Int& c)
{
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const
{
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const
{
    Poly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
    return r;
}

Poly Poly::operator*(const Int& c) const
{
    Poly r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Poly Poly::pow(int n) const
{
    if (n < 0) throw std::logic_error("Poly::pow: negative exponent");
    Poly r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

Int Poly::content() const
{
    Int g = 0;
    for (auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int Poly::leading_coefficient() const
{
    if (terms_.empty()) return Int(0);
    return terms_.rbegin()->second;
}

std::vector<Poly> Poly::coeffs_in(int var) const
{
    std::vector<Poly> out(degree_in(var) + 1);
    for (auto& [m, c] : terms_) {
        int e = m.degree_in(var);
        Monomial rest;
        for (auto& [w, k] : m.v)
            if (w != var) rest.v.emplace_back(w, k);
        out[e].add_term(rest, c);
    }
    return out;
}

Poly Poly::from_coeffs(int var, const std::vector<Poly>& c)
{
    Poly r;
    Poly x = Poly::variable(var);
    for (size_t e = 0; e < c.size(); ++e) r = r + c[e] * x.pow((int)e);
    return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw std::logic_error("Poly::divexact: division by zero");
    Poly rem = a, q;
    const auto& blead = *b.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Monomial qm;
        if (!rlead.first.divide(blead.first, qm))
            throw std::logic_error("Poly::divexact: not divisible (monomial)");
        Int qc;
        if (!mpz_divisible_p(rlead.second.get_mpz_t(), blead.second.get_mpz_t()))
            throw std::logic_error("Poly::divexact: not divisible (coefficient)");
        mpz_divexact(qc.get_mpz_t(), rlead.second.get_mpz_t(), blead.second.get_mpz_t());
        Poly t;
        t.terms_[qm] = qc;
        q = q + t;
        rem = rem - t * b;
    }
    return q;
}

namespace {

// Content of `a` seen as univariate in `var` (gcd of its Poly coefficients).
Poly content_in(const Poly& a, int var)
{
    Poly g;
    for (const Poly& c : a.coeffs_in(var)) {
        if (c.is_zero()) continue;
        g = Poly::gcd(g, c);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g;
}

Poly primitive_in(const Poly& a, int var) { return Poly::divexact(a, content_in(a, var)); }

// Pseudo-remainder of a by b, both univariate in `var` with deg(a) >= deg(b) allowed
// in any order; returns prem with multiplier lc(b)^(deg a - deg b + 1).
Poly pseudo_rem(const Poly& a, const Poly& b, int var)
{
    int db = b.degree_in(var);
    Poly lb = b.coeffs_in(var)[db];
    Poly r = a;
    int e = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        Poly lr = r.coeffs_in(var)[dr];
        Poly shift = Poly::variable(var).pow(dr - db);
        r = r * lb - lr * shift * b;
        --e;
    }
    if (e > 0) r = r * lb.pow(e);
    return r;
}

Poly positive_lead(const Poly& p)
{
    if (p.leading_coefficient() < 0) return -p;
    return p;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return positive_lead(b);
    if (b.is_zero()) return positive_lead(a);
    if (a.is_constant() && b.is_constant()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
        return Poly(g);
    }
    int var = std::max(a.max_var(), b.max_var());
    if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
    if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

    Poly g_cont = gcd(content_in(a, var), content_in(b, var));
    Poly u = primitive_in(a, var), v = primitive_in(b, var);
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
    while (true) {
        Poly r = pseudo_rem(u, v, var);
        if (r.is_zero()) break;
        u = v;
        v = primitive_in(r, var);
        if (v.degree_in(var) == 0) {
            // Remainder free of var: primitive gcd is trivial in var.
            v = Poly(1);
            break;
        }
    }
    return positive_lead(g_cont * v);
}

Rat Poly::eval(const QVec& point) const
{
    Rat s = 0;
    for (auto& [m, c] : terms_) {
        Rat t(c);
        for (auto& [var, e] : m.v) {
            if (var >= (int)point.size()) throw std::logic_error("Poly::eval: missing variable value");
            for (int i = 0; i < e; ++i) t *= point[var];
        }
        s += t;
    }
    return s;
}

std::string Poly::default_var_name(int i)
{
    if (i == 0) return "k";
    return "k" + std::to_string(i + 1);
}

std::string Poly::str() const { return str(default_var_name); }

std::string Poly::str(const std::function<std::string(int)>& name) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Int& c = it->second;
        std::string mono;
        for (auto& [var, e] : m.v) {
            if (!mono.empty()) mono += "*";
            mono += name(var);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        Int ca = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (mono.empty())
            os << ca.get_str();
        else if (ca == 1)
            os << mono;
        else
            os << ca.get_str() << "*" << mono;
    }
    return os.str();
}

} // namespace cdoalg
