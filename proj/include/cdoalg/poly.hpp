#pragma once

#include "cdoalg/numeric.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cdoalg {

// Sparse monomial: (variable index, exponent) pairs, sorted by variable,
// exponents > 0.
struct Monomial {
    std::vector<std::pair<int, int>> v;

    int total_degree() const
    {
        int d = 0;
        for (auto& [var, e] : v) d += e;
        return d;
    }
    int degree_in(int var) const
    {
        for (auto& [w, e] : v)
            if (w == var) return e;
        return 0;
    }
    bool is_one() const { return v.empty(); }
    Monomial times(const Monomial& o) const;
    // nullopt-style division: returns false if o does not divide *this.
    bool divide(const Monomial& o, Monomial& out) const;
    bool operator==(const Monomial& o) const { return v == o.v; }
};

// Graded lexicographic order (total degree first).
struct MonoCmp {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial with arbitrary-precision integer coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(long c) { set_constant(Int(c)); }
    explicit Poly(const Int& c) { set_constant(c); }

    static Poly variable(int i);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Int& constant_value() const; // requires is_constant()
    int max_var() const;               // -1 if constant
    int degree_in(int var) const;
    int total_degree() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Int& c) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int n) const;

    Int content() const;          // gcd of coefficients, positive; 0 for zero poly
    Int leading_coefficient() const; // w.r.t. graded lex; 0 for zero poly

    // Exact division; throws std::logic_error if not divisible.
    static Poly divexact(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b); // positive leading coefficient

    // Univariate view in `var` with Poly coefficients (index = exponent).
    std::vector<Poly> coeffs_in(int var) const;
    static Poly from_coeffs(int var, const std::vector<Poly>& c);

    Rat eval(const QVec& point) const; // point[i] substituted for variable i

    std::string str(const std::function<std::string(int)>& name) const;
    std::string str() const; // default variable names k, k2, k3, ...

    static std::string default_var_name(int i);

    const std::map<Monomial, Int, MonoCmp>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Int& c); // accumulates, drops zeros

  private:
    void set_constant(const Int& c);
    std::map<Monomial, Int, MonoCmp> terms_;
};

} // namespace cdoalg
