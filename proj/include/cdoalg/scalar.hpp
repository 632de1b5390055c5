#pragma once

#include "cdoalg/errors.hpp"
#include "cdoalg/poly.hpp"

#include <string>
#include <vector>

namespace cdoalg {

// Element of the rational function field Q(k, k2, ...) kept in canonical form:
// integer-coefficient numerator/denominator, gcd-reduced (polynomial and
// integer content), denominator with positive leading coefficient.
class Scalar {
  public:
    Scalar() : num_(0), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(const Int& c) : num_(c), den_(1) {}
    Scalar(const Rat& r) : Scalar(Poly(Int(r.get_num())), Poly(Int(r.get_den()))) {}
    Scalar(Poly num, Poly den);

    static Scalar variable(int i) { return Scalar(Poly::variable(i), Poly(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const; // requires is_constant()
    bool is_integer() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws precondition_error on /0

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const; // arbitrary total order for map keys

    // Canonical fraction string, e.g. "(-k)/(k+1)"; "(num)" when den == 1.
    std::string str() const;

    Rat eval(const QVec& point) const;

  private:
    void normalize();
    Poly num_, den_;
};

// Parses "+ - * / ^ ( )" expressions over integers, rationals and the level
// variables k, k2, k3, ... ("k1" is accepted as an alias for "k").
Scalar parse_scalar(const std::string& text);

using SMat = std::vector<std::vector<Scalar>>;
using SVec = std::vector<Scalar>;

Scalar smat_det(const SMat& m);
SMat smat_inverse(const SMat& m); // throws precondition_error if singular
SVec smat_vec(const SMat& m, const SVec& v);
Scalar sdot(const SVec& a, const SVec& b);

} // namespace cdoalg
