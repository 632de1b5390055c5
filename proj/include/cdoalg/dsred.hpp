#pragma once

#include "cdoalg/character.hpp"
#include "cdoalg/label.hpp"
#include "cdoalg/level.hpp"

#include <optional>

namespace cdoalg {

// Structure data of the BRST charge Q = Q^st + Q^chi for the principal
// reduction: quadratic terms e^alpha (x) phi*_alpha, cubic terms
// -(1/2) c^{ab}_g phi*_a phi*_b phi_g, and one chi-term per simple root.
struct BRSTData {
    struct Cubic {
        int a, b, c;  // indices into positive_roots(), alpha + beta = gamma
        Rat coeff;    // c^{alpha,beta}_gamma from the Chevalley basis
    };
    std::vector<int> quadratic;     // one entry per positive root
    std::vector<Cubic> cubic;       // unordered pairs {a,b}, a < b
    std::vector<int> chi;           // indices of the simple roots in positive_roots()
};

BRSTData brst_data(const RootDatum& d);

// Structure constants [e_a, e_b] = c e_{a+b} on positive-root pairs, Chevalley
// basis with positive extraspecial pairs; types A and D.
std::map<std::pair<int, int>, Rat> chevalley_constants(const RootDatum& d);

// Fermionic spectral-flow parameter attached to a coweight: n_alpha =
// -alpha(mu) with total charge shift -2 rho(mu).
struct GhostTwist {
    Coweight mu;
    std::vector<long> fermion; // one entry per positive root (datum order)
    long charge_shift = 0;
};
GhostTwist c_twist(const RootDatum& d, const Coweight& mu);

enum class Simplicity { simple, unknown };

struct ReductionResult {
    std::optional<long> degree; // empty for the zero module
    Label payload;
    std::optional<Simplicity> simplicity;
    bool is_zero() const { return payload.is_zero(); }
    std::string json() const;
};

// H^0 of the Weyl module V_lambda: T(kappa, lambda, 0) in degree 0, simple.
ReductionResult reduce_weyl(const Level& kappa, const Weight& lambda);

// Reduction of the mu-twisted Weyl module: zero off the dominant cone, else
// T(kappa, lambda, mu) in degree 2 rho(mu).
ReductionResult reduce_sf_weyl(const Level& kappa, const Weight& lambda, const Coweight& mu);

// Reduction of the (gamma, x)-twisted algebra of chiral differential
// operators: zero unless gamma + x is dominant, else the Peter-Weyl family
// at degree 2 rho(gamma + x).
ReductionResult reduce_cdo_sf(const Level& kappa, const Coweight& gamma, const Coweight& x);

// Euler character of the reduction of V_lambda: the signed fermion factors
// cancel the root oscillators exactly, leaving finite_char(lambda) *
// Prod_{a>0}(1 - e^{-a}) * Prod_n (1-q^n)^{-rank}, principally specialized.
GradedCharacter euler_char_reduction(const Level& kappa, const Weight& lambda, int trunc);

struct BosonFermionReport {
    bool ok = true;
    int q = 0, charge = 0;
    long long lhs = 0, rhs = 0;
};

// Jacobi-triple-product check per positive root:
// Prod_{n>=1}(1 + y q^{n-1})(1 + y^{-1} q^n) = sum_m y^m q^{m(m-1)/2} / (q)_oo.
BosonFermionReport boson_fermion_check(const RootDatum& d, int trunc);

// Lowest q-power of the charge-m component of the fermion character.
int fermion_charge_floor(int m);

} // namespace cdoalg
