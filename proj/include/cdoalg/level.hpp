#pragma once

#include "cdoalg/rootdata.hpp"
#include "cdoalg/scalar.hpp"

namespace cdoalg {

// Invariant symmetric form on a reductive Lie algebra: one Scalar per simple
// factor (in units of the normalized form, long roots of squared length 2)
// plus a symmetric Scalar matrix on the center, in the coordinates of the
// saturated central cocharacter lattice.
class Level {
  public:
    Level() = default;
    Level(DatumPtr datum, SMat abelian_block, SVec simple_levels,
          bool generic_override = false);

    // Simple factor s carries the variable k_s, abelian block = identity.
    static Level symbolic(DatumPtr datum);
    // Torus/abelian block = diag(k, k2, ...) for a torus datum.
    static Level symbolic_abelian(DatumPtr datum);
    // All simple factors at the same rational value, abelian block = identity.
    static Level rational(DatumPtr datum, const Rat& k);
    static Level abelian(DatumPtr datum, QMat block); // torus datum

    const DatumPtr& datum() const { return datum_; }
    const SMat& abelian_block() const { return abelian_block_; }
    const SVec& simple_levels() const { return simple_levels_; }
    Scalar simple_level(int factor) const;

    bool abelian_nondegenerate() const;
    // Nondegenerate abelian block and every simple level a non-constant
    // rational function, unless the caller flagged the level generic.
    bool is_generic() const;
    bool generic_flagged() const { return generic_override_; }
    Level flagged_generic() const;

    bool operator==(const Level& o) const;
    bool operator!=(const Level& o) const { return !(*this == o); }

    Level direct_sum(const Level& o) const; // level on product(datum, o.datum)

    std::string str() const; // compact: single scalar for a simple datum
    std::string json() const;

    SMat abelian_inverse() const; // throws precondition_error if degenerate

  private:
    DatumPtr datum_;
    SMat abelian_block_;
    SVec simple_levels_;
    bool generic_override_ = false;
};

int dual_coxeter(const RootDatum& d, int factor);

// kappa* = -kappa_g - kappa: abelian block negated, k_s -> -k_s - 2 h_s^vee.
Level dual_level(const Level& kappa);

// Each simple factor at -h_s^vee, abelian block zero; the dual_level fixed point.
Level critical_level(DatumPtr d);

// Solves 1/(k + h^vee) + 1/(l + h^vee) = n for l. Errors: critical k, shift pole.
Scalar shifted_level(const Scalar& k, int n, int dual_cox);
Level shifted_level(const Level& kappa, int n); // applied to every simple factor

// C(lambda)/(2(k_s + h_s^vee)) summed over simple factors plus the abelian
// part (lambda_ab, kappa_ab^{-1} lambda_ab)/2, with C(lambda) = (lambda,
// lambda + 2 rho) under the normalized form.
Scalar casimir_offset(const Level& kappa, const Weight& lambda);
Scalar casimir_offset_factor(const Level& kappa, int factor, const Weight& lambda);
Rat casimir_eigenvalue(const RootDatum& d, int factor, const Weight& lambda);

long central_charge_cdo(const RootDatum& d); // 2 dim G

// Pairing of lambda's central part against the inverse abelian block.
Scalar abelian_offset(const Level& kappa, const Weight& lambda);

// kappa(x, .) as a Scalar vector in X*(T) coordinates (torus datum).
SVec abelian_pairing_vector(const Level& kappa, const Coweight& x);

Level parse_level(DatumPtr d, const std::string& text); // scalar or [[..],[..]] matrix

} // namespace cdoalg
