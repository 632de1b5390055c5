#pragma once

#include "cdoalg/character.hpp"
#include "cdoalg/label.hpp"
#include "cdoalg/level.hpp"

namespace cdoalg {

// Ambient vertex algebra for which a spectral-flow group is computed.
struct SFContext {
    enum class Kind { Heisenberg, Affine, CDO, EqW, Fermions } kind;
    Level level; // unused for Fermions
    DatumPtr datum() const { return level.datum(); }
};

SFContext sf_heisenberg(Level kappa);
SFContext sf_affine(Level kappa);
SFContext sf_cdo(Level kappa);
SFContext sf_eqw(Level kappa);
SFContext sf_fermions(DatumPtr d);

// Lattice description of the spectral-flow group: generator rows in coweight
// coordinates (or Z^{Phi+} for fermions), plus the rank of a continuous
// central directions block when present.
struct SFGroupDesc {
    std::string name;
    QMat basis;           // discrete generators, one per row
    int continuous_center = 0;
    std::string ambient;  // human-readable ambient space
};

SFGroupDesc sf_group(const SFContext& ctx);

// (gamma, x) in X_*(T) x P-check  |->  (gamma + x, tw0 x).
std::pair<Coweight, Coweight> cdo_sf_embed(const RootDatum& d, const Coweight& gamma,
                                           const Coweight& x);

// Fock(kappa, lambda) |-> Fock(kappa, lambda - kappa(x, .)).
Label twist_fock(const Coweight& x, const Label& fock);

// Mode relabelling under a twist: root modes shift by alpha(x); Cartan zero
// modes pick up the scalar correction -kappa(x, h).
struct ModeRule {
    bool is_root = false;
    int old_mode = 0;
    int new_mode = 0;       // root generators only
    Scalar correction;      // Cartan generators at mode 0; zero otherwise
};
ModeRule twist_mode_rule(const Level& kappa, const Coweight& x, const Weight& alpha, int mode);
ModeRule twist_mode_rule_cartan(const Level& kappa, const Coweight& x, const Coweight& h, int mode);

// Twist by x keeps the module inside the Kazhdan-Lusztig category iff x has no
// semisimple component and kappa(x_ab, .) lies in X*(T).
bool kl_stable(const SFContext& ctx, const Coweight& x);

// True iff every support weight (l, r) of the character satisfies
// l(h) + r(h') in Z.
bool sf_integrality_check(const Coweight& h, const Coweight& h_prime,
                          const GradedCharacter& character);

// kappa(x, .) as a weight-space vector; norm-form pairing on simple factors
// scaled by the factor level, abelian block on the center.
SVec level_pairing_vector(const Level& kappa, const Coweight& x);

} // namespace cdoalg
