#pragma once

#include "cdoalg/level.hpp"
#include "cdoalg/rootdata.hpp"
#include "cdoalg/scalar.hpp"

#include <map>
#include <vector>

namespace cdoalg {

// Triple grading key: conformal q-power (relative to the offset), fermionic
// charge, and left/right weight-lattice exponents. An empty weight vector
// means the slot is ungraded; a zero vector of full rank is the weight zero.
struct TermKey {
    int q = 0;
    int charge = 0;
    std::vector<long> left, right;
    bool operator<(const TermKey& o) const
    {
        if (q != o.q) return q < o.q;
        if (charge != o.charge) return charge < o.charge;
        if (left != o.left) return left < o.left;
        return right < o.right;
    }
    bool operator==(const TermKey& o) const
    {
        return q == o.q && charge == o.charge && left == o.left && right == o.right;
    }
};

// Exactly truncated formal character: scalar conformal offset plus a finite
// term map up to q-order `trunc`.
class GradedCharacter {
  public:
    Scalar offset;
    int trunc = 0;
    bool virtual_char = false; // negative multiplicities allowed
    std::map<TermKey, long long> terms;

    static GradedCharacter unit(int trunc);

    void add_term(const TermKey& k, long long mult);
    bool is_zero() const { return terms.empty(); }

    // Offsets must agree; the truncation drops to the smaller order.
    GradedCharacter operator+(const GradedCharacter& o) const;
    GradedCharacter operator-(const GradedCharacter& o) const;
    GradedCharacter operator*(const GradedCharacter& o) const;

    bool operator==(const GradedCharacter& o) const
    {
        return offset == o.offset && terms == o.terms;
    }
    bool operator!=(const GradedCharacter& o) const { return !(*this == o); }

    GradedCharacter truncated(int new_trunc) const;
    GradedCharacter scaled(long long c) const;

    // Move the left grading to the right slot (and vice versa empties it).
    GradedCharacter as_right() const;

    // Terms with the given q-power, offset kept.
    GradedCharacter q_slice(int q) const;

    // Substitute y -> value in the charge grading (value in {1, -1} keeps
    // integrality); collapses charge to 0 and may produce a virtual character.
    GradedCharacter charge_eval(int value) const;

    // e^mu -> q^{<mu, phi>} on the left grading; the new offset absorbs the
    // minimal (possibly fractional) exponent. All shifted exponents must share
    // one fractional class. `result_trunc` declares the order the caller
    // guarantees exact.
    GradedCharacter specialize_left(const QVec& phi, int result_trunc) const;

    long long coefficient(const TermKey& k) const;
    long long total_at_q(int q) const; // sum of multiplicities in one q-layer

    std::string json() const;
    std::string str() const;
};

// Pure q-series Prod_{n>=1} (1 - q^n)^{-count}, truncated.
GradedCharacter partition_series(int count, int trunc);

// Weyl character of the irreducible with highest weight lambda (q = 0, left).
GradedCharacter finite_char(const RootDatum& d, const Weight& lambda);

// finite_char(lambda) * Prod_{n=1..N} Prod_{beta in wts(g)} (1-e^beta q^n)^{-1},
// offset = casimir_offset(lambda, kappa); left-graded.
GradedCharacter weyl_module_char(const Level& kappa, const Weight& lambda, int trunc);

// Single weight lambda with the Heisenberg oscillator series; offset
// (lambda, kappa^{-1} lambda)/2. Torus datum.
GradedCharacter fock_char(const Level& kappa, const Weight& lambda, int trunc);

// Sum over dominant lambda (height <= cutoff) of V_lambda ⊗ V_{-w0 lambda},
// left/right graded at q = 0.
GradedCharacter og_char(const RootDatum& d, int cutoff);

// Sum over the same range of Weyl-module pairs at levels kappa, kappa*;
// requires generic kappa; every summand has total offset zero.
GradedCharacter cdo_char(const Level& kappa, int trunc, int cutoff);

// Charge-graded fermion character Prod_{a in Phi+} Prod_{n>=1}(1 + y^-1 q^n)
// Prod_{n>=0}(1 + y q^n).
GradedCharacter ghost_char(const RootDatum& d, int trunc);

// Weight-carrying variant used by the reduction calculus: the charge -1
// factors carry e^{alpha}, the charge +1 factors e^{-alpha}.
GradedCharacter ghost_char_weighted(const RootDatum& d, int trunc);

} // namespace cdoalg
