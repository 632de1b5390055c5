#pragma once

#include "cdoalg/numeric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cdoalg {

// Character-lattice element, coordinates in the fixed basis of X*(T).
struct Weight {
    QVec v;
    bool operator==(const Weight& o) const { return v == o.v; }
    bool operator<(const Weight& o) const { return v < o.v; }
};

// Cocharacter-lattice element, coordinates in the dual basis of X_*(T).
struct Coweight {
    QVec v;
    bool operator==(const Coweight& o) const { return v == o.v; }
    bool operator<(const Coweight& o) const { return v < o.v; }
};

// One simple factor of the derived subalgebra.
struct SimpleFactor {
    std::vector<int> nodes;     // indices into the simple-root list
    char type = '?';            // 'A' or 'D' once classified, '?' otherwise
    std::vector<int> bourbaki;  // nodes reordered to the standard labelling (when classified)
    Weight highest_root;
    Coweight highest_coroot;
    int dual_coxeter = 0;
};

// Root datum of a connected reductive group in fixed lattice coordinates:
// X*(T) = Z^rank with simple roots as integer vectors and simple coroots as
// integer covectors; the pairing is the dot product.
class RootDatum {
  public:
    RootDatum(int rank, IMat simple_roots, IMat simple_coroots, std::string name = "");

    int rank() const { return rank_; }
    int semisimple_rank() const { return (int)simple_roots_.size(); }
    const std::string& name() const { return name_; }
    const IMat& simple_roots() const { return simple_roots_; }
    const IMat& simple_coroots() const { return simple_coroots_; }

    IMat cartan_matrix() const; // A_ij = <alpha_i, alpha_j^vee>

    Weight simple_root(int i) const;
    Coweight simple_coroot(int i) const;

    static Rat pairing(const Weight& w, const Coweight& c);

    // Membership in the ambient lattices and cones.
    bool in_character_lattice(const Weight& w) const { return all_integer(w.v); }
    bool in_cocharacter_lattice(const Coweight& c) const { return all_integer(c.v); }
    bool in_weight_lattice(const Weight& w) const;      // P
    bool in_coweight_lattice(const Coweight& c) const;  // P-check
    bool is_dominant(const Weight& w) const;
    bool is_dominant(const Coweight& c) const;
    bool in_root_lattice(const Weight& w) const;        // Q
    bool in_coroot_lattice(const Coweight& c) const;    // Q-check

    // Weyl group action.
    Weight simple_reflection(int i, const Weight& w) const;
    Coweight simple_reflection(int i, const Coweight& c) const;
    std::vector<Weight> weyl_orbit(const Weight& w) const;
    const std::vector<int>& longest_element_word() const { return w0_word_; }
    Weight w0(const Weight& w) const;
    Coweight w0(const Coweight& c) const;        // transpose action
    Weight minus_w0(const Weight& w) const;
    Coweight minus_w0(const Coweight& c) const;
    Int weyl_order() const;

    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const std::vector<Coweight>& positive_coroots() const { return positive_coroots_; }
    const Weight& rho() const { return rho_; }
    const Coweight& rho_check() const { return rho_check_; }
    Weight highest_root() const;   // error on a torus
    Coweight highest_coroot() const;
    Rat height(const Weight& w) const { return pairing(w, rho_check_); }
    Rat coheight(const Coweight& c) const { return pairing(rho_, c); }

    const std::vector<SimpleFactor>& factors() const { return factors_; }

    // Fundamental weights/coweights of the semisimple part (rational coords).
    const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
    const std::vector<Coweight>& fundamental_coweights() const { return fundamental_coweights_; }

    // Saturated central sublattices (rows are basis vectors).
    const IMat& central_character_lattice() const { return central_char_basis_; }
    const IMat& central_cocharacter_lattice() const { return central_cochar_basis_; }

    // Decomposition lambda = sum_i <lambda, alpha_i^vee> fw_i + central part.
    Weight semisimple_part(const Weight& w) const;
    Weight central_part(const Weight& w) const;
    Coweight semisimple_part(const Coweight& c) const;
    Coweight central_part(const Coweight& c) const;

    // Normalized invariant form on the weight space, long roots of squared
    // length 2 in each simple factor; central directions pair to zero.
    Rat norm_form(const Weight& a, const Weight& b) const;
    // Same form restricted to one simple factor.
    Rat norm_form_factor(int factor, const Weight& a, const Weight& b) const;

    Int weyl_dimension(const Weight& lambda) const; // lambda dominant in P

    // Freudenthal weight multiplicities of the irreducible with highest weight
    // lambda (dominant, in P); pairs (weight, multiplicity).
    std::vector<std::pair<Weight, Int>> weight_multiplicities(const Weight& lambda) const;

    // {0} union minuscule weights: dominant lambda in P with <lambda, theta^vee> <= 1.
    std::vector<Weight> p1_plus() const;
    // Unique element of p1_plus() with mu + lambda(mu) in Q; requires type A/D factors.
    Weight minuscule_match(const Weight& mu) const;

    // Dominant elements of X*(T), semisimple height <= cutoff and central
    // coordinates bounded by cutoff; sorted by (height, lex).
    std::vector<Weight> dominant_characters(int cutoff) const;
    // Same for X_*(T), dominance against the positive roots.
    std::vector<Coweight> dominant_cocharacters(int cutoff) const;

    bool equals(const RootDatum& o) const;

    bool is_adjoint() const;        // X*(T) == Q (semisimple datum)
    bool is_simply_laced() const;   // all factors of type A/D/E
    bool is_torus() const { return semisimple_rank() == 0; }
    bool is_simple() const { return factors_.size() == 1 && rank_ == semisimple_rank(); }

  private:
    void validate() const;
    void build_roots();
    void build_factors();
    void build_w0();
    void build_fundamental();

    int rank_;
    IMat simple_roots_, simple_coroots_;
    std::string name_;
    std::vector<Weight> positive_roots_;
    std::vector<Coweight> positive_coroots_;
    Weight rho_;
    Coweight rho_check_;
    std::vector<SimpleFactor> factors_;
    std::vector<int> w0_word_;
    std::vector<Weight> fundamental_weights_;
    std::vector<Coweight> fundamental_coweights_;
    IMat central_char_basis_, central_cochar_basis_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

// Preset catalog: Torus(r), SL2, PSL2, SL(n), PGL(n), SpinAdj(D_n), GL(n).
DatumPtr build_preset(const std::string& name);
DatumPtr dual(const DatumPtr& d);
DatumPtr product(const DatumPtr& a, const DatumPtr& b);

// Datum file format: "rank N", then "simple_roots" / "simple_coroots" blocks
// of integer rows.
DatumPtr parse_datum_file(const std::string& text);
std::string datum_file(const RootDatum& d);

} // namespace cdoalg
