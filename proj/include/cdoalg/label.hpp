#pragma once

#include "cdoalg/level.hpp"
#include "cdoalg/rootdata.hpp"

#include <optional>
#include <vector>

namespace cdoalg {

enum class LabelKind {
    Zero,   // the zero module
    Unit,   // the one-dimensional module C
    Fock,   // Fock(kappa, lambda), lambda possibly symbolic
    Weyl,   // Weyl(kappa, lambda)
    CDO,    // chiral differential operators, shift n (D^kappa[n])
    EqW,    // equivariant W-algebra, shift n
    TW,     // T(kappa, lambda, mu-check): reduced twisted Weyl module
    L1,     // level-one simple quotient L_1(lambda)
    Twist,  // Twist(coweight, child)
    Twist2, // Twist by a CDO pair (gamma, x)
    PWSum,  // sum_lambda TW(kappa, lambda, shift) (x) Twist(tw0 x, Weyl(kappa*, -w0 lambda))
    Tensor, // pairwise tensor product
};

// Symbolic module label with level tags. Immutable by convention; operations
// return fresh labels.
struct Label {
    LabelKind kind = LabelKind::Zero;
    Level level;            // meaning depends on kind; unused for Zero/Unit/L1/Twist/Tensor
    int shift = 0;          // CDO / EqW
    SVec fock_weight;       // Fock
    QVec weight;            // Weyl / TW / L1 lambda
    QVec coweight;          // TW mu-check, Twist parameter, PWSum shift
    QVec coweight2;         // Twist2 x, PWSum twist
    std::vector<Label> sub; // Twist/Twist2: one child; Tensor: two children

    static Label zero() { return Label{}; }
    static Label unit();
    static Label fock(Level kappa, SVec lambda);
    static Label fock(Level kappa, const Weight& lambda);
    static Label weyl(Level kappa, const Weight& lambda);
    static Label cdo(Level kappa, int shift = 0);
    static Label eqw(Level kappa, int shift = 0);
    static Label tw(Level kappa, const Weight& lambda, const Coweight& mu);
    static Label l1(const Weight& lambda);
    static Label twist(const Coweight& param, Label child);
    static Label twist2(const Coweight& gamma, const Coweight& x, Label child);
    static Label pw_sum(Level kappa, const Coweight& shift, const Coweight& tw0_twist);
    static Label tensor(Label a, Label b);

    bool is_zero() const { return kind == LabelKind::Zero; }

    // Collapses nested and zero twists and absorbs Zero through tensors.
    Label normalized() const;

    // Kazhdan-Lusztig membership of the label as a module over its own affine
    // tag(s): twists by a nonzero semisimple parameter leave the category.
    bool is_kl() const;

    // Affine level consumed when this label is the left (resp. right) operand
    // of a convolution; nullopt when no affine action is available.
    std::optional<Level> right_tag() const;
    std::optional<Level> left_tag() const;

    bool operator==(const Label& o) const;
    bool operator!=(const Label& o) const { return !(*this == o); }

    std::string sexpr() const;   // canonical serialization
    std::string compact() const; // conv-grammar style, e.g. "D[k,1]"
};

} // namespace cdoalg
