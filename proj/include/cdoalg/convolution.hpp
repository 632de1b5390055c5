#pragma once

#include "cdoalg/label.hpp"

#include <memory>
#include <vector>

namespace cdoalg {

// Binary convolution tree over module labels.
struct ConvExpr {
    Label leaf;                    // used when l and r are empty
    std::shared_ptr<ConvExpr> l, r;

    bool is_leaf() const { return !l; }
    static ConvExpr make(Label lab)
    {
        ConvExpr e;
        e.leaf = std::move(lab);
        return e;
    }
    static ConvExpr make(ConvExpr a, ConvExpr b)
    {
        ConvExpr e;
        e.l = std::make_shared<ConvExpr>(std::move(a));
        e.r = std::make_shared<ConvExpr>(std::move(b));
        return e;
    }
    std::vector<Label> leaves() const;
    std::string str() const;
};

// kappa + kappa' = -kappa_g blockwise.
bool levels_opposite(const Level& a, const Level& b);

// Every composition node pairs opposite levels; single-action leaves are not
// consumed twice (they may only sit at the ends of the flattened chain).
bool check_levels(const ConvExpr& e);

struct NormalForm {
    bool reduced = false;          // a single label was reached
    Label label;                   // valid when reduced
    std::vector<Label> residual;   // the irreducible chain otherwise
    int degree = 0;                // cohomological bookkeeping (0 on KL input)
    std::string str() const;
};

// Rewrites to a fixed point. Strategies pick which reducible adjacent pair
// fires first; all orders give the same normal form on well-leveled input.
enum class NormalizeOrder { LeftFirst, RightFirst, Seeded };
NormalForm normalize(const ConvExpr& e, NormalizeOrder order = NormalizeOrder::LeftFirst,
                     unsigned seed = 0);

// (label o D[+1]) o D[-1], normalized; the identity on KL labels with a right tag.
NormalForm shift_equivalence_roundtrip(const Label& label);

// CLI grammar: `D[k] . V[k*, w(1)]`, '.' for the convolution, weights in
// fundamental-weight coordinates, '@k00' for iterated shifted levels.
ConvExpr parse_conv_expr(DatumPtr d, const std::string& text);

} // namespace cdoalg
