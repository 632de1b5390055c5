#include "doctest.h"

#include "cdoalg/convolution.hpp"
#include "cdoalg/errors.hpp"

#include <random>

using namespace cdoalg;

namespace {

Weight wt(const RootDatum& d, std::vector<long> fw_coords)
{
    QVec lam(d.rank(), Rat(0));
    for (size_t i = 0; i < fw_coords.size(); ++i)
        lam = lam + Rat(fw_coords[i]) * d.fundamental_weights()[i].v;
    return Weight{lam};
}

} // namespace

TEST_CASE("level compatibility checking")
{
    auto sl2 = build_preset("SL2");
    Level k = Level::symbolic(sl2);
    Level ks = dual_level(k);

    CHECK(levels_opposite(k, ks));
    CHECK_FALSE(levels_opposite(k, k));

    // D^k has right tag k*; a Weyl module it eats must carry level k.
    ConvExpr good = ConvExpr::make(ConvExpr::make(Label::cdo(k)),
                                   ConvExpr::make(Label::weyl(k, wt(*sl2, {1}))));
    CHECK(check_levels(good));

    ConvExpr bad = ConvExpr::make(ConvExpr::make(Label::weyl(k, wt(*sl2, {1}))),
                                  ConvExpr::make(Label::weyl(k, wt(*sl2, {1}))));
    CHECK_FALSE(check_levels(bad));

    ConvExpr trivial = ConvExpr::make(Label::weyl(k, wt(*sl2, {0})));
    CHECK(check_levels(trivial));
}

TEST_CASE("weyl against weyl: the delta rule")
{
    auto sl3 = build_preset("SL(3)");
    Level k = Level::symbolic(sl3);
    Level ks = dual_level(k);

    Weight lam = wt(*sl3, {1, 0});
    Weight mw = sl3->minus_w0(lam); // = fw_2

    NormalForm hit = normalize(ConvExpr::make(ConvExpr::make(Label::weyl(ks, mw)),
                                              ConvExpr::make(Label::weyl(k, lam))));
    CHECK(hit.reduced);
    CHECK(hit.label.kind == LabelKind::Unit);

    NormalForm miss = normalize(ConvExpr::make(ConvExpr::make(Label::weyl(ks, lam)),
                                               ConvExpr::make(Label::weyl(k, lam))));
    CHECK(miss.reduced);
    CHECK(miss.label.is_zero());
}

TEST_CASE("unit laws on the label alphabet")
{
    for (const char* name : {"SL2", "PSL2"}) {
        auto d = build_preset(name);
        Level k = Level::symbolic(d);

        std::vector<Label> alphabet = {
            Label::weyl(k, wt(*d, {0})),
            Label::weyl(k, wt(*d, {2})),
            Label::cdo(k, 0),
            Label::cdo(k, 2),
            Label::eqw(k, 0),
            Label::eqw(k, -1),
            Label::tw(k, wt(*d, {2}), Coweight{QVec(d->rank(), Rat(0))}),
            Label::zero(),
        };
        for (const Label& x : alphabet) {
            if (!x.is_zero()) {
                // X o D[0] at the matching level.
                Level right = dual_level(*x.right_tag());
                NormalForm r = normalize(
                    ConvExpr::make(ConvExpr::make(x), ConvExpr::make(Label::cdo(right, 0))));
                CHECK(r.reduced);
                CHECK(r.label == x);
            }
            if (!x.is_zero() && x.left_tag()) {
                // D o N = N needs D at the same level as N's left action.
                Level left = *x.left_tag();
                NormalForm r = normalize(
                    ConvExpr::make(ConvExpr::make(Label::cdo(left, 0)), ConvExpr::make(x)));
                CHECK(r.reduced);
                CHECK(r.label == x);
            }
        }
    }
}

TEST_CASE("shift monoid under convolution")
{
    auto psl2 = build_preset("PSL2");
    Level k = Level::symbolic(psl2);
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            Label dm = Label::cdo(k, m);
            Level l2 = dual_level(shifted_level(k, m));
            Label dn = Label::cdo(l2, n);
            NormalForm r = normalize(ConvExpr::make(ConvExpr::make(dm), ConvExpr::make(dn)));
            CHECK(r.reduced);
            CHECK(r.label == Label::cdo(k, m + n));
        }
}

TEST_CASE("equivariant algebra represents the reduction")
{
    auto sl2 = build_preset("SL2");
    Level k = Level::symbolic(sl2);
    NormalForm r = normalize(ConvExpr::make(ConvExpr::make(Label::eqw(k, 0)),
                                            ConvExpr::make(Label::weyl(k, wt(*sl2, {3})))));
    CHECK(r.reduced);
    CHECK(r.label.kind == LabelKind::TW);
    CHECK(r.label.weight == wt(*sl2, {3}).v);

    // W[k] . D[k,1] -> W[k,1].
    NormalForm s = normalize(ConvExpr::make(ConvExpr::make(Label::eqw(k, 0)),
                                            ConvExpr::make(Label::cdo(k, 1))));
    CHECK(s.reduced);
    CHECK(s.label == Label::eqw(k, 1));
}

TEST_CASE("shift equivalence roundtrip")
{
    auto sl2 = build_preset("SL2");
    Level k = Level::symbolic(sl2);

    for (Label x : {Label::eqw(k, 0), Label::eqw(k, 2),
                    Label::tw(k, wt(*sl2, {1}), Coweight{{Rat(0)}}), Label::weyl(k, wt(*sl2, {2})),
                    Label::cdo(k, -1)}) {
        NormalForm r = shift_equivalence_roundtrip(x);
        CHECK(r.reduced);
        CHECK(r.label == x);
    }
    NormalForm z = shift_equivalence_roundtrip(Label::zero());
    CHECK(z.label.is_zero());

    CHECK_THROWS_AS(shift_equivalence_roundtrip(Label::unit()), precondition_error);
}

TEST_CASE("non-KL leaves are rejected")
{
    auto sl2 = build_preset("SL2");
    Level k = Level::symbolic(sl2);
    Label twisted = Label::twist(Coweight{{Rat(1)}}, Label::weyl(k, wt(*sl2, {0})));
    ConvExpr e = ConvExpr::make(ConvExpr::make(Label::cdo(k, 0)), ConvExpr::make(twisted));
    CHECK_THROWS_AS(normalize(e), precondition_error);
}

TEST_CASE("confluence on random well-leveled expressions")
{
    std::mt19937 rng(2024);
    int built = 0;
    for (const char* name : {"SL2", "PSL2"}) {
        auto d = build_preset(name);
        Level k = Level::symbolic(d);

        for (int trial = 0; trial < 250; ++trial) {
            // Random valid chain: a left-end label followed by shifted-algebra
            // factors, optionally capped by a Weyl module.
            std::vector<Label> chain;
            switch (rng() % 4) {
            case 0: chain.push_back(Label::weyl(k, wt(*d, {(long)(rng() % 3) * 2}))); break;
            case 1: chain.push_back(Label::cdo(k, (int)(rng() % 5) - 2)); break;
            case 2: chain.push_back(Label::eqw(k, (int)(rng() % 3) - 1)); break;
            default: chain.push_back(Label::tw(k, wt(*d, {2}), Coweight{QVec(d->rank(), Rat(0))}));
            }
            int extras = (int)(rng() % 4);
            for (int i = 0; i < extras; ++i) {
                Level rt = *chain.back().right_tag();
                chain.push_back(Label::cdo(dual_level(rt), (int)(rng() % 5) - 2));
            }
            bool cap = rng() % 3 == 0;
            if (cap && chain.back().kind == LabelKind::CDO) {
                Level rt = *chain.back().right_tag();
                chain.push_back(Label::weyl(dual_level(rt), wt(*d, {(long)(rng() % 3) * 2})));
            }
            if (rng() % 8 == 0) chain[rng() % chain.size()] = Label::zero();

            ConvExpr e = ConvExpr::make(chain[0]);
            for (size_t i = 1; i < chain.size(); ++i)
                e = ConvExpr::make(std::move(e), ConvExpr::make(chain[i]));
            if (!check_levels(e)) continue;
            ++built;

            NormalForm base = normalize(e, NormalizeOrder::LeftFirst);
            NormalForm alt = normalize(e, NormalizeOrder::RightFirst);
            CHECK(base.reduced == alt.reduced);
            if (base.reduced) CHECK(base.label == alt.label);
            for (unsigned seed = 1; seed <= 3; ++seed) {
                NormalForm s = normalize(e, NormalizeOrder::Seeded, seed);
                CHECK(base.reduced == s.reduced);
                if (base.reduced) CHECK(base.label == s.label);
                if (!base.reduced) CHECK(base.residual == s.residual);
            }

            // Level-tag conservation: outer tags survive normalization.
            if (base.reduced && !base.label.is_zero() && base.label.kind != LabelKind::Unit) {
                auto before_r = chain.back().right_tag();
                auto after_r = base.label.right_tag();
                bool rend_single = chain.size() > 1 &&
                                   chain.back().kind == LabelKind::Weyl;
                if (before_r && after_r && !rend_single) CHECK(*before_r == *after_r);
            }
        }
    }
    CHECK(built >= 400);
}

TEST_CASE("expression grammar")
{
    auto sl2 = build_preset("SL2");
    ConvExpr e = parse_conv_expr(sl2, "D[k] . D[1]@k00");
    NormalForm r = normalize(e);
    CHECK(r.reduced);
    CHECK(r.label.compact() == "D[k,1]");

    // D's right tag is k*, so the Weyl module must carry level k.
    ConvExpr mism = parse_conv_expr(sl2, "D[k] . V[k*, w(1)]");
    CHECK_FALSE(check_levels(mism));
    ConvExpr w = parse_conv_expr(sl2, "D[k] . V[k, w(1)]");
    CHECK(check_levels(w));
    NormalForm rw = normalize(w);
    CHECK(rw.reduced);
    CHECK(rw.label == Label::weyl(Level::symbolic(sl2), sl2->fundamental_weights()[0]));
    CHECK_THROWS_AS(normalize(parse_conv_expr(sl2, "V[k, w(1)] . V[k, w(1)]")),
                    precondition_error);

    CHECK_THROWS_AS(parse_conv_expr(sl2, "D[k] . Q[3]"), parse_error);
    CHECK_THROWS_AS(parse_conv_expr(sl2, "D[k] . "), parse_error);
}
