#include "cdoalg/spectralflow.hpp"
#include "cdoalg/intmat.hpp"
#include <map>

#include "cdoalg/errors.hpp"

namespace cdoalg {

SFContext sf_heisenberg(Level kappa)
{
    if (!kappa.datum()->is_torus())
        throw precondition_error("Heisenberg context needs an abelian datum");
    return SFContext{SFContext::Kind::Heisenberg, std::move(kappa)};
}

SFContext sf_affine(Level kappa) { return SFContext{SFContext::Kind::Affine, std::move(kappa)}; }
SFContext sf_cdo(Level kappa) { return SFContext{SFContext::Kind::CDO, std::move(kappa)}; }
SFContext sf_eqw(Level kappa) { return SFContext{SFContext::Kind::EqW, std::move(kappa)}; }

SFContext sf_fermions(DatumPtr d)
{
    if (d->is_torus()) throw precondition_error("fermion context needs a semisimple datum");
    Level unit = Level::symbolic(d);
    return SFContext{SFContext::Kind::Fermions, std::move(unit)};
}

namespace {

QMat identity_rows(int n)
{
    QMat m(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// P-check generators: fundamental coweights plus the saturated central
// cocharacter lattice (the center itself is a continuous direction and is
// reported separately).
QMat coweight_lattice_basis(const RootDatum& d)
{
    QMat rows;
    for (auto& cw : d.fundamental_coweights()) rows.push_back(cw.v);
    return rows;
}

} // namespace

SFGroupDesc sf_group(const SFContext& ctx)
{
    const RootDatum& d = *ctx.datum();
    SFGroupDesc out;
    switch (ctx.kind) {
    case SFContext::Kind::Heisenberg:
        out.name = "Heisenberg";
        out.basis = {};
        out.continuous_center = d.rank();
        out.ambient = "all of the Cartan subalgebra";
        return out;
    case SFContext::Kind::Affine:
        out.name = "Affine";
        out.basis = coweight_lattice_basis(d);
        out.continuous_center = d.rank() - d.semisimple_rank();
        out.ambient = "coweight lattice P-check (plus the full center)";
        return out;
    case SFContext::Kind::CDO: {
        out.name = "CDO";
        // X_*(T) x P-check, embedded via (gamma, x) -> (gamma + x, tw0 x).
        out.basis = identity_rows(d.rank());
        for (auto& row : coweight_lattice_basis(d)) out.basis.push_back(row);
        out.continuous_center = 0;
        out.ambient = "X_*(T) x P-check inside h + h via (gamma+x, tw0 x)";
        return out;
    }
    case SFContext::Kind::EqW:
        out.name = "EqW";
        out.basis = identity_rows(d.rank());
        out.ambient = "cocharacter lattice X_*(T)";
        return out;
    case SFContext::Kind::Fermions:
        out.name = "Fermions";
        out.basis = identity_rows((int)d.positive_roots().size());
        out.ambient = "Z^{Phi+}, one generator per positive root";
        return out;
    }
    throw precondition_error("sf_group: unknown context");
}

std::pair<Coweight, Coweight> cdo_sf_embed(const RootDatum& d, const Coweight& gamma,
                                           const Coweight& x)
{
    if (!d.in_cocharacter_lattice(gamma))
        throw precondition_error("cdo_sf_embed: gamma must lie in X_*(T)");
    if (!d.in_coweight_lattice(x))
        throw precondition_error("cdo_sf_embed: x must lie in the coweight lattice");
    return {Coweight{gamma.v + x.v}, d.w0(x)};
}

Label twist_fock(const Coweight& x, const Label& fock)
{
    if (fock.kind != LabelKind::Fock) throw precondition_error("twist_fock: Fock label required");
    const Level& kappa = fock.level;
    if (!kappa.abelian_nondegenerate())
        throw precondition_error("twist_fock: degenerate abelian level");
    SVec shift = abelian_pairing_vector(kappa, x);
    SVec moved = fock.fock_weight;
    for (size_t i = 0; i < moved.size(); ++i) moved[i] = moved[i] - shift[i];
    return Label::fock(kappa, moved);
}

SVec level_pairing_vector(const Level& kappa, const Coweight& x)
{
    const RootDatum& d = *kappa.datum();
    if (d.is_torus()) return abelian_pairing_vector(kappa, x);

    SVec out(d.rank(), Scalar(0));
    IMat cm = d.cartan_matrix();

    // Simple factors: kappa(x_s, .) = k_s * nu^{-1}(x_s) where nu(alpha_i) =
    // d_i alpha_i^vee, long roots of length 2. Write x_s = sum c_i alpha_i^vee
    // and get the functional sum (c_i / d_i) alpha_i.
    for (size_t s = 0; s < d.factors().size(); ++s) {
        const SimpleFactor& f = d.factors()[s];
        size_t m = f.nodes.size();
        std::map<int, Rat> di;
        di[f.nodes[0]] = 1;
        std::vector<int> stack = {f.nodes[0]};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j : f.nodes) {
                if (j == i || cm[i][j] == 0 || di.count(j)) continue;
                di[j] = di[i] * Rat(cm[i][j].get_si()) / Rat(cm[j][i].get_si());
                stack.push_back(j);
            }
        }
        Rat dmax = 0;
        for (auto& [i, v] : di) dmax = std::max(dmax, v);
        for (auto& [i, v] : di) v /= dmax;

        // <alpha_j, x> = sum_i c_i <alpha_j, alpha_i^vee>.
        QMat sys(m, QVec(m));
        QVec rhs(m);
        for (size_t aa = 0; aa < m; ++aa) {
            for (size_t bb = 0; bb < m; ++bb)
                sys[aa][bb] = Rat(cm[f.nodes[aa]][f.nodes[bb]].get_si());
            rhs[aa] = RootDatum::pairing(d.simple_root(f.nodes[aa]), x);
        }
        auto sol = solve_rational(sys, rhs);
        if (!sol) throw precondition_error("level_pairing_vector: singular Cartan block");
        QVec acc(d.rank(), Rat(0));
        for (size_t bb = 0; bb < m; ++bb)
            acc = acc + ((*sol)[bb] / di[f.nodes[bb]]) * d.simple_root(f.nodes[bb]).v;
        for (int t = 0; t < d.rank(); ++t)
            out[t] = out[t] + kappa.simple_level((int)s) * Scalar(acc[t]);
    }

    // Central block: functional w with <w, z_j> = (K xi)_j on the central
    // cocharacter basis, supported on the central weight span.
    const IMat& zcb = d.central_cocharacter_lattice();
    const IMat& zwb = d.central_character_lattice();
    if (!zcb.empty()) {
        Coweight xab = d.central_part(x);
        size_t z = zcb.size();
        QMat pair_cc(z, QVec(z));
        QVec rhs(z);
        for (size_t i = 0; i < z; ++i) {
            for (size_t j = 0; j < z; ++j) {
                Rat acc = 0;
                for (int t = 0; t < d.rank(); ++t) acc += Rat(zcb[i][t]) * Rat(zcb[j][t]);
                pair_cc[i][j] = acc;
            }
            Rat acc = 0;
            for (int t = 0; t < d.rank(); ++t) acc += Rat(zcb[i][t]) * xab.v[t];
            rhs[i] = acc;
        }
        auto xi = solve_rational(pair_cc, rhs);
        if (!xi) throw precondition_error("level_pairing_vector: central coordinate solve failed");
        SVec xiv;
        for (auto& c : *xi) xiv.push_back(Scalar(c));
        SVec paired = smat_vec(kappa.abelian_block(), xiv);
        // w = sum t_i zwb_i with <zwb_i, zcb_j> t = paired.
        QMat g(z, QVec(z));
        for (size_t i = 0; i < z; ++i)
            for (size_t j = 0; j < z; ++j) {
                Rat acc = 0;
                for (int t = 0; t < d.rank(); ++t) acc += Rat(zwb[i][t]) * Rat(zcb[j][t]);
                g[j][i] = acc; // row j: equation on z_j
            }
        // Solve g * t = paired over scalars: g is rational, invert it.
        QMat ginv = rational_inverse(g);
        SVec t(z, Scalar(0));
        for (size_t i = 0; i < z; ++i)
            for (size_t j = 0; j < z; ++j) t[i] = t[i] + Scalar(ginv[i][j]) * paired[j];
        for (size_t i = 0; i < z; ++i)
            for (int tt = 0; tt < d.rank(); ++tt)
                out[tt] = out[tt] + t[i] * Scalar(Rat(zwb[i][tt]));
    }
    return out;
}

ModeRule twist_mode_rule(const Level& kappa, const Coweight& x, const Weight& alpha, int mode)
{
    const RootDatum& d = *kappa.datum();
    if (!d.in_coweight_lattice(x))
        throw precondition_error("twist_mode_rule: x must lie in the coweight lattice");
    Rat ax = RootDatum::pairing(alpha, x);
    if (!is_integer(ax)) throw precondition_error("twist_mode_rule: non-integral root shift");
    ModeRule r;
    r.is_root = true;
    r.old_mode = mode;
    r.new_mode = mode - (int)ax.get_num().get_si();
    r.correction = Scalar(0);
    return r;
}

ModeRule twist_mode_rule_cartan(const Level& kappa, const Coweight& x, const Coweight& h, int mode)
{
    ModeRule r;
    r.is_root = false;
    r.old_mode = mode;
    r.new_mode = mode;
    r.correction = Scalar(0);
    if (mode == 0) {
        // h_(0) |-> h_(0) - kappa(x, h).
        SVec kx = level_pairing_vector(kappa, x);
        Scalar c(0);
        for (size_t i = 0; i < kx.size(); ++i) c = c + kx[i] * Scalar(h.v[i]);
        r.correction = -c;
    }
    return r;
}

bool kl_stable(const SFContext& ctx, const Coweight& x)
{
    if (ctx.kind != SFContext::Kind::Affine && ctx.kind != SFContext::Kind::Heisenberg)
        throw precondition_error("kl_stable: affine or Heisenberg context required");
    const RootDatum& d = *ctx.datum();
    Coweight ss = d.semisimple_part(x);
    if (!is_zero(ss.v)) return false;
    SVec kx = level_pairing_vector(ctx.level, x);
    for (auto& e : kx)
        if (!e.is_integer()) return false;
    return true;
}

bool sf_integrality_check(const Coweight& h, const Coweight& h_prime,
                          const GradedCharacter& character)
{
    for (auto& [k, m] : character.terms) {
        Rat total = 0;
        for (size_t i = 0; i < k.left.size(); ++i) total += Rat(k.left[i]) * h.v[i];
        for (size_t i = 0; i < k.right.size(); ++i) total += Rat(k.right[i]) * h_prime.v[i];
        if (!is_integer(total)) return false;
    }
    return true;
}

} // namespace cdoalg
