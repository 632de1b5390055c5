#include "cdoalg/character.hpp"

#include "cdoalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cdoalg {

namespace {

std::vector<long> to_long_vec(const QVec& v)
{
    std::vector<long> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i]))
            throw precondition_error("character: weight must be integral in lattice coordinates");
        out[i] = v[i].get_num().get_si();
    }
    return out;
}

std::vector<long> add_wt(const std::vector<long>& a, const std::vector<long>& b)
{
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() != b.size()) throw precondition_error("character: weight rank mismatch");
    std::vector<long> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

} // namespace

GradedCharacter GradedCharacter::unit(int trunc)
{
    GradedCharacter c;
    c.trunc = trunc;
    c.terms[TermKey{}] = 1;
    return c;
}

void GradedCharacter::add_term(const TermKey& k, long long mult)
{
    if (mult == 0) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, mult);
    } else {
        it->second += mult;
        if (it->second == 0) terms.erase(it);
    }
}

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const
{
    if (offset != o.offset) throw precondition_error("character add: offset mismatch");
    GradedCharacter r = *this;
    r.trunc = std::min(trunc, o.trunc);
    r.virtual_char = virtual_char || o.virtual_char;
    for (auto& [k, m] : o.terms)
        if (k.q <= r.trunc) r.add_term(k, m);
    std::erase_if(r.terms, [&](const auto& kv) { return kv.first.q > r.trunc; });
    return r;
}

GradedCharacter GradedCharacter::operator-(const GradedCharacter& o) const
{
    GradedCharacter neg = o.scaled(-1);
    neg.virtual_char = true;
    return *this + neg;
}

GradedCharacter GradedCharacter::operator*(const GradedCharacter& o) const
{
    GradedCharacter r;
    r.offset = offset + o.offset;
    r.trunc = std::min(trunc, o.trunc);
    r.virtual_char = virtual_char || o.virtual_char;
    for (auto& [k1, m1] : terms) {
        if (k1.q > r.trunc) continue;
        for (auto& [k2, m2] : o.terms) {
            if (k1.q + k2.q > r.trunc) continue;
            TermKey k;
            k.q = k1.q + k2.q;
            k.charge = k1.charge + k2.charge;
            k.left = add_wt(k1.left, k2.left);
            k.right = add_wt(k1.right, k2.right);
            r.add_term(k, m1 * m2);
        }
    }
    return r;
}

GradedCharacter GradedCharacter::truncated(int new_trunc) const
{
    GradedCharacter r = *this;
    r.trunc = new_trunc;
    std::erase_if(r.terms, [&](const auto& kv) { return kv.first.q > new_trunc; });
    return r;
}

GradedCharacter GradedCharacter::scaled(long long c) const
{
    GradedCharacter r = *this;
    if (c == 0) {
        r.terms.clear();
        return r;
    }
    if (c < 0) r.virtual_char = true;
    for (auto& [k, m] : r.terms) m *= c;
    return r;
}

GradedCharacter GradedCharacter::as_right() const
{
    GradedCharacter r = *this;
    r.terms.clear();
    for (auto& [k, m] : terms) {
        TermKey nk = k;
        std::swap(nk.left, nk.right);
        r.terms[nk] = m;
    }
    return r;
}

GradedCharacter GradedCharacter::q_slice(int q) const
{
    GradedCharacter r = *this;
    std::erase_if(r.terms, [&](const auto& kv) { return kv.first.q != q; });
    return r;
}

GradedCharacter GradedCharacter::charge_eval(int value) const
{
    if (value != 1 && value != -1)
        throw precondition_error("charge_eval: only the values 1 and -1 keep integrality");
    GradedCharacter r;
    r.offset = offset;
    r.trunc = trunc;
    r.virtual_char = virtual_char || value == -1;
    for (auto& [k, m] : terms) {
        TermKey nk = k;
        nk.charge = 0;
        long long sign = (value == -1 && (k.charge % 2 != 0)) ? -1 : 1;
        r.add_term(nk, sign * m);
    }
    return r;
}

GradedCharacter GradedCharacter::specialize_left(const QVec& phi, int result_trunc) const
{
    // Collect exact exponents q + <left, phi>.
    std::map<std::pair<Rat, TermKey>, long long> shifted;
    bool have = false;
    Rat min_exp = 0, frac = 0;
    for (auto& [k, m] : terms) {
        Rat e = Rat(k.q);
        for (size_t i = 0; i < k.left.size(); ++i) {
            if (i >= phi.size()) throw precondition_error("specialize: substitution rank mismatch");
            e += Rat(k.left[i]) * phi[i];
        }
        Rat f = e - Rat(floor_div(e.get_num(), e.get_den()));
        if (!have) {
            min_exp = e;
            frac = f;
            have = true;
        } else {
            if (f != frac)
                throw precondition_error("specialize: mixed fractional q-powers");
            min_exp = std::min(min_exp, e);
        }
        TermKey nk = k;
        nk.left.clear();
        shifted[{e, nk}] += m;
    }
    GradedCharacter r;
    r.trunc = result_trunc;
    r.virtual_char = virtual_char;
    r.offset = offset + (have ? Scalar(min_exp) : Scalar(0));
    for (auto& [ek, m] : shifted) {
        if (m == 0) continue;
        Rat rel = ek.first - min_exp; // integral by the shared fractional class
        TermKey nk = ek.second;
        nk.q = (int)rel.get_num().get_si();
        if (nk.q <= r.trunc) r.add_term(nk, m);
    }
    return r;
}

long long GradedCharacter::coefficient(const TermKey& k) const
{
    auto it = terms.find(k);
    return it == terms.end() ? 0 : it->second;
}

long long GradedCharacter::total_at_q(int q) const
{
    long long t = 0;
    for (auto& [k, m] : terms)
        if (k.q == q) t += m;
    return t;
}

std::string GradedCharacter::json() const
{
    std::ostringstream os;
    os << "{\"offset\": \"" << offset.str() << "\", \"trunc\": " << trunc << ", \"terms\": [";
    bool first = true;
    for (auto& [k, m] : terms) {
        if (!first) os << ", ";
        first = false;
        os << "{\"q\": " << k.q << ", \"charge\": " << k.charge << ", \"left\": [";
        for (size_t i = 0; i < k.left.size(); ++i) os << (i ? ", " : "") << k.left[i];
        os << "], \"right\": [";
        for (size_t i = 0; i < k.right.size(); ++i) os << (i ? ", " : "") << k.right[i];
        os << "], \"mult\": " << m << "}";
    }
    os << "]}";
    return os.str();
}

std::string GradedCharacter::str() const
{
    std::ostringstream os;
    os << "offset " << offset.str() << ", trunc " << trunc << "\n";
    for (auto& [k, m] : terms) {
        os << "  q^" << k.q;
        if (k.charge) os << " y^" << k.charge;
        if (!k.left.empty()) {
            os << " e[";
            for (size_t i = 0; i < k.left.size(); ++i) os << (i ? "," : "") << k.left[i];
            os << "]";
        }
        if (!k.right.empty()) {
            os << " f[";
            for (size_t i = 0; i < k.right.size(); ++i) os << (i ? "," : "") << k.right[i];
            os << "]";
        }
        os << " : " << m << "\n";
    }
    return os.str();
}

GradedCharacter partition_series(int count, int trunc)
{
    GradedCharacter r = GradedCharacter::unit(trunc);
    for (int n = 1; n <= trunc; ++n) {
        GradedCharacter factor;
        factor.trunc = trunc;
        for (int m = 0; m * n <= trunc; ++m) factor.add_term(TermKey{m * n, 0, {}, {}}, 1);
        for (int c = 0; c < count; ++c) r = r * factor;
    }
    return r;
}

GradedCharacter finite_char(const RootDatum& d, const Weight& lambda)
{
    if (!d.is_dominant(lambda) || !d.in_weight_lattice(lambda))
        throw precondition_error("finite_char: weight must be dominant integral");
    GradedCharacter r;
    r.trunc = 0;
    for (auto& [w, m] : d.weight_multiplicities(lambda)) {
        TermKey k;
        k.left = to_long_vec(w.v);
        if (!m.fits_slong_p()) throw precondition_error("finite_char: multiplicity overflow");
        r.add_term(k, m.get_si());
    }
    return r;
}

GradedCharacter weyl_module_char(const Level& kappa, const Weight& lambda, int trunc)
{
    const RootDatum& d = *kappa.datum();
    GradedCharacter r = finite_char(d, lambda);
    r.trunc = trunc;
    r.offset = casimir_offset(kappa, lambda);

    // Adjoint weights: every root once, zero with multiplicity rank.
    std::vector<std::vector<long>> betas;
    for (auto& a : d.positive_roots()) {
        betas.push_back(to_long_vec(a.v));
        betas.push_back(to_long_vec(QVec(-a.v)));
    }
    for (int i = 0; i < d.rank(); ++i) betas.push_back(std::vector<long>(d.rank(), 0));

    for (int n = 1; n <= trunc; ++n)
        for (auto& beta : betas) {
            GradedCharacter factor;
            factor.trunc = trunc;
            for (int m = 0; m * n <= trunc; ++m) {
                TermKey k;
                k.q = m * n;
                if (m == 0) {
                    factor.add_term(k, 1);
                } else {
                    k.left.assign(beta.size(), 0);
                    for (size_t i = 0; i < beta.size(); ++i) k.left[i] = m * beta[i];
                    factor.add_term(k, 1);
                }
            }
            Scalar off = r.offset;
            r = r * factor;
            r.offset = off; // oscillator factors carry no offset
        }
    return r;
}

GradedCharacter fock_char(const Level& kappa, const Weight& lambda, int trunc)
{
    if (!kappa.datum()->is_torus()) throw precondition_error("fock_char: torus datum required");
    if (!kappa.abelian_nondegenerate()) throw precondition_error("fock_char: degenerate level");
    GradedCharacter r = partition_series(kappa.datum()->rank(), trunc);
    GradedCharacter hw;
    hw.trunc = trunc;
    TermKey k;
    k.left = to_long_vec(lambda.v);
    hw.add_term(k, 1);
    r = r * hw;
    r.offset = abelian_offset(kappa, lambda);
    return r;
}

GradedCharacter og_char(const RootDatum& d, int cutoff)
{
    GradedCharacter total;
    total.trunc = 0;
    bool first = true;
    for (const Weight& lam : d.dominant_characters(cutoff)) {
        GradedCharacter left = finite_char(d, lam);
        GradedCharacter right = finite_char(d, d.minus_w0(lam)).as_right();
        GradedCharacter prod = left * right;
        if (first) {
            total = prod;
            first = false;
        } else {
            total = total + prod;
        }
    }
    return total;
}

GradedCharacter cdo_char(const Level& kappa, int trunc, int cutoff)
{
    if (!kappa.is_generic())
        throw precondition_error("cdo_char: the decomposition requires a generic level");
    const RootDatum& d = *kappa.datum();
    Level kd = dual_level(kappa);
    GradedCharacter total;
    total.trunc = trunc;
    bool first = true;
    for (const Weight& lam : d.dominant_characters(cutoff)) {
        GradedCharacter left = weyl_module_char(kappa, lam, trunc);
        GradedCharacter right = weyl_module_char(kd, d.minus_w0(lam), trunc).as_right();
        GradedCharacter prod = left * right;
        if (!prod.offset.is_zero())
            throw precondition_error("cdo_char: summand offset failed to cancel");
        if (first) {
            total = prod;
            first = false;
        } else {
            total = total + prod;
        }
    }
    return total;
}

namespace {

GradedCharacter ghost_char_impl(const RootDatum& d, int trunc, bool weighted)
{
    GradedCharacter r = GradedCharacter::unit(trunc);
    for (auto& alpha : d.positive_roots()) {
        std::vector<long> aw, naw;
        if (weighted) {
            aw = to_long_vec(alpha.v);
            naw.assign(aw.size(), 0);
            for (size_t i = 0; i < aw.size(); ++i) naw[i] = -aw[i];
        }
        // Annihilator-side modes: charge -1 at degrees n >= 1, weight alpha.
        for (int n = 1; n <= trunc; ++n) {
            GradedCharacter f;
            f.trunc = trunc;
            f.add_term(TermKey{}, 1);
            f.add_term(TermKey{n, -1, aw, {}}, 1);
            r = r * f;
        }
        // Creator-side modes: charge +1 at degrees n >= 0, weight -alpha.
        for (int n = 0; n <= trunc; ++n) {
            GradedCharacter f;
            f.trunc = trunc;
            f.add_term(TermKey{}, 1);
            f.add_term(TermKey{n, 1, naw, {}}, 1);
            r = r * f;
        }
    }
    return r;
}

} // namespace

GradedCharacter ghost_char(const RootDatum& d, int trunc) { return ghost_char_impl(d, trunc, false); }

GradedCharacter ghost_char_weighted(const RootDatum& d, int trunc)
{
    return ghost_char_impl(d, trunc, true);
}

} // namespace cdoalg
