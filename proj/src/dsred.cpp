#include "cdoalg/dsred.hpp"

#include "cdoalg/errors.hpp"
#include "cdoalg/intmat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cdoalg {

namespace {

// Dense rational matrices for concrete root vectors.
using Mat = std::vector<std::vector<Rat>>;

Mat zeros(int n) { return Mat(n, std::vector<Rat>(n, Rat(0))); }

Mat unit(int n, int i, int j)
{
    Mat m = zeros(n);
    m[i][j] = 1;
    return m;
}

Mat sub(const Mat& a, const Mat& b)
{
    Mat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Mat comm(const Mat& a, const Mat& b)
{
    int n = (int)a.size();
    Mat r = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0 && b[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) {
                r[i][j] += a[i][k] * b[k][j];
                r[i][j] -= b[i][k] * a[k][j];
            }
        }
    return r;
}

bool mat_zero(const Mat& a)
{
    for (auto& row : a)
        for (auto& e : row)
            if (e != 0) return false;
    return true;
}

// c with a == c * b, when proportional; nullopt otherwise.
std::optional<Rat> proportion(const Mat& a, const Mat& b)
{
    Rat c = 0;
    bool found = false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) {
            if (b[i][j] == 0) {
                if (a[i][j] != 0) return std::nullopt;
                continue;
            }
            Rat r = a[i][j] / b[i][j];
            if (!found) {
                c = r;
                found = true;
            } else if (r != c) {
                return std::nullopt;
            }
        }
    if (!found) return Rat(0);
    return c;
}

// Positive-root data of one simple factor in Bourbaki coordinates: each
// positive root as its simple-root coefficient vector, plus the concrete
// matrix root vector in sl_{p+1} (type A) or so_{2p} (type D).
struct FactorRoots {
    std::vector<std::vector<int>> coeffs; // over the factor's Bourbaki nodes
    std::vector<Mat> vectors;
};

FactorRoots concrete_roots(char type, int p)
{
    FactorRoots out;
    if (type == 'A') {
        int n = p + 1;
        // root (i,j), 0 <= i < j < n, equals alpha_i + ... + alpha_{j-1}.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> c(p, 0);
                for (int t = i; t < j; ++t) c[t] = 1;
                out.coeffs.push_back(c);
                out.vectors.push_back(unit(n, i, j));
            }
        return out;
    }
    if (type == 'D') {
        int n = 2 * p;
        // e_i - e_j (i<j): E_ij - E_{p+j, p+i}; e_i + e_j (i<j): E_{i,p+j} - E_{j,p+i}.
        auto evec = [&](int i) {
            std::vector<int> e(p, 0);
            e[i] = 1;
            return e;
        };
        // Simple roots: alpha_i = e_i - e_{i+1} (i < p-1), alpha_{p-1} = e_{p-2} + e_{p-1}.
        // Solve e-basis coefficients into simple-root coefficients:
        // e_i - e_j = alpha_i + ... + alpha_{j-1} for j < p; handle +e_j via
        // the spinor node. Work directly with e-coordinates and convert.
        auto to_simple = [&](std::vector<int> ecoord) {
            // Solve sum_k c_k alpha_k = ecoord in e-coordinates.
            // alpha_k (k < p-1): e_k - e_{k+1}; alpha_{p-1}: e_{p-2} + e_{p-1}.
            std::vector<Rat> c(p, Rat(0));
            // Linear solve, small and exact.
            QMat m(p, QVec(p, Rat(0)));
            for (int k = 0; k + 1 < p; ++k) {
                m[k][k] = 1;
                m[k + 1][k] = -1;
            }
            m[p - 2][p - 1] = 1;
            m[p - 1][p - 1] = 1;
            QVec rhs(p);
            for (int i = 0; i < p; ++i) rhs[i] = Rat(ecoord[i]);
            auto sol = solve_rational(m, rhs);
            std::vector<int> ci(p);
            for (int i = 0; i < p; ++i) ci[i] = (int)(*sol)[i].get_num().get_si();
            return ci;
        };
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) {
                std::vector<int> em(p, 0);
                em[i] = 1;
                em[j] = -1;
                out.coeffs.push_back(to_simple(em));
                out.vectors.push_back(sub(unit(n, i, j), unit(n, p + j, p + i)));
                std::vector<int> ep(p, 0);
                ep[i] = 1;
                ep[j] = 1;
                out.coeffs.push_back(to_simple(ep));
                out.vectors.push_back(sub(unit(n, i, p + j), unit(n, j, p + i)));
            }
        return out;
    }
    throw precondition_error("structure constants implemented for types A and D only");
}

} // namespace

std::map<std::pair<int, int>, Rat> chevalley_constants(const RootDatum& d)
{
    if (d.is_torus()) throw precondition_error("brst_data: semisimple datum required");
    const auto& pos = d.positive_roots();
    int npos = (int)pos.size();

    // Coefficients of every positive root over the datum's simple roots.
    std::vector<std::vector<Rat>> pos_coeff(npos);
    int p = d.semisimple_rank();
    for (int r = 0; r < npos; ++r) {
        QMat m(d.rank(), QVec(p));
        for (int i = 0; i < d.rank(); ++i)
            for (int j = 0; j < p; ++j) m[i][j] = d.simple_root(j).v[i];
        // Solve via pairings with coroots: coefficients against the Cartan matrix.
        QMat sys(p, QVec(p));
        QVec rhs(p);
        IMat cm = d.cartan_matrix();
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b) sys[a][b] = Rat(cm[b][a].get_si());
            rhs[a] = RootDatum::pairing(pos[r], d.simple_coroot(a));
        }
        auto sol = solve_rational(sys, rhs);
        if (!sol) throw precondition_error("chevalley_constants: coefficient solve failed");
        pos_coeff[r] = *sol;
    }

    // Concrete root vectors per factor.
    std::vector<Mat> vectors(npos);
    for (const SimpleFactor& f : d.factors()) {
        if (f.type != 'A' && f.type != 'D')
            throw precondition_error("structure constants implemented for types A and D only");
        int fp = (int)f.nodes.size();
        FactorRoots fr = concrete_roots(f.type, fp);
        // Map factor Bourbaki coefficient vectors to datum positive-root indices.
        std::map<int, int> node_pos; // datum node -> Bourbaki position
        for (int i = 0; i < fp; ++i) node_pos[f.bourbaki[i]] = i;
        for (int r = 0; r < npos; ++r) {
            // The root belongs to this factor if supported on its nodes.
            bool in_factor = true;
            std::vector<int> bc(fp, 0);
            for (int j = 0; j < p; ++j) {
                if (pos_coeff[r][j] == 0) continue;
                if (!node_pos.count(j)) {
                    in_factor = false;
                    break;
                }
                bc[node_pos[j]] = (int)pos_coeff[r][j].get_num().get_si();
            }
            if (!in_factor) continue;
            bool matched = false;
            for (size_t t = 0; t < fr.coeffs.size(); ++t)
                if (fr.coeffs[t] == bc) {
                    vectors[r] = fr.vectors[t];
                    matched = true;
                    break;
                }
            if (!matched) throw precondition_error("chevalley_constants: root matching failed");
        }
    }

    // Heights order the sign-fixing pass.
    auto height_of = [&](int r) {
        Rat h = 0;
        for (auto& c : pos_coeff[r]) h += c;
        return h;
    };
    std::vector<int> by_height(npos);
    for (int i = 0; i < npos; ++i) by_height[i] = i;
    std::sort(by_height.begin(), by_height.end(),
              [&](int a, int b) { return height_of(a) < height_of(b); });

    // Root index lookup by lattice vector.
    std::map<QVec, int> index_of;
    for (int r = 0; r < npos; ++r) index_of[pos[r].v] = r;

    auto compute_all = [&]() {
        std::map<std::pair<int, int>, Rat> cs;
        for (int a = 0; a < npos; ++a)
            for (int b = 0; b < npos; ++b) {
                if (a == b || vectors[a].empty() || vectors[b].empty()) continue;
                auto it = index_of.find(pos[a].v + pos[b].v);
                if (it == index_of.end()) continue;
                int g = it->second;
                if (vectors[g].empty()) continue; // cross-factor: cannot happen
                Mat br = comm(vectors[a], vectors[b]);
                if (mat_zero(br)) continue;
                auto c = proportion(br, vectors[g]);
                if (!c) throw precondition_error("chevalley_constants: bracket not proportional");
                if (*c != 0) cs[{a, b}] = *c;
            }
        return cs;
    };

    // Extraspecial positivity: for each non-simple gamma, the decomposition
    // gamma = alpha + beta with minimal alpha must have positive constant.
    for (int g : by_height) {
        if (height_of(g) <= 1 || vectors[g].empty()) continue;
        int best_a = -1, best_b = -1;
        for (int a = 0; a < npos; ++a) {
            auto it = index_of.find(pos[g].v - pos[a].v);
            if (it == index_of.end()) continue;
            int b = it->second;
            if (vectors[a].empty() || vectors[b].empty()) continue;
            if (best_a == -1 || a < best_a) {
                best_a = a;
                best_b = b;
            }
        }
        if (best_a == -1) continue;
        Mat br = comm(vectors[best_a], vectors[best_b]);
        auto c = proportion(br, vectors[g]);
        if (c && *c < 0)
            for (auto& row : vectors[g])
                for (auto& e : row) e = -e;
    }

    return compute_all();
}

BRSTData brst_data(const RootDatum& d)
{
    if (d.is_torus()) throw precondition_error("brst_data: semisimple datum required");
    BRSTData out;
    auto cs = chevalley_constants(d);
    const auto& pos = d.positive_roots();
    for (int r = 0; r < (int)pos.size(); ++r) out.quadratic.push_back(r);
    for (auto& [ab, c] : cs) {
        if (ab.first < ab.second) {
            auto it = std::find_if(pos.begin(), pos.end(), [&](const Weight& w) {
                return w.v == pos[ab.first].v + pos[ab.second].v;
            });
            out.cubic.push_back(BRSTData::Cubic{ab.first, ab.second,
                                                (int)(it - pos.begin()), c});
        }
    }
    for (int i = 0; i < d.semisimple_rank(); ++i) {
        for (int r = 0; r < (int)pos.size(); ++r)
            if (pos[r].v == d.simple_root(i).v) out.chi.push_back(r);
    }
    return out;
}

GhostTwist c_twist(const RootDatum& d, const Coweight& mu)
{
    if (!d.in_coweight_lattice(mu))
        throw precondition_error("c_twist: mu must lie in the coweight lattice");
    GhostTwist t;
    t.mu = mu;
    for (auto& alpha : d.positive_roots()) {
        Rat a = RootDatum::pairing(alpha, mu);
        t.fermion.push_back(-(long)a.get_num().get_si());
        t.charge_shift += t.fermion.back();
    }
    return t;
}

std::string ReductionResult::json() const
{
    std::ostringstream os;
    os << "{\"degree\": ";
    if (degree)
        os << *degree;
    else
        os << "null";
    os << ", \"payload\": \"" << payload.sexpr() << "\", \"simple\": ";
    if (simplicity)
        os << (*simplicity == Simplicity::simple ? "true" : "false");
    else
        os << "null";
    os << "}";
    return os.str();
}

namespace {

void require_generic(const Level& kappa, const char* who)
{
    if (!kappa.is_generic())
        throw precondition_error(std::string(who) + ": generic level required");
}

long two_rho_pairing(const RootDatum& d, const Coweight& mu)
{
    Rat v = RootDatum::pairing(d.rho(), mu) * 2;
    if (!is_integer(v)) throw precondition_error("2 rho pairing must be integral");
    return v.get_num().get_si();
}

} // namespace

ReductionResult reduce_weyl(const Level& kappa, const Weight& lambda)
{
    require_generic(kappa, "reduce_weyl");
    const RootDatum& d = *kappa.datum();
    if (!d.is_dominant(lambda) || !d.in_weight_lattice(lambda))
        throw precondition_error("reduce_weyl: dominant integral weight required");
    ReductionResult r;
    r.degree = 0;
    r.payload = Label::tw(kappa, lambda, Coweight{QVec(d.rank(), Rat(0))});
    r.simplicity = Simplicity::simple;
    return r;
}

ReductionResult reduce_sf_weyl(const Level& kappa, const Weight& lambda, const Coweight& mu)
{
    require_generic(kappa, "reduce_sf_weyl");
    const RootDatum& d = *kappa.datum();
    if (!d.in_coweight_lattice(mu))
        throw precondition_error("reduce_sf_weyl: mu must lie in the coweight lattice");
    if (!d.is_dominant(lambda) || !d.in_weight_lattice(lambda))
        throw precondition_error("reduce_sf_weyl: dominant integral weight required");
    ReductionResult r;
    if (!d.is_dominant(mu)) {
        r.payload = Label::zero();
        return r;
    }
    if (cdoalg::is_zero(mu.v)) {
        r = reduce_weyl(kappa, lambda);
        return r;
    }
    r.degree = two_rho_pairing(d, mu);
    r.payload = Label::tw(kappa, lambda, mu);
    r.simplicity = Simplicity::simple;
    return r;
}

ReductionResult reduce_cdo_sf(const Level& kappa, const Coweight& gamma, const Coweight& x)
{
    require_generic(kappa, "reduce_cdo_sf");
    const RootDatum& d = *kappa.datum();
    if (!d.in_cocharacter_lattice(gamma))
        throw precondition_error("reduce_cdo_sf: gamma must lie in X_*(T)");
    if (!d.in_coweight_lattice(x))
        throw precondition_error("reduce_cdo_sf: x must lie in the coweight lattice");
    Coweight total{gamma.v + x.v};
    ReductionResult r;
    if (!d.is_dominant(total)) {
        r.payload = Label::zero();
        return r;
    }
    r.degree = two_rho_pairing(d, total);
    r.payload = Label::pw_sum(kappa, total, d.w0(x));
    bool plain = cdoalg::is_zero(x.v);
    if (plain || (d.is_adjoint() && d.is_dominant(total)))
        r.simplicity = Simplicity::simple;
    return r;
}

GradedCharacter euler_char_reduction(const Level& kappa, const Weight& lambda, int trunc)
{
    require_generic(kappa, "euler_char_reduction");
    const RootDatum& d = *kappa.datum();
    if (!d.is_dominant(lambda) || !d.in_weight_lattice(lambda))
        throw precondition_error("euler_char_reduction: dominant integral weight required");

    // weyl_module_char x signed weighted ghosts, with the root-oscillator
    // factors cancelled against the fermionic ones in closed form: what is
    // left is chi_lambda * Prod_{a>0}(1 - e^{-a}) * Prod_{n>=1}(1-q^n)^{-rank}.
    GradedCharacter base = finite_char(d, lambda);
    base.offset = casimir_offset(kappa, lambda);
    for (auto& alpha : d.positive_roots()) {
        GradedCharacter f;
        f.trunc = 0;
        f.virtual_char = true;
        f.add_term(TermKey{}, 1);
        TermKey neg;
        neg.left.assign(d.rank(), 0);
        for (int i = 0; i < d.rank(); ++i) {
            if (!is_integer(alpha.v[i]))
                throw precondition_error("euler_char_reduction: non-integral root coordinates");
            neg.left[i] = -alpha.v[i].get_num().get_si();
        }
        f.add_term(neg, -1);
        Scalar off = base.offset;
        base = base * f;
        base.offset = off;
    }

    // The specialized base is a finite polynomial; give it enough declared
    // order to cover its own exponent spread before multiplying.
    QVec phi = -d.rho_check().v; // e^mu -> q^{-<mu, rho-check>}
    Rat lo = 0, hi = 0;
    bool first = true;
    for (auto& [k, m] : base.terms) {
        Rat e = 0;
        for (size_t i = 0; i < k.left.size(); ++i) e += Rat(k.left[i]) * phi[i];
        if (first) {
            lo = hi = e;
            first = false;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    Rat spread_q = hi - lo;
    Int spread_i = floor_div(spread_q.get_num(), spread_q.get_den());
    int spread = (int)spread_i.get_si() + 1;
    GradedCharacter specialized = base.specialize_left(phi, std::max(trunc, spread));
    GradedCharacter series = partition_series(d.rank(), trunc);
    return (specialized * series).truncated(trunc);
}

int fermion_charge_floor(int m) { return m * (m - 1) / 2; }

BosonFermionReport boson_fermion_check(const RootDatum& d, int trunc)
{
    BosonFermionReport rep;
    if (d.is_torus()) return rep; // empty product, nothing to verify

    // Left side: one positive root's fermion pair, expanded directly.
    GradedCharacter lhs = GradedCharacter::unit(trunc);
    for (int n = 1; n <= trunc + 1; ++n) {
        GradedCharacter f;
        f.trunc = trunc;
        f.add_term(TermKey{}, 1);
        if (n - 1 <= trunc) f.add_term(TermKey{n - 1, 1, {}, {}}, 1);
        lhs = lhs * f;
    }
    for (int n = 1; n <= trunc; ++n) {
        GradedCharacter f;
        f.trunc = trunc;
        f.add_term(TermKey{}, 1);
        f.add_term(TermKey{n, -1, {}, {}}, 1);
        lhs = lhs * f;
    }

    // Right side assembled independently from charge floors and partitions.
    GradedCharacter rhs;
    rhs.trunc = trunc;
    GradedCharacter parts = partition_series(1, trunc);
    for (int m = -trunc; m <= trunc + 1; ++m) {
        int floor = fermion_charge_floor(m);
        if (floor > trunc) continue;
        for (auto& [k, mult] : parts.terms) {
            if (k.q + floor > trunc) continue;
            rhs.add_term(TermKey{k.q + floor, m, {}, {}}, mult);
        }
    }

    if (lhs.terms == rhs.terms) return rep;
    rep.ok = false;
    for (auto& [k, m] : lhs.terms) {
        if (rhs.coefficient(k) != m) {
            rep.q = k.q;
            rep.charge = k.charge;
            rep.lhs = m;
            rep.rhs = rhs.coefficient(k);
            return rep;
        }
    }
    for (auto& [k, m] : rhs.terms) {
        if (lhs.coefficient(k) != m) {
            rep.q = k.q;
            rep.charge = k.charge;
            rep.lhs = lhs.coefficient(k);
            rep.rhs = m;
            return rep;
        }
    }
    return rep;
}

} // namespace cdoalg
