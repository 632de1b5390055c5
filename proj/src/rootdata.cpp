#include "cdoalg/rootdata.hpp"

#include "cdoalg/errors.hpp"
#include "cdoalg/intmat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cdoalg {

namespace {

QVec to_qvec(const IVec& v)
{
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

IMat cartan_type_a(int p)
{
    IMat a(p, IVec(p, Int(0)));
    for (int i = 0; i < p; ++i) {
        a[i][i] = 2;
        if (i + 1 < p) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    return a;
}

IMat cartan_type_d(int p)
{
    if (p < 3) throw precondition_error("type D needs rank >= 3");
    IMat a(p, IVec(p, Int(0)));
    for (int i = 0; i < p; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < p - 1; ++i) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    a[p - 3][p - 1] = -1;
    a[p - 1][p - 3] = -1;
    return a;
}

// Simply connected datum: X*(T) = P in the fundamental-weight basis, so the
// simple roots are the Cartan rows and the coroots the standard basis.
std::pair<IMat, IMat> simply_connected(const IMat& cartan)
{
    size_t p = cartan.size();
    IMat roots = cartan;
    IMat coroots(p, IVec(p, Int(0)));
    for (size_t i = 0; i < p; ++i) coroots[i][i] = 1;
    return {roots, coroots};
}

// Adjoint datum: X*(T) = Q in the simple-root basis.
std::pair<IMat, IMat> adjoint_datum(const IMat& cartan)
{
    size_t p = cartan.size();
    IMat roots(p, IVec(p, Int(0)));
    for (size_t i = 0; i < p; ++i) roots[i][i] = 1;
    IMat coroots(p, IVec(p, Int(0)));
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) coroots[i][j] = cartan[j][i];
    return {roots, coroots};
}

// Rational coordinates of `target` in the row span of `rows`; nullopt if
// outside the span.
std::optional<QVec> in_span_coords(const IMat& rows, const QVec& target)
{
    size_t p = rows.size(), n = target.size();
    QMat m(n, QVec(p + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < p; ++j) m[i][j] = Rat(rows[j][i]);
        m[i][p] = target[i];
    }
    size_t row = 0;
    std::vector<int> pivot_col;
    for (size_t col = 0; col < p && row < n; ++col) {
        size_t piv = row;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        Rat d = m[row][col];
        for (size_t j = 0; j <= p; ++j) m[row][j] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j <= p; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back((int)col);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (m[i][p] != 0) return std::nullopt;
    QVec x(p, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][p];
    return x;
}

} // namespace

RootDatum::RootDatum(int rank, IMat simple_roots, IMat simple_coroots, std::string name)
    : rank_(rank), simple_roots_(std::move(simple_roots)), simple_coroots_(std::move(simple_coroots)),
      name_(std::move(name))
{
    validate();
    build_roots();
    build_factors();
    build_w0();
    build_fundamental();
}

void RootDatum::validate() const
{
    if (rank_ < 0) throw precondition_error("datum rank must be nonnegative");
    if (simple_roots_.size() != simple_coroots_.size())
        throw precondition_error("simple roots and coroots must be paired");
    size_t p = simple_roots_.size();
    if ((int)p > rank_) throw precondition_error("semisimple rank exceeds rank");
    for (auto& r : simple_roots_)
        if ((int)r.size() != rank_) throw precondition_error("root of wrong dimension");
    for (auto& r : simple_coroots_)
        if ((int)r.size() != rank_) throw precondition_error("coroot of wrong dimension");

    IMat a = cartan_matrix();
    for (size_t i = 0; i < p; ++i) {
        if (a[i][i] != 2) throw precondition_error("Cartan diagonal must be 2");
        for (size_t j = 0; j < p; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw precondition_error("Cartan off-diagonal must be <= 0");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw precondition_error("Cartan matrix zero pattern must be symmetric");
        }
    }
    // Positive-definite symmetrization: d_i > 0 with d_i a_ij = d_j a_ji, then
    // leading minors of (d_i a_ij) positive.
    std::vector<Rat> d(p, Rat(0));
    for (size_t start = 0; start < p; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::vector<size_t> stack = {start};
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < p; ++j) {
                if (a[i][j] == 0 || i == j) continue;
                Rat dj = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
                if (d[j] == 0) {
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw precondition_error("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    QMat sym(p, QVec(p));
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) sym[i][j] = d[i] * Rat(a[i][j]);
    for (size_t m = 1; m <= p; ++m) {
        QMat minor(m, QVec(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) minor[i][j] = sym[i][j];
        if (rational_det(minor) <= 0)
            throw precondition_error("Cartan matrix is not of finite type");
    }
    if (!simple_roots_.empty()) {
        IVec div = elementary_divisors(simple_roots_);
        for (auto& e : div)
            if (e == 0) throw precondition_error("simple roots must be linearly independent");
    }
}

IMat RootDatum::cartan_matrix() const
{
    size_t p = simple_roots_.size();
    IMat a(p, IVec(p, Int(0)));
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j)
            for (int t = 0; t < rank_; ++t) a[i][j] += simple_roots_[i][t] * simple_coroots_[j][t];
    return a;
}

Weight RootDatum::simple_root(int i) const { return Weight{to_qvec(simple_roots_[i])}; }
Coweight RootDatum::simple_coroot(int i) const { return Coweight{to_qvec(simple_coroots_[i])}; }

Rat RootDatum::pairing(const Weight& w, const Coweight& c)
{
    if (w.v.size() != c.v.size()) throw precondition_error("pairing: datum mismatch");
    return dot(w.v, c.v);
}

bool RootDatum::in_weight_lattice(const Weight& w) const
{
    for (int i = 0; i < semisimple_rank(); ++i)
        if (!is_integer(pairing(w, simple_coroot(i)))) return false;
    return true;
}

bool RootDatum::in_coweight_lattice(const Coweight& c) const
{
    for (int i = 0; i < semisimple_rank(); ++i)
        if (!is_integer(pairing(simple_root(i), c))) return false;
    return true;
}

bool RootDatum::is_dominant(const Weight& w) const
{
    for (int i = 0; i < semisimple_rank(); ++i)
        if (pairing(w, simple_coroot(i)) < 0) return false;
    return true;
}

bool RootDatum::is_dominant(const Coweight& c) const
{
    for (int i = 0; i < semisimple_rank(); ++i)
        if (pairing(simple_root(i), c) < 0) return false;
    return true;
}

bool RootDatum::in_root_lattice(const Weight& w) const
{
    auto x = in_span_coords(simple_roots_, w.v);
    if (!x) return false;
    return all_integer(*x);
}

bool RootDatum::in_coroot_lattice(const Coweight& c) const
{
    auto x = in_span_coords(simple_coroots_, c.v);
    if (!x) return false;
    return all_integer(*x);
}

Weight RootDatum::simple_reflection(int i, const Weight& w) const
{
    Rat p = pairing(w, simple_coroot(i));
    return Weight{w.v - p * simple_root(i).v};
}

Coweight RootDatum::simple_reflection(int i, const Coweight& c) const
{
    Rat p = pairing(simple_root(i), c);
    return Coweight{c.v - p * simple_coroot(i).v};
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& w) const
{
    std::set<QVec> seen;
    std::vector<Weight> out, frontier = {w};
    seen.insert(w.v);
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (auto& x : frontier) {
            out.push_back(x);
            for (int i = 0; i < semisimple_rank(); ++i) {
                Weight y = simple_reflection(i, x);
                if (seen.insert(y.v).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void RootDatum::build_roots()
{
    std::set<QVec> seen;
    std::vector<std::pair<Weight, Coweight>> frontier, all;
    for (int i = 0; i < semisimple_rank(); ++i) {
        auto pr = std::make_pair(simple_root(i), simple_coroot(i));
        if (seen.insert(pr.first.v).second) {
            frontier.push_back(pr);
            all.push_back(pr);
        }
    }
    while (!frontier.empty()) {
        std::vector<std::pair<Weight, Coweight>> next;
        for (auto& [r, cr] : frontier)
            for (int i = 0; i < semisimple_rank(); ++i) {
                Weight r2 = simple_reflection(i, r);
                Coweight c2 = simple_reflection(i, cr);
                if (seen.insert(r2.v).second) {
                    next.emplace_back(r2, c2);
                    all.emplace_back(r2, c2);
                }
            }
        frontier = std::move(next);
    }
    std::vector<std::pair<Rat, size_t>> keep; // (height, index into all)
    for (size_t i = 0; i < all.size(); ++i) {
        auto x = in_span_coords(simple_roots_, all[i].first.v);
        bool pos = true;
        Rat h = 0;
        for (auto& c : *x) {
            if (c < 0) pos = false;
            h += c;
        }
        if (pos) keep.emplace_back(h, i);
    }
    std::sort(keep.begin(), keep.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return all[a.second].first.v < all[b.second].first.v;
    });
    for (auto& [h, i] : keep) {
        positive_roots_.push_back(all[i].first);
        positive_coroots_.push_back(all[i].second);
    }

    rho_.v.assign(rank_, Rat(0));
    rho_check_.v.assign(rank_, Rat(0));
    for (auto& r : positive_roots_) rho_.v = rho_.v + Rat(1, 2) * r.v;
    for (auto& c : positive_coroots_) rho_check_.v = rho_check_.v + Rat(1, 2) * c.v;
}

void RootDatum::build_factors()
{
    int p = semisimple_rank();
    IMat a = cartan_matrix();
    std::vector<int> comp(p, -1);
    int ncomp = 0;
    for (int i = 0; i < p; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack = {i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < p; ++v)
                if (comp[v] == -1 && a[u][v] != 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    factors_.resize(ncomp);
    for (int i = 0; i < p; ++i) factors_[comp[i]].nodes.push_back(i);

    for (auto& f : factors_) {
        Rat best = -1;
        for (size_t ri = 0; ri < positive_roots_.size(); ++ri) {
            auto x = in_span_coords(simple_roots_, positive_roots_[ri].v);
            bool in_factor = true;
            Rat h = 0;
            for (int j = 0; j < p; ++j) {
                if ((*x)[j] != 0 && comp[j] != comp[f.nodes[0]]) in_factor = false;
                h += (*x)[j];
            }
            if (in_factor && h > best) {
                best = h;
                f.highest_root = positive_roots_[ri];
                f.highest_coroot = positive_coroots_[ri];
            }
        }
        // Dual Coxeter number: 1 + <rho, theta^vee>; rho of the factor and of
        // the datum pair equally against a factor coroot.
        Rat hv = pairing(rho_, f.highest_coroot) + 1;
        f.dual_coxeter = (int)hv.get_num().get_si();

        int sz = (int)f.nodes.size();
        std::vector<int> deg(sz, 0);
        for (int ii = 0; ii < sz; ++ii)
            for (int jj = 0; jj < sz; ++jj)
                if (ii != jj && a[f.nodes[ii]][f.nodes[jj]] != 0) deg[ii]++;
        int n3 = (int)std::count(deg.begin(), deg.end(), 3);
        bool laced = true;
        for (int ii = 0; ii < sz; ++ii)
            for (int jj = 0; jj < sz; ++jj)
                if (ii != jj && a[f.nodes[ii]][f.nodes[jj]] < -1) laced = false;
        if (!laced) {
            f.type = '?';
        } else if (n3 == 0 && sz >= 1) {
            f.type = 'A';
            int start = 0;
            for (int ii = sz - 1; ii >= 0; --ii)
                if (deg[ii] <= 1) start = ii;
            std::vector<int> order = {start};
            std::vector<bool> used(sz, false);
            used[start] = true;
            while ((int)order.size() < sz) {
                int cur = order.back();
                bool advanced = false;
                for (int jj = 0; jj < sz; ++jj)
                    if (!used[jj] && a[f.nodes[cur]][f.nodes[jj]] != 0) {
                        order.push_back(jj);
                        used[jj] = true;
                        advanced = true;
                        break;
                    }
                if (!advanced) break;
            }
            if ((int)order.size() != sz) {
                f.type = '?';
            } else {
                for (int ii : order) f.bourbaki.push_back(f.nodes[ii]);
            }
        } else if (n3 == 1 && sz >= 4) {
            f.type = 'D';
            int tri = (int)(std::find(deg.begin(), deg.end(), 3) - deg.begin());
            std::vector<int> leaves, tail;
            for (int jj = 0; jj < sz; ++jj) {
                if (jj == tri || a[f.nodes[tri]][f.nodes[jj]] == 0) continue;
                if (deg[jj] == 1)
                    leaves.push_back(jj);
                else
                    tail.push_back(jj);
            }
            if (leaves.size() == 3) { // D4 special case
                tail.push_back(leaves.back());
                leaves.pop_back();
            }
            if (leaves.size() != 2 || tail.size() != 1) {
                f.type = '?';
            } else {
                std::vector<int> chain = {tri};
                std::vector<bool> used(sz, false);
                used[tri] = used[leaves[0]] = used[leaves[1]] = true;
                int cur = tail[0];
                while (true) {
                    chain.push_back(cur);
                    used[cur] = true;
                    int nxt = -1;
                    for (int jj = 0; jj < sz; ++jj)
                        if (!used[jj] && a[f.nodes[cur]][f.nodes[jj]] != 0) nxt = jj;
                    if (nxt == -1) break;
                    cur = nxt;
                }
                std::reverse(chain.begin(), chain.end()); // ends at the trivalent node
                for (int ii : chain) f.bourbaki.push_back(f.nodes[ii]);
                f.bourbaki.push_back(f.nodes[leaves[0]]);
                f.bourbaki.push_back(f.nodes[leaves[1]]);
            }
        } else {
            f.type = '?';
        }
    }

    if (rank_ == 0) {
        central_char_basis_ = {};
        central_cochar_basis_ = {};
    } else if (p == 0) {
        central_char_basis_.assign(rank_, IVec(rank_, Int(0)));
        central_cochar_basis_.assign(rank_, IVec(rank_, Int(0)));
        for (int i = 0; i < rank_; ++i) {
            central_char_basis_[i][i] = 1;
            central_cochar_basis_[i][i] = 1;
        }
    } else {
        central_char_basis_ = integer_kernel(simple_coroots_);
        central_cochar_basis_ = integer_kernel(simple_roots_);
    }
}

void RootDatum::build_w0()
{
    Weight x = rho_;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < semisimple_rank(); ++i) {
            if (pairing(x, simple_coroot(i)) > 0) {
                x = simple_reflection(i, x);
                w0_word_.push_back(i);
                moved = true;
            }
        }
    }
}

Weight RootDatum::w0(const Weight& w) const
{
    Weight x = w;
    for (int i : w0_word_) x = simple_reflection(i, x);
    return x;
}

Coweight RootDatum::w0(const Coweight& c) const
{
    Coweight x = c;
    for (int i : w0_word_) x = simple_reflection(i, x);
    return x;
}

Weight RootDatum::minus_w0(const Weight& w) const
{
    Weight x = w0(w);
    return Weight{-x.v};
}

Coweight RootDatum::minus_w0(const Coweight& c) const
{
    Coweight x = w0(c);
    return Coweight{-x.v};
}

Int RootDatum::weyl_order() const
{
    if (semisimple_rank() == 0) return 1;
    // rho is regular, its orbit has full Weyl-group size.
    return Int((unsigned long)weyl_orbit(rho_).size());
}

Weight RootDatum::highest_root() const
{
    if (is_torus()) throw precondition_error("no roots");
    if (factors_.size() != 1) throw precondition_error("highest root needs a single simple factor");
    return factors_[0].highest_root;
}

Coweight RootDatum::highest_coroot() const
{
    if (is_torus()) throw precondition_error("no roots");
    if (factors_.size() != 1) throw precondition_error("highest coroot needs a single simple factor");
    return factors_[0].highest_coroot;
}

void RootDatum::build_fundamental()
{
    int p = semisimple_rank();
    fundamental_weights_.resize(p);
    fundamental_coweights_.resize(p);
    if (p == 0) return;
    for (int i = 0; i < p; ++i) {
        // fw_i = sum_b c_b alpha_b with sum_b c_b <alpha_b, alpha_a^vee> = delta_ia.
        QMat m(p, QVec(p));
        QVec rhs(p, Rat(0));
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) m[a][b] = pairing(simple_root(b), simple_coroot(a));
        rhs[i] = 1;
        auto sol = solve_rational(m, rhs);
        if (!sol) throw precondition_error("fundamental weights: singular Cartan matrix");
        QVec w(rank_, Rat(0));
        for (int b = 0; b < p; ++b) w = w + (*sol)[b] * simple_root(b).v;
        fundamental_weights_[i] = Weight{w};

        QMat mt(p, QVec(p));
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) mt[a][b] = pairing(simple_root(a), simple_coroot(b));
        auto solc = solve_rational(mt, rhs);
        if (!solc) throw precondition_error("fundamental coweights: singular Cartan matrix");
        QVec cw(rank_, Rat(0));
        for (int b = 0; b < p; ++b) cw = cw + (*solc)[b] * simple_coroot(b).v;
        fundamental_coweights_[i] = Coweight{cw};
    }
}

Weight RootDatum::semisimple_part(const Weight& w) const
{
    QVec s(rank_, Rat(0));
    for (int i = 0; i < semisimple_rank(); ++i)
        s = s + pairing(w, simple_coroot(i)) * fundamental_weights_[i].v;
    return Weight{s};
}

Weight RootDatum::central_part(const Weight& w) const { return Weight{w.v - semisimple_part(w).v}; }

Coweight RootDatum::semisimple_part(const Coweight& c) const
{
    QVec s(rank_, Rat(0));
    for (int i = 0; i < semisimple_rank(); ++i)
        s = s + pairing(simple_root(i), c) * fundamental_coweights_[i].v;
    return Coweight{s};
}

Coweight RootDatum::central_part(const Coweight& c) const
{
    return Coweight{c.v - semisimple_part(c).v};
}

Rat RootDatum::norm_form_factor(int factor, const Weight& a, const Weight& b) const
{
    const SimpleFactor& f = factors_[factor];
    IMat cm = cartan_matrix();
    std::map<int, Rat> d;
    d[f.nodes[0]] = 1;
    std::vector<int> stack = {f.nodes[0]};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : f.nodes) {
            if (j == i || cm[i][j] == 0 || d.count(j)) continue;
            d[j] = d[i] * Rat(cm[i][j].get_si()) / Rat(cm[j][i].get_si());
            stack.push_back(j);
        }
    }
    Rat dmax = 0;
    for (auto& [i, di] : d) dmax = std::max(dmax, di);
    for (auto& [i, di] : d) di /= dmax; // long roots get d = 1: (theta,theta) = 2

    size_t m = f.nodes.size();
    QMat sys(m, QVec(m));
    QVec rhs(m);
    for (size_t aa = 0; aa < m; ++aa) {
        for (size_t bb = 0; bb < m; ++bb) sys[aa][bb] = Rat(cm[f.nodes[bb]][f.nodes[aa]].get_si());
        rhs[aa] = pairing(b, simple_coroot(f.nodes[aa]));
    }
    auto sol = solve_rational(sys, rhs);
    if (!sol) throw precondition_error("norm_form: singular Cartan block");
    QVec nu(rank_, Rat(0));
    for (size_t bb = 0; bb < m; ++bb)
        nu = nu + ((*sol)[bb] * d[f.nodes[bb]]) * simple_coroot(f.nodes[bb]).v;
    return dot(a.v, nu);
}

Rat RootDatum::norm_form(const Weight& a, const Weight& b) const
{
    Rat s = 0;
    for (size_t f = 0; f < factors_.size(); ++f) s += norm_form_factor((int)f, a, b);
    return s;
}

Int RootDatum::weyl_dimension(const Weight& lambda) const
{
    if (!in_weight_lattice(lambda) || !is_dominant(lambda))
        throw precondition_error("weyl_dimension: weight must be dominant integral");
    Rat num = 1, den = 1;
    for (size_t i = 0; i < positive_roots_.size(); ++i) {
        num *= pairing(Weight{lambda.v + rho_.v}, positive_coroots_[i]);
        den *= pairing(rho_, positive_coroots_[i]);
    }
    Rat d = num / den;
    if (!is_integer(d)) throw precondition_error("weyl_dimension: non-integral result");
    return d.get_num();
}

std::vector<std::pair<Weight, Int>> RootDatum::weight_multiplicities(const Weight& lambda) const
{
    if (!in_weight_lattice(lambda) || !is_dominant(lambda))
        throw precondition_error("weight_multiplicities: weight must be dominant integral");

    std::map<QVec, Int> dom_mult;
    dom_mult[lambda.v] = 1;

    // Dominant weights below lambda, BFS through lambda - sum n_i alpha_i.
    // Dropping one simple root can leave the dominant cone even when lower
    // dominant weights exist, so walk the full weight polytope and keep the
    // dominant points.
    std::set<QVec> seen = {lambda.v};
    std::vector<QVec> queue = {lambda.v}, dominants = {lambda.v};
    size_t head = 0;
    while (head < queue.size()) {
        QVec cur = queue[head++];
        for (int i = 0; i < semisimple_rank(); ++i) {
            QVec nxt = cur - simple_root(i).v;
            if (seen.count(nxt)) continue;
            // Stay inside the orbit conv hull: the dominant representative
            // must still be <= lambda in the root order.
            QVec x = nxt;
            bool moved = true;
            while (moved) {
                moved = false;
                for (int j = 0; j < semisimple_rank(); ++j)
                    if (pairing(Weight{x}, simple_coroot(j)) < 0) {
                        x = simple_reflection(j, Weight{x}).v;
                        moved = true;
                    }
            }
            auto diff = in_span_coords(simple_roots_, lambda.v - x);
            bool inside = diff.has_value();
            if (inside)
                for (auto& c : *diff)
                    if (c < 0 || !is_integer(c)) inside = false;
            if (!inside) continue;
            seen.insert(nxt);
            queue.push_back(nxt);
            if (is_dominant(Weight{nxt})) dominants.push_back(nxt);
        }
    }
    std::sort(dominants.begin(), dominants.end(), [&](const QVec& a, const QVec& b) {
        Rat ha = height(Weight{a}), hb = height(Weight{b});
        if (ha != hb) return ha > hb;
        return a < b;
    });

    auto full_mult = [&](const QVec& w) -> Int {
        QVec x = w;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i < semisimple_rank(); ++i)
                if (pairing(Weight{x}, simple_coroot(i)) < 0) {
                    x = simple_reflection(i, Weight{x}).v;
                    moved = true;
                }
        }
        auto it = dom_mult.find(x);
        return it == dom_mult.end() ? Int(0) : it->second;
    };

    Rat clam = norm_form(Weight{lambda.v + rho_.v + rho_.v}, lambda);
    for (const QVec& mu : dominants) {
        if (mu == lambda.v) continue;
        Rat cmu = norm_form(Weight{mu + rho_.v + rho_.v}, Weight{mu});
        Rat denom = clam - cmu;
        if (denom == 0) continue; // not a weight of V_lambda
        Rat sum = 0;
        for (const auto& alpha : positive_roots_) {
            for (int j = 1;; ++j) {
                QVec up = mu + Rat(j) * alpha.v;
                Int m = full_mult(up);
                if (m == 0) break; // weight strings are unbroken
                sum += Rat(2) * Rat(m) * norm_form(Weight{up}, alpha);
            }
        }
        Rat mult = sum / denom;
        if (!is_integer(mult)) throw precondition_error("Freudenthal: non-integer multiplicity");
        if (mult != 0) dom_mult[mu] = mult.get_num();
    }

    std::vector<std::pair<Weight, Int>> out;
    for (auto& [mu, m] : dom_mult)
        for (const Weight& w : weyl_orbit(Weight{mu})) out.emplace_back(w, m);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.v < b.first.v; });
    return out;
}

std::vector<Weight> RootDatum::p1_plus() const
{
    if (is_torus()) return {Weight{QVec(rank_, Rat(0))}};
    if (factors_.size() != 1) throw precondition_error("p1_plus: datum must be simple");
    Coweight tv = highest_coroot();
    std::vector<Weight> out = {Weight{QVec(rank_, Rat(0))}};
    for (const Weight& fw : fundamental_weights_)
        if (pairing(fw, tv) <= 1) out.push_back(fw);
    return out;
}

Weight RootDatum::minuscule_match(const Weight& mu) const
{
    if (factors_.size() != 1 || (factors_[0].type != 'A' && factors_[0].type != 'D'))
        throw precondition_error("minuscule_match: datum must be simple of type A or D");
    std::vector<Weight> matches;
    for (const Weight& lam : p1_plus())
        if (in_root_lattice(Weight{mu.v + lam.v})) matches.push_back(lam);
    if (matches.empty()) throw precondition_error("minuscule_match: no match found");
    if (matches.size() > 1)
        throw precondition_error("minuscule_match: match not unique (datum outside scope)");
    return matches[0];
}

std::vector<Weight> RootDatum::dominant_characters(int cutoff) const
{
    std::vector<Weight> out;
    int p = semisimple_rank();
    std::vector<Rat> fw_height(p);
    for (int i = 0; i < p; ++i) fw_height[i] = height(fundamental_weights_[i]);

    std::vector<QVec> ss_parts;
    std::vector<int> m(p, 0);
    std::function<void(int, Rat)> rec = [&](int i, Rat h) {
        if (i == p) {
            QVec s(rank_, Rat(0));
            for (int j = 0; j < p; ++j) s = s + Rat(m[j]) * fundamental_weights_[j].v;
            ss_parts.push_back(s);
            return;
        }
        for (int c = 0;; ++c) {
            Rat nh = h + Rat(c) * fw_height[i];
            if (nh > cutoff) break;
            m[i] = c;
            rec(i + 1, nh);
            if (fw_height[i] == 0) break; // defensive: cannot happen for a fundamental weight
        }
        m[i] = 0;
    };
    rec(0, Rat(0));

    // Central contributions: X*(T) splits off no canonical complement, so walk
    // central coordinates with a denominator large enough to hit every coset
    // representative of the component group (index of fw-lattice + center).
    const IMat& zb = central_char_basis_;
    int zr = (int)zb.size();
    long denom = 1;
    if (zr > 0) {
        // Exponent of the torsion of X*(T) / (fw-lattice + central lattice);
        // the elementary divisors of the pairing matrix of the simple coroots
        // bound it.
        denom = 1;
        if (p > 0) {
            IMat pairings(p, IVec(p));
            IMat cm = cartan_matrix();
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j) pairings[i][j] = cm[i][j];
            for (auto& e : elementary_divisors(pairings))
                if (e != 0) denom = std::max(denom, (long)e.get_si());
        }
    }
    std::set<QVec> emitted;
    for (const QVec& ss : ss_parts) {
        if (zr == 0) {
            Weight w{ss};
            if (in_character_lattice(w)) emitted.insert(w.v);
            continue;
        }
        std::vector<long> c(zr, 0);
        std::function<void(int)> recz = [&](int i) {
            if (i == zr) {
                QVec w = ss;
                for (int j = 0; j < zr; ++j)
                    for (int t = 0; t < rank_; ++t) w[t] += Rat(c[j], denom) * Rat(zb[j][t]);
                Weight cand{w};
                if (!in_character_lattice(cand)) return;
                emitted.insert(cand.v);
                return;
            }
            for (long v = -cutoff * denom; v <= cutoff * denom; ++v) {
                c[i] = v;
                recz(i + 1);
            }
        };
        recz(0);
    }
    for (auto& v : emitted) out.push_back(Weight{v});
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        Rat ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a.v < b.v;
    });
    return out;
}

std::vector<Coweight> RootDatum::dominant_cocharacters(int cutoff) const
{
    RootDatum d(rank_, simple_coroots_, simple_roots_, "");
    std::vector<Coweight> out;
    for (const Weight& w : d.dominant_characters(cutoff)) out.push_back(Coweight{w.v});
    return out;
}

bool RootDatum::equals(const RootDatum& o) const
{
    if (rank_ != o.rank_ || simple_roots_.size() != o.simple_roots_.size()) return false;
    auto canon = [](const IMat& r, const IMat& c) {
        std::vector<std::pair<IVec, IVec>> v;
        for (size_t i = 0; i < r.size(); ++i) v.emplace_back(r[i], c[i]);
        std::sort(v.begin(), v.end());
        return v;
    };
    return canon(simple_roots_, simple_coroots_) == canon(o.simple_roots_, o.simple_coroots_);
}

bool RootDatum::is_adjoint() const
{
    if (rank_ != semisimple_rank() || rank_ == 0) return false;
    for (int i = 0; i < rank_; ++i) {
        Weight e{QVec(rank_, Rat(0))};
        e.v[i] = 1;
        if (!in_root_lattice(e)) return false;
    }
    return true;
}

bool RootDatum::is_simply_laced() const
{
    IMat a = cartan_matrix();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (i != j && a[i][j] < -1) return false;
    return true;
}

DatumPtr build_preset(const std::string& name)
{
    auto make = [&](int rank, const IMat& r, const IMat& c) {
        return std::make_shared<const RootDatum>(rank, r, c, name);
    };
    if (name.rfind("Torus(", 0) == 0 && name.back() == ')') {
        int r = std::stoi(name.substr(6, name.size() - 7));
        if (r < 0) throw precondition_error("Torus rank must be nonnegative");
        return make(r, {}, {});
    }
    if (name == "SL2") return make(1, {{Int(2)}}, {{Int(1)}});
    if (name == "PSL2") return make(1, {{Int(1)}}, {{Int(2)}});
    if (name.rfind("SL(", 0) == 0 && name.back() == ')') {
        int n = std::stoi(name.substr(3, name.size() - 4));
        if (n < 2) throw precondition_error("SL(n) needs n >= 2");
        auto [r, c] = simply_connected(cartan_type_a(n - 1));
        return make(n - 1, r, c);
    }
    if (name.rfind("PGL(", 0) == 0 && name.back() == ')') {
        int n = std::stoi(name.substr(4, name.size() - 5));
        if (n < 2) throw precondition_error("PGL(n) needs n >= 2");
        auto [r, c] = adjoint_datum(cartan_type_a(n - 1));
        return make(n - 1, r, c);
    }
    if (name.rfind("SpinAdj(D", 0) == 0 && name.back() == ')') {
        int n = std::stoi(name.substr(9, name.size() - 10));
        auto [r, c] = adjoint_datum(cartan_type_d(n));
        return make(n, r, c);
    }
    if (name.rfind("GL(", 0) == 0 && name.back() == ')') {
        int n = std::stoi(name.substr(3, name.size() - 4));
        if (n < 1) throw precondition_error("GL(n) needs n >= 1");
        IMat r, c;
        for (int i = 0; i + 1 < n; ++i) {
            IVec row(n, Int(0)), crow(n, Int(0));
            row[i] = 1;
            row[i + 1] = -1;
            crow[i] = 1;
            crow[i + 1] = -1;
            r.push_back(row);
            c.push_back(crow);
        }
        return make(n, r, c);
    }
    throw precondition_error("unknown preset: " + name);
}

DatumPtr dual(const DatumPtr& d)
{
    return std::make_shared<const RootDatum>(d->rank(), d->simple_coroots(), d->simple_roots(),
                                             d->name().empty() ? "" : "dual(" + d->name() + ")");
}

DatumPtr product(const DatumPtr& a, const DatumPtr& b)
{
    int n = a->rank() + b->rank();
    auto pad = [&](const IMat& m, bool left) {
        IMat out;
        for (auto& row : m) {
            IVec v(n, Int(0));
            for (size_t i = 0; i < row.size(); ++i) v[left ? i : a->rank() + i] = row[i];
            out.push_back(v);
        }
        return out;
    };
    IMat r = pad(a->simple_roots(), true);
    for (auto& row : pad(b->simple_roots(), false)) r.push_back(row);
    IMat c = pad(a->simple_coroots(), true);
    for (auto& row : pad(b->simple_coroots(), false)) c.push_back(row);
    return std::make_shared<const RootDatum>(n, r, c, a->name() + "x" + b->name());
}

DatumPtr parse_datum_file(const std::string& text)
{
    std::istringstream in(text);
    int rank = -1;
    IMat roots, coroots;
    IMat* target = nullptr;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') continue;
        if (first == "rank") {
            if (!(ls >> rank)) throw parse_error("datum file: bad rank line", line);
            continue;
        }
        if (first == "simple_roots") {
            target = &roots;
            continue;
        }
        if (first == "simple_coroots") {
            target = &coroots;
            continue;
        }
        if (!target) throw parse_error("datum file: row outside a block", line);
        IVec row;
        row.push_back(Int(first));
        long long x;
        while (ls >> x) row.push_back(Int((long)x));
        target->push_back(row);
    }
    if (rank < 0) throw parse_error("datum file: missing rank");
    return std::make_shared<const RootDatum>(rank, roots, coroots, "file");
}

std::string datum_file(const RootDatum& d)
{
    std::ostringstream os;
    os << "rank " << d.rank() << "\n";
    os << "simple_roots\n";
    for (auto& r : d.simple_roots()) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i].get_str();
        os << "\n";
    }
    os << "simple_coroots\n";
    for (auto& r : d.simple_coroots()) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i].get_str();
        os << "\n";
    }
    return os.str();
}

} // namespace cdoalg
