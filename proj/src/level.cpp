#include "cdoalg/level.hpp"

#include "cdoalg/errors.hpp"
#include "cdoalg/intmat.hpp"

#include <cctype>
#include <sstream>

namespace cdoalg {

Level::Level(DatumPtr datum, SMat abelian_block, SVec simple_levels, bool generic_override)
    : datum_(std::move(datum)), abelian_block_(std::move(abelian_block)),
      simple_levels_(std::move(simple_levels)), generic_override_(generic_override)
{
    size_t z = datum_->central_cocharacter_lattice().size();
    if (abelian_block_.size() != z)
        throw precondition_error("level: abelian block size must match the central rank");
    for (auto& row : abelian_block_)
        if (row.size() != z) throw precondition_error("level: abelian block must be square");
    for (size_t i = 0; i < z; ++i)
        for (size_t j = i + 1; j < z; ++j)
            if (abelian_block_[i][j] != abelian_block_[j][i])
                throw precondition_error("level: abelian block must be symmetric");
    if (simple_levels_.size() != datum_->factors().size())
        throw precondition_error("level: one scalar per simple factor required");
}

Level Level::symbolic(DatumPtr datum)
{
    size_t z = datum->central_cocharacter_lattice().size();
    SMat ab(z, SVec(z, Scalar(0)));
    for (size_t i = 0; i < z; ++i) ab[i][i] = Scalar(1);
    SVec simple;
    for (size_t s = 0; s < datum->factors().size(); ++s) simple.push_back(Scalar::variable((int)s));
    return Level(std::move(datum), std::move(ab), std::move(simple));
}

Level Level::symbolic_abelian(DatumPtr datum)
{
    if (!datum->is_torus()) throw precondition_error("symbolic_abelian: datum must be a torus");
    size_t z = datum->rank();
    SMat ab(z, SVec(z, Scalar(0)));
    for (size_t i = 0; i < z; ++i) ab[i][i] = Scalar::variable((int)i);
    return Level(std::move(datum), std::move(ab), {});
}

Level Level::rational(DatumPtr datum, const Rat& k)
{
    size_t z = datum->central_cocharacter_lattice().size();
    SMat ab(z, SVec(z, Scalar(0)));
    for (size_t i = 0; i < z; ++i) ab[i][i] = Scalar(1);
    SVec simple(datum->factors().size(), Scalar(k));
    return Level(std::move(datum), std::move(ab), std::move(simple));
}

Level Level::abelian(DatumPtr datum, QMat block)
{
    if (!datum->is_torus()) throw precondition_error("Level::abelian: datum must be a torus");
    SMat ab(block.size());
    for (size_t i = 0; i < block.size(); ++i)
        for (auto& e : block[i]) ab[i].push_back(Scalar(e));
    return Level(std::move(datum), std::move(ab), {});
}

Scalar Level::simple_level(int factor) const
{
    if (factor < 0 || factor >= (int)simple_levels_.size())
        throw precondition_error("level: no such simple factor");
    return simple_levels_[factor];
}

bool Level::abelian_nondegenerate() const
{
    if (abelian_block_.empty()) return true;
    return !smat_det(abelian_block_).is_zero();
}

bool Level::is_generic() const
{
    if (generic_override_) return true;
    if (!abelian_nondegenerate()) return false;
    for (auto& k : simple_levels_)
        if (k.is_constant()) return false;
    return true;
}

Level Level::flagged_generic() const
{
    Level l = *this;
    l.generic_override_ = true;
    return l;
}

bool Level::operator==(const Level& o) const
{
    return datum_->equals(*o.datum_) && abelian_block_ == o.abelian_block_ &&
           simple_levels_ == o.simple_levels_;
}

Level Level::direct_sum(const Level& o) const
{
    DatumPtr d = product(datum_, o.datum_);
    size_t z1 = abelian_block_.size(), z2 = o.abelian_block_.size();
    SMat ab(z1 + z2, SVec(z1 + z2, Scalar(0)));
    for (size_t i = 0; i < z1; ++i)
        for (size_t j = 0; j < z1; ++j) ab[i][j] = abelian_block_[i][j];
    for (size_t i = 0; i < z2; ++i)
        for (size_t j = 0; j < z2; ++j) ab[z1 + i][z1 + j] = o.abelian_block_[i][j];
    SVec simple = simple_levels_;
    for (auto& k : o.simple_levels_) simple.push_back(k);
    bool gen = generic_override_ && o.generic_override_;
    return Level(d, ab, simple, gen);
}

std::string Level::str() const
{
    if (simple_levels_.size() == 1 && abelian_block_.empty()) return simple_levels_[0].str();
    std::ostringstream os;
    os << "{abelian: [";
    for (size_t i = 0; i < abelian_block_.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (size_t j = 0; j < abelian_block_[i].size(); ++j) {
            if (j) os << ", ";
            os << abelian_block_[i][j].str();
        }
        os << "]";
    }
    os << "], simple: [";
    for (size_t i = 0; i < simple_levels_.size(); ++i) {
        if (i) os << ", ";
        os << simple_levels_[i].str();
    }
    os << "]}";
    return os.str();
}

std::string Level::json() const
{
    std::ostringstream os;
    os << "{\"abelian\": [";
    for (size_t i = 0; i < abelian_block_.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (size_t j = 0; j < abelian_block_[i].size(); ++j) {
            if (j) os << ", ";
            os << '"' << abelian_block_[i][j].str() << '"';
        }
        os << "]";
    }
    os << "], \"simple\": [";
    for (size_t i = 0; i < simple_levels_.size(); ++i) {
        if (i) os << ", ";
        os << '"' << simple_levels_[i].str() << '"';
    }
    os << "]}";
    return os.str();
}

SMat Level::abelian_inverse() const
{
    if (!abelian_nondegenerate()) throw precondition_error("level: degenerate abelian block");
    return smat_inverse(abelian_block_);
}

int dual_coxeter(const RootDatum& d, int factor)
{
    if (factor < 0 || factor >= (int)d.factors().size())
        throw precondition_error("dual_coxeter: no such simple factor");
    return d.factors()[factor].dual_coxeter;
}

Level dual_level(const Level& kappa)
{
    SMat ab = kappa.abelian_block();
    for (auto& row : ab)
        for (auto& e : row) e = -e;
    SVec simple;
    for (size_t s = 0; s < kappa.simple_levels().size(); ++s) {
        long hv = dual_coxeter(*kappa.datum(), (int)s);
        simple.push_back(-kappa.simple_levels()[s] - Scalar(2 * hv));
    }
    return Level(kappa.datum(), ab, simple, kappa.generic_flagged());
}

Level critical_level(DatumPtr d)
{
    size_t z = d->central_cocharacter_lattice().size();
    SMat ab(z, SVec(z, Scalar(0)));
    SVec simple;
    for (size_t s = 0; s < d->factors().size(); ++s)
        simple.push_back(Scalar(-(long)d->factors()[s].dual_coxeter));
    return Level(d, ab, simple);
}

Scalar shifted_level(const Scalar& k, int n, int dual_cox)
{
    Scalar h((long)dual_cox);
    Scalar kh = k + h;
    if (kh.is_zero()) throw precondition_error("shifted_level: critical input level");
    Scalar denom = Scalar((long)n) * kh - Scalar(1);
    if (denom.is_zero()) throw precondition_error("shift pole");
    return kh / denom - h;
}

Level shifted_level(const Level& kappa, int n)
{
    // The shift acts on the simple factors; the abelian block follows the
    // n = 0 (dual) rule, matching kappa* on the center.
    SMat ab = kappa.abelian_block();
    if (n == 0) {
        for (auto& row : ab)
            for (auto& e : row) e = -e;
    } else if (!ab.empty()) {
        throw precondition_error("shifted_level: nonzero shifts need a semisimple datum");
    }
    SVec simple;
    for (size_t s = 0; s < kappa.simple_levels().size(); ++s)
        simple.push_back(shifted_level(kappa.simple_levels()[s], n, dual_coxeter(*kappa.datum(), (int)s)));
    return Level(kappa.datum(), ab, simple, kappa.generic_flagged());
}

Rat casimir_eigenvalue(const RootDatum& d, int factor, const Weight& lambda)
{
    Weight shifted{lambda.v + d.rho().v + d.rho().v};
    return d.norm_form_factor(factor, shifted, lambda);
}

Scalar casimir_offset_factor(const Level& kappa, int factor, const Weight& lambda)
{
    long hv = dual_coxeter(*kappa.datum(), factor);
    Scalar kh = kappa.simple_level(factor) + Scalar(hv);
    if (kh.is_zero()) throw precondition_error("casimir_offset: critical level");
    Rat c = casimir_eigenvalue(*kappa.datum(), factor, lambda);
    return Scalar(c) / (Scalar(2) * kh);
}

Scalar abelian_offset(const Level& kappa, const Weight& lambda)
{
    const RootDatum& d = *kappa.datum();
    const IMat& zb = d.central_cocharacter_lattice();
    if (zb.empty()) return Scalar(0);
    Weight lam_ab = d.central_part(lambda);
    SVec c(zb.size(), Scalar(0));
    for (size_t j = 0; j < zb.size(); ++j) {
        Rat p = 0;
        for (int t = 0; t < d.rank(); ++t) p += lam_ab.v[t] * Rat(zb[j][t]);
        c[j] = Scalar(p);
    }
    SMat inv = kappa.abelian_inverse();
    return sdot(c, smat_vec(inv, c)) / Scalar(2);
}

Scalar casimir_offset(const Level& kappa, const Weight& lambda)
{
    Scalar total = abelian_offset(kappa, lambda);
    for (size_t s = 0; s < kappa.datum()->factors().size(); ++s)
        total = total + casimir_offset_factor(kappa, (int)s, lambda);
    return total;
}

long central_charge_cdo(const RootDatum& d)
{
    return 2 * (d.rank() + 2 * (long)d.positive_roots().size());
}

SVec abelian_pairing_vector(const Level& kappa, const Coweight& x)
{
    if (!kappa.datum()->is_torus())
        throw precondition_error("abelian_pairing_vector: torus datum required");
    SVec out(x.v.size(), Scalar(0));
    const SMat& k = kappa.abelian_block();
    for (size_t i = 0; i < k.size(); ++i)
        for (size_t j = 0; j < k.size(); ++j) out[i] = out[i] + k[i][j] * Scalar(x.v[j]);
    return out;
}

Level parse_level(DatumPtr d, const std::string& text)
{
    if (text == "sym") {
        if (d->is_torus()) return Level::symbolic_abelian(d);
        return Level::symbolic(d);
    }
    std::string s = text;
    if (!s.empty() && s.front() == '[') {
        // [[a, b], [c, d]] matrix of scalar expressions (torus level).
        std::vector<SVec> rows;
        size_t i = 1;
        auto skip = [&] {
            while (i < s.size() && (std::isspace((unsigned char)s[i]) || s[i] == ',')) ++i;
        };
        skip();
        while (i < s.size() && s[i] == '[') {
            ++i;
            SVec row;
            while (i < s.size() && s[i] != ']') {
                size_t start = i;
                int depth = 0;
                while (i < s.size() && ((s[i] != ',' && s[i] != ']') || depth > 0)) {
                    if (s[i] == '(') ++depth;
                    if (s[i] == ')') --depth;
                    ++i;
                }
                row.push_back(parse_scalar(s.substr(start, i - start)));
                if (i < s.size() && s[i] == ',') ++i;
            }
            if (i >= s.size()) throw parse_error("level matrix: missing ']'", text, (long)i);
            ++i;
            rows.push_back(row);
            skip();
        }
        if (i >= s.size() || s[i] != ']') throw parse_error("level matrix: missing closing ']'", text, (long)i);
        SMat ab(rows.begin(), rows.end());
        if (!d->is_torus()) throw precondition_error("matrix level requires a torus datum");
        return Level(d, ab, {});
    }
    Scalar v = parse_scalar(text);
    if (d->is_torus()) {
        SMat ab(d->rank(), SVec(d->rank(), Scalar(0)));
        for (int i = 0; i < d->rank(); ++i) ab[i][i] = v;
        return Level(d, ab, {});
    }
    size_t z = d->central_cocharacter_lattice().size();
    SMat ab(z, SVec(z, Scalar(0)));
    for (size_t i = 0; i < z; ++i) ab[i][i] = Scalar(1);
    SVec simple(d->factors().size(), v);
    return Level(d, ab, simple);
}

} // namespace cdoalg
