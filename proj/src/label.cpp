#include "cdoalg/label.hpp"

#include "cdoalg/errors.hpp"

#include <sstream>

namespace cdoalg {

namespace {

std::string qvec_plain(const QVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

std::string svec_plain(const SVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += v[i].str();
    }
    return s + ")";
}

bool svec_integral(const SVec& v)
{
    for (auto& e : v)
        if (!e.is_integer()) return false;
    return true;
}

} // namespace

Label Label::unit()
{
    Label l;
    l.kind = LabelKind::Unit;
    return l;
}

Label Label::fock(Level kappa, SVec lambda)
{
    Label l;
    l.kind = LabelKind::Fock;
    l.level = std::move(kappa);
    l.fock_weight = std::move(lambda);
    return l;
}

Label Label::fock(Level kappa, const Weight& lambda)
{
    SVec sv;
    for (auto& x : lambda.v) sv.push_back(Scalar(x));
    return fock(std::move(kappa), sv);
}

Label Label::weyl(Level kappa, const Weight& lambda)
{
    Label l;
    l.kind = LabelKind::Weyl;
    l.level = std::move(kappa);
    l.weight = lambda.v;
    return l;
}

Label Label::cdo(Level kappa, int shift)
{
    Label l;
    l.kind = LabelKind::CDO;
    l.level = std::move(kappa);
    l.shift = shift;
    return l;
}

Label Label::eqw(Level kappa, int shift)
{
    Label l;
    l.kind = LabelKind::EqW;
    l.level = std::move(kappa);
    l.shift = shift;
    return l;
}

Label Label::tw(Level kappa, const Weight& lambda, const Coweight& mu)
{
    Label l;
    l.kind = LabelKind::TW;
    l.level = std::move(kappa);
    l.weight = lambda.v;
    l.coweight = mu.v;
    return l;
}

Label Label::l1(const Weight& lambda)
{
    Label l;
    l.kind = LabelKind::L1;
    l.weight = lambda.v;
    return l;
}

Label Label::twist(const Coweight& param, Label child)
{
    Label l;
    l.kind = LabelKind::Twist;
    l.coweight = param.v;
    l.sub.push_back(std::move(child));
    return l;
}

Label Label::twist2(const Coweight& gamma, const Coweight& x, Label child)
{
    Label l;
    l.kind = LabelKind::Twist2;
    l.coweight = gamma.v;
    l.coweight2 = x.v;
    l.sub.push_back(std::move(child));
    return l;
}

Label Label::pw_sum(Level kappa, const Coweight& shift, const Coweight& tw0_twist)
{
    Label l;
    l.kind = LabelKind::PWSum;
    l.level = std::move(kappa);
    l.coweight = shift.v;
    l.coweight2 = tw0_twist.v;
    return l;
}

Label Label::tensor(Label a, Label b)
{
    Label l;
    l.kind = LabelKind::Tensor;
    l.sub.push_back(std::move(a));
    l.sub.push_back(std::move(b));
    return l;
}

Label Label::normalized() const
{
    Label l = *this;
    for (auto& s : l.sub) s = s.normalized();
    if (l.kind == LabelKind::Twist) {
        if (l.sub[0].is_zero()) return zero();
        if (l.sub[0].kind == LabelKind::Twist) {
            Label inner = l.sub[0];
            QVec sum = l.coweight + inner.coweight;
            Label merged = twist(Coweight{sum}, inner.sub[0]);
            return merged.normalized();
        }
        if (cdoalg::is_zero(l.coweight)) return l.sub[0];
    }
    if (l.kind == LabelKind::Twist2) {
        if (l.sub[0].is_zero()) return zero();
        if (l.sub[0].kind == LabelKind::Twist2) {
            Label inner = l.sub[0];
            Label merged = twist2(Coweight{l.coweight + inner.coweight},
                                  Coweight{l.coweight2 + inner.coweight2}, inner.sub[0]);
            return merged.normalized();
        }
        if (cdoalg::is_zero(l.coweight) && cdoalg::is_zero(l.coweight2)) return l.sub[0];
    }
    if (l.kind == LabelKind::Tensor) {
        if (l.sub[0].is_zero() || l.sub[1].is_zero()) return zero();
        if (l.sub[0].kind == LabelKind::Unit) return l.sub[1];
        if (l.sub[1].kind == LabelKind::Unit) return l.sub[0];
    }
    return l;
}

bool Label::is_kl() const
{
    switch (kind) {
    case LabelKind::Zero:
    case LabelKind::Unit:
    case LabelKind::Weyl:
    case LabelKind::CDO:
    case LabelKind::EqW:
    case LabelKind::TW:
    case LabelKind::L1:
    case LabelKind::PWSum:
        return true;
    case LabelKind::Fock:
        return svec_integral(fock_weight);
    case LabelKind::Twist: {
        if (!sub[0].is_kl()) return false;
        // Stability needs a vanishing semisimple component and an integral
        // abelian pairing; a twisted Fock stays inside when the shifted
        // weight is integral.
        if (sub[0].kind == LabelKind::Fock) {
            const Level& kap = sub[0].level;
            if (!kap.datum()->is_torus()) return false;
            SVec shift = abelian_pairing_vector(kap, Coweight{coweight});
            SVec moved = sub[0].fock_weight;
            for (size_t i = 0; i < moved.size(); ++i) moved[i] = moved[i] - shift[i];
            return svec_integral(moved);
        }
        return cdoalg::is_zero(coweight);
    }
    case LabelKind::Twist2:
        return cdoalg::is_zero(coweight) && cdoalg::is_zero(coweight2) && sub[0].is_kl();
    case LabelKind::Tensor:
        return sub[0].is_kl() && sub[1].is_kl();
    }
    return false;
}

std::optional<Level> Label::right_tag() const
{
    switch (kind) {
    case LabelKind::Fock:
    case LabelKind::Weyl:
        return level;
    case LabelKind::CDO:
    case LabelKind::EqW:
        return shifted_level(level, shift);
    case LabelKind::TW:
        // Formal tag: the ambient equivariant-reduction family acts through
        // the dual level.
        return dual_level(level);
    case LabelKind::PWSum:
        return dual_level(level);
    default:
        return std::nullopt;
    }
}

std::optional<Level> Label::left_tag() const
{
    switch (kind) {
    case LabelKind::Fock:
    case LabelKind::Weyl:
    case LabelKind::CDO:
        return level;
    default:
        return std::nullopt;
    }
}

bool Label::operator==(const Label& o) const
{
    if (kind != o.kind || shift != o.shift) return false;
    if (kind != LabelKind::Zero && kind != LabelKind::Unit && kind != LabelKind::Twist &&
        kind != LabelKind::Twist2 && kind != LabelKind::Tensor && kind != LabelKind::L1) {
        if (level != o.level) return false;
    }
    return fock_weight == o.fock_weight && weight == o.weight && coweight == o.coweight &&
           coweight2 == o.coweight2 && sub == o.sub;
}

std::string Label::sexpr() const
{
    std::ostringstream os;
    switch (kind) {
    case LabelKind::Zero:
        return "Zero";
    case LabelKind::Unit:
        return "C";
    case LabelKind::Fock:
        os << "(fock " << level.str() << " " << svec_plain(fock_weight) << ")";
        break;
    case LabelKind::Weyl:
        os << "(weyl " << level.str() << " " << qvec_plain(weight) << ")";
        break;
    case LabelKind::CDO:
        os << "(cdo " << level.str() << " " << shift << ")";
        break;
    case LabelKind::EqW:
        os << "(eqw " << level.str() << " " << shift << ")";
        break;
    case LabelKind::TW:
        os << "(tw " << level.str() << " " << qvec_plain(weight) << " (coweight";
        for (auto& c : coweight) os << " " << rat_str(c);
        os << "))";
        break;
    case LabelKind::L1:
        os << "(l1 " << qvec_plain(weight) << ")";
        break;
    case LabelKind::Twist:
        os << "(twist (coweight" << (coweight.empty() ? "" : " ");
        for (size_t i = 0; i < coweight.size(); ++i) os << (i ? " " : "") << rat_str(coweight[i]);
        os << ") " << sub[0].sexpr() << ")";
        break;
    case LabelKind::Twist2:
        os << "(twist2 (coweight";
        for (auto& c : coweight) os << " " << rat_str(c);
        os << ") (coweight";
        for (auto& c : coweight2) os << " " << rat_str(c);
        os << ") " << sub[0].sexpr() << ")";
        break;
    case LabelKind::PWSum:
        os << "(pwsum " << level.str() << " (coweight";
        for (auto& c : coweight) os << " " << rat_str(c);
        os << ") (coweight";
        for (auto& c : coweight2) os << " " << rat_str(c);
        os << "))";
        break;
    case LabelKind::Tensor:
        os << "(tensor " << sub[0].sexpr() << " " << sub[1].sexpr() << ")";
        break;
    }
    return os.str();
}

namespace {

std::string level_compact(const Level& l)
{
    if (l.simple_levels().size() == 1 && l.abelian_block().empty()) {
        std::string s = l.simple_levels()[0].str();
        // strip the outer parentheses of a plain fraction for readability
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')' &&
            s.find(")/(") == std::string::npos)
            return s.substr(1, s.size() - 2);
        return s;
    }
    return l.str();
}

std::string qvec_compact(const QVec& v)
{
    std::string s = "w(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

} // namespace

std::string Label::compact() const
{
    switch (kind) {
    case LabelKind::Zero:
        return "Zero";
    case LabelKind::Unit:
        return "C";
    case LabelKind::Fock:
        return "F[" + level_compact(level) + ", " + svec_plain(fock_weight) + "]";
    case LabelKind::Weyl:
        return "V[" + level_compact(level) + ", " + qvec_compact(weight) + "]";
    case LabelKind::CDO:
        if (shift == 0) return "D[" + level_compact(level) + "]";
        return "D[" + level_compact(level) + "," + std::to_string(shift) + "]";
    case LabelKind::EqW:
        if (shift == 0) return "W[" + level_compact(level) + "]";
        return "W[" + level_compact(level) + "," + std::to_string(shift) + "]";
    case LabelKind::TW:
        return "T[" + level_compact(level) + ", " + qvec_compact(weight) + ", " +
               qvec_compact(coweight) + "]";
    case LabelKind::L1:
        return "L1[" + qvec_compact(weight) + "]";
    case LabelKind::Twist:
        return "tw(" + qvec_compact(coweight) + ", " + sub[0].compact() + ")";
    case LabelKind::Twist2:
        return "tw2(" + qvec_compact(coweight) + ", " + qvec_compact(coweight2) + ", " +
               sub[0].compact() + ")";
    case LabelKind::PWSum:
        return "PW[" + level_compact(level) + ", " + qvec_compact(coweight) + ", " +
               qvec_compact(coweight2) + "]";
    case LabelKind::Tensor:
        return "(" + sub[0].compact() + " (x) " + sub[1].compact() + ")";
    }
    return "?";
}

} // namespace cdoalg
