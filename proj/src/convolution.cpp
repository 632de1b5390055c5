#include "cdoalg/convolution.hpp"

#include "cdoalg/errors.hpp"

#include <cctype>
#include <random>
#include <sstream>

namespace cdoalg {

std::vector<Label> ConvExpr::leaves() const
{
    if (is_leaf()) return {leaf};
    std::vector<Label> out = l->leaves();
    for (auto& x : r->leaves()) out.push_back(x);
    return out;
}

std::string ConvExpr::str() const
{
    if (is_leaf()) return leaf.compact();
    return "(" + l->str() + " . " + r->str() + ")";
}

bool levels_opposite(const Level& a, const Level& b)
{
    if (!a.datum()->equals(*b.datum())) return false;
    for (size_t s = 0; s < a.simple_levels().size(); ++s) {
        long hv = dual_coxeter(*a.datum(), (int)s);
        if (!(a.simple_levels()[s] + b.simple_levels()[s] + Scalar(2 * hv)).is_zero()) return false;
    }
    for (size_t i = 0; i < a.abelian_block().size(); ++i)
        for (size_t j = 0; j < a.abelian_block().size(); ++j)
            if (!(a.abelian_block()[i][j] + b.abelian_block()[i][j]).is_zero()) return false;
    return true;
}

namespace {

bool is_single_action(const Label& l)
{
    return l.kind == LabelKind::Weyl || l.kind == LabelKind::Fock;
}

// A pair of adjacent chain labels is composable when the left's right action
// and the right's left action exist and are opposite; Zero matches anything.
bool pair_leveled(const Label& a, const Label& b)
{
    if (a.is_zero() || b.is_zero()) return true;
    auto ra = a.right_tag();
    auto lb = b.left_tag();
    if (!ra || !lb) return false;
    return levels_opposite(*ra, *lb);
}

bool chain_leveled(const std::vector<Label>& chain)
{
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!pair_leveled(chain[i], chain[i + 1])) return false;
    // Interior single-action leaves would be consumed twice.
    for (size_t i = 1; i + 1 < chain.size(); ++i)
        if (is_single_action(chain[i]) && !chain[i].is_zero()) return false;
    return true;
}

// Rewrites one adjacent pair; nullopt when no rule applies.
std::optional<Label> reduce_pair(const Label& a, const Label& b)
{
    if (a.is_zero() || b.is_zero()) return Label::zero();
    if (!pair_leveled(a, b)) return std::nullopt;

    // Shift monoid on chiral differential operators.
    if (a.kind == LabelKind::CDO && b.kind == LabelKind::CDO)
        return Label::cdo(a.level, a.shift + b.shift);

    // The shifted equivariant algebra absorbs right shifts the same way.
    if (a.kind == LabelKind::EqW && b.kind == LabelKind::CDO)
        return Label::eqw(a.level, a.shift + b.shift);

    // Weyl-module delta rule.
    if (a.kind == LabelKind::Weyl && b.kind == LabelKind::Weyl) {
        const RootDatum& d = *a.level.datum();
        Weight target = d.minus_w0(Weight{b.weight});
        return a.weight == target.v ? Label::unit() : Label::zero();
    }

    // The zero-shifted algebra is the unit.
    if (b.kind == LabelKind::CDO && b.shift == 0) return a;
    if (a.kind == LabelKind::CDO && a.shift == 0) return b;

    // Weyl module against a shifted algebra: the Peter-Weyl sum collapses to
    // one matching summand.
    if (a.kind == LabelKind::Weyl && b.kind == LabelKind::CDO) {
        Level result = shifted_level(dual_level(a.level), b.shift);
        return Label::weyl(result, Weight{a.weight});
    }
    if (a.kind == LabelKind::CDO && b.kind == LabelKind::Weyl)
        return Label::weyl(a.level, Weight{b.weight});

    // The unshifted equivariant algebra represents the reduction functor.
    if (a.kind == LabelKind::EqW && a.shift == 0 && b.kind == LabelKind::Weyl) {
        const RootDatum& d = *a.level.datum();
        return Label::tw(a.level, Weight{b.weight}, Coweight{QVec(d.rank(), Rat(0))});
    }

    return std::nullopt;
}

} // namespace

bool check_levels(const ConvExpr& e)
{
    std::vector<Label> chain = e.leaves();
    if (chain.size() <= 1) return true;
    return chain_leveled(chain);
}

NormalForm normalize(const ConvExpr& e, NormalizeOrder order, unsigned seed)
{
    std::vector<Label> chain = e.leaves();
    for (auto& l : chain) l = l.normalized();
    if (!chain_leveled(chain)) throw precondition_error("normalize: expression is not well-leveled");
    for (auto& l : chain)
        if (!l.is_kl()) throw precondition_error("normalize: non-KL leaf (rules not licensed)");

    std::mt19937 rng(seed);
    while (chain.size() > 1) {
        std::vector<size_t> reducible;
        for (size_t i = 0; i + 1 < chain.size(); ++i)
            if (reduce_pair(chain[i], chain[i + 1])) reducible.push_back(i);
        if (reducible.empty()) break;
        size_t pick;
        switch (order) {
        case NormalizeOrder::LeftFirst: pick = reducible.front(); break;
        case NormalizeOrder::RightFirst: pick = reducible.back(); break;
        default: pick = reducible[rng() % reducible.size()]; break;
        }
        Label merged = *reduce_pair(chain[pick], chain[pick + 1]);
        chain.erase(chain.begin() + (long)pick, chain.begin() + (long)pick + 2);
        chain.insert(chain.begin() + (long)pick, merged.normalized());
    }

    NormalForm out;
    if (chain.size() == 1) {
        out.reduced = true;
        out.label = chain[0];
    } else {
        out.residual = chain;
    }
    return out;
}

std::string NormalForm::str() const
{
    if (reduced) return label.compact();
    std::string s = "irreducible:";
    for (auto& l : residual) s += " " + l.compact();
    return s;
}

NormalForm shift_equivalence_roundtrip(const Label& label)
{
    if (label.is_zero()) {
        NormalForm out;
        out.reduced = true;
        out.label = Label::zero();
        return out;
    }
    auto rt = label.right_tag();
    if (!rt) throw precondition_error("roundtrip: label carries no right level tag");
    if (!label.is_kl()) throw precondition_error("roundtrip: label must be in the KL category");

    // X o D[+1] at the level opposite to X's right tag, then o D[-1].
    Level up = dual_level(*rt);
    Label d_plus = Label::cdo(up, 1);
    Level down = dual_level(shifted_level(up, 1));
    Label d_minus = Label::cdo(down, -1);
    ConvExpr e = ConvExpr::make(ConvExpr::make(ConvExpr::make(label), ConvExpr::make(d_plus)),
                                ConvExpr::make(d_minus));
    return normalize(e);
}

namespace {

struct ConvParser {
    const std::string& s;
    size_t pos = 0;
    DatumPtr d;

    ConvParser(const std::string& text, DatumPtr datum) : s(text), d(std::move(datum)) {}

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, s, (long)pos); }

    void skip()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    bool eat(char c)
    {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    ConvExpr parse()
    {
        ConvExpr e = parse_term();
        while (true) {
            skip();
            if (pos < s.size() && s[pos] == '.') {
                ++pos;
                ConvExpr rhs = parse_term();
                e = ConvExpr::make(std::move(e), std::move(rhs));
            } else {
                break;
            }
        }
        return e;
    }

    ConvExpr parse_term()
    {
        skip();
        if (eat('(')) {
            ConvExpr e = parse();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        return ConvExpr::make(parse_label());
    }

    std::string ident()
    {
        skip();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (pos == start) fail("expected a label name");
        return s.substr(start, pos - start);
    }

    // Level references: k, k*, k[0][1]..., or a rational literal; '@'-suffixed
    // digit strings abbreviate iterated shifts (k00 = k[0][0]).
    Level parse_level_ref(std::string text)
    {
        if (text.empty()) fail("empty level reference");
        if (text[0] != 'k') {
            return parse_level(d, text);
        }
        size_t i = 1;
        Level lvl = Level::symbolic(d);
        std::vector<int> shifts;
        if (i < text.size() && std::isdigit((unsigned char)text[i]) && text.find('[') == std::string::npos) {
            for (; i < text.size(); ++i) {
                if (!std::isdigit((unsigned char)text[i])) fail("bad level shift digits");
                shifts.push_back(text[i] - '0');
            }
        } else if (i < text.size() && text[i] == '*') {
            shifts.push_back(0);
            ++i;
            if (i != text.size()) fail("trailing characters after k*");
        } else {
            while (i < text.size()) {
                if (text[i] != '[') fail("expected '[' in level reference");
                size_t close = text.find(']', i);
                if (close == std::string::npos) fail("missing ']' in level reference");
                shifts.push_back(std::stoi(text.substr(i + 1, close - i - 1)));
                i = close + 1;
            }
        }
        for (int n : shifts) lvl = shifted_level(lvl, n);
        return lvl;
    }

    std::string bracket_field()
    {
        skip();
        size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if ((c == ',' || c == ']') && depth == 0) break;
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            ++pos;
        }
        std::string f = s.substr(start, pos - start);
        while (!f.empty() && std::isspace((unsigned char)f.back())) f.pop_back();
        return f;
    }

    Weight parse_weight(const std::string& text)
    {
        // w(c1, c2, ...): fundamental-weight coordinates.
        if (text.size() < 3 || text[0] != 'w' || text[1] != '(')
            throw parse_error("weights are written w(c1,...)", s, (long)pos);
        std::string inner = text.substr(2, text.size() - 3);
        std::istringstream in(inner);
        QVec lam(d->rank(), Rat(0));
        std::string tok;
        int i = 0;
        while (std::getline(in, tok, ',')) {
            if (i >= d->semisimple_rank())
                throw parse_error("too many weight coordinates", s, (long)pos);
            lam = lam + parse_rat(tok) * d->fundamental_weights()[i].v;
            ++i;
        }
        return Weight{lam};
    }

    Label parse_label()
    {
        std::string name = ident();
        if (name == "Zero") return Label::zero();
        if (name == "C") return Label::unit();

        if (!eat('[')) fail("expected '[' after label name");
        std::vector<std::string> fields;
        fields.push_back(bracket_field());
        while (eat(',')) fields.push_back(bracket_field());
        if (!eat(']')) fail("expected ']'");

        // Optional '@klevel' suffix: the level field then holds a plain shift.
        std::string at_level;
        if (pos < s.size() && s[pos] == '@') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '[' || s[pos] == ']' ||
                    s[pos] == '*' || s[pos] == '-'))
                ++pos;
            at_level = s.substr(start, pos - start);
        }

        if (name == "D" || name == "W") {
            Level lvl;
            int shift = 0;
            if (!at_level.empty()) {
                lvl = parse_level_ref(at_level);
                if (fields.size() != 1) fail("expected D[shift]@klevel");
                shift = std::stoi(fields[0]);
            } else {
                lvl = parse_level_ref(fields[0]);
                if (fields.size() > 1) shift = std::stoi(fields[1]);
                if (fields.size() > 2) fail("too many fields");
            }
            return name == "D" ? Label::cdo(lvl, shift) : Label::eqw(lvl, shift);
        }
        if (name == "V") {
            if (fields.size() != 2) fail("expected V[level, w(...)]");
            return Label::weyl(parse_level_ref(fields[0]), parse_weight(fields[1]));
        }
        if (name == "T") {
            if (fields.size() != 3) fail("expected T[level, w(...), w(...)]");
            Weight lam = parse_weight(fields[1]);
            Weight mu = parse_weight(fields[2]);
            return Label::tw(parse_level_ref(fields[0]), lam, Coweight{mu.v});
        }
        if (name == "L1") {
            if (fields.size() != 1) fail("expected L1[w(...)]");
            return Label::l1(parse_weight(fields[0]));
        }
        fail("unknown label name: " + name);
    }
};

} // namespace

ConvExpr parse_conv_expr(DatumPtr d, const std::string& text)
{
    ConvParser p(text, std::move(d));
    ConvExpr e = p.parse();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input after expression");
    return e;
}

} // namespace cdoalg
