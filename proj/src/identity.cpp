#include "dialg/identity.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace dialg {

struct Term::Node {
    std::string name; // leaves only
    OpKind op = OpKind::Alg;
    std::optional<Term> lhs;
    std::optional<Term> rhs;
    unsigned stars = 0;
};

Term Term::leaf(std::string name, unsigned stars) {
    auto n = std::make_shared<Node>();
    n->name = std::move(name);
    n->stars = stars;
    return Term(std::move(n));
}

Term Term::node(OpKind op, Term lhs, Term rhs, unsigned stars) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->stars = stars;
    return Term(std::move(n));
}

bool Term::is_leaf() const { return !node_->lhs.has_value(); }
const std::string& Term::name() const { return node_->name; }
OpKind Term::op() const { return node_->op; }
const Term& Term::lhs() const { return *node_->lhs; }
const Term& Term::rhs() const { return *node_->rhs; }
unsigned Term::stars() const { return node_->stars; }

Term Term::with_stars(unsigned stars) const {
    if (is_leaf()) return leaf(name(), stars);
    return node(op(), lhs(), rhs(), stars);
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_leaf()) {
        if (auto c = a.name() <=> b.name(); c != 0) return c;
        return a.stars() <=> b.stars();
    }
    if (auto c = static_cast<int>(a.op()) <=> static_cast<int>(b.op()); c != 0) return c;
    if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
    if (auto c = a.rhs() <=> b.rhs(); c != 0) return c;
    return a.stars() <=> b.stars();
}

// ---- parsing ---------------------------------------------------------------

namespace {

enum class Tok { LParen, RParen, Star, Plus, Minus, Dot, Left, Right, Eq, EqEq, Int, Slash, Ident, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        auto two = [&](char next) { return i + 1 < s.size() && s[i + 1] == next; };
        if (c == '-' && two('|')) {
            out.push_back({Tok::Left, "-|", start});
            i += 2;
        } else if (c == '|' && two('-')) {
            out.push_back({Tok::Right, "|-", start});
            i += 2;
        } else if (c == '=' && two('=')) {
            out.push_back({Tok::EqEq, "==", start});
            i += 2;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
        } else if (c >= 'a' && c <= 'z') {
            while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                                    std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
        } else {
            Tok k;
            switch (c) {
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '*': k = Tok::Star; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '.': k = Tok::Dot; break;
            case '=': k = Tok::Eq; break;
            case '/': k = Tok::Slash; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
            }
            out.push_back({k, std::string(1, c), start});
            ++i;
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    Identity parse() {
        std::vector<Summand> summands = expr();
        if (peek().kind == Tok::Eq) {
            next();
            const Token& z = expect(Tok::Int, "expected 0 after '='");
            if (z.text.find_first_not_of('0') != std::string::npos)
                throw ParseError("only '= 0' is allowed", z.pos);
        } else if (peek().kind == Tok::EqEq) {
            next();
            for (auto& s : expr()) summands.push_back({-s.coeff, s.term});
        }
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        Identity id = make_identity(std::move(summands));
        if (mode_) id.mode = *mode_;
        return id;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    const Token& expect(Tok k, const char* msg) {
        if (peek().kind != k) throw ParseError(msg, peek().pos);
        return next();
    }

    std::vector<Summand> expr() {
        std::vector<Summand> out;
        Rational sign(1);
        if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) sign = next().kind == Tok::Minus ? -1 : 1;
        out.push_back(signed_term(sign));
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = next().kind == Tok::Minus ? -1 : 1;
            out.push_back(signed_term(sign));
        }
        return out;
    }

    Summand signed_term(const Rational& sign) {
        Rational coeff = sign;
        if (peek().kind == Tok::Int) {
            std::string num = next().text;
            std::string den = "1";
            if (peek().kind == Tok::Slash) {
                next();
                const Token& d = expect(Tok::Int, "expected denominator");
                if (d.text.find_first_not_of('0') == std::string::npos)
                    throw ParseError("zero denominator", d.pos);
                den = d.text;
            }
            coeff *= Rational::parse(num + "/" + den);
        }
        return {coeff, term()};
    }

    Term term() {
        Term t = atom();
        unsigned stars = 0;
        while (peek().kind == Tok::Star) {
            next();
            ++stars;
        }
        return stars ? t.with_stars(t.stars() + stars) : t;
    }

    Term atom() {
        if (peek().kind == Tok::Ident) return Term::leaf(next().text);
        if (peek().kind == Tok::LParen) {
            std::size_t open = next().pos;
            Term lhs = term();
            const Token& op_tok = next();
            OpKind op;
            Mode m;
            switch (op_tok.kind) {
            case Tok::Dot: op = OpKind::Alg; m = Mode::Algebra; break;
            case Tok::Left: op = OpKind::Left; m = Mode::Dialgebra; break;
            case Tok::Right: op = OpKind::Right; m = Mode::Dialgebra; break;
            default: throw ParseError("expected operator '.', '-|' or '|-'", op_tok.pos);
            }
            if (mode_ && *mode_ != m) throw ParseError("mixed algebra and dialgebra operators", op_tok.pos);
            mode_ = m;
            Term rhs = term();
            if (peek().kind != Tok::RParen) throw ParseError("unbalanced parenthesis opened", open);
            next();
            return Term::node(op, std::move(lhs), std::move(rhs));
        }
        throw ParseError(peek().kind == Tok::End ? "unexpected end of input" : "unexpected '" + peek().text + "'",
                         peek().pos);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::optional<Mode> mode_;
};

void collect_leaves(const Term& t, std::vector<std::string>& out) {
    if (t.is_leaf()) {
        out.push_back(t.name());
        return;
    }
    collect_leaves(t.lhs(), out);
    collect_leaves(t.rhs(), out);
}

bool uses_op(const Term& t, OpKind op) {
    if (t.is_leaf()) return false;
    return t.op() == op || uses_op(t.lhs(), op) || uses_op(t.rhs(), op);
}

bool term_has_stars(const Term& t) {
    if (t.stars()) return true;
    return !t.is_leaf() && (term_has_stars(t.lhs()) || term_has_stars(t.rhs()));
}

Term bar_rewrite(const Term& t, std::optional<OpKind> forced) {
    if (t.is_leaf()) return t;
    OpKind op = forced.value_or(t.op());
    std::optional<OpKind> fl;
    std::optional<OpKind> fr;
    if (op == OpKind::Right && !t.lhs().is_leaf() && t.lhs().stars() == 0) fl = OpKind::Right;
    if (op == OpKind::Left && !t.rhs().is_leaf() && t.rhs().stars() == 0) fr = OpKind::Left;
    return Term::node(op, bar_rewrite(t.lhs(), fl), bar_rewrite(t.rhs(), fr), t.stars());
}

Term push(const Term& t, unsigned parity) {
    unsigned total = (t.stars() + parity) % 2;
    if (t.is_leaf()) return Term::leaf(t.name(), total);
    if (total == 0) return Term::node(t.op(), push(t.lhs(), 0), push(t.rhs(), 0));
    OpKind swapped = t.op() == OpKind::Left ? OpKind::Right : t.op() == OpKind::Right ? OpKind::Left : OpKind::Alg;
    return Term::node(swapped, push(t.rhs(), 1), push(t.lhs(), 1));
}

Term rename_term(const Term& t, const std::map<std::string, std::string>& map) {
    if (t.is_leaf()) {
        auto it = map.find(t.name());
        return it == map.end() ? t : Term::leaf(it->second, t.stars());
    }
    return Term::node(t.op(), rename_term(t.lhs(), map), rename_term(t.rhs(), map), t.stars());
}

} // namespace

Identity parse_identity(std::string_view text) { return Parser(text).parse(); }

std::string render_term(const Term& t) {
    std::string out;
    if (t.is_leaf()) {
        out = t.name();
    } else {
        const char* op = t.op() == OpKind::Alg ? "." : t.op() == OpKind::Left ? " -| " : " |- ";
        out = "(" + render_term(t.lhs()) + op + render_term(t.rhs()) + ")";
    }
    out.append(t.stars(), '*');
    return out;
}

std::string render_identity(const Identity& id) {
    if (id.summands.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, t] : id.summands) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        if (!mag.is_one()) os << mag << ' ';
        os << render_term(t);
        first = false;
    }
    return os.str();
}

Identity make_identity(std::vector<Summand> summands) {
    Identity id;
    bool dialgebra = false;
    bool algebra = false;
    for (const auto& s : summands) {
        std::vector<std::string> names;
        collect_leaves(s.term, names);
        for (auto& n : names)
            if (std::find(id.variables.begin(), id.variables.end(), n) == id.variables.end())
                id.variables.push_back(n);
        dialgebra = dialgebra || uses_op(s.term, OpKind::Left) || uses_op(s.term, OpKind::Right);
        algebra = algebra || uses_op(s.term, OpKind::Alg);
    }
    if (dialgebra && algebra) throw std::invalid_argument("identity mixes algebra and dialgebra operators");
    id.mode = algebra ? Mode::Algebra : Mode::Dialgebra;
    id.summands = std::move(summands);
    return id;
}

std::vector<std::string> leaves(const Term& t) {
    std::vector<std::string> out;
    collect_leaves(t, out);
    return out;
}

bool is_multilinear(const Identity& id) {
    auto vars = id.variables;
    std::sort(vars.begin(), vars.end());
    for (const auto& s : id.summands) {
        auto names = leaves(s.term);
        std::sort(names.begin(), names.end());
        if (names != vars) return false;
    }
    return true;
}

std::size_t degree(const Identity& id) { return id.summands.empty() ? 0 : leaves(id.summands.front().term).size(); }

bool has_stars(const Identity& id) {
    return std::any_of(id.summands.begin(), id.summands.end(),
                       [](const Summand& s) { return term_has_stars(s.term); });
}

CanonicalIdentity collect_summands(const Identity& id) {
    std::map<Term, Rational> merged;
    for (const auto& [c, t] : id.summands) merged[t] += c;
    CanonicalIdentity out;
    out.variables = id.variables;
    out.mode = id.mode;
    for (auto& [t, c] : merged)
        if (!c.is_zero()) out.summands.push_back({c, t});
    return out;
}

Term push_stars(const Term& t) { return push(t, 0); }

Term bar_normalize(const Term& t) { return bar_rewrite(t, std::nullopt); }

CanonicalIdentity canonical_form(const Identity& id, CanonicalOptions options) {
    if (id.mode != Mode::Dialgebra) throw std::invalid_argument("canonical_form requires a dialgebra identity");
    Identity rewritten = id;
    for (auto& s : rewritten.summands) {
        if (options.push_stars) s.term = push_stars(s.term);
        s.term = bar_normalize(s.term);
    }
    return collect_summands(rewritten);
}

Identity rename_variables(const Identity& id, const std::map<std::string, std::string>& map) {
    Identity out;
    out.mode = id.mode;
    for (const auto& v : id.variables) {
        auto it = map.find(v);
        out.variables.push_back(it == map.end() ? v : it->second);
    }
    for (const auto& [c, t] : id.summands) out.summands.push_back({c, rename_term(t, map)});
    return out;
}

} // namespace dialg
