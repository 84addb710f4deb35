#include "dialg/kp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "dialg/linalg.hpp"

namespace dialg {

namespace {

struct Labeler {
    std::size_t central_pos;
    std::size_t next = 0;

    Term label(const Term& t) {
        if (t.is_leaf()) {
            ++next;
            return t;
        }
        std::size_t lo = next;
        Term lhs = label(t.lhs());
        std::size_t mid = next;
        Term rhs = label(t.rhs());
        std::size_t hi = next;
        OpKind op;
        if (central_pos >= lo && central_pos < mid)
            op = OpKind::Left;
        else if (central_pos >= mid && central_pos < hi)
            op = OpKind::Right;
        else
            op = central_pos < lo ? OpKind::Left : OpKind::Right;
        return Term::node(op, std::move(lhs), std::move(rhs), t.stars());
    }
};

Term collapse_term(const Term& t) {
    if (t.is_leaf()) return t;
    return Term::node(OpKind::Alg, collapse_term(t.lhs()), collapse_term(t.rhs()), t.stars());
}

// p.summands == c * q.summands for a single nonzero c.
bool scalar_multiple(const CanonicalIdentity& p, const CanonicalIdentity& q) {
    if (p.summands.size() != q.summands.size()) return false;
    if (p.summands.empty()) return true;
    Rational c = p.summands.front().coeff / q.summands.front().coeff;
    for (std::size_t i = 0; i < p.summands.size(); ++i) {
        if (!(p.summands[i].term == q.summands[i].term)) return false;
        if (p.summands[i].coeff != c * q.summands[i].coeff) return false;
    }
    return true;
}

std::vector<std::string> sorted_vars(const CanonicalIdentity& c) {
    auto v = c.variables;
    std::sort(v.begin(), v.end());
    return v;
}

// Every canonical image of `p` under bijections from its variables onto `target`.
std::vector<CanonicalIdentity> renamings(const CanonicalIdentity& p, std::vector<std::string> target) {
    std::vector<CanonicalIdentity> out;
    if (p.variables.size() != target.size()) return out;
    std::sort(target.begin(), target.end());
    do {
        std::map<std::string, std::string> map;
        for (std::size_t i = 0; i < target.size(); ++i) map[p.variables[i]] = target[i];
        out.push_back(canonical_form(rename_variables(p.to_identity(), map), {.push_stars = false}));
    } while (std::next_permutation(target.begin(), target.end()));
    return out;
}

CanonicalIdentity conjugate(const CanonicalIdentity& p) {
    Identity id = p.to_identity();
    std::vector<Summand> out;
    for (const auto& [c, t] : id.summands) {
        std::function<Term(const Term&)> star_leaves = [&](const Term& u) -> Term {
            if (u.is_leaf()) return Term::leaf(u.name(), u.stars() + 1);
            return Term::node(u.op(), star_leaves(u.lhs()), star_leaves(u.rhs()), u.stars());
        };
        Term s = star_leaves(t);
        out.push_back({c, s.with_stars(s.stars() + 1)});
    }
    id.summands = std::move(out);
    return canonical_form(id);
}

using TermIndex = std::map<Term, std::size_t>;

void add_orbit(const CanonicalIdentity& c, const std::vector<std::string>& names, TermIndex& index,
               std::vector<std::map<std::size_t, Rational>>& rows) {
    for (const auto& r : renamings(c, names)) {
        std::map<std::size_t, Rational> row;
        for (const auto& [coeff, t] : r.summands) {
            auto [it, inserted] = index.try_emplace(t, index.size());
            row[it->second] += coeff;
        }
        rows.push_back(std::move(row));
    }
}

Matrix densify(const std::vector<std::map<std::size_t, Rational>>& rows, std::size_t cols) {
    Matrix m(rows.size(), Vector(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, c] : rows[i]) m[i][j] = c;
    return m;
}

std::vector<std::string> generic_names(std::size_t d) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < d; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

} // namespace

Term kp_monomial(const Term& t, const std::string& central) {
    auto names = leaves(t);
    auto count = std::count(names.begin(), names.end(), central);
    if (count != 1)
        throw std::invalid_argument("central argument '" + central + "' must occur exactly once, found " +
                                    std::to_string(count));
    Labeler l{static_cast<std::size_t>(std::find(names.begin(), names.end(), central) - names.begin())};
    return l.label(t);
}

CanonicalIdentity kp_for_central(const Identity& id, const std::string& central) {
    std::vector<Summand> out;
    for (const auto& [c, t] : id.summands) out.push_back({c, kp_monomial(t, central)});
    Identity di = make_identity(std::move(out));
    di.variables = id.variables;
    di.mode = Mode::Dialgebra;
    return canonical_form(di);
}

KpFamily kp_identity(const Identity& id) {
    if (id.mode != Mode::Algebra) throw std::invalid_argument("KP requires an algebra-mode identity");
    if (!is_multilinear(id)) throw std::invalid_argument("KP requires a multilinear identity; linearize first");
    if (id.variables.empty()) throw std::invalid_argument("KP requires at least one variable");

    KpFamily fam;
    for (const auto& v : id.variables) fam.raw.push_back(kp_for_central(id, v));
    for (const auto& c : fam.raw) {
        if (c.is_zero()) continue;
        bool dup = std::any_of(fam.identities.begin(), fam.identities.end(),
                               [&](const CanonicalIdentity& e) { return scalar_multiple(c, e); });
        if (!dup) fam.identities.push_back(c);
    }
    for (std::size_t i = 0; i < fam.identities.size(); ++i)
        for (std::size_t j = i + 1; j < fam.identities.size(); ++j)
            if (equal_up_to_renaming(fam.identities[i], fam.identities[j]) ||
                star_conjugate_equal(fam.identities[i], fam.identities[j]))
                fam.equivalences.emplace_back(i, j);

    auto names = generic_names(id.variables.size());
    TermIndex index;
    std::vector<std::map<std::size_t, Rational>> rows;
    std::size_t current_rank = 0;
    for (const auto& c : fam.identities) {
        auto trial = rows;
        add_orbit(c, names, index, trial);
        std::size_t r = linalg::rank(densify(trial, index.size()));
        if (r > current_rank) {
            rows = std::move(trial);
            current_rank = r;
            fam.independent.push_back(c);
        }
    }
    return fam;
}

std::vector<Identity> zero_identities() { return builtin("bar"); }

std::vector<Identity> kp_involution() {
    Identity source = parse_identity("(a.b)* - (b*.a*)");
    std::vector<Identity> out;
    for (const auto& v : source.variables) {
        std::vector<Summand> s;
        for (const auto& [c, t] : source.summands) s.push_back({c, kp_monomial(t, v)});
        out.push_back(make_identity(std::move(s)));
    }
    out.push_back(parse_identity("a** - a"));
    return out;
}

bool equal_up_to_renaming(const CanonicalIdentity& p, const CanonicalIdentity& q) {
    if (sorted_vars(p).size() != sorted_vars(q).size()) return false;
    for (const auto& r : renamings(p, q.variables))
        if (scalar_multiple(r, q)) return true;
    return false;
}

bool star_conjugate_equal(const CanonicalIdentity& p, const CanonicalIdentity& q) {
    CanonicalIdentity cp = conjugate(p);
    CanonicalIdentity cq = canonical_form(q.to_identity());
    if (cp.is_zero() || cq.is_zero()) return cp.is_zero() && cq.is_zero();
    return equal_up_to_renaming(cp, cq);
}

bool orbit_span_equal(const std::vector<CanonicalIdentity>& a, const std::vector<CanonicalIdentity>& b) {
    std::size_t d = 0;
    for (const auto* list : {&a, &b})
        for (const auto& c : *list) d = std::max(d, c.variables.size());
    auto names = generic_names(d);
    TermIndex index;
    std::vector<std::map<std::size_t, Rational>> ra, rb;
    for (const auto& c : a) add_orbit(c, names, index, ra);
    for (const auto& c : b) add_orbit(c, names, index, rb);
    std::size_t cols = index.size();
    Matrix ma = densify(ra, cols), mb = densify(rb, cols);
    Matrix both = ma;
    both.insert(both.end(), mb.begin(), mb.end());
    std::size_t rank_a = ma.empty() ? 0 : linalg::rank(ma);
    std::size_t rank_b = mb.empty() ? 0 : linalg::rank(mb);
    std::size_t rank_ab = both.empty() ? 0 : linalg::rank(both);
    return rank_a == rank_ab && rank_b == rank_ab;
}

Identity collapse(const Identity& id) {
    Identity out = id;
    for (auto& s : out.summands) s.term = collapse_term(s.term);
    out.mode = Mode::Algebra;
    return out;
}

} // namespace dialg
