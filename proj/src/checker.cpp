#include "dialg/checker.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dialg {

namespace {


void validate(const DialgebraTable& a, const Involution* s, const Identity& id) {
    if (s && s->dim() != a.dim()) throw DimensionError("involution dimension does not match the table");
    if (!s && has_stars(id)) throw std::invalid_argument("identity uses the involution but none was given");
    if (id.mode == Mode::Algebra && !a.is_algebra())
        throw std::invalid_argument("algebra-mode identity on a table with distinct left and right products");
}

std::size_t var_index(const Identity& id, const std::string& name) {
    auto it = std::find(id.variables.begin(), id.variables.end(), name);
    if (it == id.variables.end()) throw std::invalid_argument("undeclared variable '" + name + "'");
    return static_cast<std::size_t>(it - id.variables.begin());
}

Element eval_term(const ProductStructure& a, const Identity& id, const Term& t, const std::vector<Element>& values) {
    Element r;
    if (t.is_leaf()) {
        r = values.at(var_index(id, t.name()));
    } else {
        Element l = eval_term(a, id, t.lhs(), values);
        Element rr = eval_term(a, id, t.rhs(), values);
        switch (t.op()) {
        case OpKind::Alg:
            if (!a.is_algebra()) throw std::invalid_argument("algebra product on a dialgebra with distinct products");
            r = a.left(l, rr);
            break;
        case OpKind::Left: r = a.left(l, rr); break;
        case OpKind::Right: r = a.right(l, rr); break;
        }
    }
    for (unsigned k = 0; k < t.stars(); ++k) r = a.star(r);
    return r;
}

Vector eval_term(const DialgebraTable& a, const Involution* s, const Identity& id, const Term& t,
                 const std::vector<Vector>& values) {
    Vector r;
    if (t.is_leaf()) {
        r = values.at(var_index(id, t.name()));
    } else {
        Vector l = eval_term(a, s, id, t.lhs(), values);
        Vector rr = eval_term(a, s, id, t.rhs(), values);
        r = a.multiply(t.op() == OpKind::Right ? Product::Right : Product::Left, l, rr);
    }
    for (unsigned k = 0; k < t.stars(); ++k) r = s->apply(r);
    return r;
}

std::optional<std::size_t> first_nonzero(const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return std::nullopt;
}

Witness make_witness(std::vector<Vector> assignment, Vector evaluation, std::size_t coord) {
    Witness w;
    w.value = evaluation[coord];
    w.coordinate = coord;
    w.assignment = std::move(assignment);
    w.evaluation = std::move(evaluation);
    return w;
}

// Iterates basis tuples in lexicographic order; returns the first failure.
std::optional<Witness> scan_basis_tuples(const DialgebraTable& a, const Involution* s, const Identity& id,
                                         std::size_t& inspected, std::size_t limit) {
    std::size_t n = a.dim();
    std::size_t d = id.variables.size();
    std::vector<std::size_t> idx(d, 0);
    std::vector<Vector> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(linalg::unit(n, i));
    while (inspected < limit) {
        std::vector<Vector> values;
        for (auto i : idx) values.push_back(units[i]);
        ++inspected;
        Vector r = evaluate(a, s, id, values);
        if (auto c = first_nonzero(r)) {
            Witness w = make_witness(std::move(values), std::move(r), *c);
            w.basis_tuple = idx;
            return w;
        }
        std::size_t k = d;
        while (k > 0) {
            --k;
            if (++idx[k] < n) break;
            idx[k] = 0;
            if (k == 0) return std::nullopt;
        }
        if (d == 0) return std::nullopt;
    }
    return std::nullopt;
}

Witness random_witness(const DialgebraTable& a, const Involution* s, const Identity& id) {
    std::mt19937 rng(20120429);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Vector> values;
        for (std::size_t v = 0; v < id.variables.size(); ++v) {
            Vector x(a.dim());
            for (auto& c : x) c = dist(rng);
            values.push_back(std::move(x));
        }
        Vector r = evaluate(a, s, id, values);
        if (auto c = first_nonzero(r)) return make_witness(std::move(values), std::move(r), *c);
    }
    throw std::logic_error("no concrete witness found for a nonvanishing identity");
}

struct PredicateSpec {
    std::vector<std::string> sets;
    enum class Target { Direct, Diproduct, Bracket } target = Target::Direct;
};

const std::map<std::string, PredicateSpec>& predicates() {
    using T = PredicateSpec::Target;
    static const std::map<std::string, PredicateSpec> table = {
        {"zero_dialgebra", {{"bar"}}},
        {"commutative", {{"di_comm"}}},
        {"associative", {{"di_assoc"}}},
        {"alternative", {{"di_alternative"}}},
        {"flexible", {{"di_flexible"}}},
        {"involution", {{"involution"}}},
        {"partially_symmetric", {{"partial_sym"}}},
        {"symmetric", {{"partial_sym", "symmetric"}}},
        {"jordan_diproduct", {{"jordan_dialgebra"}, T::Diproduct}},
        {"leibniz_bracket", {{"leibniz"}, T::Bracket}},
        {"alg_commutative", {{"commutative"}}},
        {"alg_associative", {{"associative"}}},
        {"alg_alternative", {{"alternative"}}},
        {"alg_flexible", {{"flexible"}}},
        {"alg_involution", {{"alg_involution"}}},
    };
    return table;
}

const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> table = {
        {"bar", "zero_dialgebra"},   {"comm", "commutative"},        {"assoc", "associative"},
        {"alt", "alternative"},      {"flex", "flexible"},           {"invol", "involution"},
        {"psym", "partially_symmetric"}, {"sym", "symmetric"},       {"jordan", "jordan_diproduct"},
        {"leibniz", "leibniz_bracket"},
    };
    return table;
}

} // namespace

std::string Verdict::describe(const std::vector<std::string>& labels) const {
    if (passed) return "pass";
    std::ostringstream os;
    os << "fail: (";
    const Witness& w = *witness;
    for (std::size_t i = 0; i < w.assignment.size(); ++i) {
        if (i) os << ", ";
        if (w.basis_tuple)
            os << labels.at((*w.basis_tuple)[i]);
        else
            os << format_vector(w.assignment[i], labels);
    }
    os << ") -> " << format_vector(w.evaluation, labels);
    return os.str();
}

Element evaluate(const ProductStructure& a, const Identity& id, const std::vector<Element>& values) {
    if (values.size() != id.variables.size()) throw std::invalid_argument("one value per variable is required");
    for (const auto& v : values)
        if (v.dim() != a.dim()) throw DimensionError("value dimension does not match the algebra");
    Element sum(a.dim());
    for (const auto& [c, t] : id.summands) sum += c * eval_term(a, id, t, values);
    return sum;
}

Vector evaluate(const DialgebraTable& a, const Involution* s, const Identity& id, const std::vector<Vector>& values) {
    validate(a, s, id);
    if (values.size() != id.variables.size()) throw std::invalid_argument("one value per variable is required");
    for (const auto& v : values)
        if (v.size() != a.dim()) throw DimensionError("value dimension does not match the algebra");
    Vector sum(a.dim());
    for (const auto& [c, t] : id.summands) sum = linalg::add(sum, linalg::scale(c, eval_term(a, s, id, t, values)));
    return sum;
}

Verdict check(const DialgebraTable& a, const Involution* s, const Identity& id) {
    validate(a, s, id);
    EvalContext ctx;
    std::vector<Element> values;
    for (const auto& v : id.variables) values.emplace_back(ctx.fresh_indeterminates(a.dim(), v));
    Element r = evaluate(TableStructure(a, s), id, values);
    Verdict out;
    out.identity = id;
    out.tuples_inspected = 1;
    if (r.is_zero()) return out;
    out.passed = false;
    if (is_multilinear(id)) {
        std::size_t inspected = 0;
        out.witness = scan_basis_tuples(a, s, id, inspected, static_cast<std::size_t>(-1));
    } else {
        std::size_t inspected = 0;
        out.witness = scan_basis_tuples(a, s, id, inspected, 100000);
        if (!out.witness) out.witness = random_witness(a, s, id);
    }
    if (!out.witness) throw std::logic_error("generic evaluation nonzero but no basis witness exists");
    return out;
}

Verdict check_multilinear_fast(const DialgebraTable& a, const Involution* s, const Identity& id) {
    validate(a, s, id);
    if (!is_multilinear(id)) throw std::invalid_argument("fast check requires a multilinear identity");
    Verdict out;
    out.identity = id;
    out.witness = scan_basis_tuples(a, s, id, out.tuples_inspected, static_cast<std::size_t>(-1));
    out.passed = !out.witness.has_value();
    return out;
}

Verdict verify(const DialgebraTable& a, const Involution* s, const Identity& id) {
    return is_multilinear(id) ? check_multilinear_fast(a, s, id) : check(a, s, id);
}

Verdict verify_all(const DialgebraTable& a, const Involution* s, const std::vector<Identity>& ids) {
    Verdict out;
    for (const auto& id : ids) {
        Verdict v = verify(a, s, id);
        v.tuples_inspected += out.tuples_inspected;
        if (!v.passed) return v;
        out.tuples_inspected = v.tuples_inspected;
        out.identity = id;
    }
    return out;
}

std::vector<std::string> predicate_names() {
    std::vector<std::string> out;
    for (const auto& [k, _] : predicates()) out.push_back(k);
    for (const auto& [k, _] : aliases()) out.push_back(k);
    for (const auto& k : builtin_names())
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    return out;
}

Verdict check_predicate(const DialgebraTable& a, const Involution* s, const std::string& name) {
    std::string key = name;
    if (auto it = aliases().find(key); it != aliases().end()) key = it->second;
    PredicateSpec spec;
    if (auto it = predicates().find(key); it != predicates().end())
        spec = it->second;
    else
        spec.sets = {key}; // builtin identity set; throws below if unknown
    std::vector<Identity> ids;
    for (const auto& set : spec.sets)
        for (auto& id : builtin(set)) ids.push_back(std::move(id));
    switch (spec.target) {
    case PredicateSpec::Target::Diproduct: return verify_all(diproduct_table(a), nullptr, ids);
    case PredicateSpec::Target::Bracket: return verify_all(bracket_table(a), nullptr, ids);
    case PredicateSpec::Target::Direct: break;
    }
    return verify_all(a, s, ids);
}

std::map<std::string, Verdict> classify_predicates(const DialgebraTable& a, const Involution* s) {
    std::vector<std::string> names = {"zero_dialgebra", "commutative",      "associative",    "alternative",
                                      "flexible",       "jordan_diproduct", "leibniz_bracket"};
    if (s) names.insert(names.end(), {"involution", "partially_symmetric", "symmetric"});
    if (a.is_algebra()) {
        names.insert(names.end(), {"alg_commutative", "alg_associative", "alg_alternative", "alg_flexible"});
        if (s) names.push_back("alg_involution");
    }
    std::map<std::string, Verdict> out;
    for (const auto& n : names) out.emplace(n, check_predicate(a, s, n));
    return out;
}

} // namespace dialg
