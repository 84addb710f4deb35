#include "dialg/classify2d.hpp"

#include <stdexcept>

#include "dialg/checker.hpp"
#include "dialg/identity.hpp"
#include "dialg/linalg.hpp"

namespace dialg {

namespace {

constexpr const char* kNames = "abcdefgh";

Element vec2(const Polynomial& x, const Polynomial& y) { return Element(std::vector<Polynomial>{x, y}); }

Polynomial sign_normalized(Polynomial p) {
    if (!p.is_zero() && p.terms().rbegin()->second.sign() < 0) return -p;
    return p;
}

} // namespace

std::array<Polynomial, 8> structure_variables() {
    std::array<Polynomial, 8> out;
    for (VarId i = 0; i < 8; ++i) out[i] = Polynomial::variable(i);
    return out;
}

std::string structure_variable_name(VarId v) {
    if (v < 8) return std::string(1, kNames[v]);
    return "t" + std::to_string(v);
}

SymbolicTable::SymbolicTable(const std::array<Polynomial, 8>& k) {
    const auto& [a, b, c, d, e, f, g, h] = k;
    left_ = {{{vec2(a, b), vec2(c, d)}, {vec2(e, f), vec2(g, h)}}};
    right_ = {{{vec2(a, b), vec2(e, f)}, {vec2(c, d), vec2(g, h)}}};
}

Element SymbolicTable::apply(const std::array<std::array<Element, 2>, 2>& t, const Element& u,
                             const Element& v) const {
    if (u.dim() != 2 || v.dim() != 2) throw DimensionError("symbolic table is 2-dimensional");
    Element out(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Polynomial uv = u[i] * v[j];
            if (uv.is_zero()) continue;
            for (std::size_t k = 0; k < 2; ++k) out[k] += uv * t[i][j][k];
        }
    return out;
}

Element SymbolicTable::left(const Element& u, const Element& v) const { return apply(left_, u, v); }
Element SymbolicTable::right(const Element& u, const Element& v) const { return apply(right_, u, v); }
Element SymbolicTable::star(const Element& u) const { return vec2(u[1], u[0]); }

std::vector<ConstraintBlock> constraint_system() {
    SymbolicTable table(structure_variables());
    auto involution = builtin("involution");
    std::vector<std::pair<std::string, std::vector<Identity>>> blocks = {
        {"bar", builtin("left_bar")},
        {"left_assoc", builtin("left_assoc")},
        {"inner_assoc", builtin("inner_assoc")},
        {"involution", {involution[0], involution[1]}},
    };
    std::vector<ConstraintBlock> out;
    for (const auto& [name, ids] : blocks) {
        ConstraintBlock block{name, {}};
        for (const auto& id : ids) {
            std::size_t d = id.variables.size();
            std::vector<std::size_t> idx(d, 0);
            for (bool more = true; more;) {
                std::vector<Element> values;
                for (auto i : idx) values.push_back(Element::basis(2, i));
                Element r = evaluate(table, id, values);
                for (std::size_t k = 0; k < 2; ++k) {
                    Polynomial p = sign_normalized(r[k]);
                    if (p.is_zero()) continue;
                    bool seen = false;
                    for (const auto& q : block.equations) seen = seen || q == p;
                    if (!seen) block.equations.push_back(p);
                }
                more = false;
                for (std::size_t k = d; k-- > 0;) {
                    if (++idx[k] < 2) {
                        more = true;
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
        out.push_back(std::move(block));
    }
    return out;
}

std::vector<Polynomial> constraint_polynomials() {
    std::vector<Polynomial> out;
    for (auto& b : constraint_system())
        for (auto& p : b.equations) out.push_back(std::move(p));
    return out;
}

bool eval_constraints(const Point8& p) {
    static const std::vector<Polynomial> system = constraint_polynomials();
    auto value = [&](VarId v) { return p.at(v); };
    for (const auto& q : system)
        if (!q.evaluate(value).is_zero()) return false;
    return true;
}

std::vector<Family> families() {
    auto [a, b, c, d, e, f, g, h] = structure_variables();
    Polynomial zero;
    return {
        {"family 1", {6, 7}, {h, g, -g, -g, -g, -g, g, h}},
        {"family 2", {7}, {h, zero, h, zero, zero, h, zero, h}},
        {"family 3", {7}, {h, h, h, h, h, h, h, h}},
    };
}

bool in_family(const Family& fam, const Point8& p) {
    std::size_t k = fam.parameters.size();
    Matrix m(8, Vector(k));
    Vector rhs(8);
    for (std::size_t i = 0; i < 8; ++i) {
        Rational constant = fam.point[i].evaluate([](VarId) { return Rational(0); });
        rhs[i] = p[i] - constant;
        for (std::size_t j = 0; j < k; ++j) {
            VarId param = fam.parameters[j];
            m[i][j] = fam.point[i].evaluate([&](VarId v) { return Rational(v == param ? 1 : 0); }) - constant;
        }
    }
    return linalg::solve(m, rhs).has_value();
}

bool family_satisfies_constraints(const Family& fam) {
    std::map<VarId, Polynomial> images;
    for (VarId i = 0; i < 8; ++i) images[i] = fam.point[i];
    for (const auto& q : constraint_polynomials())
        if (!q.substitute(images).is_zero()) return false;
    return true;
}

std::vector<Point8> fundamental_solutions() {
    return {
        Point8{0, 1, -1, -1, -1, -1, 1, 0},
        Point8{1, 0, 0, 0, 0, 0, 0, 1},
        Point8{1, 0, 1, 0, 0, 1, 0, 1},
        Point8{1, 1, 1, 1, 1, 1, 1, 1},
    };
}

GridResult grid_search(const std::vector<Rational>& grid) {
    if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
    auto fams = families();
    GridResult out;
    std::array<std::size_t, 8> idx{};
    for (bool more = true; more;) {
        Point8 p;
        for (std::size_t i = 0; i < 8; ++i) p[i] = grid[idx[i]];
        ++out.points_checked;
        if (eval_constraints(p)) {
            GridSolution s{p, {}, is_proper(p)};
            for (std::size_t f = 0; f < fams.size(); ++f)
                if (in_family(fams[f], p)) s.families.push_back(f);
            if (s.families.empty()) out.violations.push_back(p);
            out.solutions.push_back(std::move(s));
        }
        more = false;
        for (std::size_t k = 8; k-- > 0;) {
            if (++idx[k] < grid.size()) {
                more = true;
                break;
            }
            idx[k] = 0;
        }
    }
    return out;
}

bool is_proper(const Point8& p) { return p[2] != p[4] || p[3] != p[5]; }

std::vector<Point8> proper_solutions(const std::vector<Point8>& points) {
    std::vector<Point8> out;
    for (const auto& p : points)
        if (is_proper(p)) out.push_back(p);
    return out;
}

bool scalar_multiples(const Point8& p, const Point8& q) {
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < 8; ++i) {
        if (p[i].is_zero() != q[i].is_zero()) return false;
        if (p[i].is_zero()) continue;
        Rational r = q[i] / p[i];
        if (lambda && *lambda != r) return false;
        lambda = r;
    }
    return lambda.has_value();
}

DialgebraTable point_table(const Point8& p) {
    const auto& [a, b, c, d, e, f, g, h] = p;
    DialgebraTable::Tensor left = {{{a, b}, {c, d}}, {{e, f}, {g, h}}};
    DialgebraTable::Tensor right = {{{a, b}, {e, f}}, {{c, d}, {g, h}}};
    return DialgebraTable({"x", "y"}, std::move(left), std::move(right));
}

Involution swap_involution() { return Involution({{0, 1}, {1, 0}}); }

} // namespace dialg
