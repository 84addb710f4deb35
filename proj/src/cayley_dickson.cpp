#include <algorithm>
#include "dialg/cayley_dickson.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "dialg/checker.hpp"
#include "dialg/identity.hpp"

namespace dialg {

namespace {

using Pair = std::pair<Vector, Vector>;
using linalg::add;
using linalg::scale;

Product other(Product p) { return p == Product::Left ? Product::Right : Product::Left; }

Pair split(const Vector& v, std::size_t n) {
    return {Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)),
            Vector(v.begin() + static_cast<std::ptrdiff_t>(n), v.end())};
}

Vector join(const Pair& p) {
    Vector out = p.first;
    out.insert(out.end(), p.second.begin(), p.second.end());
    return out;
}

std::vector<std::string> default_labels(const DialgebraTable& a, std::vector<std::string> labels) {
    if (!labels.empty()) {
        if (labels.size() != 2 * a.dim()) throw DimensionError("double needs 2*dim labels");
        return labels;
    }
    for (const auto& l : a.basis()) labels.push_back(l);
    for (const auto& l : a.basis()) {
        std::string copy = l + "'";
        while (std::find(labels.begin(), labels.end(), copy) != labels.end()) copy += "'";
        labels.push_back(copy);
    }
    return labels;
}

void check_args(const DialgebraTable& a, const Involution& s, const Rational& gamma) {
    if (gamma.is_zero()) throw std::invalid_argument("gamma must be nonzero");
    if (s.dim() != a.dim()) throw DimensionError("involution dimension does not match the table");
}

template <class ProductFn>
Doubled build(const DialgebraTable& a, const Involution& s, std::vector<std::string> labels, ProductFn fn) {
    std::size_t n = a.dim();
    std::size_t m = 2 * n;
    std::vector<Vector> units;
    for (std::size_t i = 0; i < m; ++i) units.push_back(linalg::unit(m, i));
    DialgebraTable::Tensor left(m, std::vector<Vector>(m)), right(m, std::vector<Vector>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Pair x = split(units[i], n), y = split(units[j], n);
            left[i][j] = join(fn(Product::Left, x, y));
            right[i][j] = join(fn(Product::Right, x, y));
        }
    Matrix inv = linalg::zeros(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        Pair x = split(units[i], n);
        inv[i] = join({s.apply(x.first), scale(-1, x.second)});
    }
    return {DialgebraTable(std::move(labels), std::move(left), std::move(right)), Involution(std::move(inv))};
}

Vector in_quotient(const Quotient& q, const Vector& v) { return linalg::row_times(v, q.projection); }

// Each component is a sum of signed products of the six inputs a..f.
const std::array<std::array<const char*, 2>, 3>& expansion_text() {
    static const std::array<std::array<const char*, 2>, 3> text = {{
        {"((a -| c) -| e) - ((d |- b*) -| e) - (f |- (d* |- a)) - (f |- (b* -| c*)) - (a -| (c -| e)) "
         "+ (a -| (f |- d*)) + ((c* -| f) |- b*) + ((e |- d) |- b*)",
         "((c* |- a*) -| f) - ((b -| d*) -| f) + (e |- (a* -| d)) + (e |- (c |- b)) - (a* -| (c* -| f)) "
         "- (a* -| (e |- d)) - ((c -| e) |- b) + ((f |- d*) |- b)"},
        {"((a |- c) -| e) - ((d -| b*) -| e) - (f |- (d* -| a)) - (f |- (b* |- c*)) - (a |- (c -| e)) "
         "+ (a |- (f |- d*)) + ((c* -| f) -| b*) + ((e |- d) -| b*)",
         "((c* -| a*) -| f) - ((b |- d*) -| f) + (e |- (a* |- d)) + (e |- (c -| b)) - (a* |- (c* -| f)) "
         "- (a* |- (e |- d)) - ((c -| e) -| b) + ((f |- d*) -| b)"},
        {"((a |- c) |- e) - ((d -| b*) |- e) - (f -| (d* -| a)) - (f -| (b* |- c*)) - (a |- (c |- e)) "
         "+ (a |- (f -| d*)) + ((c* |- f) -| b*) + ((e -| d) -| b*)",
         "((c* -| a*) |- f) - ((b |- d*) |- f) + (e -| (a* |- d)) + (e -| (c -| b)) - (a* |- (c* |- f)) "
         "- (a* |- (e -| d)) - ((c |- e) -| b) + ((f -| d*) -| b)"},
    }};
    return text;
}

} // namespace

Doubled cd_double(const DialgebraTable& a, const Involution& s, const Rational& gamma,
                  std::vector<std::string> labels) {
    check_args(a, s, gamma);
    return build(a, s, default_labels(a, std::move(labels)), [&](Product p, const Pair& x, const Pair& y) {
        const auto& [pa, pb] = x;
        const auto& [pc, pd] = y;
        Vector first = add(a.multiply(p, pa, pc), scale(gamma, a.multiply(other(p), pd, s.apply(pb))));
        Vector second = add(a.multiply(p, s.apply(pa), pd), a.multiply(other(p), pc, pb));
        return Pair{first, second};
    });
}

Doubled diamond_double(const DialgebraTable& a, const Involution& s, const Rational& gamma,
                       std::vector<std::string> labels) {
    check_args(a, s, gamma);
    return build(a, s, default_labels(a, std::move(labels)), [&](Product p, const Pair& x, const Pair& y) {
        const auto& [pa, pb] = x;
        const auto& [pc, pd] = y;
        Vector first = add(a.multiply(p, pa, pc), scale(gamma, a.multiply(other(p), s.apply(pd), pb)));
        Vector second = add(a.multiply(p, pb, s.apply(pc)), a.multiply(other(p), pd, pa));
        return Pair{first, second};
    });
}

Matrix diamond_map(const Involution& s) {
    std::size_t n = s.dim();
    Matrix m = linalg::zeros(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) m[n + i][n + j] = s.matrix()[i][j];
    }
    return m;
}

bool diamond_isomorphism_check(const DialgebraTable& a, const Involution& s, const Rational& gamma) {
    Doubled standard = cd_double(a, s, gamma);
    Doubled diamond = diamond_double(a, s, gamma);
    // The map squares to the identity, so its matrix also lists the preimages of the basis.
    auto [moved, moved_inv] = change_basis(standard.table, &standard.involution, diamond_map(s));
    return moved.same_structure(diamond.table) && moved_inv && *moved_inv == diamond.involution;
}

Quotient quotient_alg(const DialgebraTable& a) {
    std::size_t n = a.dim();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens.push_back(linalg::sub(a.right(i, j), a.left(i, j)));
    std::vector<Vector> ideal = linalg::span_basis(gens);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Vector> candidates;
        for (const auto& g : ideal)
            for (std::size_t k = 0; k < n; ++k) {
                Vector e = linalg::unit(n, k);
                for (Product p : {Product::Left, Product::Right}) {
                    candidates.push_back(a.multiply(p, g, e));
                    candidates.push_back(a.multiply(p, e, g));
                }
            }
        for (auto& c : candidates)
            if (!linalg::in_span(ideal, c)) {
                ideal.push_back(c);
                ideal = linalg::span_basis(ideal);
                grew = true;
            }
    }

    Quotient q{DialgebraTable::zero({"_"}), {}, ideal, {}, true};
    std::vector<Vector> complete = ideal;
    for (std::size_t k = 0; k < n; ++k) {
        Vector e = linalg::unit(n, k);
        if (!linalg::in_span(complete, e)) {
            complete.push_back(e);
            q.representatives.push_back(k);
        }
    }
    std::size_t qdim = q.representatives.size();
    Matrix inv = linalg::inverse(complete);
    q.projection = linalg::zeros(n, qdim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < qdim; ++k) q.projection[i][k] = inv[i][ideal.size() + k];

    std::vector<std::string> labels;
    for (auto r : q.representatives) labels.push_back(a.basis()[r]);
    DialgebraTable::Tensor product(qdim, std::vector<Vector>(qdim));
    for (std::size_t i = 0; i < qdim; ++i)
        for (std::size_t j = 0; j < qdim; ++j)
            product[i][j] = in_quotient(q, a.left(q.representatives[i], q.representatives[j]));
    if (qdim == 0) throw std::domain_error("the ideal is the whole algebra");
    q.algebra = DialgebraTable::algebra(std::move(labels), std::move(product));
    q.bar_identities_hold = verify_all(a, nullptr, builtin("bar")).passed;
    return q;
}

Involution induced_involution(const Quotient& q, const Involution& s) {
    for (const auto& g : q.ideal)
        if (!linalg::in_span(q.ideal, s.apply(g)))
            throw std::domain_error("the involution does not preserve the ideal");
    std::size_t qdim = q.representatives.size();
    Matrix m(qdim);
    std::size_t n = s.dim();
    for (std::size_t k = 0; k < qdim; ++k) m[k] = in_quotient(q, s.apply(linalg::unit(n, q.representatives[k])));
    return Involution(std::move(m));
}

FunctorReport functor_commutes_check(const DialgebraTable& a, const Involution& s, const Rational& gamma) {
    FunctorReport rep;
    std::size_t n = a.dim();
    Doubled dbl = cd_double(a, s, gamma);
    Quotient lhs = quotient_alg(dbl.table);
    Quotient qa = quotient_alg(a);
    Involution sq = induced_involution(qa, s);
    Doubled rhs = cd_double(qa.algebra, sq, gamma);
    Involution lhs_inv = induced_involution(lhs, dbl.involution);
    rep.quotient_of_double_dim = lhs.algebra.dim();
    rep.double_of_quotient_dim = rhs.table.dim();
    if (rep.quotient_of_double_dim != rep.double_of_quotient_dim) {
        rep.reason = "dimensions differ";
        return rep;
    }
    std::size_t m = rhs.table.dim();
    auto psi = [&](const Vector& v) {
        auto [x, y] = split(v, n);
        return join({in_quotient(qa, x), in_quotient(qa, y)});
    };
    for (const auto& g : lhs.ideal)
        if (!linalg::is_zero(psi(g))) {
            rep.reason = "the ideal of the double is not mapped to zero";
            return rep;
        }
    Matrix phi(m);
    for (std::size_t k = 0; k < m; ++k) phi[k] = psi(linalg::unit(2 * n, lhs.representatives[k]));
    if (linalg::rank(phi) != m) {
        rep.reason = "induced map is not invertible";
        return rep;
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Vector image = linalg::row_times(lhs.algebra.left(i, j), phi);
            if (image != rhs.table.multiply(Product::Left, phi[i], phi[j])) {
                rep.reason = "induced map is not multiplicative";
                return rep;
            }
        }
        if (linalg::row_times(lhs_inv.matrix()[i], phi) != rhs.involution.apply(phi[i])) {
            rep.reason = "induced map does not commute with the involutions";
            return rep;
        }
    }
    rep.commutes = true;
    return rep;
}

std::pair<Vector, Vector> double_associator_expansion(const DialgebraTable& a, const Involution& s,
                                                      AssociatorKind kind, const std::pair<Vector, Vector>& x,
                                                      const std::pair<Vector, Vector>& y,
                                                      const std::pair<Vector, Vector>& z) {
    std::map<std::string, Vector> values = {{"a", x.first},  {"b", x.second}, {"c", y.first},
                                            {"d", y.second}, {"e", z.first},  {"f", z.second}};
    for (const auto& [_, v] : values)
        if (v.size() != a.dim()) throw DimensionError("component dimension does not match the algebra");
    const auto& text = expansion_text()[static_cast<std::size_t>(kind)];
    auto component = [&](const char* t) {
        Identity id = parse_identity(t);
        std::vector<Vector> vals;
        for (const auto& v : id.variables) vals.push_back(values.at(v));
        return evaluate(a, &s, id, vals);
    };
    return {component(text[0]), component(text[1])};
}

} // namespace dialg
