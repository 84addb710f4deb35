#include "dialg/dialgebra.hpp"

#include <set>
#include <sstream>

namespace dialg {

// ---- Element ---------------------------------------------------------------

Element Element::from_vector(const Vector& v) {
    std::vector<Polynomial> coords;
    coords.reserve(v.size());
    for (const auto& x : v) coords.emplace_back(x);
    return Element(std::move(coords));
}

Element Element::basis(std::size_t dim, std::size_t i) {
    Element e(dim);
    e.coords_.at(i) = Polynomial(1);
    return e;
}

bool Element::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool Element::is_constant() const {
    for (const auto& c : coords_)
        if (!c.is_constant()) return false;
    return true;
}

Vector Element::to_vector() const {
    Vector v;
    v.reserve(coords_.size());
    for (const auto& c : coords_) {
        if (!c.is_constant()) throw std::logic_error("element has non-constant coordinates");
        v.push_back(c.constant());
    }
    return v;
}

Element& Element::operator+=(const Element& o) {
    if (o.dim() != dim()) throw DimensionError("element dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (o.dim() != dim()) throw DimensionError("element dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Element& Element::operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

// ---- DialgebraTable --------------------------------------------------------

DialgebraTable::DialgebraTable(std::vector<std::string> basis, Tensor left, Tensor right)
    : basis_(std::move(basis)), left_(std::move(left)), right_(std::move(right)) {
    validate();
    left_sparse_ = sparsify(left_);
    right_sparse_ = sparsify(right_);
}

DialgebraTable DialgebraTable::algebra(std::vector<std::string> basis, Tensor product) {
    Tensor copy = product;
    return DialgebraTable(std::move(basis), std::move(product), std::move(copy));
}

DialgebraTable DialgebraTable::zero(std::vector<std::string> basis) {
    std::size_t n = basis.size();
    Tensor t(n, std::vector<Vector>(n, Vector(n)));
    return algebra(std::move(basis), std::move(t));
}

void DialgebraTable::validate() const {
    std::size_t n = basis_.size();
    if (n == 0) throw DimensionError("dialgebra must have positive dimension");
    std::set<std::string> seen(basis_.begin(), basis_.end());
    if (seen.size() != n) throw std::invalid_argument("basis labels must be distinct");
    for (const Tensor* t : {&left_, &right_}) {
        if (t->size() != n) throw DimensionError("structure table has wrong number of rows");
        for (const auto& row : *t) {
            if (row.size() != n) throw DimensionError("structure table has wrong number of columns");
            for (const auto& v : row)
                if (v.size() != n) throw DimensionError("structure constant vector has wrong length");
        }
    }
}

DialgebraTable::Sparse DialgebraTable::sparsify(const Tensor& t) {
    Sparse s(t.size(), std::vector<std::vector<Entry>>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            for (std::size_t k = 0; k < t[i][j].size(); ++k)
                if (!t[i][j][k].is_zero()) s[i][j].push_back({k, t[i][j][k]});
    return s;
}

std::optional<std::size_t> DialgebraTable::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == label) return i;
    return std::nullopt;
}

Vector DialgebraTable::multiply(Product p, const Vector& u, const Vector& v) const {
    if (u.size() != dim() || v.size() != dim()) throw DimensionError("operand dimension mismatch");
    const Sparse& s = p == Product::Left ? left_sparse_ : right_sparse_;
    Vector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (v[j].is_zero()) continue;
            Rational uv = u[i] * v[j];
            for (const auto& e : s[i][j]) r[e.index] += uv * e.coeff;
        }
    }
    return r;
}

Element DialgebraTable::multiply(Product p, const Element& u, const Element& v) const {
    if (u.dim() != dim() || v.dim() != dim()) throw DimensionError("operand dimension mismatch");
    const Sparse& s = p == Product::Left ? left_sparse_ : right_sparse_;
    Element r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (v[j].is_zero() || s[i][j].empty()) continue;
            Polynomial uv = u[i] * v[j];
            for (const auto& e : s[i][j]) r[e.index] += uv * e.coeff;
        }
    }
    return r;
}

DialgebraTable DialgebraTable::relabeled(std::vector<std::string> basis) const {
    if (basis.size() != dim()) throw DimensionError("relabeling with wrong number of labels");
    return DialgebraTable(std::move(basis), left_, right_);
}

// ---- Involution ------------------------------------------------------------

Involution::Involution(Matrix rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != rows_.size()) throw DimensionError("involution matrix is not square");
}

Involution Involution::identity(std::size_t dim) { return Involution(linalg::identity(dim)); }

Vector Involution::apply(const Vector& u) const {
    if (u.size() != dim()) throw DimensionError("involution dimension mismatch");
    return linalg::row_times(u, rows_);
}

Element Involution::apply(const Element& u) const {
    if (u.dim() != dim()) throw DimensionError("involution dimension mismatch");
    Element r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t k = 0; k < dim(); ++k)
            if (!rows_[i][k].is_zero()) r[k] += u[i] * rows_[i][k];
    }
    return r;
}

bool Involution::squares_to_identity() const {
    return linalg::multiply(rows_, rows_) == linalg::identity(dim());
}

// ---- structures ------------------------------------------------------------

std::vector<std::string> ProductStructure::labels() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back("e" + std::to_string(i));
    return out;
}

TableStructure::TableStructure(const DialgebraTable& table, const Involution* involution)
    : table_(&table), involution_(involution), algebra_(table.is_algebra()) {
    if (involution_ && involution_->dim() != table.dim())
        throw DimensionError("involution does not match the dialgebra dimension");
}

Element TableStructure::left(const Element& u, const Element& v) const {
    return table_->multiply(Product::Left, u, v);
}

Element TableStructure::right(const Element& u, const Element& v) const {
    return table_->multiply(Product::Right, u, v);
}

Element TableStructure::star(const Element& u) const {
    if (!involution_) throw std::logic_error("no involution attached");
    return involution_->apply(u);
}

// ---- operations ------------------------------------------------------------

Element left_mul(const DialgebraTable& a, const Element& u, const Element& v) {
    return a.multiply(Product::Left, u, v);
}

Element right_mul(const DialgebraTable& a, const Element& u, const Element& v) {
    return a.multiply(Product::Right, u, v);
}

Element star(const Involution& s, const Element& u) { return s.apply(u); }

Element leibniz_bracket(const DialgebraTable& a, const Element& u, const Element& v) {
    return left_mul(a, u, v) - right_mul(a, v, u);
}

Element jordan_diproduct(const DialgebraTable& a, const Element& u, const Element& v) {
    return left_mul(a, u, v) + right_mul(a, v, u);
}

Element associator(const DialgebraTable& a, AssociatorKind kind, const Element& u, const Element& v,
                   const Element& w) {
    switch (kind) {
    case AssociatorKind::Left:
        return left_mul(a, left_mul(a, u, v), w) - left_mul(a, u, left_mul(a, v, w));
    case AssociatorKind::Inner:
        return left_mul(a, right_mul(a, u, v), w) - right_mul(a, u, left_mul(a, v, w));
    case AssociatorKind::Right:
        return right_mul(a, right_mul(a, u, v), w) - right_mul(a, u, right_mul(a, v, w));
    }
    throw std::logic_error("unknown associator kind");
}

namespace {

// Rows: coordinates k of (a ⊣ e) and (e ⊢ a) for every basis a, as linear forms in e.
Matrix bar_system(const DialgebraTable& a) {
    std::size_t n = a.dim();
    Matrix m;
    m.reserve(2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Vector row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = a.left(i, j)[k];
            m.push_back(std::move(row));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Vector row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = a.right(j, i)[k];
            m.push_back(std::move(row));
        }
    return m;
}

} // namespace

std::optional<linalg::AffineSolution> find_bar_units(const DialgebraTable& a) {
    std::size_t n = a.dim();
    Vector rhs;
    rhs.reserve(2 * n * n);
    for (int copy = 0; copy < 2; ++copy)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) rhs.emplace_back(i == k ? 1 : 0);
    return linalg::solve(bar_system(a), rhs);
}

std::vector<Vector> find_bar_zeros(const DialgebraTable& a) { return linalg::nullspace(bar_system(a)); }

std::pair<DialgebraTable, std::optional<Involution>> change_basis(const DialgebraTable& a,
                                                                  const Involution* s, const Matrix& p,
                                                                  std::vector<std::string> labels) {
    std::size_t n = a.dim();
    if (p.size() != n) throw DimensionError("change-of-basis matrix has wrong size");
    for (const auto& row : p)
        if (row.size() != n) throw DimensionError("change-of-basis matrix is not square");
    Matrix inv = linalg::inverse(p);
    if (labels.empty()) labels = a.basis();
    auto transport = [&](Product prod) {
        DialgebraTable::Tensor t(n, std::vector<Vector>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t[i][j] = linalg::row_times(a.multiply(prod, p[i], p[j]), inv);
        return t;
    };
    DialgebraTable out(std::move(labels), transport(Product::Left), transport(Product::Right));
    std::optional<Involution> sigma;
    if (s) {
        if (s->dim() != n) throw DimensionError("involution dimension mismatch");
        Matrix rows(n);
        for (std::size_t i = 0; i < n; ++i) rows[i] = linalg::row_times(s->apply(p[i]), inv);
        sigma.emplace(std::move(rows));
    }
    return {std::move(out), std::move(sigma)};
}

DialgebraTable bracket_table(const DialgebraTable& a) {
    std::size_t n = a.dim();
    DialgebraTable::Tensor t(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = linalg::sub(a.left(i, j), a.right(j, i));
    return DialgebraTable::algebra(a.basis(), std::move(t));
}

DialgebraTable diproduct_table(const DialgebraTable& a) {
    std::size_t n = a.dim();
    DialgebraTable::Tensor t(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = linalg::add(a.left(i, j), a.right(j, i));
    return DialgebraTable::algebra(a.basis(), std::move(t));
}

std::string format_vector(const Vector& v, const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Rational mag = v[i].sign() < 0 ? -v[i] : v[i];
        if (v[i].sign() < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (!mag.is_one()) os << mag;
        os << (i < labels.size() ? labels[i] : "e" + std::to_string(i));
        first = false;
    }
    return first ? "0" : os.str();
}

} // namespace dialg
