#include "dialg/linalg.hpp"

#include <stdexcept>

namespace dialg::linalg {

Matrix identity(std::size_t n) {
    Matrix m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, Vector(cols)); }

Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.empty()) return {};
    if (a.front().size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
    std::size_t cols = b.empty() ? 0 : b.front().size();
    Matrix r = zeros(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Vector row_times(const Vector& v, const Matrix& m) {
    if (v.size() != m.size()) throw std::invalid_argument("vector/matrix dimension mismatch");
    std::size_t cols = m.empty() ? 0 : m.front().size();
    Vector r(cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols; ++j)
            if (!m[i][j].is_zero()) r[j] += v[i] * m[i][j];
    }
    return r;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Rational& c, const Vector& v) {
    Vector r = v;
    for (auto& x : r) x *= c;
    return r;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix inverse(const Matrix& m) {
    std::size_t n = m.size();
    Matrix aug = zeros(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix inv = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
    if (m.empty()) return {};
    std::size_t cols = m.front().size();
    Matrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve(const Matrix& m, const Vector& rhs) {
    if (m.size() != rhs.size()) throw std::invalid_argument("right-hand side size mismatch");
    std::size_t cols = m.empty() ? 0 : m.front().size();
    Matrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    AffineSolution sol;
    sol.particular.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug[i][cols];
    sol.directions = m.empty() ? std::vector<Vector>{} : nullspace(m);
    return sol;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return {};
    Matrix m = vectors;
    auto pivots = rref(m);
    m.resize(pivots.size());
    return m;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    if (is_zero(v)) return true;
    Matrix m = basis;
    std::size_t before = rank(m);
    m.push_back(v);
    return rank(std::move(m)) == before;
}

} // namespace dialg::linalg
