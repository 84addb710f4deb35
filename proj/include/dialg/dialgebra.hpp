#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dialg/linalg.hpp"
#include "dialg/polynomial.hpp"

namespace dialg {

/// Thrown when operands do not belong to the same algebra.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Product { Left, Right }; // ⊣, ⊢
enum class AssociatorKind { Left, Inner, Right };

/// Element of a dim-dimensional algebra with polynomial coordinates.
/// Concrete elements have constant coordinates.
class Element {
public:
    Element() = default;
    explicit Element(std::size_t dim) : coords_(dim) {}
    explicit Element(std::vector<Polynomial> coords) : coords_(std::move(coords)) {}
    static Element from_vector(const Vector& v);
    static Element basis(std::size_t dim, std::size_t i);

    [[nodiscard]] std::size_t dim() const { return coords_.size(); }
    [[nodiscard]] const std::vector<Polynomial>& coords() const { return coords_; }
    const Polynomial& operator[](std::size_t i) const { return coords_[i]; }
    Polynomial& operator[](std::size_t i) { return coords_[i]; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_constant() const;
    /// Constant coordinates; throws std::logic_error for generic elements.
    [[nodiscard]] Vector to_vector() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend bool operator==(const Element&, const Element&) = default;

private:
    std::vector<Polynomial> coords_;
};

/// Finite-dimensional dialgebra given by structure constants:
/// left(i, j) are the coordinates of e_i ⊣ e_j, right(i, j) of e_i ⊢ e_j.
class DialgebraTable {
public:
    using Tensor = std::vector<std::vector<Vector>>;

    DialgebraTable(std::vector<std::string> basis, Tensor left, Tensor right);
    /// Ordinary algebra viewed as a dialgebra with equal products.
    static DialgebraTable algebra(std::vector<std::string> basis, Tensor product);
    /// All products zero.
    static DialgebraTable zero(std::vector<std::string> basis);

    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<std::string>& basis() const { return basis_; }
    [[nodiscard]] const Tensor& table(Product p) const { return p == Product::Left ? left_ : right_; }
    [[nodiscard]] const Vector& left(std::size_t i, std::size_t j) const { return left_.at(i).at(j); }
    [[nodiscard]] const Vector& right(std::size_t i, std::size_t j) const { return right_.at(i).at(j); }
    [[nodiscard]] bool is_algebra() const { return left_ == right_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;

    [[nodiscard]] Vector multiply(Product p, const Vector& u, const Vector& v) const;
    [[nodiscard]] Element multiply(Product p, const Element& u, const Element& v) const;

    [[nodiscard]] DialgebraTable relabeled(std::vector<std::string> basis) const;

    /// Equal structure constants (labels ignored).
    [[nodiscard]] bool same_structure(const DialgebraTable& o) const {
        return left_ == o.left_ && right_ == o.right_;
    }
    friend bool operator==(const DialgebraTable& a, const DialgebraTable& b) {
        return a.basis_ == b.basis_ && a.same_structure(b);
    }

private:
    struct Entry {
        std::size_t index;
        Rational coeff;
    };
    using Sparse = std::vector<std::vector<std::vector<Entry>>>;
    static Sparse sparsify(const Tensor& t);
    void validate() const;

    std::vector<std::string> basis_;
    Tensor left_;
    Tensor right_;
    Sparse left_sparse_;
    Sparse right_sparse_;
};

/// Linear map a ↦ a*; row i holds the coordinates of e_i*.
class Involution {
public:
    explicit Involution(Matrix rows);
    static Involution identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return rows_.size(); }
    [[nodiscard]] const Matrix& matrix() const { return rows_; }
    [[nodiscard]] Vector apply(const Vector& u) const;
    [[nodiscard]] Element apply(const Element& u) const;
    /// matrix² = identity.
    [[nodiscard]] bool squares_to_identity() const;

    friend bool operator==(const Involution&, const Involution&) = default;

private:
    Matrix rows_;
};

/// The operations the identity evaluator needs; implemented by concrete
/// tables here and by symbolic tables in classify2d.
class ProductStructure {
public:
    virtual ~ProductStructure() = default;
    [[nodiscard]] virtual std::size_t dim() const = 0;
    [[nodiscard]] virtual Element left(const Element& u, const Element& v) const = 0;
    [[nodiscard]] virtual Element right(const Element& u, const Element& v) const = 0;
    [[nodiscard]] virtual bool is_algebra() const = 0;
    [[nodiscard]] virtual bool has_involution() const = 0;
    [[nodiscard]] virtual Element star(const Element& u) const = 0;
    [[nodiscard]] virtual std::vector<std::string> labels() const;
};

class TableStructure final : public ProductStructure {
public:
    explicit TableStructure(const DialgebraTable& table, const Involution* involution = nullptr);

    [[nodiscard]] std::size_t dim() const override { return table_->dim(); }
    [[nodiscard]] Element left(const Element& u, const Element& v) const override;
    [[nodiscard]] Element right(const Element& u, const Element& v) const override;
    [[nodiscard]] bool is_algebra() const override { return algebra_; }
    [[nodiscard]] bool has_involution() const override { return involution_ != nullptr; }
    [[nodiscard]] Element star(const Element& u) const override;
    [[nodiscard]] std::vector<std::string> labels() const override { return table_->basis(); }

private:
    const DialgebraTable* table_;
    const Involution* involution_;
    bool algebra_;
};

Element left_mul(const DialgebraTable& a, const Element& u, const Element& v);
Element right_mul(const DialgebraTable& a, const Element& u, const Element& v);
Element star(const Involution& s, const Element& u);
/// {u, v} = u ⊣ v − v ⊢ u
Element leibniz_bracket(const DialgebraTable& a, const Element& u, const Element& v);
/// u ∘ v = u ⊣ v + v ⊢ u (unnormalized)
Element jordan_diproduct(const DialgebraTable& a, const Element& u, const Element& v);
/// (u,v,w)_⊣ = (u⊣v)⊣w − u⊣(v⊣w); (u,v,w)_× = (u⊢v)⊣w − u⊢(v⊣w);
/// (u,v,w)_⊢ = (u⊢v)⊢w − u⊢(v⊢w).
Element associator(const DialgebraTable& a, AssociatorKind kind, const Element& u, const Element& v,
                   const Element& w);

/// Solution set of {a ⊣ e = a = e ⊢ a for every basis a}; nullopt if empty.
std::optional<linalg::AffineSolution> find_bar_units(const DialgebraTable& a);
/// Basis of {e : a ⊣ e = 0 = e ⊢ a for every basis a}.
std::vector<Vector> find_bar_zeros(const DialgebraTable& a);

/// Structure constants in the basis whose k-th vector has old coordinates P[k].
/// Throws std::domain_error for singular P.
std::pair<DialgebraTable, std::optional<Involution>> change_basis(const DialgebraTable& a,
                                                                  const Involution* s, const Matrix& p,
                                                                  std::vector<std::string> labels = {});

/// Single-operation table of the Leibniz bracket or the Jordan diproduct
/// (left = right), so algebra-mode identities can be run on it.
DialgebraTable bracket_table(const DialgebraTable& a);
DialgebraTable diproduct_table(const DialgebraTable& a);

/// Signed linear combination in basis labels, e.g. "-p+q", "-2v", "0".
std::string format_vector(const Vector& v, const std::vector<std::string>& labels);

} // namespace dialg
