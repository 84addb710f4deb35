#pragma once

#include <array>
#include <string>
#include <vector>

#include "dialg/dialgebra.hpp"
#include "dialg/polynomial.hpp"

namespace dialg {

/// Structure constants a..h of a 2-dimensional dicommutative dialgebra on {x, y}:
///   x⊣x = ax+by, x⊣y = cx+dy, y⊣x = ex+fy, y⊣y = gx+hy,
///   x⊢x = ax+by, x⊢y = ex+fy, y⊢x = cx+dy, y⊢y = gx+hy,
/// with involution x* = y.
using Point8 = std::array<Rational, 8>;

/// The indeterminates a..h (variable ids 0..7) used by the constraint polynomials.
std::array<Polynomial, 8> structure_variables();
std::string structure_variable_name(VarId v);

struct ConstraintBlock {
    std::string name;  // "bar", "left_assoc", "inner_assoc", "involution"
    std::vector<Polynomial> equations;
};

/// Generated by evaluating the identities on the symbolic table; equations
/// are deduplicated up to sign within each block.
std::vector<ConstraintBlock> constraint_system();
std::vector<Polynomial> constraint_polynomials();

bool eval_constraints(const Point8& p);

struct Family {
    std::string name;
    std::vector<VarId> parameters;       // free constants among a..h
    std::array<Polynomial, 8> point;     // linear in the parameters
};

std::vector<Family> families();
bool in_family(const Family& f, const Point8& p);
/// Every constraint vanishes identically on the family.
bool family_satisfies_constraints(const Family& f);

std::vector<Point8> fundamental_solutions();

struct GridSolution {
    Point8 point;
    std::vector<std::size_t> families;  // indices into families()
    bool proper = false;
};

struct GridResult {
    std::vector<GridSolution> solutions;
    /// Solutions lying in no family.
    std::vector<Point8> violations;
    std::size_t points_checked = 0;
};

/// Exhaustive search over grid^8. Throws std::invalid_argument for an empty grid.
GridResult grid_search(const std::vector<Rational>& grid);

/// Left and right products differ: (c,d) != (e,f).
bool is_proper(const Point8& p);
std::vector<Point8> proper_solutions(const std::vector<Point8>& points);
/// q = λp for some nonzero λ.
bool scalar_multiples(const Point8& p, const Point8& q);

DialgebraTable point_table(const Point8& p);
Involution swap_involution();

/// Symbolic 2-dimensional table for generic-element evaluation.
class SymbolicTable final : public ProductStructure {
public:
    explicit SymbolicTable(const std::array<Polynomial, 8>& constants);

    [[nodiscard]] std::size_t dim() const override { return 2; }
    [[nodiscard]] Element left(const Element& u, const Element& v) const override;
    [[nodiscard]] Element right(const Element& u, const Element& v) const override;
    [[nodiscard]] bool is_algebra() const override { return false; }
    [[nodiscard]] bool has_involution() const override { return true; }
    [[nodiscard]] Element star(const Element& u) const override;
    [[nodiscard]] std::vector<std::string> labels() const override { return {"x", "y"}; }

private:
    [[nodiscard]] Element apply(const std::array<std::array<Element, 2>, 2>& t, const Element& u,
                                const Element& v) const;
    std::array<std::array<Element, 2>, 2> left_;
    std::array<std::array<Element, 2>, 2> right_;
};

} // namespace dialg
