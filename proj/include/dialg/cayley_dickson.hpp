#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dialg/dialgebra.hpp"

namespace dialg {

struct Doubled {
    DialgebraTable table;
    Involution involution;
};

/// Cayley–Dickson double on A ⊕ A with basis [(e_1,0)..(e_n,0),(0,e_1)..(0,e_n)]:
///   (a,b) ⊣ (c,d) = (a⊣c + γ(d⊢b*), a*⊣d + c⊢b)
///   (a,b) ⊢ (c,d) = (a⊢c + γ(d⊣b*), a*⊢d + c⊣b)
///   (a,b)* = (a*, -b)
/// Default labels are the originals followed by the originals with "'" appended.
/// Throws std::invalid_argument for γ = 0 and DimensionError for a mismatched involution.
Doubled cd_double(const DialgebraTable& a, const Involution& s, const Rational& gamma = Rational(-1),
                  std::vector<std::string> labels = {});

/// Variant with (a,b) ⊣ (c,d) = (a⊣c + γ(d*⊢b), b⊣c* + d⊢a) and the ⊢ analogue.
Doubled diamond_double(const DialgebraTable& a, const Involution& s, const Rational& gamma = Rational(-1),
                       std::vector<std::string> labels = {});

/// Matrix of (a,b) ↦ (a,b*) on A ⊕ A (row k is the image of basis vector k).
Matrix diamond_map(const Involution& s);
/// The map above carries cd_double onto diamond_double, involutions included.
bool diamond_isomorphism_check(const DialgebraTable& a, const Involution& s, const Rational& gamma = Rational(-1));

struct Quotient {
    DialgebraTable algebra;  // left = right
    Matrix projection;       // row i: quotient coordinates of e_i
    std::vector<Vector> ideal;  // basis of the ideal generated by a⊢b - a⊣b
    std::vector<std::size_t> representatives;  // basis vectors of A spanning the quotient
    bool bar_identities_hold = true;
};

/// A / I_A, with I_A closed under multiplication by basis elements on both sides.
Quotient quotient_alg(const DialgebraTable& a);

/// Involution of A / I_A induced by s. Throws std::domain_error if s(I_A) is not inside I_A.
Involution induced_involution(const Quotient& q, const Involution& s);

struct FunctorReport {
    bool commutes = false;
    std::size_t quotient_of_double_dim = 0;
    std::size_t double_of_quotient_dim = 0;
    std::string reason;
};

/// Compares (A ⊕ A)_alg with A_alg ⊕ A_alg through (a,b) ↦ (a + I, b + I).
FunctorReport functor_commutes_check(const DialgebraTable& a, const Involution& s,
                                     const Rational& gamma = Rational(-1));

/// Right-hand side of the associator expansion in the double (γ = -1), evaluated in A.
/// Inputs are the components (a,b), (c,d), (e,f); the result is (first, second).
std::pair<Vector, Vector> double_associator_expansion(const DialgebraTable& a, const Involution& s,
                                                      AssociatorKind kind, const std::pair<Vector, Vector>& x,
                                                      const std::pair<Vector, Vector>& y,
                                                      const std::pair<Vector, Vector>& z);

} // namespace dialg
