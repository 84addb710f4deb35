#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dialg/rational.hpp"

namespace dialg {

using VarId = std::uint32_t;

/// Product of indeterminates with positive exponents, stored sorted by id.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(VarId v) : factors_{{v, 1}} {}
    explicit Monomial(std::vector<Factor> factors);

    [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
    [[nodiscard]] std::uint32_t degree() const;
    [[nodiscard]] std::uint32_t exponent(VarId v) const;
    [[nodiscard]] bool is_one() const { return factors_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic order: total degree first, then exponents compared
/// variable by variable in increasing id, where a larger exponent on the
/// smaller id ranks higher.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals in canonical form:
/// no zero coefficients are stored, so structural equality is polynomial equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLex>;

    Polynomial() = default;
    Polynomial(const Rational& c); // NOLINT(google-explicit-constructor)
    Polynomial(long long c) : Polynomial(Rational(c)) {} // NOLINT(google-explicit-constructor)

    static Polynomial variable(VarId v);
    static Polynomial term(const Rational& c, Monomial m);

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Constant term (zero when absent).
    [[nodiscard]] Rational constant() const;
    [[nodiscard]] std::uint32_t degree() const;
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Adds c * m in place.
    void add_term(const Rational& c, const Monomial& m);

    /// Full evaluation; every indeterminate must be resolvable by `value`.
    [[nodiscard]] Rational evaluate(const std::function<Rational(VarId)>& value) const;
    /// Replaces the indeterminates present in `images`; others are kept.
    [[nodiscard]] Polynomial substitute(const std::map<VarId, Polynomial>& images) const;

    /// Renders as e.g. "a*c - a*e + 1/2*x_0^2"; indeterminates printed via `name`.
    [[nodiscard]] std::string to_string(const std::function<std::string(VarId)>& name = {}) const;

private:
    TermMap terms_;
};

/// Issues indeterminates that are unique within one evaluation context.
///
/// Not thread-safe; use one context per audit.
class EvalContext {
public:
    /// `count` fresh degree-1 polynomials named tag_0, tag_1, ...
    std::vector<Polynomial> fresh_indeterminates(std::size_t count, const std::string& tag);
    /// One fresh indeterminate with an explicit display name.
    Polynomial fresh(const std::string& name);

    [[nodiscard]] const std::string& name(VarId v) const { return names_.at(v); }
    [[nodiscard]] std::size_t issued() const { return names_.size(); }
    [[nodiscard]] std::function<std::string(VarId)> namer() const;

private:
    std::vector<std::string> names_;
};

/// Polynomial equals zero, exactly.
inline bool poly_is_zero(const Polynomial& p) { return p.is_zero(); }

} // namespace dialg
