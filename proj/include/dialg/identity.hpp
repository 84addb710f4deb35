#pragma once

#include <compare>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dialg/rational.hpp"

namespace dialg {

enum class OpKind { Alg, Left, Right }; // ".", "-|", "|-"
enum class Mode { Algebra, Dialgebra };

/// Syntax error in the identity DSL, with the byte offset where it was detected.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// Immutable product tree over named variables. Any node may carry stars
/// (applications of the involution); `stars` counts them.
class Term {
public:
    static Term leaf(std::string name, unsigned stars = 0);
    static Term node(OpKind op, Term lhs, Term rhs, unsigned stars = 0);

    [[nodiscard]] bool is_leaf() const;
    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] OpKind op() const;
    [[nodiscard]] const Term& lhs() const;
    [[nodiscard]] const Term& rhs() const;
    [[nodiscard]] unsigned stars() const;
    [[nodiscard]] Term with_stars(unsigned stars) const;

    friend std::strong_ordering operator<=>(const Term& a, const Term& b);
    friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Summand {
    Rational coeff;
    Term term;
    friend bool operator==(const Summand&, const Summand&) = default;
};

/// Σ coeff·term ≡ 0 over the listed variables.
struct Identity {
    std::vector<Summand> summands;
    std::vector<std::string> variables;
    Mode mode = Mode::Dialgebra;
    friend bool operator==(const Identity&, const Identity&) = default;
};

/// Identity after normalization: summands sorted by term, merged, nonzero.
struct CanonicalIdentity {
    std::vector<Summand> summands;
    std::vector<std::string> variables;
    Mode mode = Mode::Dialgebra;

    [[nodiscard]] bool is_zero() const { return summands.empty(); }
    [[nodiscard]] Identity to_identity() const { return {summands, variables, mode}; }
    friend bool operator==(const CanonicalIdentity&, const CanonicalIdentity&) = default;
};

struct CanonicalOptions {
    /// Move stars to the leaves with (a⊣b)* = b*⊢a*, (a⊢b)* = b*⊣a*, a** = a.
    bool push_stars = true;
};

Identity parse_identity(std::string_view text);
std::string render_identity(const Identity& id);
std::string render_term(const Term& t);

/// Builds an identity with variables in first-occurrence order and the mode
/// implied by the operators (dialgebra when there are none).
Identity make_identity(std::vector<Summand> summands);

/// Every summand contains each declared variable exactly once.
bool is_multilinear(const Identity& id);
/// Total degree of the first summand (number of leaves).
std::size_t degree(const Identity& id);
/// Leaf names of a term in left-to-right order.
std::vector<std::string> leaves(const Term& t);
bool has_stars(const Identity& id);

/// Sorts and merges summands without rewriting (any mode).
CanonicalIdentity collect_summands(const Identity& id);

/// Bar-identity normal form: under u ⊣ (v ∘ w) the inner root becomes ⊣,
/// under (u ∘ v) ⊢ w it becomes ⊢. Throws std::invalid_argument in algebra mode.
CanonicalIdentity canonical_form(const Identity& id, CanonicalOptions options = {});

Term push_stars(const Term& t);
Term bar_normalize(const Term& t);

/// Replaces variable names; names absent from `map` are kept.
Identity rename_variables(const Identity& id, const std::map<std::string, std::string>& map);

/// Named identity lists (bar identities, di-associativity, symmetric
/// expressions, Jordan dialgebra identities, classical identities...).
/// Throws std::out_of_range for unknown names.
std::vector<Identity> builtin(const std::string& name);
std::vector<std::string> builtin_names();
/// DSL text of the requested associator, e.g. for (x,y*,z)_⊣.
std::string associator_text(char kind, const std::string& x, const std::string& y, const std::string& z);

} // namespace dialg
