#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dialg/dialgebra.hpp"
#include "dialg/identity.hpp"

namespace dialg {

/// Concrete assignment at which an identity does not vanish.
struct Witness {
    /// Basis index per variable, when every value is a basis vector.
    std::optional<std::vector<std::size_t>> basis_tuple;
    /// Value of each variable, in Identity::variables order.
    std::vector<Vector> assignment;
    /// Value of the identity at the assignment; coordinate `coordinate` is `value` != 0.
    Vector evaluation;
    std::size_t coordinate = 0;
    Rational value;
};

struct Verdict {
    bool passed = true;
    std::optional<Witness> witness;
    Identity identity;
    std::size_t tuples_inspected = 0;

    /// "pass", or "fail: (v, p, r) -> t-u" using the given basis labels.
    [[nodiscard]] std::string describe(const std::vector<std::string>& labels) const;
};

/// Value of Σ coeff·term with `values[i]` substituted for id.variables[i].
Element evaluate(const ProductStructure& a, const Identity& id, const std::vector<Element>& values);
Vector evaluate(const DialgebraTable& a, const Involution* s, const Identity& id, const std::vector<Vector>& values);

/// Generic-element evaluation: exact over every extension of the rationals.
/// Throws std::invalid_argument for starred identities without an involution
/// and for algebra-mode identities on tables with distinct products.
Verdict check(const DialgebraTable& a, const Involution* s, const Identity& id);
/// All dim^d basis tuples in lexicographic order, stopping at the first failure.
/// Throws std::invalid_argument for non-multilinear identities.
Verdict check_multilinear_fast(const DialgebraTable& a, const Involution* s, const Identity& id);
/// Fast path when multilinear, generic evaluation otherwise.
Verdict verify(const DialgebraTable& a, const Involution* s, const Identity& id);
/// First failing verdict of the list, or a pass accumulating tuple counts.
Verdict verify_all(const DialgebraTable& a, const Involution* s, const std::vector<Identity>& ids);

/// Predicate names understood by check_predicate (aliases and builtin identity sets included).
std::vector<std::string> predicate_names();
/// Evaluates a named predicate; derived-product predicates run on the
/// diproduct or bracket table. Throws std::out_of_range for unknown names.
Verdict check_predicate(const DialgebraTable& a, const Involution* s, const std::string& name);

/// Every applicable class predicate. Involution-dependent entries need `s`;
/// classical algebra entries appear only when the two products coincide.
std::map<std::string, Verdict> classify_predicates(const DialgebraTable& a, const Involution* s);

} // namespace dialg
