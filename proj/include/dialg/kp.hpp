#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dialg/identity.hpp"

namespace dialg {

/// Dialgebra monomial obtained from an algebra monomial by choosing `central`.
/// Throws std::invalid_argument if `central` does not occur exactly once.
Term kp_monomial(const Term& t, const std::string& central);

/// KP identity for one central argument, in canonical form.
CanonicalIdentity kp_for_central(const Identity& id, const std::string& central);

struct KpFamily {
    /// One canonical identity per central argument, in variable order.
    std::vector<CanonicalIdentity> raw;
    /// raw without zero identities, exact duplicates and scalar multiples.
    std::vector<CanonicalIdentity> identities;
    /// Index pairs into `identities` that agree up to renaming or star conjugation.
    std::vector<std::pair<std::size_t, std::size_t>> equivalences;
    /// Greedy subset of `identities` whose renamings span the same space.
    std::vector<CanonicalIdentity> independent;
};

/// Throws std::invalid_argument unless `id` is a multilinear algebra-mode identity.
KpFamily kp_identity(const Identity& id);

/// The left and right bar identities.
std::vector<Identity> zero_identities();

/// KP of (ab)* = b*a* for both central arguments, plus a** = a.
std::vector<Identity> kp_involution();

/// q = ±(p evaluated at starred variables, then starred), up to renaming.
bool star_conjugate_equal(const CanonicalIdentity& p, const CanonicalIdentity& q);

/// q = c·p after some renaming of p's variables onto q's.
bool equal_up_to_renaming(const CanonicalIdentity& p, const CanonicalIdentity& q);

/// The linear spans of all variable renamings of the two lists coincide.
bool orbit_span_equal(const std::vector<CanonicalIdentity>& a, const std::vector<CanonicalIdentity>& b);

/// Replaces both dialgebra products by the algebra product.
Identity collapse(const Identity& id);

} // namespace dialg
