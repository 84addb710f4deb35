#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dialg/dialgebra.hpp"

namespace dialg {

struct CatalogEntry {
    std::string name;
    DialgebraTable table;
    std::optional<Involution> involution;
    std::string provenance;
};

/// D, D_pq, E, F, F_bracket (transcribed tables) and R, C, H, O, S (classical
/// doubles of R with the identity involution, built on first use).
/// Throws std::out_of_range for unknown names.
const CatalogEntry& builtin_dialgebra(const std::string& name);
std::vector<std::string> builtin_dialgebra_names();

/// Signed combination of basis labels such as "-p+q", "2v", "1/2x-y", "0".
/// Throws std::invalid_argument on unknown labels or malformed text.
Vector parse_vector(std::string_view text, const std::vector<std::string>& labels);

/// Table from rows of combinations, e.g. {{"p", "-q"}, ...}.
DialgebraTable::Tensor parse_tensor(const std::vector<std::vector<std::string>>& rows,
                                    const std::vector<std::string>& labels);

} // namespace dialg
