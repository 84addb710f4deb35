#pragma once

#include <string>
#include <vector>

#include "dialg/catalog.hpp"
#include "dialg/classify2d.hpp"
#include "dialg/dialgebra.hpp"

namespace testing_helpers {

inline const dialg::DialgebraTable& table(const std::string& name) { return dialg::builtin_dialgebra(name).table; }

inline const dialg::Involution* sigma(const std::string& name) {
    const auto& e = dialg::builtin_dialgebra(name);
    return e.involution ? &*e.involution : nullptr;
}

/// Basis vector of the named catalog algebra as a concrete element.
inline dialg::Element el(const std::string& algebra, const std::string& combo) {
    return dialg::Element::from_vector(dialg::parse_vector(combo, table(algebra).basis()));
}

inline dialg::Vector vec(const std::string& algebra, const std::string& combo) {
    return dialg::parse_vector(combo, table(algebra).basis());
}

/// The 23 quadratic constraints on the structure constants a..h, written out by hand
/// in blocks of 4 (bar), 12 (left associativity), 3 (inner associativity), 4 (involution).
inline std::vector<std::vector<dialg::Polynomial>> reference_constraints() {
    auto [a, b, c, d, e, f, g, h] = dialg::structure_variables();
    return {
        {a * c - a * e + c * d - c * f, b * c - b * e + d * d - d * f, c * e + d * g - e * e - f * g,
         c * f + d * h - e * f - f * h},
        {b * (c - e), b * (d - f), b * g - c * d, b * g - e * f, g * (c - e), g * (d - f),
         a * c - a * e - c * f + d * e, a * d - b * c + b * h - d * d, a * f - b * e + b * h - f * f,
         a * g - c * c + c * h - d * g, a * g - e * e + e * h - f * g, c * f - d * e + d * h - f * h},
        {b * g - d * e, a * d - b * c + b * h - d * f, a * g - c * e + e * h - f * g},
        {d - e, c - f, b - g, a - h},
    };
}

/// Same polynomial set up to the sign of each member.
inline bool same_up_to_sign(const std::vector<dialg::Polynomial>& x, const std::vector<dialg::Polynomial>& y) {
    if (x.size() != y.size()) return false;
    std::vector<bool> used(y.size(), false);
    for (const auto& p : x) {
        bool hit = false;
        for (std::size_t i = 0; i < y.size() && !hit; ++i)
            if (!used[i] && (y[i] == p || y[i] == -p)) used[i] = hit = true;
        if (!hit) return false;
    }
    return true;
}

} // namespace testing_helpers
