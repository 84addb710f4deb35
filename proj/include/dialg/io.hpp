#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dialg/checker.hpp"
#include "dialg/dialgebra.hpp"
#include "json.hpp"

namespace dialg {

/// Schema violation; the message starts with the offending field path.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedAlgebra {
    DialgebraTable table;
    std::optional<Involution> involution;
    nlohmann::json meta = nlohmann::json::object();
};

constexpr int kFormatVersion = 1;

nlohmann::json to_json(const DialgebraTable& a, const Involution* s, const nlohmann::json& meta = nlohmann::json::object());
LoadedAlgebra from_json(const nlohmann::json& j);

/// `path` may be a file, "-" for stdin, or "builtin:<name>".
LoadedAlgebra load(const std::string& path);
/// `path` may be a file or "-" for stdout.
void save(const std::string& path, const DialgebraTable& a, const Involution* s,
          const nlohmann::json& meta = nlohmann::json::object());

enum class TableOp { Left, Right, Bracket, Jordan };
TableOp parse_table_op(const std::string& name);

/// Aligned grid with rows and columns in basis order.
std::string render_table(const DialgebraTable& a, TableOp op);

nlohmann::json verdict_to_json(const Verdict& v, const std::vector<std::string>& labels);

} // namespace dialg
