#include "dialg/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dialg/catalog.hpp"

namespace dialg {

using nlohmann::json;

namespace {

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

json tensor_json(const DialgebraTable::Tensor& t) {
    json out = json::array();
    for (const auto& row : t) {
        json r = json::array();
        for (const auto& v : row) r.push_back(vector_json(v));
        out.push_back(std::move(r));
    }
    return out;
}

const json& field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw SchemaError(key + ": missing field");
    return j.at(key);
}

Rational scalar(const json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path + ": expected a rational string such as \"-1/2\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

Vector vector_from(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n) throw SchemaError(path + ": expected an array of " + std::to_string(n) + " entries");
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

DialgebraTable::Tensor tensor_from(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n) throw SchemaError(path + ": expected " + std::to_string(n) + " rows");
    DialgebraTable::Tensor t;
    for (std::size_t i = 0; i < n; ++i) {
        std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != n)
            throw SchemaError(row_path + ": expected " + std::to_string(n) + " columns");
        std::vector<Vector> row;
        for (std::size_t k = 0; k < n; ++k) row.push_back(vector_from(j[i][k], n, row_path + "[" + std::to_string(k) + "]"));
        t.push_back(std::move(row));
    }
    return t;
}

std::string op_symbol(TableOp op) {
    switch (op) {
    case TableOp::Left: return "-|";
    case TableOp::Right: return "|-";
    case TableOp::Bracket: return "[,]";
    case TableOp::Jordan: return "o";
    }
    return "";
}

} // namespace

json to_json(const DialgebraTable& a, const Involution* s, const json& meta) {
    json j;
    j["format_version"] = kFormatVersion;
    j["dim"] = a.dim();
    j["basis"] = a.basis();
    j["left"] = tensor_json(a.table(Product::Left));
    j["right"] = tensor_json(a.table(Product::Right));
    if (s) {
        json m = json::array();
        for (const auto& row : s->matrix()) m.push_back(vector_json(row));
        j["involution"] = std::move(m);
    }
    j["meta"] = meta.is_null() ? json::object() : meta;
    return j;
}

LoadedAlgebra from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("$: expected an object");
    if (j.contains("format_version")) {
        const auto& v = j.at("format_version");
        if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
            throw SchemaError("format_version: unsupported version");
    }
    const json& dim = field(j, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() <= 0) throw SchemaError("dim: expected a positive integer");
    auto n = dim.get<std::size_t>();
    const json& basis = field(j, "basis");
    if (!basis.is_array() || basis.size() != n) throw SchemaError("basis: expected " + std::to_string(n) + " labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (!basis[i].is_string()) throw SchemaError("basis[" + std::to_string(i) + "]: expected a string");
        labels.push_back(basis[i].get<std::string>());
    }
    auto left = tensor_from(field(j, "left"), n, "left");
    auto right = tensor_from(field(j, "right"), n, "right");
    LoadedAlgebra out{DialgebraTable(std::move(labels), std::move(left), std::move(right)), std::nullopt,
                      json::object()};
    if (j.contains("involution") && !j.at("involution").is_null()) {
        const json& m = j.at("involution");
        if (!m.is_array() || m.size() != n) throw SchemaError("involution: expected a square matrix of size " + std::to_string(n));
        Matrix rows;
        for (std::size_t i = 0; i < n; ++i)
            rows.push_back(vector_from(m[i], n, "involution[" + std::to_string(i) + "]"));
        out.involution = Involution(std::move(rows));
    }
    if (j.contains("meta")) out.meta = j.at("meta");
    return out;
}

LoadedAlgebra load(const std::string& path) {
    const std::string prefix = "builtin:";
    if (path.rfind(prefix, 0) == 0) {
        const auto& e = builtin_dialgebra(path.substr(prefix.size()));
        return {e.table, e.involution, json{{"name", e.name}, {"provenance", e.provenance}}};
    }
    json j;
    try {
        if (path == "-") {
            j = json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open '" + path + "'");
            j = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("$: invalid JSON: ") + e.what());
    }
    return from_json(j);
}

void save(const std::string& path, const DialgebraTable& a, const Involution* s, const json& meta) {
    std::string text = to_json(a, s, meta).dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

TableOp parse_table_op(const std::string& name) {
    if (name == "left") return TableOp::Left;
    if (name == "right") return TableOp::Right;
    if (name == "bracket" || name == "leibniz") return TableOp::Bracket;
    if (name == "jordan") return TableOp::Jordan;
    throw std::invalid_argument("unknown table operation '" + name + "'");
}

std::string render_table(const DialgebraTable& a, TableOp op) {
    std::size_t n = a.dim();
    const auto& labels = a.basis();
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v;
            switch (op) {
            case TableOp::Left: v = a.left(i, j); break;
            case TableOp::Right: v = a.right(i, j); break;
            case TableOp::Bracket: v = linalg::sub(a.left(i, j), a.right(j, i)); break;
            case TableOp::Jordan: v = linalg::add(a.left(i, j), a.right(j, i)); break;
            }
            cells[i][j] = format_vector(v, labels);
        }
    std::string symbol = op_symbol(op);
    std::size_t head = symbol.size();
    for (const auto& l : labels) head = std::max(head, l.size());
    std::size_t width = 0;
    for (const auto& l : labels) width = std::max(width, l.size());
    for (const auto& row : cells)
        for (const auto& c : row) width = std::max(width, c.size());

    auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    auto pad_right = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    std::ostringstream os;
    os << pad_right(symbol, head) << " |";
    for (const auto& l : labels) os << ' ' << pad_left(l, width);
    os << '\n' << std::string(head + 1, '-') << '+' << std::string(n * (width + 1), '-') << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        os << pad_right(labels[i], head) << " |";
        for (const auto& c : cells[i]) os << ' ' << pad_left(c, width);
        os << '\n';
    }
    return os.str();
}

json verdict_to_json(const Verdict& v, const std::vector<std::string>& labels) {
    json j;
    j["passed"] = v.passed;
    j["identity"] = render_identity(v.identity);
    j["tuples_inspected"] = v.tuples_inspected;
    if (v.witness) {
        const Witness& w = *v.witness;
        json wj;
        json assignment = json::object();
        for (std::size_t i = 0; i < w.assignment.size() && i < v.identity.variables.size(); ++i)
            assignment[v.identity.variables[i]] = format_vector(w.assignment[i], labels);
        wj["assignment"] = std::move(assignment);
        if (w.basis_tuple) {
            json t = json::array();
            for (auto k : *w.basis_tuple) t.push_back(labels.at(k));
            wj["basis_tuple"] = std::move(t);
        }
        wj["value"] = format_vector(w.evaluation, labels);
        wj["coordinate"] = labels.at(w.coordinate);
        wj["coefficient"] = w.value.to_string();
        j["witness"] = std::move(wj);
    }
    return j;
}

} // namespace dialg
