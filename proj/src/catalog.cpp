#include "dialg/catalog.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "dialg/cayley_dickson.hpp"

namespace dialg {

Vector parse_vector(std::string_view text, const std::vector<std::string>& labels) {
    Vector out(labels.size());
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "0") return out;
    if (s.empty()) throw std::invalid_argument("empty vector expression");
    std::size_t i = 0;
    while (i < s.size()) {
        Rational sign(1);
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw std::invalid_argument("expected '+' or '-' in \"" + s + "\"");
        }
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        Rational coeff = start == i ? Rational(1) : Rational::parse(s.substr(start, i - start));
        std::size_t best = labels.size();
        std::size_t best_len = 0;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            const auto& l = labels[k];
            if (l.size() > best_len && s.compare(i, l.size(), l) == 0) {
                best = k;
                best_len = l.size();
            }
        }
        if (best == labels.size()) throw std::invalid_argument("unknown basis label in \"" + s + "\"");
        out[best] += sign * coeff;
        i += best_len;
    }
    return out;
}

DialgebraTable::Tensor parse_tensor(const std::vector<std::vector<std::string>>& rows,
                                    const std::vector<std::string>& labels) {
    DialgebraTable::Tensor t;
    for (const auto& row : rows) {
        std::vector<Vector> r;
        for (const auto& cell : row) r.push_back(parse_vector(cell, labels));
        t.push_back(std::move(r));
    }
    return t;
}

namespace {

Involution involution_from(const std::vector<std::string>& images, const std::vector<std::string>& labels) {
    Matrix m;
    for (const auto& img : images) m.push_back(parse_vector(img, labels));
    return Involution(std::move(m));
}

CatalogEntry transcribed(std::string name, std::vector<std::string> labels,
                         const std::vector<std::vector<std::string>>& left,
                         const std::vector<std::vector<std::string>>& right,
                         const std::vector<std::string>& stars, std::string provenance) {
    auto l = parse_tensor(left, labels);
    auto r = parse_tensor(right, labels);
    std::optional<Involution> inv;
    if (!stars.empty()) inv = involution_from(stars, labels);
    return {std::move(name), DialgebraTable(std::move(labels), std::move(l), std::move(r)), std::move(inv),
            std::move(provenance)};
}

std::vector<std::string> e_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

const std::vector<std::vector<std::string>> kFLeft = {
    {"p", "p", "s", "s", "u", "u", "v", "v"},       {"q", "q", "r", "r", "t", "t", "w", "w"},
    {"r", "r", "-q", "-q", "-v", "-v", "u", "u"},   {"s", "s", "-p", "-p", "-w", "-w", "t", "t"},
    {"t", "t", "v", "v", "-q", "-q", "-s", "-s"},   {"u", "u", "w", "w", "-p", "-p", "-r", "-r"},
    {"v", "v", "-t", "-t", "r", "r", "-p", "-p"},   {"w", "w", "-u", "-u", "s", "s", "-q", "-q"},
};
const std::vector<std::vector<std::string>> kFRight = {
    {"p", "q", "r", "s", "t", "u", "v", "w"},       {"p", "q", "r", "s", "t", "u", "v", "w"},
    {"r", "s", "-p", "-q", "-v", "-w", "t", "u"},   {"r", "s", "-p", "-q", "-v", "-w", "t", "u"},
    {"t", "u", "v", "w", "-p", "-q", "-r", "-s"},   {"t", "u", "v", "w", "-p", "-q", "-r", "-s"},
    {"w", "v", "-u", "-t", "s", "r", "-q", "-p"},   {"w", "v", "-u", "-t", "s", "r", "-q", "-p"},
};
const std::vector<std::vector<std::string>> kFBracket = {
    {"0", "0", "-r+s", "-r+s", "-t+u", "-t+u", "v-w", "v-w"},
    {"0", "0", "r-s", "r-s", "t-u", "t-u", "-v+w", "-v+w"},
    {"0", "0", "p-q", "p-q", "-2v", "-2v", "2u", "2u"},
    {"0", "0", "-p+q", "-p+q", "-2w", "-2w", "2t", "2t"},
    {"0", "0", "2v", "2v", "p-q", "p-q", "-2s", "-2s"},
    {"0", "0", "2w", "2w", "-p+q", "-p+q", "-2r", "-2r"},
    {"0", "0", "-2t", "-2t", "2r", "2r", "-p+q", "-p+q"},
    {"0", "0", "-2u", "-2u", "2s", "2s", "p-q", "p-q"},
};

std::map<std::string, CatalogEntry> build_transcribed() {
    std::map<std::string, CatalogEntry> m;
    auto add = [&](CatalogEntry e) { m.emplace(e.name, std::move(e)); };
    add(transcribed("D", {"x", "y"}, {{"x", "x"}, {"y", "y"}}, {{"x", "y"}, {"x", "y"}}, {"y", "x"},
                    "unique proper 2-dimensional commutative associative 0-dialgebra with involution"));
    add(transcribed("D_pq", {"p", "q"}, {{"p", "0"}, {"q", "0"}}, {{"p", "q"}, {"0", "0"}}, {"p", "-q"},
                    "D in the basis p = (x+y)/2, q = (x-y)/2"));
    add(transcribed("E", {"p", "q", "r", "s"},
                    {{"p", "p", "s", "s"}, {"q", "q", "r", "r"}, {"r", "r", "-q", "-q"}, {"s", "s", "-p", "-p"}},
                    {{"p", "q", "r", "s"}, {"p", "q", "r", "s"}, {"r", "s", "-p", "-q"}, {"r", "s", "-p", "-q"}},
                    {"q", "p", "-r", "-s"}, "double of D; associative with involution, not commutative"));
    add(transcribed("F", {"p", "q", "r", "s", "t", "u", "v", "w"}, kFLeft, kFRight,
                    {"q", "p", "-r", "-s", "-t", "-u", "-v", "-w"},
                    "double of E; dialgebra analogue of the octonions, alternative, not associative"));
    add(transcribed("F_bracket", {"p", "q", "r", "s", "t", "u", "v", "w"}, kFBracket, kFBracket, {},
                    "Leibniz bracket of F"));
    return m;
}

std::map<std::string, CatalogEntry> build_classical() {
    std::map<std::string, CatalogEntry> m;
    DialgebraTable table = DialgebraTable::algebra({"e0"}, {{{Rational(1)}}});
    Involution inv = Involution::identity(1);
    const char* names[] = {"R", "C", "H", "O", "S"};
    const char* descriptions[] = {"real numbers", "complex numbers", "quaternions", "octonions", "sedenions"};
    for (int k = 0; k < 5; ++k) {
        if (k > 0) {
            Doubled d = cd_double(table, inv, Rational(-1), e_labels(2 * table.dim()));
            table = d.table;
            inv = d.involution;
        }
        m.emplace(names[k], CatalogEntry{names[k], table, inv,
                                         std::string(descriptions[k]) + " as a dialgebra with equal products"});
    }
    return m;
}

const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> all = [] {
        auto m = build_transcribed();
        m.merge(build_classical());
        return m;
    }();
    return all;
}

} // namespace

const CatalogEntry& builtin_dialgebra(const std::string& name) {
    auto it = catalog().find(name);
    if (it == catalog().end()) throw std::out_of_range("unknown builtin dialgebra '" + name + "'");
    return it->second;
}

std::vector<std::string> builtin_dialgebra_names() {
    return {"D", "D_pq", "E", "F", "F_bracket", "R", "C", "H", "O", "S"};
}

} // namespace dialg
