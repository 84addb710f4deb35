#include <array>
#include <functional>
#include <map>

#include "dialg/identity.hpp"

namespace dialg {

std::string associator_text(char kind, const std::string& x, const std::string& y, const std::string& z) {
    std::string outer_l, outer_r;
    switch (kind) {
    case 'l': outer_l = " -| "; outer_r = " -| "; break;
    case 'x': outer_l = " |- "; outer_r = " -| "; break;
    case 'r': outer_l = " |- "; outer_r = " |- "; break;
    default: throw std::invalid_argument(std::string("unknown associator kind '") + kind + "'");
    }
    // (x o1 y) o2 z - x o1 (y o2 z)
    return "((" + x + outer_l + y + ")" + outer_r + z + ") - (" + x + outer_l + "(" + y + outer_r + z + "))";
}

namespace {

using Combo = std::vector<std::pair<Rational, Identity>>;

Identity combine(const Combo& parts) {
    std::vector<Summand> out;
    for (const auto& [c, id] : parts)
        for (const auto& s : id.summands) out.push_back({c * s.coeff, s.term});
    return make_identity(std::move(out));
}

Identity assoc(char k, const std::string& x, const std::string& y, const std::string& z) {
    return parse_identity(associator_text(k, x, y, z));
}

Identity starred(const Identity& id) {
    Identity out = id;
    for (auto& s : out.summands) s.term = s.term.with_stars(s.term.stars() + 1);
    return out;
}

Identity assoc_sum(char k1, std::array<std::string, 3> a, int sign, char k2, std::array<std::string, 3> b) {
    return combine({{1, assoc(k1, a[0], a[1], a[2])}, {sign, assoc(k2, b[0], b[1], b[2])}});
}

std::vector<Identity> parse_all(std::initializer_list<const char*> texts) {
    std::vector<Identity> out;
    for (const char* t : texts) out.push_back(parse_identity(t));
    return out;
}

using Builder = std::function<std::vector<Identity>()>;

const std::map<std::string, Builder>& catalog() {
    static const std::map<std::string, Builder> table = {
        {"left_bar", [] { return parse_all({"(a -| (b -| c)) - (a -| (b |- c))"}); }},
        {"right_bar", [] { return parse_all({"((a -| b) |- c) - ((a |- b) |- c)"}); }},
        {"bar",
         [] { return parse_all({"(a -| (b -| c)) - (a -| (b |- c))", "((a -| b) |- c) - ((a |- b) |- c)"}); }},
        {"di_comm", [] { return parse_all({"(a -| b) - (b |- a)"}); }},
        {"left_assoc", [] { return std::vector{assoc('l', "a", "b", "c")}; }},
        {"inner_assoc", [] { return std::vector{assoc('x', "a", "b", "c")}; }},
        {"right_assoc", [] { return std::vector{assoc('r', "a", "b", "c")}; }},
        {"di_assoc",
         [] { return std::vector{assoc('l', "a", "b", "c"), assoc('x', "a", "b", "c"), assoc('r', "a", "b", "c")}; }},
        {"di_alternative",
         [] {
             return std::vector{assoc_sum('l', {"a", "b", "c"}, 1, 'r', {"c", "b", "a"}),
                                assoc_sum('l', {"a", "b", "c"}, -1, 'r', {"b", "c", "a"}),
                                assoc_sum('x', {"a", "b", "c"}, 1, 'r', {"a", "c", "b"})};
         }},
        {"kp_alternative",
         [] {
             return std::vector{assoc_sum('l', {"a", "b", "c"}, 1, 'r', {"c", "b", "a"}),
                                assoc_sum('l', {"a", "b", "c"}, -1, 'r', {"b", "c", "a"}),
                                assoc_sum('x', {"a", "b", "c"}, 1, 'r', {"a", "c", "b"})};
         }},
        {"di_flexible",
         [] {
             return std::vector{assoc_sum('l', {"a", "b", "c"}, 1, 'r', {"c", "b", "a"}),
                                assoc_sum('x', {"a", "b", "c"}, 1, 'x', {"c", "b", "a"})};
         }},
        {"kp_flexible",
         [] {
             return std::vector{assoc_sum('l', {"a", "b", "c"}, 1, 'r', {"c", "b", "a"}),
                                assoc_sum('x', {"a", "b", "c"}, 1, 'x', {"c", "b", "a"}),
                                combine({{1, assoc('r', "a", "b", "c")},
                                         {1, parse_identity("((c -| b) -| a) - (c -| (b -| a))")}})};
         }},
        {"involution", [] { return parse_all({"(a -| b)* - (b* |- a*)", "(a |- b)* - (b* -| a*)", "a** - a"}); }},
        {"partial_sym",
         [] {
             return parse_all({"(x -| y) + (x* -| y) - (y |- x) - (y |- x*)",
                               "(x -| y) + (x -| y*) - (y |- x) - (y* |- x)"});
         }},
        {"symmetric",
         [] {
             std::vector<Identity> out;
             for (int pos = 0; pos < 3; ++pos)
                 for (char k : {'l', 'x', 'r'}) {
                     std::array<std::string, 3> v{"x", "y", "z"};
                     auto w = v;
                     w[pos] += "*";
                     out.push_back(assoc_sum(k, v, 1, k, w));
                 }
             return out;
         }},
        {"sym_move_star",
         [] {
             return parse_all({"(x -| y*) + (x -| y*)* - (x* -| y) - (x* -| y)*",
                               "(x -| y) + (x -| y)* - (x* -| y*) - (x* -| y*)*"});
         }},
        {"sym_bracket", [] { return parse_all({"(x -| y) - (y |- x) + (x -| y)* - (y |- x)*"}); }},
        {"associator_duality",
         [] { return std::vector{combine({{1, assoc('r', "x", "y", "z")}, {1, starred(assoc('l', "z*", "y*", "x*"))}})}; }},
        {"flexible_star",
         [] {
             return std::vector{assoc_sum('l', {"x", "y", "z"}, 1, 'r', {"z*", "y*", "x"}),
                                assoc_sum('l', {"x", "y", "z"}, 1, 'r', {"z", "y*", "x*"}),
                                assoc_sum('x', {"x", "y", "z"}, 1, 'x', {"z*", "y*", "x"}),
                                assoc_sum('x', {"x", "y", "z"}, 1, 'x', {"z", "y*", "x*"}),
                                assoc_sum('l', {"x", "y", "z"}, -1, 'l', {"x*", "y*", "z"}),
                                assoc_sum('x', {"x", "y", "z"}, -1, 'x', {"x*", "y*", "z"})};
         }},
        {"right_commutativity", [] { return parse_all({"(a.(b.c)) - (a.(c.b))"}); }},
        {"right_jordan", [] { return parse_all({"((b.(a.a)).a) - ((b.a).(a.a))"}); }},
        {"right_osborn",
         [] { return parse_all({"((a.b).(c.c)) - (a.(b.(c.c))) - 2 (((a.c).b).c) + 2 ((a.c).(b.c))"}); }},
        {"jordan_dialgebra",
         [] {
             return parse_all({"(a.(b.c)) - (a.(c.b))", "((b.(a.a)).a) - ((b.a).(a.a))",
                               "((a.b).(c.c)) - (a.(b.(c.c))) - 2 (((a.c).b).c) + 2 ((a.c).(b.c))"});
         }},
        {"leibniz", [] { return parse_all({"(x.(y.z)) - ((x.y).z) + ((x.z).y)"}); }},
        {"commutative", [] { return parse_all({"(a.b) - (b.a)"}); }},
        {"associative", [] { return parse_all({"((a.b).c) - (a.(b.c))"}); }},
        {"alternative",
         [] {
             return parse_all({"((a.b).c) - (a.(b.c)) + ((b.a).c) - (b.(a.c))",
                               "((a.b).c) - (a.(b.c)) + ((a.c).b) - (a.(c.b))"});
         }},
        {"flexible", [] { return parse_all({"((a.b).c) - (a.(b.c)) + ((c.b).a) - (c.(b.a))"}); }},
        {"alg_involution", [] { return parse_all({"(a.b)* - (b*.a*)", "a** - a"}); }},
    };
    return table;
}

} // namespace

std::vector<Identity> builtin(const std::string& name) {
    const auto& table = catalog();
    auto it = table.find(name);
    if (it == table.end()) throw std::out_of_range("unknown identity set '" + name + "'");
    return it->second();
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : catalog()) out.push_back(name);
    return out;
}

} // namespace dialg
