#include <random>

#include "doctest.h"
#include "dialg/checker.hpp"
#include "dialg/identity.hpp"
#include "helpers.hpp"

using namespace dialg;

TEST_CASE("parse examples") {
    Identity assoc = parse_identity("((a.b).c) - (a.(b.c)) = 0");
    CHECK(assoc.mode == Mode::Algebra);
    CHECK(assoc.summands.size() == 2);
    CHECK(assoc.variables == std::vector<std::string>{"a", "b", "c"});

    Identity comm = parse_identity("(a -| b) - (b |- a) = 0");
    CHECK(comm.mode == Mode::Dialgebra);
    REQUIRE(comm.summands.size() == 2);
    CHECK(comm.summands[1].coeff == Rational(-1));
    CHECK(comm.summands[1].term.op() == OpKind::Right);

    Identity bar = parse_identity("(a -| (b -| c)) - (a -| (b |- c)) = 0");
    CHECK(bar == builtin("left_bar")[0]);

    Identity sugar = parse_identity("(a -| b) == (b |- a)");
    CHECK(sugar == parse_identity("(a -| b) - (b |- a)"));

    Identity coeffs = parse_identity("-2/3 (a.b) + 2 (b.a)");
    CHECK(coeffs.summands[0].coeff == Rational(-2, 3));
    CHECK(coeffs.summands[1].coeff == Rational(2));

    Identity starred = parse_identity("(a -| b)** - a*");
    CHECK(starred.summands[0].term.stars() == 2);
    CHECK(starred.summands[1].term.stars() == 1);
    CHECK(has_stars(starred));
}

TEST_CASE("parse errors carry positions") {
    auto position = [](const char* text) -> std::size_t {
        try {
            parse_identity(text);
        } catch (const ParseError& e) {
            return e.position;
        }
        return std::string::npos;
    };
    CHECK(position("(a . b") == 0);
    CHECK(position("(a -| b) - (a.b)") == 13);
    CHECK(position("(a # b)") == 3);
    CHECK(position("(a -| b) = 1") == 11);
    CHECK(position("") == 0);
    CHECK(position("(A.b)") == 1);
    CHECK_THROWS_AS(parse_identity("(a.b) +"), ParseError);
    CHECK_THROWS_AS(parse_identity("1/0 a"), ParseError);
}

TEST_CASE("render rules and round trip") {
    CHECK(render_identity(parse_identity("-(a -| b) + 1 (b |- a)")) == "-(a -| b) + (b |- a)");
    CHECK(render_identity(parse_identity("a* - 3/2 (a.b)")) == "a* - 3/2 (a.b)");
    CHECK(render_term(Term::leaf("a", 1)) == "a*");
    for (const auto& name : builtin_names())
        for (const auto& id : builtin(name)) {
            std::string text = render_identity(id);
            CAPTURE(text);
            CHECK(parse_identity(text) == id);
        }
}

TEST_CASE("multilinearity") {
    CHECK(is_multilinear(builtin("associative")[0]));
    CHECK_FALSE(is_multilinear(builtin("right_jordan")[0]));
    CHECK(is_multilinear(builtin("flexible")[0]));
    CHECK(is_multilinear(parse_identity("(a* -| b) - (b |- a)")));
    CHECK(degree(builtin("associative")[0]) == 3);
}

TEST_CASE("canonical form") {
    auto canon = [](const char* text) { return render_identity(canonical_form(parse_identity(text)).to_identity()); };
    CHECK(canon("(a -| (b |- c))") == "(a -| (b -| c))");
    CHECK(canon("((a -| b) |- c)") == "((a |- b) |- c)");
    CHECK(canon("(a -| (b -| c))") == "(a -| (b -| c))");
    CHECK(canonical_form(builtin("left_bar")[0]).is_zero());
    CHECK(canonical_form(builtin("right_bar")[0]).is_zero());
    CHECK(canon("(a -| b)*") == "(b* |- a*)");
    CHECK(canon("a** - a") == "0");
    CHECK(canon("((a |- (b |- c)) |- d)") == "((a |- (b |- c)) |- d)");
    CHECK(canon("(((a |- b) -| c) |- d)") == "(((a |- b) |- c) |- d)");
    CHECK(canonical_form(parse_identity("a** - a"), {.push_stars = false}).summands.size() == 2);
    CHECK_THROWS_AS(canonical_form(builtin("associative")[0]), std::invalid_argument);
}

TEST_CASE("canonical form is idempotent and preserves verdicts") {
    const char* algebras[] = {"D", "E", "F", "C", "H"};
    for (const auto& name : builtin_names()) {
        for (const auto& id : builtin(name)) {
            if (id.mode != Mode::Dialgebra) continue;
            CanonicalIdentity c = canonical_form(id);
            CHECK(canonical_form(c.to_identity()) == c);
            for (const char* alg : algebras) {
                const auto& a = testing_helpers::table(alg);
                const auto* s = testing_helpers::sigma(alg);
                if (!verify_all(a, s, builtin("bar")).passed) continue;
                CAPTURE(name);
                CAPTURE(alg);
                CHECK(verify(a, s, id).passed == verify(a, s, c.to_identity()).passed);
            }
        }
    }
}

TEST_CASE("builtin catalog sizes") {
    CHECK(builtin("di_assoc").size() == 3);
    CHECK(builtin("di_alternative").size() == 3);
    CHECK(builtin("symmetric").size() == 9);
    CHECK(builtin("flexible_star").size() == 6);
    CHECK(builtin("bar").size() == 2);
    CHECK(builtin("involution").size() == 3);
    CHECK(builtin("partial_sym").size() == 2);
    CHECK(builtin("jordan_dialgebra").size() == 3);
    CHECK_THROWS_AS(builtin("nope"), std::out_of_range);
    CHECK(associator_text('x', "v", "p*", "r") == "((v |- p*) -| r) - (v |- (p* -| r))");
}

TEST_CASE("renaming") {
    Identity id = parse_identity("(a -| b) - (b |- a)");
    Identity r = rename_variables(id, {{"a", "b"}, {"b", "a"}});
    CHECK(r == parse_identity("(b -| a) - (a |- b)"));
}

namespace {

Term random_term(std::mt19937& rng, int depth, const std::vector<std::string>& names) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    if (depth == 0 || coin(rng) == 0) return Term::leaf(names[pick(rng)], coin(rng) == 0 ? 1 : 0);
    return Term::node(coin(rng) == 0 ? OpKind::Left : OpKind::Right, random_term(rng, depth - 1, names),
                      random_term(rng, depth - 1, names));
}

} // namespace

TEST_CASE("is_multilinear agrees with leaf counting on random terms") {
    std::mt19937 rng(3);
    std::vector<std::string> names = {"a", "b", "c"};
    for (int trial = 0; trial < 300; ++trial) {
        Term t1 = random_term(rng, 3, names), t2 = random_term(rng, 3, names);
        Identity id = make_identity({{1, t1}, {-1, t2}});
        bool brute = true;
        for (const auto& t : {t1, t2}) {
            auto l = leaves(t);
            for (const auto& v : id.variables) brute = brute && std::count(l.begin(), l.end(), v) == 1;
            brute = brute && l.size() == id.variables.size();
        }
        CHECK(is_multilinear(id) == brute);
    }
}
