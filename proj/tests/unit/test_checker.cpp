#include "doctest.h"
#include "dialg/checker.hpp"
#include "helpers.hpp"

using namespace dialg;
using testing_helpers::sigma;
using testing_helpers::table;

TEST_CASE("check examples") {
    CHECK(check(table("E"), sigma("E"), builtin("left_assoc")[0]).passed);

    Verdict f = check(table("F"), sigma("F"), builtin("inner_assoc")[0]);
    CHECK_FALSE(f.passed);
    REQUIRE(f.witness);
    REQUIRE(f.witness->basis_tuple);
    // Lexicographically first failing tuple in the order p < q < ... < w.
    CHECK(f.describe(table("F").basis()) == "fail: (r, p, t) -> -v+w");

    Vector at_vpr = evaluate(table("F"), sigma("F"), builtin("inner_assoc")[0],
                             {testing_helpers::vec("F", "v"), testing_helpers::vec("F", "p"),
                              testing_helpers::vec("F", "r")});
    CHECK(format_vector(at_vpr, table("F").basis()) == "t-u");

    for (const char* name : {"C", "H", "O", "F_bracket"})
        CHECK(verify_all(table(name), nullptr, builtin("bar")).passed);
}

TEST_CASE("check validation") {
    CHECK_THROWS_AS(check(table("F"), nullptr, builtin("involution")[0]), std::invalid_argument);
    CHECK_THROWS_AS(check(table("F"), sigma("F"), builtin("associative")[0]), std::invalid_argument);
    CHECK_THROWS_AS(check_multilinear_fast(table("F"), nullptr, builtin("right_jordan")[0]), std::invalid_argument);
    CHECK_THROWS_AS(check(table("F"), sigma("E"), builtin("left_assoc")[0]), DimensionError);
}

TEST_CASE("fast path agrees with generic evaluation") {
    for (const char* alg : {"D", "D_pq", "E", "F", "C", "H"}) {
        const auto& a = table(alg);
        const auto* s = sigma(alg);
        for (const auto& name : builtin_names())
            for (const auto& id : builtin(name)) {
                if (!is_multilinear(id)) continue;
                if (id.mode == Mode::Algebra && !a.is_algebra()) continue;
                if (has_stars(id) && !s) continue;
                Verdict slow = check(a, s, id);
                Verdict fast = check_multilinear_fast(a, s, id);
                CAPTURE(alg);
                CAPTURE(render_identity(id));
                CHECK(slow.passed == fast.passed);
                if (!fast.passed) {
                    CHECK(slow.witness->basis_tuple == fast.witness->basis_tuple);
                    CHECK(evaluate(a, s, id, fast.witness->assignment) == fast.witness->evaluation);
                    CHECK_FALSE(fast.witness->value.is_zero());
                    CHECK(fast.witness->evaluation[fast.witness->coordinate] == fast.witness->value);
                }
            }
    }
}

TEST_CASE("fast path counts tuples") {
    Verdict v = check_multilinear_fast(table("F"), sigma("F"), builtin("left_assoc")[0]);
    CHECK(v.passed == false);
    Verdict pass = check_multilinear_fast(table("F"), sigma("F"), builtin("di_alternative")[0]);
    CHECK(pass.passed);
    CHECK(pass.tuples_inspected == 512);
    Verdict comm = check_multilinear_fast(table("E"), sigma("E"), builtin("di_comm")[0]);
    CHECK_FALSE(comm.passed);
    CHECK_FALSE(check(table("E"), sigma("E"), builtin("di_comm")[0]).passed);
}

TEST_CASE("predicates of D and F") {
    auto d = classify_predicates(table("D"), sigma("D"));
    for (const char* p : {"zero_dialgebra", "commutative", "associative", "involution", "partially_symmetric", "symmetric"})
        CHECK_MESSAGE(d.at(p).passed, p);
    auto f = classify_predicates(table("F"), sigma("F"));
    CHECK(f.at("alternative").passed);
    CHECK_FALSE(f.at("associative").passed);
    CHECK_FALSE(f.at("commutative").passed);
    CHECK(f.at("jordan_diproduct").passed);
    CHECK(f.count("alg_associative") == 0);
    auto h = classify_predicates(table("H"), sigma("H"));
    CHECK(h.at("alg_associative").passed);
    CHECK_FALSE(h.at("alg_commutative").passed);
    CHECK(h.at("alg_involution").passed);
}

TEST_CASE("Jordan identities on the diproduct of F via generic evaluation") {
    DialgebraTable j = diproduct_table(table("F"));
    for (const char* name : {"right_commutativity", "right_jordan", "right_osborn"}) {
        Identity id = builtin(name)[0];
        CHECK(check(j, nullptr, id).passed);
    }
    // The diproduct of F is not commutative, so the identities above are not vacuous.
    CHECK_FALSE(check(j, nullptr, builtin("commutative")[0]).passed);
}

TEST_CASE("non-multilinear failures carry concrete witnesses") {
    const auto& h = table("H");
    Verdict v = check(h, nullptr, parse_identity("(a.a) - a"));
    REQUIRE_FALSE(v.passed);
    CHECK_FALSE(linalg::is_zero(evaluate(h, nullptr, v.identity, v.witness->assignment)));
}

TEST_CASE("left bar passes iff right bar passes on catalog algebras with involution") {
    for (const auto& name : builtin_dialgebra_names()) {
        const auto* s = sigma(name);
        if (!s || table(name).dim() > 8) continue;
        CHECK(verify_all(table(name), s, builtin("involution")).passed);
        CHECK(verify(table(name), s, builtin("left_bar")[0]).passed ==
              verify(table(name), s, builtin("right_bar")[0]).passed);
    }
}

TEST_CASE("partial symmetry lemmas on D, E, F") {
    for (const char* alg : {"D", "E", "F"}) {
        CAPTURE(alg);
        CHECK(check_predicate(table(alg), sigma(alg), "partially_symmetric").passed);
        CHECK(verify_all(table(alg), sigma(alg), builtin("sym_move_star")).passed);
        CHECK(verify_all(table(alg), sigma(alg), builtin("sym_bracket")).passed);
    }
}

TEST_CASE("predicate names and aliases") {
    CHECK(check_predicate(table("E"), sigma("E"), "assoc").passed);
    CHECK(check_predicate(table("E"), sigma("E"), "inner_assoc").passed);
    CHECK_THROWS_AS(check_predicate(table("E"), sigma("E"), "no_such_predicate"), std::out_of_range);
    auto names = predicate_names();
    CHECK(std::find(names.begin(), names.end(), "invol") != names.end());
}
