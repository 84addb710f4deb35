// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/helpers.hpp"
#include "dialg/cayley_dickson.hpp"
#include "dialg/checker.hpp"
#include "dialg/classify2d.hpp"
#include "dialg/kp.hpp"

using namespace dialg;
using testing_helpers::sigma;
using testing_helpers::table;

namespace {

struct Report {
    bool ok = true;
    std::ostringstream notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << " [" << what << "]";
        }
    }
};

bool all_pass(const DialgebraTable& a, const Involution* s, const std::string& set) {
    return verify_all(a, s, builtin(set)).passed;
}

std::vector<CanonicalIdentity> canon_all(const std::vector<Identity>& ids) {
    std::vector<CanonicalIdentity> out;
    for (const auto& id : ids) out.push_back(canonical_form(id));
    return out;
}

void golden_doubling(Report& r) {
    Doubled e = cd_double(table("D"), *sigma("D"), Rational(-1), table("E").basis());
    r.require(e.table == table("E"), "double(D) tables");
    r.require(e.involution == *sigma("E"), "double(D) involution");
    Doubled f = cd_double(table("E"), *sigma("E"), Rational(-1), table("F").basis());
    r.require(f.table == table("F"), "double(E) tables");
    r.require(f.involution == *sigma("F"), "double(E) involution");
}

void bracket_table_of_f(Report& r) {
    const auto& f = table("F");
    const auto& expected = table("F_bracket");
    std::size_t matches = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Element got = leibniz_bracket(f, Element::basis(8, i), Element::basis(8, j));
            if (got.to_vector() == expected.left(i, j)) ++matches;
        }
    r.require(matches == 64, std::to_string(matches) + "/64 entries");
    r.notes << " " << matches << "/64 entries";
}

void classification(Report& r) {
    auto blocks = constraint_system();
    auto ref = testing_helpers::reference_constraints();
    std::size_t total = 0;
    r.require(blocks.size() == ref.size(), "block count");
    for (std::size_t i = 0; i < blocks.size() && i < ref.size(); ++i) {
        total += blocks[i].equations.size();
        r.require(testing_helpers::same_up_to_sign(blocks[i].equations, ref[i]), blocks[i].name + " block");
    }
    r.require(total == 23, "23 equations");
    for (const auto& fam : families()) r.require(family_satisfies_constraints(fam), fam.name);

    GridResult g = grid_search({Rational(-1), Rational(0), Rational(1)});
    r.require(g.points_checked == 6561, "6561 points");
    r.require(g.solutions.size() == 13, "13 solutions");
    r.require(g.violations.empty(), "solutions outside families");
    std::vector<Point8> points;
    for (const auto& s : g.solutions) points.push_back(s.point);
    auto proper = proper_solutions(points);
    r.require(proper.size() == 2, "2 proper");
    if (proper.size() == 2) {
        Point8 neg = proper[0];
        for (auto& c : neg) c = -c;
        r.require(neg == proper[1], "proper solutions differ by sign");
        bool is_d = false;
        for (const auto& p : proper) is_d = is_d || point_table(p) == table("D");
        r.require(is_d, "proper table is D");
    }
    r.notes << " " << total << " equations, " << g.solutions.size() << " grid solutions, " << proper.size()
            << " proper";
}

void predicates(Report& r) {
    const auto* sd = sigma("D");
    for (const char* set : {"bar", "di_comm", "di_assoc", "involution", "partial_sym", "symmetric"})
        r.require(all_pass(table("D"), sd, set), std::string("D ") + set);

    const auto* se = sigma("E");
    for (const char* set : {"bar", "di_assoc", "involution"}) r.require(all_pass(table("E"), se, set), std::string("E ") + set);
    Verdict comm = verify(table("E"), se, builtin("di_comm")[0]);
    r.require(!comm.passed, "E dicommutative");
    if (!comm.passed) r.notes << " E di_comm " << comm.describe(table("E").basis()) << ";";

    const auto* sf = sigma("F");
    for (const char* set : {"bar", "di_alternative", "involution"})
        r.require(all_pass(table("F"), sf, set), std::string("F ") + set);
    Verdict inner = verify(table("F"), sf, builtin("inner_assoc")[0]);
    r.require(!inner.passed, "F inner associative");
    Vector at = evaluate(table("F"), sf, builtin("inner_assoc")[0],
                         {testing_helpers::vec("F", "v"), testing_helpers::vec("F", "p"), testing_helpers::vec("F", "r")});
    std::string value = format_vector(at, table("F").basis());
    r.require(value == "t-u", "(v, p, r) -> " + value);
    r.notes << " F inner_assoc at (v, p, r) -> " << value << ", first witness " << inner.describe(table("F").basis());
}

void doubling_instances(Report& r) {
    // Commutative associative with involution doubles to associative with involution.
    DialgebraTable real = table("R");
    Involution id1 = Involution::identity(1);
    std::vector<std::pair<std::string, std::pair<const DialgebraTable*, const Involution*>>> bases = {
        {"R", {&real, &id1}}, {"C", {&table("C"), sigma("C")}}, {"D", {&table("D"), sigma("D")}}};
    for (const auto& [name, a] : bases) {
        bool pre = all_pass(*a.first, a.second, "di_comm") && all_pass(*a.first, a.second, "di_assoc") &&
                   all_pass(*a.first, a.second, "involution");
        r.require(pre, name + " hypotheses");
        Doubled d = cd_double(*a.first, *a.second);
        for (const char* set : {"bar", "di_assoc", "involution"})
            r.require(all_pass(d.table, &d.involution, set), "double(" + name + ") " + set);
    }

    // Partially symmetric associative with involution doubles to alternative, partially symmetric.
    r.require(all_pass(table("D"), sigma("D"), "partial_sym"), "D partial_sym");
    Doubled e = cd_double(table("D"), *sigma("D"));
    for (const char* set : {"bar", "di_alternative", "partial_sym", "involution"})
        r.require(all_pass(e.table, &e.involution, set), std::string("double(D) ") + set);

    // Flexible symmetric is preserved along D, E, F, double(F).
    DialgebraTable cur = table("D");
    Involution inv = *sigma("D");
    for (int step = 0; step < 4; ++step) {
        std::string tag = "step " + std::to_string(step) + " (dim " + std::to_string(cur.dim()) + ")";
        for (const char* set : {"bar", "kp_flexible", "symmetric", "involution"}) {
            bool ok = true;
            for (const auto& id : builtin(set)) ok = ok && check_multilinear_fast(cur, &inv, id).passed;
            r.require(ok, tag + " " + set);
        }
        if (step < 3) {
            Doubled d = cd_double(cur, inv);
            cur = d.table;
            inv = d.involution;
        }
    }
    r.notes << " chain reached dim " << cur.dim();
}

void lemma_suites(Report& r) {
    std::size_t algebras = 0;
    for (const auto& name : builtin_dialgebra_names()) {
        const auto* s = sigma(name);
        if (!s) continue;
        ++algebras;
        const auto& a = table(name);
        r.require(all_pass(a, s, "associator_duality"), name + " associator_duality");
        if (check_predicate(a, s, "partially_symmetric").passed) {
            r.require(all_pass(a, s, "sym_move_star"), name + " sym_move_star");
            r.require(all_pass(a, s, "sym_bracket"), name + " sym_bracket");
        }
        if (all_pass(a, s, "kp_flexible") && all_pass(a, s, "bar") && all_pass(a, s, "involution") &&
            all_pass(a, s, "symmetric"))
            r.require(all_pass(a, s, "flexible_star"), name + " flexible_star");
    }

    const auto& d = table("D");
    const auto& sd = *sigma("D");
    Doubled dd = cd_double(d, sd);
    std::size_t triples = 0;
    auto split = [](std::size_t k) {
        Vector u(2), v(2);
        if (k < 2) u[k] = Rational(1); else v[k - 2] = Rational(1);
        return std::pair{u, v};
    };
    for (auto kind : {AssociatorKind::Left, AssociatorKind::Inner, AssociatorKind::Right})
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k) {
                    Vector direct = associator(dd.table, kind, Element::basis(4, i), Element::basis(4, j),
                                               Element::basis(4, k)).to_vector();
                    auto [x, y] = double_associator_expansion(d, sd, kind, split(i), split(j), split(k));
                    x.insert(x.end(), y.begin(), y.end());
                    if (x == direct) ++triples;
                }
    r.require(triples == 192, "expansion " + std::to_string(triples) + "/192");
    r.notes << " " << algebras << " algebras with involution, expansion " << triples << "/192";
}

void jordan_diproducts(Report& r) {
    for (const char* alg : {"F", "E"}) {
        DialgebraTable j = diproduct_table(table(alg));
        for (const char* set : {"right_commutativity", "right_jordan", "right_osborn"}) {
            Identity id = builtin(set)[0];
            r.require(!is_multilinear(id) || std::string(set) == "right_commutativity", std::string(set) + " multilinear");
            r.require(check(j, nullptr, id).passed, std::string(alg) + " " + set);
        }
    }
}

void kp_regression(Report& r) {
    KpFamily comm = kp_identity(builtin("commutative")[0]);
    r.require(comm.independent.size() == 1, "commutativity 1");
    r.require(comm.independent.size() == 1 &&
                  equal_up_to_renaming(comm.independent[0], canonical_form(builtin("di_comm")[0])),
              "commutativity form");

    KpFamily assoc = kp_identity(builtin("associative")[0]);
    auto di_assoc = canon_all(builtin("di_assoc"));
    r.require(assoc.identities.size() == 3, "associativity 3");
    for (std::size_t i = 0; i < assoc.identities.size() && i < 3; ++i)
        r.require(equal_up_to_renaming(assoc.identities[i], di_assoc[i]), "associativity form " + std::to_string(i));

    std::vector<CanonicalIdentity> pooled;
    for (const auto& id : builtin("alternative")) {
        KpFamily fam = kp_identity(id);
        pooled.insert(pooled.end(), fam.identities.begin(), fam.identities.end());
    }
    std::vector<CanonicalIdentity> alt = pooled;
    for (std::size_t size = 1; size < pooled.size() && alt.size() == pooled.size(); ++size)
        for (unsigned mask = 0; mask < (1u << pooled.size()); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
            std::vector<CanonicalIdentity> pick;
            for (std::size_t i = 0; i < pooled.size(); ++i)
                if (mask & (1u << i)) pick.push_back(pooled[i]);
            if (orbit_span_equal(pick, pooled)) {
                alt = std::move(pick);
                break;
            }
        }
    r.require(alt.size() == 3, "alternativity " + std::to_string(alt.size()));
    r.require(orbit_span_equal(alt, canon_all(builtin("kp_alternative"))), "alternativity span");

    KpFamily flex = kp_identity(builtin("flexible")[0]);
    auto kp_flex = canon_all(builtin("kp_flexible"));
    r.require(flex.identities.size() == 3, "flexibility 3");
    for (std::size_t i = 0; i < flex.identities.size() && i < 3; ++i)
        r.require(equal_up_to_renaming(flex.identities[i], kp_flex[i]), "flexibility form " + std::to_string(i));
    bool flagged = false;
    for (const auto& p : flex.equivalences) flagged = flagged || p == std::pair<std::size_t, std::size_t>{0, 2};
    r.require(flagged, "flexibility 1 ~ 3");

    auto inv = kp_involution();
    auto expected = builtin("involution");
    r.require(inv.size() == expected.size(), "involution count");
    for (std::size_t i = 0; i < inv.size() && i < expected.size(); ++i)
        r.require(canonical_form(inv[i], {.push_stars = false}) == canonical_form(expected[i], {.push_stars = false}),
                  "involution form " + std::to_string(i));
    r.notes << " 1/" << assoc.identities.size() << "/" << alt.size() << "/" << flex.identities.size() << "/"
            << inv.size();
}

void classical_chain(Report& r) {
    auto passes = [](const char* alg, const char* pred) { return check_predicate(table(alg), sigma(alg), pred).passed; };
    r.require(passes("C", "alg_commutative") && passes("C", "alg_associative"), "C");
    r.require(passes("H", "alg_associative") && !passes("H", "alg_commutative"), "H");
    r.require(passes("O", "alg_alternative") && passes("O", "alg_flexible") && !passes("O", "alg_associative"), "O");
    r.require(passes("S", "alg_flexible"), "S flexible");
    Verdict alt = verify_all(table("S"), sigma("S"), builtin("alternative"));
    r.require(!alt.passed, "S alternative");
    if (!alt.passed) r.notes << " S alternativity " << alt.describe(table("S").basis());
}

void quotients(Report& r) {
    std::size_t qd = quotient_alg(table("D")).algebra.dim();
    std::size_t qe = quotient_alg(table("E")).algebra.dim();
    r.require(qd == 1, "dim D/I = " + std::to_string(qd));
    r.require(qe == 2, "dim E/I = " + std::to_string(qe));
    for (const char* alg : {"D", "E"}) {
        FunctorReport f = functor_commutes_check(table(alg), *sigma(alg));
        r.require(f.commutes, std::string(alg) + ": " + f.reason);
    }
    r.notes << " dims " << qd << ", " << qe;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Report&)>>> criteria = {
        {"golden doubling chain D -> E -> F", golden_doubling},
        {"Leibniz bracket table of F", bracket_table_of_f},
        {"two-dimensional classification", classification},
        {"predicate audit of D, E, F", predicates},
        {"doubling theorem instances", doubling_instances},
        {"lemma identity suites", lemma_suites},
        {"Jordan diproducts of F and E", jordan_diproducts},
        {"KP regression", kp_regression},
        {"classical doubling chain", classical_chain},
        {"quotient functor", quotients},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Report r;
        try {
            criteria[i].second(r);
        } catch (const std::exception& e) {
            r.ok = false;
            r.notes << " exception: " << e.what();
        }
        if (!r.ok) ++failures;
        std::cout << "AC" << (i + 1) << " " << (r.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ."
                  << r.notes.str() << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
