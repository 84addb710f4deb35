#include "cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dialg/catalog.hpp"
#include "dialg/cayley_dickson.hpp"
#include "dialg/checker.hpp"
#include "dialg/classify2d.hpp"
#include "dialg/identity.hpp"
#include "dialg/io.hpp"
#include "dialg/kp.hpp"

namespace dialg {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void emit(const std::string& path, const DialgebraTable& a, const Involution* s, const json& meta,
          std::ostream& out) {
    if (path.empty() || path == "-")
        out << to_json(a, s, meta).dump(2) << "\n";
    else
        save(path, a, s, meta);
}

json point_json(const Point8& p) {
    json j = json::object();
    for (VarId i = 0; i < 8; ++i) j[structure_variable_name(i)] = p[i].to_string();
    return j;
}

} // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with dialgebras, Cayley-Dickson doubles and polynomial identities"};
    app.require_subcommand(1);

    std::string name, file, output, op = "left", gamma_text = "-1", props, central, grid_text = "-1,0,1";
    std::vector<std::string> identities;
    bool diamond = false, as_json = false, list = false, independent = false;

    auto* builtin_cmd = app.add_subcommand("builtin", "Write a builtin algebra as JSON");
    builtin_cmd->add_option("name", name, "D, D_pq, E, F, F_bracket, R, C, H, O or S");
    builtin_cmd->add_flag("--list", list, "List builtin names");
    builtin_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* show_cmd = app.add_subcommand("show", "Print a multiplication table");
    show_cmd->add_option("file", file, "JSON file, '-' or builtin:<name>")->required();
    show_cmd->add_option("--op", op, "left, right, bracket or jordan");

    auto* double_cmd = app.add_subcommand("double", "Cayley-Dickson double");
    double_cmd->add_option("file", file, "JSON file, '-' or builtin:<name>")->required();
    double_cmd->add_option("--gamma", gamma_text, "Nonzero rational gamma");
    double_cmd->add_flag("--diamond", diamond, "Use the diamond convention");
    double_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* check_cmd = app.add_subcommand("check", "Check class predicates or identities");
    check_cmd->add_option("file", file, "JSON file, '-' or builtin:<name>")->required();
    check_cmd->add_option("--props", props, "Comma-separated predicate names");
    check_cmd->add_option("--identity", identities, "Identity in the DSL (repeatable)");
    check_cmd->add_flag("--json", as_json, "JSON report");

    std::string kp_text;
    auto* kp_cmd = app.add_subcommand("kp", "KP identities of a multilinear algebra identity");
    kp_cmd->add_option("identity", kp_text, "Identity in the DSL")->required();
    kp_cmd->add_option("--central", central, "Only this central argument");
    kp_cmd->add_flag("--independent", independent, "Only an independent subset");

    auto* derived_cmd = app.add_subcommand("derived", "Table of the Leibniz bracket or Jordan diproduct");
    derived_cmd->add_option("file", file, "JSON file, '-' or builtin:<name>")->required();
    derived_cmd->add_option("--op", op, "leibniz or jordan")->required();
    derived_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* classify_cmd = app.add_subcommand("classify", "Grid search over 2-dimensional structure constants");
    classify_cmd->add_option("--grid", grid_text, "Comma-separated rationals");

    auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by the ideal generated by a|-b - a-|b");
    quotient_cmd->add_option("file", file, "JSON file, '-' or builtin:<name>")->required();
    quotient_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*builtin_cmd) {
            if (list) {
                for (const auto& n : builtin_dialgebra_names()) out << n << "\n";
                return 0;
            }
            if (name.empty()) throw UsageError("builtin needs a name (or --list)");
            const auto& e = builtin_dialgebra(name);
            emit(output, e.table, e.involution ? &*e.involution : nullptr,
                 json{{"name", e.name}, {"provenance", e.provenance}}, out);
            return 0;
        }
        if (*show_cmd) {
            auto a = load(file);
            out << render_table(a.table, parse_table_op(op));
            return 0;
        }
        if (*double_cmd) {
            auto a = load(file);
            if (!a.involution) throw UsageError("doubling needs an involution");
            Rational gamma = Rational::parse(gamma_text);
            Doubled d = diamond ? diamond_double(a.table, *a.involution, gamma)
                                : cd_double(a.table, *a.involution, gamma);
            json meta{{"construction", diamond ? "diamond double" : "double"}, {"gamma", gamma.to_string()}};
            emit(output, d.table, &d.involution, meta, out);
            return 0;
        }
        if (*check_cmd) {
            auto a = load(file);
            const Involution* s = a.involution ? &*a.involution : nullptr;
            std::vector<std::pair<std::string, Verdict>> results;
            if (props.empty() && identities.empty()) {
                for (auto& [k, v] : classify_predicates(a.table, s)) results.emplace_back(k, std::move(v));
            }
            for (const auto& p : split_csv(props)) results.emplace_back(p, check_predicate(a.table, s, p));
            for (const auto& text : identities) results.emplace_back(text, verify(a.table, s, parse_identity(text)));
            bool all = true;
            json report = json::object();
            for (const auto& [k, v] : results) {
                all = all && v.passed;
                if (as_json)
                    report[k] = verdict_to_json(v, a.table.basis());
                else
                    out << k << ": " << v.describe(a.table.basis()) << "\n";
            }
            if (as_json) out << report.dump(2) << "\n";
            return all ? 0 : 1;
        }
        if (*kp_cmd) {
            Identity id = parse_identity(kp_text);
            if (!central.empty()) {
                out << render_identity(kp_for_central(id, central).to_identity()) << "\n";
                return 0;
            }
            KpFamily fam = kp_identity(id);
            const auto& list_out = independent ? fam.independent : fam.identities;
            for (const auto& c : list_out) out << render_identity(c.to_identity()) << "\n";
            if (!independent)
                for (const auto& [i, j] : fam.equivalences)
                    out << "# " << i + 1 << " and " << j + 1 << " are equivalent\n";
            return 0;
        }
        if (*derived_cmd) {
            auto a = load(file);
            DialgebraTable t = [&] {
                if (op == "leibniz" || op == "bracket") return bracket_table(a.table);
                if (op == "jordan") return diproduct_table(a.table);
                throw UsageError("--op must be leibniz or jordan");
            }();
            emit(output, t, nullptr, json{{"construction", op}}, out);
            return 0;
        }
        if (*classify_cmd) {
            std::vector<Rational> grid;
            for (const auto& g : split_csv(grid_text)) grid.push_back(Rational::parse(g));
            GridResult r = grid_search(grid);
            json j;
            j["points_checked"] = r.points_checked;
            j["solutions"] = json::array();
            auto fams = families();
            for (const auto& s : r.solutions) {
                json sj = point_json(s.point);
                json tags = json::array();
                for (auto f : s.families) tags.push_back(fams[f].name);
                j["solutions"].push_back({{"point", sj}, {"families", tags}, {"proper", s.proper}});
            }
            j["violations"] = json::array();
            for (const auto& p : r.violations) j["violations"].push_back(point_json(p));
            out << j.dump(2) << "\n";
            return r.violations.empty() ? 0 : 1;
        }
        if (*quotient_cmd) {
            auto a = load(file);
            Quotient q = quotient_alg(a.table);
            std::optional<Involution> inv;
            if (a.involution) inv = induced_involution(q, *a.involution);
            json ideal = json::array();
            for (const auto& g : q.ideal) ideal.push_back(format_vector(g, a.table.basis()));
            json meta{{"construction", "quotient"}, {"ideal", ideal}, {"bar_identities_hold", q.bar_identities_hold}};
            emit(output, q.algebra, inv ? &*inv : nullptr, meta, out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace dialg
