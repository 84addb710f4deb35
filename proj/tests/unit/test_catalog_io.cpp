#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "dialg/io.hpp"
#include "helpers.hpp"

using namespace dialg;
using nlohmann::json;
using testing_helpers::sigma;
using testing_helpers::table;

TEST_CASE("parse_vector") {
    std::vector<std::string> l{"p", "q", "r"};
    CHECK(parse_vector("-p+q", l) == Vector{Rational(-1), Rational(1), Rational(0)});
    CHECK(parse_vector("2r", l) == Vector{Rational(0), Rational(0), Rational(2)});
    CHECK(parse_vector("1/2p-q", l) == Vector{Rational(1, 2), Rational(-1), Rational(0)});
    CHECK(parse_vector("0", l) == Vector(3));
    CHECK(parse_vector("e10", {"e1", "e10"}) == Vector{Rational(0), Rational(1)});
    CHECK_THROWS_AS(parse_vector("z", l), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector("p+", l), std::invalid_argument);
}

TEST_CASE("catalog entries") {
    auto names = builtin_dialgebra_names();
    CHECK(names.size() == 10);
    CHECK(table("F").dim() == 8);
    CHECK(table("F_bracket").same_structure(bracket_table(table("F"))));
    CHECK(sigma("F_bracket") == nullptr);
    CHECK_THROWS_AS(builtin_dialgebra("G"), std::out_of_range);
    for (const auto& n : names) CHECK_FALSE(builtin_dialgebra(n).provenance.empty());
}

TEST_CASE("json round trip") {
    for (const auto& n : builtin_dialgebra_names()) {
        CAPTURE(n);
        json j = to_json(table(n), sigma(n), {{"name", n}});
        CHECK(j["format_version"] == kFormatVersion);
        LoadedAlgebra back = from_json(json::parse(j.dump()));
        CHECK(back.table == table(n));
        CHECK(back.involution.has_value() == (sigma(n) != nullptr));
        if (back.involution) CHECK(*back.involution == *sigma(n));
        CHECK(back.meta["name"] == n);
    }
}

TEST_CASE("file round trip") {
    auto path = std::filesystem::temp_directory_path() / "dialg_io_test.json";
    save(path.string(), table("E"), sigma("E"));
    LoadedAlgebra back = load(path.string());
    CHECK(back.table == table("E"));
    std::filesystem::remove(path);
    CHECK(load("builtin:D").table == table("D"));
    CHECK_THROWS(load("/nonexistent/dir/file.json"));
}

TEST_CASE("schema errors name the field") {
    json good = to_json(table("D"), sigma("D"));
    auto expect_error = [](json j, const std::string& prefix) {
        try {
            from_json(j);
            FAIL("no error for " << prefix);
        } catch (const SchemaError& e) {
            CHECK(std::string(e.what()).rfind(prefix, 0) == 0);
        }
    };
    json j = good;
    j["format_version"] = 2;
    expect_error(j, "format_version");
    j = good;
    j.erase("left");
    expect_error(j, "left");
    j = good;
    j["dim"] = 3;
    expect_error(j, "basis");
    j = good;
    j["right"][0][1] = "z";
    expect_error(j, "right[0][1]");
    j = good;
    j["involution"] = json::array({"y"});
    expect_error(j, "involution");
    expect_error(json::array(), "");
}

TEST_CASE("render tables") {
    std::string left = render_table(table("D"), TableOp::Left);
    CHECK(left == "-| | x y\n---+----\nx  | x x\ny  | y y\n");
    std::string bracket = render_table(table("F"), TableOp::Bracket);
    CHECK(bracket.find("r   |    0    0  p-q  p-q  -2v  -2v   2u   2u") != std::string::npos);
    CHECK(parse_table_op("jordan") == TableOp::Jordan);
    CHECK_THROWS_AS(parse_table_op("cross"), std::invalid_argument);
}

TEST_CASE("verdict json") {
    Verdict v = check(table("F"), sigma("F"), builtin("inner_assoc")[0]);
    json j = verdict_to_json(v, table("F").basis());
    CHECK(j["passed"] == false);
    CHECK(j["witness"]["basis_tuple"] == json::array({"r", "p", "t"}));
    CHECK(j["witness"]["value"] == "-v+w");
}
