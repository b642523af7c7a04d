#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"

using namespace leibniz;
using json = nlohmann::ordered_json;

namespace {

const char* kE1Doc = R"({
  "field": "rationals",
  "dimension": 2,
  "basis_names": ["x", "y"],
  "brackets": [
    {"left": "x", "right": "y", "result": {"x": "1"}}
  ]
})";

}  // namespace

TEST_CASE("parsing the worked example document") {
    AlgebraTable t = parse_algebra(kE1Doc);
    CHECK(t == catalog_entry("paper-ex-5.1"));
}

TEST_CASE("an empty or missing bracket list gives the abelian table") {
    AlgebraTable a = parse_algebra(
        R"({"dimension": 3, "basis_names": ["a","b","c"], "brackets": []})");
    CHECK(a == AlgebraTable(3, {"a", "b", "c"}));
    AlgebraTable b =
        parse_algebra(R"({"dimension": 2, "basis_names": ["a","b"]})");
    CHECK(b == AlgebraTable(2, {"a", "b"}));
    // the field key is optional but validated when present
    CHECK_THROWS_AS(
        parse_algebra(R"({"field": "reals", "dimension": 1, "basis_names": ["a"]})"),
        parse_error);
}

TEST_CASE("rationals and fractions parse exactly") {
    AlgebraTable t = parse_algebra(
        R"({"dimension": 2, "basis_names": ["a","b"],
            "brackets": [{"left": "a", "right": "b",
                          "result": {"a": "-3/4", "b": "7"}}]})");
    CHECK(t.c(0, 1, 0) == rat_from_long(-3, 4));
    CHECK(t.c(0, 1, 1) == 7);
}

TEST_CASE("malformed documents fail with the offending field named") {
    auto message_of = [](const std::string& text) {
        try {
            parse_algebra(text);
        } catch (const parse_error& e) {
            return std::string(e.what());
        }
        return std::string();
    };

    CHECK(message_of(R"({"dimension": 1, "basis_names": ["x"],
                         "brackets": [{"left": "x", "right": "x",
                                       "result": {"z": "1"}}]})")
              .find("'z'") != std::string::npos);
    CHECK(message_of(R"({"dimension": 2, "basis_names": ["x", "x"]})")
              .find("duplicate basis name") != std::string::npos);
    CHECK(message_of(R"({"dimension": 3, "basis_names": ["x", "y"]})")
              .find("dimension mismatch") != std::string::npos);
    CHECK(message_of(R"({"dimension": 1, "basis_names": ["x"],
                         "brackets": [{"left": "x", "right": "x",
                                       "result": {"x": "1.5"}}]})")
              .find("1.5") != std::string::npos);
    CHECK_THROWS_AS(parse_algebra("not json at all"), parse_error);
    CHECK_THROWS_AS(parse_algebra("[1,2,3]"), parse_error);
    CHECK_THROWS_AS(parse_algebra(R"({"basis_names": ["x"]})"), parse_error);
    CHECK_THROWS_AS(parse_algebra(R"({"dimension": -2, "basis_names": []})"),
                    parse_error);
    // duplicate pair
    CHECK_THROWS_AS(parse_algebra(
                        R"({"dimension": 1, "basis_names": ["x"], "brackets": [
             {"left": "x", "right": "x", "result": {"x": "1"}},
             {"left": "x", "right": "x", "result": {"x": "2"}}]})"),
                    parse_error);
    // undeclared left name
    CHECK_THROWS_AS(parse_algebra(
                        R"({"dimension": 1, "basis_names": ["x"], "brackets": [
             {"left": "q", "right": "x", "result": {"x": "1"}}]})"),
                    parse_error);
    // rational given as a number instead of a string
    CHECK_THROWS_AS(parse_algebra(
                        R"({"dimension": 1, "basis_names": ["x"], "brackets": [
             {"left": "x", "right": "x", "result": {"x": 1}}]})"),
                    parse_error);
}

TEST_CASE("serialize then parse is the identity, byte for byte on re-serialization") {
    for (const auto& [name, t] : catalog_default_instances()) {
        std::string doc = serialize_algebra(t);
        AlgebraTable back = parse_algebra(doc);
        CHECK(back == t);
        CHECK(serialize_algebra(back) == doc);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        AlgebraTable t = random_right_leibniz(seed, 2 + seed % 4);
        CHECK(parse_algebra(serialize_algebra(t)) == t);
    }
}

TEST_CASE("serialization only lists nonzero brackets in basis order") {
    std::string doc = serialize_algebra(catalog_entry("paper-ex-5.1"));
    json j = json::parse(doc);
    CHECK(j["brackets"].size() == 1);
    CHECK(j["brackets"][0]["left"] == "x");
    CHECK(j["brackets"][0]["right"] == "y");
    CHECK(j["brackets"][0]["result"] == json{{"x", "1"}});
    CHECK(j["field"] == "rationals");
}

TEST_CASE("key order in the input is irrelevant") {
    AlgebraTable t = parse_algebra(
        R"({"brackets": [{"result": {"x": "1"}, "right": "y", "left": "x"}],
            "basis_names": ["x", "y"], "dimension": 2, "field": "rationals"})");
    CHECK(t == catalog_entry("paper-ex-5.1"));
}

TEST_CASE("classification document shape") {
    json j = json::parse(build_classification(catalog_entry("paper-ex-5.1")));
    CHECK(j["right_leibniz"]["holds"] == true);
    CHECK(j["left_leibniz"]["holds"] == false);
    CHECK(j["left_leibniz"]["witness"] == json::array({"x", "y", "y"}));
    CHECK(j["killing_class"]["witness"] == json::array({"y", "y"}));
    CHECK(j["solvable"] == true);
    CHECK(j["nilpotent"] == false);
    CHECK(j["semisimple"] == false);
}

TEST_CASE("analysis document frozen facts and determinism") {
    std::string a = build_analysis(catalog_entry("paper-ex-5.1"));
    std::string b = build_analysis(catalog_entry("paper-ex-5.1"));
    CHECK(a == b);

    json j = json::parse(a);
    CHECK(j["killing_matrix"] ==
          json::array({json::array({"0", "0"}), json::array({"0", "1"})}));
    CHECK(j["ess"]["basis"] == json::array({json::array({"1", "0"})}));
    CHECK(j["killing_kernel"] == j["ess"]);
    CHECK(j["radical"]["dim"] == 2);
    CHECK(j["nilradical"]["dim"] == 1);
    CHECK(j["main_theorem"]["in_killing_class"] == false);
    CHECK(j["main_theorem"]["kernel_equals_ess"] == true);
    CHECK(j["series"]["derived"]["term_dims"] == json::array({2, 1, 0}));
    CHECK(j["series"]["derived"]["terminates_at_zero"] == true);
    CHECK(j["series"]["lower_central"]["term_dims"] == json::array({2, 1, 1}));
    CHECK(j["series"]["lower_central"]["stabilized"] == true);

    // semisimple blocks stay internally consistent
    json s = json::parse(build_analysis(catalog_entry("sl2")));
    CHECK(s["classification"]["semisimple"] == true);
    CHECK(s["radical"]["dim"] == s["ess"]["dim"]);
    CHECK(s["killing_kernel"]["dim"] == 0);
}

TEST_CASE("analysis requires the right identity") {
    AlgebraTable idem(1);
    idem.c(0, 0, 0) = 1;
    CHECK_THROWS_AS(build_analysis(idem), precondition_error);
    // classification still works there
    json j = json::parse(build_classification(idem));
    CHECK(j["right_leibniz"]["holds"] == false);
}

TEST_CASE("analysis consistency across random instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        AlgebraTable t = random_right_leibniz(seed + 5, 2 + seed % 3);
        json j = json::parse(build_analysis(t));
        // the report agrees with itself
        bool semi = j["classification"]["semisimple"].get<bool>();
        CHECK(semi == (j["radical"] == j["ess"]));
        CHECK(j["main_theorem"]["semisimple"] == semi);
        CHECK(j["algebra"]["dimension"] == t.dim());
    }
}
