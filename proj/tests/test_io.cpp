#include "zariski/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace zariski;

namespace {

std::string temp_file(const std::string& name, const std::string& text)
{
    std::string path = std::string(ZARISKI_TEST_TMP) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("combinatorics JSON round trip and canonical order")
{
    auto k = builtin_combinatorics("K");
    Json j = to_json(k);
    CHECK(j["lines"] == 11);
    CHECK(j["points"][0] == Json::array({1, 2}));
    CHECK(j["points"][1] == Json::array({1, 3, 5, 7}));
    CHECK(combinatorics_from_json(j) == k);
    Json shuffled = {{"lines", 3}, {"points", {{3, 2}, {1, 2}, {3, 1}}}};
    CHECK(to_json(combinatorics_from_json(shuffled))["points"] == Json::parse("[[1,2],[1,3],[2,3]]"));
    CHECK_THROWS_AS(combinatorics_from_json(Json{{"points", 3}}), Error);
}

TEST_CASE("arrangement JSON round trip for every built-in")
{
    for (const auto& name : builtin_arrangement_names()) {
        auto a = builtin_arrangement(name);
        auto b = arrangement_from_json(Json::parse(to_json(a).dump()));
        CHECK(b.lines == a.lines);
        CHECK(b.embedding == a.embedding);
        CHECK(b.beta == a.beta);
    }
    Json j = to_json(builtin_arrangement("N+"));
    CHECK(j["field"]["cyclotomic"] == 10);
    CHECK(j["field"]["root_index"] == 3);
    CHECK(j["lines"][6][0] == "-a^3");
}

TEST_CASE("arrangement files accept integers and expressions")
{
    Json j = Json::parse(R"J({"field": {"cyclotomic": 10, "root_index": 3},
                             "lines": [[1, 0, 0], ["0", 1, "-a(a-1)"]]})J");
    auto a = arrangement_from_json(j);
    CHECK(a.size() == 2);
    Json bad = Json::parse(R"J({"field": {"cyclotomic": 10, "root_index": 5}, "lines": []})J");
    CHECK_THROWS_AS(arrangement_from_json(bad), Error);
    Json zero = Json::parse(R"J({"field": {"cyclotomic": 10, "root_index": 3}, "lines": [[0, 0, 0]]})J");
    CHECK_THROWS_AS(arrangement_from_json(zero), Error);
}

TEST_CASE("character and cycle JSON")
{
    auto xi = builtin_character();
    CHECK(to_json(xi).dump() == R"J({"order":5,"exponents":[1,4,3,2,0,0,1,2,3,4,0]})J");
    auto back = character_from_json(to_json(xi));
    CHECK(back.exponents == xi.exponents);
    auto g = cycle_from_json(Json::parse(R"J({"cycle": [5, 6, 11]})J"));
    CHECK(g.s == 6);
    CHECK(to_json(g).dump() == R"J({"cycle":[5,6,11]})J");
    CHECK(load_cycle("5,6,11").t == 11);
    CHECK_THROWS_AS(load_cycle("5,6"), Error);
    CHECK_THROWS_AS(load_cycle("5,x,6"), Error);
}

TEST_CASE("loaders read files and built-ins")
{
    auto path = temp_file("k.json", to_json(builtin_combinatorics("K12")).dump());
    CHECK(load_combinatorics(path) == builtin_combinatorics("K12"));
    CHECK(load_arrangement("builtin:M+").embedding.root_index == 1);
    CHECK(load_character("builtin:xi", 12).exponents.size() == 12);
    CHECK_THROWS_AS(load_character("builtin:eta", 11), Error);
    CHECK_THROWS_AS(load_combinatorics("/no/such/file.json"), Error);
    auto junk = temp_file("junk.json", "{not json");
    CHECK_THROWS_AS(load_arrangement(junk), Error);
}

TEST_CASE("events JSON uses 1-based positions")
{
    WiringDiagram w{{1, 2, 3}, {CrossEvent{1, -1, 3, 2}, NodeEvent{0, {1, 3}}, VerticalEvent{7}}, {3, 1, 2}};
    Json j = to_json(w);
    CHECK(j["initial_order"] == Json::array({1, 2, 3}));
    CHECK(j["events"][0]["cross"]["at"] == 2);
    CHECK(j["events"][0]["cross"]["sign"] == -1);
    CHECK(j["events"][0]["cross"]["over"] == 3);
    CHECK(j["events"][1]["node"]["at"] == 1);
    CHECK(j["events"][1]["node"]["wires"] == Json::array({1, 3}));
    CHECK(j["events"][2]["vertical"]["line"] == 7);
}

TEST_CASE("invariant JSON carries the crossing columns")
{
    TriangleCycle g{5, 6, 11};
    auto r = invariant(builtin_arrangement("N+"), builtin_character(), g);
    Json j = to_json(r, g);
    CHECK(j["value_exponent"] == 1);
    CHECK(j["order"] == 5);
    CHECK(j["paths_checked"] == 3);
    CHECK(j["crossing_columns"]["6"]["7"] == 1);
    CHECK(j["crossing_columns"]["6"]["10"] == 0);
    CHECK(j["crossing_columns"]["11"]["10"] == -1);
}

TEST_CASE("repeated computations are byte-identical")
{
    TriangleCycle g{5, 6, 11};
    auto once = [&] {
        auto aff = perturb_default(to_affine(builtin_arrangement("M+"), 5, Chart::Lambda));
        std::vector<CycNum> xs;
        for (const auto& s : singular_values(aff))
            xs.push_back(s.x);
        auto w = compute_wiring(aff, order_values(xs, aff.embedding, Gaussian{}), PathOptions{});
        return to_json(w).dump() + render_svg(w) +
               to_json(invariant(builtin_arrangement("M+"), builtin_character(), g), g).dump();
    };
    CHECK(once() == once());
}
