#include <doctest.h>

#include <random>

#include "csa/json_io.hpp"
#include "../support/helpers.hpp"

using namespace csa;
using csa::testing::P;

TEST_CASE("poly json round trip") {
    std::mt19937 rng(csa::testing::test_seed());
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = csa::testing::random_poly(rng, 2, 3, 5);
        Json j = to_json(p);
        CHECK(poly_from_json(j, 2, 3) == p);
        CHECK(poly_from_json(j["text"], 2, 3) == p);
        CHECK(poly_from_json(Json::parse(j.dump()), 2, 3) == p);
    }
}

TEST_CASE("poly json accepts unsorted odd indices with the sign") {
    Json j = {{"terms", {{{"coef", "3/2"}, {"even", {1, 0}}, {"odd", {2, 1}}}}}};
    CHECK(poly_from_json(j, 2, 2) == P("-3/2*x1*X1*X2", 2, 2));
}

TEST_CASE("quiver json round trip, arrows and matrices agree") {
    ExtendedQuiver q = ExtendedQuiver(2, 4).arrow(0, 1).path(0, 0, 1).path(2, 1, 3);
    Json j = to_json(q);
    CHECK(quiver_from_json(j) == q);
    Json sparse = Json::parse(R"({"n": 2, "m": 4, "arrows": [[1, 2]], "paths": [[1, 1, 2], [3, 2, 4]]})");
    CHECK(quiver_from_json(sparse) == q);

    ExtendedQuiver f = ExtendedQuiver(2, 0).arrow(0, 1);
    f.freeze(1);
    CHECK(quiver_from_json(to_json(f)) == f);
    CHECK(to_json(f)["frozen"] == Json::array({2}));
}

TEST_CASE("seed json round trip") {
    ExtendedQuiver q = ExtendedQuiver(1, 2).path(0, 0, 1);
    Seed s = mutate_seed(initial_seed(q), 0);
    Json j = to_json(s);
    CHECK(j["labels"][0] == "(2+X1*X2)/x");
    CHECK(j["history"] == Json::array({1}));
    Seed back = seed_from_json(Json{{"quiver", j["quiver"]}});
    CHECK(back.quiver == s.quiver);

    Seed e = seed_from_json(Json::parse(R"({"quiver": {"n": 2, "m": 0, "arrows": [[1, 2]]}, "values": [1, "1/2"]})"));
    CHECK(e.labels[1] == P("1/2", 0, 0));
}

TEST_CASE("form and frieze json") {
    ExtendedQuiver q = ExtendedQuiver(1, 2).path(0, 0, 1);
    Json w = to_json(omega_of(q));
    CHECK(w["terms"].size() == 2);
    CHECK(w["terms"][0]["dx"] == Json::array({1}));

    Json f = to_json(symbolic_frieze(1, 0, 2));
    CHECK(f["width"] == 1);
    CHECK(f["range"] == Json::array({0, 2}));
    bool seen_half = false;
    for (const auto& o : f["odds"])
        if (o["i"].is_number_float()) seen_half = true;
    CHECK(seen_half);
}

TEST_CASE("malformed json inputs throw InvalidInput") {
    auto rejects = [](const char* text) {
        try {
            (void)quiver_from_json(Json::parse(text));
        } catch (const Error& e) {
            return e.code() == ErrorCode::InvalidInput;
        }
        return false;
    };
    CHECK(rejects(R"([])"));
    CHECK(rejects(R"({"n": 1})"));
    CHECK(rejects(R"({"n": -1, "m": 0})"));
    CHECK(rejects(R"({"n": 2, "m": 0, "B": [[0, 1]]})"));
    CHECK(rejects(R"({"n": 2, "m": 0, "B": [[0, 1], [-1, "x"]]})"));
    CHECK(rejects(R"({"n": 2, "m": 0, "arrows": [[1, 3]]})"));
    CHECK(rejects(R"({"n": 1, "m": 2, "paths": [[1, 1]]})"));
    CHECK(rejects(R"({"n": 1, "m": 2, "paths": [[1, 1, 2.5]]})"));
    CHECK(rejects(R"({"n": 1, "m": 0, "frozen": [0]})"));
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms": [{"coef": "1/0"}]})"), 1, 0), Error);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"terms": [{"coef": 1, "odd": [3]}]})"), 1, 2), Error);
    CHECK_THROWS_AS(poly_from_json(Json::parse("true"), 1, 0), Error);
}
