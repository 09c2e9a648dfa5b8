#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <httplib.h>

#include <fstream>
#include <thread>

#include "server.hpp"
#include "service.hpp"

using namespace csa;
using csa::service::dispatch;

namespace {

Json load(const std::string& name) {
    std::ifstream in(std::string(CSA_DATA_DIR) + "/quivers/" + name + ".json");
    REQUIRE(in);
    return Json::parse(in);
}

Json with_quiver(const std::string& name, Json extra = Json::object()) {
    extra["quiver"] = load(name);
    return extra;
}

}  // namespace

TEST_CASE("dispatch: validate and allowed") {
    auto r = dispatch("/validate", load("ex43").dump());
    CHECK(r.status == 200);
    CHECK(r.body["valid"] == true);

    r = dispatch("/allowed", with_quiver("ex23a", {{"vertex", 1}}).dump());
    CHECK(r.status == 200);
    CHECK(r.body["allowed"] == false);
    CHECK(!r.body["violations"].empty());

    r = dispatch("/allowed", load("ex23c").dump());
    CHECK(r.body["allowed_vertices"] == Json::array({1, 2}));
}

TEST_CASE("dispatch: mutate") {
    auto r = dispatch("/mutate", with_quiver("ex41", {{"vertex", 1}}).dump());
    REQUIRE(r.status == 200);
    CHECK(r.body["label"] == "(2+X1*X2)/x");
    CHECK(r.body["labels"][0] == "(2+X1*X2)/x");

    r = dispatch("/mutate", with_quiver("ex43", {{"sequence", {1, 2, 1}}}).dump());
    REQUIRE(r.status == 200);
    CHECK(r.body["labels"][0] == "(1+x1)/x2");
    CHECK(r.body["history"] == Json::array({1, 2, 1}));
}

TEST_CASE("dispatch: omega, frieze, sequence") {
    auto r = dispatch("/omega", with_quiver("ex43", {{"vertex", 1}}).dump());
    REQUIRE(r.status == 200);
    CHECK(r.body["invariant"] == true);

    r = dispatch("/omega", with_quiver("ex23a", {{"vertex", 1}}).dump());
    REQUIRE(r.status == 200);
    CHECK(r.body["allowed"] == false);

    r = dispatch("/frieze", R"({"width": 2, "mode": "check"})");
    REQUIRE(r.status == 200);
    CHECK(r.body["diamonds_ok"] == true);
    CHECK(r.body["glide_ok"] == true);
    CHECK(r.body["period"] == 5);
    CHECK(r.body["bridge"]["ok"] == true);

    r = dispatch("/frieze", R"({"width": 1, "first": 0, "last": 2})");
    REQUIRE(r.status == 200);
    CHECK(r.body["width"] == 1);

    r = dispatch("/sequence", R"({"kind": "somos", "count": 10})");
    REQUIRE(r.status == 200);
    CHECK(r.body["a"][9] == "314");
}

TEST_CASE("dispatch: status codes") {
    CHECK(dispatch("/validate", "{not json").status == 400);
    CHECK(dispatch("/validate", R"({"n": 1})").status == 400);
    CHECK(dispatch("/mutate", with_quiver("ex41", {{"vertex", 5}}).dump()).status == 400);
    CHECK(dispatch("/sequence", R"({"kind": "nope"})").status == 400);
    CHECK(dispatch("/frieze", R"({"width": 0})").status == 400);
    CHECK(dispatch("/nowhere", "{}").status == 404);

    auto r = dispatch("/mutate", with_quiver("ex23a", {{"vertex", 1}}).dump());
    CHECK(r.status == 422);
    CHECK(r.body["error"] == "MutationForbidden");
    // a skew-violating B is well-formed JSON but not a quiver
    CHECK(dispatch("/omega", R"({"n": 2, "m": 0, "B": [[0, 1], [1, 0]]})").status == 422);
}

TEST_CASE("http server answers the routes") {
    httplib::Server server;
    csa::service::install_routes(server);
    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto post = [&](const char* path, const std::string& body) {
        auto res = client.Post(path, body, "application/json");
        REQUIRE(res);
        return std::make_pair(res->status, Json::parse(res->body));
    };

    auto [s1, b1] = post("/mutate", with_quiver("ex41", {{"vertex", 1}}).dump());
    CHECK(s1 == 200);
    CHECK(b1["label"] == "(2+X1*X2)/x");

    auto [s2, b2] = post("/allowed", with_quiver("ex23a", {{"vertex", 1}}).dump());
    CHECK(s2 == 200);
    CHECK(b2["allowed"] == false);

    auto [s3, b3] = post("/mutate", with_quiver("ex23a", {{"vertex", 1}}).dump());
    CHECK(s3 == 422);
    CHECK(b3.contains("message"));

    auto [s4, b4] = post("/validate", "[[[");
    CHECK(s4 == 400);

    CHECK(post("/omega", with_quiver("a3", {{"vertex", 2}}).dump()).second["invariant"] == true);
    CHECK(post("/frieze", R"({"width": 1})").first == 200);
    CHECK(post("/sequence", R"({"kind": "fib", "count": 5})").first == 200);
    CHECK(post("/validate", load("ex45").dump()).second["valid"] == true);

    // HTTP and in-process bodies are the same document
    std::string req = with_quiver("ex43", {{"sequence", {1, 2}}}).dump();
    CHECK(post("/mutate", req).second == dispatch("/mutate", req).body);

    server.stop();
    worker.join();
}
