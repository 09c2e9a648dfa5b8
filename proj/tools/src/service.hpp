#pragma once

#include <string>

#include "csa/json_io.hpp"

namespace csa::service {

// Request handlers shared by the CLI and the HTTP server. Each takes the parsed
// request body and returns the response body; csa::Error propagates.
Json validate(const Json& req);
Json allowed(const Json& req);
Json mutate(const Json& req);       // seed-level: new quiver, labels, diagnostics
Json mutate_quiver(const Json& req);  // quiver only
Json explore(const Json& req);
Json cyclic(const Json& req);
Json omega(const Json& req);
Json frieze(const Json& req);
Json frieze_check(const Json& req);
Json sequence(const Json& req);

// The frieze described by a /frieze request: width, optional range, values or random_seed.
SuperFrieze frieze_of(const Json& req);

struct Response {
    int status = 200;
    Json body;
};

// Routes "/validate", "/allowed", "/mutate", "/omega", "/frieze", "/sequence".
// 400 for unparsable or malformed requests, 404 for unknown routes, 422 for domain errors.
Response dispatch(const std::string& route, const std::string& body);

Json error_body(const Error& e);
// Malformed input as opposed to a mathematical refusal.
bool is_malformed(ErrorCode code);

}  // namespace csa::service
