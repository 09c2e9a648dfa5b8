#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace csa::service {

// Registers the POST routes (and GET /health) on svr.
void install_routes(httplib::Server& svr);

// Blocks until the server stops. port 0 picks a free port and prints it.
int serve(const std::string& host, int port);

}  // namespace csa::service
