#include "server.hpp"

#include <httplib.h>

#include <iostream>

#include "service.hpp"

namespace csa::service {

void install_routes(httplib::Server& svr) {
    for (const char* route : {"/validate", "/allowed", "/mutate", "/omega", "/frieze", "/sequence"}) {
        std::string r = route;
        svr.Post(r, [r](const httplib::Request& req, httplib::Response& res) {
            Response out = dispatch(r, req.body);
            res.status = out.status;
            res.set_content(out.body.dump(), "application/json");
        });
    }
    svr.Get("/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"status":"ok"})", "application/json");
    });
}

int serve(const std::string& host, int port) {
    httplib::Server svr;
    install_routes(svr);
    if (port == 0) {
        port = svr.bind_to_any_port(host);
        if (port < 0) return 1;
        std::cout << "listening on " << host << ":" << port << std::endl;
        return svr.listen_after_bind() ? 0 : 1;
    }
    if (!svr.bind_to_port(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return 1;
    }
    std::cout << "listening on " << host << ":" << port << std::endl;
    return svr.listen_after_bind() ? 0 : 1;
}

}  // namespace csa::service
