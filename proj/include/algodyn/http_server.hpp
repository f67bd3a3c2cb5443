#pragma once

#include "algodyn/session.hpp"

#include <httplib.h>

#include <string>

namespace algodyn {

/// Binds a SessionService to cpp-httplib. JSON bodies in and out; optional
/// static assets (the browser lab) mounted at "/".
class HttpFrontend {
public:
    explicit HttpFrontend(SessionService& service) : service_(service) {
        auto forward = [this](const httplib::Request& req, httplib::Response& res) {
            Request r{req.method, req.path, req.body, {}};
            for (auto& [k, v] : req.params)
                r.query[k] = v;
            auto out = service_.handle(r);
            res.status = out.status;
            res.set_content(out.body.dump(), "application/json");
        };
        server_.Get("/machines", forward);
        server_.Get(R"(/sessions/[^/]+)", forward);
        server_.Post("/sessions", forward);
        server_.Post(R"(/sessions/[^/]+/(act|undo))", forward);
    }

    bool mount_static(const std::string& dir) { return server_.set_mount_point("/", dir); }

    /// Bind to `port` (0 picks a free one); returns the bound port or -1.
    int bind(const std::string& host, int port) {
        if (port == 0)
            return server_.bind_to_any_port(host);
        return server_.bind_to_port(host, port) ? port : -1;
    }

    /// Blocks until stop().
    bool listen() { return server_.listen_after_bind(); }

    void stop() { server_.stop(); }

    void wait_until_ready() { server_.wait_until_ready(); }

private:
    SessionService& service_;
    httplib::Server server_;
};

} // namespace algodyn
