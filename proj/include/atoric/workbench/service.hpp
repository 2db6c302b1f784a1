#pragma once

#include "atoric/workbench/session.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>

namespace atoric {

struct Bind {
    std::string host;
    int port;
};
// "host:port", ":port" or "port".
Bind parse_bind(const std::string& text);

// Session endpoints. handle() is transport-free; listen() serves it over HTTP.
class Service {
public:
    struct Request {
        std::string method, path;
        std::map<std::string, std::string> query;
        std::string body;
    };
    struct Response {
        int status = 200;
        std::string content_type = "application/json";
        std::string body;
    };

    explicit Service(std::optional<std::filesystem::path> log_dir = std::nullopt);
    ~Service();

    Response handle(const Request& req);

    // Blocks until stop(). Port 0 picks a free port; on_bound receives the actual one.
    void listen(const Bind& bind, const std::function<void(int)>& on_bound = {});
    void stop();

private:
    Response session_call(const std::string& id, const std::string& action, const Request& req);

    Registry registry_;
    struct Http;
    std::unique_ptr<Http> http_;
};

} // namespace atoric
