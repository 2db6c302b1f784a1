#include "atoric/workbench/service.hpp"

#include "atoric/errors.hpp"

#include <httplib.h>

namespace atoric {

namespace {

using Response = Service::Response;

Response json_response(int status, const Json& j) { return {status, "application/json", j.dump() + "\n"}; }

Response error_response(int status, const std::string& code, const std::string& message) {
    return json_response(status, {{"error", code}, {"message", message}});
}

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t end = path.find('/', start);
        if (end == std::string::npos) end = path.size();
        if (end > start) out.push_back(path.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

Json body_json(const std::string& body) {
    if (body.empty()) return Json::object();
    try {
        return Json::parse(body);
    } catch (const Json::parse_error& e) {
        throw ValidationError("bad-json", std::string("request body is not JSON: ") + e.what());
    }
}

std::size_t query_count(const Service::Request& req, const char* key, std::size_t fallback, std::size_t max) {
    auto it = req.query.find(key);
    if (it == req.query.end()) return fallback;
    BigInt n = parse_int(it->second);
    if (n < 0 || n > BigInt(static_cast<unsigned long>(max)))
        throw ValidationError("bad-query", std::string(key) + " must be between 0 and " + std::to_string(max));
    return n.get_ui();
}

} // namespace

Bind parse_bind(const std::string& text) {
    std::string host = "127.0.0.1", port = text;
    auto colon = text.rfind(':');
    if (colon != std::string::npos) {
        if (colon > 0) host = text.substr(0, colon);
        port = text.substr(colon + 1);
    }
    BigInt p = parse_int(port);
    if (p < 0 || p > 65535) throw ValidationError("bad-bind", "port out of range in " + text);
    return {host, static_cast<int>(p.get_si())};
}

struct Service::Http {
    httplib::Server server;
};

Service::Service(std::optional<std::filesystem::path> log_dir)
    : registry_(std::move(log_dir)), http_(std::make_unique<Http>()) {}

Service::~Service() = default;

Response Service::handle(const Request& req) {
    try {
        auto parts = split_path(req.path);
        if (parts.size() == 1 && parts[0] == "health") return json_response(200, {{"ok", true}});
        if (parts.empty() || parts[0] != "session") return error_response(404, "not-found", "no route " + req.path);
        if (parts.size() == 1) {
            if (req.method != "POST") return error_response(405, "method-not-allowed", "use POST /session");
            std::string id = registry_.create(body_json(req.body));
            auto entry = registry_.find(id);
            std::shared_lock lk(entry->lock);
            return json_response(201, {{"id", id}, {"state", entry->session.view()}});
        }
        if (parts.size() > 3) return error_response(404, "not-found", "no route " + req.path);
        return session_call(parts[1], parts.size() == 3 ? parts[2] : "", req);
    } catch (const RefusedAction& e) {
        Json j = error_json(e);
        j["detail"] = e.detail();
        return json_response(409, j);
    } catch (const ValidationError& e) {
        return json_response(400, error_json(e));
    } catch (const PreconditionError& e) {
        return json_response(409, error_json(e));
    } catch (const std::exception& e) {
        return error_response(500, "internal", e.what());
    }
}

Response Service::session_call(const std::string& id, const std::string& action, const Request& req) {
    auto entry = registry_.find(id);
    if (!entry) return error_response(404, "unknown-session", "no session " + id);

    if (req.method == "GET") {
        std::shared_lock lk(entry->lock);
        const Session& s = entry->session;
        if (action.empty()) return json_response(200, s.view());
        if (action == "render.svg") return {200, "image/svg+xml", s.svg()};
        if (action == "mori") return json_response(200, s.mori(query_count(req, "n", 10, 2000)));
        if (action == "log") return json_response(200, s.events());
        return error_response(404, "not-found", "no route " + req.path);
    }
    if (req.method != "POST") return error_response(405, "method-not-allowed", req.method + " " + req.path);

    static const std::vector<std::string> ops = {"mutate", "antiflip", "flip", "undo", "redo"};
    if (std::find(ops.begin(), ops.end(), action) == ops.end())
        return error_response(404, "not-found", "no route " + req.path);
    Json event = body_json(req.body);
    if (!event.is_object()) throw ValidationError("bad-json", "request body must be a JSON object");
    event["op"] = action;

    std::unique_lock lk(entry->lock);
    Json result = entry->session.apply(event);
    registry_.persist(*entry);
    return json_response(200, {{"result", result}, {"state", entry->session.view()}});
}

void Service::listen(const Bind& bind, const std::function<void(int)>& on_bound) {
    auto adapt = [this](const httplib::Request& hreq, httplib::Response& hres) {
        Request req{hreq.method, hreq.path, {}, hreq.body};
        for (const auto& [k, v] : hreq.params) req.query.emplace(k, v);
        Response r = handle(req);
        hres.status = r.status;
        hres.set_header("Access-Control-Allow-Origin", "*");
        hres.set_content(r.body, r.content_type);
    };
    auto& srv = http_->server;
    srv.Get(".*", adapt);
    srv.Post(".*", adapt);
    srv.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
    int port = bind.port;
    if (port == 0) port = srv.bind_to_any_port(bind.host);
    else if (!srv.bind_to_port(bind.host, port)) port = -1;
    if (port < 0) throw ValidationError("bad-bind", "cannot bind " + bind.host + ":" + std::to_string(bind.port));
    if (on_bound) on_bound(port);
    srv.listen_after_bind();
}

void Service::stop() { http_->server.stop(); }

} // namespace atoric
