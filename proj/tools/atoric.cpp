// atoric: command-line front end for the wedge workbench.
#include "atoric/errors.hpp"
#include "atoric/flip.hpp"
#include "atoric/hjchain.hpp"
#include "atoric/mori.hpp"
#include "atoric/mutate.hpp"
#include "atoric/workbench/json_io.hpp"
#include "atoric/workbench/scenario.hpp"
#include "atoric/workbench/service.hpp"
#include "atoric/workbench/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace atoric;

namespace {

enum Exit { Ok = 0, Internal = 1, Invalid = 2, Refused = 3, ScenarioFail = 4 };

struct Output {
    bool json = false;
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ValidationError("bad-output", "cannot write " + path);
        f << text;
    }
};

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool shallow(const Json& j) {
    if (!j.is_array()) return j.is_primitive();
    for (const Json& e : j)
        if (!shallow(e)) return false;
    return true;
}

std::string inline_text(const Json& j) {
    if (!j.is_array()) return scalar(j);
    std::string s = "[";
    for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + inline_text(j[k]);
    return s + "]";
}

// key.sub: value lines; objects carrying "text" collapse to it.
void flatten(const Json& j, const std::string& prefix, std::string& out) {
    if (j.is_object() && j.contains("text") && j["text"].is_string()) {
        out += prefix + ": " + j["text"].get<std::string>() + "\n";
        return;
    }
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    if (shallow(j)) {
        out += prefix + ": " + inline_text(j) + "\n";
        return;
    }
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
}

void emit(const Output& out, const Json& j) {
    if (out.json) {
        out.write(j.dump(2) + "\n");
        return;
    }
    std::string text;
    flatten(j, "", text);
    out.write(text);
}

std::string slurp(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Literal text, "-" for stdin, or @file.
std::string source_text(const std::string& arg) {
    if (arg == "-") return slurp(std::cin);
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw ValidationError("bad-input", "cannot read " + arg.substr(1));
        return slurp(f);
    }
    return arg;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ValidationError("bad-json", e.what());
    }
}

struct WedgeInput {
    std::string wedge, chain, a;

    void attach(CLI::App* app) {
        app->add_option("wedge", wedge, "Pi(p1,q1,p2,q2,c,a), a bare tuple, JSON, @file or - for stdin");
        app->add_option("--chain", chain, "marked chain [..]-k-[..] to build the wedge from");
        app->add_option("--a", a, "length of E when using --chain");
    }

    WedgeParams get() const {
        if (!chain.empty()) {
            if (a.empty()) throw ValidationError("missing-length", "--chain needs --a");
            return from_chain(parse_marked_chain(chain), parse_rational(a));
        }
        if (wedge.empty()) throw ValidationError("missing-wedge", "give a wedge or --chain");
        std::string text = source_text(wedge);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            Json j = parse_json(text);
            return wedge_from_json(j.contains("wedge") ? j["wedge"] : j);
        }
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
        return wedge_from_json(Json(text.substr(first == std::string::npos ? 0 : first)));
    }
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    for (std::string p; std::getline(in, p, ',');) parts.push_back(p);
    return parts;
}

Json wedge_report(const WedgeParams& w) {
    return {{"wedge", to_json(w)},
            {"invariants", to_json(invariants(w))},
            {"boundaryChain", to_json(boundary_chain(w))},
            {"polygon", to_json(realize(w))}};
}

Json classify_report(const WedgeParams& w) {
    return {{"wedge", to_json(w)},
            {"delta", rat(mutation_delta(w))},
            {"left", to_json(classify(w, Side::Left))},
            {"right", to_json(classify(w, Side::Right))}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for almost-toric truncated wedges"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json, "emit JSON");
    app.add_option("--out", out.path, "write output to FILE");

    std::function<int()> run;

    WedgeInput w_wedge, w_classify, w_mutate, w_mori, w_anti, w_flip, w_coh, w_render;

    auto* wedge_cmd = app.add_subcommand("wedge", "invariants, boundary chain and polygon of a wedge");
    w_wedge.attach(wedge_cmd);
    wedge_cmd->callback([&] { run = [&] { emit(out, wedge_report(w_wedge.get())); return Ok; }; });

    auto* classify_cmd = app.add_subcommand("classify", "mutability of both sides");
    w_classify.attach(classify_cmd);
    classify_cmd->callback([&] { run = [&] { emit(out, classify_report(w_classify.get())); return Ok; }; });

    std::string side = "right";
    std::size_t times = 1;
    auto* mutate_cmd = app.add_subcommand("mutate", "mutate on one side");
    w_mutate.attach(mutate_cmd);
    mutate_cmd->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    mutate_cmd->add_option("--times", times, "repeat count");
    mutate_cmd->callback([&] {
        run = [&] {
            WedgeParams from = w_mutate.get(), cur = from;
            Side s = parse_side(side);
            Json steps = Json::array();
            for (std::size_t k = 0; k < times; ++k) {
                cur = mutate(cur, s);
                steps.push_back(to_string(cur));
            }
            emit(out, {{"from", to_json(from)}, {"side", side}, {"steps", steps}, {"wedge", to_json(cur)},
                       {"invariants", to_json(invariants(cur))}});
            return Ok;
        };
    });

    std::string seed_text, l2_text, a_minus_text;
    std::size_t n = 10;
    auto* mori_cmd = app.add_subcommand("mori", "Mori sequence with optional budget certificate");
    w_mori.attach(mori_cmd);
    mori_cmd->add_option("--seed", seed_text, "p1,q1,p2,q2");
    mori_cmd->add_option("--n", n, "number of pairs");
    mori_cmd->add_option("--budget", l2_text, "room l2 for the budget check");
    mori_cmd->add_option("--a-minus", a_minus_text, "length of E for the budget check");
    mori_cmd->callback([&] {
        run = [&] {
            std::optional<WedgeParams> w;
            MoriSeed seed;
            if (!seed_text.empty()) {
                auto parts = split_commas(seed_text);
                if (parts.size() != 4) throw ValidationError("bad-seed", "--seed needs p1,q1,p2,q2");
                seed = validate_seed(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                                     parse_int(parts[3]));
                if (!a_minus_text.empty())
                    w = validate(seed.p1, seed.q1, seed.p2, seed.q2, 1, parse_rational(a_minus_text));
            } else {
                w = w_mori.get();
                if (!a_minus_text.empty()) w->a = parse_rational(a_minus_text);
                seed = seed_of(*w);
            }
            Json j = to_json(generate(seed, n));
            j["asymptotics"] = to_json(classify_asymptotics(seed));
            if (!l2_text.empty()) {
                if (!w) throw ValidationError("missing-length", "--budget needs --a-minus or a wedge");
                j["budget"] = to_json(budget(*w, parse_rational(l2_text), n));
            }
            emit(out, j);
            return Ok;
        };
    });

    std::string l1_text, anti_l2_text, anti_a_text;
    auto* anti_cmd = app.add_subcommand("antiflip", "initial antiflip, optionally inside bounds");
    w_anti.attach(anti_cmd);
    anti_cmd->add_option("--a-minus", anti_a_text, "length of E after the antiflip")->required();
    anti_cmd->add_option("--l1", l1_text, "left room");
    anti_cmd->add_option("--l2", anti_l2_text, "right room");
    anti_cmd->callback([&] {
        run = [&] {
            WedgeParams plus = w_anti.get();
            BigRational a = parse_rational(anti_a_text);
            if (l1_text.empty() != anti_l2_text.empty())
                throw ValidationError("missing-length", "--l1 and --l2 go together");
            if (l1_text.empty()) {
                emit(out, to_json(initial_antiflip(plus, a)));
                return Ok;
            }
            BigRational l2 = parse_rational(anti_l2_text);
            Json j = to_json(antiflip_in_bounds(plus, parse_rational(l1_text), l2, a));
            j["cap"] = to_json(max_antiflip_param(l2, sigma(plus)));
            emit(out, j);
            return Ok;
        };
    });

    std::string a_plus_text;
    auto* flip_cmd = app.add_subcommand("flip", "flip a K-negative wedge");
    w_flip.attach(flip_cmd);
    flip_cmd->add_option("--a-plus", a_plus_text, "length of E after the flip")->required();
    flip_cmd->callback([&] {
        run = [&] {
            emit(out, to_json(flip(w_flip.get(), parse_rational(a_plus_text))));
            return Ok;
        };
    });

    std::string coh_a_text, coh_l2_text;
    auto* coh_cmd = app.add_subcommand("cohomology", "affine distance of the antiflip path");
    w_coh.attach(coh_cmd);
    coh_cmd->add_option("--a-minus", coh_a_text, "length of E after the antiflip")->required();
    coh_cmd->add_option("--l2", coh_l2_text, "right room")->required();
    coh_cmd->callback([&] {
        run = [&] {
            emit(out, to_json(cohomology_path(w_coh.get(), parse_rational(coh_a_text), parse_rational(coh_l2_text))));
            return Ok;
        };
    });

    auto* chain_cmd = app.add_subcommand("chain", "Hirzebruch-Jung chains");
    chain_cmd->require_subcommand(1);
    std::string chain_text, value_text, script_text;
    std::size_t at = 0;
    auto* eval_cmd = chain_cmd->add_subcommand("eval", "evaluate a chain or marked chain");
    eval_cmd->add_option("chain", chain_text)->required();
    eval_cmd->callback([&] {
        run = [&] {
            Json j;
            if (chain_text.find("]-") != std::string::npos) {
                MarkedChain mc = parse_marked_chain(chain_text);
                j = {{"chain", to_string(mc)}, {"value", to_string(marked_cf(mc))}};
            } else {
                Chain c = parse_chain(chain_text);
                j = {{"chain", to_string(c)}, {"value", to_string(cf_eval(c))}};
                if (auto wp = recognize_wahl(c)) j["wahl"] = Json::array({rat(wp->p), rat(wp->q)});
            }
            emit(out, j);
            return Ok;
        };
    });
    auto* expand_cmd = chain_cmd->add_subcommand("expand", "chain of a rational > 1");
    expand_cmd->add_option("value", value_text)->required();
    expand_cmd->callback([&] {
        run = [&] {
            emit(out, {{"value", to_string(parse_rational(value_text))},
                       {"chain", to_string(cf_expand(parse_rational(value_text)))}});
            return Ok;
        };
    });
    auto* up_cmd = chain_cmd->add_subcommand("blowup", "blow up between positions at-1 and at");
    up_cmd->add_option("chain", chain_text)->required();
    up_cmd->add_option("--at", at)->required();
    up_cmd->callback([&] {
        run = [&] {
            emit(out, {{"chain", to_string(blowup(parse_chain(chain_text), at))}});
            return Ok;
        };
    });
    auto* down_cmd = chain_cmd->add_subcommand("blowdown", "blow down the 1 at index at");
    down_cmd->add_option("chain", chain_text)->required();
    down_cmd->add_option("--at", at)->required();
    down_cmd->callback([&] {
        run = [&] {
            emit(out, {{"chain", to_string(blowdown(parse_chain(chain_text), at))}});
            return Ok;
        };
    });
    auto* replay_cmd = chain_cmd->add_subcommand("replay", "run a move script");
    replay_cmd->add_option("chain", chain_text)->required();
    replay_cmd->add_option("--script", script_text, "JSON array, @file or -")->required();
    replay_cmd->callback([&] {
        run = [&] {
            Chain start = parse_chain(chain_text);
            MoveScript script = script_from_json(parse_json(source_text(script_text)));
            Chain end = replay(start, script);
            Json trail = Json::array();
            Chain cur = start;
            for (std::size_t k = 0; k < script.size(); ++k) {
                cur = replay(cur, MoveScript{script[k]});
                trail.push_back(to_string(cur));
            }
            emit(out, {{"start", to_string(start)}, {"steps", trail}, {"chain", to_string(end)}});
            return Ok;
        };
    });
    auto* splits_cmd = chain_cmd->add_subcommand("splits", "Wahl splits of a chain");
    splits_cmd->add_option("chain", chain_text)->required();
    splits_cmd->callback([&] {
        run = [&] {
            Json arr = Json::array();
            for (const WahlSplit& s : find_wahl_splits(parse_chain(chain_text))) arr.push_back(to_json(s));
            emit(out, {{"chain", chain_text}, {"splits", arr}});
            return Ok;
        };
    });

    std::string scenario_name, scenario_file;
    bool all = false;
    auto* scenario_cmd = app.add_subcommand("scenario", "run a scenario and report PASS/FAIL per check");
    scenario_cmd->add_option("name", scenario_name, "built-in scenario");
    scenario_cmd->add_option("--file", scenario_file, "scenario JSON file");
    scenario_cmd->add_flag("--all", all, "run every built-in scenario");
    scenario_cmd->callback([&] {
        run = [&] {
            std::vector<Scenario> list;
            if (all)
                for (const std::string& name : builtin_scenario_names()) list.push_back(builtin_scenario(name));
            if (!scenario_name.empty()) list.push_back(builtin_scenario(scenario_name));
            if (!scenario_file.empty()) list.push_back(scenario_from_json(parse_json(source_text("@" + scenario_file))));
            if (list.empty()) throw ValidationError("missing-scenario", "name a scenario, --file or --all");
            bool ok = true;
            std::string text;
            Json reports = Json::array();
            for (const Scenario& s : list) {
                ScenarioReport r = run_scenario(s);
                ok = ok && r.ok();
                text += r.text();
                reports.push_back(r.json());
            }
            out.write(out.json ? (list.size() == 1 ? reports[0] : reports).dump(2) + "\n" : text);
            return ok ? Ok : ScenarioFail;
        };
    });

    std::string bounded_text, viewport_text;
    bool cp2 = false;
    std::vector<std::size_t> cuts;
    auto* render_cmd = app.add_subcommand("render", "SVG of a wedge or the CP2 triangle");
    w_render.attach(render_cmd);
    render_cmd->add_option("--bounded", bounded_text, "l1,l2 truncation");
    render_cmd->add_option("--viewport", viewport_text, "xmin,ymin,xmax,ymax");
    render_cmd->add_flag("--cp2", cp2, "the CP2 triangle with three corner cuts");
    render_cmd->add_option("--mutate-cut", cuts, "geometric mutation at cut index, repeatable");
    render_cmd->callback([&] {
        run = [&] {
            GeoPolygon poly;
            if (cp2) {
                poly = cp2_triangle();
            } else {
                WedgeParams w = w_render.get();
                if (bounded_text.empty()) {
                    poly = realize(w);
                } else {
                    auto parts = split_commas(bounded_text);
                    if (parts.size() != 2) throw ValidationError("bad-bounds", "--bounded needs l1,l2");
                    poly = bounded(w, parse_rational(parts[0]), parse_rational(parts[1]));
                }
            }
            for (std::size_t c : cuts) poly = geometric_mutate(poly, c);
            Viewport v = viewport_text.empty() ? auto_viewport(poly) : parse_viewport(viewport_text);
            out.write(render_svg(poly, v));
            return Ok;
        };
    });

    const char* env_bind = std::getenv("ATORIC_BIND");
    std::string bind_text = env_bind ? env_bind : "127.0.0.1:8080", log_dir;
    auto* serve_cmd = app.add_subcommand("serve", "HTTP session service");
    serve_cmd->add_option("--bind", bind_text, "host:port (default ATORIC_BIND or 127.0.0.1:8080)");
    serve_cmd->add_option("--log-dir", log_dir, "append move logs as JSON lines here");
    serve_cmd->callback([&] {
        run = [&] {
            Bind b = parse_bind(bind_text);
            Service svc(log_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(log_dir));
            svc.listen(b, [&](int port) { std::cerr << "listening on " << b.host << ":" << port << std::endl; });
            return Ok;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Invalid;
    }

    try {
        return run();
    } catch (const ValidationError& e) {
        if (out.json) std::cout << error_json(e).dump(2) << "\n";
        std::cerr << "invalid [" << e.code() << "]: " << e.what() << "\n";
        return Invalid;
    } catch (const PreconditionError& e) {
        if (out.json) std::cout << error_json(e).dump(2) << "\n";
        std::cerr << "refused [" << e.code() << "]: " << e.what() << "\n";
        return Refused;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return Internal;
    }
}
