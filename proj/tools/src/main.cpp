#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "server.hpp"
#include "service.hpp"

using csa::Json;
namespace svc = csa::service;

namespace {

constexpr int kUsage = 2, kDomain = 3, kBreach = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_input(const std::string& path, const std::string& inline_json) {
    std::string text;
    if (!inline_json.empty()) {
        text = inline_json;
    } else if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad vertex list '" + s + "'");
        }
    }
    if (out.empty()) throw UsageError("empty vertex list");
    return out;
}

// Quiver or seed JSON plus the request fields of one subcommand.
Json with_fields(Json base, const Json& extra) {
    if (!base.is_object()) throw UsageError("input must be a JSON object");
    // a bare quiver becomes {"quiver": ...}
    if (!base.contains("quiver")) base = Json{{"quiver", base}};
    for (auto it = extra.begin(); it != extra.end(); ++it) base[it.key()] = it.value();
    return base;
}

void print_labels(const Json& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) std::cout << "x" << i + 1 << " = " << labels[i].get<std::string>() << "\n";
}

void pretty(const std::string& cmd, const Json& out) {
    if (cmd == "quiver validate") {
        if (out["valid"].get<bool>()) std::cout << "valid\n";
        for (const auto& v : out["violations"])
            std::cout << (v["vertex"].is_null() ? std::string("-") : "x" + v["vertex"].dump()) << "  "
                      << v["clause"].get<std::string>() << ": " << v["detail"].get<std::string>() << "\n";
    } else if (cmd == "quiver allowed") {
        if (out.contains("allowed_vertices")) {
            std::cout << "allowed:";
            for (const auto& v : out["allowed_vertices"]) std::cout << " x" << v.get<int>();
            std::cout << "\n";
            return;
        }
        std::cout << "x" << out["vertex"].get<int>() << (out["allowed"].get<bool>() ? " allowed" : " forbidden") << "\n";
        for (const auto& v : out["violations"])
            std::cout << "  after mutation: x" << v["vertex"].dump() << " " << v["detail"].get<std::string>() << "\n";
    } else if (cmd == "quiver mutate") {
        std::cout << out["quiver"].dump() << "\n";
    } else if (cmd == "seed mutate") {
        for (const auto& s : out["steps"])
            std::cout << "mu" << s["vertex"].get<int>() << ": " << s["label"].get<std::string>() << "\n";
        print_labels(out["labels"]);
    } else if (cmd == "seed explore") {
        std::cout << out["nodes"].size() << " seeds, " << out["edges"].size() << " edges, "
                  << out["classical"]["nodes"].size() << " classical clusters\n";
        for (const auto& n : out["nodes"]) {
            std::cout << "[" << n["id"].get<int>() << "] depth " << n["depth"].get<int>() << ":";
            for (const auto& l : n["labels"]) std::cout << "  " << l.get<std::string>();
            std::cout << "\n";
        }
    } else if (cmd == "seed cyclic") {
        int t = 1;
        for (const auto& l : out["labels"]) std::cout << t++ << "  " << l.get<std::string>() << "\n";
    } else if (cmd == "form show" || cmd == "form check") {
        std::cout << out["omega"]["text"].get<std::string>() << "\n";
        if (out.contains("invariant")) std::cout << "invariant: " << (out["invariant"].get<bool>() ? "true" : "false") << "\n";
        else if (out.contains("allowed")) std::cout << "forbidden mutation, defect: " << out["defect"]["text"].get<std::string>() << "\n";
    } else if (cmd == "frieze check") {
        for (auto it = out.begin(); it != out.end(); ++it)
            if (it.key() != "failures") std::cout << it.key() << ": " << it.value().dump() << "\n";
        for (const auto& f : out["failures"]) std::cout << "  " << f.get<std::string>() << "\n";
    } else if (cmd == "seq") {
        const Json &a = out["a"], &b = out["b"];
        std::size_t wa = 1, wb = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            wa = std::max(wa, a[i].get<std::string>().size());
            wb = std::max(wb, b[i].get<std::string>().size());
        }
        std::cout << std::setw(3) << "n" << "  " << std::setw(static_cast<int>(wa)) << "a" << "  "
                  << std::setw(static_cast<int>(wb)) << "b" << "\n";
        for (std::size_t i = 0; i < a.size(); ++i)
            std::cout << std::setw(3) << i << "  " << std::setw(static_cast<int>(wa)) << a[i].get<std::string>() << "  "
                      << std::setw(static_cast<int>(wb)) << b[i].get<std::string>() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
}

// Exit status for results that report a broken invariant rather than throwing.
int result_status(const std::string& cmd, const Json& out) {
    if (cmd == "form check" && out.value("allowed", false) && !out.value("invariant", true)) return kBreach;
    if (cmd == "frieze check") {
        bool ok = out["diamonds_ok"].get<bool>() && out["glide_ok"].get<bool>() && out["diagonal_laws_ok"].get<bool>() &&
                  out.value("schrodinger_ok", true) && out.value("monodromy_ok", true) && out["bridge"]["ok"].get<bool>();
        if (!ok) return kBreach;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster superalgebra toolkit: extended quivers, mutations, presymplectic forms, superfriezes"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty_out = false;
    unsigned seed = 0;
    bool seed_given = false;
    app.add_flag("--pretty", pretty_out, "human-readable output instead of JSON");
    app.add_option_function<unsigned>(
        "--seed", [&](unsigned s) { seed = s; seed_given = true; }, "seed for randomized inputs");

    std::string in_path, inline_json, format = "json";
    int vertex_opt = 0, depth = 3, steps = 8, count = 15, width = 2, k_opt = -1, l_opt = -1, first = 0, last = 0;
    std::string seq_opt, order_opt, values_opt;
    bool random_values = false;

    auto add_input = [&](CLI::App* c) {
        c->add_option("--in", in_path, "input JSON file ('-' for stdin)");
        c->add_option("--json", inline_json, "input JSON given inline");
    };

    std::string cmd;
    Json request;

    auto* quiver = app.add_subcommand("quiver", "extended quiver operations");
    quiver->require_subcommand(1);
    auto* q_validate = quiver->add_subcommand("validate", "check shape, skew-symmetry and Condition C");
    auto* q_mutate = quiver->add_subcommand("mutate", "mutate the quiver at one vertex");
    auto* q_allowed = quiver->add_subcommand("allowed", "is the mutation at a vertex allowed");
    auto* q_dot = quiver->add_subcommand("dot", "Graphviz export");
    for (auto* c : {q_validate, q_mutate, q_allowed, q_dot}) add_input(c);
    q_mutate->add_option("--vertex", vertex_opt, "1-based even vertex")->required();
    q_allowed->add_option("--vertex", vertex_opt, "1-based even vertex; omit to list all allowed");

    auto* seed_cmd = app.add_subcommand("seed", "seeds and exchange relations");
    seed_cmd->require_subcommand(1);
    auto* s_mutate = seed_cmd->add_subcommand("mutate", "mutate the seed at a vertex or along a sequence");
    auto* s_explore = seed_cmd->add_subcommand("explore", "breadth-first exchange graph");
    auto* s_cyclic = seed_cmd->add_subcommand("cyclic", "cyclic mutation run");
    for (auto* c : {s_mutate, s_explore, s_cyclic}) add_input(c);
    auto* s_vertex = s_mutate->add_option("--vertex", vertex_opt, "1-based even vertex");
    s_mutate->add_option("--sequence", seq_opt, "comma-separated vertices, e.g. 1,2,1")->excludes(s_vertex);
    s_explore->add_option("--depth", depth, "search depth")->check(CLI::Range(0, 12));
    s_cyclic->add_option("--order", order_opt, "comma-separated vertex order")->required();
    s_cyclic->add_option("--steps", steps, "number of mutations")->check(CLI::Range(0, 64));

    auto* form = app.add_subcommand("form", "presymplectic form");
    form->require_subcommand(1);
    auto* f_show = form->add_subcommand("show", "print omega");
    auto* f_check = form->add_subcommand("check", "invariance under one mutation");
    for (auto* c : {f_show, f_check}) add_input(c);
    f_check->add_option("--vertex", vertex_opt, "1-based even vertex")->required();

    auto* frieze = app.add_subcommand("frieze", "superfriezes");
    frieze->require_subcommand(1);
    auto* fr_build = frieze->add_subcommand("build", "build a frieze from its initial diagonal");
    auto* fr_check = frieze->add_subcommand("check", "diamond, glide, monodromy and cluster checks");
    for (auto* c : {fr_build, fr_check}) {
        c->add_option("--width", width, "width m")->check(CLI::Range(1, 8));
        c->add_option("--values", values_opt, "comma-separated rationals for x1..xm (symbolic if omitted)");
        c->add_flag("--random-values", random_values, "random rational diagonal (see --seed)");
        c->add_option("--first", first, "first diagonal (default -(m+3))");
        c->add_option("--last", last, "last diagonal (default 2(m+3))");
    }
    fr_build->add_option("--format", format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));

    auto* seq = app.add_subcommand("seq", "integer sequences in dual numbers");
    seq->require_subcommand(1);
    std::string seq_kind;
    for (const char* kind : {"somos", "somos2", "fib", "kron"}) {
        auto* c = seq->add_subcommand(kind, std::string(kind) + " sequence");
        c->add_option("--count", count, "number of terms")->check(CLI::Range(0, 200));
        if (std::string(kind) == "kron") {
            c->add_option("--k", k_opt, "2-path count at the first vertex (symbolic if omitted)");
            c->add_option("--l", l_opt, "2-path count at the second vertex");
        }
        c->callback([&seq_kind, kind] { seq_kind = kind; });
    }

    auto* serve = app.add_subcommand("serve", "JSON over HTTP");
    std::string host = "127.0.0.1";
    int port = 8080;
    serve->add_option("--host", host, "bind address");
    serve->add_option("--port", port, "port, 0 for any")->check(CLI::Range(0, 65535));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (serve->parsed()) return svc::serve(host, port);

        Json out;
        std::string text_out;
        if (quiver->parsed()) {
            Json input = read_input(in_path, inline_json);
            if (q_validate->parsed()) {
                cmd = "quiver validate";
                out = svc::validate(with_fields(input, Json::object()));
            } else if (q_allowed->parsed()) {
                cmd = "quiver allowed";
                Json extra = Json::object();
                if (vertex_opt) extra["vertex"] = vertex_opt;
                out = svc::allowed(with_fields(input, extra));
            } else if (q_mutate->parsed()) {
                cmd = "quiver mutate";
                out = svc::mutate_quiver(with_fields(input, {{"vertex", vertex_opt}}));
            } else {
                text_out = csa::to_dot(csa::quiver_from_json(input.contains("quiver") ? input["quiver"] : input));
            }
        } else if (seed_cmd->parsed()) {
            Json input = read_input(in_path, inline_json);
            if (s_mutate->parsed()) {
                cmd = "seed mutate";
                Json extra = Json::object();
                if (!seq_opt.empty()) extra["sequence"] = parse_list(seq_opt);
                else if (vertex_opt) extra["vertex"] = vertex_opt;
                else throw UsageError("seed mutate needs --vertex or --sequence");
                out = svc::mutate(with_fields(input, extra));
            } else if (s_explore->parsed()) {
                cmd = "seed explore";
                out = svc::explore(with_fields(input, {{"depth", depth}}));
            } else {
                cmd = "seed cyclic";
                out = svc::cyclic(with_fields(input, {{"order", parse_list(order_opt)}, {"steps", steps}}));
            }
        } else if (form->parsed()) {
            Json input = read_input(in_path, inline_json);
            if (f_show->parsed()) {
                cmd = "form show";
                out = svc::omega(with_fields(input, Json::object()));
            } else {
                cmd = "form check";
                out = svc::omega(with_fields(input, {{"vertex", vertex_opt}}));
            }
        } else if (frieze->parsed()) {
            Json req{{"width", width}};
            if (first != 0 || last != 0) {
                req["first"] = first;
                req["last"] = last;
            }
            if (!values_opt.empty()) {
                Json vals = Json::array();
                std::stringstream ss(values_opt);
                std::string item;
                while (std::getline(ss, item, ',')) vals.push_back(item);
                req["values"] = vals;
            } else if (random_values) {
                req["random_seed"] = seed_given ? seed : 0u;
            }
            if (fr_build->parsed()) {
                cmd = "frieze build";
                if (format == "json" && !pretty_out) {
                    out = svc::frieze(req);
                } else {
                    csa::SuperFrieze f = svc::frieze_of(req);
                    text_out = format == "csv" ? csa::render_csv(f) : csa::render_text(f);
                }
            } else {
                cmd = "frieze check";
                out = svc::frieze_check(req);
            }
        } else if (seq->parsed()) {
            cmd = "seq";
            Json req{{"kind", seq_kind}, {"count", count}};
            if (k_opt >= 0 || l_opt >= 0) {
                req["k"] = std::max(k_opt, 0);
                req["l"] = std::max(l_opt, 0);
            }
            out = svc::sequence(req);
        }

        if (!text_out.empty()) std::cout << text_out;
        else if (pretty_out) pretty(cmd, out);
        else std::cout << out.dump(2) << "\n";
        return result_status(cmd, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const csa::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        if (svc::is_malformed(e.code())) return kUsage;
        return csa::is_invariant_breach(e.code()) ? kBreach : kDomain;
    }
}
