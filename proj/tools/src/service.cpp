#include "service.hpp"

#include <map>
#include <random>

namespace csa::service {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& req, const char* key) {
    if (!req.is_object() || !req.contains(key)) bad(std::string("missing field '") + key + "'");
    return req[key];
}

int get_int(const Json& req, const char* key) {
    const Json& v = field(req, key);
    if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

int get_int_or(const Json& req, const char* key, int fallback) {
    return req.is_object() && req.contains(key) ? get_int(req, key) : fallback;
}

// 1-based index from the request, checked against n.
int vertex(const Json& req, int n, const char* key = "vertex") {
    int v = get_int(req, key);
    if (v < 1 || v > n) bad(std::string("'") + key + "' must lie in 1.." + std::to_string(n));
    return v - 1;
}

std::vector<int> vertex_list(const Json& j, int n, const char* key) {
    if (!j.is_array()) bad(std::string("'") + key + "' must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > n)
            bad(std::string("entries of '") + key + "' must lie in 1.." + std::to_string(n));
        out.push_back(v.get<int>() - 1);
    }
    return out;
}

ExtendedQuiver quiver_of(const Json& req) {
    return quiver_from_json(req.is_object() && req.contains("quiver") ? req["quiver"] : req);
}

Json violations_json(const std::vector<Violation>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

Json allowed_vertices(const ExtendedQuiver& q) {
    Json out = Json::array();
    for (int k = 0; k < q.n; ++k)
        if (!q.frozen[k] && is_allowed(q, k)) out.push_back(k + 1);
    return out;
}

Json lemma_json(const ExtendedQuiver& q, int k) {
    try {
        return lemma_check(q, k);
    } catch (const Error&) {
        return nullptr;  // lemma not applicable (multiplicities beyond one or invalid input)
    }
}

Json dual_column(const std::vector<DualNumber>& seq, bool b_part) {
    Json out = Json::array();
    for (const auto& x : seq) out.push_back((b_part ? x.b : x.a).get_str());
    return out;
}

}  // namespace

bool is_malformed(ErrorCode code) {
    return code == ErrorCode::InvalidInput || code == ErrorCode::ParseError || code == ErrorCode::ArityMismatch;
}

Json error_body(const Error& e) { return {{"error", e.name()}, {"message", e.what()}}; }

Json validate(const Json& req) {
    ExtendedQuiver q = quiver_of(req);
    auto vs = csa::validate(q);
    return {{"valid", vs.empty()}, {"violations", violations_json(vs)}};
}

Json allowed(const Json& req) {
    ExtendedQuiver q = quiver_of(req);
    auto vs = csa::validate(q);
    if (!vs.empty()) throw Error(ErrorCode::ConditionCViolated, "quiver is not valid: " + vs.front().detail);
    if (!req.contains("vertex")) return {{"allowed_vertices", allowed_vertices(q)}};
    int k = vertex(req, q.n);
    if (q.frozen[k]) return {{"vertex", k + 1}, {"allowed", false}, {"frozen", true}, {"violations", Json::array()}};
    auto after = csa::validate(csa::mutate_quiver(q, k));
    return {{"vertex", k + 1},
            {"allowed", after.empty()},
            {"violations", violations_json(after)},
            {"lemma", lemma_json(q, k)}};
}

Json mutate(const Json& req) {
    Seed s = seed_from_json(req);
    std::vector<int> ks;
    if (req.contains("sequence")) ks = vertex_list(req["sequence"], s.quiver.n, "sequence");
    else ks.push_back(vertex(req, s.quiver.n));
    Json steps = Json::array();
    for (int k : ks) {
        s = mutate_seed(s, k);
        steps.push_back({{"vertex", k + 1}, {"label", render_fraction(s.labels[k])}});
    }
    Json out = to_json(s);
    out["label"] = steps.back()["label"];
    out["steps"] = steps;
    out["diagnostics"] = {{"valid", csa::validate(s.quiver).empty()}, {"allowed_next", allowed_vertices(s.quiver)}};
    return out;
}

Json mutate_quiver(const Json& req) {
    ExtendedQuiver q = quiver_of(req);
    int k = vertex(req, q.n);
    if (!is_allowed(q, k)) throw Error(ErrorCode::MutationForbidden, "mutation at x" + std::to_string(k + 1) + " is not allowed");
    ExtendedQuiver r = csa::mutate_quiver(q, k);
    return {{"quiver", to_json(r)}, {"allowed_next", allowed_vertices(r)}};
}

Json explore(const Json& req) {
    Seed s = seed_from_json(req);
    int depth = get_int_or(req, "depth", 3);
    if (depth < 0 || depth > 12) bad("'depth' must lie in 0..12");
    ExchangeGraph g = csa::explore(s, depth);
    Json nodes = Json::array(), edges = Json::array(), diags = Json::array(), classical = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        Json labels = Json::array();
        for (const auto& p : g.nodes[i].labels) labels.push_back(render_fraction(p));
        nodes.push_back({{"id", i}, {"depth", g.depth[i]}, {"labels", labels}});
    }
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"vertex", e.vertex + 1}});
    for (const auto& d : g.diagnostics) diags.push_back({{"node", d.node}, {"vertex", d.vertex + 1}, {"error", d.error}});
    for (const auto& c : g.classical_nodes) {
        Json labels = Json::array();
        for (const auto& p : c) labels.push_back(render_fraction(p));
        classical.push_back(labels);
    }
    return {{"nodes", nodes},
            {"edges", edges},
            {"diagnostics", diags},
            {"classical", {{"nodes", classical}, {"edge_count", g.classical_edges.size()}}}};
}

Json cyclic(const Json& req) {
    Seed s = seed_from_json(req);
    std::vector<int> order = vertex_list(field(req, "order"), s.quiver.n, "order");
    int steps = get_int(req, "steps");
    if (steps < 0 || steps > 64) bad("'steps' must lie in 0..64");
    Json labels = Json::array();
    for (const auto& p : run_cyclic(s, order, steps)) labels.push_back(render_fraction(p));
    return {{"labels", labels}};
}

Json omega(const Json& req) {
    ExtendedQuiver q = quiver_of(req);
    Json out = {{"omega", to_json(omega_of(q))}};
    if (req.contains("vertex")) {
        int k = vertex(req, q.n);
        if (!is_allowed(q, k)) {
            out["vertex"] = k + 1;
            out["allowed"] = false;
            out["defect"] = to_json(invariance_defect(q, k));
            return out;
        }
        Form defect = invariance_defect(q, k);
        out["vertex"] = k + 1;
        out["allowed"] = true;
        out["invariant"] = defect.is_zero();
        out["defect"] = to_json(defect);
    }
    return out;
}

SuperFrieze frieze_of(const Json& req) {
    int m = get_int(req, "width");
    if (m < 1 || m > 8) bad("'width' must lie in 1..8");
    int first = get_int_or(req, "first", -(m + 3));
    int last = get_int_or(req, "last", 2 * (m + 3));
    if (first > 0 || last < 0 || last - first > 64) bad("range must contain 0 and span at most 64 diagonals");
    if (!req.contains("values") && !req.contains("random_seed")) return symbolic_frieze(m, first, last);
    std::vector<Poly> xs, xis;
    if (req.contains("values")) {
        const Json& v = req["values"];
        if (!v.is_array() || static_cast<int>(v.size()) != m) bad("'values' needs one entry per even vertex");
        for (const auto& x : v) xs.push_back(poly_from_json(x, 0, m + 1));
    } else {
        if (!req["random_seed"].is_number_unsigned()) bad("'random_seed' must be a non-negative integer");
        std::mt19937 rng(req["random_seed"].get<unsigned>());
        std::uniform_int_distribution<int> num(1, 9), den(1, 5);
        for (int k = 0; k < m; ++k) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            xs.push_back(Poly::constant(0, m + 1, r));
        }
    }
    for (int a = 0; a <= m; ++a) xis.push_back(Poly::variable(0, m + 1, Var::odd_var(a)));
    return build_frieze(m, xs, xis, first, last);
}

namespace {

Json checks_json(const SuperFrieze& f) {
    auto diamonds = check_diamonds(f);
    GlideReport g = check_glide(f);
    auto laws = check_diagonal_laws(f);
    Json failures = Json::array();
    for (const auto& d : diamonds)
        for (const auto& r : d.residuals)
            failures.push_back("diamond at f(" + std::to_string(d.i) + "," + std::to_string(d.j) + "): " + r);
    for (const auto& s : g.failures) failures.push_back("glide: " + s);
    for (const auto& s : laws) failures.push_back("diagonal law: " + s);
    return {{"diamonds_ok", diamonds.empty()},
            {"glide_ok", g.glide},
            {"glide_checked", g.checked},
            {"period", g.period},
            {"diagonal_laws_ok", laws.empty()},
            {"failures", failures}};
}

}  // namespace

Json frieze(const Json& req) {
    if (req.is_object() && req.contains("mode")) {
        if (req["mode"] == "check") return frieze_check(req);
        if (req["mode"] != "build") bad("'mode' is 'build' or 'check'");
    }
    SuperFrieze f = frieze_of(req);
    Json out = to_json(f);
    out["checks"] = checks_json(f);
    return out;
}

Json frieze_check(const Json& req) {
    SuperFrieze f = frieze_of(req);
    Json out = checks_json(f);
    int m = f.width();
    out["width"] = m;
    if (f.first_diagonal() <= 0 && f.last_diagonal() >= m + 2) {
        SchrodingerEq eq = schrodinger_extract(f);
        OSpMatrix M = monodromy(eq);
        out["schrodinger_ok"] = verify_solutions(f, eq).empty();
        out["monodromy_ok"] = is_frieze_monodromy(M);
    }
    std::vector<Rational> vals;
    if (req.contains("values"))
        for (const auto& v : req["values"]) vals.push_back(poly_from_json(v, 0, m + 1).constant_term());
    BridgeReport b = frieze_vs_cluster(m, vals);
    Json sink = Json::array();
    for (int k : b.sink_allowed) sink.push_back(k);
    out["bridge"] = {{"ok", b.ok}, {"failed_step", b.failed_k}, {"detail", b.detail}, {"sink_allowed", sink}};
    return out;
}

Json sequence(const Json& req) {
    if (!field(req, "kind").is_string()) bad("'kind' must be a string");
    std::string kind = req["kind"].get<std::string>();
    int count = get_int_or(req, "count", 15);
    if (count < 0 || count > 200) bad("'count' must lie in 0..200");
    if (kind == "somos" || kind == "somos2" || kind == "fib") {
        auto seq = kind == "somos" ? somos4_ext(count) : kind == "somos2" ? somos4_ext_variant(count) : fib_ext(count);
        return {{"kind", kind}, {"count", count}, {"a", dual_column(seq, false)}, {"b", dual_column(seq, true)}};
    }
    if (kind == "kron") {
        if (req.contains("k") || req.contains("l")) {
            int k = get_int(req, "k"), l = get_int(req, "l");
            if (k < 0 || l < 0 || k > 100 || l > 100) bad("'k' and 'l' must lie in 0..100");
            auto seq = kronecker_family(k, l, count);
            return {{"kind", kind}, {"count", count}, {"k", k}, {"l", l},
                    {"a", dual_column(seq, false)}, {"b", dual_column(seq, true)}};
        }
        auto fam = kronecker_family(count);
        Json a = Json::array(), b = Json::array();
        for (const auto& x : fam) {
            a.push_back(x.a.get_str());
            b.push_back(to_string(x.b));
        }
        return {{"kind", kind}, {"count", count}, {"a", a}, {"b", b}};
    }
    bad("unknown sequence kind '" + kind + "' (somos, somos2, fib, kron)");
}

Response dispatch(const std::string& route, const std::string& body) {
    static const std::map<std::string, Json (*)(const Json&)> routes{
        {"/validate", &validate}, {"/allowed", &allowed}, {"/mutate", &mutate},
        {"/omega", &omega},       {"/frieze", &frieze},   {"/sequence", &sequence},
    };
    auto it = routes.find(route);
    if (it == routes.end()) return {404, {{"error", "NotFound"}, {"message", "no route " + route}}};
    Json req;
    try {
        req = Json::parse(body);
    } catch (const Json::exception& e) {
        return {400, {{"error", "MalformedJSON"}, {"message", e.what()}}};
    }
    try {
        return {200, it->second(req)};
    } catch (const Error& e) {
        return {is_malformed(e.code()) ? 400 : 422, error_body(e)};
    } catch (const Json::exception& e) {
        return {400, {{"error", "MalformedJSON"}, {"message", e.what()}}};
    }
}

}  // namespace csa::service
