#include "csa/json_io.hpp"

namespace csa {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return j[key].get<int>();
}

IntMatrix get_matrix(const Json& j, int rows, int cols, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) bad(what + " has the wrong shape");
    IntMatrix M(rows, std::vector<int>(cols, 0));
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) bad(what + " has the wrong shape");
        for (int c = 0; c < cols; ++c) {
            if (!j[r][c].is_number_integer()) bad(what + " entries must be integers");
            M[r][c] = j[r][c].get<int>();
        }
    }
    return M;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error&) {
            bad("bad rational '" + j.get<std::string>() + "'");
        }
    }
    bad("coefficient must be an integer or a string p/q");
}

Json half(HalfIndex h) {
    if (h.is_integer()) return h.twice / 2;
    return h.twice / 2.0;
}

}  // namespace

Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        Json odd = Json::array();
        for (int a : mono.odd) odd.push_back(a + 1);
        terms.push_back({{"coef", c.get_str()}, {"even", mono.even}, {"odd", odd}});
    }
    return {{"text", render(p)}, {"terms", terms}};
}

Poly poly_from_json(const Json& j, int n, int m) {
    if (j.is_string()) return parse_poly(j.get<std::string>(), n, m);
    if (j.is_number_integer()) return Poly::constant(n, m, j.get<long>());
    if (!j.is_object()) bad("polynomial must be a string or an object");
    if (!j.contains("terms")) {
        if (j.contains("text") && j["text"].is_string()) return parse_poly(j["text"].get<std::string>(), n, m);
        bad("polynomial object needs 'terms' or 'text'");
    }
    if (!j["terms"].is_array()) bad("'terms' must be an array");
    Poly p(n, m);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coef")) bad("term needs 'coef'");
        Monomial mono;
        mono.even.assign(n, 0);
        if (t.contains("even")) {
            if (!t["even"].is_array() || static_cast<int>(t["even"].size()) != n) bad("'even' must list n exponents");
            for (int i = 0; i < n; ++i) {
                if (!t["even"][i].is_number_integer()) bad("exponents must be integers");
                mono.even[i] = t["even"][i].get<int>();
            }
        }
        std::vector<int> odd;
        if (t.contains("odd")) {
            if (!t["odd"].is_array()) bad("'odd' must be an array");
            for (const auto& a : t["odd"]) {
                if (!a.is_number_integer() || a.get<int>() < 1 || a.get<int>() > m) bad("odd index out of range");
                odd.push_back(a.get<int>() - 1);
            }
        }
        // odd indices may come in any order; multiply out to get the sign
        Poly term = Poly::monomial(n, m, mono, rational_from_json(t["coef"]));
        for (int a : odd) term = term * Poly::variable(n, m, Var::odd_var(a));
        p += term;
    }
    return p;
}

Json to_json(const SRational& f) {
    return {{"text", render(f)}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const ExtendedQuiver& q) {
    Json frozen = Json::array();
    for (int k = 0; k < q.n; ++k)
        if (q.frozen[k]) frozen.push_back(k + 1);
    return {{"n", q.n}, {"m", q.m}, {"B", q.B}, {"N", q.N}, {"frozen", frozen}};
}

ExtendedQuiver quiver_from_json(const Json& j) {
    if (!j.is_object()) bad("quiver must be an object");
    const int n = get_int(j, "n"), m = get_int(j, "m");
    if (n < 0 || m < 0 || n > 64 || m > 64) bad("n and m must lie in 0..64");
    ExtendedQuiver q(n, m);
    if (j.contains("B")) q.B = get_matrix(j["B"], n, n, "B");
    if (j.contains("N")) {
        if (!j["N"].is_array() || static_cast<int>(j["N"].size()) != n) bad("N needs one matrix per even vertex");
        for (int k = 0; k < n; ++k) q.N[k] = get_matrix(j["N"][k], m, m, "N[" + std::to_string(k + 1) + "]");
    }
    auto in_range = [&](int v, int hi) {
        if (v < 1 || v > hi) bad("vertex index out of range");
        return v - 1;
    };
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) bad("'arrows' must be an array");
        for (const auto& a : j["arrows"]) {
            if (!a.is_array() || a.size() < 2 || a.size() > 3) bad("arrow is [i, j, mult?]");
            for (const auto& x : a)
                if (!x.is_number_integer()) bad("arrow entries must be integers");
            q.arrow(in_range(a[0].get<int>(), n), in_range(a[1].get<int>(), n), a.size() == 3 ? a[2].get<int>() : 1);
        }
    }
    if (j.contains("paths")) {
        if (!j["paths"].is_array()) bad("'paths' must be an array");
        for (const auto& p : j["paths"]) {
            if (!p.is_array() || p.size() < 3 || p.size() > 4) bad("path is [i, k, j, mult?]");
            for (const auto& x : p)
                if (!x.is_number_integer()) bad("path entries must be integers");
            q.path(in_range(p[0].get<int>(), m), in_range(p[1].get<int>(), n), in_range(p[2].get<int>(), m),
                   p.size() == 4 ? p[3].get<int>() : 1);
        }
    }
    if (j.contains("frozen")) {
        if (!j["frozen"].is_array()) bad("'frozen' must be an array");
        for (const auto& v : j["frozen"]) {
            if (!v.is_number_integer()) bad("frozen entries must be integers");
            q.freeze(in_range(v.get<int>(), n));
        }
    }
    return q;
}

Json to_json(const Violation& v) {
    return {{"vertex", v.vertex < 0 ? Json(nullptr) : Json(v.vertex + 1)}, {"clause", v.clause}, {"detail", v.detail}};
}

Json to_json(const Seed& s) {
    Json labels = Json::array();
    for (const auto& p : s.labels) labels.push_back(render_fraction(p));
    Json history = Json::array();
    for (int k : s.history) history.push_back(k + 1);
    return {{"quiver", to_json(s.quiver)}, {"labels", labels}, {"history", history}};
}

Seed seed_from_json(const Json& j) {
    if (!j.is_object()) bad("seed must be an object");
    if (!j.contains("quiver")) return initial_seed(quiver_from_json(j));
    ExtendedQuiver q = quiver_from_json(j["quiver"]);
    if (j.contains("values")) {
        if (!j["values"].is_array()) bad("'values' must be an array");
        std::vector<Rational> vals;
        for (const auto& v : j["values"]) vals.push_back(rational_from_json(v));
        return evaluated_seed(q, vals);
    }
    Seed s = initial_seed(q);
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != q.n) bad("need one label per even vertex");
        for (int i = 0; i < q.n; ++i) s.labels[i] = poly_from_json(j["labels"][i], q.n, q.m);
    }
    return s;
}

Json to_json(const Form& w) {
    Json terms = Json::array();
    for (const auto& [word, c] : w.terms()) {
        Json dx = Json::array(), dxi = Json::array();
        for (int i : word.dx) dx.push_back(i + 1);
        for (int a : word.dxi) dxi.push_back(a + 1);
        terms.push_back({{"dx", dx}, {"dxi", dxi}, {"coef", render(c)}});
    }
    return {{"text", render(w)}, {"terms", terms}};
}

Json to_json(const SuperFrieze& f) {
    Json evens = Json::array(), odds = Json::array();
    for (const auto& e : f.evens()) evens.push_back({{"i", e.i}, {"j", e.j}, {"value", render_fraction(e.value)}});
    for (const auto& o : f.odds())
        odds.push_back({{"i", half(o.i)}, {"j", half(o.j)}, {"value", render_fraction(o.value)}});
    return {{"width", f.width()},
            {"range", {f.first_diagonal(), f.last_diagonal()}},
            {"evens", evens},
            {"odds", odds}};
}

Json to_json(const DualNumber& x) { return {{"a", x.a.get_str()}, {"b", x.b.get_str()}}; }

Json to_json(const Dual<LinearForm>& x) { return {{"a", x.a.get_str()}, {"b", to_string(x.b)}}; }

}  // namespace csa
