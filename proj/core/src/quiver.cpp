#include "csa/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace csa {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

std::string set_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + idx(s[i]);
    return out + "}";
}

void check_vertex(const ExtendedQuiver& q, int k) {
    if (k < 0 || k >= q.n)
        throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(k) + " out of range");
}

}  // namespace

ExtendedQuiver::ExtendedQuiver(int n_, int m_)
    : n(n_), m(m_), B(n_, std::vector<int>(n_, 0)),
      N(n_, IntMatrix(m_, std::vector<int>(m_, 0))), frozen(n_, false) {}

ExtendedQuiver& ExtendedQuiver::arrow(int i, int j, int mult) {
    B[i][j] += mult;
    B[j][i] -= mult;
    return *this;
}

ExtendedQuiver& ExtendedQuiver::path(int i, int k, int j, int mult) {
    N[k][i][j] += mult;
    N[k][j][i] -= mult;
    return *this;
}

ExtendedQuiver& ExtendedQuiver::freeze(int k) {
    frozen[k] = true;
    return *this;
}

std::optional<Rectangle> decompose(const IntMatrix& Nk) {
    Rectangle r;
    std::set<int> I, J;
    for (std::size_t i = 0; i < Nk.size(); ++i)
        for (std::size_t j = 0; j < Nk[i].size(); ++j)
            if (Nk[i][j] > 0) {
                I.insert(static_cast<int>(i));
                J.insert(static_cast<int>(j));
                if (r.t == 0) r.t = Nk[i][j];
            }
    r.I.assign(I.begin(), I.end());
    r.J.assign(J.begin(), J.end());
    for (int i : r.I)
        if (J.count(i)) return std::nullopt;
    for (int i : r.I)
        for (int j : r.J)
            if (Nk[i][j] != r.t) return std::nullopt;
    return r;
}

std::vector<Violation> validate(const ExtendedQuiver& q) {
    std::vector<Violation> out;
    if (q.n < 0 || q.m < 0) return {{-1, "shape", "negative vertex count"}};
    if (static_cast<int>(q.B.size()) != q.n ||
        std::any_of(q.B.begin(), q.B.end(), [&](const auto& r) { return static_cast<int>(r.size()) != q.n; }))
        out.push_back({-1, "shape", "B must be n x n"});
    if (static_cast<int>(q.N.size()) != q.n)
        out.push_back({-1, "shape", "N must hold one matrix per even vertex"});
    if (static_cast<int>(q.frozen.size()) != q.n)
        out.push_back({-1, "shape", "frozen flags must have length n"});
    for (const auto& Nk : q.N)
        if (static_cast<int>(Nk.size()) != q.m ||
            std::any_of(Nk.begin(), Nk.end(), [&](const auto& r) { return static_cast<int>(r.size()) != q.m; })) {
            out.push_back({-1, "shape", "each N_k must be m x m"});
            break;
        }
    if (!out.empty()) return out;

    for (int i = 0; i < q.n; ++i) {
        if (q.B[i][i] != 0) out.push_back({i, "B-loop", "loop at x" + idx(i)});
        for (int j = i + 1; j < q.n; ++j)
            if (q.B[i][j] != -q.B[j][i])
                out.push_back({i, "B-skew", "B[" + idx(i) + "][" + idx(j) + "] != -B[" + idx(j) + "][" + idx(i) + "]"});
    }
    for (int k = 0; k < q.n; ++k) {
        const auto& Nk = q.N[k];
        bool skew = true;
        for (int i = 0; i < q.m && skew; ++i)
            for (int j = i; j < q.m; ++j)
                if (Nk[i][j] != -Nk[j][i]) {
                    out.push_back({k, "N-skew", "N_" + idx(k) + " is not skew-symmetric"});
                    skew = false;
                    break;
                }
        if (!skew) continue;
        Rectangle r;
        std::set<int> I, J;
        for (int i = 0; i < q.m; ++i)
            for (int j = 0; j < q.m; ++j)
                if (Nk[i][j] > 0) {
                    I.insert(i);
                    J.insert(j);
                }
        std::vector<int> common;
        std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(common));
        r.I.assign(I.begin(), I.end());
        r.J.assign(J.begin(), J.end());
        if (!common.empty()) {
            out.push_back({k, "condition-C-disjoint",
                           "I_" + idx(k) + "=" + set_str(r.I) + " and J_" + idx(k) + "=" + set_str(r.J) +
                               " intersect in " + set_str(common)});
            continue;
        }
        if (!decompose(Nk)) {
            std::string missing;
            for (int i : r.I)
                for (int j : r.J)
                    if (Nk[i][j] <= 0) missing += " (" + idx(i) + "," + idx(j) + ")";
            std::string detail = "I_" + idx(k) + "=" + set_str(r.I) + ", J_" + idx(k) + "=" + set_str(r.J);
            if (!missing.empty())
                detail += " not fully connected, missing" + missing;
            else
                detail += " connected with unequal multiplicities";
            out.push_back({k, "condition-C-rectangle", detail});
        }
    }
    return out;
}

Rectangle rectangle_at(const ExtendedQuiver& q, int k) {
    check_vertex(q, k);
    auto r = decompose(q.N[k]);
    if (!r) throw Error(ErrorCode::ConditionCViolated, "Condition C fails at x" + idx(k));
    return *r;
}

ExtendedQuiver mutate_quiver(const ExtendedQuiver& q, int k) {
    check_vertex(q, k);
    if (q.frozen[k]) throw Error(ErrorCode::FrozenVertex, "x" + idx(k) + " is frozen");
    ExtendedQuiver r = q;
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            if (i == k || j == k) {
                r.B[i][j] = -q.B[i][j];
            } else {
                int bik = q.B[i][k], bkj = q.B[k][j];
                r.B[i][j] = q.B[i][j] + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
        }
    for (int l = 0; l < q.n; ++l) {
        int mult = q.B[k][l];
        if (mult <= 0) continue;
        for (int i = 0; i < q.m; ++i)
            for (int j = 0; j < q.m; ++j) r.N[l][i][j] += mult * q.N[k][i][j];
    }
    for (auto& row : r.N[k])
        for (int& v : row) v = -v;
    return r;
}

bool is_allowed(const ExtendedQuiver& q, int k) {
    return validate(mutate_quiver(q, k)).empty();
}

bool lemma_check(const ExtendedQuiver& q, int k) {
    check_vertex(q, k);
    for (const auto& Nk : q.N)
        for (const auto& row : Nk)
            for (int v : row)
                if (v < -1 || v > 1)
                    throw Error(ErrorCode::MultiplicityOutOfRange, "2-path multiplicity outside {-1,0,1}");
    Rectangle rk = rectangle_at(q, k);
    for (int l = 0; l < q.n; ++l) {
        if (q.B[k][l] <= 0) continue;
        Rectangle rl = rectangle_at(q, l);
        bool ok = rk.I == rl.I || rk.J == rl.J || (rk.I.empty() && rk.J.empty()) ||
                  (rk.I == rl.J && rk.J == rl.I) || (rl.I.empty() && rl.J.empty());
        if (!ok) return false;
    }
    return true;
}

Poly raw_odd_term(const ExtendedQuiver& q, int k, int n_target) {
    check_vertex(q, k);
    Poly p = Poly::constant(n_target, q.m, 1);
    for (int i = 0; i < q.m; ++i)
        for (int j = 0; j < q.m; ++j)
            if (q.N[k][i][j] > 0)
                p += Poly::variable(n_target, q.m, Var::odd_var(i)) *
                     Poly::variable(n_target, q.m, Var::odd_var(j)) * Rational(q.N[k][i][j]);
    return p;
}

Poly odd_term(const ExtendedQuiver& q, int k, int n_target) {
    rectangle_at(q, k);
    return raw_odd_term(q, k, n_target);
}

Poly odd_term(const ExtendedQuiver& q, int k) { return odd_term(q, k, q.n); }

Seed initial_seed(const ExtendedQuiver& q) {
    Seed s{q, {}, {}};
    for (int i = 0; i < q.n; ++i) s.labels.push_back(Poly::variable(q.n, q.m, Var::even(i)));
    return s;
}

Seed evaluated_seed(const ExtendedQuiver& q, const std::vector<Rational>& values) {
    if (static_cast<int>(values.size()) != q.n)
        throw Error(ErrorCode::InvalidInput, "need one value per even vertex");
    Seed s{q, {}, {}};
    for (const auto& v : values) s.labels.push_back(Poly::constant(0, q.m, v));
    return s;
}

namespace {

template <class T, class Pow, class One>
std::pair<T, T> exchange_monomials(const ExtendedQuiver& q, const std::vector<T>& labels, int k,
                                   Pow power, One one) {
    T out = one(), in = one();
    for (int j = 0; j < q.n; ++j) {
        if (q.B[k][j] > 0) out = out * power(labels[j], q.B[k][j]);
        if (q.B[j][k] > 0) in = in * power(labels[j], q.B[j][k]);
    }
    return {out, in};
}

}  // namespace

Poly exchange_numerator(const ExtendedQuiver& q, const std::vector<Poly>& labels, int k) {
    check_vertex(q, k);
    const int nl = labels.at(0).n();
    auto [out, in] = exchange_monomials<Poly>(
        q, labels, k, [](const Poly& p, int e) { return pow(p, e); },
        [&] { return Poly::constant(nl, q.m, 1); });
    return out + odd_term(q, k, nl) * in;
}

Seed mutate_seed(const Seed& s, int k) {
    check_vertex(s.quiver, k);
    if (s.quiver.frozen[k]) throw Error(ErrorCode::FrozenVertex, "x" + idx(k) + " is frozen");
    if (!is_allowed(s.quiver, k))
        throw Error(ErrorCode::MutationForbidden, "mutation at x" + idx(k) + " is not allowed");
    Poly numer = exchange_numerator(s.quiver, s.labels, k);
    auto label = try_exact_div(numer, s.labels[k]);
    if (!label)
        throw Error(ErrorCode::NonLaurent, "exchange at x" + idx(k) + " is not a Laurent polynomial");
    Seed r{mutate_quiver(s.quiver, k), s.labels, s.history};
    r.labels[k] = std::move(*label);
    r.history.push_back(k);
    return r;
}

Seed mutate_sequence(Seed s, const std::vector<int>& ks) {
    for (int k : ks) s = mutate_seed(s, k);
    return s;
}

RationalSeed initial_rational_seed(const ExtendedQuiver& q) {
    RationalSeed s{q, {}, {}};
    for (int i = 0; i < q.n; ++i) s.labels.emplace_back(Poly::variable(q.n, q.m, Var::even(i)));
    return s;
}

RationalSeed mutate_seed_rational(const RationalSeed& s, int k) {
    const auto& q = s.quiver;
    check_vertex(q, k);
    if (q.frozen[k]) throw Error(ErrorCode::FrozenVertex, "x" + idx(k) + " is frozen");
    const int nl = s.labels.at(0).n();
    auto power = [](const SRational& f, int e) {
        SRational r(Poly::constant(f.n(), f.m(), 1));
        for (int i = 0; i < e; ++i) r = r * f;
        return r;
    };
    auto [out, in] = exchange_monomials<SRational>(
        q, s.labels, k, power, [&] { return SRational(Poly::constant(nl, q.m, 1)); });
    SRational numer = out + SRational(raw_odd_term(q, k, nl)) * in;
    const SRational& old = s.labels[k];
    if (!old.num().is_even() || old.num().body().is_zero())
        throw Error(ErrorCode::ZeroBodyDenominator, "label at x" + idx(k) + " is not invertible");
    RationalSeed r{mutate_quiver(q, k), s.labels, s.history};
    r.labels[k] = numer / old;
    r.history.push_back(k);
    return r;
}

namespace {

std::string seed_key(const Seed& s) {
    std::ostringstream os;
    for (const auto& row : s.quiver.B)
        for (int v : row) os << v << ',';
    os << '|';
    for (const auto& Nk : s.quiver.N)
        for (const auto& row : Nk)
            for (int v : row) os << v << ',';
    os << '|';
    for (const auto& l : s.labels) os << render(l) << ';';
    return os.str();
}

std::vector<Poly> classical_cluster(const Seed& s) {
    std::vector<Poly> c;
    for (const auto& l : s.labels) c.push_back(l.body());
    std::sort(c.begin(), c.end(), [](const Poly& a, const Poly& b) { return render(a) < render(b); });
    return c;
}

std::string cluster_key(const std::vector<Poly>& c) {
    std::string k;
    for (const auto& p : c) k += render(p) + ";";
    return k;
}

}  // namespace

ExchangeGraph explore(const Seed& s, int depth) {
    ExchangeGraph g;
    std::map<std::string, int> index;
    std::map<std::string, int> cindex;
    std::set<std::tuple<int, int, int>> cedges;
    auto add_classical = [&](const Seed& seed) {
        auto c = classical_cluster(seed);
        auto key = cluster_key(c);
        auto [it, inserted] = cindex.try_emplace(key, static_cast<int>(g.classical_nodes.size()));
        if (inserted) g.classical_nodes.push_back(std::move(c));
        return it->second;
    };
    index[seed_key(s)] = 0;
    g.nodes.push_back(s);
    g.depth.push_back(0);
    add_classical(s);
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        if (g.depth[cur] >= depth) continue;
        for (int k = 0; k < s.quiver.n; ++k) {
            const Seed& node = g.nodes[cur];
            if (node.quiver.frozen[k] || !is_allowed(node.quiver, k)) continue;
            Seed next;
            try {
                next = mutate_seed(node, k);
            } catch (const Error& e) {
                g.diagnostics.push_back({cur, k, e.name()});
                continue;
            }
            int from_c = add_classical(g.nodes[cur]);
            int to_c = add_classical(next);
            if (from_c != to_c && !cedges.count({std::min(from_c, to_c), std::max(from_c, to_c), k})) {
                cedges.insert({std::min(from_c, to_c), std::max(from_c, to_c), k});
                g.classical_edges.push_back({std::min(from_c, to_c), std::max(from_c, to_c), k});
            }
            auto key = seed_key(next);
            auto it = index.find(key);
            int to;
            if (it == index.end()) {
                to = static_cast<int>(g.nodes.size());
                index.emplace(std::move(key), to);
                g.depth.push_back(g.depth[cur] + 1);
                g.nodes.push_back(std::move(next));
                frontier.push_back(to);
            } else {
                to = it->second;
            }
            g.edges.push_back({cur, to, k});
        }
    }
    return g;
}

std::vector<Poly> run_cyclic(const Seed& s, const std::vector<int>& order, int steps) {
    if (order.empty()) throw Error(ErrorCode::InvalidInput, "empty mutation order");
    std::vector<Poly> stream;
    Seed cur = s;
    for (int t = 0; t < steps; ++t) {
        int k = order[t % order.size()];
        cur = mutate_seed(cur, k);
        stream.push_back(cur.labels[k]);
    }
    return stream;
}

int quiver_orbit_period(const ExtendedQuiver& q, const std::vector<int>& order, int max_steps) {
    ExtendedQuiver cur = q;
    for (int t = 1; t <= max_steps; ++t) {
        cur = mutate_quiver(cur, order[(t - 1) % order.size()]);
        if (cur == q && t % static_cast<int>(order.size()) == 0) return t;
    }
    return 0;
}

std::string to_dot(const ExtendedQuiver& q) {
    std::ostringstream os;
    os << "digraph extended_quiver {\n";
    for (int i = 0; i < q.n; ++i)
        os << "  x" << idx(i) << " [shape=box" << (q.frozen[i] ? ", style=dashed" : "") << "];\n";
    for (int a = 0; a < q.m; ++a)
        os << "  xi" << idx(a) << " [shape=circle, style=filled, fillcolor=red, label=\"X" << idx(a) << "\"];\n";
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            if (q.B[i][j] > 0)
                os << "  x" << idx(i) << " -> x" << idx(j) << " [multiplicity=" << q.B[i][j]
                   << ", label=\"" << q.B[i][j] << "\"];\n";
    for (int k = 0; k < q.n; ++k)
        for (int i = 0; i < q.m; ++i)
            for (int j = 0; j < q.m; ++j)
                if (q.N[k][i][j] > 0) {
                    std::string group = "x" + idx(k) + ":" + idx(i) + ">" + idx(j);
                    os << "  xi" << idx(i) << " -> x" << idx(k) << " [color=red, path_group=\"" << group
                       << "\", multiplicity=" << q.N[k][i][j] << "];\n";
                    os << "  x" << idx(k) << " -> xi" << idx(j) << " [color=red, path_group=\"" << group
                       << "\", multiplicity=" << q.N[k][i][j] << "];\n";
                }
    os << "}\n";
    return os.str();
}

namespace quivers {
ExtendedQuiver path_a(int n) {
    ExtendedQuiver q(n, 0);
    for (int i = 0; i + 1 < n; ++i) q.arrow(i, i + 1);
    return q;
}
}  // namespace quivers

}  // namespace csa
