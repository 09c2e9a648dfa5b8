#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csa/superring.hpp"

namespace csa {

using IntMatrix = std::vector<std::vector<int>>;

// B[i][j] > 0: B[i][j] arrows x_i -> x_j.
// N[k][i][j] > 0: N[k][i][j] net 2-paths xi_i -> x_k -> xi_j.
struct ExtendedQuiver {
    int n = 0;
    int m = 0;
    IntMatrix B;
    std::vector<IntMatrix> N;
    std::vector<bool> frozen;

    ExtendedQuiver() = default;
    ExtendedQuiver(int n_, int m_);

    // Convenience builders (0-based).
    ExtendedQuiver& arrow(int i, int j, int mult = 1);
    ExtendedQuiver& path(int i, int k, int j, int mult = 1);
    ExtendedQuiver& freeze(int k);

    bool operator==(const ExtendedQuiver&) const = default;
};

struct Violation {
    int vertex = -1;  // -1 for structural problems not tied to a vertex
    std::string clause;
    std::string detail;
};

// Positive part of N_k as t * 1_{I x J}; t = 0 when N_k vanishes.
struct Rectangle {
    int t = 0;
    std::vector<int> I;
    std::vector<int> J;
};

std::vector<Violation> validate(const ExtendedQuiver& q);
std::optional<Rectangle> decompose(const IntMatrix& Nk);
Rectangle rectangle_at(const ExtendedQuiver& q, int k);  // throws ConditionCViolated

ExtendedQuiver mutate_quiver(const ExtendedQuiver& q, int k);
bool is_allowed(const ExtendedQuiver& q, int k);
bool lemma_check(const ExtendedQuiver& q, int k);

// 1 + sum_{N_k[i][j] > 0} N_k[i][j] xi_i xi_j, with even arity n_target.
Poly odd_term(const ExtendedQuiver& q, int k);
Poly odd_term(const ExtendedQuiver& q, int k, int n_target);
// Same sum without the Condition C requirement.
Poly raw_odd_term(const ExtendedQuiver& q, int k, int n_target);

// Labels may be polynomials in the initial variables or constants (n = 0)
// in the Grassmann algebra, which evaluates the seed numerically.
struct Seed {
    ExtendedQuiver quiver;
    std::vector<Poly> labels;
    std::vector<int> history;

    bool operator==(const Seed& o) const { return quiver == o.quiver && labels == o.labels; }
};

Seed initial_seed(const ExtendedQuiver& q);
Seed evaluated_seed(const ExtendedQuiver& q, const std::vector<Rational>& values);

// Right-hand side of the exchange relation at k, from the current labels.
Poly exchange_numerator(const ExtendedQuiver& q, const std::vector<Poly>& labels, int k);
Seed mutate_seed(const Seed& s, int k);
Seed mutate_sequence(Seed s, const std::vector<int>& ks);

struct RationalSeed {
    ExtendedQuiver quiver;
    std::vector<SRational> labels;
    std::vector<int> history;
};

RationalSeed initial_rational_seed(const ExtendedQuiver& q);
RationalSeed mutate_seed_rational(const RationalSeed& s, int k);

struct ExchangeGraph {
    struct Edge {
        int from, to, vertex;
    };
    struct Diagnostic {
        int node, vertex;
        std::string error;
    };
    std::vector<Seed> nodes;
    std::vector<int> depth;
    std::vector<Edge> edges;
    std::vector<Diagnostic> diagnostics;
    // xi = 0 projection: nodes are unordered sets of body labels
    std::vector<std::vector<Poly>> classical_nodes;
    std::vector<Edge> classical_edges;
};

ExchangeGraph explore(const Seed& s, int depth);

// Mutates cyclically along order and returns the new label produced per step.
std::vector<Poly> run_cyclic(const Seed& s, const std::vector<int>& order, int steps);

// Smallest t (a multiple of the order length) returning the quiver to itself, 0 if none.
int quiver_orbit_period(const ExtendedQuiver& q, const std::vector<int>& order, int max_steps);

std::string to_dot(const ExtendedQuiver& q);

// Standard quivers from the examples.
namespace quivers {
ExtendedQuiver path_a(int n);  // x1 -> x2 -> ... -> xn
}  // namespace quivers

}  // namespace csa
