#pragma once

#include <string>
#include <vector>

#include "csa/quiver.hpp"
#include "csa/superring.hpp"

namespace csa {

// c + ck*k + cl*l in two formal parameters.
struct LinearForm {
    Rational c = 0, k = 0, l = 0;

    static LinearForm symbol_k() { return {0, 1, 0}; }
    static LinearForm symbol_l() { return {0, 0, 1}; }
    LinearForm() = default;
    LinearForm(Rational c_) : c(std::move(c_)) {}
    LinearForm(Rational c_, Rational k_, Rational l_) : c(std::move(c_)), k(std::move(k_)), l(std::move(l_)) {}

    friend LinearForm operator+(const LinearForm& a, const LinearForm& b) { return {a.c + b.c, a.k + b.k, a.l + b.l}; }
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) { return {a.c - b.c, a.k - b.k, a.l - b.l}; }
    friend LinearForm operator*(const Rational& s, const LinearForm& a) { return {s * a.c, s * a.k, s * a.l}; }
    LinearForm operator-() const { return {-c, -k, -l}; }
    bool operator==(const LinearForm& o) const { return c == o.c && k == o.k && l == o.l; }
    Rational at(const Rational& kv, const Rational& lv) const { return c + k * kv + l * lv; }
    bool is_integral() const;
};

std::string to_string(const LinearForm& f);

// a + b*eps with eps^2 = 0; the eps-part may carry symbolic parameters.
template <class T>
struct Dual {
    Rational a = 0;
    T b{};

    friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
    friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + y.a * x.b}; }
    friend Dual operator/(const Dual& x, const Dual& y) {
        if (y.a == 0) throw Error(ErrorCode::NonInvertible, "dual number with zero body");
        Rational inv = 1 / y.a;
        // (a + b eps) / (c + d eps) = a/c + (b c - a d)/c^2 eps
        return {x.a * inv, Rational(inv * inv) * (y.a * x.b - x.a * y.b)};
    }
    bool operator==(const Dual& o) const { return a == o.a && b == o.b; }
};

using DualNumber = Dual<Rational>;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::vector<DualNumber> somos4_ext(int count);
std::vector<DualNumber> somos4_ext_variant(int count);
std::vector<DualNumber> fib_ext(int count);

// Reads a + b*eps off an element of the Grassmann algebra on two generators.
DualNumber to_dual(const Poly& p);

ExtendedQuiver somos_quiver();
ExtendedQuiver somos_variant_quiver();
// Two arrows x1 -> x0; k 2-paths through x0, l through x1.
ExtendedQuiver kronecker_quiver(int k, int l);

// Cyclic mutation run for quivers on two odd vertices, in dual numbers with
// eps = xi1 xi2. weights[v] is the xi1 xi2 coefficient of the odd term at v; it
// mutates by the same rules (1*), (2*) as the 2-path counts.
template <class T>
std::vector<Dual<T>> run_cyclic_dual(const ExtendedQuiver& q, const std::vector<int>& order, int steps,
                                     std::vector<Dual<T>> values, std::vector<T> weights) {
    if (q.m != 2) throw Error(ErrorCode::InvalidInput, "dual evaluation needs exactly two odd vertices");
    if (order.empty()) throw Error(ErrorCode::InvalidInput, "empty mutation order");
    std::vector<Dual<T>> stream;
    ExtendedQuiver cur = q;
    const Dual<T> one{1, T{}};
    for (int t = 0; t < steps; ++t) {
        int k = order[t % order.size()];
        if (!is_allowed(cur, k))
            throw Error(ErrorCode::MutationForbidden, "cyclic run hits a forbidden mutation");
        Dual<T> out = one, in = one;
        for (int j = 0; j < cur.n; ++j) {
            for (int e = 0; e < cur.B[k][j]; ++e) out = out * values[j];
            for (int e = 0; e < cur.B[j][k]; ++e) in = in * values[j];
        }
        Dual<T> odd{1, weights[k]};
        values[k] = (out + odd * in) / values[k];
        std::vector<T> next = weights;
        for (int l = 0; l < cur.n; ++l)
            if (cur.B[k][l] > 0) next[l] = next[l] + Rational(cur.B[k][l]) * weights[k];
        next[k] = -weights[k];
        weights = std::move(next);
        cur = mutate_quiver(cur, k);
        stream.push_back(values[k]);
    }
    return stream;
}

// A_0, A_1, ... for the extended Kronecker quiver with symbolic k, l.
std::vector<Dual<LinearForm>> kronecker_family(int count);
// The same sequence for concrete k, l, computed from labels of the integer quiver.
std::vector<DualNumber> kronecker_family(int k, int l, int count);

struct IntegralityReport {
    bool integer = true;
    int first_violation = -1;
    bool symbolic_checked = false;
    bool symbolic_agrees = true;
    int symbolic_steps = 0;
};

IntegralityReport integrality_check(const std::vector<DualNumber>& seq);
// Also compares seq[offset + t] with the t-th symbolic label of a cyclic run at x = 1.
IntegralityReport integrality_check(const std::vector<DualNumber>& seq, const ExtendedQuiver& q,
                                    const std::vector<int>& order, int symbolic_steps, int offset);

std::vector<mpz_class> fibonacci(int count);  // F_0 = 0, F_1 = 1, ...

}  // namespace csa
