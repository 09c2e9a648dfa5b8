#include "csa/sequences.hpp"

namespace csa {

bool LinearForm::is_integral() const { return is_integer(c) && is_integer(k) && is_integer(l); }

std::string to_string(const LinearForm& f) {
    std::string out;
    auto piece = [&](const Rational& c, const std::string& sym) {
        if (c == 0) return;
        std::string mag = abs(c) == 1 && !sym.empty() ? "" : Rational(abs(c)).get_str();
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        out += mag + sym;
    };
    piece(f.l, "l");
    piece(f.k, "k");
    piece(f.c, "");
    return out.empty() ? "0" : out;
}

namespace {

void require_integral(const DualNumber& x, int index) {
    if (!is_integer(x.a) || !is_integer(x.b))
        throw Error(ErrorCode::IntegralityViolation,
                    "term " + std::to_string(index) + " is not integral: " + x.a.get_str() + " + " +
                        x.b.get_str() + " eps");
}

const DualNumber kOne{1, 0};
const DualNumber kEps{0, 1};

}  // namespace

std::vector<DualNumber> somos4_ext(int count) {
    if (count < 4) throw Error(ErrorCode::InvalidInput, "count must be at least 4");
    std::vector<DualNumber> A(4, kOne);
    for (int n = 0; static_cast<int>(A.size()) < count; ++n) {
        DualNumber next = (A[n + 1] * A[n + 3] + A[n + 2] * A[n + 2] * (kOne + kEps)) / A[n];
        require_integral(next, n + 5);
        A.push_back(next);
    }
    return A;
}

std::vector<DualNumber> somos4_ext_variant(int count) {
    if (count < 4) throw Error(ErrorCode::InvalidInput, "count must be at least 4");
    std::vector<DualNumber> A(4, kOne);
    for (int n = 0; static_cast<int>(A.size()) < count; ++n) {
        DualNumber next = (A[n + 2] * A[n + 2] + A[n + 1] * A[n + 3] * (kOne + kEps)) / A[n];
        require_integral(next, n + 5);
        A.push_back(next);
    }
    return A;
}

std::vector<DualNumber> fib_ext(int count) {
    if (count < 2) throw Error(ErrorCode::InvalidInput, "count must be at least 2");
    std::vector<DualNumber> A(2, kOne);
    for (int n = 0; static_cast<int>(A.size()) < count; ++n) {
        // the sign pattern +,+,-,- is the one the tabulated values (and the Kronecker quiver) obey
        DualNumber sign_eps{0, (n / 2) % 2 == 0 ? 1 : -1};
        DualNumber next = (A[n + 1] * A[n + 1] * (kOne + sign_eps) + kOne) / A[n];
        require_integral(next, n + 2);
        A.push_back(next);
    }
    auto F = fibonacci(2 * count + 1);
    for (int n = 0; n < count; ++n) {
        mpz_class expected = n == 0 ? mpz_class(1) : F[2 * n - 1];
        if (A[n].a != expected)
            throw Error(ErrorCode::IntegralityViolation, "a_" + std::to_string(n) + " is not F_{2n-1}");
    }
    return A;
}

DualNumber to_dual(const Poly& p) {
    if (p.m() != 2) throw Error(ErrorCode::InvalidInput, "dual reading needs two odd generators");
    if (p.n() != 0) throw Error(ErrorCode::InvalidInput, "dual reading needs an evaluated element");
    DualNumber d;
    for (const auto& [mono, c] : p.terms()) {
        if (mono.odd.empty()) d.a = c;
        else if (mono.odd.size() == 2) d.b = c;
        else throw Error(ErrorCode::InvalidInput, "element has an odd part");
    }
    return d;
}

ExtendedQuiver somos_quiver() {
    ExtendedQuiver q(4, 2);
    q.arrow(0, 1).arrow(0, 3).arrow(2, 0, 2).arrow(3, 1, 2).arrow(2, 3).arrow(1, 2, 3);
    q.path(0, 0, 1).path(1, 3, 0);
    return q;
}

ExtendedQuiver somos_variant_quiver() {
    ExtendedQuiver q(4, 2);
    q.arrow(1, 0).arrow(3, 0).arrow(0, 2, 2).arrow(1, 3, 2).arrow(3, 2).arrow(2, 1, 3);
    q.path(0, 0, 1).path(0, 1, 1).path(1, 2, 0).path(1, 3, 0);
    return q;
}

ExtendedQuiver kronecker_quiver(int k, int l) {
    ExtendedQuiver q(2, 2);
    q.arrow(1, 0, 2);
    if (k) q.path(0, 0, 1, k);
    if (l) q.path(0, 1, 1, l);
    return q;
}

std::vector<Dual<LinearForm>> kronecker_family(int count) {
    if (count < 2) throw Error(ErrorCode::InvalidInput, "count must be at least 2");
    std::vector<Dual<LinearForm>> init(2, Dual<LinearForm>{1, LinearForm{}});
    auto stream = run_cyclic_dual<LinearForm>(kronecker_quiver(1, 1), {0, 1}, count - 2, init,
                                              {LinearForm::symbol_k(), LinearForm::symbol_l()});
    std::vector<Dual<LinearForm>> out = init;
    out.insert(out.end(), stream.begin(), stream.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!is_integer(out[i].a) || !out[i].b.is_integral())
            throw Error(ErrorCode::IntegralityViolation, "term " + std::to_string(i) + " is not integral");
    return out;
}

std::vector<DualNumber> kronecker_family(int k, int l, int count) {
    if (count < 2) throw Error(ErrorCode::InvalidInput, "count must be at least 2");
    auto q = kronecker_quiver(k, l);
    Seed s = evaluated_seed(q, {1, 1});
    std::vector<DualNumber> out{kOne, kOne};
    for (const auto& label : run_cyclic(s, {0, 1}, count - 2)) {
        out.push_back(to_dual(label));
        require_integral(out.back(), static_cast<int>(out.size()) - 1);
    }
    return out;
}

IntegralityReport integrality_check(const std::vector<DualNumber>& seq) {
    IntegralityReport r;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!is_integer(seq[i].a) || !is_integer(seq[i].b)) {
            r.integer = false;
            r.first_violation = static_cast<int>(i);
            break;
        }
    return r;
}

IntegralityReport integrality_check(const std::vector<DualNumber>& seq, const ExtendedQuiver& q,
                                    const std::vector<int>& order, int symbolic_steps, int offset) {
    IntegralityReport r = integrality_check(seq);
    r.symbolic_checked = true;
    r.symbolic_steps = symbolic_steps;
    auto stream = run_cyclic(initial_seed(q), order, symbolic_steps);
    std::vector<Rational> ones(q.n, 1);
    for (int t = 0; t < symbolic_steps; ++t) {
        std::size_t i = static_cast<std::size_t>(offset + t);
        if (i >= seq.size() || !(to_dual(evaluate(stream[t], ones)) == seq[i])) {
            r.symbolic_agrees = false;
            break;
        }
    }
    return r;
}

std::vector<mpz_class> fibonacci(int count) {
    std::vector<mpz_class> F;
    mpz_class a = 0, b = 1;
    for (int i = 0; i < count; ++i) {
        F.push_back(a);
        mpz_class t = a + b;
        a = b;
        b = t;
    }
    return F;
}

}  // namespace csa
