#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "csa/superring.hpp"

namespace csa::testing {

// mpq_class(p, q) does not reduce on its own.
inline Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Poly P(const std::string& text, int n, int m) { return parse_poly(text, n, m); }

// CSA_TEST_SEED overrides the default seed of the randomized suites.
inline unsigned test_seed(unsigned fallback = 20240611u) {
    if (const char* s = std::getenv("CSA_TEST_SEED")) return static_cast<unsigned>(std::strtoul(s, nullptr, 10));
    return fallback;
}

// Random element of the Laurent ring with small terms.
inline Poly random_poly(std::mt19937& rng, int n, int m, int terms, int max_exp = 2, bool allow_negative = true) {
    std::uniform_int_distribution<int> coef(-5, 5), exp(allow_negative ? -max_exp : 0, max_exp), bit(0, 1);
    Poly p(n, m);
    for (int t = 0; t < terms; ++t) {
        Monomial mono;
        mono.even.resize(n);
        for (int& e : mono.even) e = exp(rng);
        Poly term = Poly::monomial(n, m, mono, coef(rng));
        for (int a = 0; a < m; ++a)
            if (bit(rng) && bit(rng)) term = term * Poly::variable(n, m, Var::odd_var(a));
        p += term;
    }
    return p;
}

}  // namespace csa::testing
