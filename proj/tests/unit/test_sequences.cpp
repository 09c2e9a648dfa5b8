#include <doctest.h>

#include "csa/error.hpp"
#include "csa/sequences.hpp"

using namespace csa;

namespace {

// Fast doubling, kept separate from csa::fibonacci so the two can be compared.
std::pair<mpz_class, mpz_class> fib_pair(unsigned n) {
    if (n == 0) return {0, 1};
    auto [a, b] = fib_pair(n / 2);
    mpz_class c = a * (2 * b - a);
    mpz_class d = a * a + b * b;
    if (n % 2 == 0) return {c, d};
    return {d, c + d};
}
mpz_class F(int n) { return fib_pair(static_cast<unsigned>(n)).first; }

template <class T>
std::vector<Rational> parts_a(const std::vector<Dual<T>>& v) {
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(x.a);
    return out;
}

std::vector<Rational> parts_b(const std::vector<DualNumber>& v) {
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(x.b);
    return out;
}

std::vector<Rational> Q(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("extended Somos-4") {
    auto s = somos4_ext(15);
    CHECK(parts_a(s) == Q({1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313, 620297, 7869898}));
    CHECK(parts_b(s) == Q({0, 0, 0, 0, 1, 2, 10, 48, 160, 1273, 7346, 51394, 645078, 5477318, 87284761}));
    CHECK_THROWS_AS(somos4_ext(3), Error);
}

TEST_CASE("extended Somos-4, second quiver") {
    auto s = somos4_ext_variant(15);
    CHECK(parts_a(s) == Q({1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313, 620297, 7869898}));
    CHECK(parts_b(s) == Q({0, 0, 0, 0, 1, 3, 10, 59, 198, 1387, 9389, 57983, 752301, 6851887, 97297759}));
}

TEST_CASE("Somos recurrences agree with the quiver mutations") {
    auto s = somos4_ext(12);
    auto r = integrality_check(s, somos_quiver(), {0, 1, 2, 3}, 7, 4);
    CHECK(r.integer);
    CHECK(r.symbolic_agrees);
    auto v = somos4_ext_variant(12);
    auto rv = integrality_check(v, somos_variant_quiver(), {0, 1, 2, 3}, 7, 4);
    CHECK(rv.symbolic_agrees);
}

TEST_CASE("extended Fibonacci table and closed form") {
    auto s = fib_ext(21);
    auto a = parts_a(s), b = parts_b(s);
    CHECK(std::vector<Rational>(a.begin(), a.begin() + 8) == Q({1, 1, 2, 5, 13, 34, 89, 233}));
    CHECK(std::vector<Rational>(b.begin(), b.begin() + 8) == Q({0, 0, 1, 8, 21, 21, 55, 377}));
    for (int n = 0; n <= 20; ++n) {
        mpz_class want = (n % 4 == 0 || n % 4 == 3) ? F(2 * n) : F(2 * n - 2 < 0 ? 0 : 2 * n - 2);
        CHECK_MESSAGE(s[n].b == Rational(want), "n = " << n);
        CHECK(s[n].a == Rational(n == 0 ? mpz_class(1) : F(2 * n - 1)));
    }
    // eps = 0 projection is the Cassini recurrence
    for (int n = 0; n + 2 < 21; ++n) CHECK(s[n + 2].a * s[n].a == s[n + 1].a * s[n + 1].a + 1);
    auto lib = fibonacci(30);
    for (int n = 0; n < 30; ++n) CHECK(lib[n] == F(n));
}

TEST_CASE("Kronecker (k, l) family") {
    auto fam = kronecker_family(8);
    std::vector<LinearForm> want{{0, 1, 0}, {0, 4, 4}, {0, 1, 20}, {0, -22, 43}, {0, -33, 88}, {0, -22, 399}};
    for (int n = 2; n <= 7; ++n) CHECK_MESSAGE(fam[n].b == want[n - 2], "n = " << n << ": " << to_string(fam[n].b));
    CHECK(to_string(fam[5].b) == "43l-22k");
    // concrete (k, l) from the integer quiver
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
            auto concrete = kronecker_family(k, l, 8);
            for (int n = 0; n < 8; ++n) {
                CHECK(concrete[n].a == fam[n].a);
                CHECK(concrete[n].b == fam[n].b.at(k, l));
            }
        }
    // classical part is the odd-indexed Fibonacci numbers
    for (int n = 1; n < 8; ++n) CHECK(fam[n].a == Rational(F(2 * n - 1)));
    CHECK(quiver_orbit_period(kronecker_quiver(1, 1), {0, 1}, 16) == 4);
}

TEST_CASE("integrality reports the first failure") {
    std::vector<DualNumber> seq{{1, 0}, {2, 0}, {Rational(1, 2), 0}};
    auto r = integrality_check(seq);
    CHECK_FALSE(r.integer);
    CHECK(r.first_violation == 2);
}

TEST_CASE("dual numbers") {
    DualNumber x{2, 3}, y{4, 1};
    DualNumber q = x / y;
    CHECK(q * y == x);
    DualNumber nil{0, 1};
    CHECK_THROWS_AS(x / nil, Error);
}
