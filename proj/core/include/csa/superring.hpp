#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csa/error.hpp"

namespace csa {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// A variable of the ambient ring: x_i (even) or xi_a (odd), 0-based index.
struct Var {
    bool odd = false;
    int index = 0;

    static Var even(int i) { return {false, i}; }
    static Var odd_var(int a) { return {true, a}; }
    auto operator<=>(const Var&) const = default;
};

struct Monomial {
    std::vector<int> even;  // exponents, may be negative
    std::vector<int> odd;   // strictly increasing 0-based indices

    int even_degree() const;
    bool operator==(const Monomial&) const = default;
};

// Terms are stored with the Grassmann-even body first, then by degree.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Product of two monomials; returns the Koszul sign (0 if an odd index repeats).
int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out);

class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Poly() = default;
    Poly(int n, int m) : n_(n), m_(m) {}

    static Poly constant(int n, int m, const Rational& c);
    static Poly variable(int n, int m, Var v);
    static Poly monomial(int n, int m, Monomial mono, const Rational& c = 1);

    int n() const { return n_; }
    int m() const { return m_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * mono, dropping the term if it cancels.
    void add_term(const Monomial& mono, const Rational& c);

    Poly body() const;
    Poly soul() const;
    // Terms whose odd factor has the given length parity (0 even, 1 odd).
    Poly grassmann_part(int parity) const;
    bool is_even() const;  // every term has even Grassmann degree
    bool is_odd() const;   // every term has odd Grassmann degree
    // 0 or 1 for homogeneous elements, nullopt if mixed; zero counts as even.
    std::optional<int> parity() const;

    Rational constant_term() const;
    bool is_constant() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    bool operator==(const Poly& o) const;

    // Drops every term that contains an odd generator (xi = 0 projection).
    Poly project_body() const { return body(); }

private:
    int n_ = 0;
    int m_ = 0;
    TermMap terms_;
};

void check_arity(const Poly& a, const Poly& b);

Poly pow(const Poly& p, int e);
Poly invert(const Poly& p);
Poly exact_div(const Poly& a, const Poly& b);
std::optional<Poly> try_exact_div(const Poly& a, const Poly& b);
Poly derivative(const Poly& p, Var v);
// Sets every even variable to a number; the result lives in the Grassmann algebra (n = 0).
Poly evaluate(const Poly& p, const std::vector<Rational>& values);

// Smallest r with p^r = 0 for a nilpotent p; returns m + 1 as an upper bound.
int nilpotency_index(const Poly& p);

// Fraction p/q with q Grassmann-even and of nonzero body. No reduced form:
// comparisons go through cross-multiplication.
class SRational {
public:
    SRational() = default;
    SRational(Poly num);
    SRational(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int n() const { return num_.n(); }
    int m() const { return num_.m(); }

    bool is_zero() const { return num_.is_zero(); }
    std::optional<int> parity() const { return num_.parity(); }
    // Exact division of num by den, if it is a Laurent polynomial.
    std::optional<Poly> to_poly() const;

    SRational operator-() const { return {-num_, den_}; }
    friend SRational operator+(const SRational& a, const SRational& b);
    friend SRational operator-(const SRational& a, const SRational& b);
    friend SRational operator*(const SRational& a, const SRational& b);
    friend SRational operator/(const SRational& a, const SRational& b);
    bool operator==(const SRational& o) const;

private:
    Poly num_;
    Poly den_;
};

SRational inverse(const SRational& f);

using Assignment = std::map<Var, SRational>;
SRational substitute(const Poly& p, const Assignment& assignment);
SRational substitute(const SRational& f, const Assignment& assignment);

// Text form. Even variables are x1..xn (plain x when n = 1), odd ones X1..Xm.
std::string var_name(int n, Var v);
std::string render(const Poly& p);
// Single fraction over the monomial common denominator, e.g. (2+X1*X2)/x.
std::string render_fraction(const Poly& p);
std::string render(const SRational& f);
Poly parse_poly(const std::string& text, int n, int m);

}  // namespace csa
