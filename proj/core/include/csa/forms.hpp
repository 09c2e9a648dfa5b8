#pragma once

#include <map>
#include <string>
#include <vector>

#include "csa/quiver.hpp"
#include "csa/superring.hpp"

namespace csa {

// Wedge word dx_{i1}..dx_{ip} dxi_{a1}..dxi_{aq}: dx indices strictly increasing,
// dxi indices non-decreasing (dxi has total parity 0, so repeats survive).
struct Word {
    std::vector<int> dx;
    std::vector<int> dxi;

    int degree() const { return static_cast<int>(dx.size() + dxi.size()); }
    auto operator<=>(const Word&) const = default;
};

// Sum of c_w * w with coefficients written on the left.
class Form {
public:
    using TermMap = std::map<Word, SRational>;

    Form() = default;
    Form(int n, int m) : n_(n), m_(m) {}

    static Form scalar(const SRational& c);
    static Form basis(int n, int m, Var v);

    int n() const { return n_; }
    int m() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const;

    void add_term(const Word& w, const SRational& c);
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const SRational& c, const Form& f);
    Form operator-() const;

    // Coefficientwise comparison by cross-multiplication.
    bool operator==(const Form& o) const;

private:
    int n_ = 0;
    int m_ = 0;
    TermMap terms_;
};

Form wedge(const Form& a, const Form& b);
Form d(const SRational& f);
Form d(const Poly& p);
Form d(const Form& f);

Form omega_of(const ExtendedQuiver& q);
// The same sum without the Condition C precondition.
Form raw_omega(const ExtendedQuiver& q);

Form pullback(const Form& w, const Assignment& assignment);

// x_k -> (out + odd_term * in) / x_k', written back in the slot of x_k.
Assignment exchange_assignment(const ExtendedQuiver& q, int k);
// pullback(omega(q)) - omega(mu_k q); zero exactly when the form is invariant.
Form invariance_defect(const ExtendedQuiver& q, int k);
bool check_invariance(const ExtendedQuiver& q, int k);

std::string render(const Form& f);

}  // namespace csa
