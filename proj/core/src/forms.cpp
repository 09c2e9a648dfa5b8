#include "csa/forms.hpp"

#include <algorithm>

namespace csa {

namespace {

// Splits a fraction into its Grassmann-even and odd parts (the denominator is even).
std::pair<SRational, SRational> split_parity(const SRational& c) {
    return {SRational(c.num().grassmann_part(0), c.den()), SRational(c.num().grassmann_part(1), c.den())};
}

// w1 w2 in canonical order; returns the sign, 0 if a dx repeats.
int merge_words(const Word& a, const Word& b, Word& out) {
    out.dx.clear();
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.dx.size() || j < b.dx.size()) {
        if (j == b.dx.size() || (i < a.dx.size() && a.dx[i] < b.dx[j])) {
            out.dx.push_back(a.dx[i++]);
        } else if (i == a.dx.size() || b.dx[j] < a.dx[i]) {
            inversions += static_cast<long>(a.dx.size() - i);
            out.dx.push_back(b.dx[j++]);
        } else {
            return 0;
        }
    }
    out.dxi.clear();
    std::merge(a.dxi.begin(), a.dxi.end(), b.dxi.begin(), b.dxi.end(), std::back_inserter(out.dxi));
    return inversions % 2 ? -1 : 1;
}

SRational one(int n, int m) { return SRational(Poly::constant(n, m, 1)); }

}  // namespace

Form Form::scalar(const SRational& c) {
    Form f(c.n(), c.m());
    f.add_term(Word{}, c);
    return f;
}

Form Form::basis(int n, int m, Var v) {
    Form f(n, m);
    Word w;
    (v.odd ? w.dxi : w.dx).push_back(v.index);
    f.add_term(w, one(n, m));
    return f;
}

bool Form::is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_zero(); });
}

void Form::add_term(const Word& w, const SRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& o) {
    if (n_ != o.n_ || m_ != o.m_) throw Error(ErrorCode::ArityMismatch, "form arity mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form Form::operator-() const {
    Form f = *this;
    for (auto& [w, c] : f.terms_) c = -c;
    return f;
}

Form operator*(const SRational& c, const Form& f) {
    Form out(f.n(), f.m());
    for (const auto& [w, cw] : f.terms()) out.add_term(w, c * cw);
    return out;
}

bool Form::operator==(const Form& o) const {
    if (n_ != o.n_ || m_ != o.m_) return false;
    for (const auto& [w, c] : terms_) {
        auto it = o.terms_.find(w);
        if (it == o.terms_.end()) {
            if (!c.is_zero()) return false;
        } else if (!(c == it->second)) {
            return false;
        }
    }
    for (const auto& [w, c] : o.terms_)
        if (!terms_.count(w) && !c.is_zero()) return false;
    return true;
}

Form wedge(const Form& a, const Form& b) {
    if (a.n() != b.n() || a.m() != b.m()) throw Error(ErrorCode::ArityMismatch, "form arity mismatch");
    Form out(a.n(), a.m());
    Word w;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            int sign = merge_words(wa, wb, w);
            if (sign == 0) continue;
            // moving cb to the left across wa costs (-1)^{#dx(wa) * |cb|}
            if (wa.dx.size() % 2 == 1) {
                auto [even, odd] = split_parity(cb);
                SRational moved = even - odd;
                out.add_term(w, sign > 0 ? ca * moved : -(ca * moved));
            } else {
                out.add_term(w, sign > 0 ? ca * cb : -(ca * cb));
            }
        }
    }
    return out;
}

Form d(const Poly& p) {
    Form out(p.n(), p.m());
    for (int i = 0; i < p.n(); ++i) {
        Poly dp = derivative(p, Var::even(i));
        if (dp.is_zero()) continue;
        // d p = sum dv * (dp/dv); putting the coefficient on the left flips odd parts past dx
        Poly coef = dp.grassmann_part(0) - dp.grassmann_part(1);
        out.add_term(Word{{i}, {}}, SRational(coef));
    }
    for (int a = 0; a < p.m(); ++a) {
        Poly dp = derivative(p, Var::odd_var(a));
        if (!dp.is_zero()) out.add_term(Word{{}, {a}}, SRational(dp));
    }
    return out;
}

Form d(const SRational& f) {
    // d(p/q) = dp/q - (-1)^{|p|} p dq / q^2
    auto [even, odd] = split_parity(f);
    const Poly& q = f.den();
    SRational inv_q(Poly::constant(q.n(), q.m(), 1), q);
    Form out = inv_q * d(f.num());
    Form dq = d(q);
    SRational inv_q2(Poly::constant(q.n(), q.m(), 1), q * q);
    SRational signed_num = SRational(even.num()) - SRational(odd.num());
    out -= (signed_num * inv_q2) * dq;
    return out;
}

Form d(const Form& f) {
    Form out(f.n(), f.m());
    for (const auto& [w, c] : f.terms()) {
        Form basis_word(f.n(), f.m());
        basis_word.add_term(w, one(f.n(), f.m()));
        out += wedge(d(c), basis_word);
    }
    return out;
}

namespace {

Form build_omega(const ExtendedQuiver& q) {
    const int n = q.n, m = q.m;
    Form w(n, m);
    auto x = [&](int i) { return Poly::variable(n, m, Var::even(i)); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.B[i][j] > 0)
                w += SRational(Poly::constant(n, m, q.B[i][j]), x(i) * x(j)) *
                     wedge(Form::basis(n, m, Var::even(i)), Form::basis(n, m, Var::even(j)));
    for (int k = 0; k < n; ++k) {
        Form dxk_over_xk = SRational(Poly::constant(n, m, 1), x(k)) * Form::basis(n, m, Var::even(k));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (q.N[k][i][j] > 0) {
                    Poly xixj = Poly::variable(n, m, Var::odd_var(i)) * Poly::variable(n, m, Var::odd_var(j));
                    w += SRational(Poly::constant(n, m, q.N[k][i][j])) * wedge(d(xixj), dxk_over_xk);
                }
    }
    return w;
}

}  // namespace

Form omega_of(const ExtendedQuiver& q) {
    auto v = validate(q);
    if (!v.empty()) throw Error(ErrorCode::ConditionCViolated, "omega needs a valid quiver: " + v.front().detail);
    return build_omega(q);
}

Form raw_omega(const ExtendedQuiver& q) { return build_omega(q); }

Form pullback(const Form& w, const Assignment& assignment) {
    const int n = w.n(), m = w.m();
    std::map<Var, Form> images;
    for (const auto& [v, img] : assignment) images.emplace(v, d(img));
    auto one_form = [&](Var v) {
        auto it = images.find(v);
        return it == images.end() ? Form::basis(n, m, v) : it->second;
    };
    Form out(n, m);
    for (const auto& [word, c] : w.terms()) {
        Form acc = Form::scalar(substitute(c, assignment));
        for (int i : word.dx) acc = wedge(acc, one_form(Var::even(i)));
        for (int a : word.dxi) acc = wedge(acc, one_form(Var::odd_var(a)));
        out += acc;
    }
    return out;
}

Assignment exchange_assignment(const ExtendedQuiver& q, int k) {
    std::vector<Poly> vars;
    for (int i = 0; i < q.n; ++i) vars.push_back(Poly::variable(q.n, q.m, Var::even(i)));
    // the raw odd term keeps the defect computable on forbidden configurations
    Poly out = Poly::constant(q.n, q.m, 1), in = Poly::constant(q.n, q.m, 1);
    for (int j = 0; j < q.n; ++j) {
        if (q.B[k][j] > 0) out = out * pow(vars[j], q.B[k][j]);
        if (q.B[j][k] > 0) in = in * pow(vars[j], q.B[j][k]);
    }
    Poly numer = out + raw_odd_term(q, k, q.n) * in;
    return {{Var::even(k), SRational(numer, vars[k])}};
}

Form invariance_defect(const ExtendedQuiver& q, int k) {
    Form before = pullback(raw_omega(q), exchange_assignment(q, k));
    return before - raw_omega(mutate_quiver(q, k));
}

bool check_invariance(const ExtendedQuiver& q, int k) {
    if (!validate(q).empty() || !is_allowed(q, k))
        throw Error(ErrorCode::MutationForbidden, "invariance is only claimed for allowed mutations");
    return invariance_defect(q, k).is_zero();
}

std::string render(const Form& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string word;
        for (int i : w.dx) word += (word.empty() ? "" : "^") + std::string("d") + var_name(f.n(), Var::even(i));
        for (int a : w.dxi) word += (word.empty() ? "" : "^") + std::string("d") + var_name(f.n(), Var::odd_var(a));
        std::string coef = render(c);
        if (word.empty()) out += coef;
        else if (coef == "1") out += word;
        else out += "(" + coef + ")*" + word;
    }
    return out;
}

}  // namespace csa
