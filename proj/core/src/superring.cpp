#include "csa/superring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace csa {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw Error(ErrorCode::ParseError, "invalid rational '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

int Monomial::even_degree() const { return std::accumulate(even.begin(), even.end(), 0); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.odd.size() != b.odd.size()) return a.odd.size() < b.odd.size();
    int da = a.even_degree(), db = b.even_degree();
    if (da != db) return da < db;
    if (a.even != b.even) return a.even > b.even;
    return a.odd < b.odd;
}

int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out) {
    out.even.resize(a.even.size());
    for (std::size_t i = 0; i < a.even.size(); ++i) out.even[i] = a.even[i] + b.even[i];
    out.odd.clear();
    out.odd.reserve(a.odd.size() + b.odd.size());
    // merge, counting how many b-indices jump over a-indices
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.odd.size() || j < b.odd.size()) {
        if (j == b.odd.size() || (i < a.odd.size() && a.odd[i] < b.odd[j])) {
            out.odd.push_back(a.odd[i++]);
        } else if (i == a.odd.size() || b.odd[j] < a.odd[i]) {
            inversions += static_cast<long>(a.odd.size() - i);
            out.odd.push_back(b.odd[j++]);
        } else {
            return 0;
        }
    }
    return inversions % 2 ? -1 : 1;
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(int n, int m, const Rational& c) {
    Poly p(n, m);
    Rational cc = c;
    cc.canonicalize();  // mpq_class(p, q) is not reduced on construction
    p.add_term(Monomial{std::vector<int>(n, 0), {}}, cc);
    return p;
}

Poly Poly::variable(int n, int m, Var v) {
    Monomial mono{std::vector<int>(n, 0), {}};
    if (v.odd) {
        if (v.index < 0 || v.index >= m)
            throw Error(ErrorCode::InvalidInput, "odd variable index out of range");
        mono.odd.push_back(v.index);
    } else {
        if (v.index < 0 || v.index >= n)
            throw Error(ErrorCode::InvalidInput, "even variable index out of range");
        mono.even[v.index] = 1;
    }
    return monomial(n, m, std::move(mono));
}

Poly Poly::monomial(int n, int m, Monomial mono, const Rational& c) {
    if (static_cast<int>(mono.even.size()) != n)
        throw Error(ErrorCode::ArityMismatch, "monomial has wrong number of even exponents");
    if (!std::is_sorted(mono.odd.begin(), mono.odd.end()) ||
        std::adjacent_find(mono.odd.begin(), mono.odd.end()) != mono.odd.end())
        throw Error(ErrorCode::InvalidInput, "odd factor must be strictly increasing");
    for (int a : mono.odd)
        if (a < 0 || a >= m) throw Error(ErrorCode::InvalidInput, "odd index out of range");
    Poly p(n, m);
    Rational cc = c;
    cc.canonicalize();
    p.add_term(mono, cc);
    return p;
}

void Poly::add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::body() const {
    Poly p(n_, m_);
    for (const auto& [mono, c] : terms_)
        if (mono.odd.empty()) p.terms_.emplace_hint(p.terms_.end(), mono, c);
    return p;
}

Poly Poly::soul() const {
    Poly p(n_, m_);
    for (const auto& [mono, c] : terms_)
        if (!mono.odd.empty()) p.terms_.emplace_hint(p.terms_.end(), mono, c);
    return p;
}

Poly Poly::grassmann_part(int parity) const {
    Poly p(n_, m_);
    for (const auto& [mono, c] : terms_)
        if (static_cast<int>(mono.odd.size() % 2) == parity)
            p.terms_.emplace_hint(p.terms_.end(), mono, c);
    return p;
}

bool Poly::is_even() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.odd.size() % 2 == 0; });
}

bool Poly::is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.odd.size() % 2 == 1; });
}

std::optional<int> Poly::parity() const {
    if (is_even()) return 0;
    if (is_odd()) return 1;
    return std::nullopt;
}

Rational Poly::constant_term() const {
    auto it = terms_.find(Monomial{std::vector<int>(n_, 0), {}});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.odd.empty() &&
            std::all_of(terms_.begin()->first.even.begin(), terms_.begin()->first.even.end(),
                        [](int e) { return e == 0; }));
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [mono, c] : p.terms_) c = -c;
    return p;
}

void check_arity(const Poly& a, const Poly& b) {
    if (a.n() != b.n() || a.m() != b.m())
        throw Error(ErrorCode::ArityMismatch,
                    "arity mismatch: (" + std::to_string(a.n()) + "|" + std::to_string(a.m()) +
                        ") vs (" + std::to_string(b.n()) + "|" + std::to_string(b.m()) + ")");
}

Poly& Poly::operator+=(const Poly& o) {
    check_arity(*this, o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_arity(*this, o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, t] : terms_) t *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_arity(a, b);
    Poly p(a.n(), a.m());
    Monomial mono;
    Rational c;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            int sign = multiply_monomials(ma, mb, mono);
            if (sign == 0) continue;
            c = ca * cb;
            if (sign < 0) c = -c;
            p.add_term(mono, c);
        }
    }
    return p;
}

bool Poly::operator==(const Poly& o) const {
    return n_ == o.n_ && m_ == o.m_ && terms_ == o.terms_;
}

Poly pow(const Poly& p, int e) {
    if (e < 0) return pow(invert(p), -e);
    Poly result = Poly::constant(p.n(), p.m(), 1);
    Poly base = p;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

int nilpotency_index(const Poly& p) {
    Poly power = p;
    int r = 1;
    while (!power.is_zero() && r <= p.m()) {
        power = power * p;
        ++r;
    }
    return r;
}

Poly invert(const Poly& p) {
    Poly b0 = p.body();
    if (b0.size() != 1)
        throw Error(ErrorCode::NotAUnit, b0.is_zero() ? "element has zero body"
                                                      : "body is not a single monomial");
    const auto& [mono, c] = *b0.terms().begin();
    Monomial inv{mono.even, {}};
    for (int& e : inv.even) e = -e;
    Poly lead_inv = Poly::monomial(p.n(), p.m(), inv, 1 / c);
    Poly u = lead_inv * p.soul();
    // (1 + u)^{-1} = sum (-u)^j, finite since u is nilpotent
    Poly series = Poly::constant(p.n(), p.m(), 1);
    Poly term = series;
    Poly minus_u = -u;
    for (int j = 1; j <= p.m(); ++j) {
        term = term * minus_u;
        if (term.is_zero()) break;
        series += term;
    }
    return lead_inv * series;
}

// ------------------------------------------------- exact Laurent division

namespace {

using Exps = std::vector<int>;

struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

using EvenPoly = std::map<Exps, Rational, GradedLex>;

Exps min_exponents(const EvenPoly& p, std::size_t n) {
    Exps lo(n, 0);
    bool first = true;
    for (const auto& [e, c] : p) {
        for (std::size_t i = 0; i < n; ++i) lo[i] = first ? e[i] : std::min(lo[i], e[i]);
        first = false;
    }
    return lo;
}

EvenPoly shifted(const EvenPoly& p, const Exps& by, int sign) {
    EvenPoly out;
    for (const auto& [e, c] : p) {
        Exps f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += sign * by[i];
        out.emplace(std::move(f), c);
    }
    return out;
}

// Quotient a / b in the Laurent ring, or nullopt if b does not divide a.
std::optional<EvenPoly> laurent_divide(const EvenPoly& a, const EvenPoly& b, std::size_t n) {
    if (a.empty()) return EvenPoly{};
    Exps lo_a = min_exponents(a, n), lo_b = min_exponents(b, n);
    EvenPoly rem = shifted(a, lo_a, -1);
    EvenPoly div = shifted(b, lo_b, -1);
    const auto& [lead_e, lead_c] = *div.rbegin();
    EvenPoly quot;
    Exps t(n);
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = top->first[i] - lead_e[i];
            if (t[i] < 0) return std::nullopt;
        }
        Rational c = top->second / lead_c;
        quot.emplace(t, c);
        for (const auto& [e, dc] : div) {
            Exps f = e;
            for (std::size_t i = 0; i < n; ++i) f[i] += t[i];
            auto [it, inserted] = rem.try_emplace(std::move(f), 0);
            it->second -= c * dc;
            if (it->second == 0) rem.erase(it);
        }
    }
    Exps offset(n);
    for (std::size_t i = 0; i < n; ++i) offset[i] = lo_a[i] - lo_b[i];
    return shifted(quot, offset, 1);
}

}  // namespace

std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
    check_arity(a, b);
    Poly b0 = b.body();
    if (b0.is_zero()) return std::nullopt;
    Poly nu = b.soul();
    // b * S = b0^r with S = sum_{j<r} (-nu)^j b0^{r-1-j}, r the nilpotency index of nu
    Poly numer = a;
    int r = 1;
    if (!nu.is_zero()) {
        r = nilpotency_index(nu);
        Poly s = Poly::constant(a.n(), a.m(), 0);
        Poly nu_pow = Poly::constant(a.n(), a.m(), 1);
        Poly minus_nu = -nu;
        for (int j = 0; j < r; ++j) {
            s += nu_pow * pow(b0, r - 1 - j);
            nu_pow = nu_pow * minus_nu;
        }
        numer = s * a;
    }
    EvenPoly divisor;
    for (const auto& [mono, c] : b0.terms()) divisor.emplace(mono.even, c);

    std::map<std::vector<int>, EvenPoly> components;
    for (const auto& [mono, c] : numer.terms()) components[mono.odd].emplace(mono.even, c);

    const auto n = static_cast<std::size_t>(a.n());
    Poly q(a.n(), a.m());
    for (auto& [odd, comp] : components) {
        EvenPoly cur = std::move(comp);
        for (int i = 0; i < r; ++i) {
            auto next = laurent_divide(cur, divisor, n);
            if (!next) return std::nullopt;
            cur = std::move(*next);
        }
        for (auto& [e, c] : cur) q.add_term(Monomial{e, odd}, c);
    }
    return q;
}

Poly exact_div(const Poly& a, const Poly& b) {
    if (b.body().is_zero()) throw Error(ErrorCode::NotDivisible, "divisor has zero body");
    auto q = try_exact_div(a, b);
    if (!q)
        throw Error(ErrorCode::NotDivisible,
                    "'" + render(a) + "' is not divisible by '" + render(b) + "'");
    return *q;
}

Poly derivative(const Poly& p, Var v) {
    Poly out(p.n(), p.m());
    for (const auto& [mono, c] : p.terms()) {
        if (!v.odd) {
            int e = mono.even.at(v.index);
            if (e == 0) continue;
            Monomial d = mono;
            d.even[v.index] -= 1;
            out.add_term(d, c * e);
        } else {
            auto it = std::find(mono.odd.begin(), mono.odd.end(), v.index);
            if (it == mono.odd.end()) continue;
            auto pos = it - mono.odd.begin();
            Monomial d = mono;
            d.odd.erase(d.odd.begin() + pos);
            out.add_term(d, pos % 2 ? Rational(-c) : c);
        }
    }
    return out;
}

Poly evaluate(const Poly& p, const std::vector<Rational>& values) {
    if (static_cast<int>(values.size()) != p.n())
        throw Error(ErrorCode::ArityMismatch, "need one value per even variable");
    Poly out(0, p.m());
    for (const auto& [mono, c] : p.terms()) {
        Rational v = c;
        for (int i = 0; i < p.n(); ++i) {
            int e = mono.even[i];
            if (e < 0 && values[i] == 0)
                throw Error(ErrorCode::NonInvertibleImage, "negative power of a variable set to 0");
            Rational base = e < 0 ? Rational(1 / values[i]) : values[i];
            for (int j = 0; j < std::abs(e); ++j) v *= base;
        }
        out.add_term(Monomial{{}, mono.odd}, v);
    }
    return out;
}

// ---------------------------------------------------------------- SRational

SRational::SRational(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.n(), num_.m(), 1)) {}

SRational::SRational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    check_arity(num_, den_);
    if (!den_.is_even())
        throw Error(ErrorCode::ZeroBodyDenominator, "denominator must be Grassmann-even");
    if (den_.body().is_zero())
        throw Error(ErrorCode::ZeroBodyDenominator, "denominator has zero body");
}

std::optional<Poly> SRational::to_poly() const { return try_exact_div(num_, den_); }

namespace {
bool is_one(const Poly& p) { return p.size() == 1 && p.is_constant() && p.constant_term() == 1; }
}  // namespace

SRational operator+(const SRational& a, const SRational& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    if (is_one(b.den_)) return {a.num_ + b.num_ * a.den_, a.den_};
    if (is_one(a.den_)) return {a.num_ * b.den_ + b.num_, b.den_};
    // keep denominators small when one divides the other
    if (b.den_.size() >= a.den_.size())
        if (auto q = try_exact_div(b.den_, a.den_)) return {a.num_ * *q + b.num_, b.den_};
    if (a.den_.size() >= b.den_.size())
        if (auto q = try_exact_div(a.den_, b.den_)) return {a.num_ + b.num_ * *q, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

SRational operator-(const SRational& a, const SRational& b) { return a + (-b); }

SRational operator*(const SRational& a, const SRational& b) {
    if (is_one(a.den_)) return {a.num_ * b.num_, b.den_};
    if (is_one(b.den_)) return {a.num_ * b.num_, a.den_};
    return {a.num_ * b.num_, a.den_ * b.den_};
}

SRational inverse(const SRational& f) {
    if (!f.num().is_even() || f.num().body().is_zero())
        throw Error(ErrorCode::NonInvertible, "fraction with numerator '" + render(f.num()) +
                                                  "' is not invertible");
    return {f.den(), f.num()};
}

SRational operator/(const SRational& a, const SRational& b) { return a * inverse(b); }

bool SRational::operator==(const SRational& o) const {
    check_arity(num_, o.num_);
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

namespace {

struct Image {
    Poly num;
    Poly den;
};

// Caches successive powers of one polynomial.
class Powers {
public:
    explicit Powers(Poly base) : pows_{Poly::constant(base.n(), base.m(), 1), base} {}
    const Poly& get(int e) {
        while (static_cast<int>(pows_.size()) <= e) pows_.push_back(pows_.back() * pows_[1]);
        return pows_[e];
    }

private:
    std::vector<Poly> pows_;
};

}  // namespace

SRational substitute(const Poly& p, const Assignment& assignment) {
    const int n = p.n(), m = p.m();
    for (const auto& [v, img] : assignment) {
        if (img.n() != n || img.m() != m)
            throw Error(ErrorCode::ArityMismatch, "substitution image has wrong arity");
        if ((v.odd ? img.num().is_odd() : img.num().is_even()) == false && !img.is_zero())
            throw Error(ErrorCode::ParityMismatch,
                        "image of " + var_name(n, v) + " does not preserve parity");
        if (v.index < 0 || v.index >= (v.odd ? m : n))
            throw Error(ErrorCode::InvalidInput, "substituted variable out of range");
    }
    // Common denominator: prod_v N_v^{L_v} D_v^{H_v} for even images, prod_a D_a for odd ones.
    struct EvenSlot {
        int var;
        int lo = 0, hi = 0;
        Powers num, den;
    };
    std::vector<EvenSlot> evens;
    for (const auto& [v, img] : assignment) {
        if (v.odd) continue;
        int lo = 0, hi = 0;
        for (const auto& [mono, c] : p.terms()) {
            lo = std::min(lo, mono.even[v.index]);
            hi = std::max(hi, mono.even[v.index]);
        }
        if (lo < 0 && (img.num().body().is_zero()))
            throw Error(ErrorCode::NonInvertibleImage,
                        "negative power of " + var_name(n, v) + " maps to a non-unit");
        evens.push_back(EvenSlot{v.index, lo, hi, Powers(img.num()), Powers(img.den())});
    }
    Poly den = Poly::constant(n, m, 1);
    for (auto& s : evens) den = den * s.num.get(-s.lo) * s.den.get(s.hi);
    std::map<int, const SRational*> odds;
    for (const auto& [v, img] : assignment)
        if (v.odd) {
            odds[v.index] = &img;
            den = den * img.den();
        }

    Poly num(n, m);
    for (const auto& [mono, c] : p.terms()) {
        Monomial rest{mono.even, {}};
        for (auto& s : evens) rest.even[s.var] = 0;
        Poly term(n, m);
        // the odd factor goes in order, keeping untouched generators in place
        Monomial kept{std::vector<int>(n, 0), {}};
        Poly odd_part = Poly::constant(n, m, 1);
        std::vector<bool> used(m, false);
        for (int a : mono.odd) {
            auto it = odds.find(a);
            if (it == odds.end()) {
                odd_part = odd_part * Poly::variable(n, m, Var::odd_var(a));
            } else {
                odd_part = odd_part * it->second->num();
                used[a] = true;
            }
        }
        term = Poly::monomial(n, m, rest, c) * odd_part;
        for (auto& s : evens) {
            int e = mono.even[s.var];
            term = term * s.num.get(e - s.lo) * s.den.get(s.hi - e);
        }
        for (const auto& [a, img] : odds)
            if (!used[a]) term = term * img->den();
        num += term;
    }
    return {num, den};
}

SRational substitute(const SRational& f, const Assignment& assignment) {
    SRational num = substitute(f.num(), assignment);
    SRational den = substitute(f.den(), assignment);
    if (den.num().body().is_zero())
        throw Error(ErrorCode::NonInvertibleImage, "denominator maps to an element with zero body");
    return num / den;
}

// ---------------------------------------------------------------- text

std::string var_name(int n, Var v) {
    if (v.odd) return "X" + std::to_string(v.index + 1);
    if (n == 1) return "x";
    return "x" + std::to_string(v.index + 1);
}

namespace {

std::string power_str(const std::string& name, int e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

// Renders |c| * mono; the sign is handled by the caller.
std::string term_str(int n, const Monomial& mono, const Rational& c) {
    std::vector<std::string> up, down;
    for (int i = 0; i < n; ++i) {
        if (mono.even[i] > 0) up.push_back(power_str(var_name(n, Var::even(i)), mono.even[i]));
        if (mono.even[i] < 0) down.push_back(power_str(var_name(n, Var::even(i)), -mono.even[i]));
    }
    for (int a : mono.odd) up.push_back(var_name(n, Var::odd_var(a)));
    mpz_class p = abs(c.get_num()), q = c.get_den();
    std::string numer;
    if (up.empty()) {
        numer = p.get_str();
    } else {
        if (p != 1) numer = p.get_str() + "*";
        for (std::size_t i = 0; i < up.size(); ++i) numer += (i ? "*" : "") + up[i];
    }
    if (q != 1) down.insert(down.begin(), q.get_str());
    if (down.empty()) return numer;
    std::string denom;
    for (std::size_t i = 0; i < down.size(); ++i) denom += (i ? "*" : "") + down[i];
    if (down.size() > 1) denom = "(" + denom + ")";
    return numer + "/" + denom;
}

}  // namespace

std::string render(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        if (c < 0) out += "-";
        else if (!first) out += "+";
        out += term_str(p.n(), mono, c);
        first = false;
    }
    return out;
}

std::string render_fraction(const Poly& p) {
    if (p.is_zero()) return "0";
    const int n = p.n();
    std::vector<int> lo(n, 0);
    for (const auto& [mono, c] : p.terms())
        for (int i = 0; i < n; ++i) lo[i] = std::min(lo[i], mono.even[i]);
    if (std::all_of(lo.begin(), lo.end(), [](int e) { return e == 0; })) return render(p);
    Poly numer(n, p.m());
    for (const auto& [mono, c] : p.terms()) {
        Monomial shifted_mono = mono;
        for (int i = 0; i < n; ++i) shifted_mono.even[i] -= lo[i];
        numer.add_term(shifted_mono, c);
    }
    std::string top = render(numer);
    if (numer.size() > 1) top = "(" + top + ")";
    std::vector<std::string> down;
    for (int i = 0; i < n; ++i)
        if (lo[i] < 0) down.push_back(power_str(var_name(n, Var::even(i)), -lo[i]));
    std::string denom;
    for (std::size_t i = 0; i < down.size(); ++i) denom += (i ? "*" : "") + down[i];
    if (down.size() > 1) denom = "(" + denom + ")";
    return top + "/" + denom;
}

std::string render(const SRational& f) {
    auto q = f.to_poly();
    if (q) return render_fraction(*q);
    return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

namespace {

class Parser {
public:
    Parser(const std::string& text, int n, int m) : s_(text), n_(n), m_(m) {}

    Poly parse() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError, "parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc(n_, m_);
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Poly t = term();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Poly d = factor();
                auto q = d.body().is_zero() ? std::nullopt : try_exact_div(acc, d);
                if (!q) {
                    pos_ = at;
                    fail("division is not exact in the Laurent ring");
                }
                acc = std::move(*q);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        if (accept('^')) {
            bool paren = accept('(');
            bool neg = false;
            if (accept('-')) neg = true;
            else accept('+');
            skip();
            long e = digits();
            if (paren && !accept(')')) fail("expected ')'");
            if (neg) {
                std::size_t at = pos_;
                try {
                    return pow(invert(base), static_cast<int>(e));
                } catch (const Error&) {
                    pos_ = at;
                    fail("negative power of a non-unit");
                }
            }
            return pow(base, static_cast<int>(e));
        }
        return base;
    }

    long digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("integer too large for an exponent or index");
        return std::stol(s_.substr(start, pos_ - start));
    }

    Poly primary() {
        skip();
        if (pos_ == s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly::constant(n_, m_, Rational(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (c == 'x' || c == 'X') {
            std::size_t at = pos_;
            ++pos_;
            bool odd = c == 'X';
            int idx;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                idx = static_cast<int>(digits()) - 1;
            } else if (!odd && n_ == 1) {
                idx = 0;
            } else {
                pos_ = at;
                fail("variable needs an index");
            }
            if (idx < 0 || idx >= (odd ? m_ : n_)) {
                pos_ = at;
                fail("variable index out of range");
            }
            return Poly::variable(n_, m_, odd ? Var::odd_var(idx) : Var::even(idx));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int n_, m_;
};

}  // namespace

Poly parse_poly(const std::string& text, int n, int m) { return Parser(text, n, m).parse(); }

}  // namespace csa
